#include "rsktraj/tableau.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace rsktraj {

std::size_t Partition::box_count() const {
    std::size_t n = 0;
    for (auto p : parts) n += p;
    return n;
}

bool Partition::is_valid() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0) return false;
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
    }
    return true;
}

bool Partition::is_corner(std::size_t row, std::size_t col) const {
    if (row == 0 || row > parts.size()) return false;
    if (col != parts[row - 1]) return false;
    return row == parts.size() || parts[row] < col;
}

bool BumpingRoute::is_valid() const {
    if (cells.empty()) return false;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].row != i + 1) return false;
        if (i > 0 && cells[i].col > cells[i - 1].col) return false;
    }
    return true;
}

Tableau::Tableau(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
    if (!is_valid()) throw std::invalid_argument("Tableau: rows do not form a valid tableau");
}

std::size_t Tableau::box_count() const {
    std::size_t n = 0;
    for (const auto& row : rows_) n += row.size();
    return n;
}

Partition Tableau::shape() const {
    Partition s;
    s.parts.reserve(rows_.size());
    for (const auto& row : rows_) s.parts.push_back(row.size());
    return s;
}

bool Tableau::is_valid() const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) return false;
        if (r + 1 < rows_.size() && rows_[r + 1].size() > row.size()) return false;
        for (std::size_t c = 0; c + 1 < row.size(); ++c)
            if (!(row[c] < row[c + 1])) return false;
        if (r + 1 < rows_.size())
            for (std::size_t c = 0; c < rows_[r + 1].size(); ++c)
                if (!(row[c] < rows_[r + 1][c])) return false;
    }
    return true;
}

std::optional<BoxPosition> Tableau::find(double value) const {
    // Column 1 strictly increases down, so stop once a row starts above value.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.front() > value) break;
        auto it = std::lower_bound(row.begin(), row.end(), value);
        if (it != row.end() && *it == value)
            return BoxPosition{r + 1, static_cast<std::size_t>(it - row.begin()) + 1};
    }
    return std::nullopt;
}

BumpingRoute Tableau::insert_in_place(double x) {
    if (contains(x)) throw std::invalid_argument("Tableau::insert_in_place: duplicate entry");
    BumpingRoute route;
    double cur = x;
    for (std::size_t r = 0;; ++r) {
        if (r == rows_.size()) {
            rows_.push_back({cur});
            route.cells.push_back({r + 1, 1});
            return route;
        }
        auto& row = rows_[r];
        auto it = std::upper_bound(row.begin(), row.end(), cur);
        if (it == row.end()) {
            row.push_back(cur);
            route.cells.push_back({r + 1, row.size()});
            return route;
        }
        route.cells.push_back({r + 1, static_cast<std::size_t>(it - row.begin()) + 1});
        std::swap(cur, *it);
    }
}

double Tableau::reverse_insert_in_place(BoxPosition corner) {
    if (!shape().is_corner(corner.row, corner.col))
        throw std::invalid_argument("Tableau::reverse_insert_in_place: not a corner cell");
    double cur = rows_[corner.row - 1].back();
    rows_[corner.row - 1].pop_back();
    if (rows_[corner.row - 1].empty()) rows_.pop_back();
    for (std::size_t r = corner.row - 1; r-- > 0;) {
        auto& row = rows_[r];
        // Rightmost entry smaller than cur; exists by column-strictness.
        auto it = std::lower_bound(row.begin(), row.end(), cur);
        std::swap(cur, *(it - 1));
    }
    return cur;
}

InsertResult insert(const Tableau& t, double x) {
    InsertResult res;
    res.tableau = t;
    res.route = res.tableau.insert_in_place(x);
    return res;
}

ReverseInsertResult reverse_insert(const Tableau& t, BoxPosition corner) {
    ReverseInsertResult res;
    res.tableau = t;
    res.value = res.tableau.reverse_insert_in_place(corner);
    return res;
}

RskPair rsk(const std::vector<double>& seq) {
    {
        std::unordered_set<double> seen(seq.begin(), seq.end());
        if (seen.size() != seq.size()) throw std::invalid_argument("rsk: duplicate entries");
    }
    RskPair pair;
    std::vector<std::vector<double>> q_rows;
    for (std::size_t j = 0; j < seq.size(); ++j) {
        BumpingRoute route = pair.p.insert_in_place(seq[j]);
        const BoxPosition& cell = route.last();
        if (cell.row > q_rows.size()) q_rows.emplace_back();
        q_rows[cell.row - 1].push_back(static_cast<double>(j + 1));
    }
    pair.q = Tableau(std::move(q_rows));
    return pair;
}

RskPair rsk(const std::vector<int>& seq) {
    std::vector<double> xs(seq.begin(), seq.end());
    return rsk(xs);
}

Partition shape(const Tableau& t) { return t.shape(); }

BoxPosition locate(const Tableau& t, double value) {
    auto pos = t.find(value);
    if (!pos) throw std::out_of_range("locate: value not present in tableau");
    return *pos;
}

bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 1 || static_cast<std::size_t>(v) > p.size() || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

Permutation inverse_permutation(const Permutation& p) {
    if (!is_permutation(p)) throw std::invalid_argument("inverse_permutation: not a bijection");
    Permutation inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i] - 1] = static_cast<int>(i + 1);
    return inv;
}

Permutation extend_permutation(const Permutation& p, std::size_t n_prime) {
    if (!is_permutation(p)) throw std::invalid_argument("extend_permutation: not a bijection");
    if (n_prime > p.size()) throw std::invalid_argument("extend_permutation: n_prime out of range");
    Permutation ext;
    ext.reserve(p.size() + 1);
    ext.insert(ext.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n_prime));
    ext.push_back(static_cast<int>(p.size() + 1));
    ext.insert(ext.end(), p.begin() + static_cast<std::ptrdiff_t>(n_prime), p.end());
    return ext;
}

}  // namespace rsktraj
