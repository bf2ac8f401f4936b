#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace rsktraj {

// Weakly decreasing positive row lengths of a Young diagram.
struct Partition {
    std::vector<std::size_t> parts;

    std::size_t box_count() const;
    bool is_valid() const;
    // True if removing the box at (row, col) (1-based) leaves a valid shape,
    // i.e. (row, col) is the last box of its row and its column.
    bool is_corner(std::size_t row, std::size_t col) const;

    bool operator==(const Partition&) const = default;
};

// 1-based (row, column) coordinates of a box, matching the usual
// matrix-style labelling of Young diagram cells.
struct BoxPosition {
    std::size_t row = 0;
    std::size_t col = 0;

    bool operator==(const BoxPosition&) const = default;
};

// Cells rearranged by one row-insertion step, one per visited row.
// Rows are consecutive starting at row 1 and columns weakly decrease.
struct BumpingRoute {
    std::vector<BoxPosition> cells;

    const BoxPosition& last() const { return cells.back(); }
    bool is_valid() const;
};

// Young tableau over distinct real entries: rows weakly decrease in
// length, entries increase left-to-right in rows and top-to-bottom in
// columns. All mutating operations live behind named methods; the free
// functions below are pure.
class Tableau {
  public:
    Tableau() = default;
    // Validates shape, ordering and distinctness; throws std::invalid_argument.
    explicit Tableau(std::vector<std::vector<double>> rows);

    const std::vector<std::vector<double>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    std::size_t box_count() const;
    Partition shape() const;

    // One RSK row-insertion step. Throws std::invalid_argument if x already
    // occurs in the tableau (distinctness assumption violated).
    BumpingRoute insert_in_place(double x);

    // Inverse of insert_in_place starting from a corner cell; returns the
    // value that falls out of row 1. Throws if (row, col) is not a corner.
    double reverse_insert_in_place(BoxPosition corner);

    bool contains(double x) const { return find(x).has_value(); }
    std::optional<BoxPosition> find(double value) const;

    // Applies a strictly increasing map to every entry.
    template <typename F>
    Tableau map_entries(F&& f) const {
        Tableau out = *this;
        for (auto& row : out.rows_)
            for (auto& e : row) e = f(e);
        return out;
    }

    bool is_valid() const;
    bool operator==(const Tableau&) const = default;

  private:
    std::vector<std::vector<double>> rows_;
};

struct InsertResult {
    Tableau tableau;
    BumpingRoute route;
};

struct ReverseInsertResult {
    Tableau tableau;
    double value = 0.0;
};

struct RskPair {
    Tableau p;  // insertion tableau
    Tableau q;  // recording tableau, entries 1..n
};

InsertResult insert(const Tableau& t, double x);
ReverseInsertResult reverse_insert(const Tableau& t, BoxPosition corner);

// Full RSK of a sequence of distinct reals. Q holds j in the cell created
// at step j. Throws std::invalid_argument on duplicate entries.
RskPair rsk(const std::vector<double>& seq);
RskPair rsk(const std::vector<int>& seq);

Partition shape(const Tableau& t);

// Coordinates of the box holding `value`; throws std::out_of_range when absent.
BoxPosition locate(const Tableau& t, double value);

// --- permutations (1-based values on {1..n}) ---

using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);

// result[p[i]-1] = i+1; throws std::invalid_argument unless p is a bijection.
Permutation inverse_permutation(const Permutation& p);

// Inserts the value m'+1 at index n_prime+1 (1-based), preserving the
// relative order of everything else: (p_1..p_{n'}, m'+1, p_{n'+1}..p_{m'}).
Permutation extend_permutation(const Permutation& p, std::size_t n_prime);

}  // namespace rsktraj
