#include "rsktraj/random_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rsktraj {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t child_seed(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t state = master_seed ^ ((index + 1) * 0x9e3779b97f4a7c15ULL);
    return splitmix64(state);
}

SeededStream::SeededStream(std::uint64_t seed, double lo, double hi)
    : seed_(seed), lo_(lo), hi_(hi), engine_(seed) {
    if (!(lo < hi)) throw std::invalid_argument("SeededStream: need lo < hi");
}

double SeededStream::next() {
    for (;;) {
        double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;  // [0,1)
        if (u == 0.0) continue;                                       // open interval
        return lo_ + u * (hi_ - lo_);
    }
}

SeededStream SeededStream::child(std::uint64_t master_seed, std::uint64_t index,
                                 double lo, double hi) {
    return SeededStream(child_seed(master_seed, index), lo, hi);
}

double DistinctUniformSource::next() {
    for (;;) {
        double x = stream_.next();
        if (seen_.insert(x).second) return x;
    }
}

std::vector<double> uniform_sequence(std::size_t n, SeededStream& stream) {
    std::unordered_set<double> seen;
    std::vector<double> xs;
    xs.reserve(n);
    while (xs.size() < n) {
        double x = stream.next();
        if (seen.insert(x).second) xs.push_back(x);
    }
    return xs;
}

OrderedSample order_statistics(const std::vector<double>& xs) {
    OrderedSample out{xs};
    std::sort(out.values.begin(), out.values.end());
    return out;
}

Permutation rank_permutation(const std::vector<double>& xs) {
    std::vector<std::size_t> idx(xs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    Permutation pi(xs.size());
    for (std::size_t rank = 0; rank < idx.size(); ++rank)
        pi[idx[rank]] = static_cast<int>(rank + 1);
    return pi;
}

FilterReport filter_below(const std::vector<double>& xs, double w, std::size_t n) {
    if (!(w > 0.0 && w <= 1.0)) throw std::invalid_argument("filter_below: w outside (0,1]");
    if (n > xs.size()) throw std::invalid_argument("filter_below: n exceeds sample size");
    FilterReport report;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        if (xs[j] < w) {
            report.kept.push_back(xs[j]);
            ++report.m_prime;
            if (j < n) ++report.n_prime;
        }
    }
    return report;
}

}  // namespace rsktraj
