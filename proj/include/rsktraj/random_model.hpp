#pragma once

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "rsktraj/tableau.hpp"

namespace rsktraj {

// One step of the splitmix64 stream. Used for deriving child seeds; the
// identity is fixed so runs reproduce bitwise across platforms.
std::uint64_t splitmix64(std::uint64_t& state);

// Child seed for trial `index` under a master seed.
std::uint64_t child_seed(std::uint64_t master_seed, std::uint64_t index);

// Seeded uniform generator on (lo, hi). Engine is mt19937_64 (bit-exact per
// the ISO standard); doubles come from the top 53 bits of the raw output, so
// the value sequence is identical for identical (seed, lo, hi) everywhere.
class SeededStream {
  public:
    explicit SeededStream(std::uint64_t seed, double lo = 0.0, double hi = 1.0);

    double next();
    std::uint64_t seed() const { return seed_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }

    static SeededStream child(std::uint64_t master_seed, std::uint64_t index,
                              double lo = 0.0, double hi = 1.0);

    // Recorded in every run manifest.
    static constexpr const char* kGeneratorId = "mt19937_64+splitmix64-child/u53";

  private:
    std::uint64_t seed_;
    double lo_, hi_;
    std::mt19937_64 engine_;
};

// Draws from a SeededStream, re-drawing on exact collisions so all values
// ever returned (plus any values reserved up front) are pairwise distinct.
class DistinctUniformSource {
  public:
    explicit DistinctUniformSource(SeededStream stream) : stream_(std::move(stream)) {}

    void reserve(double value) { seen_.insert(value); }
    double next();

  private:
    SeededStream stream_;
    std::unordered_set<double> seen_;
};

// Strictly increasing copy of a sample; z(1) is the minimum.
struct OrderedSample {
    std::vector<double> values;
};

// Subsequence of values below a threshold w plus the counts n', m' of
// such values among the first n and among the whole sample.
struct FilterReport {
    std::vector<double> kept;
    std::size_t n_prime = 0;
    std::size_t m_prime = 0;
};

// n pairwise-distinct draws. Deterministic per (seed, lo, hi).
std::vector<double> uniform_sequence(std::size_t n, SeededStream& stream);

OrderedSample order_statistics(const std::vector<double>& xs);

// Permutation with xs[j] = z(pi[j]) where z is the order statistic map.
Permutation rank_permutation(const std::vector<double>& xs);

// Keeps values < w in original order; n is the prefix length for n'.
// Throws std::invalid_argument for w outside (0,1] or n > xs.size().
FilterReport filter_below(const std::vector<double>& xs, double w, std::size_t n);

}  // namespace rsktraj
