#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rsktraj/limit_curves.hpp"
#include "rsktraj/random_model.hpp"
#include "rsktraj/tableau.hpp"

namespace rsktraj {

// Marked-box run: insert n uniform values, then the marked value w, then
// keep inserting up to step floor(t_max * n). Step indices count inserted
// X's, so step n is the state right after w was added.
struct TrajectoryConfig {
    std::size_t n = 0;
    double w = 0.5;
    double t_max = 1.0;
    std::uint64_t seed = 0;
    std::size_t stride = 1;
};

struct TrajectoryPoint {
    std::size_t step = 0;
    BoxPosition pos;
};

struct Trajectory {
    std::size_t n = 0;
    double w = 0.0;
    BoxPosition initial_pos;             // step n, always in row 1
    std::vector<TrajectoryPoint> points; // steps n+1 .. floor(t_max*n)

    // Position at a recorded step; throws std::out_of_range otherwise.
    BoxPosition position_at(std::size_t step) const;
    std::size_t last_step() const { return points.empty() ? n : points.back().step; }
};

struct DeviationStat {
    double sup_dev = 0.0;
    double argmax_t = 0.0;
    std::vector<std::pair<double, double>> pointwise;  // (T, dev)
};

// Simulates on the filtered subsequence (values < w); insertions of larger
// values never move the marked box, so the trajectory matches the full run
// exactly. The marked position is maintained incrementally from the
// bumping routes rather than searched for.
Trajectory track_trajectory(const TrajectoryConfig& cfg);

// Same run with every value inserted; kept for the equivalence check.
Trajectory track_trajectory_full(const TrajectoryConfig& cfg);

// Scaled position of a box: (col, row) / sqrt(w*n).
CurvePoint scaled_position(BoxPosition pos, double w, std::size_t n);

// Euclidean deviation of the scaled trajectory from H over a T grid.
// Every floor(T*n) must be a recorded step (run with stride 1).
DeviationStat scaled_deviation(const Trajectory& traj, const std::vector<double>& t_grid);

// Position of the box created by inserting x into p; equals the last cell
// of the bumping route, computed without mutating p.
BoxPosition new_box_position(const Tableau& p, double x);

struct ConvergenceConfig {
    std::vector<std::size_t> n_list;
    std::size_t trials = 1;
    double w = 0.5;
    double t_max = 3.0;
    std::size_t grid_size = 21;
    double eps = 0.5;
    std::uint64_t master_seed = 0;
    std::size_t threads = 0;  // 0 -> hardware concurrency
};

struct ConvergenceRow {
    std::size_t n = 0;
    std::size_t trials = 0;
    double median_sup_dev = 0.0;
    double p90_sup_dev = 0.0;
    double exceed_fraction = 0.0;  // fraction of trials with sup_dev > eps
};

// Per-n sup-deviation statistics over independent trials. Trial t of the
// k-th n uses child_seed(master_seed, k*trials + t); results are merged by
// trial index, so the output is identical for any thread count.
std::vector<ConvergenceRow> convergence_experiment(const ConvergenceConfig& cfg);

// Uniform grid of `size` points on [1, t_max].
std::vector<double> uniform_t_grid(double t_max, std::size_t size);

// Fraction of trials in which the marked box sits in column 1 at step
// floor(t * n^2). No limit claim is attached to this probe.
double first_column_probe(std::size_t n, double w, double t, std::size_t trials,
                          std::uint64_t seed);

// Linear-interpolation percentile (p in [0,1]) of an unsorted sample.
double percentile(std::vector<double> values, double p);

}  // namespace rsktraj
