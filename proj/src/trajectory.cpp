#include "rsktraj/trajectory.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace rsktraj {

namespace {

std::size_t trajectory_end_step(std::size_t n, double t_max) {
    return static_cast<std::size_t>(std::floor(t_max * static_cast<double>(n)));
}

void validate_config(const TrajectoryConfig& cfg) {
    if (!(cfg.w > 0.0 && cfg.w <= 1.0)) throw std::invalid_argument("trajectory: w outside (0,1]");
    if (!(cfg.t_max >= 1.0)) throw std::invalid_argument("trajectory: t_max must be >= 1");
    if (cfg.stride == 0) throw std::invalid_argument("trajectory: stride must be >= 1");
}

// Shared marked-box run. Inserts n draws, then w, then draws up to step m;
// when filtered, draws >= w are consumed but not inserted (they cannot move
// the marked box). Calls record(step, pos) for every step in [n+1, m] and
// returns the initial position (step n) plus the final one.
template <typename Record>
std::pair<BoxPosition, BoxPosition> run_marked(std::size_t n, double w, std::size_t m,
                                               std::uint64_t seed, bool filtered,
                                               Record&& record) {
    DistinctUniformSource source{SeededStream(seed)};
    source.reserve(w);
    Tableau p;
    for (std::size_t j = 1; j <= n; ++j) {
        double x = source.next();
        if (!filtered || x < w) p.insert_in_place(x);
    }
    // w lands in row 1 (the first route cell); the rest of the route is the
    // value it displaced. w then moves only when a later route bumps it.
    BumpingRoute w_route = p.insert_in_place(w);
    BoxPosition pos = w_route.cells.front();
    BoxPosition initial = pos;
    for (std::size_t j = n + 1; j <= m; ++j) {
        double x = source.next();
        if (!filtered || x < w) {
            BumpingRoute route = p.insert_in_place(x);
            const auto& cells = route.cells;
            for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
                if (cells[i] == pos) {
                    pos = cells[i + 1];
                    break;
                }
            }
        }
        record(j, pos);
    }
    return {initial, pos};
}

Trajectory run_trajectory(const TrajectoryConfig& cfg, bool filtered) {
    validate_config(cfg);
    std::size_t m = trajectory_end_step(cfg.n, cfg.t_max);
    Trajectory traj;
    traj.n = cfg.n;
    traj.w = cfg.w;
    auto record = [&](std::size_t step, BoxPosition pos) {
        if ((step - cfg.n) % cfg.stride == 0 || step == m)
            traj.points.push_back({step, pos});
    };
    auto [initial, final_pos] = run_marked(cfg.n, cfg.w, m, cfg.seed, filtered, record);
    (void)final_pos;
    traj.initial_pos = initial;
    return traj;
}

}  // namespace

BoxPosition Trajectory::position_at(std::size_t step) const {
    if (step == n) return initial_pos;
    auto it = std::lower_bound(points.begin(), points.end(), step,
                               [](const TrajectoryPoint& p, std::size_t s) { return p.step < s; });
    if (it == points.end() || it->step != step)
        throw std::out_of_range("Trajectory::position_at: step not recorded");
    return it->pos;
}

Trajectory track_trajectory(const TrajectoryConfig& cfg) { return run_trajectory(cfg, true); }

Trajectory track_trajectory_full(const TrajectoryConfig& cfg) { return run_trajectory(cfg, false); }

CurvePoint scaled_position(BoxPosition pos, double w, std::size_t n) {
    double scale = std::sqrt(w * static_cast<double>(n));
    return {static_cast<double>(pos.col) / scale, static_cast<double>(pos.row) / scale};
}

DeviationStat scaled_deviation(const Trajectory& traj, const std::vector<double>& t_grid) {
    if (traj.n == 0) throw std::invalid_argument("scaled_deviation: needs n >= 1");
    DeviationStat stat;
    stat.pointwise.reserve(t_grid.size());
    for (double t : t_grid) {
        if (!(t >= 1.0)) throw std::invalid_argument("scaled_deviation: T below 1");
        std::size_t step = static_cast<std::size_t>(std::floor(t * static_cast<double>(traj.n)));
        if (step > traj.last_step())
            throw std::invalid_argument("scaled_deviation: T beyond recorded range");
        CurvePoint scaled = scaled_position(traj.position_at(step), traj.w, traj.n);
        double dev = norm(scaled - h(t));
        stat.pointwise.emplace_back(t, dev);
        if (dev >= stat.sup_dev) {
            stat.sup_dev = dev;
            stat.argmax_t = t;
        }
    }
    return stat;
}

BoxPosition new_box_position(const Tableau& p, double x) {
    if (p.contains(x)) throw std::invalid_argument("new_box_position: duplicate entry");
    const auto& rows = p.rows();
    double cur = x;
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) return {r + 1, 1};
        auto it = std::upper_bound(rows[r].begin(), rows[r].end(), cur);
        if (it == rows[r].end()) return {r + 1, rows[r].size() + 1};
        cur = *it;
    }
}

std::vector<double> uniform_t_grid(double t_max, std::size_t size) {
    if (size < 2 || !(t_max >= 1.0)) throw std::invalid_argument("uniform_t_grid: bad grid");
    std::vector<double> grid(size);
    for (std::size_t i = 0; i < size; ++i)
        grid[i] = 1.0 + (t_max - 1.0) * static_cast<double>(i) / static_cast<double>(size - 1);
    return grid;
}

double percentile(std::vector<double> values, double p) {
    if (values.empty()) throw std::invalid_argument("percentile: empty sample");
    std::sort(values.begin(), values.end());
    double rank = p * static_cast<double>(values.size() - 1);
    std::size_t lo = static_cast<std::size_t>(std::floor(rank));
    if (lo + 1 >= values.size()) return values.back();
    double frac = rank - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[lo + 1] * frac;
}

std::vector<ConvergenceRow> convergence_experiment(const ConvergenceConfig& cfg) {
    if (cfg.n_list.empty()) throw std::invalid_argument("convergence_experiment: empty n_list");
    for (std::size_t i = 0; i + 1 < cfg.n_list.size(); ++i)
        if (cfg.n_list[i] >= cfg.n_list[i + 1])
            throw std::invalid_argument("convergence_experiment: n_list must be strictly ascending");
    if (cfg.trials == 0) throw std::invalid_argument("convergence_experiment: trials must be >= 1");

    std::vector<double> grid = uniform_t_grid(cfg.t_max, cfg.grid_size);
    std::size_t task_count = cfg.n_list.size() * cfg.trials;
    std::vector<double> sup_devs(task_count, 0.0);

    std::atomic<std::size_t> next_task{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next_task.fetch_add(1);
            if (i >= task_count) return;
            std::size_t n = cfg.n_list[i / cfg.trials];
            TrajectoryConfig tc{n, cfg.w, cfg.t_max, child_seed(cfg.master_seed, i), 1};
            sup_devs[i] = scaled_deviation(track_trajectory(tc), grid).sup_dev;
        }
    };

    std::size_t threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
    threads = std::max<std::size_t>(1, std::min(threads, task_count));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<ConvergenceRow> rows;
    rows.reserve(cfg.n_list.size());
    for (std::size_t k = 0; k < cfg.n_list.size(); ++k) {
        std::vector<double> devs(sup_devs.begin() + static_cast<std::ptrdiff_t>(k * cfg.trials),
                                 sup_devs.begin() + static_cast<std::ptrdiff_t>((k + 1) * cfg.trials));
        ConvergenceRow row;
        row.n = cfg.n_list[k];
        row.trials = cfg.trials;
        row.median_sup_dev = percentile(devs, 0.5);
        row.p90_sup_dev = percentile(devs, 0.9);
        std::size_t exceed = 0;
        for (double d : devs)
            if (d > cfg.eps) ++exceed;
        row.exceed_fraction = static_cast<double>(exceed) / static_cast<double>(cfg.trials);
        rows.push_back(row);
    }
    return rows;
}

double first_column_probe(std::size_t n, double w, double t, std::size_t trials,
                          std::uint64_t seed) {
    if (n == 0 || trials == 0) throw std::invalid_argument("first_column_probe: need n, trials >= 1");
    if (!(w > 0.0 && w <= 1.0)) throw std::invalid_argument("first_column_probe: w outside (0,1]");
    std::size_t m = static_cast<std::size_t>(
        std::floor(t * static_cast<double>(n) * static_cast<double>(n)));
    if (m < n) throw std::invalid_argument("first_column_probe: t*n^2 below n");
    std::size_t hits = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        auto [initial, final_pos] =
            run_marked(n, w, m, child_seed(seed, trial), true, [](std::size_t, BoxPosition) {});
        (void)initial;
        if (final_pos.col == 1) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace rsktraj
