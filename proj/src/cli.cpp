#include "rsktraj/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsktraj/asymptotics.hpp"
#include "rsktraj/limit_curves.hpp"
#include "rsktraj/power_series.hpp"
#include "rsktraj/random_model.hpp"
#include "rsktraj/tableau.hpp"
#include "rsktraj/trajectory.hpp"

namespace rsktraj::cli {

namespace {

constexpr const char* kNoPrng = "none";

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
    std::vector<double> g(points);
    for (std::size_t k = 0; k < points; ++k)
        g[k] = lo + (hi - lo) * (static_cast<double>(k) / static_cast<double>(points - 1));
    return g;
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t points) {
    std::vector<double> g(points);
    for (std::size_t k = 0; k < points; ++k)
        g[k] = lo * std::pow(hi / lo, static_cast<double>(k) / static_cast<double>(points - 1));
    return g;
}

nlohmann::json grid_json(const char* kind, double lo, double hi, std::size_t points) {
    return nlohmann::json{{"kind", kind}, {"lo", lo}, {"hi", hi}, {"points", points}};
}

std::string brackets(const Tableau& t) {
    std::string s = "[";
    bool first_row = true;
    for (const auto& row : t.rows()) {
        if (!first_row) s += ",";
        first_row = false;
        s += "[";
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += ",";
            s += csv::format_double(row[i]);
        }
        s += "]";
    }
    return s + "]";
}

struct RunOutput {
    csv::Table table;
    RunManifest manifest;
};

RunOutput build_curve(const CurveParams& p) {
    return {curve_table(p), make_manifest("curve", p.to_json(), 0, kNoPrng,
                                          grid_json("uniform", p.lo, p.hi, p.points))};
}

RunOutput build_trajectory(const TrajectoryParams& p) {
    return {trajectory_table(p),
            make_manifest("trajectory", p.to_json(), p.seed, SeededStream::kGeneratorId,
                          nlohmann::json{{"kind", "steps"}, {"stride", p.stride}})};
}

RunOutput build_converge(const ConvergeParams& p) {
    return {converge_table(p),
            make_manifest("converge", p.to_json(), p.seed, SeededStream::kGeneratorId,
                          grid_json("uniform", 1.0, p.t_max, p.grid_points))};
}

RunOutput build_asympt(const AsymptParams& p) {
    return {asympt_table(p), make_manifest("asympt", p.to_json(), 0, kNoPrng,
                                           grid_json("geometric", p.t_min, p.t_max, p.points))};
}

RunOutput build_probe(const ProbeParams& p) {
    return {probe_table(p), make_manifest("probe-column", p.to_json(), p.seed,
                                          SeededStream::kGeneratorId, nullptr)};
}

RunOutput build_from(const std::string& sub, const nlohmann::json& params) {
    if (sub == "curve") return build_curve(CurveParams::from_json(params));
    if (sub == "trajectory") return build_trajectory(TrajectoryParams::from_json(params));
    if (sub == "converge") return build_converge(ConvergeParams::from_json(params));
    if (sub == "asympt") return build_asympt(AsymptParams::from_json(params));
    if (sub == "probe-column") return build_probe(ProbeParams::from_json(params));
    throw std::invalid_argument("manifest subcommand '" + sub + "' does not emit tables");
}

void rerun(const std::string& expect_sub, const std::string& manifest_path,
           const std::string& out_path) {
    RunManifest m = RunManifest::deserialize(csv::read_file(manifest_path));
    require(m.subcommand == expect_sub,
            "manifest subcommand '" + m.subcommand + "' does not match '" + expect_sub + "'");
    run_from_manifest(m, out_path);
}

// --- verify: fast self-checks, one PASS/FAIL line each -----------------

std::string check_curve_roundtrip() {
    double worst = 0.0;
    for (int k = 1; k < 256; ++k) {
        double x = static_cast<double>(k) / 256.0;
        worst = std::max(worst, std::abs(f_sc(u(x)) - x));
    }
    if (worst <= 1e-12) return "";
    return "max inversion residual " + csv::format_double(worst);
}

std::string check_curve_endpoints() {
    const double pi = 3.14159265358979323846;
    CurvePoint g0 = g(0.0), g1 = g(1.0), gm = g(0.5);
    double worst = std::max({std::abs(g0.x), std::abs(g0.y - 2.0), std::abs(g1.x - 2.0),
                             std::abs(g1.y), std::abs(gm.x - 2.0 / pi),
                             std::abs(gm.y - 2.0 / pi)});
    if (worst <= 1e-9) return "";
    return "endpoint error " + csv::format_double(worst);
}

std::string check_series_inverse() {
    auto inv = power_series::invert(f_series().dense_coeffs(5), 5);
    auto stored = f_inverse_series().dense_coeffs(5);
    double worst = 0.0;
    for (std::size_t k = 0; k < stored.size(); ++k)
        worst = std::max(worst, std::abs(inv[k] - stored[k]));
    if (worst <= 1e-14) return "";
    return "coefficient mismatch " + csv::format_double(worst);
}

std::string check_h_asymptote() {
    double t = 1e4;
    CurvePoint ht = h(t);
    double ex = std::abs(ht.x * std::sqrt(t) - 1.0);
    double ey = std::abs(ht.y / (2.0 * std::sqrt(t)) - 1.0);
    if (ex <= 1e-2 && ey <= 1e-2) return "";
    return "relative errors " + csv::format_double(ex) + ", " + csv::format_double(ey);
}

std::string check_rsk_example() {
    RskPair pair = rsk(std::vector<double>{3, 1, 2});
    if (brackets(pair.p) == "[[1,2],[3]]" && brackets(pair.q) == "[[1,3],[2]]") return "";
    return "got P=" + brackets(pair.p) + " Q=" + brackets(pair.q);
}

std::string check_filter_equivalence() {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        TrajectoryConfig cfg{30, 0.5, 3.0, seed, 1};
        Trajectory a = track_trajectory(cfg);
        Trajectory b = track_trajectory_full(cfg);
        bool same = a.initial_pos == b.initial_pos && a.points.size() == b.points.size();
        for (std::size_t i = 0; same && i < a.points.size(); ++i)
            same = a.points[i].step == b.points[i].step && a.points[i].pos == b.points[i].pos;
        if (!same) return "filtered and full runs differ at seed " + std::to_string(seed);
    }
    return "";
}

std::string check_manifest_roundtrip() {
    ConvergeParams p;
    p.n_list = {20};
    p.trials = 2;
    p.t_max = 2.0;
    p.seed = 42;
    p.grid_points = 5;
    RunOutput first = build_converge(p);
    RunManifest reread = RunManifest::deserialize(first.manifest.serialize());
    RunOutput second = build_from(reread.subcommand, reread.parameters);
    if (csv::to_string(first.table) == csv::to_string(second.table) &&
        first.manifest.serialize() == second.manifest.serialize())
        return "";
    return "re-run from serialized manifest differs";
}

int run_verify() {
    struct Check {
        const char* name;
        std::function<std::string()> fn;
    };
    const std::vector<Check> checks = {
        {"curve-roundtrip", check_curve_roundtrip},
        {"curve-endpoints", check_curve_endpoints},
        {"series-inverse", check_series_inverse},
        {"h-asymptote", check_h_asymptote},
        {"rsk-example", check_rsk_example},
        {"filter-equivalence", check_filter_equivalence},
        {"manifest-roundtrip", check_manifest_roundtrip},
    };
    bool all = true;
    for (const auto& c : checks) {
        std::string detail;
        try {
            detail = c.fn();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        if (detail.empty()) {
            std::cout << "PASS " << c.name << "\n";
        } else {
            std::cout << "FAIL " << c.name << ": " << detail << "\n";
            all = false;
        }
    }
    return all ? 0 : 1;
}

}  // namespace

// --- parameter records --------------------------------------------------

nlohmann::json CurveParams::to_json() const {
    return nlohmann::json{{"what", what}, {"lo", lo}, {"hi", hi}, {"points", points}};
}

CurveParams CurveParams::from_json(const nlohmann::json& j) {
    CurveParams p;
    p.what = j.at("what").get<std::string>();
    p.lo = j.at("lo").get<double>();
    p.hi = j.at("hi").get<double>();
    p.points = j.at("points").get<std::size_t>();
    return p;
}

nlohmann::json TrajectoryParams::to_json() const {
    return nlohmann::json{
        {"n", n}, {"w", w}, {"t_max", t_max}, {"seed", seed}, {"stride", stride}};
}

TrajectoryParams TrajectoryParams::from_json(const nlohmann::json& j) {
    TrajectoryParams p;
    p.n = j.at("n").get<std::size_t>();
    p.w = j.at("w").get<double>();
    p.t_max = j.at("t_max").get<double>();
    p.seed = j.at("seed").get<std::uint64_t>();
    p.stride = j.at("stride").get<std::size_t>();
    return p;
}

nlohmann::json ConvergeParams::to_json() const {
    return nlohmann::json{{"n_list", n_list}, {"trials", trials},
                          {"w", w},           {"t_max", t_max},
                          {"eps", eps},       {"seed", seed},
                          {"grid_points", grid_points}};
}

ConvergeParams ConvergeParams::from_json(const nlohmann::json& j) {
    ConvergeParams p;
    p.n_list = j.at("n_list").get<std::vector<std::size_t>>();
    p.trials = j.at("trials").get<std::size_t>();
    p.w = j.at("w").get<double>();
    p.t_max = j.at("t_max").get<double>();
    p.eps = j.at("eps").get<double>();
    p.seed = j.at("seed").get<std::uint64_t>();
    p.grid_points = j.at("grid_points").get<std::size_t>();
    return p;
}

nlohmann::json AsymptParams::to_json() const {
    return nlohmann::json{{"t_min", t_min}, {"t_max", t_max}, {"points", points}};
}

AsymptParams AsymptParams::from_json(const nlohmann::json& j) {
    AsymptParams p;
    p.t_min = j.at("t_min").get<double>();
    p.t_max = j.at("t_max").get<double>();
    p.points = j.at("points").get<std::size_t>();
    return p;
}

nlohmann::json ProbeParams::to_json() const {
    return nlohmann::json{
        {"n", n}, {"w", w}, {"t", t}, {"trials", trials}, {"seed", seed}};
}

ProbeParams ProbeParams::from_json(const nlohmann::json& j) {
    ProbeParams p;
    p.n = j.at("n").get<std::size_t>();
    p.w = j.at("w").get<double>();
    p.t = j.at("t").get<double>();
    p.trials = j.at("trials").get<std::size_t>();
    p.seed = j.at("seed").get<std::uint64_t>();
    return p;
}

// --- table builders -------------------------------------------------------

csv::Table curve_table(const CurveParams& p) {
    require(p.what == "G" || p.what == "H", "what must be G or H");
    require(p.points >= 2, "points must be >= 2");
    csv::Table t;
    if (p.what == "G") {
        require(0.0 <= p.lo && p.lo < p.hi && p.hi <= 1.0,
                "x range must satisfy 0 <= xmin < xmax <= 1");
        t.header = {"x", "u", "v", "Gx", "Gy"};
        for (double x : uniform_grid(p.lo, p.hi, p.points)) {
            double uu = u(x);
            double vv = omega_star(uu);
            t.rows.push_back({x, uu, vv, (vv + uu) / 2.0, (vv - uu) / 2.0});
        }
    } else {
        require(1.0 <= p.lo && p.lo < p.hi, "T range must satisfy 1 <= tmin < tmax");
        t.header = {"T", "Hx", "Hy"};
        for (double tt : uniform_grid(p.lo, p.hi, p.points)) {
            CurvePoint ht = h(tt);
            t.rows.push_back({tt, ht.x, ht.y});
        }
    }
    return t;
}

csv::Table trajectory_table(const TrajectoryParams& p) {
    require(p.n >= 1, "n must be >= 1");
    require(p.w > 0.0 && p.w <= 1.0, "w must lie in (0,1]");
    require(p.t_max >= 1.0, "tmax must be >= 1");
    require(p.stride >= 1, "stride must be >= 1");
    TrajectoryConfig cfg{p.n, p.w, p.t_max, p.seed, p.stride};
    Trajectory traj = track_trajectory(cfg);

    csv::Table t;
    t.header = {"j", "T", "row", "col", "scaled_x", "scaled_y", "Hx", "Hy", "dev"};
    auto push = [&](std::size_t step, BoxPosition pos) {
        double tt = static_cast<double>(step) / static_cast<double>(p.n);
        CurvePoint scaled = scaled_position(pos, p.w, p.n);
        CurvePoint ht = h(tt);
        t.rows.push_back({static_cast<double>(step), tt, static_cast<double>(pos.row),
                          static_cast<double>(pos.col), scaled.x, scaled.y, ht.x, ht.y,
                          norm(scaled - ht)});
    };
    push(p.n, traj.initial_pos);
    for (const auto& pt : traj.points) push(pt.step, pt.pos);
    return t;
}

csv::Table converge_table(const ConvergeParams& p) {
    require(!p.n_list.empty(), "nlist must be nonempty");
    for (std::size_t i = 0; i + 1 < p.n_list.size(); ++i)
        require(p.n_list[i] < p.n_list[i + 1], "nlist must be strictly ascending");
    require(p.n_list.front() >= 1, "nlist entries must be >= 1");
    require(p.trials >= 1, "trials must be >= 1");
    require(p.w > 0.0 && p.w <= 1.0, "w must lie in (0,1]");
    require(p.t_max >= 1.0, "tmax must be >= 1");
    require(p.grid_points >= 2, "grid-points must be >= 2");
    require(p.eps > 0.0, "eps must be > 0");
    ConvergenceConfig cfg;
    cfg.n_list = p.n_list;
    cfg.trials = p.trials;
    cfg.w = p.w;
    cfg.t_max = p.t_max;
    cfg.grid_size = p.grid_points;
    cfg.eps = p.eps;
    cfg.master_seed = p.seed;

    csv::Table t;
    t.header = {"n", "trials", "median_sup_dev", "p90_sup_dev", "exceed_fraction"};
    for (const ConvergenceRow& row : convergence_experiment(cfg))
        t.rows.push_back({static_cast<double>(row.n), static_cast<double>(row.trials),
                          row.median_sup_dev, row.p90_sup_dev, row.exceed_fraction});
    return t;
}

csv::Table asympt_table(const AsymptParams& p) {
    require(p.t_min >= 4.0, "tmin must be >= 4");
    require(p.t_max > p.t_min, "tmax must be > tmin");
    require(p.points >= 2, "points must be >= 2");
    csv::Table t;
    t.header = {"T",           "h1_numeric", "h1_series", "h1_abs_err", "h1_scaled_err",
                "h2_numeric",  "h2_series",  "h2_abs_err", "h2_scaled_err"};
    for (const SeriesErrorRow& r : series_error_report(geometric_grid(p.t_min, p.t_max, p.points)))
        t.rows.push_back({r.t, r.h1_numeric, r.h1_series, r.h1_abs_err, r.h1_scaled_err,
                          r.h2_numeric, r.h2_series, r.h2_abs_err, r.h2_scaled_err});
    return t;
}

csv::Table probe_table(const ProbeParams& p) {
    require(p.n >= 1, "n must be >= 1");
    require(p.w > 0.0 && p.w <= 1.0, "w must lie in (0,1]");
    require(p.trials >= 1, "trials must be >= 1");
    double frac = first_column_probe(p.n, p.w, p.t, p.trials, p.seed);
    csv::Table t;
    t.header = {"n", "w", "T", "trials", "fraction"};
    t.rows.push_back({static_cast<double>(p.n), p.w, p.t, static_cast<double>(p.trials), frac});
    return t;
}

RunManifest make_manifest(const std::string& subcommand, nlohmann::json parameters,
                          std::uint64_t master_seed, const std::string& prng,
                          nlohmann::json grid) {
    RunManifest m;
    m.subcommand = subcommand;
    m.parameters = std::move(parameters);
    m.master_seed = master_seed;
    m.prng = prng;
    m.grid = std::move(grid);
    return m;
}

void emit(const csv::Table& table, const RunManifest& manifest, const std::string& out_path) {
    csv::write_file_atomic(out_path, csv::to_string(table));
    csv::write_file_atomic(out_path + ".manifest.json", manifest.serialize());
}

csv::Table run_from_manifest(const RunManifest& manifest, const std::string& out_path) {
    RunOutput r = build_from(manifest.subcommand, manifest.parameters);
    emit(r.table, r.manifest, out_path);
    return r.table;
}

// --- argument surface -----------------------------------------------------

int run(const std::vector<std::string>& args) {
    CLI::App app{"RSK insertion tableaux, marked-box trajectories, and their limit curves"};
    app.name("rsktraj");
    app.require_subcommand(1);
    int status = 0;

    // rsk
    auto* rsk_cmd = app.add_subcommand("rsk", "Insert a sequence, print the P and Q tableaux");
    auto seq = std::make_shared<std::vector<double>>();
    auto rsk_out = std::make_shared<std::string>();
    rsk_cmd->add_option("--seq", *seq, "comma-separated distinct reals")
        ->required()
        ->delimiter(',');
    rsk_cmd->add_option("--out", *rsk_out, "also write the pair as JSON to this path");
    rsk_cmd->callback([seq, rsk_out] {
        RskPair pair = rsk(*seq);
        std::cout << "P=" << brackets(pair.p) << "\n";
        std::cout << "Q=" << brackets(pair.q) << "\n";
        if (!rsk_out->empty()) {
            nlohmann::json j{
                {"seq", *seq}, {"P", tableau_to_json(pair.p)}, {"Q", tableau_to_json(pair.q)}};
            csv::write_file_atomic(*rsk_out, j.dump(2) + "\n");
            RunManifest m =
                make_manifest("rsk", nlohmann::json{{"seq", *seq}}, 0, kNoPrng, nullptr);
            csv::write_file_atomic(*rsk_out + ".manifest.json", m.serialize());
        }
    });

    // curve
    auto* curve_cmd = app.add_subcommand("curve", "Tabulate the limit curve G or H as CSV");
    auto cp = std::make_shared<CurveParams>();
    auto xr = std::make_shared<std::pair<double, double>>(0.0, 1.0);
    auto tr = std::make_shared<std::pair<double, double>>(1.0, 3.0);
    auto curve_out = std::make_shared<std::string>();
    auto curve_fm = std::make_shared<std::string>();
    auto* what_opt = curve_cmd->add_option("--what", cp->what, "which curve: G or H")
                         ->check(CLI::IsMember({"G", "H"}));
    auto* xmin_opt = curve_cmd->add_option("--xmin", xr->first, "grid start for G (default 0)");
    auto* xmax_opt = curve_cmd->add_option("--xmax", xr->second, "grid end for G (default 1)");
    auto* tmin_opt = curve_cmd->add_option("--tmin", tr->first, "grid start for H (default 1)");
    auto* tmax_opt = curve_cmd->add_option("--tmax", tr->second, "grid end for H (default 3)");
    auto* cpoints_opt = curve_cmd->add_option("--points", cp->points, "grid size (default 101)");
    curve_cmd->add_option("--out", *curve_out, "output CSV path")->required();
    auto* curve_fm_opt =
        curve_cmd->add_option("--from-manifest", *curve_fm, "re-run from this manifest");
    for (auto* o : {what_opt, xmin_opt, xmax_opt, tmin_opt, tmax_opt, cpoints_opt})
        curve_fm_opt->excludes(o);
    curve_cmd->callback([cp, xr, tr, curve_out, curve_fm, xmin_opt, xmax_opt, tmin_opt,
                         tmax_opt] {
        if (!curve_fm->empty()) {
            rerun("curve", *curve_fm, *curve_out);
            return;
        }
        if (cp->what == "G") {
            require(tmin_opt->count() == 0 && tmax_opt->count() == 0,
                    "tmin/tmax apply only to --what H");
            cp->lo = xr->first;
            cp->hi = xr->second;
        } else {
            require(xmin_opt->count() == 0 && xmax_opt->count() == 0,
                    "xmin/xmax apply only to --what G");
            cp->lo = tr->first;
            cp->hi = tr->second;
        }
        RunOutput r = build_curve(*cp);
        emit(r.table, r.manifest, *curve_out);
    });

    // trajectory
    auto* traj_cmd =
        app.add_subcommand("trajectory", "Track one marked-box trajectory, emit CSV");
    auto tp = std::make_shared<TrajectoryParams>();
    auto traj_out = std::make_shared<std::string>();
    auto traj_fm = std::make_shared<std::string>();
    std::vector<CLI::Option*> traj_opts = {
        traj_cmd->add_option("--n", tp->n, "prefix length before the marked value"),
        traj_cmd->add_option("--w", tp->w, "marked value in (0,1]"),
        traj_cmd->add_option("--tmax", tp->t_max, "run until step floor(tmax*n)"),
        traj_cmd->add_option("--seed", tp->seed, "master seed")->envname("RSKTRAJ_SEED"),
        traj_cmd->add_option("--stride", tp->stride, "record every stride-th step"),
    };
    traj_cmd->add_option("--out", *traj_out, "output CSV path")->required();
    auto* traj_fm_opt =
        traj_cmd->add_option("--from-manifest", *traj_fm, "re-run from this manifest");
    for (auto* o : traj_opts) traj_fm_opt->excludes(o);
    traj_cmd->callback([tp, traj_out, traj_fm] {
        if (!traj_fm->empty()) {
            rerun("trajectory", *traj_fm, *traj_out);
            return;
        }
        RunOutput r = build_trajectory(*tp);
        emit(r.table, r.manifest, *traj_out);
    });

    // converge
    auto* conv_cmd = app.add_subcommand(
        "converge", "Sup-deviation statistics of scaled trajectories against H");
    auto vp = std::make_shared<ConvergeParams>();
    auto conv_out = std::make_shared<std::string>();
    auto conv_fm = std::make_shared<std::string>();
    std::vector<CLI::Option*> conv_opts = {
        conv_cmd->add_option("--nlist", vp->n_list, "ascending prefix lengths")->delimiter(','),
        conv_cmd->add_option("--trials", vp->trials, "trials per n"),
        conv_cmd->add_option("--w", vp->w, "marked value in (0,1]"),
        conv_cmd->add_option("--tmax", vp->t_max, "trajectory horizon"),
        conv_cmd->add_option("--eps", vp->eps, "exceedance threshold"),
        conv_cmd->add_option("--seed", vp->seed, "master seed")->envname("RSKTRAJ_SEED"),
        conv_cmd->add_option("--grid-points", vp->grid_points, "T grid size on [1, tmax]"),
    };
    conv_cmd->add_option("--out", *conv_out, "output CSV path")->required();
    auto* conv_fm_opt =
        conv_cmd->add_option("--from-manifest", *conv_fm, "re-run from this manifest");
    for (auto* o : conv_opts) conv_fm_opt->excludes(o);
    conv_cmd->callback([vp, conv_out, conv_fm] {
        if (!conv_fm->empty()) {
            rerun("converge", *conv_fm, *conv_out);
            return;
        }
        RunOutput r = build_converge(*vp);
        emit(r.table, r.manifest, *conv_out);
    });

    // asympt
    auto* asy_cmd =
        app.add_subcommand("asympt", "Error report of the H series against numeric H");
    auto ap = std::make_shared<AsymptParams>();
    auto asy_out = std::make_shared<std::string>();
    auto asy_fm = std::make_shared<std::string>();
    std::vector<CLI::Option*> asy_opts = {
        asy_cmd->add_option("--tmin", ap->t_min, "grid start, at least 4"),
        asy_cmd->add_option("--tmax", ap->t_max, "grid end"),
        asy_cmd->add_option("--points", ap->points, "geometric grid size"),
    };
    asy_cmd->add_option("--out", *asy_out, "output CSV path")->required();
    auto* asy_fm_opt =
        asy_cmd->add_option("--from-manifest", *asy_fm, "re-run from this manifest");
    for (auto* o : asy_opts) asy_fm_opt->excludes(o);
    asy_cmd->callback([ap, asy_out, asy_fm] {
        if (!asy_fm->empty()) {
            rerun("asympt", *asy_fm, *asy_out);
            return;
        }
        RunOutput r = build_asympt(*ap);
        emit(r.table, r.manifest, *asy_out);
    });

    // probe-column
    auto* probe_cmd = app.add_subcommand(
        "probe-column", "Fraction of runs with the marked box in column 1 at step floor(t*n^2)");
    auto pp = std::make_shared<ProbeParams>();
    auto probe_out = std::make_shared<std::string>();
    auto probe_fm = std::make_shared<std::string>();
    std::vector<CLI::Option*> probe_opts = {
        probe_cmd->add_option("--n", pp->n, "prefix length"),
        probe_cmd->add_option("--w", pp->w, "marked value in (0,1]"),
        probe_cmd->add_option("--t", pp->t, "time ratio; runs to step floor(t*n^2)"),
        probe_cmd->add_option("--trials", pp->trials, "number of trials"),
        probe_cmd->add_option("--seed", pp->seed, "master seed")->envname("RSKTRAJ_SEED"),
    };
    probe_cmd->add_option("--out", *probe_out, "output CSV path")->required();
    auto* probe_fm_opt =
        probe_cmd->add_option("--from-manifest", *probe_fm, "re-run from this manifest");
    for (auto* o : probe_opts) probe_fm_opt->excludes(o);
    probe_cmd->callback([pp, probe_out, probe_fm] {
        if (!probe_fm->empty()) {
            rerun("probe-column", *probe_fm, *probe_out);
            return;
        }
        RunOutput r = build_probe(*pp);
        emit(r.table, r.manifest, *probe_out);
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Fast self-checks, PASS/FAIL per line");
    verify_cmd->callback([&status] { status = run_verify(); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "rsktraj: error: " << e.what() << "\n";
        return 1;
    }
    return status;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace rsktraj::cli
