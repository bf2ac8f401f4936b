#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsktraj/csv.hpp"
#include "rsktraj/manifest.hpp"

namespace rsktraj::cli {

// Parameter records for the data-emitting subcommands. Each serializes to
// JSON losslessly; the manifest stores exactly this record (never the
// output path, so a manifest re-run can target any location).
struct CurveParams {
    std::string what = "G";  // "G": columns x,u,v,Gx,Gy. "H": columns T,Hx,Hy.
    double lo = 0.0;
    double hi = 1.0;
    std::size_t points = 101;

    nlohmann::json to_json() const;
    static CurveParams from_json(const nlohmann::json& j);
};

struct TrajectoryParams {
    std::size_t n = 100;
    double w = 0.5;
    double t_max = 3.0;
    std::uint64_t seed = 0;
    std::size_t stride = 1;

    nlohmann::json to_json() const;
    static TrajectoryParams from_json(const nlohmann::json& j);
};

struct ConvergeParams {
    std::vector<std::size_t> n_list = {100, 400, 1600};
    std::size_t trials = 50;
    double w = 0.5;
    double t_max = 3.0;
    double eps = 0.5;
    std::uint64_t seed = 0;
    std::size_t grid_points = 21;

    nlohmann::json to_json() const;
    static ConvergeParams from_json(const nlohmann::json& j);
};

struct AsymptParams {
    double t_min = 4.0;
    double t_max = 64.0;
    std::size_t points = 25;  // geometric grid from t_min to t_max

    nlohmann::json to_json() const;
    static AsymptParams from_json(const nlohmann::json& j);
};

struct ProbeParams {
    std::size_t n = 30;
    double w = 0.5;
    double t = 1.0;
    std::size_t trials = 100;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
    static ProbeParams from_json(const nlohmann::json& j);
};

// Table builders: pure functions of the parameter records, so a manifest
// re-run reproduces the bytes. Invalid parameters throw std::invalid_argument
// with the violated constraint named.
csv::Table curve_table(const CurveParams& p);
csv::Table trajectory_table(const TrajectoryParams& p);
csv::Table converge_table(const ConvergeParams& p);
csv::Table asympt_table(const AsymptParams& p);
csv::Table probe_table(const ProbeParams& p);

RunManifest make_manifest(const std::string& subcommand, nlohmann::json parameters,
                          std::uint64_t master_seed, const std::string& prng,
                          nlohmann::json grid);

// Writes the table to out_path and the manifest to out_path + ".manifest.json",
// both atomically.
void emit(const csv::Table& table, const RunManifest& manifest, const std::string& out_path);

// Rebuilds and emits the table described by a manifest; throws if the
// manifest's subcommand is not a table-emitting one.
csv::Table run_from_manifest(const RunManifest& manifest, const std::string& out_path);

// Full CLI: args exclude the program name. Returns the process exit status.
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

}  // namespace rsktraj::cli
