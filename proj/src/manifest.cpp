#include "rsktraj/manifest.hpp"

#include <stdexcept>

namespace rsktraj {

nlohmann::json RunManifest::to_json() const {
    return nlohmann::json{{"subcommand", subcommand}, {"parameters", parameters},
                          {"master_seed", master_seed}, {"prng", prng},
                          {"version", version},         {"grid", grid},
                          {"norm", norm}};
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
    RunManifest m;
    m.subcommand = j.at("subcommand").get<std::string>();
    m.parameters = j.at("parameters");
    m.master_seed = j.at("master_seed").get<std::uint64_t>();
    m.prng = j.at("prng").get<std::string>();
    m.version = j.at("version").get<std::string>();
    m.grid = j.at("grid");
    m.norm = j.at("norm").get<std::string>();
    return m;
}

std::string RunManifest::serialize() const { return to_json().dump(2) + "\n"; }

RunManifest RunManifest::deserialize(const std::string& text) {
    return from_json(nlohmann::json::parse(text));
}

nlohmann::json tableau_to_json(const Tableau& t) {
    return nlohmann::json{{"rows", t.rows()}};
}

Tableau tableau_from_json(const nlohmann::json& j) {
    auto rows = j.at("rows").get<std::vector<std::vector<double>>>();
    return Tableau(std::move(rows));
}

nlohmann::json permutation_to_json(const Permutation& p) { return nlohmann::json(p); }

Permutation permutation_from_json(const nlohmann::json& j) {
    auto p = j.get<Permutation>();
    if (!is_permutation(p)) throw std::invalid_argument("permutation_from_json: not a bijection");
    return p;
}

}  // namespace rsktraj
