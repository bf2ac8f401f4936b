#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "rsktraj/tableau.hpp"

namespace rsktraj {

inline constexpr const char* kArtifactVersion = "0.1.0";
inline constexpr const char* kNormId = "euclidean";

// Everything needed to reproduce an experiment bitwise: re-running a
// subcommand from its manifest yields byte-identical output files.
struct RunManifest {
    std::string subcommand;
    nlohmann::json parameters;  // full parameter set, output path excluded
    std::uint64_t master_seed = 0;
    std::string prng = "";
    std::string version = kArtifactVersion;
    nlohmann::json grid;  // grid choice, null when not applicable
    std::string norm = kNormId;

    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);

    std::string serialize() const;  // stable 2-space indentation
    static RunManifest deserialize(const std::string& text);
};

// External JSON forms: tableaux as {"rows": [[...],[...]]}, permutations
// as 1-based integer arrays.
nlohmann::json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);
nlohmann::json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& j);

}  // namespace rsktraj
