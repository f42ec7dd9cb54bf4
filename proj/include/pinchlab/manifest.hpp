#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "pinchlab/family.hpp"

namespace pinchlab::cli {

inline constexpr const char* kArtifactVersion = "pinchlab 0.1.0";

// Every output document embeds its manifest; identical manifests yield
// identical outputs (keys are emitted sorted). The wall clock is zeroed when
// PINCHLAB_FIXED_CLOCK is set, for byte-identical reruns.
struct RunManifest {
    std::string command_line;
    family::RegionProfile profile;
    std::map<std::string, double> tolerances;
    std::uint64_t seed = 0;
    double wall_clock_ms = 0.0;

    nlohmann::json to_json() const;
};

nlohmann::json profile_to_json(const family::RegionProfile& p);
family::RegionProfile profile_from_json(const nlohmann::json& j);
family::RegionProfile load_profile(const std::string& path);  // empty path -> defaults

bool fixed_clock();

}  // namespace pinchlab::cli
