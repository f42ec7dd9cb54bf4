#include "pinchlab/manifest.hpp"

#include <cstdlib>
#include <fstream>

#include "pinchlab/errors.hpp"

namespace pinchlab::cli {

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["command_line"] = command_line;
    j["profile"] = profile_to_json(profile);
    j["tolerances"] = tolerances;
    j["seed"] = seed;
    j["version"] = kArtifactVersion;
    j["wall_clock_ms"] = fixed_clock() ? 0.0 : wall_clock_ms;
    return j;
}

nlohmann::json profile_to_json(const family::RegionProfile& p) {
    return nlohmann::json{{"eta_scale", p.eta_scale},
                          {"eps1_scale", p.eps1_scale},
                          {"eps2_const", p.eps2_const}};
}

family::RegionProfile profile_from_json(const nlohmann::json& j) {
    family::RegionProfile p;
    p.eta_scale = j.value("eta_scale", p.eta_scale);
    p.eps1_scale = j.value("eps1_scale", p.eps1_scale);
    p.eps2_const = j.value("eps2_const", p.eps2_const);
    if (p.eta_scale <= 0 || p.eps1_scale <= 0 || p.eps2_const <= 0)
        throw PreconditionError("profile constants must be positive");
    return p;
}

family::RegionProfile load_profile(const std::string& path) {
    if (path.empty()) return {};
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open profile file: " + path);
    nlohmann::json j;
    in >> j;
    return profile_from_json(j);
}

bool fixed_clock() { return std::getenv("PINCHLAB_FIXED_CLOCK") != nullptr; }

}  // namespace pinchlab::cli
