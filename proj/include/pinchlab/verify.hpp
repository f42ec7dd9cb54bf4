#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pinchlab/poset.hpp"

namespace pinchlab::verify {

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    nlohmann::json details;
};

struct Options {
    int g_max = 3;  // >= 3 also runs the g = 3 checks
    std::uint64_t seed = 20250811;
};

int n_criteria();
CheckResult run_criterion(int idx, const Options& opt);  // idx in 1..n_criteria()
std::vector<CheckResult> run_all(const Options& opt);

// Independent oracles for criterion 12, kept apart from the library paths
// they cross-check.
namespace oracle {

// All addition-closed subsets of Z_2^n containing 0, as element masks.
std::vector<std::uint64_t> addition_closed_subsets(int n);  // n <= 4

// Betti numbers by dense boolean Gaussian elimination, no optimizations.
std::vector<int> betti_dense(const poset::SimplicialComplex& k);

}  // namespace oracle

}  // namespace pinchlab::verify
