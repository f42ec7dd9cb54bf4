#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pinchlab/poset.hpp"

namespace pinchlab::symprod {

// A configuration of n points on the circle whose angle sum is a multiple of
// 2pi. Angles are canonicalized: reduced mod 2pi and sorted ascending.
struct SymConfig {
    std::vector<double> angles;
    int n() const { return static_cast<int>(angles.size()); }
};

SymConfig make_config(std::vector<double> angles, double tol = 1e-9);

// The cyclic gap coordinates of a configuration: n non-negative reals summing
// to 2pi, with vanishing gaps marked. Gap i separates point i from point i+1
// (cyclically), starting at the smallest angle.
struct FacePattern {
    std::vector<double> gaps;
    std::vector<bool> zero;
    int n() const { return static_cast<int>(gaps.size()); }
};

// Consecutive gaps of the configuration; inverse of from_simplex_coords up to
// cyclic relabeling. Throws PreconditionError when the angle sum is not a
// multiple of 2pi within tol.
FacePattern to_simplex_coords(const SymConfig& c, double tol = 1e-9);

// Rebuilds the centered configuration s_1 = 0, s_{k+1} = s_k + r_k shifted by
// the mean. Throws PreconditionError on negative gaps or a bad gap sum.
SymConfig from_simplex_coords(const FacePattern& p);

// Face partial order under an aligned gap correspondence: c0 <= c1 iff every
// gap vanishing in c1 also vanishes in c0.
bool face_leq(const FacePattern& c0, const FacePattern& c1);

// A degeneration stratum of the n-point configuration: the set of collapsed
// cyclic gaps together with the merged multiplicity pattern it produces.
struct Face {
    std::vector<int> zero_set;      // collapsed gap indices, ascending
    std::vector<int> mult_pattern;  // cyclic cluster sizes, starting at point 0's cluster
    int n_odd = 0;                  // odd-multiplicity clusters of the merged configuration
    int genus = 0;                  // max(n_odd/2 - 1, 0)
    int dimension = 0;              // #distinct points - 1

    std::string zero_set_label(int n) const;
};

Face face_from_zero_set(int n, const std::vector<bool>& zero_gaps);

// Every subset of the n cyclic gaps marked zero (excluding the all-zero one),
// filtered by the predicate. n <= 10.
std::vector<Face> enumerate_faces(int n, const std::function<bool(const Face&)>& pred);

// The face poset of the given strata: F <= F' iff zero(F) contains zero(F').
poset::FinitePoset face_poset(int n, const std::vector<Face>& faces);

}  // namespace pinchlab::symprod
