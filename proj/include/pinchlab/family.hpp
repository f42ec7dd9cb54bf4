#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pinchlab/trigpoly.hpp"

namespace pinchlab::family {

// The shrinking-neighborhood profile (eta, eps1, eps2). The defaults are
// artifact conventions: the construction only needs them small, with eps1
// controlled by eta and eps2 by eps1.
struct RegionProfile {
    double eta_scale = 0.05;
    double eps1_scale = 0.01;
    double eps2_const = 1e-3;

    double eta(double r) const { return eta_scale * (1.0 - r); }
    double eps1(double r) const { return eps1_scale * eta(r) * eta(r); }
    double eps2(double /*r*/) const { return eps2_const; }
};

// A family parameter: a projective 6-vector stored as a unit vector with the
// first nonzero coordinate positive, and a point of the closed ball B^{2g-2}
// listed as (b_2, b'_2, ..., b_g, b'_g).
struct ParamPoint {
    std::array<double, 6> a{};
    std::vector<double> b;
    int g = 1;

    ParamPoint(std::array<double, 6> a, std::vector<double> b, int g);
    static ParamPoint o1(int g);  // the tip [0:...:0:1] with b = 0
    double b_norm() const;
};

enum class Region { ASing, A1, A2, Outside };
std::string region_name(Region r);

struct RegionTag {
    Region region = Region::Outside;
    double a1 = 0.0, a2 = 0.0;  // disc coordinates, valid unless Outside by chart
};

// Region of the parameter: A_sing within sing_tol of the exactly-singular
// locus, else by the eps1 shells. Points on the a5 = 0 chart are Outside.
RegionTag classify(const ParamPoint& p, const RegionProfile& profile, double sing_tol = 1e-12);

// The defining trigonometric polynomial F_{(a,b)} of the member at p, valid
// on A_sing and A1 (DomainError elsewhere): constant and degree-1 parts from
// the chart coordinates plus the eps2-scaled handle bracket of degree g+1.
trig::TrigPoly build_F(const ParamPoint& p, const RegionProfile& profile);

// 0 off A_sing/A1, else the root-counting genus of F_{(a,b)}.
int genus_map(const ParamPoint& p, const RegionProfile& profile, double tol);

// Coefficients of the normalized polynomial f_s with F_{(a,b)} = c f_s for a
// positive factor c, on the chart a1 = a2 = 0. Throws BoundaryError when the
// cos((g+1) a) coefficient vanishes.
std::vector<double> normalize_T(const ParamPoint& p, const RegionProfile& profile);

// One row of a parameter sweep.
struct SweepRow {
    ParamPoint p;
    std::string region;
    int genus = 0;
};
SweepRow evaluate(const ParamPoint& p, const RegionProfile& profile, double tol);

// The scalar reduction of the A2 annulus: for each grid angle, iterate the
// contraction to the critical point x_a(alpha) of the defining function in
// the disc slice, then count sign changes of f_a(alpha) = F_a(x_a(alpha), alpha)
// around the circle. The interpolation weight psi is constant on the inner
// tube, interpolating 1 -> 0 across the A2 shell.
struct ProbeResult {
    bool converged = true;
    int max_iterations_used = 0;
    int sign_changes = 0;
    double max_displacement = 0.0;        // max over alpha of |x_a(alpha) - (-a2, -a1)|
    double displacement_ratio = 0.0;      // max displacement / (|a3| + |a4|)
    std::vector<std::array<double, 3>> curve_sample;  // thinned (alpha, x1, x2)
};

ProbeResult a2_probe(const ParamPoint& a, const RegionProfile& profile, int grid_alpha,
                            int max_iters);

// A random parameter of the A2 shell (chart a5 = 1, radius of (a1, a2) <= 0.9).
ParamPoint sample_a2(std::mt19937_64& rng, const RegionProfile& profile, int g);

}  // namespace pinchlab::family
