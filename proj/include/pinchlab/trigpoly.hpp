#pragma once

#include <complex>
#include <vector>

namespace pinchlab::trig {

// A real-coefficient trigonometric polynomial
//   f(a) = s0 + sum_{k=1}^{deg} (s_k cos ka + s'_k sin ka),
// viewed as a 2pi-periodic entire function of a complex angle.
struct TrigPoly {
    double s0 = 0.0;
    std::vector<std::pair<double, double>> terms;  // (s_k, s'_k) for k = 1..deg

    int degree() const { return static_cast<int>(terms.size()); }
    double eval(double alpha) const;
    std::complex<double> eval(std::complex<double> alpha) const;

    // Flat coefficient layout [s0, s1, s1', s2, s2', ...]; length 1 + 2 deg.
    static TrigPoly from_coeffs(const std::vector<double>& coeffs);
    std::vector<double> coeffs() const;

    // Coefficient vector s (length 2n - 1) completed with the monic cos(n a) top term.
    static TrigPoly monic_cos(const std::vector<double>& s);

    double coeff_norm() const;  // sqrt of the coefficient sum of squares

    // Drops top terms whose coefficient pair is below abs_tol in magnitude.
    TrigPoly trimmed(double abs_tol) const;
};

// A point of (R/2piZ) x iR with multiplicity. re lives in [0, 2pi).
struct RootPoint {
    double re = 0.0;
    double im = 0.0;
    int mult = 1;
};

// A multiset of 2 deg root points of a trigonometric polynomial.
struct RootConfig {
    std::vector<RootPoint> points;
    int total_multiplicity() const;
};

// Distance of two angles along the circle.
double circ_dist(double a, double b);

// All 2 deg roots via the substitution z = e^{ia}: the Laurent polynomial
// becomes a degree-2 deg polynomial whose roots are companion-matrix
// eigenvalues; back-substitution gives alpha = -i log z. Roots within 2 tol of
// each other (cylinder metric) are clustered into multiplicities.
// Throws DegreeDropError when the leading coefficient pair vanishes.
RootConfig roots(const TrigPoly& f, double tol);

// Number of real points (|Im| < tol) of odd multiplicity; recluster first so
// that conjugate pairs that have landed on the axis merge. Even for
// real-coefficient inputs.
int n_odd(const RootConfig& cfg, double tol);

// max(n_odd / 2 - 1, 0).
int genus_of(const TrigPoly& f, double tol);

// The multiset is invariant under complex conjugation within tol.
bool conjugate_pair_check(const RootConfig& cfg, double tol);

// Sum of roots is in 2 pi Z within (relative) tol, imaginary parts cancelling.
bool root_sum_check(const RootConfig& cfg, double tol);

// Pushes every point toward the real axis, changing only imaginary parts:
//   w(t) = Re w + i sign(Im w) min{ |Im w|, atan((1 - t) pi / 2) }.
// At t = 1 all points are real; conjugate symmetry is preserved.
RootConfig retract(const RootConfig& cfg, double t);

// Membership in Omega: all 2n roots of the monic-cosine polynomial f_s real.
bool in_omega(const std::vector<double>& s, double tol);

}  // namespace pinchlab::trig
