#include "pinchlab/trigpoly.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "pinchlab/errors.hpp"

namespace pinchlab::trig {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // guard against fmod rounding
    return r;
}

struct Cluster {
    double re = 0.0;  // circular mean of members
    double im = 0.0;
    int mult = 0;
};

// Single-linkage clustering on the cylinder with linkage radius `radius`.
// Points carry multiplicities. Cluster means are multiplicity-weighted; the
// circular mean unwraps members around the first representative.
std::vector<Cluster> cluster_points(const std::vector<RootPoint>& pts, double radius) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = std::hypot(circ_dist(pts[i].re, pts[j].re), pts[i].im - pts[j].im);
            if (d < radius) parent[find(i)] = find(j);
        }

    std::vector<Cluster> clusters;
    std::vector<int> root_to_cluster(n, -1);
    std::vector<double> anchor(n, 0.0);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (root_to_cluster[r] < 0) {
            root_to_cluster[r] = static_cast<int>(clusters.size());
            clusters.push_back({});
            anchor[r] = pts[i].re;
        }
        Cluster& c = clusters[root_to_cluster[r]];
        double re = pts[i].re;
        // unwrap toward the anchor so that means near 0/2pi are stable
        if (re - anchor[r] > std::numbers::pi) re -= kTwoPi;
        if (anchor[r] - re > std::numbers::pi) re += kTwoPi;
        c.re += re * pts[i].mult;
        c.im += pts[i].im * pts[i].mult;
        c.mult += pts[i].mult;
    }
    for (auto& c : clusters) {
        c.re = wrap_angle(c.re / c.mult);
        c.im /= c.mult;
    }
    std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return clusters;
}

}  // namespace

double circ_dist(double a, double b) {
    double d = std::fabs(wrap_angle(a) - wrap_angle(b));
    return std::min(d, kTwoPi - d);
}

double TrigPoly::eval(double alpha) const {
    double v = s0;
    for (int k = 1; k <= degree(); ++k)
        v += terms[k - 1].first * std::cos(k * alpha) + terms[k - 1].second * std::sin(k * alpha);
    return v;
}

std::complex<double> TrigPoly::eval(std::complex<double> alpha) const {
    std::complex<double> v = s0;
    for (int k = 1; k <= degree(); ++k)
        v += terms[k - 1].first * std::cos(double(k) * alpha) +
             terms[k - 1].second * std::sin(double(k) * alpha);
    return v;
}

TrigPoly TrigPoly::from_coeffs(const std::vector<double>& coeffs) {
    if (coeffs.empty() || coeffs.size() % 2 == 0)
        throw StructuralError("TrigPoly::from_coeffs: length must be odd (s0, s1, s1', ...)");
    TrigPoly f;
    f.s0 = coeffs[0];
    for (std::size_t i = 1; i + 1 < coeffs.size(); i += 2)
        f.terms.emplace_back(coeffs[i], coeffs[i + 1]);
    return f;
}

std::vector<double> TrigPoly::coeffs() const {
    std::vector<double> out{s0};
    for (const auto& [c, s] : terms) {
        out.push_back(c);
        out.push_back(s);
    }
    return out;
}

TrigPoly TrigPoly::monic_cos(const std::vector<double>& s) {
    if (s.size() % 2 == 0)
        throw StructuralError("TrigPoly::monic_cos: coefficient vector must have odd length");
    TrigPoly f = from_coeffs(s);
    f.terms.emplace_back(1.0, 0.0);
    return f;
}

double TrigPoly::coeff_norm() const {
    double acc = s0 * s0;
    for (const auto& [c, s] : terms) acc += c * c + s * s;
    return std::sqrt(acc);
}

TrigPoly TrigPoly::trimmed(double abs_tol) const {
    TrigPoly f = *this;
    while (!f.terms.empty() && std::hypot(f.terms.back().first, f.terms.back().second) <= abs_tol)
        f.terms.pop_back();
    return f;
}

int RootConfig::total_multiplicity() const {
    int total = 0;
    for (const auto& p : points) total += p.mult;
    return total;
}

RootConfig roots(const TrigPoly& f, double tol) {
    const int deg = f.degree();
    if (deg == 0) {
        if (std::fabs(f.s0) <= 0.0)
            throw DomainError("roots: the zero polynomial has no root configuration");
        return {};
    }
    const double lead = std::hypot(f.terms.back().first, f.terms.back().second);
    if (lead <= 1e-12 * std::max(1.0, f.coeff_norm()))
        throw DegreeDropError("roots: leading coefficient pair vanished; lower the degree");

    // Laurent coefficients: c_{+k} = (s_k - i s'_k)/2, c_{-k} = (s_k + i s'_k)/2.
    // p(z) = z^deg f has degree 2 deg.
    using cd = std::complex<double>;
    std::vector<cd> p(2 * deg + 1, cd(0.0, 0.0));
    p[deg] = f.s0;
    for (int k = 1; k <= deg; ++k) {
        const auto [sk, spk] = f.terms[k - 1];
        p[deg + k] = cd(sk / 2.0, -spk / 2.0);
        p[deg - k] = cd(sk / 2.0, +spk / 2.0);
    }
    const int n = 2 * deg;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -p[i] / p[n];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw DomainError("roots: companion eigenvalue computation failed");

    std::vector<RootPoint> raw;
    raw.reserve(n);
    for (int i = 0; i < n; ++i) {
        cd z = solver.eigenvalues()(i);
        // alpha = -i log z, so Re alpha = arg z and Im alpha = -log |z|.
        raw.push_back({wrap_angle(std::arg(z)), -std::log(std::abs(z)), 1});
    }

    RootConfig cfg;
    for (const auto& c : cluster_points(raw, 2.0 * tol)) cfg.points.push_back({c.re, c.im, c.mult});
    return cfg;
}

int n_odd(const RootConfig& cfg, double tol) {
    auto clusters = cluster_points(cfg.points, 2.0 * tol);
    int count = 0;
    for (const auto& c : clusters)
        if (std::fabs(c.im) < tol && (c.mult % 2) == 1) ++count;
    return count;
}

int genus_of(const TrigPoly& f, double tol) {
    TrigPoly ft = f.trimmed(1e-12 * std::max(1.0, f.coeff_norm()));
    if (ft.degree() == 0) {
        if (ft.s0 == 0.0) throw DomainError("genus_of: the zero polynomial is degenerate");
        return 0;
    }
    int odd = n_odd(roots(ft, tol), tol);
    return std::max(odd / 2 - 1, 0);
}

bool conjugate_pair_check(const RootConfig& cfg, double tol) {
    std::vector<RootPoint> pts = cfg.points;
    std::vector<bool> used(pts.size(), false);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (used[i] || std::fabs(pts[i].im) <= tol) continue;
        bool matched = false;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i || used[j]) continue;
            if (pts[j].mult == pts[i].mult &&
                std::hypot(circ_dist(pts[i].re, pts[j].re), pts[i].im + pts[j].im) <= 2.0 * tol) {
                used[i] = used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

bool root_sum_check(const RootConfig& cfg, double tol) {
    double sum_re = 0.0, sum_im = 0.0, scale = 1.0;
    for (const auto& p : cfg.points) {
        sum_re += p.mult * p.re;
        sum_im += p.mult * p.im;
        scale += p.mult * (std::fabs(p.re) + std::fabs(p.im));
    }
    const double frac = std::fabs(sum_re - kTwoPi * std::round(sum_re / kTwoPi));
    return frac <= tol * scale && std::fabs(sum_im) <= tol * scale;
}

RootConfig retract(const RootConfig& cfg, double t) {
    const double cap = std::atan((1.0 - t) * std::numbers::pi / 2.0);
    RootConfig out;
    out.points.reserve(cfg.points.size());
    for (const auto& p : cfg.points) {
        double im = (p.im >= 0 ? 1.0 : -1.0) * std::min(std::fabs(p.im), cap);
        out.points.push_back({p.re, im + 0.0, p.mult});  // normalizes -0
    }
    return out;
}

bool in_omega(const std::vector<double>& s, double tol) {
    RootConfig cfg = roots(TrigPoly::monic_cos(s), tol);
    for (const auto& p : cfg.points)
        if (std::fabs(p.im) >= tol) return false;
    return true;
}

}  // namespace pinchlab::trig
