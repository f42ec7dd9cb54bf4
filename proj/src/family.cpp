#include "pinchlab/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pinchlab/errors.hpp"

namespace pinchlab::family {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Chart {
    double a0, a1, a2, a3, a4;  // coordinates after dividing by a5
    double r;                   // a1^2 + a2^2
    double dev;                 // ||(a0 - a1 a2, a3, a4)||
};

std::optional<Chart> chart_of(const ParamPoint& p) {
    if (p.a[5] == 0.0) return std::nullopt;
    Chart c{};
    c.a0 = p.a[0] / p.a[5];
    c.a1 = p.a[1] / p.a[5];
    c.a2 = p.a[2] / p.a[5];
    c.a3 = p.a[3] / p.a[5];
    c.a4 = p.a[4] / p.a[5];
    c.r = c.a1 * c.a1 + c.a2 * c.a2;
    const double d0 = c.a0 - c.a1 * c.a2;
    c.dev = std::sqrt(d0 * d0 + c.a3 * c.a3 + c.a4 * c.a4);
    return c;
}

// psi is 1 on the A1 side of the shell and 0 at the outer boundary; constant
// in x across the inner tube.
double psi_const(const Chart& c, const RegionProfile& profile) {
    const double e1 = profile.eps1(c.r);
    if (e1 <= 0.0) return 0.0;
    return std::clamp(2.0 - c.dev / e1, 0.0, 1.0);
}

}  // namespace

ParamPoint::ParamPoint(std::array<double, 6> a_in, std::vector<double> b_in, int g_in)
    : a(a_in), b(std::move(b_in)), g(g_in) {
    if (g < 1) throw PreconditionError("ParamPoint: g must be >= 1");
    if (static_cast<int>(b.size()) != 2 * g - 2)
        throw PreconditionError("ParamPoint: b must have length 2g-2");
    double norm = 0.0;
    for (double v : a) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) throw PreconditionError("ParamPoint: zero projective vector");
    for (double& v : a) v /= norm;
    for (double v : a) {
        if (v != 0.0) {
            if (v < 0.0)
                for (double& w : a) w = -w;
            break;
        }
    }
    if (b_norm() > 1.0 + 1e-12) throw PreconditionError("ParamPoint: ||b|| must be <= 1");
}

ParamPoint ParamPoint::o1(int g) {
    std::array<double, 6> a{0, 0, 0, 0, 0, 1};
    return ParamPoint(a, std::vector<double>(2 * g - 2, 0.0), g);
}

double ParamPoint::b_norm() const {
    double s = 0.0;
    for (double v : b) s += v * v;
    return std::sqrt(s);
}

std::string region_name(Region r) {
    switch (r) {
        case Region::ASing: return "A_sing";
        case Region::A1: return "A1";
        case Region::A2: return "A2";
        case Region::Outside: return "Outside";
    }
    return "?";
}

RegionTag classify(const ParamPoint& p, const RegionProfile& profile, double sing_tol) {
    auto c = chart_of(p);
    if (!c) return {Region::Outside, 0.0, 0.0};
    RegionTag tag{Region::Outside, c->a1, c->a2};
    if (c->r >= 1.0) return tag;
    if (c->dev <= sing_tol)
        tag.region = Region::ASing;
    else if (c->dev <= profile.eps1(c->r))
        tag.region = Region::A1;
    else if (c->dev <= 2.0 * profile.eps1(c->r))
        tag.region = Region::A2;
    return tag;
}

trig::TrigPoly build_F(const ParamPoint& p, const RegionProfile& profile) {
    RegionTag tag = classify(p, profile);
    if (tag.region != Region::ASing && tag.region != Region::A1)
        throw DomainError("build_F: parameter lies outside A_sing and A1");
    auto c = chart_of(p);

    trig::TrigPoly f;
    f.terms.assign(p.g + 1, {0.0, 0.0});
    f.s0 = c->a0 - c->a1 * c->a2;
    const double radial = std::sqrt(1.0 - c->r);
    f.terms[0] = {radial * c->a3, radial * c->a4};

    const double bracket_scale =
        profile.eps2(c->r) * (profile.eps1(c->r) - c->dev);
    const double bnorm = p.b_norm();
    for (int k = 2; k <= p.g; ++k) {
        f.terms[k - 1].first = bracket_scale * p.b[2 * (k - 2)];
        f.terms[k - 1].second = bracket_scale * p.b[2 * (k - 2) + 1];
    }
    f.terms[p.g].first = bracket_scale * (1.0 - bnorm);
    return f;
}

int genus_map(const ParamPoint& p, const RegionProfile& profile, double tol) {
    RegionTag tag = classify(p, profile);
    if (tag.region != Region::ASing && tag.region != Region::A1) return 0;
    trig::TrigPoly f = build_F(p, profile);
    return trig::genus_of(f, tol);
}

std::vector<double> normalize_T(const ParamPoint& p, const RegionProfile& profile) {
    auto c = chart_of(p);
    if (!c || std::fabs(c->a1) > 1e-12 || std::fabs(c->a2) > 1e-12)
        throw PreconditionError("normalize_T: requires the chart a1 = a2 = 0");
    RegionTag tag = classify(p, profile);
    if (tag.region != Region::ASing && tag.region != Region::A1)
        throw DomainError("normalize_T: parameter lies outside A_sing and A1");

    trig::TrigPoly f = build_F(p, profile);
    const double lead = f.terms.back().first;
    if (lead <= 0.0)
        throw BoundaryError("normalize_T: the cos((g+1)a) coefficient vanishes on the boundary");
    std::vector<double> coeffs = f.coeffs();
    std::vector<double> s(coeffs.begin(), coeffs.end() - 2);  // drop the top pair
    for (double& v : s) v /= lead;
    return s;
}

SweepRow evaluate(const ParamPoint& p, const RegionProfile& profile, double tol) {
    SweepRow row{p, region_name(classify(p, profile).region), 0};
    row.genus = genus_map(p, profile, tol);
    return row;
}

ProbeResult a2_probe(const ParamPoint& a, const RegionProfile& profile, int grid_alpha,
                            int max_iters) {
    RegionTag tag = classify(a, profile);
    if (tag.region != Region::A2) throw DomainError("a2_probe: parameter must lie in A2");
    auto c = chart_of(a);
    const double psi = psi_const(*c, profile);
    const double sqrt_r1 = std::sqrt(1.0 - c->r);

    // varsigma(x) = (1 - psi) sqrt(1 - |x|^2) + psi sqrt(1 - r); its gradient
    // carries the whole x-dependence.
    auto grad_varsigma = [&](double x1, double x2) {
        const double w = std::sqrt(std::max(1.0 - x1 * x1 - x2 * x2, 1e-12));
        return std::array<double, 2>{-(1.0 - psi) * x1 / w, -(1.0 - psi) * x2 / w};
    };
    auto varsigma = [&](double x1, double x2) {
        const double w = std::sqrt(std::max(1.0 - x1 * x1 - x2 * x2, 0.0));
        return (1.0 - psi) * w + psi * sqrt_r1;
    };

    ProbeResult result;
    const double denom = std::fabs(c->a3) + std::fabs(c->a4);
    std::vector<double> values(grid_alpha, 0.0);
    const int sample_stride = std::max(grid_alpha / 64, 1);

    for (int k = 0; k < grid_alpha; ++k) {
        const double alpha = kTwoPi * k / grid_alpha;
        const double q = c->a3 * std::cos(alpha) + c->a4 * std::sin(alpha);

        // Fixed point of y -> -swap(q grad_varsigma(x(y))): equivalent to
        // grad_x F_a = 0 in the disc slice.
        double y1 = 0.0, y2 = 0.0;
        double prev_step = std::numeric_limits<double>::infinity();
        int iter = 0;
        for (; iter < max_iters; ++iter) {
            auto gs = grad_varsigma(-c->a2 + y1, -c->a1 + y2);
            const double ny1 = -q * gs[1];
            const double ny2 = -q * gs[0];
            const double step = std::hypot(ny1 - y1, ny2 - y2);
            y1 = ny1;
            y2 = ny2;
            if (step < 1e-10) break;
            if (step > prev_step * (1.0 + 1e-9))
                throw ProfileTooLargeError(
                    "a2_probe: iteration is not contracting; shrink eps1");
            prev_step = step;
        }
        if (iter >= max_iters) {
            result.converged = false;
            continue;
        }
        result.max_iterations_used = std::max(result.max_iterations_used, iter + 1);

        const double x1 = -c->a2 + y1, x2 = -c->a1 + y2;
        result.max_displacement = std::max(result.max_displacement, std::hypot(y1, y2));
        values[k] = y1 * y2 + (c->a0 - c->a1 * c->a2) + varsigma(x1, x2) * q;
        if (k % sample_stride == 0) result.curve_sample.push_back({alpha, x1, x2});
    }

    int changes = 0;
    int last_sign = 0;
    int first_sign = 0;
    for (int k = 0; k < grid_alpha; ++k) {
        int s = values[k] > 0 ? 1 : (values[k] < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last_sign != 0 && s != last_sign) ++changes;
        if (first_sign == 0) first_sign = s;
        last_sign = s;
    }
    if (last_sign != 0 && first_sign != 0 && last_sign != first_sign) ++changes;  // wrap
    result.sign_changes = changes;
    result.displacement_ratio = denom > 0 ? result.max_displacement / denom : 0.0;
    return result;
}

ParamPoint sample_a2(std::mt19937_64& rng, const RegionProfile& profile, int g) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    double a1, a2;
    do {
        a1 = 0.9 * unit(rng);
        a2 = 0.9 * unit(rng);
    } while (a1 * a1 + a2 * a2 > 0.81);
    const double r = a1 * a1 + a2 * a2;

    // direction on S^2 for (a0 - a1 a2, a3, a4), radius in the A2 shell
    double d0, d3, d4, norm;
    do {
        d0 = unit(rng);
        d3 = unit(rng);
        d4 = unit(rng);
        norm = std::sqrt(d0 * d0 + d3 * d3 + d4 * d4);
    } while (norm < 1e-3 || norm > 1.0);
    const double rho = profile.eps1(r) * (1.0 + u01(rng));  // in [eps1, 2 eps1]

    std::array<double, 6> a{a1 * a2 + rho * d0 / norm, a1, a2,
                            rho * d3 / norm, rho * d4 / norm, 1.0};
    return ParamPoint(a, std::vector<double>(2 * g - 2, 0.0), g);
}

}  // namespace pinchlab::family
