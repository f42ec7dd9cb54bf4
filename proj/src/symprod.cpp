#include "pinchlab/symprod.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pinchlab/errors.hpp"

namespace pinchlab::symprod {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}
}  // namespace

SymConfig make_config(std::vector<double> angles, double tol) {
    if (angles.empty()) throw PreconditionError("SymConfig: needs at least one point");
    double sum = 0.0;
    for (double a : angles) sum += a;
    const double frac = std::fabs(sum - kTwoPi * std::round(sum / kTwoPi));
    if (frac > tol * static_cast<double>(angles.size()))
        throw PreconditionError("SymConfig: angle sum is not a multiple of 2pi");
    for (double& a : angles) a = wrap_angle(a);
    std::sort(angles.begin(), angles.end());
    return SymConfig{std::move(angles)};
}

FacePattern to_simplex_coords(const SymConfig& c, double tol) {
    double sum = 0.0;
    for (double a : c.angles) sum += a;
    const double frac = std::fabs(sum - kTwoPi * std::round(sum / kTwoPi));
    if (frac > tol * static_cast<double>(c.n()))
        throw PreconditionError("to_simplex_coords: angle sum is not a multiple of 2pi");

    FacePattern p;
    const int n = c.n();
    p.gaps.resize(n);
    p.zero.resize(n);
    for (int i = 0; i < n; ++i) {
        double g = (i + 1 < n ? c.angles[i + 1] : c.angles[0] + kTwoPi) - c.angles[i];
        p.gaps[i] = g;
        p.zero[i] = g <= tol;
    }
    return p;
}

SymConfig from_simplex_coords(const FacePattern& p) {
    const int n = p.n();
    if (n < 1) throw PreconditionError("from_simplex_coords: empty pattern");
    double sum = 0.0;
    for (double g : p.gaps) {
        if (g < 0) throw PreconditionError("from_simplex_coords: negative gap");
        sum += g;
    }
    if (std::fabs(sum - kTwoPi) > 1e-9 * n)
        throw PreconditionError("from_simplex_coords: gaps must sum to 2pi");

    std::vector<double> s(n, 0.0);
    for (int k = 1; k < n; ++k) s[k] = s[k - 1] + p.gaps[k - 1];
    double mean = 0.0;
    for (double v : s) mean += v;
    mean /= n;
    for (double& v : s) v = wrap_angle(v - mean);
    std::sort(s.begin(), s.end());
    return SymConfig{std::move(s)};
}

bool face_leq(const FacePattern& c0, const FacePattern& c1) {
    if (c0.n() != c1.n())
        throw StructuralError("face_leq: patterns are not aligned (different gap counts)");
    for (int i = 0; i < c1.n(); ++i)
        if (c1.zero[i] && !c0.zero[i]) return false;
    return true;
}

std::string Face::zero_set_label(int n) const {
    std::string s(n, '.');
    for (int i : zero_set) s[i] = 'x';
    return "{" + s + "}";
}

Face face_from_zero_set(int n, const std::vector<bool>& zero_gaps) {
    if (static_cast<int>(zero_gaps.size()) != n)
        throw StructuralError("face_from_zero_set: zero mask size mismatch");
    int zeros = 0;
    for (bool z : zero_gaps) zeros += z;
    if (zeros == n) throw PreconditionError("face_from_zero_set: all-zero pattern is forbidden");

    Face f;
    for (int i = 0; i < n; ++i)
        if (zero_gaps[i]) f.zero_set.push_back(i);

    // Clusters are the components of the cyclic point path under collapsed
    // gaps: gap i identifies points i and i+1.
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (int i = 0; i < n; ++i)
        if (zero_gaps[i]) parent[find(i)] = find((i + 1) % n);

    std::vector<int> sizes;
    std::vector<int> remap(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (remap[r] < 0) {
            remap[r] = static_cast<int>(sizes.size());
            sizes.push_back(0);
        }
        ++sizes[remap[r]];
    }
    f.mult_pattern = sizes;
    for (int sz : sizes)
        if (sz % 2 == 1) ++f.n_odd;
    f.genus = std::max(f.n_odd / 2 - 1, 0);
    f.dimension = static_cast<int>(sizes.size()) - 1;
    return f;
}

std::vector<Face> enumerate_faces(int n, const std::function<bool(const Face&)>& pred) {
    if (n < 1) throw PreconditionError("enumerate_faces: n must be positive");
    if (n > 10) throw CapacityError("enumerate_faces: n > 10 exceeds the enumeration cap");
    std::vector<Face> out;
    for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
        std::vector<bool> zero(n);
        for (int i = 0; i < n; ++i) zero[i] = (mask >> i) & 1;
        Face f = face_from_zero_set(n, zero);
        if (pred(f)) out.push_back(std::move(f));
    }
    return out;
}

poset::FinitePoset face_poset(int n, const std::vector<Face>& faces) {
    std::vector<unsigned> masks(faces.size(), 0);
    std::vector<std::string> labels;
    labels.reserve(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (int g : faces[i].zero_set) masks[i] |= 1u << g;
        labels.push_back(faces[i].zero_set_label(n));
    }
    return poset::FinitePoset(std::move(labels), [&](int i, int j) {
        // F_i <= F_j iff zero(F_i) contains zero(F_j)
        return (masks[i] & masks[j]) == masks[j];
    });
}

}  // namespace pinchlab::symprod
