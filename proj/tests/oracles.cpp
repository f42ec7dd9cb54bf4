#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace pinchlab::testing {

trig::TrigPoly poly_from_roots(const std::vector<std::complex<double>>& alphas) {
    using cd = std::complex<double>;
    if (alphas.size() % 2 != 0) throw std::invalid_argument("need an even number of roots");
    const int n = static_cast<int>(alphas.size()) / 2;

    std::vector<cd> p{1.0};
    for (cd alpha : alphas) {
        const cd z = std::exp(cd(0.0, 1.0) * alpha);
        std::vector<cd> next(p.size() + 1, cd(0.0));
        for (std::size_t k = 0; k < p.size(); ++k) {
            next[k + 1] += p[k];
            next[k] -= z * p[k];
        }
        p = std::move(next);
    }

    // c_k = p[k + n]; rotate so that conj(c_{-k}) = c_k.
    auto c = [&](int k) { return p[k + n]; };
    int k0 = 0;
    for (int k = -n; k <= n; ++k)
        if (std::abs(c(k)) > std::abs(c(k0))) k0 = k;
    const cd mu = std::conj(c(-k0)) / c(k0);
    const cd lambda = std::exp(cd(0.0, std::arg(mu) / 2.0));

    auto real_of = [](cd v) {
        if (std::abs(v.imag()) > 1e-8 * (1.0 + std::abs(v)))
            throw std::runtime_error("poly_from_roots: roots were not conjugate-symmetric");
        return v.real();
    };

    trig::TrigPoly f;
    f.s0 = real_of(lambda * c(0));
    for (int k = 1; k <= n; ++k) {
        const cd ck = lambda * c(k), cmk = lambda * c(-k);
        f.terms.emplace_back(real_of(ck + cmk), real_of(cd(0.0, 1.0) * (ck - cmk)));
    }
    const double lead = std::hypot(f.terms.back().first, f.terms.back().second);
    f.s0 /= lead;
    for (auto& [cc, ss] : f.terms) {
        cc /= lead;
        ss /= lead;
    }
    return f;
}

std::vector<std::vector<int>> brute_chains(const poset::FinitePoset& p) {
    const int n = p.size();
    if (n > 20) throw std::invalid_argument("brute_chains: poset too large");
    std::vector<std::vector<int>> chains;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) members.push_back(i);
        bool total = true;
        for (std::size_t i = 0; i < members.size() && total; ++i)
            for (std::size_t j = i + 1; j < members.size() && total; ++j)
                if (!p.leq(members[i], members[j]) && !p.leq(members[j], members[i])) total = false;
        if (total) chains.push_back(members);
    }
    return chains;
}

int brute_restricted_rank(const gf2::Matrix& form, const gf2::Subspace& a1,
                          const gf2::Subspace& a2) {
    auto pair = [&](const gf2::BitVec& u, const gf2::BitVec& v) {
        bool acc = false;
        for (int r = 0; r < form.n_rows(); ++r)
            if (u.get(r)) acc ^= form.rows[r].dot(v);
        return acc;
    };
    int kernel = 0;
    for (const auto& a : a1.elements()) {
        bool in_kernel = true;
        for (const auto& b : a2.elements())
            if (pair(a, b)) {
                in_kernel = false;
                break;
            }
        kernel += in_kernel;
    }
    int log2k = 0;
    while ((1 << log2k) < kernel) ++log2k;
    return a1.dim() - log2k;
}

}  // namespace pinchlab::testing
