#include "pinchlab/grassmann.hpp"

#include "pinchlab/errors.hpp"
#include "pinchlab/homology.hpp"

namespace pinchlab::grassmann {

GrPair::GrPair(gf2::Subspace a1_in, gf2::Subspace a2_in)
    : a1(std::move(a1_in)), a2(std::move(a2_in)) {
    if (a1.ambient_dim() != a2.ambient_dim())
        throw StructuralError("GrPair: ambient dimension mismatch");
    rank_i = gf2::restricted_form_rank(gf2::Matrix::identity(a1.ambient_dim()), a1, a2);
}

std::string GrPair::to_string() const {
    return "(" + a1.to_string() + "," + a2.to_string() + ")";
}

std::strong_ordering GrPair::operator<=>(const GrPair& o) const {
    if (auto c = a1 <=> o.a1; c != 0) return c;
    return a2 <=> o.a2;
}

poset::FinitePoset build_gr(int n) {
    if (n < 1) throw PreconditionError("build_gr: n must be positive");
    if (n > 4) throw CapacityError("build_gr: n > 4 exceeds the poset cap");
    auto subspaces = gf2::enumerate_subspaces(n);
    std::vector<std::string> labels;
    labels.reserve(subspaces.size());
    for (const auto& s : subspaces) labels.push_back(s.to_string());
    return poset::FinitePoset(std::move(labels), [&](int i, int j) {
        return subspaces[j].contains(subspaces[i]);
    });
}

GrRangePoset build_gr_range(int n, int n1, int n2) {
    if (!(0 <= n1 && n1 <= n2 && n2 <= n))
        throw PreconditionError("build_gr_range: need 0 <= n1 <= n2 <= n");
    if (n > 3) throw CapacityError("build_gr_range: n > 3 exceeds the pair-poset cap");

    auto subspaces = gf2::enumerate_subspaces(n);
    GrRangePoset result;
    result.n = n;
    result.n1 = n1;
    result.n2 = n2;
    for (const auto& s1 : subspaces)
        for (const auto& s2 : subspaces) {
            GrPair pair(s1, s2);
            if (pair.rank_i >= n1 && pair.rank_i <= n2) result.elements.push_back(std::move(pair));
        }

    std::vector<std::string> labels;
    labels.reserve(result.elements.size());
    for (const auto& p : result.elements) labels.push_back(p.to_string());
    result.order = poset::FinitePoset(std::move(labels), [&](int i, int j) {
        return result.elements[i].leq(result.elements[j]);
    });
    return result;
}

std::vector<int> gr_range_homology(int n, int n1, int n2) {
    GrRangePoset gr = build_gr_range(n, n1, n2);
    auto complex = poset::order_complex(gr.order, poset::max_chain_length(gr.order) - 1);
    return homology::betti_numbers(complex);
}

}  // namespace pinchlab::grassmann
