#pragma once

#include <vector>

#include "pinchlab/gf2.hpp"
#include "pinchlab/poset.hpp"

namespace pinchlab::grassmann {

// A pair of subspaces of Z_2^n with the rank of the standard bilinear form
// restricted to A1 + A2 cached at construction.
struct GrPair {
    gf2::Subspace a1, a2;
    int rank_i = 0;

    GrPair() = default;
    GrPair(gf2::Subspace a1, gf2::Subspace a2);

    // Componentwise inclusion; matches the embedding (A1, A2) -> A1 + A2.
    bool leq(const GrPair& o) const { return o.a1.contains(a1) && o.a2.contains(a2); }

    std::string to_string() const;
    bool operator==(const GrPair& o) const { return a1 == o.a1 && a2 == o.a2; }
    std::strong_ordering operator<=>(const GrPair& o) const;
};

// Gr(Z_2^n) under inclusion. Unique minimum (zero) and maximum (full). n <= 4.
poset::FinitePoset build_gr(int n);

// Gr^n[n1, n2]: pairs whose restricted-form rank lies in [n1, n2], ordered
// componentwise.
struct GrRangePoset {
    int n = 0, n1 = 0, n2 = 0;
    std::vector<GrPair> elements;  // index-aligned with the poset
    poset::FinitePoset order;
};

GrRangePoset build_gr_range(int n, int n1, int n2);  // 0 <= n1 <= n2 <= n <= 3

// Betti numbers of the order complex of Gr^n[n1, n2].
std::vector<int> gr_range_homology(int n, int n1, int n2);

}  // namespace pinchlab::grassmann
