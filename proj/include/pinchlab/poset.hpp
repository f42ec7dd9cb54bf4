#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "pinchlab/gf2.hpp"

namespace pinchlab::poset {

// A finite partially ordered set, i.e. a finite T0 Alexandroff space. The
// relation is validated on construction (reflexive, antisymmetric, transitive)
// and stored as a closed table of up-set bitmasks.
class FinitePoset {
  public:
    FinitePoset() = default;
    FinitePoset(std::vector<std::string> labels, const std::function<bool(int, int)>& leq);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[i]; }
    int index_of(const std::string& label) const;  // lookup error if unknown
    bool leq(int i, int j) const;

    // The minimal open set U_x = { y : x <= y }, as element indices.
    std::vector<int> up_set(int x) const;
    std::vector<int> up_set(const std::string& label) const;

    FinitePoset induced(const std::vector<int>& subset) const;

    // Covering pairs (i, j): i < j with nothing strictly between.
    std::vector<std::pair<int, int>> hasse_covers() const;

  private:
    std::vector<std::string> labels_;
    std::vector<gf2::BitVec> up_;  // up_[i] has bit j set iff i <= j
};

// Element count of the longest chain.
int max_chain_length(const FinitePoset& p);

// An abstract simplicial complex on vertices 0..n_vertices-1. Simplexes are
// stored by dimension as sorted vertex lists. Order complexes of posets are
// one producer; explicit complexes can be built directly.
struct SimplicialComplex {
    int n_vertices = 0;
    std::vector<std::vector<std::vector<int>>> simplices;  // [dim][i] = sorted vertices

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
    std::size_t size() const;                // total simplex count
    std::vector<std::size_t> counts() const;  // per dimension
    bool contains(const std::vector<int>& simplex) const;

    // Throws StructuralError unless every face of every simplex is present.
    void validate_closed() const;

    void sort_canonical();  // sorts each dimension's list; required before contains()
};

std::size_t default_simplex_budget();  // 10^7, overridable via PINCHLAB_BUDGET

// All chains of the poset with at most max_dim + 1 elements. Throws
// CapacityError (with partial per-dimension statistics in the message) if the
// chain count exceeds the budget.
SimplicialComplex order_complex(const FinitePoset& p, int max_dim,
                                std::size_t budget = default_simplex_budget());

// True iff sigma ∪ {apex} is a simplex for every simplex sigma. Order
// complexes of up-sets are cones over their minimum.
bool is_cone_with_apex(const SimplicialComplex& k, int apex);

// Plain-text face list, one simplex per line, vertex indices ascending.
void write_face_list(std::ostream& os, const SimplicialComplex& k);

}  // namespace pinchlab::poset
