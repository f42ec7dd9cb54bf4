#pragma once

#include <cstddef>
#include <vector>

#include "pinchlab/gf2.hpp"
#include "pinchlab/poset.hpp"

namespace pinchlab::homology {

// A Z2 chain in a fixed dimension, supported on simplex indices of the
// canonical (sorted) simplex list of that dimension.
struct Z2Cycle {
    int dim = 0;
    std::vector<int> support;
};

// Boundary maps of a simplicial complex over Z2, stored column-sparsely:
// column j of boundary_k lists the (k-1)-face indices of the j-th k-simplex.
// Construction checks downward closure and dd = 0.
class ChainComplexZ2 {
  public:
    static ChainComplexZ2 from_complex(const poset::SimplicialComplex& k);

    int dim() const { return static_cast<int>(n_cells_.size()) - 1; }
    std::size_t n_cells(int k) const;
    const std::vector<std::vector<int>>& boundary_columns(int k) const;

    // Dense boundary matrix, rows = (k-1)-simplexes, columns = k-simplexes.
    // Intended for small complexes and cross-checks.
    gf2::Matrix boundary_matrix(int k) const;

    bool is_cycle(const Z2Cycle& z) const;

  private:
    std::vector<std::size_t> n_cells_;
    std::vector<std::vector<std::vector<int>>> cols_;
};

// Rank over GF(2) of boundary_k (0 when out of range).
int boundary_rank(const ChainComplexZ2& cc, int k);

// b_k = dim ker d_k - dim im d_{k+1}; b_0 counts connected components.
std::vector<int> betti_numbers(const ChainComplexZ2& cc);
std::vector<int> betti_numbers(const poset::SimplicialComplex& k);

// As betti_numbers with b_0 decremented; all-zero for cones. Throws
// DomainError on the empty complex.
std::vector<int> reduced_betti(const ChainComplexZ2& cc);
std::vector<int> reduced_betti(const poset::SimplicialComplex& k);

// Whether the cycle bounds, decided by a GF(2) linear solve. Throws
// PreconditionError when the input is not a cycle.
bool is_boundary(const ChainComplexZ2& cc, const Z2Cycle& z);

// Representative cycles for a basis of H_k: a kernel basis of boundary_k
// pruned modulo the image of boundary_{k+1}. Exactly betti_k cycles.
std::vector<Z2Cycle> homology_basis(const ChainComplexZ2& cc, int k);

long long euler_characteristic(const poset::SimplicialComplex& k);

}  // namespace pinchlab::homology
