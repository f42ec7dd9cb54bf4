#pragma once

#include <string>
#include <vector>

#include "pinchlab/gf2.hpp"
#include "pinchlab/grassmann.hpp"

namespace pinchlab::linkhom {

// The combinatorial model of one member of the genus-g configuration family:
// the core circle is divided into 2g+2 arcs that alternate between handle
// interiors H_1..H_{g+1} (in-tunnels) and the gaps G_1..G_{g+1} between them
// (out-tunnels). Collapsing an arc merges its two endpoint roots; the
// surviving root pattern determines the genus via n_odd/2 - 1.
class HandleDiagram {
  public:
    explicit HandleDiagram(int g);

    int g() const { return g_; }
    int n_arcs() const { return 2 * g_ + 2; }
    bool is_collapsed(int arc) const { return collapsed_[arc]; }
    const std::vector<bool>& collapsed() const { return collapsed_; }

    static int arc_index(int g, const std::string& name);  // "H1".."H{g+1}", "G1".."G{g+1}"
    static std::string arc_name(int g, int arc);

    // Marks an arc collapsed. Throws PreconditionError if already collapsed
    // or if this would collapse the whole diagram.
    void collapse(int arc);
    void collapse(const std::string& arc_name);

    HandleDiagram with_collapsed(const std::vector<bool>& mask) const;

    int n_odd() const;
    int genus() const;  // max(n_odd/2 - 1, 0)

    std::vector<int> surviving_handles() const;  // 1-based handle numbers
    std::vector<int> surviving_gaps() const;

    std::string to_string() const;
    bool operator==(const HandleDiagram&) const = default;

  private:
    int g_;
    std::vector<bool> collapsed_;
};

// Generators of the complement homology in the diagram model: inner loops
// a_i thread consecutive handles (i, i+1), outer loops b_j thread consecutive
// gaps, and each family satisfies the single relation "sum = 0". Classes are
// reported as coordinates over the rank-g bases a_1..a_g and b_1..b_g.
struct LoopSystem {
    int g = 0;
    std::vector<gf2::BitVec> inner;  // g+1 loop classes, width g
    std::vector<gf2::BitVec> outer;
    std::string relation_inner, relation_outer;
};

LoopSystem generators(int g);

// Entry (i, j) is the mod-2 linking number of a_i and b_j: 1 iff the feet of
// the two loops interleave on the core circle. (g+1) x (g+1); the g x g
// restriction to a_1..a_g, b_1..b_g has rank g.
gf2::Matrix raw_linking_matrix(int g);

// Basis changes (P, Q) with P . raw_gxg . Q^T = I over GF(2): the rows of P
// express the normalized inner basis in terms of a_1..a_g, and likewise Q for
// the outer side. Fixed deterministically by Gaussian elimination.
struct BasisChange {
    gf2::Matrix p, q;
};
BasisChange normalized_basis(int g);

// The image of a diagram under the linking-form embedding: the surviving
// inner and outer homology subgroups, written in the normalized bases so the
// linking form restricts from the standard I_id.
struct SubgroupPair {
    gf2::Subspace a_in, a_out;
    int rank_i = 0;

    bool leq(const SubgroupPair& o) const {
        return o.a_in.contains(a_in) && o.a_out.contains(a_out);
    }
    grassmann::GrPair to_gr_pair() const { return grassmann::GrPair(a_in, a_out); }
    std::string to_string() const;
    bool operator==(const SubgroupPair& o) const { return a_in == o.a_in && a_out == o.a_out; }
    std::strong_ordering operator<=>(const SubgroupPair& o) const;
};

// A_in is spanned by the path classes a_i + ... + a_{j-1} over pairs of
// surviving handles (A_out analogously over surviving gaps); the uncollapsed
// diagram maps to (full, full).
SubgroupPair f_map(const HandleDiagram& d);

// The twelve genus-1 pinching strata of the g = 2 configuration in cyclic
// order (H1), (H1 G1), (G1), (G1 H2), ..., (G3), (G3 H1).
struct Stratum {
    HandleDiagram diagram;
    SubgroupPair image;
};
std::vector<Stratum> twelve_cycle();

// Exhaustive order-compatibility check over all collapse patterns:
// d <= d' (collapsed(d) contains collapsed(d')) must imply f(d) <= f(d'),
// and conversely on diagrams of genus >= 1. Failures are returned as data.
struct CompatReport {
    bool ok = true;
    std::vector<std::string> counterexamples;
};
CompatReport order_compatibility_check(int g);  // g <= 3

// Betti vectors of (a) the order complex of the genus>=1 proper-face poset of
// the 2g+2-point configuration space and (b) the order complex of its f_map
// image, ordered by componentwise inclusion.
struct HomologyComparison {
    std::vector<int> face_betti;
    std::vector<int> image_betti;
};
HomologyComparison homology_comparison(int g);  // g <= 3

}  // namespace pinchlab::linkhom
