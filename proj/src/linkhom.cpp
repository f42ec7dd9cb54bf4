#include "pinchlab/linkhom.hpp"

#include <algorithm>
#include <map>

#include "pinchlab/errors.hpp"
#include "pinchlab/homology.hpp"
#include "pinchlab/symprod.hpp"

namespace pinchlab::linkhom {

namespace {

// Feet of loop a_i (1-based) on the 2g+2 arc circle: the arcs H_i and H_{i+1},
// i.e. even positions 2(i-1) and 2i mod 2g+2. Outer loops sit on odd positions.
std::pair<int, int> inner_feet(int g, int i) {
    const int m = 2 * g + 2;
    return {(2 * (i - 1)) % m, (2 * i) % m};
}
std::pair<int, int> outer_feet(int g, int j) {
    const int m = 2 * g + 2;
    return {(2 * (j - 1) + 1) % m, (2 * j + 1) % m};
}

// Two chords of a circle link mod 2 iff their feet interleave: exactly one of
// {q1, q2} lies on one of the two arcs cut out by {p1, p2}.
bool interleave(int m, std::pair<int, int> p, std::pair<int, int> q) {
    auto between = [&](int lo, int hi, int x) {
        // strictly between lo and hi walking forward on the m-cycle
        int span = (hi - lo + m) % m;
        int off = (x - lo + m) % m;
        return 0 < off && off < span;
    };
    return between(p.first, p.second, q.first) != between(p.first, p.second, q.second);
}

// Class of the path loop threading handles i < j (1-based): a_i + ... + a_{j-1}
// in coordinates over the basis a_1..a_g. The indices i..j-1 never exceed g.
gf2::BitVec path_class(int g, int i, int j) {
    gf2::BitVec v(g);
    for (int k = i; k < j; ++k) v.set(k - 1, true);
    return v;
}

// w = coeff^T . v expresses a raw-coordinate class in a new basis whose rows
// (in raw coordinates) are the rows of inverse(coeff)^T; see normalized_basis.
gf2::BitVec apply_transpose(const gf2::Matrix& coeff, const gf2::BitVec& v) {
    gf2::BitVec w(coeff.width);
    for (int r = 0; r < coeff.n_rows(); ++r)
        if (v.get(r)) w ^= coeff.rows[r];
    return w;
}

struct NormalizationCache {
    gf2::Matrix to_normal_in;   // w_in = to_normal_in^T . v, fed to apply_transpose
    gf2::Matrix to_normal_out;  // w_out = to_normal_out^T . v
};

const NormalizationCache& normalization(int g) {
    static std::map<int, NormalizationCache> cache;
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;

    BasisChange bc = normalized_basis(g);
    // If the normalized basis rows are P (resp. Q) in raw coordinates, a class
    // with raw coordinates v has normalized coordinates P^{-T} v = (P^{-1})^T v.
    NormalizationCache nc;
    nc.to_normal_in = gf2::inverse(bc.p);
    nc.to_normal_out = gf2::inverse(bc.q);
    auto [pos, inserted] = cache.emplace(g, std::move(nc));
    return pos->second;
}

}  // namespace

HandleDiagram::HandleDiagram(int g) : g_(g), collapsed_(2 * g + 2, false) {
    if (g < 1) throw PreconditionError("HandleDiagram: genus parameter must be >= 1");
}

int HandleDiagram::arc_index(int g, const std::string& name) {
    if (name.size() < 2 || (name[0] != 'H' && name[0] != 'G'))
        throw PreconditionError("arc name must look like H1 or G1: " + name);
    int num = 0;
    try {
        num = std::stoi(name.substr(1));
    } catch (...) {
        throw PreconditionError("bad arc name: " + name);
    }
    if (num < 1 || num > g + 1) throw PreconditionError("arc number out of range: " + name);
    return 2 * (num - 1) + (name[0] == 'G' ? 1 : 0);
}

std::string HandleDiagram::arc_name(int g, int arc) {
    if (arc < 0 || arc >= 2 * g + 2) throw PreconditionError("arc index out of range");
    return (arc % 2 == 0 ? "H" : "G") + std::to_string(arc / 2 + 1);
}

void HandleDiagram::collapse(int arc) {
    if (arc < 0 || arc >= n_arcs()) throw PreconditionError("collapse: arc index out of range");
    if (collapsed_[arc])
        throw PreconditionError("collapse: arc already collapsed: " + arc_name(g_, arc));
    int remaining = 0;
    for (bool c : collapsed_) remaining += !c;
    if (remaining == 1)
        throw PreconditionError("collapse: the all-collapsed diagram is forbidden");
    collapsed_[arc] = true;
}

void HandleDiagram::collapse(const std::string& name) { collapse(arc_index(g_, name)); }

HandleDiagram HandleDiagram::with_collapsed(const std::vector<bool>& mask) const {
    if (static_cast<int>(mask.size()) != n_arcs())
        throw PreconditionError("with_collapsed: mask size mismatch");
    bool all = true;
    for (bool c : mask) all = all && c;
    if (all) throw PreconditionError("with_collapsed: the all-collapsed diagram is forbidden");
    HandleDiagram d(g_);
    d.collapsed_ = mask;
    return d;
}

int HandleDiagram::n_odd() const {
    return symprod::face_from_zero_set(n_arcs(), collapsed_).n_odd;
}

int HandleDiagram::genus() const { return std::max(n_odd() / 2 - 1, 0); }

std::vector<int> HandleDiagram::surviving_handles() const {
    std::vector<int> out;
    for (int i = 1; i <= g_ + 1; ++i)
        if (!collapsed_[2 * (i - 1)]) out.push_back(i);
    return out;
}

std::vector<int> HandleDiagram::surviving_gaps() const {
    std::vector<int> out;
    for (int j = 1; j <= g_ + 1; ++j)
        if (!collapsed_[2 * (j - 1) + 1]) out.push_back(j);
    return out;
}

std::string HandleDiagram::to_string() const {
    std::string s;
    for (int arc = 0; arc < n_arcs(); ++arc) {
        if (collapsed_[arc]) {
            if (!s.empty()) s += "+";
            s += arc_name(g_, arc);
        }
    }
    return s.empty() ? "(top)" : s;
}

LoopSystem generators(int g) {
    if (g < 1) throw PreconditionError("generators: g must be >= 1");
    LoopSystem sys;
    sys.g = g;
    for (int i = 1; i <= g + 1; ++i) {
        gf2::BitVec v(g);
        if (i <= g)
            v.set(i - 1, true);
        else
            for (int k = 0; k < g; ++k) v.set(k, true);  // a_{g+1} = a_1 + ... + a_g
        sys.inner.push_back(v);
        sys.outer.push_back(v);
    }
    sys.relation_inner = "a1+...+a" + std::to_string(g + 1) + "=0";
    sys.relation_outer = "b1+...+b" + std::to_string(g + 1) + "=0";
    return sys;
}

gf2::Matrix raw_linking_matrix(int g) {
    const int m = 2 * g + 2;
    gf2::Matrix link(g + 1);
    for (int i = 1; i <= g + 1; ++i) {
        gf2::BitVec row(g + 1);
        for (int j = 1; j <= g + 1; ++j)
            row.set(j - 1, interleave(m, inner_feet(g, i), outer_feet(g, j)));
        link.rows.push_back(std::move(row));
    }
    return link;
}

BasisChange normalized_basis(int g) {
    // Restrict the raw matrix to the bases a_1..a_g, b_1..b_g.
    gf2::Matrix full = raw_linking_matrix(g);
    gf2::Matrix m(g);
    for (int i = 0; i < g; ++i) {
        gf2::BitVec row(g);
        for (int j = 0; j < g; ++j) row.set(j, full.rows[i].get(j));
        m.rows.push_back(std::move(row));
    }
    // P = M^{-1}, Q = I satisfies P . M . Q^T = I; Gaussian elimination with
    // lexicographic pivoting makes the result deterministic.
    BasisChange bc;
    bc.p = gf2::inverse(m);
    bc.q = gf2::Matrix::identity(g);
    return bc;
}

std::string SubgroupPair::to_string() const {
    return "(" + a_in.to_string() + "," + a_out.to_string() + ")";
}

std::strong_ordering SubgroupPair::operator<=>(const SubgroupPair& o) const {
    if (auto c = a_in <=> o.a_in; c != 0) return c;
    return a_out <=> o.a_out;
}

SubgroupPair f_map(const HandleDiagram& d) {
    const int g = d.g();
    const auto& nc = normalization(g);

    auto span_side = [&](const std::vector<int>& survivors, const gf2::Matrix& to_normal) {
        std::vector<gf2::BitVec> gens;
        for (std::size_t u = 0; u < survivors.size(); ++u)
            for (std::size_t v = u + 1; v < survivors.size(); ++v)
                gens.push_back(
                    apply_transpose(to_normal, path_class(g, survivors[u], survivors[v])));
        return gf2::Subspace::span_of(gens, g);
    };

    SubgroupPair pair;
    pair.a_in = span_side(d.surviving_handles(), nc.to_normal_in);
    pair.a_out = span_side(d.surviving_gaps(), nc.to_normal_out);
    pair.rank_i =
        gf2::restricted_form_rank(gf2::Matrix::identity(g), pair.a_in, pair.a_out);
    return pair;
}

std::vector<Stratum> twelve_cycle() {
    const int g = 2;
    std::vector<Stratum> out;
    // Alternate single collapses and adjacent double collapses around the
    // circle: (H1), (H1 G1), (G1), (G1 H2), ..., (G3), (G3 H1).
    for (int arc = 0; arc < 6; ++arc) {
        HandleDiagram single(g);
        single.collapse(arc);
        out.push_back({single, f_map(single)});

        HandleDiagram doubled(g);
        doubled.collapse(arc);
        doubled.collapse((arc + 1) % 6);
        out.push_back({doubled, f_map(doubled)});
    }
    return out;
}

CompatReport order_compatibility_check(int g) {
    if (g < 1 || g > 3) throw PreconditionError("order_compatibility_check: need 1 <= g <= 3");
    const int m = 2 * g + 2;
    const unsigned all = (1u << m) - 1;

    std::vector<HandleDiagram> diagrams;
    std::vector<SubgroupPair> images;
    std::vector<unsigned> masks;
    HandleDiagram base(g);
    for (unsigned mask = 0; mask < all; ++mask) {
        std::vector<bool> bits(m);
        for (int i = 0; i < m; ++i) bits[i] = (mask >> i) & 1;
        HandleDiagram d = base.with_collapsed(bits);
        diagrams.push_back(d);
        images.push_back(f_map(d));
        masks.push_back(mask);
    }

    CompatReport report;
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        for (std::size_t j = 0; j < diagrams.size(); ++j) {
            const bool d_leq = (masks[i] & masks[j]) == masks[j];  // collapsed(i) ⊇ collapsed(j)
            const bool f_leq = images[i].leq(images[j]);
            if (d_leq && !f_leq) {
                report.ok = false;
                report.counterexamples.push_back("monotone: " + diagrams[i].to_string() +
                                                 " <= " + diagrams[j].to_string() +
                                                 " but images are not ordered");
            }
            if (f_leq && !d_leq && diagrams[i].genus() >= 1 && diagrams[j].genus() >= 1) {
                report.ok = false;
                report.counterexamples.push_back("converse: f(" + diagrams[i].to_string() +
                                                 ") <= f(" + diagrams[j].to_string() +
                                                 ") but diagrams are not ordered");
            }
        }
    }
    return report;
}

HomologyComparison homology_comparison(int g) {
    if (g < 1 || g > 3) throw PreconditionError("homology_comparison: need 1 <= g <= 3");
    const int n = 2 * g + 2;

    // Proper faces of the configuration simplex with genus >= 1. At g = 1
    // every proper merge already drops the genus to 0, so both sides are empty.
    auto faces = symprod::enumerate_faces(n, [](const symprod::Face& f) {
        return !f.zero_set.empty() && f.genus >= 1;
    });
    if (faces.empty()) return {};
    poset::FinitePoset face_order = symprod::face_poset(n, faces);

    HandleDiagram base(g);
    std::vector<SubgroupPair> images;
    for (const auto& f : faces) {
        std::vector<bool> mask(n, false);
        for (int i : f.zero_set) mask[i] = true;
        images.push_back(f_map(base.with_collapsed(mask)));
    }
    std::vector<SubgroupPair> distinct = images;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<std::string> labels;
    labels.reserve(distinct.size());
    for (const auto& p : distinct) labels.push_back(p.to_string());
    poset::FinitePoset image_order(std::move(labels), [&](int i, int j) {
        return distinct[i].leq(distinct[j]);
    });

    HomologyComparison cmp;
    cmp.face_betti = homology::betti_numbers(
        poset::order_complex(face_order, std::max(poset::max_chain_length(face_order) - 1, 0)));
    cmp.image_betti = homology::betti_numbers(
        poset::order_complex(image_order, std::max(poset::max_chain_length(image_order) - 1, 0)));
    return cmp;
}

}  // namespace pinchlab::linkhom
