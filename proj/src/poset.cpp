#include "pinchlab/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "pinchlab/errors.hpp"

namespace pinchlab::poset {

FinitePoset::FinitePoset(std::vector<std::string> labels,
                         const std::function<bool(int, int)>& leq)
    : labels_(std::move(labels)) {
    const int n = size();
    up_.assign(n, gf2::BitVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq(i, j)) up_[i].set(j, true);

    for (int i = 0; i < n; ++i) {
        if (!up_[i].get(i)) throw StructuralError("poset relation is not reflexive");
        for (int j = 0; j < n; ++j) {
            if (i != j && up_[i].get(j) && up_[j].get(i))
                throw StructuralError("poset relation is not antisymmetric");
            if (up_[i].get(j) && !up_[j].is_subset_of(up_[i]))
                throw StructuralError("poset relation is not transitive");
        }
    }
}

int FinitePoset::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    throw PreconditionError("unknown poset element: " + label);
}

bool FinitePoset::leq(int i, int j) const {
    if (i < 0 || j < 0 || i >= size() || j >= size())
        throw PreconditionError("poset element index out of range");
    return up_[i].get(j);
}

std::vector<int> FinitePoset::up_set(int x) const {
    if (x < 0 || x >= size()) throw PreconditionError("poset element index out of range");
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (up_[x].get(j)) out.push_back(j);
    return out;
}

std::vector<int> FinitePoset::up_set(const std::string& label) const {
    return up_set(index_of(label));
}

FinitePoset FinitePoset::induced(const std::vector<int>& subset) const {
    std::vector<std::string> labels;
    labels.reserve(subset.size());
    for (int i : subset) labels.push_back(labels_[i]);
    return FinitePoset(std::move(labels), [&](int i, int j) {
        return leq(subset[i], subset[j]);
    });
}

std::vector<std::pair<int, int>> FinitePoset::hasse_covers() const {
    std::vector<std::pair<int, int>> covers;
    const int n = size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || !up_[i].get(j)) continue;
            bool is_cover = true;
            for (int k = 0; k < n && is_cover; ++k)
                if (k != i && k != j && up_[i].get(k) && up_[k].get(j)) is_cover = false;
            if (is_cover) covers.emplace_back(i, j);
        }
    }
    return covers;
}

int max_chain_length(const FinitePoset& p) {
    const int n = p.size();
    if (n == 0) throw PreconditionError("max_chain_length: empty poset");
    std::vector<int> memo(n, 0);
    std::function<int(int)> longest = [&](int i) {
        if (memo[i]) return memo[i];
        int best = 1;
        for (int j = 0; j < n; ++j)
            if (j != i && p.leq(i, j)) best = std::max(best, 1 + longest(j));
        return memo[i] = best;
    };
    int best = 0;
    for (int i = 0; i < n; ++i) best = std::max(best, longest(i));
    return best;
}

std::size_t SimplicialComplex::size() const {
    std::size_t total = 0;
    for (const auto& level : simplices) total += level.size();
    return total;
}

std::vector<std::size_t> SimplicialComplex::counts() const {
    std::vector<std::size_t> c;
    c.reserve(simplices.size());
    for (const auto& level : simplices) c.push_back(level.size());
    return c;
}

void SimplicialComplex::sort_canonical() {
    for (auto& level : simplices) std::sort(level.begin(), level.end());
}

bool SimplicialComplex::contains(const std::vector<int>& simplex) const {
    const int d = static_cast<int>(simplex.size()) - 1;
    if (d < 0 || d > dim()) return false;
    const auto& level = simplices[d];
    return std::binary_search(level.begin(), level.end(), simplex);
}

void SimplicialComplex::validate_closed() const {
    for (int d = 1; d <= dim(); ++d) {
        for (const auto& s : simplices[d]) {
            std::vector<int> face;
            face.reserve(s.size() - 1);
            for (std::size_t omit = 0; omit < s.size(); ++omit) {
                face.clear();
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != omit) face.push_back(s[i]);
                if (!contains(face))
                    throw StructuralError("complex is not closed under taking faces");
            }
        }
    }
}

std::size_t default_simplex_budget() {
    if (const char* env = std::getenv("PINCHLAB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 10'000'000;
}

SimplicialComplex order_complex(const FinitePoset& p, int max_dim, std::size_t budget) {
    if (max_dim < 0) throw PreconditionError("order_complex: max_dim must be >= 0");
    const int n = p.size();
    SimplicialComplex k;
    k.n_vertices = n;
    k.simplices.assign(static_cast<std::size_t>(max_dim) + 1, {});

    std::size_t total = 0;
    auto over_budget = [&]() {
        std::ostringstream msg;
        msg << "order_complex: simplex budget " << budget << " exceeded; counts so far:";
        for (int d = 0; d <= max_dim; ++d) msg << " dim" << d << "=" << k.simplices[d].size();
        throw CapacityError(msg.str());
    };

    // Chains are paths in the strict order: extending the current top element
    // keeps every chain appearing exactly once.
    std::vector<int> chain;
    std::function<void(int)> extend = [&](int top) {
        chain.push_back(top);
        std::vector<int> simplex = chain;
        std::sort(simplex.begin(), simplex.end());
        k.simplices[chain.size() - 1].push_back(std::move(simplex));
        if (++total > budget) over_budget();
        if (static_cast<int>(chain.size()) <= max_dim) {
            for (int j = 0; j < n; ++j)
                if (j != top && p.leq(top, j)) extend(j);
        }
        chain.pop_back();
    };
    for (int i = 0; i < n; ++i) extend(i);

    while (k.simplices.size() > 1 && k.simplices.back().empty()) k.simplices.pop_back();
    k.sort_canonical();
    return k;
}

bool is_cone_with_apex(const SimplicialComplex& k, int apex) {
    if (apex < 0 || apex >= k.n_vertices)
        throw PreconditionError("is_cone_with_apex: vertex out of range");
    for (const auto& level : k.simplices) {
        for (const auto& s : level) {
            if (std::binary_search(s.begin(), s.end(), apex)) continue;
            std::vector<int> coned = s;
            coned.insert(std::upper_bound(coned.begin(), coned.end(), apex), apex);
            if (!k.contains(coned)) return false;
        }
    }
    return true;
}

void write_face_list(std::ostream& os, const SimplicialComplex& k) {
    for (const auto& level : k.simplices) {
        for (const auto& s : level) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i) os << ' ';
                os << s[i];
            }
            os << '\n';
        }
    }
}

}  // namespace pinchlab::poset
