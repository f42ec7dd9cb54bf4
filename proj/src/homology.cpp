#include "pinchlab/homology.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "pinchlab/errors.hpp"

namespace pinchlab::homology {

namespace {

std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            out.push_back(a[i++]);
        else if (b[j] < a[i])
            out.push_back(b[j++]);
        else
            ++i, ++j;
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

// Column reduction with the max-index pivot convention.
struct Reducer {
    std::map<int, std::vector<int>> pivot_cols;

    // Reduces col in place; returns true if it became a new pivot column.
    bool add(std::vector<int> col) {
        while (!col.empty()) {
            auto it = pivot_cols.find(col.back());
            if (it == pivot_cols.end()) {
                pivot_cols.emplace(col.back(), std::move(col));
                return true;
            }
            col = symmetric_difference(col, it->second);
        }
        return false;
    }

    // Membership of col in the span of the already-added columns.
    bool in_span(std::vector<int> col) const {
        while (!col.empty()) {
            auto it = pivot_cols.find(col.back());
            if (it == pivot_cols.end()) return false;
            col = symmetric_difference(col, it->second);
        }
        return true;
    }
};

}  // namespace

ChainComplexZ2 ChainComplexZ2::from_complex(const poset::SimplicialComplex& k) {
    ChainComplexZ2 cc;
    const int top = k.dim() < 0 ? 0 : k.dim();
    cc.n_cells_.resize(top + 1, 0);
    cc.cols_.resize(top + 1);
    for (int d = 0; d <= k.dim(); ++d) cc.n_cells_[d] = k.simplices[d].size();

    for (int d = 1; d <= k.dim(); ++d) {
        const auto& level = k.simplices[d];
        const auto& faces = k.simplices[d - 1];
        cc.cols_[d].reserve(level.size());
        std::vector<int> face;
        for (const auto& s : level) {
            std::vector<int> col;
            col.reserve(s.size());
            for (std::size_t omit = 0; omit < s.size(); ++omit) {
                face.clear();
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != omit) face.push_back(s[i]);
                auto it = std::lower_bound(faces.begin(), faces.end(), face);
                if (it == faces.end() || *it != face)
                    throw StructuralError("chain complex: missing face (complex not closed)");
                col.push_back(static_cast<int>(it - faces.begin()));
            }
            std::sort(col.begin(), col.end());
            cc.cols_[d].push_back(std::move(col));
        }
    }

    // dd = 0: every (k-2)-face of a k-simplex sits in exactly two of its faces.
    for (int d = 2; d <= cc.dim(); ++d) {
        for (const auto& col : cc.cols_[d]) {
            std::vector<int> grandfaces;
            for (int f : col)
                grandfaces.insert(grandfaces.end(), cc.cols_[d - 1][f].begin(),
                                  cc.cols_[d - 1][f].end());
            std::sort(grandfaces.begin(), grandfaces.end());
            for (std::size_t i = 0; i < grandfaces.size(); i += 2)
                if (i + 1 >= grandfaces.size() || grandfaces[i] != grandfaces[i + 1])
                    throw StructuralError("chain complex: dd != 0");
        }
    }
    return cc;
}

std::size_t ChainComplexZ2::n_cells(int k) const {
    if (k < 0 || k > dim()) return 0;
    return n_cells_[k];
}

const std::vector<std::vector<int>>& ChainComplexZ2::boundary_columns(int k) const {
    if (k < 1 || k > dim()) throw PreconditionError("boundary_columns: dimension out of range");
    return cols_[k];
}

gf2::Matrix ChainComplexZ2::boundary_matrix(int k) const {
    const int n_rows = static_cast<int>(n_cells(k - 1));
    const int n_cols = static_cast<int>(n_cells(k));
    gf2::Matrix m(n_cols);
    m.rows.assign(n_rows, gf2::BitVec(n_cols));
    if (k >= 1 && k <= dim())
        for (int j = 0; j < n_cols; ++j)
            for (int r : cols_[k][j]) m.rows[r].set(j, true);
    return m;
}

bool ChainComplexZ2::is_cycle(const Z2Cycle& z) const {
    if (z.dim < 0 || z.dim > dim()) throw PreconditionError("is_cycle: dimension out of range");
    for (int idx : z.support)
        if (idx < 0 || idx >= static_cast<int>(n_cells(z.dim)))
            throw PreconditionError("is_cycle: simplex index out of range");
    if (z.dim == 0) return true;
    std::vector<int> bd;
    for (int idx : z.support) bd = symmetric_difference(bd, cols_[z.dim][idx]);
    return bd.empty();
}

int boundary_rank(const ChainComplexZ2& cc, int k) {
    if (k < 1 || k > cc.dim()) return 0;
    Reducer red;
    int rank = 0;
    for (const auto& col : cc.boundary_columns(k))
        if (red.add(col)) ++rank;
    return rank;
}

std::vector<int> betti_numbers(const ChainComplexZ2& cc) {
    const int top = cc.dim();
    std::vector<std::future<int>> ranks;
    for (int k = 1; k <= top; ++k)
        ranks.push_back(std::async(std::launch::async, [&cc, k] { return boundary_rank(cc, k); }));
    std::vector<int> r(top + 2, 0);
    for (int k = 1; k <= top; ++k) r[k] = ranks[k - 1].get();

    std::vector<int> betti(top + 1, 0);
    for (int k = 0; k <= top; ++k)
        betti[k] = static_cast<int>(cc.n_cells(k)) - r[k] - r[k + 1];
    return betti;
}

std::vector<int> betti_numbers(const poset::SimplicialComplex& k) {
    return betti_numbers(ChainComplexZ2::from_complex(k));
}

std::vector<int> reduced_betti(const ChainComplexZ2& cc) {
    if (cc.n_cells(0) == 0) throw DomainError("reduced_betti: empty complex");
    std::vector<int> b = betti_numbers(cc);
    b[0] -= 1;
    return b;
}

std::vector<int> reduced_betti(const poset::SimplicialComplex& k) {
    return reduced_betti(ChainComplexZ2::from_complex(k));
}

bool is_boundary(const ChainComplexZ2& cc, const Z2Cycle& z) {
    if (!cc.is_cycle(z)) throw PreconditionError("is_boundary: input is not a cycle");
    std::vector<int> chain = z.support;
    std::sort(chain.begin(), chain.end());
    if (chain.empty()) return true;
    if (z.dim + 1 > cc.dim()) return false;
    Reducer red;
    for (const auto& col : cc.boundary_columns(z.dim + 1)) red.add(col);
    return red.in_span(chain);
}

std::vector<Z2Cycle> homology_basis(const ChainComplexZ2& cc, int k) {
    if (k < 0 || k > cc.dim()) throw PreconditionError("homology_basis: dimension out of range");
    const int n_k = static_cast<int>(cc.n_cells(k));

    // Kernel basis of boundary_k, tracking which input columns combine into
    // each reduced column.
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> pivots;  // row -> (col, combo)
    std::vector<std::vector<int>> kernel;
    for (int j = 0; j < n_k; ++j) {
        std::vector<int> col = k >= 1 ? cc.boundary_columns(k)[j] : std::vector<int>{};
        std::vector<int> combo{j};
        while (!col.empty()) {
            auto it = pivots.find(col.back());
            if (it == pivots.end()) break;
            col = symmetric_difference(col, it->second.first);
            combo = symmetric_difference(combo, it->second.second);
        }
        if (col.empty()) {
            kernel.push_back(std::move(combo));
        } else {
            const int pivot_row = col.back();
            pivots.emplace(pivot_row, std::make_pair(std::move(col), std::move(combo)));
        }
    }

    // Quotient by the image of boundary_{k+1}: kernel vectors that stay
    // independent of the boundaries represent a homology basis.
    Reducer quotient;
    if (k + 1 <= cc.dim())
        for (const auto& col : cc.boundary_columns(k + 1)) quotient.add(col);
    std::vector<Z2Cycle> basis;
    for (auto& combo : kernel)
        if (quotient.add(combo)) basis.push_back({k, combo});
    return basis;
}

long long euler_characteristic(const poset::SimplicialComplex& k) {
    long long chi = 0;
    int sign = 1;
    for (const auto& level : k.simplices) {
        chi += sign * static_cast<long long>(level.size());
        sign = -sign;
    }
    return chi;
}

}  // namespace pinchlab::homology
