#include "pinchlab/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "pinchlab/errors.hpp"

namespace pinchlab::gf2 {

namespace {
constexpr int kWordBits = 64;
constexpr int kMaxEnumDim = 6;

int word_count(int width) { return (width + kWordBits - 1) / kWordBits; }
}  // namespace

BitVec::BitVec(int width) : width_(width), w_(word_count(width), 0) {
    if (width < 0) throw StructuralError("BitVec width must be non-negative");
}

BitVec BitVec::from_string(const std::string& bits) {
    BitVec v(static_cast<int>(bits.size()));
    for (int i = 0; i < v.width_; ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw StructuralError("BitVec::from_string: expected only 0/1");
    }
    return v;
}

BitVec BitVec::unit(int width, int i) {
    BitVec v(width);
    v.set(i, true);
    return v;
}

bool BitVec::get(int i) const {
    assert(i >= 0 && i < width_);
    return (w_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVec::set(int i, bool v) {
    assert(i >= 0 && i < width_);
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (v)
        w_[i / kWordBits] |= mask;
    else
        w_[i / kWordBits] &= ~mask;
}

bool BitVec::is_zero() const {
    for (auto word : w_)
        if (word) return false;
    return true;
}

int BitVec::leading() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return static_cast<int>(k) * kWordBits + std::countr_zero(w_[k]);
    return -1;
}

int BitVec::popcount() const {
    int c = 0;
    for (auto word : w_) c += std::popcount(word);
    return c;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (width_ != o.width_) throw StructuralError("BitVec width mismatch in addition");
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& o) {
    if (width_ != o.width_) throw StructuralError("BitVec width mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
}

BitVec& BitVec::operator|=(const BitVec& o) {
    if (width_ != o.width_) throw StructuralError("BitVec width mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
}

bool BitVec::dot(const BitVec& o) const {
    if (width_ != o.width_) throw StructuralError("BitVec width mismatch in pairing");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
}

bool BitVec::is_subset_of(const BitVec& o) const {
    if (width_ != o.width_) throw StructuralError("BitVec width mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k] & ~o.w_[k]) return false;
    return true;
}

std::string BitVec::to_string() const {
    std::string s(width_, '0');
    for (int i = 0; i < width_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::strong_ordering BitVec::operator<=>(const BitVec& o) const {
    if (auto c = width_ <=> o.width_; c != 0) return c;
    for (int i = 0; i < width_; ++i)
        if (auto c = get(i) <=> o.get(i); c != 0) return c;
    return std::strong_ordering::equal;
}

Matrix::Matrix(int width, std::vector<BitVec> rows_in) : width(width), rows(std::move(rows_in)) {
    for (const auto& r : rows)
        if (r.width() != width) throw StructuralError("Matrix rows must have equal width");
}

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.rows.push_back(BitVec::unit(n, i));
    return m;
}

Matrix Matrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) return Matrix(0);
    Matrix m(static_cast<int>(rows.front().size()));
    for (const auto& s : rows) m.append_row(BitVec::from_string(s));
    return m;
}

void Matrix::append_row(BitVec row) {
    if (row.width() != width) throw StructuralError("Matrix row width mismatch");
    rows.push_back(std::move(row));
}

int Matrix::rank() const {
    std::vector<BitVec> pivot_rows;
    for (BitVec r : rows) {
        for (const auto& p : pivot_rows) {
            int lead = p.leading();
            if (lead >= 0 && r.get(lead)) r ^= p;
        }
        if (!r.is_zero()) pivot_rows.push_back(std::move(r));
    }
    return static_cast<int>(pivot_rows.size());
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.n_rows());
    for (int j = 0; j < m.width; ++j) {
        BitVec col(m.n_rows());
        for (int i = 0; i < m.n_rows(); ++i) col.set(i, m.rows[i].get(j));
        t.rows.push_back(std::move(col));
    }
    return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.width != b.n_rows()) throw StructuralError("multiply: inner dimensions differ");
    Matrix out(b.width);
    for (const auto& row : a.rows) {
        BitVec acc(b.width);
        for (int k = 0; k < a.width; ++k)
            if (row.get(k)) acc ^= b.rows[k];
        out.rows.push_back(std::move(acc));
    }
    return out;
}

Matrix inverse(const Matrix& m) {
    const int n = m.n_rows();
    if (n != m.width) throw DomainError("inverse: matrix must be square");
    std::vector<BitVec> work = m.rows;
    std::vector<BitVec> inv = Matrix::identity(n).rows;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pivot = -1;
        for (int i = row; i < n; ++i)
            if (work[i].get(col)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(work[pivot], work[row]);
        std::swap(inv[pivot], inv[row]);
        for (int i = 0; i < n; ++i)
            if (i != row && work[i].get(col)) {
                work[i] ^= work[row];
                inv[i] ^= inv[row];
            }
        ++row;
    }
    if (row != n) throw DomainError("inverse: matrix is singular over GF(2)");
    return Matrix(n, std::move(inv));
}

Subspace Subspace::zero(int ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    return s;
}

Subspace Subspace::full(int ambient_dim) {
    return echelonize(Matrix::identity(ambient_dim));
}

Subspace Subspace::span_of(const std::vector<BitVec>& vectors, int ambient_dim) {
    Matrix m(ambient_dim);
    for (const auto& v : vectors) m.append_row(v);
    return echelonize(m);
}

bool Subspace::contains(const BitVec& v) const {
    if (v.width() != ambient_) throw StructuralError("contains: ambient dimension mismatch");
    BitVec r = v;
    for (const auto& p : basis_) {
        int lead = p.leading();
        if (r.get(lead)) r ^= p;
    }
    return r.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw StructuralError("contains: ambient dimension mismatch");
    for (const auto& row : other.basis_)
        if (!contains(row)) return false;
    return true;
}

std::vector<BitVec> Subspace::elements() const {
    std::vector<BitVec> out{BitVec(ambient_)};
    for (const auto& b : basis_) {
        std::size_t sz = out.size();
        for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] ^ b);
    }
    return out;
}

std::string Subspace::to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) s += ",";
        s += basis_[i].to_string();
    }
    return s + ">";
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
    if (auto c = ambient_ <=> o.ambient_; c != 0) return c;
    if (auto c = basis_.size() <=> o.basis_.size(); c != 0) return c;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (auto c = basis_[i] <=> o.basis_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

Subspace echelonize(const Matrix& rows) {
    if (rows.width < 0) throw StructuralError("echelonize: bad width");
    std::vector<BitVec> basis;
    for (BitVec r : rows.rows) {
        for (const auto& p : basis) {
            int lead = p.leading();
            if (r.get(lead)) r ^= p;
        }
        if (r.is_zero()) continue;
        // Back-substitute into earlier rows to reach reduced form.
        int lead = r.leading();
        for (auto& p : basis)
            if (p.get(lead)) p ^= r;
        basis.push_back(std::move(r));
    }
    std::sort(basis.begin(), basis.end(),
              [](const BitVec& a, const BitVec& b) { return a.leading() < b.leading(); });
    Subspace s;
    s.ambient_ = rows.width;
    s.basis_ = std::move(basis);
    return s;
}

std::vector<Subspace> enumerate_subspaces(int n) {
    if (n < 1) throw PreconditionError("enumerate_subspaces: n must be positive");
    if (n > kMaxEnumDim)
        throw CapacityError("enumerate_subspaces: n > 6 exceeds the enumeration cap");

    // Walk all reduced echelon bases directly: pick the pivot columns, then
    // every assignment of the free entries gives a distinct subspace.
    std::vector<Subspace> out;
    for (unsigned pivots = 0; pivots < (1u << n); ++pivots) {
        std::vector<int> pcols;
        for (int j = 0; j < n; ++j)
            if (pivots >> j & 1) pcols.push_back(j);
        const int k = static_cast<int>(pcols.size());

        std::vector<std::pair<int, int>> free_slots;  // (row, column)
        for (int i = 0; i < k; ++i)
            for (int j = pcols[i] + 1; j < n; ++j)
                if (!(pivots >> j & 1)) free_slots.emplace_back(i, j);

        for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << free_slots.size()); ++fill) {
            Matrix m(n);
            for (int i = 0; i < k; ++i) m.rows.push_back(BitVec::unit(n, pcols[i]));
            for (std::size_t s = 0; s < free_slots.size(); ++s)
                if (fill >> s & 1) m.rows[free_slots[s].first].set(free_slots[s].second, true);
            Subspace sub;
            sub = echelonize(m);
            out.push_back(std::move(sub));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    const int n = a.ambient_dim();
    if (b.ambient_dim() != n) throw StructuralError("intersect: ambient dimension mismatch");
    // Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry the
    // intersection in their right half.
    Matrix wide(2 * n);
    auto widen = [&](const BitVec& v, bool duplicate) {
        BitVec w(2 * n);
        for (int i = 0; i < n; ++i) {
            if (v.get(i)) {
                w.set(i, true);
                if (duplicate) w.set(n + i, true);
            }
        }
        return w;
    };
    for (const auto& r : a.basis()) wide.rows.push_back(widen(r, true));
    for (const auto& r : b.basis()) wide.rows.push_back(widen(r, false));

    std::vector<BitVec> pivot_rows;
    for (BitVec r : wide.rows) {
        for (const auto& p : pivot_rows) {
            int lead = p.leading();
            if (lead >= 0 && r.get(lead)) r ^= p;
        }
        if (!r.is_zero()) pivot_rows.push_back(std::move(r));
    }
    Matrix inter(n);
    for (const auto& r : pivot_rows) {
        if (r.leading() >= n) {
            BitVec v(n);
            for (int i = 0; i < n; ++i) v.set(i, r.get(n + i));
            inter.rows.push_back(std::move(v));
        }
    }
    return echelonize(inter);
}

int restricted_form_rank(const Matrix& form, const Subspace& a1, const Subspace& a2) {
    const int n = form.width;
    if (form.n_rows() != n) throw StructuralError("restricted_form_rank: form must be square");
    if (a1.ambient_dim() != n || a2.ambient_dim() != n)
        throw StructuralError("restricted_form_rank: ambient dimension mismatch");

    Matrix gram(a2.dim());
    for (const auto& u : a1.basis()) {
        BitVec row(a2.dim());
        for (int j = 0; j < a2.dim(); ++j) {
            const BitVec& v = a2.basis()[j];
            // u^T . form . v
            bool acc = false;
            for (int r = 0; r < n; ++r)
                if (u.get(r)) acc ^= form.rows[r].dot(v);
            row.set(j, acc);
        }
        gram.rows.push_back(std::move(row));
    }
    return gram.rank();
}

}  // namespace pinchlab::gf2
