#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pinchlab::gf2 {

// A fixed-width vector over the two-element field. Addition is XOR, so every
// vector is its own negative. Bit 0 is the leftmost coordinate.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(int width);

    static BitVec from_string(const std::string& bits);  // e.g. "110"
    static BitVec unit(int width, int i);

    int width() const { return width_; }
    bool get(int i) const;
    void set(int i, bool v);
    bool is_zero() const;
    int leading() const;  // index of first set bit, -1 for the zero vector
    int popcount() const;

    BitVec& operator^=(const BitVec& o);
    BitVec& operator&=(const BitVec& o);
    BitVec& operator|=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    bool dot(const BitVec& o) const;  // standard bilinear pairing
    bool is_subset_of(const BitVec& o) const;

    std::string to_string() const;

    bool operator==(const BitVec& o) const = default;
    std::strong_ordering operator<=>(const BitVec& o) const;

  private:
    int width_ = 0;
    std::vector<std::uint64_t> w_;
};

// An ordered collection of equal-width rows.
struct Matrix {
    int width = 0;
    std::vector<BitVec> rows;

    Matrix() = default;
    explicit Matrix(int width) : width(width) {}
    Matrix(int width, std::vector<BitVec> rows);

    static Matrix identity(int n);
    static Matrix from_strings(const std::vector<std::string>& rows);

    int n_rows() const { return static_cast<int>(rows.size()); }
    void append_row(BitVec row);
    int rank() const;

    bool operator==(const Matrix& o) const = default;
};

Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& m);  // throws DomainError if singular

// A subspace of Z_2^n held in reduced row-echelon form with no zero rows.
// Canonical: two subspaces are equal iff their stored bases are identical.
class Subspace {
  public:
    Subspace() = default;
    static Subspace zero(int ambient_dim);
    static Subspace full(int ambient_dim);
    static Subspace span_of(const std::vector<BitVec>& vectors, int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BitVec>& basis() const { return basis_; }

    bool contains(const BitVec& v) const;
    bool contains(const Subspace& other) const;  // other is a subspace of this
    std::vector<BitVec> elements() const;        // all 2^dim members

    std::string to_string() const;  // "<110,011>", "<>" for the zero subspace

    bool operator==(const Subspace& o) const = default;
    std::strong_ordering operator<=>(const Subspace& o) const;

  private:
    friend Subspace echelonize(const Matrix&);
    int ambient_ = 0;
    std::vector<BitVec> basis_;  // pivots strictly increasing
};

// Canonical reduced echelon form of the row span. Idempotent.
Subspace echelonize(const Matrix& rows);

// Intersection of two subspaces of the same ambient space (Zassenhaus).
Subspace intersect(const Subspace& a, const Subspace& b);

// Every subspace of Z_2^n exactly once, in canonical form, sorted.
// The count is the Galois number G(n). Capped at n <= 6.
std::vector<Subspace> enumerate_subspaces(int n);

// Rank over GF(2) of the dim(A1) x dim(A2) matrix [form(a_i, b_j)] over the
// stored bases. Basis-independent.
int restricted_form_rank(const Matrix& form, const Subspace& a1, const Subspace& a2);

}  // namespace pinchlab::gf2
