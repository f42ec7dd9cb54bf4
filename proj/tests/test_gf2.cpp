#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pinchlab/errors.hpp"
#include "pinchlab/gf2.hpp"

using namespace pinchlab;
using gf2::BitVec;
using gf2::Matrix;
using gf2::Subspace;

TEST_SUITE("gf2") {

TEST_CASE("echelonize produces the canonical reduced basis") {
    auto s = gf2::echelonize(Matrix::from_strings({"110", "011", "101"}));
    CHECK(s.dim() == 2);
    REQUIRE(s.basis().size() == 2);
    CHECK(s.basis()[0].to_string() == "101");  // 110 reduced by 011
    CHECK(s.basis()[1].to_string() == "011");
    // 101 = 110 + 011 is in the span
    CHECK(s.contains(BitVec::from_string("110")));
    CHECK(s.contains(BitVec::from_string("101")));

    CHECK(gf2::echelonize(Matrix(3)).dim() == 0);
    CHECK(gf2::echelonize(Matrix::from_strings({"10", "01"})) == Subspace::full(2));
}

TEST_CASE("echelonize is invariant under row shuffles and additions") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        Matrix m(n);
        const int rows = 1 + static_cast<int>(rng() % 4);
        for (int r = 0; r < rows; ++r) {
            BitVec v(n);
            for (int i = 0; i < n; ++i) v.set(i, rng() % 2);
            m.rows.push_back(v);
        }
        Subspace s = gf2::echelonize(m);

        Matrix shuffled = m;
        std::shuffle(shuffled.rows.begin(), shuffled.rows.end(), rng);
        for (int k = 0; k < 3 && shuffled.n_rows() > 1; ++k) {
            const std::size_t i = rng() % shuffled.rows.size();
            const std::size_t j = rng() % shuffled.rows.size();
            if (i != j) shuffled.rows[i] ^= shuffled.rows[j];
        }
        CHECK(gf2::echelonize(shuffled) == s);
        // idempotence
        Matrix basis_again(n, s.basis());
        CHECK(gf2::echelonize(basis_again) == s);
    }
}

TEST_CASE("subspace counts match the Galois numbers") {
    CHECK(gf2::enumerate_subspaces(1).size() == 2);
    CHECK(gf2::enumerate_subspaces(2).size() == 5);
    CHECK(gf2::enumerate_subspaces(3).size() == 16);
    CHECK(gf2::enumerate_subspaces(4).size() == 67);
    CHECK(gf2::enumerate_subspaces(5).size() == 374);
    CHECK(gf2::enumerate_subspaces(6).size() == 2825);
    CHECK_THROWS_AS(gf2::enumerate_subspaces(7), CapacityError);
    CHECK_THROWS_AS(gf2::enumerate_subspaces(0), PreconditionError);
}

TEST_CASE("enumerated subspaces are canonical and distinct") {
    auto all = gf2::enumerate_subspaces(3);
    std::set<std::string> seen;
    for (const auto& s : all) {
        seen.insert(s.to_string());
        Matrix basis(3, s.basis());
        CHECK(gf2::echelonize(basis) == s);
    }
    CHECK(seen.size() == all.size());
}

TEST_CASE("restricted form rank on the standard examples") {
    const Matrix id2 = Matrix::identity(2);
    const Subspace full = Subspace::full(2);
    const Subspace e1 = gf2::echelonize(Matrix::from_strings({"10"}));
    const Subspace e2 = gf2::echelonize(Matrix::from_strings({"01"}));

    CHECK(gf2::restricted_form_rank(id2, full, full) == 2);
    CHECK(gf2::restricted_form_rank(id2, e1, e2) == 0);
    CHECK(gf2::restricted_form_rank(id2, e1, full) == 1);
    CHECK_THROWS_AS(gf2::restricted_form_rank(id2, Subspace::full(3), full), StructuralError);
}

TEST_CASE("restricted form rank is symmetric under transpose-and-swap") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        Matrix form(n);
        for (int i = 0; i < n; ++i) {
            BitVec row(n);
            for (int j = 0; j < n; ++j) row.set(j, rng() % 2);
            form.rows.push_back(row);
        }
        auto random_subspace = [&] {
            Matrix m(n);
            for (int r = 0; r < 2; ++r) {
                BitVec v(n);
                for (int i = 0; i < n; ++i) v.set(i, rng() % 2);
                m.rows.push_back(v);
            }
            return gf2::echelonize(m);
        };
        Subspace a = random_subspace(), b = random_subspace();
        CHECK(gf2::restricted_form_rank(form, a, b) ==
              gf2::restricted_form_rank(gf2::transpose(form), b, a));
        CHECK(gf2::restricted_form_rank(form, a, b) ==
              testing::brute_restricted_rank(form, a, b));
    }
}

TEST_CASE("subspace intersection agrees with element filtering") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        auto random_subspace = [&] {
            Matrix m(n);
            for (int r = 0; r < 2; ++r) {
                BitVec v(n);
                for (int i = 0; i < n; ++i) v.set(i, rng() % 2);
                m.rows.push_back(v);
            }
            return gf2::echelonize(m);
        };
        Subspace a = random_subspace(), b = random_subspace();
        Subspace inter = gf2::intersect(a, b);
        for (const auto& v : a.elements())
            CHECK(inter.contains(v) == b.contains(v));
        CHECK(a.contains(inter));
        CHECK(b.contains(inter));
    }
}

TEST_CASE("matrix inverse and multiply") {
    Matrix m = Matrix::from_strings({"10", "11"});
    Matrix inv = gf2::inverse(m);
    CHECK(gf2::multiply(m, inv) == Matrix::identity(2));
    CHECK_THROWS_AS(gf2::inverse(Matrix::from_strings({"11", "11"})), DomainError);
}

TEST_CASE("width mismatches are structural errors") {
    Matrix m(3);
    CHECK_THROWS_AS(m.append_row(BitVec::from_string("10")), StructuralError);
    BitVec a = BitVec::from_string("10"), b = BitVec::from_string("100");
    CHECK_THROWS_AS(a ^= b, StructuralError);
}

}  // TEST_SUITE
