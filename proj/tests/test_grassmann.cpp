#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pinchlab/errors.hpp"
#include "pinchlab/grassmann.hpp"
#include "pinchlab/homology.hpp"

using namespace pinchlab;

TEST_SUITE("grassmann") {

TEST_CASE("full Grassmannian posets") {
    CHECK(grassmann::build_gr(1).size() == 2);
    CHECK(grassmann::build_gr(2).size() == 5);
    CHECK(grassmann::build_gr(3).size() == 16);
    CHECK(poset::max_chain_length(grassmann::build_gr(2)) == 3);
    CHECK_THROWS_AS(grassmann::build_gr(5), CapacityError);
}

TEST_CASE("pair poset cardinalities") {
    CHECK(grassmann::build_gr_range(2, 1, 1).order.size() == 12);
    CHECK(grassmann::build_gr_range(2, 0, 2).order.size() == 25);
    // brute-force oracle puts the rank-2 pair count at 1 (only (full, full)),
    // not the 4 the draft example guessed; the oracle wins.
    CHECK(grassmann::build_gr_range(2, 2, 2).order.size() == 1);
    CHECK_THROWS_AS(grassmann::build_gr_range(2, 2, 1), PreconditionError);
    CHECK_THROWS_AS(grassmann::build_gr_range(4, 1, 3), CapacityError);
}

TEST_CASE("pair counts cross-checked against the element-level rank oracle") {
    for (int n = 1; n <= 3; ++n) {
        auto subspaces = gf2::enumerate_subspaces(n);
        const gf2::Matrix id = gf2::Matrix::identity(n);
        for (int lo = 0; lo <= n; ++lo) {
            for (int hi = lo; hi <= n; ++hi) {
                int count = 0;
                for (const auto& a : subspaces)
                    for (const auto& b : subspaces) {
                        const int rank = testing::brute_restricted_rank(id, a, b);
                        if (rank >= lo && rank <= hi) ++count;
                    }
                CHECK(grassmann::build_gr_range(n, lo, hi).order.size() == count);
            }
        }
    }
}

TEST_CASE("rank cache obeys the dimension bound") {
    auto gr = grassmann::build_gr_range(3, 0, 3);
    for (const auto& p : gr.elements) {
        CHECK(p.rank_i <= std::min(p.a1.dim(), p.a2.dim()));
        CHECK(p.rank_i >= 0);
    }
}

TEST_CASE("Gr2[1] is a twelve-gon") {
    auto gr = grassmann::build_gr_range(2, 1, 1);
    auto complex = poset::order_complex(gr.order, 3);
    CHECK(complex.dim() == 1);
    CHECK(complex.simplices[0].size() == 12);
    CHECK(complex.simplices[1].size() == 12);
    std::vector<int> degree(12, 0);
    for (const auto& e : complex.simplices[1]) {
        ++degree[e[0]];
        ++degree[e[1]];
    }
    CHECK(std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; }));
    CHECK(homology::betti_numbers(complex) == std::vector<int>{1, 1});
}

TEST_CASE("range homology examples") {
    CHECK(grassmann::gr_range_homology(2, 1, 1) == std::vector<int>{1, 1});
    auto contractible = grassmann::gr_range_homology(2, 0, 2);
    CHECK(contractible[0] == 1);
    for (std::size_t i = 1; i < contractible.size(); ++i) CHECK(contractible[i] == 0);
}

TEST_CASE("full Grassmannians have vanishing reduced homology, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        auto gr = grassmann::build_gr(n);
        auto complex = poset::order_complex(gr, poset::max_chain_length(gr) - 1);
        for (int b : homology::reduced_betti(complex)) CHECK(b == 0);
    }
}

TEST_CASE("Gr3[1,2] reaches dimension 3 with nonzero H_3") {
    auto gr = grassmann::build_gr_range(3, 1, 2);
    auto complex = poset::order_complex(gr.order, 5);
    CHECK(complex.dim() == 3);  // longest chains have 2g-2 = 4 terms
    auto betti = homology::betti_numbers(complex);
    REQUIRE(betti.size() == 4);
    CHECK(betti[3] >= 1);
}

}  // TEST_SUITE
