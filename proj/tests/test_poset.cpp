#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "pinchlab/errors.hpp"
#include "pinchlab/grassmann.hpp"
#include "pinchlab/poset.hpp"

using namespace pinchlab;
using poset::FinitePoset;

namespace {

FinitePoset chain_abc() {
    return FinitePoset({"a", "b", "c"}, [](int i, int j) { return i <= j; });
}

FinitePoset antichain(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return FinitePoset(labels, [](int i, int j) { return i == j; });
}

// random poset: transitive closure of a random DAG on the index order
FinitePoset random_poset(std::mt19937_64& rng, int n) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 3 == 0) leq[i][j] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (leq[i][k] && leq[k][j]) leq[i][j] = true;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    return FinitePoset(labels, [&](int i, int j) { return leq[i][j]; });
}

}  // namespace

TEST_SUITE("poset") {

TEST_CASE("construction validates the order axioms") {
    CHECK_THROWS_AS(FinitePoset({"a", "b"}, [](int, int) { return false; }), StructuralError);
    CHECK_THROWS_AS(FinitePoset({"a", "b"}, [](int, int) { return true; }), StructuralError);
    // non-transitive: a<b, b<c but not a<c
    CHECK_THROWS_AS(FinitePoset({"a", "b", "c"},
                                [](int i, int j) {
                                    return i == j || (i == 0 && j == 1) || (i == 1 && j == 2);
                                }),
                    StructuralError);
}

TEST_CASE("up sets of a chain") {
    auto p = chain_abc();
    CHECK(p.up_set("a") == std::vector<int>{0, 1, 2});
    CHECK(p.up_set("c") == std::vector<int>{2});
    CHECK_THROWS_AS(p.up_set("z"), PreconditionError);
}

TEST_CASE("up set of the zero subspace in Gr(Z_2^2) is everything") {
    auto gr = grassmann::build_gr(2);
    CHECK(gr.up_set("<>").size() == 5);
}

TEST_CASE("order complex of small posets") {
    auto triangle = poset::order_complex(chain_abc(), 2);
    CHECK(triangle.counts() == std::vector<std::size_t>{3, 3, 1});
    triangle.validate_closed();

    auto sparse = poset::order_complex(antichain(3), 2);
    CHECK(sparse.counts() == std::vector<std::size_t>{3});
}

TEST_CASE("order complex chains agree with brute-force subset filtering") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        auto p = random_poset(rng, 2 + static_cast<int>(rng() % 7));
        auto k = poset::order_complex(p, p.size());
        CHECK(k.size() == testing::brute_chains(p).size());
        k.validate_closed();
    }
}

TEST_CASE("order complex respects max_dim and the budget") {
    auto p = chain_abc();
    auto edges_only = poset::order_complex(p, 1);
    CHECK(edges_only.dim() == 1);
    CHECK_THROWS_AS(poset::order_complex(p, 2, 3), CapacityError);
    try {
        poset::order_complex(p, 2, 3);
    } catch (const CapacityError& e) {
        CHECK(std::string(e.what()).find("dim0") != std::string::npos);  // partial statistics
    }
}

TEST_CASE("cone detection") {
    // hollow triangle: three vertices, three edges, no filling face
    poset::SimplicialComplex hollow;
    hollow.n_vertices = 3;
    hollow.simplices = {{{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}};
    hollow.sort_canonical();
    for (int v = 0; v < 3; ++v) CHECK_FALSE(poset::is_cone_with_apex(hollow, v));

    auto gr2 = grassmann::build_gr(2);
    auto complex = poset::order_complex(gr2, poset::max_chain_length(gr2) - 1);
    CHECK(poset::is_cone_with_apex(complex, gr2.index_of("<>")));
}

TEST_CASE("up-sets are cones over their minimum in random posets") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_poset(rng, 2 + static_cast<int>(rng() % 6));
        for (int x = 0; x < p.size(); ++x) {
            auto up = p.up_set(x);
            auto sub = p.induced(up);
            auto complex = poset::order_complex(sub, sub.size());
            // x is index 0 of the induced subposet (up_set lists x first)
            const int apex = static_cast<int>(
                std::find(up.begin(), up.end(), x) - up.begin());
            CHECK(poset::is_cone_with_apex(complex, apex));
        }
    }
}

TEST_CASE("max chain lengths in Gr(Z_2^n)") {
    for (int n = 1; n <= 3; ++n)
        CHECK(poset::max_chain_length(grassmann::build_gr(n)) == n + 1);
    CHECK(poset::max_chain_length(grassmann::build_gr_range(2, 1, 1).order) == 2);
    CHECK(poset::max_chain_length(grassmann::build_gr_range(3, 1, 2).order) == 4);
}

TEST_CASE("PINCHLAB_BUDGET overrides the default simplex budget") {
    CHECK(poset::default_simplex_budget() == 10'000'000);
    setenv("PINCHLAB_BUDGET", "5", 1);
    CHECK(poset::default_simplex_budget() == 5);
    unsetenv("PINCHLAB_BUDGET");
}

TEST_CASE("face list export") {
    auto k = poset::order_complex(chain_abc(), 2);
    std::ostringstream os;
    poset::write_face_list(os, k);
    CHECK(os.str() == "0\n1\n2\n0 1\n0 2\n1 2\n0 1 2\n");
}

}  // TEST_SUITE
