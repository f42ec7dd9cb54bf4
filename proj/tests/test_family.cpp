#include <doctest.h>

#include <cmath>
#include <random>

#include "pinchlab/errors.hpp"
#include "pinchlab/family.hpp"

using namespace pinchlab;
using family::ParamPoint;
using family::Region;
using family::RegionProfile;

namespace {

constexpr double kTol = 1e-6;

ParamPoint at_o1(std::vector<double> b, int g) {
    return ParamPoint({0, 0, 0, 0, 0, 1}, std::move(b), g);
}

// closed-form section of the chart map T: given s in R^{2g+1}, the unique
// (a, b) with a1 = a2 = 0 mapping to it
ParamPoint section_of_T(const std::vector<double>& s, const RegionProfile& profile, int g) {
    const double u = std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]);
    double v = 0.0;
    for (std::size_t i = 3; i < s.size(); ++i) v += s[i] * s[i];
    v = std::sqrt(v);
    const double e1 = profile.eps1(0), e2 = profile.eps2(0);
    const double c = e2 * e1 / (1.0 + v + e2 * u);
    std::array<double, 6> a{c * s[0], 0, 0, c * s[1], c * s[2], 1.0};
    std::vector<double> b(2 * g - 2, 0.0);
    const double w = c * (1.0 + v);
    for (std::size_t i = 3; i < s.size(); ++i) b[i - 3] = c * s[i] / w;
    return ParamPoint(a, b, g);
}

}  // namespace

TEST_SUITE("family") {

TEST_CASE("region classification") {
    const RegionProfile profile;
    CHECK(family::classify(at_o1({0, 0}, 2), profile).region == Region::ASing);
    CHECK(family::classify(ParamPoint({1, 0, 0, 0, 0, 0}, {0, 0}, 2), profile).region ==
          Region::Outside);

    const double e1 = profile.eps1(0);
    CHECK(family::classify(ParamPoint({e1 / 2, 0, 0, 0, 0, 1}, {0, 0}, 2), profile).region ==
          Region::A1);
    CHECK(family::classify(ParamPoint({1.5 * e1, 0, 0, 0, 0, 1}, {0, 0}, 2), profile).region ==
          Region::A2);
    CHECK(family::classify(ParamPoint({0.5, 0, 0, 0, 0, 1}, {0, 0}, 2), profile).region ==
          Region::Outside);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ParamPoint({0, 0, 0, 0, 0, 0}, {0, 0}, 2), PreconditionError);
    CHECK_THROWS_AS(ParamPoint({0, 0, 0, 0, 0, 1}, {0.9, 0.9}, 2), PreconditionError);
    CHECK_THROWS_AS(ParamPoint({0, 0, 0, 0, 0, 1}, {0}, 2), PreconditionError);
    // sign convention: first nonzero coordinate positive
    ParamPoint p({-1, 0, 0, 0, 0, -1}, {0, 0}, 2);
    CHECK(p.a[0] > 0);
}

TEST_CASE("build_F at the tip") {
    const RegionProfile profile;
    auto f = family::build_F(at_o1({0, 0}, 2), profile);
    REQUIRE(f.degree() == 3);
    const double expected = profile.eps2(0) * profile.eps1(0);
    CHECK(f.s0 == doctest::Approx(0.0));
    CHECK(f.terms[0].first == doctest::Approx(0.0));
    CHECK(f.terms[1].first == doctest::Approx(0.0));
    CHECK(f.terms[2].first == doctest::Approx(expected).epsilon(1e-12));
    CHECK(f.terms[2].second == doctest::Approx(0.0));
}

TEST_CASE("build_F degenerates at the strata boundaries") {
    const RegionProfile profile;
    // ||b|| = 1 kills the top coefficient
    auto f_boundary_b = family::build_F(at_o1({1, 0}, 2), profile);
    CHECK(f_boundary_b.trimmed(1e-15).degree() <= 2);

    // on the A1 boundary the whole bracket vanishes and only the degree-1
    // angular part of the underlying zero set remains
    const double e1 = profile.eps1(0);
    ParamPoint edge({0, 0, 0, e1, 0, 1}, {0.3, 0.4}, 2);
    REQUIRE(family::classify(edge, profile).region == Region::A1);
    auto f_edge = family::build_F(edge, profile);
    CHECK(f_edge.trimmed(1e-18).degree() <= 1);
    CHECK(f_edge.terms[0].first == doctest::Approx(e1).epsilon(1e-12));

    CHECK_THROWS_AS(family::build_F(ParamPoint({0.5, 0, 0, 0, 0, 1}, {0, 0}, 2), profile),
                    DomainError);
}

TEST_CASE("genus map on the stated examples") {
    const RegionProfile profile;
    CHECK(family::genus_map(at_o1({0, 0}, 2), profile, kTol) == 2);
    CHECK(family::genus_map(at_o1({1, 0}, 2), profile, kTol) <= 1);
    CHECK(family::genus_map(ParamPoint({1, 0, 0, 0, 0, 0}, {0, 0}, 2), profile, kTol) == 0);
    CHECK(family::genus_map(at_o1({}, 1), profile, kTol) == 1);
    CHECK(family::genus_map(at_o1({0, 0, 0, 0}, 3), profile, kTol) == 3);
}

TEST_CASE("genus never exceeds g") {
    const RegionProfile profile;
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int g = 1; g <= 3; ++g) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> b(2 * g - 2);
            double n2 = 0;
            for (double& v : b) {
                v = unit(rng);
                n2 += v * v;
            }
            if (n2 > 1.0) continue;
            CHECK(family::genus_map(at_o1(b, g), profile, kTol) <= g);
        }
    }
}

TEST_CASE("normalize_T on the chart") {
    const RegionProfile profile;
    auto zero = family::normalize_T(at_o1({0, 0}, 2), profile);
    REQUIRE(zero.size() == 5);
    for (double v : zero) CHECK(v == doctest::Approx(0.0));

    const double delta = 0.25;
    auto s = family::normalize_T(at_o1({delta, 0}, 2), profile);
    CHECK(s[0] == doctest::Approx(0.0));
    CHECK(s[3] == doctest::Approx(delta / (1 - delta)).epsilon(1e-12));
    CHECK(s[4] == doctest::Approx(0.0));

    const double e1 = profile.eps1(0);
    auto with_a0 = family::normalize_T(ParamPoint({e1 / 3, 0, 0, 0, 0, 1}, {0, 0}, 2), profile);
    CHECK(with_a0[0] != 0.0);

    CHECK_THROWS_AS(family::normalize_T(at_o1({1, 0}, 2), profile), BoundaryError);
    CHECK_THROWS_AS(family::normalize_T(ParamPoint({0, 0.1, 0, 0, 0, 1}, {0, 0}, 2), profile),
                    PreconditionError);
}

TEST_CASE("normalize_T composed with its section is the identity") {
    const RegionProfile profile;
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int g = 2; g <= 3; ++g) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> s(2 * g + 1);
            for (double& v : s) v = unit(rng);
            auto p = section_of_T(s, profile, g);
            REQUIRE(family::classify(p, profile).region != Region::Outside);
            auto back = family::normalize_T(p, profile);
            REQUIRE(back.size() == s.size());
            for (std::size_t i = 0; i < s.size(); ++i)
                CHECK(back[i] == doctest::Approx(s[i]).epsilon(1e-9));
        }
    }
}

TEST_CASE("probe is trivial when a3 = a4 = 0") {
    const RegionProfile profile;
    const double e1 = profile.eps1(0.0);
    ParamPoint a({1.5 * e1, 0, 0, 0, 0, 1}, {0, 0}, 2);
    REQUIRE(family::classify(a, profile).region == Region::A2);
    auto res = family::a2_probe(a, profile, 512, 200);
    CHECK(res.converged);
    CHECK(res.sign_changes == 0);
    CHECK(res.max_displacement == doctest::Approx(0.0));
}

TEST_CASE("probe over random A2 samples") {
    const RegionProfile profile;
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = family::sample_a2(rng, profile, 2);
        REQUIRE(family::classify(a, profile).region == Region::A2);
        auto res = family::a2_probe(a, profile, 1024, 200);
        CHECK(res.converged);
        CHECK(res.sign_changes <= 2);
        CHECK(res.displacement_ratio < 10.0);
    }
}

TEST_CASE("probe rejects a profile too large to contract") {
    RegionProfile absurd;
    absurd.eta_scale = 3.0;
    absurd.eps1_scale = 40.0;
    const double e1 = absurd.eps1(0.5);
    ParamPoint a({0.25 + 2 * e1 * 0.0, 0.5, 0.5, 2 * e1, 0, 1}, {0, 0}, 2);
    REQUIRE(family::classify(a, absurd).region == Region::A2);
    CHECK_THROWS_AS(family::a2_probe(a, absurd, 64, 50), ProfileTooLargeError);
}

TEST_CASE("probe requires an A2 parameter") {
    const RegionProfile profile;
    CHECK_THROWS_AS(family::a2_probe(at_o1({0, 0}, 2), profile, 64, 50), DomainError);
}

}  // TEST_SUITE
