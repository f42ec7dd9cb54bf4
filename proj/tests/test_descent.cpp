#include <doctest.h>

#include <random>

#include "pinchlab/descent.hpp"
#include "pinchlab/errors.hpp"

using namespace pinchlab;
using descent::EventKind;
using descent::PinchEvent;
using linkhom::HandleDiagram;

namespace {

PinchEvent collapse(const std::string& arc) {
    PinchEvent ev;
    ev.kind = EventKind::Collapse;
    ev.arc = arc;
    return ev;
}

PinchEvent isotopy() { return {}; }

}  // namespace

TEST_SUITE("descent") {

TEST_CASE("all-isotopy schedules keep the full tracks") {
    HandleDiagram d0(2);
    auto trace = descent::run_descent(d0, {isotopy(), isotopy(), isotopy()});
    REQUIRE(trace.n_times() == 4);
    for (std::size_t t = 0; t < trace.n_times(); ++t) {
        CHECK(trace.b_in[t] == gf2::Subspace::full(2));
        CHECK(trace.b_out[t] == gf2::Subspace::full(2));
        CHECK(trace.genus[t] == 2);
    }
}

TEST_CASE("a single collapse drops the inner rank") {
    HandleDiagram d0(2);
    auto trace = descent::run_descent(d0, {collapse("H1")});
    CHECK(trace.b_in[0].dim() == 2);
    CHECK(trace.b_in[1].dim() == 1);
    CHECK(trace.b_out[1].dim() == 2);
    CHECK(trace.genus[1] == 1);
}

TEST_CASE("collapsing H1 then G1 lands at ranks (1,1) and genus 1") {
    HandleDiagram d0(2);
    auto trace = descent::run_descent(d0, {collapse("H1"), collapse("G1")});
    CHECK(trace.b_in.back().dim() == 1);
    CHECK(trace.b_out.back().dim() == 1);
    CHECK(trace.genus.back() == 1);
    const int rank = gf2::restricted_form_rank(gf2::Matrix::identity(2), trace.b_in.back(),
                                               trace.b_out.back());
    CHECK(rank == 1);
}

TEST_CASE("surgery intersects with the keep subgroup, shrink kills the side") {
    HandleDiagram d0(2);
    PinchEvent surgery;
    surgery.kind = EventKind::Surgery;
    surgery.side = "in";
    surgery.keep = {"10"};
    PinchEvent shrink;
    shrink.kind = EventKind::Shrink;
    shrink.side = "out";
    auto trace = descent::run_descent(d0, {surgery, shrink});
    CHECK(trace.b_in[1].dim() == 1);
    CHECK(trace.b_in[1].contains(gf2::BitVec::from_string("10")));
    CHECK(trace.b_out[2].dim() == 0);
}

TEST_CASE("termination times") {
    HandleDiagram d0(2);
    auto trace = descent::run_descent(d0, {isotopy(), collapse("H1"), isotopy()});

    CHECK(!descent::termination_time(trace, gf2::BitVec(2), "in").has_value());  // zero class
    // collapsing H1 leaves span{(1,1)} inside; the basis class (1,0) dies with
    // the collapse event
    auto killed = descent::termination_time(trace, gf2::BitVec::from_string("10"), "in");
    REQUIRE(killed.has_value());
    CHECK(*killed == 2);
    CHECK(!descent::termination_time(trace, gf2::BitVec::from_string("11"), "in").has_value());
    CHECK_THROWS_AS(descent::termination_time(trace, gf2::BitVec::from_string("10"), "up"),
                    PreconditionError);
}

TEST_CASE("invalid events carry their schedule index") {
    HandleDiagram d0(2);
    try {
        descent::run_descent(d0, {isotopy(), collapse("H1"), collapse("H1")});
        FAIL("expected a schedule error");
    } catch (const ScheduleError& e) {
        CHECK(e.index == 2);
    }
}

TEST_CASE("schedule JSON parsing") {
    auto schedule = descent::schedule_from_json(nlohmann::json::parse(R"([
        {"kind":"isotopy"},
        {"kind":"collapse","arc":"H1"},
        {"kind":"surgery","side":"in","keep":["10","01"]},
        {"kind":"shrink","side":"out"}
    ])"));
    REQUIRE(schedule.size() == 4);
    CHECK(schedule[1].arc == "H1");
    CHECK(schedule[2].keep.size() == 2);

    CHECK_THROWS_AS(descent::schedule_from_json(nlohmann::json::parse(R"([{"kind":"uncollapse"}])")),
                    ScheduleError);
}

TEST_CASE("obstruction replay certifies the contradiction for admissible schedules") {
    auto verdict = descent::obstruction_replay({});
    CHECK(verdict.status == "CONTRADICTION");
    CHECK_FALSE(verdict.initial_cycle_bounds);
    CHECK(verdict.endpoints_in_target);
    CHECK(verdict.homotopic_via_tracks);
    CHECK(verdict.endpoints.size() == 12);
}

TEST_CASE("obstruction replay rejects killing a stratum") {
    PinchEvent shrink;
    shrink.kind = EventKind::Shrink;
    shrink.side = "in";
    auto verdict = descent::obstruction_replay({{3, {shrink}}});
    CHECK(verdict.status == "REJECTED");
    CHECK(verdict.offending_stratum == 3);
    CHECK(verdict.reason.find("genus floor") != std::string::npos);
}

TEST_CASE("obstruction replay rejects impossible events") {
    // stratum 0 is the single collapse (H1); re-collapsing H1 is impossible
    auto verdict = descent::obstruction_replay({{0, {collapse("H1")}}});
    CHECK(verdict.status == "REJECTED");
    CHECK(verdict.offending_stratum == 0);
}

TEST_CASE("random schedules satisfy the descent invariants") {
    std::mt19937_64 rng(57);
    for (int trial = 0; trial < 200; ++trial) {
        const int g = 1 + static_cast<int>(rng() % 3);
        HandleDiagram d0(g);
        std::vector<PinchEvent> schedule;
        HandleDiagram shadow = d0;
        for (int e = 0, len = static_cast<int>(rng() % 6); e < len; ++e) {
            if (rng() % 2) {
                std::vector<int> open;
                for (int arc = 0; arc < shadow.n_arcs(); ++arc)
                    if (!shadow.is_collapsed(arc)) open.push_back(arc);
                if (open.size() <= 1) break;
                const int arc = open[rng() % open.size()];
                schedule.push_back(collapse(HandleDiagram::arc_name(g, arc)));
                shadow.collapse(arc);
            } else {
                PinchEvent surgery;
                surgery.kind = EventKind::Surgery;
                surgery.side = rng() % 2 ? "in" : "out";
                std::string bits(g, '0');
                for (int b = 0; b < g; ++b) bits[b] = rng() % 2 ? '1' : '0';
                surgery.keep = {bits};
                schedule.push_back(surgery);
            }
        }
        auto trace = descent::run_descent(d0, schedule);
        const gf2::Matrix id = gf2::Matrix::identity(g);
        for (std::size_t t = 0; t + 1 < trace.n_times(); ++t) {
            CHECK(trace.b_in[t].contains(trace.b_in[t + 1]));
            CHECK(trace.b_out[t].contains(trace.b_out[t + 1]));
            CHECK(trace.genus[t + 1] <= trace.genus[t]);
        }
        for (std::size_t t = 0; t < trace.n_times(); ++t)
            CHECK(gf2::restricted_form_rank(id, trace.b_in[t], trace.b_out[t]) <= trace.genus[t]);
    }
}

}  // TEST_SUITE
