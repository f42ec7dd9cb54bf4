#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pinchlab/gf2.hpp"
#include "pinchlab/linkhom.hpp"

namespace pinchlab::descent {

enum class EventKind { Isotopy, Collapse, Surgery, Shrink };

// One step of a discretized pinch-off process. Collapse events act on the
// diagram; surgery intersects a side's surviving track with an explicit
// subgroup; shrink kills a side outright.
struct PinchEvent {
    EventKind kind = EventKind::Isotopy;
    std::string arc;                // collapse: "H1", "G2", ...
    std::string side;               // surgery/shrink: "in" or "out"
    std::vector<std::string> keep;  // surgery: basis bit strings (width g)
};

// The surviving-subgroup tracks along a schedule. Index t holds the state
// after t events; index 0 is the initial state.
struct DescentTrace {
    linkhom::HandleDiagram initial;
    std::vector<PinchEvent> schedule;
    std::vector<linkhom::HandleDiagram> diagrams;
    std::vector<gf2::Subspace> b_in, b_out;
    std::vector<int> genus;

    DescentTrace() : initial(1) {}
    std::size_t n_times() const { return b_in.size(); }
};

// Plays the schedule against the evolving diagram. The tracks start at the
// embedded image of the initial diagram, shrink monotonically (classes that
// terminate stay terminated) and stay subgroups. Throws ScheduleError at the
// offending index for invalid events.
DescentTrace run_descent(const linkhom::HandleDiagram& d0, const std::vector<PinchEvent>& schedule);

// First time t with c absent from the side's track, or nullopt if the class
// never terminates. The class must belong to the initial track.
std::optional<std::size_t> termination_time(const DescentTrace& trace, const gf2::BitVec& c,
                                            const std::string& side);

// Replays a claimed genus-in-[1,g-1] deformation over the twelve boundary
// strata at g = 2. Schedules that increase genus or kill a whole stratum's
// linking rank are rejected; otherwise the monotone tracks witness that the
// deformed cycle is freely homotopic to the initial one inside Gr^2[1], whose
// non-bounding certifies that no filling family exists.
struct ReplayVerdict {
    std::string status;  // "CONTRADICTION" (no filling exists) or "REJECTED"
    std::string reason;
    int offending_stratum = -1;
    std::vector<linkhom::SubgroupPair> endpoints;
    bool initial_cycle_bounds = false;
    bool endpoints_in_target = false;
    bool homotopic_via_tracks = false;
};

ReplayVerdict obstruction_replay(const std::map<int, std::vector<PinchEvent>>& family_schedule);

// JSON wire format: events as {"kind":"collapse","arc":"H1"}, surgery carries
// "side" and "keep" (bit strings), shrink carries "side". Unknown kinds are
// rejected: pinch-off events are genus-non-increasing by definition.
PinchEvent event_from_json(const nlohmann::json& j, std::size_t index);
std::vector<PinchEvent> schedule_from_json(const nlohmann::json& j);
nlohmann::json trace_to_json(const DescentTrace& trace);
nlohmann::json verdict_to_json(const ReplayVerdict& verdict);

}  // namespace pinchlab::descent
