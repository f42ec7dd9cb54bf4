#include "pinchlab/descent.hpp"

#include <algorithm>

#include "pinchlab/errors.hpp"
#include "pinchlab/homology.hpp"

namespace pinchlab::descent {

namespace {

gf2::Subspace keep_subspace(const PinchEvent& ev, int g, std::size_t index) {
    std::vector<gf2::BitVec> rows;
    for (const auto& s : ev.keep) {
        if (static_cast<int>(s.size()) != g)
            throw ScheduleError(index, "surgery keep vector has wrong width");
        rows.push_back(gf2::BitVec::from_string(s));
    }
    return gf2::Subspace::span_of(rows, g);
}

}  // namespace

DescentTrace run_descent(const linkhom::HandleDiagram& d0,
                         const std::vector<PinchEvent>& schedule) {
    DescentTrace trace;
    trace.initial = d0;
    trace.schedule = schedule;

    linkhom::HandleDiagram d = d0;
    linkhom::SubgroupPair image = linkhom::f_map(d);
    gf2::Subspace b_in = image.a_in;
    gf2::Subspace b_out = image.a_out;

    trace.diagrams.push_back(d);
    trace.b_in.push_back(b_in);
    trace.b_out.push_back(b_out);
    trace.genus.push_back(d.genus());

    for (std::size_t i = 0; i < schedule.size(); ++i) {
        const PinchEvent& ev = schedule[i];
        switch (ev.kind) {
            case EventKind::Isotopy:
                break;
            case EventKind::Collapse: {
                try {
                    d.collapse(ev.arc);
                } catch (const PreconditionError& e) {
                    throw ScheduleError(i, e.what());
                }
                linkhom::SubgroupPair now = linkhom::f_map(d);
                b_in = gf2::intersect(b_in, now.a_in);
                b_out = gf2::intersect(b_out, now.a_out);
                break;
            }
            case EventKind::Surgery: {
                if (ev.side != "in" && ev.side != "out")
                    throw ScheduleError(i, "surgery side must be 'in' or 'out'");
                gf2::Subspace keep = keep_subspace(ev, d.g(), i);
                if (ev.side == "in")
                    b_in = gf2::intersect(b_in, keep);
                else
                    b_out = gf2::intersect(b_out, keep);
                break;
            }
            case EventKind::Shrink: {
                if (ev.side != "in" && ev.side != "out")
                    throw ScheduleError(i, "shrink side must be 'in' or 'out'");
                if (ev.side == "in")
                    b_in = gf2::Subspace::zero(d.g());
                else
                    b_out = gf2::Subspace::zero(d.g());
                break;
            }
        }
        trace.diagrams.push_back(d);
        trace.b_in.push_back(b_in);
        trace.b_out.push_back(b_out);
        trace.genus.push_back(d.genus());
    }
    return trace;
}

std::optional<std::size_t> termination_time(const DescentTrace& trace, const gf2::BitVec& c,
                                            const std::string& side) {
    if (side != "in" && side != "out")
        throw PreconditionError("termination_time: side must be 'in' or 'out'");
    const auto& track = side == "in" ? trace.b_in : trace.b_out;
    if (track.empty()) throw PreconditionError("termination_time: empty trace");
    if (!track[0].contains(c))
        throw PreconditionError("termination_time: class is not in the initial group");
    for (std::size_t t = 1; t < track.size(); ++t)
        if (!track[t].contains(c)) return t;
    return std::nullopt;
}

ReplayVerdict obstruction_replay(const std::map<int, std::vector<PinchEvent>>& family_schedule) {
    ReplayVerdict verdict;
    auto strata = linkhom::twelve_cycle();

    std::vector<DescentTrace> traces;
    for (int s = 0; s < static_cast<int>(strata.size()); ++s) {
        std::vector<PinchEvent> schedule;
        if (auto it = family_schedule.find(s); it != family_schedule.end()) schedule = it->second;
        try {
            traces.push_back(run_descent(strata[s].diagram, schedule));
        } catch (const ScheduleError& e) {
            verdict.status = "REJECTED";
            verdict.reason = std::string("invalid (genus-increasing or impossible) event: ") +
                             e.what();
            verdict.offending_stratum = s;
            return verdict;
        }
    }

    // Every stratum of the claimed deformation keeps genus in [1, g-1], so its
    // linking rank must stay >= 1 at all times (rank <= genus).
    const gf2::Matrix id2 = gf2::Matrix::identity(2);
    for (int s = 0; s < static_cast<int>(traces.size()); ++s) {
        for (std::size_t t = 0; t < traces[s].n_times(); ++t) {
            int rank = gf2::restricted_form_rank(id2, traces[s].b_in[t], traces[s].b_out[t]);
            if (rank < 1) {
                verdict.status = "REJECTED";
                verdict.reason = "rank(b) fell below the stratum genus floor at time " +
                                 std::to_string(t);
                verdict.offending_stratum = s;
                return verdict;
            }
            if (traces[s].genus[t] < 1) {
                verdict.status = "REJECTED";
                verdict.reason = "stratum left the genus >= 1 range at time " + std::to_string(t);
                verdict.offending_stratum = s;
                return verdict;
            }
        }
    }

    verdict.endpoints_in_target = true;
    verdict.homotopic_via_tracks = true;
    for (int s = 0; s < static_cast<int>(traces.size()); ++s) {
        const auto& trace = traces[s];
        linkhom::SubgroupPair end{trace.b_in.back(), trace.b_out.back(),
                                  gf2::restricted_form_rank(id2, trace.b_in.back(),
                                                            trace.b_out.back())};
        verdict.endpoints.push_back(end);
        if (end.rank_i < 1 || end.rank_i > 1) verdict.endpoints_in_target = false;
        // nested tracks give the free homotopy from the initial cycle
        if (!strata[s].image.a_in.contains(end.a_in) || !strata[s].image.a_out.contains(end.a_out))
            verdict.homotopic_via_tracks = false;
    }
    // the endpoint family must still be a cycle: consecutive strata comparable
    for (std::size_t s = 0; s < verdict.endpoints.size(); ++s) {
        const auto& a = verdict.endpoints[s];
        const auto& b = verdict.endpoints[(s + 1) % verdict.endpoints.size()];
        if (!a.leq(b) && !b.leq(a)) {
            verdict.status = "REJECTED";
            verdict.reason = "endpoint family is not a cycle: strata " + std::to_string(s) +
                             " and " + std::to_string((s + 1) % verdict.endpoints.size()) +
                             " became incomparable";
            verdict.offending_stratum = static_cast<int>(s);
            return verdict;
        }
    }

    // The initial twelve-edge cycle in the order complex of Gr^2[1].
    auto gr = grassmann::build_gr_range(2, 1, 1);
    auto complex = poset::order_complex(gr.order, 1);
    auto cc = homology::ChainComplexZ2::from_complex(complex);
    homology::Z2Cycle cycle{1, {}};
    for (std::size_t s = 0; s < strata.size(); ++s) {
        const auto& a = strata[s].image;
        const auto& b = strata[(s + 1) % strata.size()].image;
        int ia = gr.order.index_of(a.to_gr_pair().to_string());
        int ib = gr.order.index_of(b.to_gr_pair().to_string());
        std::vector<int> edge{std::min(ia, ib), std::max(ia, ib)};
        auto it = std::lower_bound(complex.simplices[1].begin(), complex.simplices[1].end(), edge);
        cycle.support.push_back(static_cast<int>(it - complex.simplices[1].begin()));
    }
    verdict.initial_cycle_bounds = homology::is_boundary(cc, cycle);

    verdict.status = "CONTRADICTION";
    verdict.reason =
        "the deformed boundary cycle is freely homotopic to the initial one inside Gr^2[1], "
        "whose class does not bound; no genus-restricted filling family exists";
    return verdict;
}

PinchEvent event_from_json(const nlohmann::json& j, std::size_t index) {
    PinchEvent ev;
    const std::string kind = j.value("kind", "");
    if (kind == "isotopy") {
        ev.kind = EventKind::Isotopy;
    } else if (kind == "collapse") {
        ev.kind = EventKind::Collapse;
        if (!j.contains("arc")) throw ScheduleError(index, "collapse event needs an 'arc'");
        ev.arc = j["arc"].get<std::string>();
    } else if (kind == "surgery") {
        ev.kind = EventKind::Surgery;
        ev.side = j.value("side", "");
        for (const auto& s : j.value("keep", nlohmann::json::array()))
            ev.keep.push_back(s.get<std::string>());
    } else if (kind == "shrink") {
        ev.kind = EventKind::Shrink;
        ev.side = j.value("side", "");
    } else {
        throw ScheduleError(index, "unknown event kind '" + kind +
                                       "'; pinch-off events (isotopy, collapse, surgery, shrink) "
                                       "are genus-non-increasing");
    }
    return ev;
}

std::vector<PinchEvent> schedule_from_json(const nlohmann::json& j) {
    std::vector<PinchEvent> schedule;
    for (std::size_t i = 0; i < j.size(); ++i) schedule.push_back(event_from_json(j[i], i));
    return schedule;
}

namespace {
nlohmann::json subspace_to_json(const gf2::Subspace& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : s.basis()) rows.push_back(r.to_string());
    return rows;
}
}  // namespace

nlohmann::json trace_to_json(const DescentTrace& trace) {
    nlohmann::json j;
    j["g"] = trace.initial.g();
    nlohmann::json steps = nlohmann::json::array();
    for (std::size_t t = 0; t < trace.n_times(); ++t) {
        steps.push_back({{"t", t},
                         {"diagram", trace.diagrams[t].to_string()},
                         {"genus", trace.genus[t]},
                         {"b_in", subspace_to_json(trace.b_in[t])},
                         {"b_out", subspace_to_json(trace.b_out[t])}});
    }
    j["track"] = steps;
    return j;
}

nlohmann::json verdict_to_json(const ReplayVerdict& verdict) {
    nlohmann::json j;
    j["status"] = verdict.status;
    j["reason"] = verdict.reason;
    if (verdict.offending_stratum >= 0) j["offending_stratum"] = verdict.offending_stratum;
    nlohmann::json eps = nlohmann::json::array();
    for (const auto& e : verdict.endpoints) eps.push_back(e.to_string());
    j["endpoints"] = eps;
    j["initial_cycle_bounds"] = verdict.initial_cycle_bounds;
    j["endpoints_in_target"] = verdict.endpoints_in_target;
    j["homotopic_via_tracks"] = verdict.homotopic_via_tracks;
    return j;
}

}  // namespace pinchlab::descent
