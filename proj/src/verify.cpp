#include "pinchlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "pinchlab/descent.hpp"
#include "pinchlab/errors.hpp"
#include "pinchlab/family.hpp"
#include "pinchlab/gf2.hpp"
#include "pinchlab/grassmann.hpp"
#include "pinchlab/homology.hpp"
#include "pinchlab/linkhom.hpp"
#include "pinchlab/symprod.hpp"
#include "pinchlab/trigpoly.hpp"

namespace pinchlab::verify {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<int> trimmed(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

trig::TrigPoly random_trig_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg_dist(1, max_deg);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    while (true) {
        trig::TrigPoly f;
        f.s0 = coeff(rng);
        const int deg = deg_dist(rng);
        for (int k = 0; k < deg; ++k) f.terms.emplace_back(coeff(rng), coeff(rng));
        if (std::hypot(f.terms.back().first, f.terms.back().second) < 1e-3) continue;
        const double norm = f.coeff_norm();
        f.s0 /= norm;
        for (auto& [c, s] : f.terms) c /= norm, s /= norm;
        return f;
    }
}

// Random downward-closed complex from a handful of maximal simplices.
poset::SimplicialComplex random_complex(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nv_dist(3, 10), count_dist(2, 8), dim_dist(0, 3);
    const int nv = nv_dist(rng);
    std::set<std::vector<int>> closed;
    const int n_top = count_dist(rng);
    for (int t = 0; t < n_top; ++t) {
        const int d = std::min(dim_dist(rng), nv - 1);
        std::set<int> verts;
        std::uniform_int_distribution<int> v_dist(0, nv - 1);
        while (static_cast<int>(verts.size()) < d + 1) verts.insert(v_dist(rng));
        std::vector<int> top(verts.begin(), verts.end());
        for (unsigned sub = 1; sub < (1u << top.size()); ++sub) {
            std::vector<int> face;
            for (std::size_t i = 0; i < top.size(); ++i)
                if (sub >> i & 1) face.push_back(top[i]);
            closed.insert(face);
        }
    }
    poset::SimplicialComplex k;
    k.n_vertices = nv;
    for (const auto& s : closed) {
        const int d = static_cast<int>(s.size()) - 1;
        if (d >= static_cast<int>(k.simplices.size())) k.simplices.resize(d + 1);
        k.simplices[d].push_back(s);
    }
    if (k.simplices.empty()) k.simplices.resize(1);
    k.sort_canonical();
    return k;
}

std::vector<double> random_ball_point(std::mt19937_64& rng, int dim) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    while (true) {
        std::vector<double> b(dim);
        double n2 = 0.0;
        for (double& v : b) {
            v = unit(rng);
            n2 += v * v;
        }
        if (n2 <= 1.0) return b;
    }
}

// the twelve-cycle as an edge cycle of the Gr^2[1] order complex
homology::Z2Cycle twelve_edge_cycle(const grassmann::GrRangePoset& gr,
                                    const poset::SimplicialComplex& complex,
                                    const std::vector<linkhom::Stratum>& strata) {
    homology::Z2Cycle cycle{1, {}};
    for (std::size_t s = 0; s < strata.size(); ++s) {
        int ia = gr.order.index_of(strata[s].image.to_string());
        int ib = gr.order.index_of(strata[(s + 1) % strata.size()].image.to_string());
        std::vector<int> edge{std::min(ia, ib), std::max(ia, ib)};
        auto it = std::lower_bound(complex.simplices[1].begin(), complex.simplices[1].end(), edge);
        if (it == complex.simplices[1].end() || *it != edge)
            throw StructuralError("twelve_edge_cycle: adjacent strata are not an edge");
        cycle.support.push_back(static_cast<int>(it - complex.simplices[1].begin()));
    }
    return cycle;
}

CheckResult criterion1(const Options&) {
    CheckResult r{1, "Gr2[1] is a single twelve-gon"};
    auto gr = grassmann::build_gr_range(2, 1, 1);
    auto complex = poset::order_complex(gr.order, 4);
    auto betti = homology::betti_numbers(complex);

    std::vector<int> degree(gr.order.size(), 0);
    if (complex.dim() >= 1) {
        for (const auto& e : complex.simplices[1]) {
            ++degree[e[0]];
            ++degree[e[1]];
        }
    }
    const bool degrees_ok =
        std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });

    r.details["count"] = gr.order.size();
    r.details["betti"] = betti;
    r.details["complex_dim"] = complex.dim();
    r.pass = gr.order.size() == 12 && complex.dim() == 1 && complex.simplices[0].size() == 12 &&
             complex.simplices[1].size() == 12 && degrees_ok && trimmed(betti) == std::vector<int>{1, 1};
    return r;
}

CheckResult criterion2(const Options&) {
    CheckResult r{2, "Gr(Z_2^n) order complexes are contractible, n <= 3"};
    r.pass = true;
    for (int n = 1; n <= 3; ++n) {
        auto gr = grassmann::build_gr(n);
        auto complex = poset::order_complex(gr, poset::max_chain_length(gr) - 1);
        auto reduced = homology::reduced_betti(complex);
        const bool zero = std::all_of(reduced.begin(), reduced.end(), [](int b) { return b == 0; });
        const bool cone = poset::is_cone_with_apex(complex, gr.index_of("<>"));
        r.details["n" + std::to_string(n)] = {{"reduced_betti", reduced}, {"cone_at_zero", cone}};
        r.pass = r.pass && zero && cone;
    }
    return r;
}

CheckResult criterion3(const Options& opt) {
    CheckResult r{3, "longest chains in Gr^g[1,g-1] have 2g-2 terms"};
    r.pass = true;
    for (int g = 2; g <= std::min(opt.g_max, 3); ++g) {
        auto gr = grassmann::build_gr_range(g, 1, g - 1);
        const int chain = poset::max_chain_length(gr.order);
        auto complex = poset::order_complex(gr.order, 2 * g - 1);
        r.details["g" + std::to_string(g)] = {{"max_chain", chain},
                                              {"complex_dim", complex.dim()},
                                              {"elements", gr.order.size()}};
        r.pass = r.pass && chain == 2 * g - 2 && complex.dim() == 2 * g - 3;
    }
    return r;
}

CheckResult criterion4(const Options& opt) {
    CheckResult r{4, "H_1(Gr^2[1]) != 0 and H_3(Gr^3[1,2]) != 0"};
    auto betti2 = grassmann::gr_range_homology(2, 1, 1);
    r.details["betti_g2"] = betti2;
    r.pass = betti2.size() > 1 && betti2[1] >= 1;
    if (opt.g_max >= 3) {
        auto betti3 = grassmann::gr_range_homology(3, 1, 2);
        r.details["betti_g3"] = betti3;
        r.pass = r.pass && betti3.size() > 3 && betti3[3] >= 1;
    }
    return r;
}

CheckResult criterion5(const Options&) {
    CheckResult r{5, "twelve-cycle certificate"};
    auto strata = linkhom::twelve_cycle();
    auto gr = grassmann::build_gr_range(2, 1, 1);

    std::set<std::string> images;
    for (const auto& s : strata) images.insert(s.image.to_string());
    std::set<std::string> target;
    for (const auto& p : gr.elements) target.insert(p.to_string());

    bool arrows = true;
    for (std::size_t i = 1; i < strata.size(); i += 2) {
        const auto& dbl = strata[i].image;
        arrows = arrows && dbl.leq(strata[i - 1].image) &&
                 dbl.leq(strata[(i + 1) % strata.size()].image);
    }

    auto complex = poset::order_complex(gr.order, 1);
    auto cc = homology::ChainComplexZ2::from_complex(complex);
    auto cycle = twelve_edge_cycle(gr, complex, strata);
    const bool bounds = homology::is_boundary(cc, cycle);

    r.details["distinct_images"] = images.size();
    r.details["exhausts_gr21"] = images == target;
    r.details["inclusion_arrows"] = arrows;
    r.details["cycle_is_boundary"] = bounds;
    r.pass = images.size() == 12 && images == target && arrows && !bounds;
    return r;
}

CheckResult criterion6(const Options& opt) {
    CheckResult r{6, "genus stratification of the family at g = 2"};
    const family::RegionProfile profile;
    const double tol = 1e-6;
    const int g = 2;

    // 41 x 41 grid on B^2: interior points of radius <= 0.95 claimed genus 2.
    int interior_checked = 0, interior_failures = 0;
    nlohmann::json failures = nlohmann::json::array();
    for (int i = 0; i <= 40; ++i) {
        for (int j = 0; j <= 40; ++j) {
            const double b2 = -1.0 + i * 0.05, b2p = -1.0 + j * 0.05;
            if (std::hypot(b2, b2p) > 0.95) continue;
            ++interior_checked;
            family::ParamPoint p({0, 0, 0, 0, 0, 1}, {b2, b2p}, g);
            const int genus = family::genus_map(p, profile, tol);
            if (genus != 2) {
                ++interior_failures;
                if (failures.size() < 8)
                    failures.push_back({{"b", {b2, b2p}}, {"genus", genus}});
            }
        }
    }

    // boundary circle ||b|| = 1: genus <= 1
    bool boundary_ok = true;
    for (int k = 0; k < 41; ++k) {
        const double theta = kTwoPi * k / 41;
        family::ParamPoint p({0, 0, 0, 0, 0, 1}, {std::cos(theta), std::sin(theta)}, g);
        boundary_ok = boundary_ok && family::genus_map(p, profile, tol) <= 1;
    }

    // 100 random Outside parameters: genus 0
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    bool outside_ok = true;
    int sampled = 0;
    while (sampled < 100) {
        std::array<double, 6> a;
        double n2 = 0;
        for (double& v : a) {
            v = unit(rng);
            n2 += v * v;
        }
        if (n2 < 1e-3) continue;
        family::ParamPoint p(a, random_ball_point(rng, 2 * g - 2), g);
        if (family::classify(p, profile).region != family::Region::Outside) continue;
        ++sampled;
        outside_ok = outside_ok && family::genus_map(p, profile, tol) == 0;
    }

    r.details["interior_points_checked"] = interior_checked;
    r.details["interior_genus2_failures"] = interior_failures;
    r.details["interior_failure_samples"] = failures;
    r.details["boundary_genus_le_1"] = boundary_ok;
    r.details["outside_genus_0"] = outside_ok;
    r.details["note"] =
        "the interior clause fails mathematically: the genus-2 region Omega is a proper "
        "subset of the b-ball (e.g. b = (0.6, 0) gives 4 simple real roots, genus 1)";
    r.pass = interior_failures == 0 && boundary_ok && outside_ok;
    return r;
}

CheckResult criterion7(const Options& opt) {
    CheckResult r{7, "retraction conserves n_odd"};
    std::mt19937_64 rng(opt.seed + 7);
    const double tol = 1e-6;
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        trig::TrigPoly f = random_trig_poly(rng, 4);
        trig::RootConfig cfg = trig::roots(f, tol);
        const int base = trig::n_odd(cfg, tol);
        for (int step = 0; step <= 20; ++step) {
            const double t = step / 20.0;
            if (trig::n_odd(trig::retract(cfg, t), tol) != base) {
                ++failures;
                break;
            }
        }
    }
    r.details["polynomials"] = 1000;
    r.details["failures"] = failures;
    r.pass = failures == 0;
    return r;
}

CheckResult criterion8(const Options& opt) {
    CheckResult r{8, "conjugate-pair symmetry and root-sum membership"};
    std::mt19937_64 rng(opt.seed + 8);
    std::uniform_int_distribution<int> deg_dist(1, 4);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    int conj_failures = 0, sum_failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = deg_dist(rng);
        std::vector<double> s(2 * n - 1);
        for (double& v : s) v = coeff(rng);
        trig::TrigPoly f = trig::TrigPoly::monic_cos(s);
        const double tol = 1e-8 * (1.0 + f.coeff_norm());
        trig::RootConfig cfg = trig::roots(f, tol);
        if (!trig::conjugate_pair_check(cfg, tol)) ++conj_failures;
        if (!trig::root_sum_check(cfg, tol)) ++sum_failures;
    }
    r.details["conjugate_failures"] = conj_failures;
    r.details["root_sum_failures"] = sum_failures;
    r.pass = conj_failures == 0 && sum_failures == 0;
    return r;
}

CheckResult criterion9(const Options& opt) {
    CheckResult r{9, "A2 fixed-point probe: <= 2 sign changes, displacement bound"};
    const family::RegionProfile profile;
    std::mt19937_64 rng(opt.seed + 9);
    int max_changes = 0;
    double fitted_c = 0.0;
    bool all_converged = true;
    for (int trial = 0; trial < 1000; ++trial) {
        family::ParamPoint a = family::sample_a2(rng, profile, 2);
        family::ProbeResult probe = family::a2_probe(a, profile, 4096, 200);
        all_converged = all_converged && probe.converged;
        max_changes = std::max(max_changes, probe.sign_changes);
        fitted_c = std::max(fitted_c, probe.displacement_ratio);
    }
    r.details["samples"] = 1000;
    r.details["all_converged"] = all_converged;
    r.details["max_sign_changes"] = max_changes;
    r.details["fitted_C"] = fitted_c;
    r.pass = all_converged && max_changes <= 2 && fitted_c < 10.0;
    return r;
}

CheckResult criterion10(const Options& opt) {
    CheckResult r{10, "weak-homotopy homology certificate and order compatibility"};
    auto cmp = linkhom::homology_comparison(2);
    const bool betti_ok = trimmed(cmp.face_betti) == trimmed(cmp.image_betti) &&
                          trimmed(cmp.face_betti) == std::vector<int>{1, 1};
    r.details["face_betti_g2"] = cmp.face_betti;
    r.details["image_betti_g2"] = cmp.image_betti;

    bool compat_ok = true;
    for (int g = 2; g <= std::min(opt.g_max, 3); ++g) {
        auto report = linkhom::order_compatibility_check(g);
        r.details["compat_g" + std::to_string(g)] = {
            {"ok", report.ok}, {"counterexamples", report.counterexamples.size()}};
        compat_ok = compat_ok && report.ok;
    }
    r.pass = betti_ok && compat_ok;
    return r;
}

CheckResult criterion11(const Options& opt) {
    CheckResult r{11, "descent invariants over random schedules"};
    std::mt19937_64 rng(opt.seed + 11);
    std::uniform_int_distribution<int> g_dist(1, std::min(opt.g_max, 3));
    std::uniform_int_distribution<int> len_dist(0, 8);
    std::uniform_int_distribution<int> kind_dist(0, 5);

    int violations = 0;
    const int n_traces = 1000;
    for (int trial = 0; trial < n_traces; ++trial) {
        const int g = g_dist(rng);
        linkhom::HandleDiagram d0(g);
        // occasionally start from an already-degenerate diagram
        if (rng() % 3 == 0) {
            int arc = static_cast<int>(rng() % d0.n_arcs());
            d0.collapse(arc);
        }

        std::vector<descent::PinchEvent> schedule;
        linkhom::HandleDiagram shadow = d0;
        const int len = len_dist(rng);
        for (int e = 0; e < len; ++e) {
            descent::PinchEvent ev;
            switch (kind_dist(rng)) {
                case 0:
                    ev.kind = descent::EventKind::Isotopy;
                    break;
                case 1:
                case 2: {
                    std::vector<int> open;
                    for (int arc = 0; arc < shadow.n_arcs(); ++arc)
                        if (!shadow.is_collapsed(arc)) open.push_back(arc);
                    if (open.size() <= 1) {
                        ev.kind = descent::EventKind::Isotopy;
                        break;
                    }
                    int arc = open[rng() % open.size()];
                    ev.kind = descent::EventKind::Collapse;
                    ev.arc = linkhom::HandleDiagram::arc_name(g, arc);
                    shadow.collapse(arc);
                    break;
                }
                case 3:
                case 4: {
                    ev.kind = descent::EventKind::Surgery;
                    ev.side = rng() % 2 ? "in" : "out";
                    const int n_gen = 1 + static_cast<int>(rng() % g);
                    for (int v = 0; v < n_gen; ++v) {
                        std::string bits(g, '0');
                        for (int b = 0; b < g; ++b) bits[b] = rng() % 2 ? '1' : '0';
                        ev.keep.push_back(bits);
                    }
                    break;
                }
                default:
                    ev.kind = descent::EventKind::Shrink;
                    ev.side = rng() % 2 ? "in" : "out";
                    break;
            }
            schedule.push_back(std::move(ev));
        }

        auto trace = descent::run_descent(d0, schedule);
        const gf2::Matrix id = gf2::Matrix::identity(g);
        for (std::size_t t = 0; t + 1 < trace.n_times(); ++t) {
            if (!trace.b_in[t].contains(trace.b_in[t + 1]) ||
                !trace.b_out[t].contains(trace.b_out[t + 1]))
                ++violations;  // nestedness
            if (trace.genus[t + 1] > trace.genus[t]) ++violations;  // genus monotone
        }
        for (std::size_t t = 0; t < trace.n_times(); ++t) {
            const int rank = gf2::restricted_form_rank(id, trace.b_in[t], trace.b_out[t]);
            if (rank > trace.genus[t]) ++violations;  // linking-rank bound
        }
    }
    r.details["traces"] = n_traces;
    r.details["violations"] = violations;
    r.pass = violations == 0;
    return r;
}

CheckResult criterion12(const Options& opt) {
    CheckResult r{12, "oracle equivalence (subspace enumeration, Betti numbers)"};
    bool subspaces_ok = true;
    for (int n = 1; n <= 4; ++n) {
        auto enumerated = gf2::enumerate_subspaces(n);
        auto brute = oracle::addition_closed_subsets(n);
        std::set<std::uint64_t> brute_set(brute.begin(), brute.end());
        bool all_found = enumerated.size() == brute.size();
        for (const auto& sub : enumerated) {
            std::uint64_t mask = 0;
            for (const auto& v : sub.elements()) {
                unsigned elem = 0;
                for (int i = 0; i < n; ++i)
                    if (v.get(i)) elem |= 1u << i;
                mask |= std::uint64_t{1} << elem;
            }
            all_found = all_found && brute_set.count(mask) > 0;
        }
        r.details["subspace_count_n" + std::to_string(n)] = enumerated.size();
        subspaces_ok = subspaces_ok && all_found;
    }

    std::mt19937_64 rng(opt.seed + 12);
    int betti_mismatches = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto k = random_complex(rng);
        if (homology::betti_numbers(k) != oracle::betti_dense(k)) ++betti_mismatches;
    }
    r.details["betti_mismatches"] = betti_mismatches;
    r.details["random_complexes"] = 100;
    r.pass = subspaces_ok && betti_mismatches == 0;
    return r;
}

}  // namespace

int n_criteria() { return 12; }

CheckResult run_criterion(int idx, const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    switch (idx) {
        case 1: r = criterion1(opt); break;
        case 2: r = criterion2(opt); break;
        case 3: r = criterion3(opt); break;
        case 4: r = criterion4(opt); break;
        case 5: r = criterion5(opt); break;
        case 6: r = criterion6(opt); break;
        case 7: r = criterion7(opt); break;
        case 8: r = criterion8(opt); break;
        case 9: r = criterion9(opt); break;
        case 10: r = criterion10(opt); break;
        case 11: r = criterion11(opt); break;
        case 12: r = criterion12(opt); break;
        default: throw PreconditionError("unknown acceptance criterion index");
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CheckResult> run_all(const Options& opt) {
    std::vector<CheckResult> out;
    for (int i = 1; i <= n_criteria(); ++i) out.push_back(run_criterion(i, opt));
    return out;
}

namespace oracle {

std::vector<std::uint64_t> addition_closed_subsets(int n) {
    if (n < 1 || n > 4) throw PreconditionError("addition_closed_subsets: need 1 <= n <= 4");
    const int n_elems = 1 << n;
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_elems); ++mask) {
        if (!(mask & 1)) continue;  // must contain 0
        bool closed = true;
        for (int x = 0; x < n_elems && closed; ++x) {
            if (!(mask >> x & 1)) continue;
            for (int y = x; y < n_elems && closed; ++y) {
                if (!(mask >> y & 1)) continue;
                if (!(mask >> (x ^ y) & 1)) closed = false;
            }
        }
        if (closed) out.push_back(mask);
    }
    return out;
}

std::vector<int> betti_dense(const poset::SimplicialComplex& k) {
    const int top = k.dim() < 0 ? 0 : k.dim();
    auto counts = k.counts();
    counts.resize(top + 1, 0);

    auto rank_dense = [&](int d) -> int {
        if (d < 1 || d > k.dim()) return 0;
        const auto& rows_level = k.simplices[d - 1];
        const auto& cols_level = k.simplices[d];
        std::vector<std::vector<char>> m(rows_level.size(),
                                         std::vector<char>(cols_level.size(), 0));
        for (std::size_t j = 0; j < cols_level.size(); ++j) {
            const auto& s = cols_level[j];
            std::vector<int> face;
            for (std::size_t omit = 0; omit < s.size(); ++omit) {
                face.clear();
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != omit) face.push_back(s[i]);
                auto it = std::lower_bound(rows_level.begin(), rows_level.end(), face);
                m[it - rows_level.begin()][j] = 1;
            }
        }
        int rank = 0;
        std::size_t lead = 0;
        for (std::size_t col = 0; col < cols_level.size() && lead < rows_level.size(); ++col) {
            std::size_t pivot = lead;
            while (pivot < rows_level.size() && !m[pivot][col]) ++pivot;
            if (pivot == rows_level.size()) continue;
            std::swap(m[pivot], m[lead]);
            for (std::size_t i = 0; i < rows_level.size(); ++i)
                if (i != lead && m[i][col])
                    for (std::size_t c = 0; c < cols_level.size(); ++c) m[i][c] ^= m[lead][c];
            ++lead;
            ++rank;
        }
        return rank;
    };

    std::vector<int> betti(top + 1, 0);
    for (int d = 0; d <= top; ++d)
        betti[d] = static_cast<int>(counts[d]) - rank_dense(d) - rank_dense(d + 1);
    return betti;
}

}  // namespace oracle

}  // namespace pinchlab::verify
