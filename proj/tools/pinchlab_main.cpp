#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "pinchlab/descent.hpp"
#include "pinchlab/errors.hpp"
#include "pinchlab/family.hpp"
#include "pinchlab/grassmann.hpp"
#include "pinchlab/homology.hpp"
#include "pinchlab/linkhom.hpp"
#include "pinchlab/manifest.hpp"
#include "pinchlab/symprod.hpp"
#include "pinchlab/trigpoly.hpp"
#include "pinchlab/verify.hpp"

namespace {

using nlohmann::json;
using namespace pinchlab;

struct Ctx {
    std::string command_line;
    std::string profile_path;
    double tol = 1e-6;
    std::uint64_t seed = 20250811;
    std::chrono::steady_clock::time_point start;
    int exit_code = 0;

    family::RegionProfile profile() const { return cli::load_profile(profile_path); }

    cli::RunManifest manifest(std::map<std::string, double> tolerances = {}) const {
        cli::RunManifest m;
        m.command_line = command_line;
        m.profile = profile();
        m.tolerances = std::move(tolerances);
        m.tolerances.emplace("tol", tol);
        m.seed = seed;
        m.wall_clock_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        return m;
    }

    void emit(json doc) const {
        doc["manifest"] = manifest().to_json();
        std::cout << doc.dump(2) << "\n";
    }
};

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

std::vector<double> parse_coeff_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_array()) throw PreconditionError("--coeffs must be a JSON array [s0, s1, s1', ...]");
    std::vector<double> out;
    for (const auto& v : j) out.push_back(v.get<double>());
    return out;
}

json roots_to_json(const trig::RootConfig& cfg) {
    json arr = json::array();
    for (const auto& p : cfg.points)
        arr.push_back({{"re", p.re}, {"im", p.im}, {"mult", p.mult}});
    return arr;
}

json hasse_json(const poset::FinitePoset& p) {
    json elements = json::array();
    for (int i = 0; i < p.size(); ++i) elements.push_back(p.label(i));
    json covers = json::array();
    for (auto [i, j] : p.hasse_covers()) covers.push_back({i, j});
    return json{{"elements", elements}, {"covers", covers}};
}

void register_gr(CLI::App& app, Ctx& ctx) {
    auto* gr = app.add_subcommand("gr", "Grassmannian posets over GF(2)");
    gr->require_subcommand(1);

    auto n = std::make_shared<int>(2);
    auto* enum_cmd = gr->add_subcommand("enum", "enumerate all subspaces of Z_2^n");
    enum_cmd->add_option("--n", *n, "ambient dimension (<= 6)")->required();
    enum_cmd->callback([&ctx, n] {
        auto subspaces = gf2::enumerate_subspaces(*n);
        std::map<int, int> by_dim;
        for (const auto& s : subspaces) ++by_dim[s.dim()];
        json doc{{"n", *n}, {"count", subspaces.size()}};
        for (auto [d, c] : by_dim) doc["count_dim" + std::to_string(d)] = c;
        ctx.emit(doc);
    });

    struct RangeOpts {
        int n = 2, lo = 1, hi = 1;
        bool homology = false, cycles = false;
        std::string hasse_path, faces_path;
    };
    auto r = std::make_shared<RangeOpts>();
    auto* range_cmd = gr->add_subcommand("range", "the pair poset Gr^n[lo,hi]");
    range_cmd->add_option("--n", r->n)->required();
    range_cmd->add_option("--lo", r->lo)->required();
    range_cmd->add_option("--hi", r->hi)->required();
    range_cmd->add_flag("--homology", r->homology, "also compute Betti numbers");
    range_cmd->add_flag("--cycles", r->cycles, "dump representative cycles as index lists");
    range_cmd->add_option("--hasse", r->hasse_path, "write the Hasse diagram JSON here");
    range_cmd->add_option("--faces", r->faces_path, "write the order-complex face list here");
    range_cmd->callback([&ctx, r] {
        auto gr_poset = grassmann::build_gr_range(r->n, r->lo, r->hi);
        json doc{{"n", r->n}, {"lo", r->lo}, {"hi", r->hi}, {"count", gr_poset.order.size()}};
        if (r->homology || r->cycles || !r->faces_path.empty()) {
            auto complex = poset::order_complex(gr_poset.order,
                                                poset::max_chain_length(gr_poset.order) - 1);
            if (r->homology) doc["betti"] = homology::betti_numbers(complex);
            if (r->cycles) {
                auto cc = homology::ChainComplexZ2::from_complex(complex);
                json reps = json::object();
                for (int k = 0; k <= cc.dim(); ++k) {
                    json level = json::array();
                    for (const auto& z : homology::homology_basis(cc, k))
                        level.push_back(z.support);
                    reps["dim" + std::to_string(k)] = level;
                }
                doc["cycles"] = reps;
            }
            if (!r->faces_path.empty()) {
                std::ofstream out(r->faces_path);
                poset::write_face_list(out, complex);
                doc["faces_file"] = r->faces_path;
            }
        }
        if (!r->hasse_path.empty()) {
            std::ofstream out(r->hasse_path);
            json h = hasse_json(gr_poset.order);
            h["manifest"] = ctx.manifest().to_json();
            out << h.dump(2) << "\n";
            doc["hasse_file"] = r->hasse_path;
        }
        ctx.emit(doc);
    });
}

void register_sym(CLI::App& app, Ctx& ctx) {
    auto* sym = app.add_subcommand("sym", "symmetric-product face structure");
    sym->require_subcommand(1);

    struct FaceOpts {
        int g = 2, min_genus = 0;
        bool homology = false, boundary = false;
        std::string faces_path;
    };
    auto o = std::make_shared<FaceOpts>();
    auto* faces_cmd = sym->add_subcommand("faces", "degeneration strata of Sym^{2g+2}_0(S^1)");
    faces_cmd->add_option("--g", o->g)->required();
    faces_cmd->add_option("--min-genus", o->min_genus);
    faces_cmd->add_flag("--homology", o->homology, "Betti numbers of the face poset");
    faces_cmd->add_flag("--boundary", o->boundary, "exclude the open top cell");
    faces_cmd->add_option("--faces", o->faces_path, "write the order-complex face list here");
    faces_cmd->callback([&ctx, o] {
        const int n = 2 * o->g + 2;
        auto faces = symprod::enumerate_faces(n, [&](const symprod::Face& f) {
            if (o->boundary && f.zero_set.empty()) return false;
            return f.genus >= o->min_genus;
        });
        json list = json::array();
        for (const auto& f : faces)
            list.push_back({{"zero_set", f.zero_set},
                            {"mult_pattern", f.mult_pattern},
                            {"n_odd", f.n_odd},
                            {"genus", f.genus},
                            {"dim", f.dimension}});
        json doc{{"n", n}, {"count", faces.size()}, {"faces", list}};
        if (faces.empty()) {
            if (o->homology) doc["betti"] = json::array();
            ctx.emit(doc);
            return;
        }
        if (o->homology || !o->faces_path.empty()) {
            auto order = symprod::face_poset(n, faces);
            auto complex =
                poset::order_complex(order, std::max(poset::max_chain_length(order) - 1, 0));
            if (o->homology) doc["betti"] = homology::betti_numbers(complex);
            if (!o->faces_path.empty()) {
                std::ofstream out(o->faces_path);
                poset::write_face_list(out, complex);
                doc["faces_file"] = o->faces_path;
            }
        }
        ctx.emit(doc);
    });
}

void register_trig(CLI::App& app, Ctx& ctx) {
    auto* trig_cmd = app.add_subcommand("trig", "trigonometric polynomial root structure");
    trig_cmd->require_subcommand(1);

    auto coeffs = std::make_shared<std::string>();
    auto t_param = std::make_shared<double>(1.0);

    auto* roots_cmd = trig_cmd->add_subcommand("roots", "all 2 deg roots with multiplicities");
    roots_cmd->add_option("--coeffs", *coeffs, "JSON array [s0, s1, s1', ...]")->required();
    roots_cmd->callback([&ctx, coeffs] {
        auto f = trig::TrigPoly::from_coeffs(parse_coeff_json(*coeffs));
        auto cfg = trig::roots(f, ctx.tol);
        ctx.emit(json{{"degree", f.degree()},
                      {"roots", roots_to_json(cfg)},
                      {"n_odd", trig::n_odd(cfg, ctx.tol)},
                      {"conjugate_pairs", trig::conjugate_pair_check(cfg, ctx.tol)},
                      {"root_sum_in_2pi_z", trig::root_sum_check(cfg, ctx.tol)}});
    });

    auto* genus_cmd = trig_cmd->add_subcommand("genus", "genus of the corresponding member");
    genus_cmd->add_option("--coeffs", *coeffs, "JSON array [s0, s1, s1', ...]")->required();
    genus_cmd->callback([&ctx, coeffs] {
        auto f = trig::TrigPoly::from_coeffs(parse_coeff_json(*coeffs));
        auto cfg = trig::roots(f, ctx.tol);
        ctx.emit(json{{"genus", trig::genus_of(f, ctx.tol)}, {"n_odd", trig::n_odd(cfg, ctx.tol)}});
    });

    auto* retract_cmd = trig_cmd->add_subcommand("retract", "push roots toward the real axis");
    retract_cmd->add_option("--coeffs", *coeffs, "JSON array [s0, s1, s1', ...]")->required();
    retract_cmd->add_option("--t", *t_param, "retraction time in [0,1]");
    retract_cmd->callback([&ctx, coeffs, t_param] {
        auto f = trig::TrigPoly::from_coeffs(parse_coeff_json(*coeffs));
        auto cfg = trig::roots(f, ctx.tol);
        auto moved = trig::retract(cfg, *t_param);
        ctx.emit(json{{"t", *t_param},
                      {"roots", roots_to_json(moved)},
                      {"n_odd", trig::n_odd(moved, ctx.tol)}});
    });
}

void register_family(CLI::App& app, Ctx& ctx) {
    auto* fam = app.add_subcommand("family", "the explicit genus-g family");
    fam->require_subcommand(1);

    struct GenusOpts {
        std::string a = "0,0,0,0,0,1", b;
        int g = 2;
    };
    auto o = std::make_shared<GenusOpts>();
    auto* genus_cmd = fam->add_subcommand("genus", "region and genus of one member");
    genus_cmd->add_option("--a", o->a, "6 comma-separated projective coordinates")->required();
    genus_cmd->add_option("--b", o->b, "2g-2 comma-separated ball coordinates");
    genus_cmd->add_option("--g", o->g)->required();
    genus_cmd->callback([&ctx, o] {
        auto avec = parse_number_list(o->a);
        if (avec.size() != 6) throw PreconditionError("--a needs exactly 6 coordinates");
        std::array<double, 6> a;
        std::copy(avec.begin(), avec.end(), a.begin());
        family::ParamPoint p(a, parse_number_list(o->b), o->g);
        auto profile = ctx.profile();
        ctx.emit(json{{"region", family::region_name(family::classify(p, profile).region)},
                      {"genus", family::genus_map(p, profile, ctx.tol)}});
    });

    struct SweepOpts {
        std::string a = "0,0,0,0,0,1", grid = "b:41", out;
        int g = 2;
    };
    auto s = std::make_shared<SweepOpts>();
    auto* sweep_cmd = fam->add_subcommand("sweep", "tabulate region and genus over a grid");
    sweep_cmd->add_option("--g", s->g)->required();
    sweep_cmd->add_option("--grid", s->grid, "grid spec 'b:K' (K points per b axis)");
    sweep_cmd->add_option("--a", s->a, "fixed projective point, 6 comma-separated");
    sweep_cmd->add_option("--out", s->out, "output CSV path")->required();
    sweep_cmd->callback([&ctx, s] {
        auto avec = parse_number_list(s->a);
        if (avec.size() != 6) throw PreconditionError("--a needs exactly 6 coordinates");
        std::array<double, 6> a;
        std::copy(avec.begin(), avec.end(), a.begin());

        if (s->grid.rfind("b:", 0) != 0)
            throw PreconditionError("grid spec must look like b:41");
        const int k = std::stoi(s->grid.substr(2));
        if (k < 1) throw PreconditionError("grid resolution must be positive");
        const int bdim = 2 * s->g - 2;
        auto profile = ctx.profile();

        std::ofstream out(s->out);
        if (!out) throw PreconditionError("cannot open output file: " + s->out);
        out << "# manifest: " << ctx.manifest().to_json().dump() << "\n";
        out << "a0,a1,a2,a3,a4,a5";
        for (int i = 2; i <= s->g; ++i) out << ",b" << i << ",b" << i << "p";
        out << ",region,genus\n";

        std::vector<int> idx(bdim, 0);
        long long rows = 0;
        while (true) {
            std::vector<double> b(bdim);
            double norm2 = 0;
            for (int d = 0; d < bdim; ++d) {
                b[d] = k == 1 ? 0.0 : -1.0 + 2.0 * idx[d] / (k - 1);
                norm2 += b[d] * b[d];
            }
            if (norm2 <= 1.0 + 1e-12) {
                family::ParamPoint p(a, b, s->g);
                auto row = family::evaluate(p, profile, ctx.tol);
                for (int i = 0; i < 6; ++i) out << p.a[i] << (i + 1 < 6 ? "," : "");
                for (double v : b) out << "," << v;
                out << "," << row.region << "," << row.genus << "\n";
                ++rows;
            }
            int d = 0;
            while (d < bdim && ++idx[d] == k) idx[d++] = 0;
            if (d == bdim) break;
        }
        ctx.emit(json{{"rows", rows}, {"out", s->out}});
    });
}

void register_probe(CLI::App& app, Ctx& ctx) {
    auto* probe = app.add_subcommand("probe", "numeric probes");
    probe->require_subcommand(1);

    struct ProbeOpts {
        int samples = 100, grid_alpha = 4096, iters = 200;
    };
    auto o = std::make_shared<ProbeOpts>();
    auto* b_cmd = probe->add_subcommand("appendix-b", "contraction probe on the A2 shell");
    b_cmd->add_option("--samples", o->samples);
    b_cmd->add_option("--seed", ctx.seed);
    b_cmd->add_option("--grid-alpha", o->grid_alpha);
    b_cmd->add_option("--iters", o->iters);
    b_cmd->callback([&ctx, o] {
        auto profile = ctx.profile();
        std::mt19937_64 rng(ctx.seed);
        int max_changes = 0;
        double fitted_c = 0.0;
        bool all_converged = true;
        for (int i = 0; i < o->samples; ++i) {
            auto a = family::sample_a2(rng, profile, 2);
            auto res = family::a2_probe(a, profile, o->grid_alpha, o->iters);
            all_converged = all_converged && res.converged;
            max_changes = std::max(max_changes, res.sign_changes);
            fitted_c = std::max(fitted_c, res.displacement_ratio);
        }
        const bool ok = all_converged && max_changes <= 2;
        ctx.emit(json{{"samples", o->samples},
                      {"all_converged", all_converged},
                      {"max_sign_changes", max_changes},
                      {"fitted_C", fitted_c},
                      {"pass", ok}});
        if (!ok) ctx.exit_code = 1;
    });
}

void register_fmap(CLI::App& app, Ctx& ctx) {
    auto* fmap = app.add_subcommand("fmap", "the linking-form embedding");
    fmap->require_subcommand(1);

    auto check = std::make_shared<bool>(false);
    auto* cyc = fmap->add_subcommand("cycle12", "the twelve pinching strata at g = 2");
    cyc->add_flag("--check", *check, "verify the certificate and set the exit code");
    cyc->callback([&ctx, check] {
        auto strata = linkhom::twelve_cycle();
        json list = json::array();
        for (const auto& s : strata)
            list.push_back({{"diagram", s.diagram.to_string()},
                            {"image", s.image.to_string()},
                            {"rank", s.image.rank_i}});
        json doc{{"strata", list}};
        if (*check) {
            auto result = verify::run_criterion(5, {});
            doc["certificate"] = result.details;
            doc["pass"] = result.pass;
            if (!result.pass) ctx.exit_code = 1;
        }
        ctx.emit(doc);
    });

    auto g = std::make_shared<int>(2);
    auto* compat = fmap->add_subcommand("compat", "order-compatibility sweep");
    compat->add_option("--g", *g)->required();
    compat->callback([&ctx, g] {
        auto report = linkhom::order_compatibility_check(*g);
        ctx.emit(json{{"g", *g},
                      {"ok", report.ok},
                      {"counterexamples", report.counterexamples}});
        if (!report.ok) ctx.exit_code = 1;
    });
}

void register_descent(CLI::App& app, Ctx& ctx) {
    auto* des = app.add_subcommand("descent", "homology descent along pinch schedules");
    des->require_subcommand(1);

    auto path = std::make_shared<std::string>();
    auto* run = des->add_subcommand("run", "play a schedule and report the survival tracks");
    run->add_option("--schedule", *path, "schedule JSON file")->required();
    run->callback([&ctx, path] {
        std::ifstream in(*path);
        if (!in) throw PreconditionError("cannot open schedule file: " + *path);
        json j;
        in >> j;
        const int g = j.value("g", 2);
        linkhom::HandleDiagram d0(g);
        for (const auto& arc : j.value("initial_collapsed", json::array()))
            d0.collapse(arc.get<std::string>());
        auto schedule = descent::schedule_from_json(j.value("schedule", json::array()));
        auto trace = descent::run_descent(d0, schedule);
        ctx.emit(descent::trace_to_json(trace));
    });
}

void register_verify(CLI::App& app, Ctx& ctx) {
    auto* ver = app.add_subcommand("verify", "acceptance checks");
    struct VerifyOpts {
        int g = 3;
        int criterion = 0;
    };
    auto o = std::make_shared<VerifyOpts>();
    auto* all = ver->add_subcommand("all", "run the acceptance suite");
    all->add_option("--g", o->g, "largest genus to exercise (2 or 3)");
    all->add_option("--seed", ctx.seed);
    all->add_option("--criterion", o->criterion, "run a single criterion (1..12)");
    all->callback([&ctx, o] {
        verify::Options vopt{o->g, ctx.seed};
        std::vector<verify::CheckResult> results;
        if (o->criterion > 0)
            results.push_back(verify::run_criterion(o->criterion, vopt));
        else
            results = verify::run_all(vopt);
        json list = json::array();
        bool all_pass = true;
        for (const auto& r : results) {
            std::cerr << "criterion " << r.criterion << " [" << r.name << "]: "
                      << (r.pass ? "PASS" : "FAIL") << " (" << r.seconds << "s)\n";
            list.push_back({{"criterion", r.criterion},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"seconds", r.seconds},
                            {"details", r.details}});
            all_pass = all_pass && r.pass;
        }
        ctx.emit(json{{"results", list}, {"all_pass", all_pass}});
        if (!all_pass) ctx.exit_code = 1;
    });
}

}  // namespace

int main(int argc, char** argv) {
    Ctx ctx;
    ctx.start = std::chrono::steady_clock::now();
    for (int i = 0; i < argc; ++i) {
        if (i) ctx.command_line += " ";
        ctx.command_line += argv[i];
    }

    CLI::App app{"pinchlab: executable combinatorics of pinch-off families in S^3"};
    app.require_subcommand(1);
    app.add_option("--profile", ctx.profile_path, "region profile JSON file");
    app.add_option("--tol", ctx.tol, "root clustering tolerance");

    register_gr(app, ctx);
    register_sym(app, ctx);
    register_trig(app, ctx);
    register_family(app, ctx);
    register_probe(app, ctx);
    register_fmap(app, ctx);
    register_descent(app, ctx);
    register_verify(app, ctx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            app.exit(e);
            return 0;
        }
        std::cerr << app.help() << "\n";
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const pinchlab::PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        nlohmann::json diag{{"error", e.what()}};
        std::cout << diag.dump(2) << "\n";
        return 1;
    }
    return ctx.exit_code;
}
