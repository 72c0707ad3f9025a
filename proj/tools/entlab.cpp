// entlab command-line front end.
//
// Exit status: 0 success, 1 invalid input or I/O failure, 2 a numerical
// routine did not converge. Summaries go to stdout; machine-readable
// payloads go to the --json/--csv/--out paths ("-" or a bare --json means stdout).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "entlab/acceptance.hpp"
#include "entlab/entlab.hpp"
#include "entlab/io.hpp"

using namespace entlab;

namespace {

struct Global {
    std::uint64_t seed = 1;
    int threads = 0;
};

// Optional payload destination attached to a flag that may or may not carry a path.
struct Sink {
    CLI::Option* opt = nullptr;
    std::string path;

    bool requested() const { return opt && opt->count() > 0; }
    bool to_stdout() const { return requested() && (path.empty() || path == "-"); }
};

Sink add_sink(CLI::App* app, const std::string& name, const std::string& what) {
    Sink s;
    // the path is filled in after parsing through the option's results
    s.opt = app->add_option(name, what)->expected(0, 1);
    return s;
}

void resolve(Sink& s) {
    if (s.requested() && !s.opt->results().empty()) s.path = s.opt->results().front();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw domain_error("cannot write '" + path + "'");
    f << text;
    if (!f) throw domain_error("write to '" + path + "' failed");
}

void emit_json(const Sink& s, const json& j) {
    if (s.requested()) write_text(s.path, j.dump(2) + "\n");
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

SeesawConfig seesaw_config(const Global& g, const std::string& module, int restarts) {
    SeesawConfig c;
    c.seed = derive_seed(g.seed, module);
    c.restarts = restarts;
    c.threads = g.threads;
    return c;
}

// Named three- or four-party states; d = 0 picks the state's natural dimension.
StateVector named_state(const std::string& name, int d, double alpha) {
    auto dim = [&](int def) { return d > 0 ? d : def; };
    if (name.rfind("file:", 0) == 0) return state_from_json(read_json_file(name.substr(5)));
    if (name == "w") return w_state(dim(2));
    if (name == "chiral") return chiral_basis(dim(2)).vectors.front();
    if (name == "antichiral") return chiral_basis(dim(2), true).vectors.front();
    if (name == "j2") {
        require(dim(3) == 3, "j2 states are qutrit states (d = 3)");
        return j2_basis().vectors.front();
    }
    if (name == "flipconj") return flip_conjugate_basis(dim(3)).vectors.front();
    if (name == "antisym") {
        require(dim(3) == 3, "antisym is the three-qutrit antisymmetric state (d = 3)");
        return psi3_minus();
    }
    if (name == "phase") return phase_state(dim(3), alpha);
    if (name == "m4") {
        require(dim(2) == 2, "m4 is a four-qubit state (d = 2)");
        return four_qubit_M();
    }
    if (name == "qutrit4") {
        require(dim(3) == 3, "qutrit4 is a four-qutrit state (d = 3)");
        return four_qutrit_chiral();
    }
    throw domain_error("unknown state '" + name + "'");
}

// ---- projectors ----

void setup_projectors(CLI::App& app, const Global&) {
    auto* sub = app.add_subcommand("projectors",
                                   "Symmetric, antisymmetric, chiral and antichiral projectors on three qudits, "
                                   "their orthonormal bases, the flip-conjugate bases, and the projector traces.");
    auto d = std::make_shared<int>(3);
    auto out = std::make_shared<std::string>();
    sub->add_option("--d", *d, "local dimension (2..5)")->capture_default_str();
    sub->add_option("--out", *out, "JSON output path");
    sub->callback([d, out] {
        require(*d >= 2 && *d <= 5, "projectors: --d must be in 2..5");
        const auto t = tripartite_projectors(*d);
        json j;
        j["local_dim"] = *d;
        j["projectors"] = {{"S", to_json(t.S)}, {"A", to_json(t.A)}, {"J", to_json(t.J)}, {"Jbar", to_json(t.Jbar)}};
        auto basis_json = [](const SubspaceBasis& b) {
            json a = json::array();
            for (const auto& v : b.vectors) a.push_back(to_json(v));
            return a;
        };
        j["bases"]["S"] = basis_json(symmetric_basis(*d));
        if (*d >= 3) j["bases"]["A"] = basis_json(antisymmetric_basis(*d));
        j["bases"]["J"] = basis_json(chiral_basis(*d));
        j["bases"]["Jbar"] = basis_json(chiral_basis(*d, true));
        j["bases"]["I"] = basis_json(flip_conjugate_basis(*d));
        j["bases"]["Ibar"] = basis_json(flip_conjugate_basis(*d, true));
        const double tr[4] = {t.S.trace().real(), t.A.trace().real(), t.J.trace().real(), t.Jbar.trace().real()};
        j["traces"] = {{"S", tr[0]}, {"A", tr[1]}, {"J", tr[2]}, {"Jbar", tr[3]}};
        std::printf("d=%d  Tr Pi_S=%g  Tr Pi_A=%g  Tr Pi_J=%g  Tr Pi_Jbar=%g\n", *d, tr[0], tr[1], tr[2], tr[3]);
        if (!out->empty()) {
            write_text(*out, j.dump() + "\n");
            std::printf("wrote %s\n", out->c_str());
        }
    });
}

// ---- witness ----

void setup_witness(CLI::App& app, const Global& g) {
    auto* sub = app.add_subcommand("witness",
                                   "Three-party witness operators built from the su(d) structure constants, their "
                                   "partial transposes and the projector-difference GME witness, with optional "
                                   "fully separable / biseparable bounds.");
    struct Args {
        int d = 3;
        std::string which = "minus";
        bool bounds = false;
        int restarts = 64;
        std::string out;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("--d", a->d, "local dimension (2..6)")->capture_default_str();
    sub->add_option("--which", a->which, "operator")
        ->check(CLI::IsMember({"minus", "plus", "pt-minus", "pt-plus", "P"}))
        ->capture_default_str();
    sub->add_flag("--bounds", a->bounds, "report analytic and see-saw bounds");
    sub->add_option("--restarts", a->restarts, "see-saw restarts for --bounds")->capture_default_str();
    sub->add_option("--out", a->out, "JSON output path");
    sub->callback([a, &g] {
        require(a->d >= 2 && a->d <= 6, "witness: --d must be in 2..6");
        Operator W;
        std::optional<WitnessKind> kind;
        if (a->which == "minus" || a->which == "plus") {
            const auto w = build_witnesses(a->d);
            const bool minus = a->which == "minus";
            require(minus || !w.plus_trivial, "W+ vanishes identically for qubits");
            W = minus ? w.minus : w.plus;
            kind = a->d == 2 ? WitnessKind::epsilon : (minus ? WitnessKind::minus : WitnessKind::plus);
        } else if (a->which == "pt-minus" || a->which == "pt-plus") {
            const auto w = build_pt_witnesses(a->d);
            require(a->which == "pt-minus" || !w.plus_trivial, "W+ vanishes identically for qubits");
            W = a->which == "pt-minus" ? w.minus : w.plus;
        } else {
            W = build_gme_witnesses(a->d).P;
        }
        json j;
        j["witness"] = a->which;
        j["local_dim"] = a->d;
        j["operator"] = to_json(W);
        const RealVector ev = eigenvalues(W.matrix());
        j["spectrum"] = {{"min", ev.minCoeff()}, {"max", ev.maxCoeff()}};
        std::printf("%s  d=%d  spectrum [%.10g, %.10g]\n", a->which.c_str(), a->d, ev.minCoeff(), ev.maxCoeff());
        if (a->bounds) {
            const auto cfg = seesaw_config(g, "witness", a->restarts);
            const double fs = fully_separable_max(W, cfg);
            const double bs = biseparable_max(W, cfg).value;
            j["bounds"]["numeric"] = {{"fs", fs}, {"bs", bs}, {"q", ev.maxCoeff()}};
            std::printf("see-saw   fs=%.10g  bs=%.10g  q=%.10g\n", fs, bs, ev.maxCoeff());
            if (kind) {
                const auto b = analytic_bounds(a->d, *kind);
                j["bounds"]["analytic"] = {{"fs", b.fs}, {"bs", b.bs}, {"q", b.q}};
                std::printf("analytic  fs=%.10g  bs=%.10g  q=%.10g\n", b.fs, b.bs, b.q);
            }
        }
        if (!a->out.empty()) write_text(a->out, j.dump() + "\n");
    });
}

// ---- gm ----

void setup_gm(CLI::App& app, const Global& g) {
    auto* sub = app.add_subcommand("gm",
                                   "Geometric measure of entanglement, 1 - max product overlap, by multistart "
                                   "see-saw (W, chiral, AME qutrit, flip-conjugate, four-party and phase states).");
    struct Args {
        std::string state = "w";
        int d = 0;
        int restarts = 64;
        double alpha = pi / 2;
        Sink json;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("--state", a->state, "w, chiral, antichiral, j2, flipconj, antisym, phase, m4, qutrit4 or file:PATH")
        ->capture_default_str();
    sub->add_option("--d", a->d, "local dimension (default: the state's own)");
    sub->add_option("--restarts", a->restarts, "see-saw restarts")->capture_default_str();
    sub->add_option("--alpha", a->alpha, "phase for --state phase")->capture_default_str();
    a->json = add_sink(sub, "--json", "JSON output path (bare flag: stdout)");
    sub->callback([a, &g] {
        resolve(a->json);
        require(a->d == 0 || (a->d >= 2 && a->d <= 8), "gm: --d must be in 2..8");
        require(a->restarts >= 1, "gm: --restarts must be positive");
        const StateVector psi = named_state(a->state, a->d, a->alpha);
        const auto r = max_product_overlap(psi, seesaw_config(g, "gm", a->restarts));
        json j;
        j["state"] = a->state;
        j["parties"] = psi.parties();
        j["local_dim"] = psi.local_dim();
        j["max_product_overlap"] = r.value;
        j["geometric_measure"] = 1.0 - r.value;
        j["restarts"] = a->restarts;
        j["seed"] = g.seed;
        j["converged"] = r.converged;
        if (!a->json.to_stdout())
            std::printf("%s  n=%d d=%d  Lambda^2=%.12f  G=%.12f\n", a->state.c_str(), psi.parties(), psi.local_dim(),
                        r.value, 1.0 - r.value);
        emit_json(a->json, j);
    });
}

// ---- sdp / pptgme ----

struct SdpArgs {
    std::string problem = "overlap";
    int d = 3;
    double theta = 0.0;
    std::string family = "ppt_all";
    int party = 0;
    std::string pair = "w";
    double tol = 1e-8;
    int points = 15;
    std::string spectral = "1,0,0,0";
    Sink json;
    std::string csv;
};

void add_sdp_options(CLI::App* sub, SdpArgs& a, bool with_problem) {
    if (with_problem)
        sub->add_option("--problem", a.problem, "problem")
            ->check(CLI::IsMember({"overlap", "boundary", "gme", "pptgme"}))
            ->capture_default_str();
    sub->add_option("--d", a.d, "local dimension")->capture_default_str();
    sub->add_option("--tol", a.tol, "solver tolerance")->capture_default_str();
    sub->add_option("--points", a.points, "pptgme: number of <W+> pins")->capture_default_str();
    sub->add_option("--csv", a.csv, "pptgme: CSV output path");
    a.json = add_sink(sub, "--json", "JSON output path (bare flag: stdout)");
    if (!with_problem) return;
    sub->add_option("--theta", a.theta, "boundary: direction angle")->capture_default_str();
    sub->add_option("--family", a.family, "boundary: state family")
        ->check(CLI::IsMember({"quantum", "ppt_all", "ppt_single"}))
        ->capture_default_str();
    sub->add_option("--party", a.party, "boundary: transposed party for ppt_single (0-based)")->capture_default_str();
    sub->add_option("--pair", a.pair, "boundary: witness pair")->check(CLI::IsMember({"w", "wpt"}))->capture_default_str();
    sub->add_option("--spectral", a.spectral, "gme: weights of Pi_A,Pi_S,Pi_J,Pi_Jbar (normalized)")
        ->capture_default_str();
}

void run_pptgme(const SdpArgs& a, const Global& g, SdpOptions opt) {
    require(a.points >= 1, "pptgme: --points must be positive");
    const auto s = find_ppt_gme(a.d, a.points, opt, g.threads);
    std::ostringstream csv;
    csv.precision(17);
    csv << "wplus,wminus,a,b,c,min_pt_eig,verdict\n";
    json rows = json::array();
    for (const auto& r : s.rows) {
        const std::string verdict = r.a >= 1e-4 && r.gme ? "ppt_gme" : (r.gme ? "gme" : "undecided");
        csv << r.wplus << "," << r.wminus << "," << r.a << "," << r.b << "," << r.c << "," << r.min_pt_eig << ","
            << verdict << "\n";
        rows.push_back({{"wplus", r.wplus},
                        {"wminus", r.wminus},
                        {"a", r.a},
                        {"b", r.b},
                        {"c", r.c},
                        {"min_pt_eig", r.min_pt_eig},
                        {"trace_P", r.trace_P},
                        {"gme_optimum", r.gme_optimum},
                        {"verdict", verdict}});
    }
    const auto cand = s.candidates();
    if (!a.json.to_stdout()) {
        if (!s.note.empty()) std::printf("%s\n", s.note.c_str());
        std::printf("d=%d  <W+> range [%.10g, %.10g]  %zu/%zu pins give PPT states certified GME\n", a.d, s.pin_lo,
                    s.pin_hi, cand.size(), s.rows.size());
    }
    if (!a.csv.empty()) write_text(a.csv, csv.str());
    emit_json(a.json, {{"problem", "pptgme"},
                       {"local_dim", a.d},
                       {"pin_range", {s.pin_lo, s.pin_hi}},
                       {"rows", rows},
                       {"candidates", cand.size()}});
}

std::array<double, 4> parse_weights(const std::string& s) {
    std::array<double, 4> w{};
    std::stringstream ss(s);
    std::string item;
    int k = 0;
    while (std::getline(ss, item, ',')) {
        require(k < 4, "--spectral takes four comma-separated weights");
        try {
            w[k++] = std::stod(item);
        } catch (const std::exception&) {
            throw domain_error("--spectral: '" + item + "' is not a number");
        }
    }
    require(k == 4, "--spectral takes four comma-separated weights");
    return w;
}

void run_sdp(const SdpArgs& a, const Global& g) {
    require(a.tol > 0.0, "--tol must be positive");
    SdpOptions opt;
    opt.tol = a.tol;
    if (a.problem == "pptgme") return run_pptgme(a, g, opt);
    json j;
    j["problem"] = a.problem;
    j["local_dim"] = a.d;
    std::string summary;
    if (a.problem == "overlap") {
        require(a.d >= 2, "overlap: --d must be at least 2");
        require(a.d <= 6, "overlap: the PPT-relaxed overlap SDP is capped at d = 6");
        const auto fc = flip_conjugate_projectors(a.d);
        const Operator Y = partial_expectation(fc.I, {2}, Vector::Unit(a.d, 0));
        const auto r = ppt_relaxed_overlap(Y, opt);
        const double closed = double(a.d * a.d) / ((a.d + 1.0) * (a.d * a.d - 1.0));
        j["value"] = r.value;
        j["closed_form"] = closed;
        j["status"] = status_name(r.solution.status);
        summary = "PPT-relaxed overlap " + fmt("%.12f", r.value) + "  closed form " + fmt("%.12f", closed);
    } else if (a.problem == "boundary") {
        const BoundaryFamily f = a.family == "quantum"   ? BoundaryFamily::quantum
                                 : a.family == "ppt_all" ? BoundaryFamily::ppt_all
                                                         : BoundaryFamily::ppt_single;
        const auto r = invariant_boundary(a.d, a.theta, f, a.party, a.pair == "wpt", opt);
        j["theta"] = a.theta;
        j["family"] = a.family;
        j["pair"] = a.pair;
        j["value"] = r.value;
        j["wminus"] = r.wminus;
        j["wplus"] = r.wplus;
        summary = "support " + fmt("%.12f", r.value) + " at (" + fmt("%.10g", r.wminus) + ", " +
                  fmt("%.10g", r.wplus) + ")";
    } else {
        require(a.d >= 2 && a.d <= 5, "gme: --d must be in 2..5");
        const auto w = parse_weights(a.spectral);
        const auto t = tripartite_projectors(a.d);
        const double tr = w[0] * t.A.trace().real() + w[1] * t.S.trace().real() + w[2] * t.J.trace().real() +
                          w[3] * t.Jbar.trace().real();
        require(tr > 0.0, "gme: weights give a zero-trace operator");
        const auto st = InvariantState::from_spectral(a.d, w[0] / tr, w[1] / tr, w[2] / tr, w[3] / tr);
        require(st.is_state(), "gme: weights must be nonnegative");
        const auto v = gme_decide(st, 1e-7, opt);
        j["weights"] = {w[0] / tr, w[1] / tr, w[2] / tr, w[3] / tr};
        j["optimum"] = v.optimum;
        j["gme"] = v.gme;
        j["witness"] = v.witness;
        summary = std::string(v.gme ? "GME certified" : "no GME certificate") + ", optimum " + fmt("%.10g", v.optimum);
    }
    if (!a.json.to_stdout()) std::printf("%s: %s\n", a.problem.c_str(), summary.c_str());
    emit_json(a.json, j);
}

void setup_sdp(CLI::App& app, const Global& g) {
    auto* sub = app.add_subcommand("sdp",
                                   "Semidefinite programs: PPT-relaxed overlap of the flip-conjugate subspace, "
                                   "support functions of invariant state families, GME decision for invariant "
                                   "states, and the search for PPT states that are genuinely multipartite entangled.");
    auto a = std::make_shared<SdpArgs>();
    add_sdp_options(sub, *a, true);
    sub->callback([a, &g] {
        resolve(a->json);
        run_sdp(*a, g);
    });

    auto* alias = app.add_subcommand("pptgme", "Same as `sdp --problem pptgme`: sweeps <W+> over the PPT family "
                                               "a Pi_A + b Pi_S + c Pi_Jbar and certifies GME rows.");
    auto b = std::make_shared<SdpArgs>();
    b->problem = "pptgme";
    add_sdp_options(alias, *b, false);
    alias->callback([b, &g] {
        resolve(b->json);
        run_sdp(*b, g);
    });
}

// ---- statespace ----

void setup_statespace(CLI::App& app, const Global& g) {
    auto* sub = app.add_subcommand("statespace",
                                   "Two-dimensional sections of three-qudit state space spanned by a witness pair: "
                                   "support functions of the fully separable, biseparable, PPT, PPT-mixture and "
                                   "quantum sets.");
    struct Args {
        int d = 3;
        std::string pair = "w";
        std::string families = "fs,bs,ppt,pptmix,quantum";
        int grid = 360;
        int restarts = 32;
        std::string csv, svg, json;
        bool overlay = false;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("--d", a->d, "local dimension (3 or 4)")->capture_default_str();
    sub->add_option("--pair", a->pair, "witness pair")->check(CLI::IsMember({"w", "wpt"}))->capture_default_str();
    sub->add_option("--families", a->families, "comma-separated families")->capture_default_str();
    sub->add_option("--grid", a->grid, "number of directions")->capture_default_str();
    sub->add_option("--restarts", a->restarts, "see-saw restarts per direction")->capture_default_str();
    sub->add_option("--csv", a->csv, "CSV output path");
    sub->add_option("--svg", a->svg, "SVG output path");
    sub->add_option("--json", a->json, "JSON output path");
    sub->add_flag("--overlay", a->overlay, "mark PPT states certified GME (pair w only)");
    sub->callback([a, &g] {
        SweepOptions o;
        o.grid = a->grid;
        o.threads = g.threads;
        o.seesaw.seed = derive_seed(g.seed, "statespace");
        o.seesaw.restarts = a->restarts;
        auto t = sweep(a->d, parse_pair(a->pair), parse_families(a->families), o);
        if (a->overlay) add_ppt_gme_overlay(t, find_ppt_gme(a->d, 15, o.sdp, g.threads));
        const auto bad = nesting_violations(t);
        std::printf("d=%d pair=%s grid=%d rows=%zu nesting violations=%zu\n", a->d, a->pair.c_str(), a->grid,
                    t.rows.size(), bad.size());
        for (const auto& s : bad) std::printf("  %s\n", s.c_str());
        emit(t, {a->csv, a->json, a->svg});
    });
}

// ---- povm ----

void setup_povm(CLI::App& app, const Global& g) {
    auto* sub = app.add_subcommand("povm",
                                   "Qutrit-ancilla permutation test on three parties: outcome probabilities "
                                   "(symmetric plus antisymmetric, antichiral, chiral), sampled counts, Tr(rho^3) "
                                   "of the first party and the concentratable entanglement.");
    struct Args {
        std::string state = "w";
        int d = 0;
        long shots = 0;
        bool exact = false;
        Sink json;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("--state", a->state, "preset (w, chiral, antichiral, j2, flipconj, antisym, phase) or JSON path")
        ->capture_default_str();
    sub->add_option("--d", a->d, "local dimension for presets");
    auto* shots = sub->add_option("--shots", a->shots, "number of samples");
    sub->add_flag("--exact", a->exact, "exact probabilities only (default)")->excludes(shots);
    a->json = add_sink(sub, "--json", "JSON output path (bare flag: stdout)");
    sub->callback([a, &g] {
        resolve(a->json);
        require(a->shots >= 0, "povm: --shots must be nonnegative");
        static const std::set<std::string> presets{"w", "chiral", "antichiral", "j2", "flipconj", "antisym", "phase"};
        const StateVector psi = presets.count(a->state) ? named_state(a->state, a->d, pi / 2)
                                                        : state_from_json(read_json_file(a->state));
        require(psi.parties() == 3, "povm: the permutation test needs a three-party state");
        const auto rec = permutation_test(psi, a->exact ? 0 : a->shots, derive_seed(g.seed, "povm"), g.threads);
        const auto tc = trace_cube(reduced_density(psi, {0}));
        const double G = gce(psi, {0, 1, 2}, 3);
        json j;
        j["p"] = rec.probabilities;
        j["counts"] = rec.exact ? json::array() : json(rec.counts);
        j["shots"] = rec.shots;
        j["trace_cube"] = tc.permutation;
        j["trace_cube_routes"] = {{"permutation", tc.permutation},
                                  {"eigenvalues", tc.eigenvalues},
                                  {"probability", tc.probability}};
        j["gce"] = G;
        if (!a->json.to_stdout()) {
            std::printf("p = (%.12f, %.12f, %.12f)\n", rec.probabilities[0], rec.probabilities[1], rec.probabilities[2]);
            if (!rec.exact)
                std::printf("counts = (%ld, %ld, %ld) of %ld\n", rec.counts[0], rec.counts[1], rec.counts[2], rec.shots);
            std::printf("Tr(rho_0^3) = %.12f   GCE(K=3) = %.12f\n", tc.permutation, G);
        }
        emit_json(a->json, j);
    });
}

// ---- verify ----

void setup_verify(CLI::App& app, const Global& g, int* status) {
    auto* sub = app.add_subcommand("verify", "Replays the acceptance checks and prints one pass/fail line each.");
    struct Args {
        std::string suite = "all";
        int grid = 48;
        int points = 15;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("--suite", a->suite, "algebra, bounds, sdp, povm or all")
        ->check(CLI::IsMember(acceptance::suite_names()))
        ->capture_default_str();
    sub->add_option("--grid", a->grid, "directions for the state-space check")->capture_default_str();
    sub->add_option("--points", a->points, "pins for the PPT-GME check")->capture_default_str();
    sub->callback([a, &g, status] {
        acceptance::Options o;
        o.seed = g.seed;
        o.threads = g.threads;
        o.statespace_grid = a->grid;
        o.pptgme_points = a->points;
        int total = 0, failed = 0;
        acceptance::run_suite(a->suite, o, [&](const acceptance::Result& r) {
            std::printf("%s\n", acceptance::format(r).c_str());
            std::fflush(stdout);
            ++total;
            failed += r.pass ? 0 : 1;
        });
        std::printf("%d/%d passed\n", total - failed, total);
        if (failed) *status = 1;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entlab: symmetric-subspace entanglement toolkit"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--seed", g.seed, "master seed")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads (0: ENTLAB_THREADS or hardware)")->capture_default_str();
    app.fallthrough();

    int status = 0;
    setup_projectors(app, g);
    setup_witness(app, g);
    setup_gm(app, g);
    setup_sdp(app, g);
    setup_statespace(app, g);
    setup_povm(app, g);
    setup_verify(app, g, &status);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const convergence_error& e) {
        std::fprintf(stderr, "entlab: did not converge: %s\n", e.what());
        return 2;
    } catch (const domain_error& e) {
        std::fprintf(stderr, "entlab: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "entlab: %s\n", e.what());
        return 1;
    }
    return status;
}
