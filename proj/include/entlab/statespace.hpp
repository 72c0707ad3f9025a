#pragma once

// Two-dimensional sections of three-party state space spanned by a pair of
// witness expectation values, with boundaries for the usual entanglement
// classes and plain-text writers (CSV, JSON, SVG).

#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "entlab/entanglement_sdp.hpp"
#include "entlab/optimize.hpp"

#include "json.hpp"

namespace entlab {

enum class WitnessPairKind { w, wpt };
enum class Family { fs, bs, ppt, pptmix, quantum };

inline std::string pair_name(WitnessPairKind p) { return p == WitnessPairKind::w ? "w" : "wpt"; }

inline WitnessPairKind parse_pair(const std::string& s) {
    if (s == "w") return WitnessPairKind::w;
    if (s == "wpt") return WitnessPairKind::wpt;
    throw domain_error("unknown witness pair '" + s + "' (expected w or wpt)");
}

inline std::string family_name(Family f) {
    switch (f) {
        case Family::fs: return "fs";
        case Family::bs: return "bs";
        case Family::ppt: return "ppt";
        case Family::pptmix: return "pptmix";
        case Family::quantum: return "quantum";
    }
    return "?";
}

inline std::string family_title(Family f) {
    switch (f) {
        case Family::fs: return "fully separable";
        case Family::bs: return "biseparable";
        case Family::ppt: return "PPT";
        case Family::pptmix: return "PPT mixture";
        case Family::quantum: return "quantum";
    }
    return "?";
}

inline Family parse_family(const std::string& s) {
    for (Family f : {Family::fs, Family::bs, Family::ppt, Family::pptmix, Family::quantum})
        if (family_name(f) == s) return f;
    throw domain_error("unknown family '" + s + "'");
}

/// Comma-separated list, e.g. "fs,bs,quantum".
inline std::vector<Family> parse_families(const std::string& list) {
    std::vector<Family> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_family(item));
    return out;
}

struct SweepRow {
    double theta = 0.0;
    Family family = Family::quantum;
    double value = 0.0;    // support function at theta
    double wx = 0.0, wy = 0.0;  // expectation pair at the maximizer
};

struct SweepTable {
    int local_dim = 0;
    WitnessPairKind pair = WitnessPairKind::w;
    int grid = 0;
    std::vector<Family> families;
    std::vector<SweepRow> rows;  // theta-major, families in request order
    std::vector<std::array<double, 2>> ppt_gme;  // optional overlay points

    bool empty() const { return rows.empty(); }

    std::vector<SweepRow> family_rows(Family f) const {
        std::vector<SweepRow> out;
        for (const auto& r : rows)
            if (r.family == f) out.push_back(r);
        return out;
    }
};

struct SweepOptions {
    int grid = 360;
    SeesawConfig seesaw{};
    SdpOptions sdp{};
    int threads = 0;
};

namespace detail {

// |eta>_X |mu>_rest as a three-party vector.
inline Vector biseparable_vector(const Vector& eta, const Vector& mu, int X, int d) {
    const std::vector<int> dims(3, d);
    const std::vector<int> rest = complement({X}, 3);
    Vector v(ipow(d, 3));
    std::vector<int> dg;
    for (long i = 0; i < v.size(); ++i) {
        digits_of(i, dims, dg);
        v(i) = eta(dg[X]) * mu(dg[rest[0]] * d + dg[rest[1]]);
    }
    return v;
}

inline std::array<double, 2> pair_point(const WitnessPair& w, const Vector& v) {
    return {w.minus.matrix().cwiseProduct(v.conjugate() * v.transpose()).sum().real(),
            w.plus.matrix().cwiseProduct(v.conjugate() * v.transpose()).sum().real()};
}

inline std::array<double, 2> pair_point(const WitnessPair& w, const Operator& rho) {
    return {(w.minus * rho).trace().real(), (w.plus * rho).trace().real()};
}

}  // namespace detail

/// Support functions h_F(theta) = max over F of <cos(theta) A + sin(theta) B>
/// for (A, B) = (W-, W+) or their first-party partial transposes.
inline SweepTable sweep(int d, WitnessPairKind pair, const std::vector<Family>& families,
                        const SweepOptions& opt = {}) {
    require(d == 3 || d == 4, "state-space sweeps are provided for d = 3 and d = 4");
    require(opt.grid >= 16, "grid must have at least 16 points");
    require(!families.empty(), "no family requested");
    const bool pt = pair == WitnessPairKind::wpt;
    const WitnessPair w = pt ? build_pt_witnesses(d) : witnesses_from_permutations(d);

    SweepTable table;
    table.local_dim = d;
    table.pair = pair;
    table.grid = opt.grid;
    table.families = families;
    const int nf = static_cast<int>(families.size());
    table.rows.resize(static_cast<std::size_t>(opt.grid) * nf);

    parallel_for(
        opt.grid,
        [&](int k) {
            const double theta = 2.0 * pi * k / opt.grid;
            const Operator O = std::cos(theta) * w.minus + std::sin(theta) * w.plus;
            SeesawConfig cfg = opt.seesaw;
            cfg.threads = 1;
            cfg.seed = derive_seed(opt.seesaw.seed, "statespace", k);
            for (int f = 0; f < nf; ++f) {
                SweepRow& row = table.rows[static_cast<std::size_t>(k) * nf + f];
                row.theta = theta;
                row.family = families[f];
                std::array<double, 2> pt2{};
                switch (families[f]) {
                    case Family::quantum: {
                        const auto e = hermitian_eig(O);
                        row.value = e.values(e.values.size() - 1);
                        pt2 = detail::pair_point(w, Vector(e.vectors.col(e.vectors.cols() - 1)));
                        break;
                    }
                    case Family::fs: {
                        const auto r = product_extremum(O, true, cfg);
                        row.value = r.value;
                        pt2 = detail::pair_point(w, r.argument.amplitudes());
                        break;
                    }
                    case Family::bs: {
                        const auto r = biseparable_max(O, cfg);
                        row.value = r.value;
                        pt2 = detail::pair_point(
                            w, detail::biseparable_vector(r.argument.factors[0], r.argument.factors[1],
                                                          r.bipartition, d));
                        // Both pairs are invariant under local unitaries of the form
                        // U* x U x U (or U x U x U), so a fixed anchor |0> is exact.
                        for (int X = 0; X < 3; ++X) {
                            const Vector zero = Vector::Unit(d, 0);
                            const auto e = hermitian_eig(partial_expectation(O, {X}, zero));
                            const double top = e.values(e.values.size() - 1);
                            if (top > row.value) {
                                row.value = top;
                                pt2 = detail::pair_point(
                                    w, detail::biseparable_vector(zero, e.vectors.col(e.vectors.cols() - 1), X, d));
                            }
                        }
                        break;
                    }
                    case Family::ppt: {
                        const auto r = invariant_boundary(d, theta, BoundaryFamily::ppt_all, 0, pt, opt.sdp);
                        row.value = r.value;
                        pt2 = {r.wminus, r.wplus};
                        break;
                    }
                    case Family::pptmix: {
                        // Mixtures of states PPT across some cut: the support function of
                        // the hull is the max over the three cuts. For the W pair the
                        // cyclic shift commutes with both witnesses and permutes the cuts.
                        const int cuts = pt ? 3 : 1;
                        row.value = -1e300;
                        for (int X = 0; X < cuts; ++X) {
                            const auto r =
                                invariant_boundary(d, theta, BoundaryFamily::ppt_single, X, pt, opt.sdp);
                            if (r.value > row.value) {
                                row.value = r.value;
                                pt2 = {r.wminus, r.wplus};
                            }
                        }
                        break;
                    }
                }
                row.wx = pt2[0];
                row.wy = pt2[1];
            }
        },
        opt.threads);
    return table;
}

/// Points (<W->, <W+>) of the PPT states certified GME by find_ppt_gme.
inline void add_ppt_gme_overlay(SweepTable& table, const PptGmeSweep& s) {
    require(table.pair == WitnessPairKind::w, "the PPT-GME overlay lives in the (W-, W+) plane");
    require(s.local_dim == table.local_dim, "overlay computed for a different dimension");
    for (const auto& r : s.candidates()) table.ppt_gme.push_back({r.wminus, r.wplus});
}

/// Per-theta violations of fs <= bs <= pptmix <= quantum and fs <= ppt <= pptmix.
inline std::vector<std::string> nesting_violations(const SweepTable& t, double tol = 1e-6) {
    std::vector<std::string> out;
    const int nf = static_cast<int>(t.families.size());
    const std::array<std::pair<Family, Family>, 5> order{{{Family::fs, Family::bs},
                                                          {Family::bs, Family::pptmix},
                                                          {Family::pptmix, Family::quantum},
                                                          {Family::fs, Family::ppt},
                                                          {Family::ppt, Family::pptmix}}};
    for (int k = 0; k < t.grid; ++k) {
        std::map<Family, double> v;
        for (int f = 0; f < nf; ++f) v[t.families[f]] = t.rows[static_cast<std::size_t>(k) * nf + f].value;
        // bs <= quantum also when the mixture family was not requested
        std::vector<std::pair<Family, Family>> pairs(order.begin(), order.end());
        pairs.push_back({Family::fs, Family::quantum});
        pairs.push_back({Family::bs, Family::quantum});
        pairs.push_back({Family::ppt, Family::quantum});
        for (const auto& [lo, hi] : pairs) {
            if (!v.count(lo) || !v.count(hi)) continue;
            if (v[lo] > v[hi] + tol) {
                char buf[160];
                std::snprintf(buf, sizeof buf, "theta=%.6f: %s=%.10g > %s=%.10g", t.rows[k * nf].theta,
                              family_name(lo).c_str(), v[lo], family_name(hi).c_str(), v[hi]);
                out.emplace_back(buf);
            }
        }
    }
    return out;
}

/// Number of support points of a family that are distinct at resolution `tol`.
inline int distinct_support_points(const SweepTable& t, Family f, double tol = 1e-6) {
    std::vector<std::array<double, 2>> seen;
    for (const auto& r : t.family_rows(f)) {
        bool dup = false;
        for (const auto& p : seen)
            if (std::hypot(p[0] - r.wx, p[1] - r.wy) <= tol) dup = true;
        if (!dup) seen.push_back({r.wx, r.wy});
    }
    return static_cast<int>(seen.size());
}

/// Largest distance of a support point from the chord through its two
/// neighbours (zero along the edges of a polygon).
inline double max_chord_deviation(const SweepTable& t, Family f) {
    const auto r = t.family_rows(f);
    const std::size_t n = r.size();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = r[(i + n - 1) % n];
        const auto& b = r[i];
        const auto& c = r[(i + 1) % n];
        const double cx = c.wx - a.wx, cy = c.wy - a.wy;
        const double len = std::hypot(cx, cy);
        if (len < 1e-9) continue;
        best = std::max(best, std::abs(cx * (b.wy - a.wy) - cy * (b.wx - a.wx)) / len);
    }
    return best;
}

struct Vertex {
    std::string label;
    double x = 0.0, y = 0.0;                  // from the spectral coefficients
    double measured_x = 0.0, measured_y = 0.0;  // <W->, <W+> on a basis vector of the subspace
};

/// Extreme points of the (W-, W+) section: chiral, antichiral and
/// antisymmetric vertices, plus the symmetric point.
inline std::vector<Vertex> vertices(int d) {
    require(d >= 3, "vertices are defined for d >= 3");
    const auto sc = spectral_coefficients(d);
    const WitnessPair w = witnesses_from_permutations(d);
    std::vector<Vertex> v{{"chiral", -sc.alpha, sc.c_J},
                          {"antichiral", sc.alpha, sc.c_J},
                          {"antisymmetric", 0.0, sc.c_A},
                          {"symmetric", 0.0, sc.c_S}};
    const std::array<SubspaceBasis, 4> b{chiral_basis(d), chiral_basis(d, true), antisymmetric_basis(d),
                                         symmetric_basis(d)};
    for (int k = 0; k < 4; ++k) {
        const auto p = detail::pair_point(w, b[k].vectors.front().amplitudes());
        v[k].measured_x = p[0];
        v[k].measured_y = p[1];
        if (std::abs(p[0] - v[k].x) > 1e-9 || std::abs(p[1] - v[k].y) > 1e-9)
            throw convergence_error("vertex " + v[k].label + " disagrees with the spectral coefficients");
    }
    return v;
}

// ---- writers ----

namespace detail {

inline std::string num17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string num3(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

inline std::string family_color(Family f) {
    switch (f) {
        case Family::quantum: return "#d9d9d9";
        case Family::pptmix: return "#9ecae1";
        case Family::ppt: return "#fdae6b";
        case Family::bs: return "#74c476";
        case Family::fs: return "#756bb1";
    }
    return "#000000";
}

}  // namespace detail

inline std::string to_csv(const SweepTable& t) {
    require(!t.empty(), "empty sweep table");
    std::string s = "theta,family,value,wx,wy\n";
    for (const auto& r : t.rows)
        s += detail::num17(r.theta) + "," + family_name(r.family) + "," + detail::num17(r.value) + "," +
             detail::num17(r.wx) + "," + detail::num17(r.wy) + "\n";
    return s;
}

inline nlohmann::json to_json(const SweepTable& t) {
    require(!t.empty(), "empty sweep table");
    nlohmann::json j;
    j["local_dim"] = t.local_dim;
    j["pair"] = pair_name(t.pair);
    j["grid"] = t.grid;
    for (Family f : t.families) j["families"].push_back(family_name(f));
    j["rows"] = nlohmann::json::array();
    for (const auto& r : t.rows)
        j["rows"].push_back({{"theta", r.theta},
                             {"family", family_name(r.family)},
                             {"value", r.value},
                             {"wx", r.wx},
                             {"wy", r.wy}});
    j["ppt_gme"] = nlohmann::json::array();
    for (const auto& p : t.ppt_gme) j["ppt_gme"].push_back({p[0], p[1]});
    return j;
}

inline std::string to_svg(const SweepTable& t) {
    require(!t.empty(), "empty sweep table");
    const double W = 640, H = 480, M = 40;
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    auto grow = [&](double x, double y) {
        x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
    };
    for (const auto& r : t.rows) grow(r.wx, r.wy);
    for (const auto& p : t.ppt_gme) grow(p[0], p[1]);
    const double sx = (W - 2 * M - 160) / std::max(x1 - x0, 1e-9), sy = (H - 2 * M) / std::max(y1 - y0, 1e-9);
    auto X = [&](double x) { return detail::num3(M + (x - x0) * sx); };
    auto Y = [&](double y) { return detail::num3(H - M - (y - y0) * sy); };

    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n";
    s += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
    if (x0 <= 0 && x1 >= 0)
        s += "<line x1=\"" + X(0) + "\" y1=\"" + Y(y0) + "\" x2=\"" + X(0) + "\" y2=\"" + Y(y1) +
             "\" stroke=\"#888\" stroke-width=\"0.5\"/>\n";
    if (y0 <= 0 && y1 >= 0)
        s += "<line x1=\"" + X(x0) + "\" y1=\"" + Y(0) + "\" x2=\"" + X(x1) + "\" y2=\"" + Y(0) +
             "\" stroke=\"#888\" stroke-width=\"0.5\"/>\n";
    // largest region first
    const std::array<Family, 5> paint{Family::quantum, Family::pptmix, Family::ppt, Family::bs, Family::fs};
    int legend = 0;
    for (Family f : paint) {
        const auto rows = t.family_rows(f);
        if (rows.empty()) continue;
        s += "<polygon fill=\"" + detail::family_color(f) + "\" fill-opacity=\"0.6\" stroke=\"#333\" stroke-width=\"0.8\" points=\"";
        for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? " " : "") + X(rows[i].wx) + "," + Y(rows[i].wy);
        s += "\"/>\n";
        const std::string ly = detail::num3(M + 18.0 * legend);
        s += "<rect x=\"" + detail::num3(W - 180) + "\" y=\"" + ly + "\" width=\"12\" height=\"12\" fill=\"" +
             detail::family_color(f) + "\"/>\n";
        s += "<text x=\"" + detail::num3(W - 162) + "\" y=\"" + detail::num3(M + 18.0 * legend + 10) +
             "\" font-size=\"12\" font-family=\"sans-serif\">" + family_title(f) + "</text>\n";
        ++legend;
    }
    if (!t.ppt_gme.empty()) {
        for (const auto& p : t.ppt_gme)
            s += "<circle cx=\"" + X(p[0]) + "\" cy=\"" + Y(p[1]) + "\" r=\"2\" fill=\"#e31a1c\"/>\n";
        s += "<circle cx=\"" + detail::num3(W - 174) + "\" cy=\"" + detail::num3(M + 18.0 * legend + 6) +
             "\" r=\"3\" fill=\"#e31a1c\"/>\n";
        s += "<text x=\"" + detail::num3(W - 162) + "\" y=\"" + detail::num3(M + 18.0 * legend + 10) +
             "\" font-size=\"12\" font-family=\"sans-serif\">PPT and GME</text>\n";
    }
    const std::string ax = t.pair == WitnessPairKind::w ? "W" : "W^T1";
    s += "<text x=\"" + detail::num3(W / 2 - 40) + "\" y=\"" + detail::num3(H - 8) +
         "\" font-size=\"12\" font-family=\"sans-serif\">&lt;" + ax + "-&gt;</text>\n";
    s += "<text x=\"6\" y=\"" + detail::num3(M - 12) + "\" font-size=\"12\" font-family=\"sans-serif\">&lt;" + ax +
         "+&gt;</text>\n";
    s += "</svg>\n";
    return s;
}

struct EmitTargets {
    std::string csv, json, svg;  // empty: skip
};

/// Writes the requested formats; nothing is written for an empty table.
inline void emit(const SweepTable& t, const EmitTargets& out) {
    require(!t.empty(), "empty sweep table, nothing written");
    // render everything before touching the file system
    const std::string csv = out.csv.empty() ? "" : to_csv(t);
    const std::string json = out.json.empty() ? "" : to_json(t).dump(2) + "\n";
    const std::string svg = out.svg.empty() ? "" : to_svg(t);
    if (!out.csv.empty()) detail::write_file(out.csv, csv);
    if (!out.json.empty()) detail::write_file(out.json, json);
    if (!out.svg.empty()) detail::write_file(out.svg, svg);
}

}  // namespace entlab
