#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"

using namespace entlab;
using namespace testing_helpers;

namespace {

SweepOptions small(int grid = 16) {
    SweepOptions o;
    o.grid = grid;
    o.seesaw.restarts = 16;
    o.seesaw.seed = 3;
    return o;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Vertices, SpectralPoints) {
    const auto v3 = vertices(3);
    const double a = 3.0 * std::sqrt(3.0);
    EXPECT_NEAR(v3[0].measured_x, -a, 1e-10);
    EXPECT_NEAR(v3[0].measured_y, -5.0 / 3.0, 1e-10);
    EXPECT_NEAR(v3[1].measured_x, a, 1e-10);
    EXPECT_NEAR(v3[2].measured_y, 40.0 / 3.0, 1e-10);
    EXPECT_NEAR(v3[3].measured_y, 4.0 / 3.0, 1e-10);
    const auto v4 = vertices(4);
    EXPECT_NEAR(v4[3].measured_x, 0.0, 1e-10);
    EXPECT_NEAR(v4[3].measured_y, 3.0, 1e-10);
    EXPECT_THROW(vertices(2), domain_error);
}

TEST(Sweep, QuantumSupportIsTriangle) {
    const auto t = sweep(3, WitnessPairKind::w, {Family::quantum, Family::fs}, small());
    const auto v = vertices(3);
    ASSERT_EQ(t.rows.size(), 32u);
    for (const auto& r : t.family_rows(Family::quantum)) {
        double h = -1e300;
        for (int k = 0; k < 3; ++k) h = std::max(h, std::cos(r.theta) * v[k].x + std::sin(r.theta) * v[k].y);
        EXPECT_NEAR(r.value, h, 1e-9);
        EXPECT_NEAR(std::cos(r.theta) * r.wx + std::sin(r.theta) * r.wy, r.value, 1e-8);
    }
    const auto fs = t.family_rows(Family::fs);
    EXPECT_NEAR(fs.front().theta, 0.0, 1e-15);
    EXPECT_NEAR(fs.front().value, 1.5, 1e-7);
}

TEST(Sweep, FamiliesNestAndTransposedPairIsCurved) {
    const auto fam = parse_families("fs,bs,ppt,pptmix,quantum");
    const auto tw = sweep(3, WitnessPairKind::w, fam, small());
    EXPECT_TRUE(nesting_violations(tw).empty());
    const auto tp = sweep(3, WitnessPairKind::wpt, fam, small());
    EXPECT_TRUE(nesting_violations(tp).empty());
    EXPECT_LT(max_chord_deviation(tw, Family::quantum), 1e-8);
    EXPECT_GT(max_chord_deviation(tp, Family::quantum), 1e-4);
    EXPECT_GT(distinct_support_points(tp, Family::quantum), distinct_support_points(tw, Family::quantum));
}

TEST(Sweep, InputErrors) {
    EXPECT_THROW(sweep(5, WitnessPairKind::w, {Family::quantum}, small()), domain_error);
    EXPECT_THROW(sweep(3, WitnessPairKind::w, {Family::quantum}, small(8)), domain_error);
    EXPECT_THROW(sweep(3, WitnessPairKind::w, {}, small()), domain_error);
    EXPECT_THROW(parse_families("fs,nope"), domain_error);
    EXPECT_THROW(parse_pair("v"), domain_error);
    EXPECT_EQ(parse_pair("wpt"), WitnessPairKind::wpt);
}

TEST(Writers, CsvJsonSvgAndDeterminism) {
    const auto a = sweep(3, WitnessPairKind::w, {Family::fs, Family::bs, Family::quantum}, small());
    auto o = small();
    o.threads = 3;
    const auto b = sweep(3, WitnessPairKind::w, {Family::fs, Family::bs, Family::quantum}, o);
    const std::string csv = to_csv(a);
    EXPECT_EQ(csv, to_csv(b));
    EXPECT_EQ(csv.rfind("theta,family,value,wx,wy\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 16 * 3);

    const auto j = to_json(a);
    EXPECT_EQ(j["local_dim"], 3);
    EXPECT_EQ(j["rows"].size(), 48u);
    EXPECT_EQ(j["families"][1], "bs");

    SweepTable withdots = a;
    withdots.ppt_gme.push_back({0.0, 5.0});
    const std::string svg = to_svg(withdots);
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("biseparable"), std::string::npos);
    EXPECT_NE(svg.find("PPT and GME"), std::string::npos);
    EXPECT_EQ(svg, to_svg(withdots));
}

TEST(Writers, EmitWritesFilesAndRefusesEmptyTable) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "entlab_statespace_test";
    fs::create_directories(dir);
    const std::string csv = (dir / "a.csv").string(), js = (dir / "a.json").string(), svg = (dir / "a.svg").string();
    fs::remove(csv);
    SweepTable empty;
    EXPECT_THROW(emit(empty, {csv, "", ""}), domain_error);
    EXPECT_FALSE(fs::exists(csv));

    const auto t = sweep(3, WitnessPairKind::w, {Family::quantum}, small());
    emit(t, {csv, js, svg});
    EXPECT_EQ(slurp(csv), to_csv(t));
    EXPECT_EQ(nlohmann::json::parse(slurp(js))["grid"], 16);
    EXPECT_NE(slurp(svg).find("</svg>"), std::string::npos);
    fs::remove_all(dir);
}
