#include "qescal/io.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>

using namespace qescal;

TEST(Json, RationalPolyRoundTrip) {
    const RationalPoly p{Rational(1, 3), Rational(0), Rational(-7, 2)};
    const auto j = io::to_json(p);
    EXPECT_EQ(j, (io::json{"1/3", "0/1", "-7/2"}));
    EXPECT_EQ(io::rational_poly_from_json(j), p);
}

TEST(Json, WaveCarriesExactCoefficients) {
    const auto j = io::to_json(chi_minus(make_params(Rational(1)), 0));
    EXPECT_EQ(j["power"], "3/1");
    EXPECT_EQ(j["num"], (io::json{"7/2", "1/1"}));
    EXPECT_EQ(j["den"], (io::json{"5/2", "1/1"}));
    EXPECT_TRUE(j["scale"].contains("square"));
    EXPECT_GT(j["scale"]["value"].get<double>(), 0.0);
}

TEST(Json, SpectrumReportSchema) {
    const auto rep = spectrum_report([](double r) { return r * r; }, "oscillator", {Rational(3)}, GridSpec{0.0, 10.0, 200});
    const auto j = io::to_json(rep);
    for (const char* key : {"analytic", "numeric", "extrapolated", "rel_errors", "grid"}) EXPECT_TRUE(j.contains(key));
    EXPECT_EQ(j["analytic"][0], "3/1");
    EXPECT_EQ(j["grid"]["n_points"], 200);
}

TEST(Json, PolynomialKeyedByMultiIndex) {
    const auto p = centered_power_sum(2, 2);  // (x1 - x2)^2 / 2
    const auto j = io::to_json(p);
    EXPECT_EQ(j["2,0"], "1/2");
    EXPECT_EQ(j["1,1"], "-1/1");
    EXPECT_EQ(j["0,2"], "1/2");
}

TEST(Json, ResidualReportSchema) {
    ResidualReport r;
    r.energy = 14;
    r.step = 1e-3;
    r.points.push_back({{1.0, -1.0}, 0.5, 14.0000001, 1e-8});
    const auto j = io::to_json(r);
    const auto& pt = j["points"][0];
    for (const char* key : {"point", "psi", "H_psi_over_psi", "E", "rel_residual"}) EXPECT_TRUE(pt.contains(key));
    EXPECT_DOUBLE_EQ(j["max_rel_residual"].get<double>(), 1e-8);
}

TEST(Csv, SeventeenDigitsRoundTripBitExactly) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    io::CsvTable t;
    t.columns = {"a", "b", "c"};
    for (int i = 0; i < 200; ++i) t.rows.push_back({u(rng), u(rng) * 1e-300, std::exp(u(rng) * 1e-4)});
    t.rows.push_back({std::numeric_limits<double>::denorm_min(), std::numeric_limits<double>::max(), -0.0});
    std::stringstream ss;
    t.write(ss);
    const auto back = io::CsvTable::read(ss);
    EXPECT_EQ(back.columns, t.columns);
    ASSERT_EQ(back.rows.size(), t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j)
            EXPECT_EQ(std::bit_cast<std::uint64_t>(back.rows[i][j]), std::bit_cast<std::uint64_t>(t.rows[i][j]));
}

TEST(Csv, HeaderIsHashPrefixed) {
    io::CsvTable t{{"r", "V"}, {{1.0, 2.5}}};
    std::stringstream ss;
    t.write(ss);
    EXPECT_EQ(ss.str(), "# r,V\n1,2.5\n");
    EXPECT_THROW(io::parse_real("1.0x"), std::invalid_argument);
}
