#include <doctest.h>

#include <cmath>
#include <sstream>

#include "emt/io.hpp"
#include "oracles.hpp"

using emt::Flavor;
using emt::GenMetricSpace;
using emt::SpaceKind;

TEST_CASE("distance matrix round trip") {
    std::istringstream in("3\na b c\n0 1 2\n1 0 1\n2 1 0\n");
    auto space = emt::read_space_auto(in);
    CHECK(space.kind() == SpaceKind::ClassicalMetric);
    CHECK(space.size() == 3);
    CHECK(space.d(0, 2).value() == 2.0);

    std::ostringstream out;
    emt::write_space(out, space);
    std::istringstream back(out.str());
    auto again = emt::read_space_auto(back);
    CHECK(again.distances() == space.distances());
    CHECK(again.points() == space.points());
}

TEST_CASE("inf tokens and kind detection") {
    std::istringstream in("2\np q\n0 inf\ninf 0\n");
    auto space = emt::read_space_auto(in);
    CHECK(space.kind() == SpaceKind::RplusCategory);
    CHECK(space.d(0, 1).is_pos_inf());

    std::istringstream neg("2\np q\n0 -1\n5 0\n");
    CHECK(emt::read_space_auto(neg).kind() == SpaceKind::RbarCategory);

    std::istringstream asym("2\np q\n0 1\n2 0\n");
    CHECK(emt::read_space_auto(asym).kind() == SpaceKind::RplusCategory);

    std::istringstream signedinf("2\np q\n-inf inf\n-inf 0\n");
    auto rbar = emt::read_space_auto(signedinf);
    CHECK(rbar.kind() == SpaceKind::RbarCategory);
    CHECK(rbar.d(0, 0).is_neg_inf());
}

TEST_CASE("parse errors carry their location") {
    std::istringstream bad("2\np q\n0 infty\n1 0\n");
    try {
        emt::read_space_auto(bad);
        FAIL("expected a parse error");
    } catch (const emt::parse_error& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
    }

    std::istringstream truncated("3\na b c\n0 1\n");
    CHECK_THROWS_AS(emt::read_space_auto(truncated), emt::parse_error);

    std::istringstream badcount("zero\n");
    CHECK_THROWS_AS(emt::read_space_auto(badcount), emt::parse_error);
}

TEST_CASE("presheaf files") {
    std::istringstream in("3\na b c\n0 1 2\n1 0 1\n2 1 0\n");
    auto space = emt::read_space_auto(in);

    std::istringstream fin("b 2\na 0\nc inf\n");
    auto f = emt::read_presheaf(fin, space, Flavor::NonNeg);
    CHECK(f[0].value() == 0.0);
    CHECK(f[1].value() == 2.0);
    CHECK(f[2].is_pos_inf());

    std::ostringstream out;
    emt::write_presheaf(out, space, f);
    CHECK(out.str() == "a 0\nb 2\nc inf\n");

    std::istringstream unknown("a 0\nb 1\nz 2\n");
    CHECK_THROWS_AS(emt::read_presheaf(unknown, space), emt::parse_error);
    std::istringstream dup("a 0\na 1\nb 2\n");
    CHECK_THROWS_AS(emt::read_presheaf(dup, space), emt::parse_error);
    std::istringstream neg("a 0\nb -1\nc 2\n");
    CHECK_THROWS_AS(emt::read_presheaf(neg, space, Flavor::NonNeg), emt::parse_error);
}

TEST_CASE("sampled function files") {
    emt::Grid g(emt::Axis{-1.0, 1.0, 5});
    auto f = emt::SampledFunction::sample(
        g, [](std::array<double, 2> p) { return p[0] * p[0]; });
    std::ostringstream out;
    emt::write_sampled_function(out, f);
    std::istringstream back(out.str());
    auto again = emt::read_sampled_function(back);
    CHECK(again.grid() == f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(again[i] == f[i]);

    // 2-D with infinities
    emt::Grid g2(emt::Axis{0.0, 1.0, 3}, emt::Axis{0.0, 1.0, 2});
    std::vector<emt::ExtReal> vals;
    for (std::size_t i = 0; i < g2.size(); ++i)
        vals.push_back(i == 2 ? emt::ExtReal::minus_infinity()
                              : emt::ExtReal::signed_real(0.5 * i));
    emt::SampledFunction f2(g2, vals);
    std::ostringstream out2;
    emt::write_sampled_function(out2, f2);
    std::istringstream back2(out2.str());
    auto again2 = emt::read_sampled_function(back2);
    CHECK(again2[2].is_neg_inf());
    CHECK(again2.grid() == g2);

    std::istringstream wrongcoord("1 0:1:2\n0 5\n0.75 6\n");
    CHECK_THROWS_AS(emt::read_sampled_function(wrongcoord), emt::parse_error);
    std::istringstream baddim("3 0:1:2 0:1:2 0:1:2\n");
    CHECK_THROWS_AS(emt::read_sampled_function(baddim), emt::parse_error);
}

TEST_CASE("sweep output") {
    std::vector<emt::MagnitudeSample> samples(2);
    samples[0] = {0.5, 1.25, 3.0};
    samples[1] = {1.0, std::nullopt, oracle::kInf};
    std::ostringstream out;
    emt::write_sweep(out, samples);
    CHECK(out.str() == "0.5 1.25\n1 nan\n");

    std::ostringstream cond;
    emt::write_conditions(cond, samples);
    CHECK(cond.str() == "0.5 3\n1 inf\n");
}

TEST_CASE("grid specs") {
    auto axis = emt::parse_axis_spec("-1.5:2.5:11");
    CHECK(axis.lo == -1.5);
    CHECK(axis.hi == 2.5);
    CHECK(axis.count == 11);
    CHECK_THROWS_AS(emt::parse_axis_spec("1:0:5"), emt::domain_error);
    CHECK_THROWS_AS(emt::parse_axis_spec("0:1"), emt::domain_error);
    CHECK_THROWS_AS(emt::parse_axis_spec("0:1:x"), emt::domain_error);

    auto lin = emt::parse_grid_spec("0:10:5");
    auto t = emt::make_t_grid(lin);
    CHECK(t == std::vector<double>{0.0, 2.5, 5.0, 7.5, 10.0});

    auto log = emt::parse_grid_spec("0.01:100:5:log");
    auto tl = emt::make_t_grid(log);
    REQUIRE(tl.size() == 5);
    CHECK(tl.front() == 0.01);
    CHECK(tl.back() == 100.0);
    CHECK(tl[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::is_sorted(tl.begin(), tl.end()));

    CHECK_THROWS_AS(emt::parse_grid_spec("0:10:5:log"), emt::domain_error);
    CHECK_THROWS_AS(emt::parse_grid_spec("-1:10:5"), emt::domain_error);
    CHECK_THROWS_AS(emt::parse_grid_spec("0:10:5:exp"), emt::domain_error);
}

TEST_CASE("17 significant digits round-trip") {
    for (double v : {1.0 / 3.0, std::exp(1.0), 0.1, 12345.6789, 1e-300}) {
        std::string s = emt::fmt17(v);
        CHECK(std::stod(s) == v);
    }
    CHECK(emt::fmt17(oracle::kInf) == "inf");
    CHECK(emt::fmt17(-oracle::kInf) == "-inf");
}
