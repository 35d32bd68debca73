#include <doctest.h>

#include <random>

#include "emt/metric_space.hpp"
#include "oracles.hpp"

using emt::ExtReal;
using emt::Flavor;
using emt::GenMetricSpace;
using emt::ScalarFunction;
using emt::SpaceKind;
using oracle::kInf;

namespace {

GenMetricSpace space2(double d01, double d10,
                      SpaceKind kind = SpaceKind::RplusCategory) {
    return GenMetricSpace::from_doubles({"x", "y"}, {0.0, d01, d10, 0.0}, kind);
}

} // namespace

TEST_CASE("construction checks") {
    CHECK_THROWS_AS(GenMetricSpace::from_doubles({"a"}, {0.0, 1.0},
                                                 SpaceKind::RplusCategory),
                    emt::shape_error);
    CHECK_THROWS_AS(GenMetricSpace::from_doubles({"a", "a"}, {0, 1, 1, 0},
                                                 SpaceKind::RplusCategory),
                    emt::domain_error);
    // negative entries only exist in the signed kind
    CHECK_THROWS_AS(GenMetricSpace::from_doubles({"a", "b"}, {0, -1, 1, 0},
                                                 SpaceKind::RplusCategory),
                    emt::error);
    CHECK_NOTHROW(GenMetricSpace::from_doubles({"a", "b"}, {0, -1, 1, 0},
                                               SpaceKind::RbarCategory));
}

TEST_CASE("validate accepts the basic examples") {
    auto one = GenMetricSpace::from_doubles({"p"}, {0.0}, SpaceKind::RplusCategory);
    CHECK(emt::validate(one).ok());

    auto classical = space2(1.0, 1.0, SpaceKind::ClassicalMetric);
    CHECK(emt::validate(classical).ok());

    auto asym = space2(1.0, 5.0);
    CHECK(emt::validate(asym).ok());
}

TEST_CASE("validate reports a triangle violation with its witness") {
    // d(0,1) = 1, d(1,2) = 1, d(0,2) = 10: 1 + 1 < 10.
    auto bad = GenMetricSpace::from_doubles(
        {"a", "b", "c"}, {0, 1, 10, 1, 0, 1, 10, 1, 0}, SpaceKind::RplusCategory);
    auto report = emt::validate(bad);
    REQUIRE(!report.ok());
    bool found = false;
    for (const auto& v : report.violations)
        if (v.axiom == emt::Violation::Axiom::Triangle && v.i == 0 && v.j == 1 &&
            v.k == 2)
            found = true;
    CHECK(found);
}

TEST_CASE("validate checks the classical axioms") {
    auto asym = space2(1.0, 2.0, SpaceKind::ClassicalMetric);
    bool symmetry = false;
    for (const auto& v : emt::validate(asym).violations)
        if (v.axiom == emt::Violation::Axiom::Symmetry) symmetry = true;
    CHECK(symmetry);

    auto infinite =
        GenMetricSpace::from_doubles({"a", "b"}, {0, kInf, kInf, 0},
                                     SpaceKind::ClassicalMetric);
    bool finiteness = false;
    for (const auto& v : emt::validate(infinite).violations)
        if (v.axiom == emt::Violation::Axiom::Finiteness) finiteness = true;
    CHECK(finiteness);

    auto merged = space2(0.0, 0.0, SpaceKind::ClassicalMetric);
    bool separation = false;
    for (const auto& v : emt::validate(merged).violations)
        if (v.axiom == emt::Violation::Axiom::Separation) separation = true;
    CHECK(separation);

    auto diag = GenMetricSpace::from_doubles({"a"}, {1.0}, SpaceKind::RplusCategory);
    CHECK(!emt::validate(diag).ok());
}

TEST_CASE("validate knows the signed-space rules") {
    // self-distance may be -inf, but then every distance must be +-inf
    auto good = GenMetricSpace::from_doubles(
        {"a", "b"}, {-kInf, kInf, -kInf, 0}, SpaceKind::RbarCategory);
    CHECK(emt::validate(good).ok());

    auto bad = GenMetricSpace::from_doubles({"a", "b"}, {-kInf, 1.0, -kInf, 0},
                                            SpaceKind::RbarCategory);
    bool infinite_point = false;
    for (const auto& v : emt::validate(bad).violations)
        if (v.axiom == emt::Violation::Axiom::InfinitePoint) infinite_point = true;
    CHECK(infinite_point);

    // signed triangle uses (+inf)+(-inf) = +inf
    auto signed_ok = GenMetricSpace::from_doubles(
        {"a", "b"}, {0, -2.0, 5.0, 0}, SpaceKind::RbarCategory);
    CHECK(emt::validate(signed_ok).ok());
}

TEST_CASE("scale") {
    auto X = space2(2.0, 2.0, SpaceKind::ClassicalMetric);
    auto same = emt::scale(X, 1.0);
    CHECK(same.d(0, 1).value() == 2.0);
    auto half = emt::scale(X, 0.5);
    CHECK(half.d(0, 1).value() == 1.0);
    CHECK(half.d(0, 0).value() == 0.0);

    auto disc = emt::discrete_space({"a", "b", "c"});
    auto seven = emt::scale(disc, 7.0);
    CHECK(seven.d(0, 1).is_pos_inf());
    CHECK(seven.d(1, 1).value() == 0.0);

    auto zero = emt::scale(disc, 0.0);
    CHECK(zero.d(0, 1).value() == 0.0); // codiscrete

    CHECK_THROWS_AS(emt::scale(X, -0.5), emt::domain_error);
}

TEST_CASE("validate(scale(X,t)) holds for random spaces") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> tval(0.0, 10.0);
    for (int it = 0; it < 30; ++it) {
        auto X = oracle::random_integer_space(rng, 2 + it % 5, false, it % 2 == 0);
        REQUIRE(emt::validate(X).ok());
        CHECK(emt::validate(emt::scale(X, tval(rng))).ok());
        CHECK(emt::validate(emt::scale(X, 0.0)).ok());
    }
}

TEST_CASE("symmetrize") {
    auto sym = space2(1.0, 3.0);
    auto out = emt::symmetrize(sym);
    CHECK(out.d(0, 1).value() == 3.0);
    CHECK(out.d(1, 0).value() == 3.0);

    auto already = space2(2.0, 2.0);
    auto kept = emt::symmetrize(already);
    CHECK(kept.d(0, 1).value() == 2.0);
}

TEST_CASE("discrete_space") {
    auto one = emt::discrete_space({"p"});
    CHECK(one.size() == 1);
    CHECK(one.d(0, 0).value() == 0.0);

    auto two = emt::discrete_space({"p", "q"});
    CHECK(two.d(0, 1).is_pos_inf());
    CHECK(two.d(1, 0).is_pos_inf());

    auto five = emt::discrete_space({"a", "b", "c", "d", "e"});
    CHECK(emt::validate(five).ok());
    CHECK_THROWS_AS(emt::discrete_space({"a", "a"}), emt::domain_error);
    CHECK_THROWS_AS(emt::discrete_space({}), emt::domain_error);
}

TEST_CASE("funcat_distance basics") {
    auto X = space2(1.0, 1.0, SpaceKind::ClassicalMetric);
    auto f = ScalarFunction::from_doubles({0.0, 0.0}, Flavor::NonNeg);
    auto g = ScalarFunction::from_doubles({3.0, 3.0}, Flavor::NonNeg);
    CHECK(emt::funcat_distance(X, f, f).value() == 0.0);
    CHECK(emt::funcat_distance(X, f, g).value() == 3.0);
    CHECK(emt::funcat_distance(X, g, f).value() == 0.0);

    auto wrong = ScalarFunction::from_doubles({1.0}, Flavor::NonNeg);
    CHECK_THROWS_AS(emt::funcat_distance(X, f, wrong), emt::shape_error);
}

TEST_CASE("funcat_distance on the signed pair |x| vs |x-2|-1") {
    // sampled on a grid covering [-10, 10]
    std::vector<std::string> labels;
    std::vector<double> fv, gv;
    const int n = 81;
    for (int i = 0; i < n; ++i) {
        double x = -10.0 + 0.25 * i;
        labels.push_back("x" + std::to_string(i));
        fv.push_back(std::fabs(x));
        gv.push_back(std::fabs(x - 2.0) - 1.0);
    }
    auto P = emt::discrete_space(labels);
    auto f = ScalarFunction::from_doubles(fv, Flavor::Signed);
    auto g = ScalarFunction::from_doubles(gv, Flavor::Signed);
    CHECK(emt::funcat_distance(P, f, g).value() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(emt::funcat_distance(P, g, f).value() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("funcat triangle inequality and symmetrized sup metric") {
    std::mt19937 rng(99);
    for (int it = 0; it < 50; ++it) {
        std::size_t n = 2 + it % 5;
        auto X = oracle::random_integer_space(rng, n, false, true);
        auto f = oracle::random_presheaf(rng, n);
        auto g = oracle::random_presheaf(rng, n);
        auto h = oracle::random_presheaf(rng, n);
        auto fg = emt::funcat_distance(X, f, g);
        auto gh = emt::funcat_distance(X, g, h);
        auto fh = emt::funcat_distance(X, f, h);
        CHECK(emt::ext_le(fh, emt::ext_add(fg, gh)));

        // bounded finite functions on a discrete domain: symmetrizing gives
        // the classical sup metric
        auto P = emt::discrete_space(X.points());
        auto fb = oracle::random_presheaf(rng, n, 0.0);
        auto gb = oracle::random_presheaf(rng, n, 0.0);
        double sup = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            sup = std::max(sup, std::fabs(gb[i].value() - fb[i].value()));
        auto d1 = emt::funcat_distance(P, fb, gb);
        auto d2 = emt::funcat_distance(P, gb, fb);
        CHECK(emt::ext_max(d1, d2).value() == doctest::Approx(sup).epsilon(1e-12));
    }
}

TEST_CASE("is_short_map") {
    auto X = space2(1.0, 1.0, SpaceKind::ClassicalMetric);
    CHECK(emt::is_short_map(X, X, std::vector<std::size_t>{0, 1}));

    auto Y = space2(2.0, 2.0, SpaceKind::ClassicalMetric);
    CHECK(!emt::is_short_map(X, Y, std::vector<std::size_t>{0, 1}));
    CHECK(emt::is_short_map(Y, X, std::vector<std::size_t>{0, 1}));

    // every assignment out of a discrete space is short
    auto D = emt::discrete_space({"u", "v", "w"});
    std::mt19937 rng(3);
    for (int it = 0; it < 20; ++it) {
        std::vector<std::size_t> img = {rng() % 2, rng() % 2, rng() % 2};
        CHECK(emt::is_short_map(D, Y, img));
    }

    CHECK_THROWS_AS(emt::is_short_map(X, Y, std::vector<std::string>{"x", "zzz"}),
                    emt::domain_error);
    CHECK(emt::is_short_map(X, Y, std::vector<std::string>{"x", "x"}));
}
