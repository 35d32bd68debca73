#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "emt/ext_real.hpp"

using emt::ExtReal;
using emt::Flavor;

namespace {

const ExtReal kInfN = ExtReal::infinity(Flavor::NonNeg);
const ExtReal kInfS = ExtReal::infinity(Flavor::Signed);
const ExtReal kMinusInf = ExtReal::minus_infinity();

ExtReal nn(double v) { return ExtReal::nonneg(v); }
ExtReal sg(double v) { return ExtReal::signed_real(v); }

} // namespace

TEST_CASE("construction and accessors") {
    CHECK(nn(2.5).value() == 2.5);
    CHECK(nn(0.0).is_finite());
    CHECK(kInfN.is_pos_inf());
    CHECK(kMinusInf.is_neg_inf());
    CHECK(sg(-4.0).value() == -4.0);
    CHECK_THROWS_AS(nn(-1.0), emt::domain_error);
    CHECK_THROWS_AS(nn(std::nan("")), emt::domain_error);
    CHECK_THROWS_AS(kInfN.value(), emt::domain_error);
    // IEEE infinities map onto the symbolic states
    const double ieee_inf = std::numeric_limits<double>::infinity();
    CHECK(ExtReal::nonneg(ieee_inf).is_pos_inf());
    CHECK(ExtReal::signed_real(-ieee_inf).is_neg_inf());
}

TEST_CASE("ext_add follows the upward-resolving rules") {
    CHECK(emt::ext_add(kInfS, kMinusInf) == kInfS);     // (+inf)+(-inf) = +inf
    CHECK(emt::ext_add(kMinusInf, kInfS) == kInfS);
    CHECK(emt::ext_add(sg(2.0), sg(3.0)).value() == 5.0);
    CHECK(emt::ext_add(kMinusInf, kMinusInf) == kMinusInf);
    CHECK(emt::ext_add(nn(1.0), kInfN) == kInfN);
    CHECK(emt::ext_add(kMinusInf, sg(7.0)) == kMinusInf);
    CHECK_THROWS_AS(emt::ext_add(nn(1.0), sg(1.0)), emt::flavor_error);
}

TEST_CASE("ext_add is commutative and associative over random triples") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> val(-50.0, 50.0);
    std::uniform_int_distribution<int> pick(0, 9);
    auto draw = [&]() -> ExtReal {
        int p = pick(rng);
        if (p == 0) return kInfS;
        if (p == 1) return kMinusInf;
        return sg(val(rng));
    };
    for (int i = 0; i < 10'000; ++i) {
        ExtReal a = draw(), b = draw(), c = draw();
        CHECK(emt::approx_eq(emt::ext_add(a, b), emt::ext_add(b, a), 0.0));
        ExtReal l = emt::ext_add(emt::ext_add(a, b), c);
        ExtReal r = emt::ext_add(a, emt::ext_add(b, c));
        CHECK(emt::approx_eq(l, r, 1e-12));
    }
}

TEST_CASE("hom_plus is the truncated difference") {
    CHECK(emt::hom_plus(nn(3.0), nn(5.0)).value() == 2.0);
    CHECK(emt::hom_plus(nn(5.0), nn(3.0)).value() == 0.0);
    CHECK(emt::hom_plus(kInfN, kInfN).value() == 0.0); // inf -. inf = 0
    CHECK(emt::hom_plus(kInfN, nn(3.0)).value() == 0.0);
    CHECK(emt::hom_plus(nn(3.0), kInfN) == kInfN);
    CHECK_THROWS_AS(emt::hom_plus(sg(1.0), sg(2.0)), emt::flavor_error);
}

TEST_CASE("hom_plus(a,b) = 0 iff a >= b") {
    std::vector<ExtReal> pool = {nn(0.0), nn(0.5), nn(1.0), nn(3.0), nn(100.0), kInfN};
    for (const auto& a : pool)
        for (const auto& b : pool) {
            bool zero = emt::hom_plus(a, b) == ExtReal::zero(Flavor::NonNeg);
            CHECK(zero == emt::ext_le(b, a));
        }
}

TEST_CASE("hom_signed resolves the indeterminate forms downward") {
    CHECK(emt::hom_signed(kInfS, kInfS) == kMinusInf);       // (+inf)-(+inf) = -inf
    CHECK(emt::hom_signed(kMinusInf, kMinusInf) == kMinusInf);
    CHECK(emt::hom_signed(sg(1.0), sg(4.0)).value() == 3.0);
    CHECK(emt::hom_signed(kMinusInf, sg(0.0)) == kInfS);     // 0 - (-inf) = +inf
    CHECK(emt::hom_signed(kMinusInf, kInfS) == kInfS);
    CHECK(emt::hom_signed(kInfS, sg(10.0)) == kMinusInf);    // b - (+inf) = -inf
    CHECK(emt::hom_signed(kInfS, kMinusInf) == kMinusInf);
    CHECK(emt::hom_signed(sg(2.0), kInfS) == kInfS);
    CHECK(emt::hom_signed(sg(2.0), kMinusInf) == kMinusInf);
    CHECK_THROWS_AS(emt::hom_signed(nn(1.0), nn(2.0)), emt::flavor_error);
}

TEST_CASE("ext_scale") {
    CHECK(emt::ext_scale(nn(2.0), 0.5).value() == 1.0);
    CHECK(emt::ext_scale(kInfN, 7.0) == kInfN);
    CHECK(emt::ext_scale(kInfN, 0.0).value() == 0.0); // 0 * inf = 0
    CHECK(emt::ext_scale(kMinusInf, 0.0).value() == 0.0);
    CHECK(emt::ext_scale(kMinusInf, 2.0) == kMinusInf);
    CHECK_THROWS_AS(emt::ext_scale(nn(1.0), -1.0), emt::domain_error);
}

TEST_CASE("order and comparisons") {
    CHECK(emt::ext_less(kMinusInf, sg(-1e300)));
    CHECK(emt::ext_less(sg(1e300), kInfS));
    CHECK(!emt::ext_less(kInfS, kInfS));
    CHECK(emt::ext_max(nn(2.0), kInfN) == kInfN);
    CHECK(emt::ext_min(nn(2.0), nn(3.0)).value() == 2.0);
    CHECK(emt::approx_eq(nn(1.0), nn(1.0 + 1e-10)));
    CHECK(!emt::approx_eq(nn(1.0), nn(1.1)));
    CHECK(!emt::approx_eq(kInfN, nn(1e308)));
}

TEST_CASE("flavor conversions") {
    CHECK(nn(3.0).as_signed().flavor() == Flavor::Signed);
    CHECK(sg(3.0).as_nonneg().flavor() == Flavor::NonNeg);
    CHECK(kInfN.as_signed() == kInfS);
    CHECK_THROWS_AS(sg(-1.0).as_nonneg(), emt::flavor_error);
    CHECK_THROWS_AS(kMinusInf.as_nonneg(), emt::flavor_error);
}

TEST_CASE("printing") {
    CHECK(emt::to_string(kInfN) == "inf");
    CHECK(emt::to_string(kMinusInf) == "-inf");
    CHECK(emt::to_string(nn(0.5)) == "0.5");
}
