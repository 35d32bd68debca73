#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "emt/errors.hpp"

namespace emt {

// Default absolute tolerance for comparing finite values.
inline constexpr double kDefaultTol = 1e-9;

enum class Flavor : std::uint8_t {
    NonNeg, // values in [0, +inf]
    Signed, // values in [-inf, +inf]
};

// Extended real scalar with explicit infinities.
//
// Infinities are tagged states rather than IEEE specials because the
// arithmetic needed here disagrees with IEEE on the indeterminate forms:
// (+inf) + (-inf) = +inf and the internal hom gives (+inf) - (+inf) = -inf.
// Every operation below is total; there is no NaN-like state.
class ExtReal {
public:
    enum class Kind : std::uint8_t { Finite, PosInf, NegInf };

    // Non-negative zero.
    constexpr ExtReal() = default;

    // Factories. IEEE infinities in `v` map onto the symbolic states.
    static ExtReal nonneg(double v);
    static ExtReal signed_real(double v);
    static ExtReal from_double(double v, Flavor flavor);
    static ExtReal infinity(Flavor flavor = Flavor::NonNeg);
    static ExtReal minus_infinity(); // Signed only
    static ExtReal zero(Flavor flavor);

    Kind kind() const { return kind_; }
    Flavor flavor() const { return flavor_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }

    // Finite payload; throws domain_error on infinities.
    double value() const;

    // IEEE view (infinities become HUGE_VAL) for numerics and printing.
    double to_double() const;

    // Flavor conversions. Widening always succeeds; narrowing throws
    // flavor_error on negative values or -inf.
    ExtReal as_signed() const;
    ExtReal as_nonneg() const;

    // Exact value equality: same kind, and bitwise-equal doubles when
    // finite. Flavor does not participate (a 3 is a 3).
    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.v_ == b.v_;
    }
    friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }

private:
    ExtReal(double v, Kind kind, Flavor flavor) : v_(v), kind_(kind), flavor_(flavor) {}

    double v_ = 0.0;
    Kind kind_ = Kind::Finite;
    Flavor flavor_ = Flavor::NonNeg;
};

// Total order -inf < finite < +inf (finite part by value).
bool ext_less(const ExtReal& a, const ExtReal& b);
inline bool ext_le(const ExtReal& a, const ExtReal& b) { return !ext_less(b, a); }
ExtReal ext_max(const ExtReal& a, const ExtReal& b);
ExtReal ext_min(const ExtReal& a, const ExtReal& b);

// |a - b| <= tol for finite pairs; symbolic infinities must match exactly.
bool approx_eq(const ExtReal& a, const ExtReal& b, double tol = kDefaultTol);

// Monoidal sum. Requires matching flavors. In the signed flavor the
// indeterminate form resolves upward: (+inf) + (-inf) = +inf.
ExtReal ext_add(const ExtReal& a, const ExtReal& b);

// Internal hom of the non-negative base: truncated difference b - a,
// clamped at 0, with inf - inf := 0.
ExtReal hom_plus(const ExtReal& a, const ExtReal& b);

// Internal hom of the signed base: b - a with
// (+inf) - (+inf) = (-inf) - (-inf) = -inf; otherwise the dominating
// infinity decides the sign.
ExtReal hom_signed(const ExtReal& a, const ExtReal& b);

// t * a for t >= 0, with 0 * (+-inf) = 0. Preserves flavor.
ExtReal ext_scale(const ExtReal& a, double t);

std::string to_string(const ExtReal& x);
std::ostream& operator<<(std::ostream& os, const ExtReal& x);

} // namespace emt
