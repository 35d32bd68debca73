#include "emt/ext_real.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace emt {

namespace {

void require_same_flavor(const ExtReal& a, const ExtReal& b, const char* op) {
    if (a.flavor() != b.flavor())
        throw flavor_error(std::string(op) + ": mixed non-negative and signed operands");
}

} // namespace

ExtReal ExtReal::nonneg(double v) {
    if (std::isnan(v)) throw domain_error("ExtReal::nonneg: NaN");
    if (v < 0.0) throw domain_error("ExtReal::nonneg: negative value");
    if (std::isinf(v)) return infinity(Flavor::NonNeg);
    return ExtReal(v, Kind::Finite, Flavor::NonNeg);
}

ExtReal ExtReal::signed_real(double v) {
    if (std::isnan(v)) throw domain_error("ExtReal::signed_real: NaN");
    if (std::isinf(v)) return v > 0 ? infinity(Flavor::Signed) : minus_infinity();
    return ExtReal(v, Kind::Finite, Flavor::Signed);
}

ExtReal ExtReal::from_double(double v, Flavor flavor) {
    return flavor == Flavor::NonNeg ? nonneg(v) : signed_real(v);
}

ExtReal ExtReal::infinity(Flavor flavor) {
    return ExtReal(0.0, Kind::PosInf, flavor);
}

ExtReal ExtReal::minus_infinity() {
    return ExtReal(0.0, Kind::NegInf, Flavor::Signed);
}

ExtReal ExtReal::zero(Flavor flavor) {
    return ExtReal(0.0, Kind::Finite, flavor);
}

double ExtReal::value() const {
    if (kind_ != Kind::Finite) throw domain_error("ExtReal::value: not finite");
    return v_;
}

double ExtReal::to_double() const {
    switch (kind_) {
        case Kind::PosInf: return std::numeric_limits<double>::infinity();
        case Kind::NegInf: return -std::numeric_limits<double>::infinity();
        default: return v_;
    }
}

ExtReal ExtReal::as_signed() const {
    if (kind_ == Kind::Finite) return signed_real(v_);
    return kind_ == Kind::PosInf ? infinity(Flavor::Signed) : minus_infinity();
}

ExtReal ExtReal::as_nonneg() const {
    if (kind_ == Kind::NegInf) throw flavor_error("ExtReal::as_nonneg: -inf");
    if (kind_ == Kind::PosInf) return infinity(Flavor::NonNeg);
    if (v_ < 0.0) throw flavor_error("ExtReal::as_nonneg: negative value");
    return nonneg(v_);
}

bool ext_less(const ExtReal& a, const ExtReal& b) {
    using K = ExtReal::Kind;
    if (a.kind() == K::NegInf) return b.kind() != K::NegInf;
    if (a.kind() == K::PosInf) return false;
    if (b.kind() == K::PosInf) return true;
    if (b.kind() == K::NegInf) return false;
    return a.value() < b.value();
}

ExtReal ext_max(const ExtReal& a, const ExtReal& b) { return ext_less(a, b) ? b : a; }
ExtReal ext_min(const ExtReal& a, const ExtReal& b) { return ext_less(b, a) ? b : a; }

bool approx_eq(const ExtReal& a, const ExtReal& b, double tol) {
    if (a.is_finite() && b.is_finite()) return std::fabs(a.value() - b.value()) <= tol;
    return a.kind() == b.kind();
}

ExtReal ext_add(const ExtReal& a, const ExtReal& b) {
    require_same_flavor(a, b, "ext_add");
    using K = ExtReal::Kind;
    // +inf absorbs everything, including -inf.
    if (a.kind() == K::PosInf || b.kind() == K::PosInf)
        return ExtReal::infinity(a.flavor());
    if (a.kind() == K::NegInf || b.kind() == K::NegInf)
        return ExtReal::minus_infinity();
    return ExtReal::from_double(a.value() + b.value(), a.flavor());
}

ExtReal hom_plus(const ExtReal& a, const ExtReal& b) {
    if (a.flavor() != Flavor::NonNeg || b.flavor() != Flavor::NonNeg)
        throw flavor_error("hom_plus: operands must be non-negative flavor");
    if (a.is_pos_inf()) return ExtReal::zero(Flavor::NonNeg); // inf -. inf = 0 too
    if (b.is_pos_inf()) return ExtReal::infinity(Flavor::NonNeg);
    double d = b.value() - a.value();
    return ExtReal::nonneg(d > 0.0 ? d : 0.0);
}

ExtReal hom_signed(const ExtReal& a, const ExtReal& b) {
    if (a.flavor() != Flavor::Signed || b.flavor() != Flavor::Signed)
        throw flavor_error("hom_signed: operands must be signed flavor");
    using K = ExtReal::Kind;
    if (a.kind() == b.kind() && a.kind() != K::Finite)
        return ExtReal::minus_infinity(); // (+inf)-(+inf) = (-inf)-(-inf) = -inf
    if (b.kind() == K::PosInf || a.kind() == K::NegInf)
        return ExtReal::infinity(Flavor::Signed);
    if (b.kind() == K::NegInf || a.kind() == K::PosInf)
        return ExtReal::minus_infinity();
    return ExtReal::signed_real(b.value() - a.value());
}

ExtReal ext_scale(const ExtReal& a, double t) {
    if (std::isnan(t) || t < 0.0) throw domain_error("ext_scale: factor must be >= 0");
    if (t == 0.0) return ExtReal::zero(a.flavor()); // 0 * inf = 0
    if (!a.is_finite()) return a;
    return ExtReal::from_double(t * a.value(), a.flavor());
}

std::string to_string(const ExtReal& x) {
    if (x.is_pos_inf()) return "inf";
    if (x.is_neg_inf()) return "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x.value());
    return buf;
}

std::ostream& operator<<(std::ostream& os, const ExtReal& x) {
    return os << to_string(x);
}

} // namespace emt
