#include "emt/nucleus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace emt {

Profunctor::Profunctor(GenMetricSpace source, GenMetricSpace target,
                       std::vector<ExtReal> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
    if (values_.size() != source_.size() * target_.size())
        throw shape_error("Profunctor: value matrix must be |source| x |target|");
    for (auto& v : values_)
        if (v.flavor() != Flavor::NonNeg) v = v.as_nonneg();
}

ValidationReport validate(const Profunctor& P, double tol) {
    ValidationReport report;
    const std::size_t nc = P.source().size();
    const std::size_t nd = P.target().size();
    for (std::size_t c1 = 0; c1 < nc; ++c1)
        for (std::size_t c = 0; c < nc; ++c)
            for (std::size_t d = 0; d < nd; ++d)
                for (std::size_t d1 = 0; d1 < nd; ++d1) {
                    ExtReal lhs = ext_add(ext_add(P.source().d(c1, c), P.at(c, d)),
                                          P.target().d(d, d1));
                    const ExtReal& rhs = P.at(c1, d1);
                    bool bad;
                    if (lhs.is_finite() && rhs.is_finite())
                        bad = lhs.value() + tol < rhs.value();
                    else
                        bad = ext_less(lhs, rhs);
                    if (bad)
                        report.violations.push_back(
                            {Violation::Axiom::Triangle, c1, d1, c,
                             "profunctor compatibility violated at (" +
                                 P.source().label(c1) + "," + P.target().label(d1) +
                                 ") via (" + P.source().label(c) + "," +
                                 P.target().label(d) + ")"});
                }
    return report;
}

Profunctor hom_profunctor(const GenMetricSpace& X) {
    return Profunctor(X, X, X.distances());
}

Presheaf push(const Profunctor& P, const Copresheaf& phi) {
    if (phi.size() != P.target().size())
        throw shape_error("push: copresheaf does not live on the target");
    std::vector<ExtReal> out;
    out.reserve(P.source().size());
    for (std::size_t c = 0; c < P.source().size(); ++c) {
        ExtReal sup = ExtReal::zero(Flavor::NonNeg);
        for (std::size_t d = 0; d < P.target().size(); ++d)
            sup = ext_max(sup, hom_plus(phi[d], P.at(c, d)));
        out.push_back(sup);
    }
    return Presheaf(std::move(out));
}

Copresheaf pull(const Profunctor& P, const Presheaf& psi) {
    if (psi.size() != P.source().size())
        throw shape_error("pull: presheaf does not live on the source");
    std::vector<ExtReal> out;
    out.reserve(P.target().size());
    for (std::size_t d = 0; d < P.target().size(); ++d) {
        ExtReal sup = ExtReal::zero(Flavor::NonNeg);
        for (std::size_t c = 0; c < P.source().size(); ++c)
            sup = ext_max(sup, hom_plus(psi[c], P.at(c, d)));
        out.push_back(sup);
    }
    return Copresheaf(std::move(out));
}

Presheaf yoneda(const GenMetricSpace& X, std::size_t x) {
    if (x >= X.size()) throw domain_error("yoneda: point index out of range");
    std::vector<ExtReal> out;
    out.reserve(X.size());
    for (std::size_t z = 0; z < X.size(); ++z) out.push_back(X.d(z, x));
    return Presheaf(std::move(out));
}

Presheaf yoneda(const GenMetricSpace& X, const std::string& label) {
    auto idx = X.index_of(label);
    if (!idx) throw domain_error("yoneda: unknown point '" + label + "'");
    return yoneda(X, *idx);
}

Presheaf isbell_hull(const GenMetricSpace& X, const Presheaf& psi) {
    Profunctor P = hom_profunctor(X);
    return push(P, pull(P, psi));
}

bool is_isbell_point(const GenMetricSpace& X, const Presheaf& psi, double tol) {
    Presheaf hull = isbell_hull(X, psi);
    for (std::size_t i = 0; i < psi.size(); ++i)
        if (!approx_eq(hull[i], psi[i], tol)) return false;
    return true;
}

ExtReal isbell_distance(const GenMetricSpace& X, const Presheaf& psi1,
                        const Presheaf& psi2) {
    return funcat_distance(X, psi1, psi2);
}

bool in_tight_span(const GenMetricSpace& M, const ScalarFunction& f, double tol) {
    if (M.kind() != SpaceKind::ClassicalMetric)
        throw domain_error("in_tight_span: base space must be a classical metric");
    if (f.size() != M.size())
        throw shape_error("in_tight_span: function does not live on the space");
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!f[i].is_finite())
            throw domain_error("in_tight_span: function must be finite-valued");

    const std::size_t n = M.size();
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t m1 = 0; m1 < n; ++m1)
            if (f[m1].value() - f[m].value() > M.d(m, m1).value() + tol) return false;
    for (std::size_t m = 0; m < n; ++m) {
        double sup = -std::numeric_limits<double>::infinity();
        for (std::size_t m1 = 0; m1 < n; ++m1)
            sup = std::max(sup, M.d(m, m1).value() - f[m1].value());
        if (std::fabs(sup - f[m].value()) > tol) return false;
    }
    return true;
}

std::array<double, 3> tripod_lengths(double r, double s, double t) {
    const double leg_a = (s + t - r) / 2.0;
    const double leg_b = (r + t - s) / 2.0;
    const double leg_c = (r + s - t) / 2.0;
    if (leg_a < 0.0 || leg_b < 0.0 || leg_c < 0.0)
        throw domain_error("tripod_lengths: side lengths violate the triangle inequality");
    return {leg_a, leg_b, leg_c};
}

std::vector<Presheaf> sample_isbell_completion(const GenMetricSpace& X, double step,
                                               double tol,
                                               std::size_t max_grid_points) {
    if (!(step > 0.0)) throw domain_error("sample_isbell_completion: step must be > 0");
    auto diameter = X.finite_diameter();
    if (!diameter)
        throw domain_error("sample_isbell_completion: space has infinite diameter");
    const double D = *diameter;

    // Per-point coordinate values: multiples of step up to D, plus D itself.
    std::vector<double> levels;
    const auto max_k = static_cast<std::size_t>(std::floor(D / step + 1e-9));
    for (std::size_t k = 0; k <= max_k; ++k) levels.push_back(step * static_cast<double>(k));
    if (levels.back() < D - 1e-9 * std::max(1.0, D)) levels.push_back(D);

    const std::size_t n = X.size();
    double total = 1.0;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(levels.size());
    if (total > static_cast<double>(max_grid_points))
        throw resource_error("sample_isbell_completion: grid of " +
                             std::to_string(total) + " points exceeds cap of " +
                             std::to_string(max_grid_points));

    std::vector<Presheaf> out;
    std::vector<std::size_t> idx(n, 0);
    std::vector<ExtReal> vals(n, ExtReal::zero(Flavor::NonNeg));
    Profunctor P = hom_profunctor(X);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) vals[i] = ExtReal::nonneg(levels[idx[i]]);
        Presheaf psi(vals);
        Presheaf hull = push(P, pull(P, psi));
        bool fixed = true;
        for (std::size_t i = 0; i < n && fixed; ++i)
            fixed = approx_eq(hull[i], psi[i], tol);
        if (fixed) out.push_back(std::move(psi));

        // Odometer with the last point fastest: emits lexicographic order.
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < levels.size()) break;
            idx[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

TightSpanSelection tight_span_filter(const GenMetricSpace& M,
                                     const std::vector<Presheaf>& candidates,
                                     double tol) {
    TightSpanSelection result;
    for (const auto& f : candidates)
        if (in_tight_span(M, f, tol)) result.members.push_back(f);
    for (std::size_t i = 0; i < result.members.size(); ++i)
        for (std::size_t j = i + 1; j < result.members.size(); ++j) {
            ExtReal ab = isbell_distance(M, result.members[i], result.members[j]);
            ExtReal ba = isbell_distance(M, result.members[j], result.members[i]);
            double gap = std::fabs(ab.to_double() - ba.to_double());
            if (std::isnan(gap)) gap = 0.0; // both infinite: symmetric
            result.max_asymmetry = std::max(result.max_asymmetry, gap);
        }
    result.symmetric = result.max_asymmetry <= tol;
    return result;
}

} // namespace emt
