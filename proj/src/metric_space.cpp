#include "emt/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace emt {

Flavor flavor_of(SpaceKind kind) {
    return kind == SpaceKind::RbarCategory ? Flavor::Signed : Flavor::NonNeg;
}

GenMetricSpace::GenMetricSpace(std::vector<std::string> points,
                               std::vector<ExtReal> distances, SpaceKind kind)
    : points_(std::move(points)), d_(std::move(distances)), kind_(kind) {
    const std::size_t n = points_.size();
    if (n == 0) throw shape_error("GenMetricSpace: empty point set");
    if (d_.size() != n * n)
        throw shape_error("GenMetricSpace: matrix is not " + std::to_string(n) + "x" +
                          std::to_string(n));
    const Flavor want = flavor_of(kind_);
    for (auto& e : d_) {
        if (e.flavor() != want)
            e = want == Flavor::Signed ? e.as_signed() : e.as_nonneg();
    }
    std::unordered_set<std::string> seen;
    for (const auto& p : points_)
        if (!seen.insert(p).second)
            throw domain_error("GenMetricSpace: duplicate label '" + p + "'");
}

GenMetricSpace GenMetricSpace::from_doubles(std::vector<std::string> points,
                                            const std::vector<double>& distances,
                                            SpaceKind kind) {
    std::vector<ExtReal> d;
    d.reserve(distances.size());
    const Flavor flavor = flavor_of(kind);
    for (double v : distances) d.push_back(ExtReal::from_double(v, flavor));
    return GenMetricSpace(std::move(points), std::move(d), kind);
}

std::optional<std::size_t> GenMetricSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == label) return i;
    return std::nullopt;
}

std::optional<double> GenMetricSpace::finite_diameter() const {
    double diam = 0.0;
    for (const auto& e : d_) {
        if (e.is_pos_inf()) return std::nullopt;
        if (e.is_finite()) diam = std::max(diam, e.value());
    }
    return diam;
}

namespace {

std::string pt(const GenMetricSpace& s, std::size_t i) { return s.label(i); }

void check_triangle(const GenMetricSpace& s, double tol, ValidationReport& report) {
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                ExtReal lhs = ext_add(s.d(i, j), s.d(j, k));
                const ExtReal& rhs = s.d(i, k);
                bool bad;
                if (lhs.is_finite() && rhs.is_finite())
                    bad = lhs.value() + tol < rhs.value();
                else
                    bad = ext_less(lhs, rhs);
                if (bad)
                    report.violations.push_back(
                        {Violation::Axiom::Triangle, i, j, k,
                         "triangle violated: d(" + pt(s, i) + "," + pt(s, j) + ") + d(" +
                             pt(s, j) + "," + pt(s, k) + ") = " + to_string(lhs) +
                             " < d(" + pt(s, i) + "," + pt(s, k) + ") = " +
                             to_string(rhs)});
            }
}

} // namespace

ValidationReport validate(const GenMetricSpace& space, double tol) {
    ValidationReport report;
    const std::size_t n = space.size();

    for (std::size_t i = 0; i < n; ++i) {
        const ExtReal& dii = space.d(i, i);
        bool ok;
        if (space.kind() == SpaceKind::RbarCategory)
            ok = dii.is_neg_inf() || (dii.is_finite() && std::fabs(dii.value()) <= tol);
        else
            ok = dii.is_finite() && std::fabs(dii.value()) <= tol;
        if (!ok)
            report.violations.push_back({Violation::Axiom::Diagonal, i, i, 0,
                                         "d(" + pt(space, i) + "," + pt(space, i) +
                                             ") = " + to_string(dii)});
    }

    if (space.kind() == SpaceKind::RbarCategory) {
        // An infinite point may only relate to others by +-inf.
        for (std::size_t i = 0; i < n; ++i) {
            if (!space.d(i, i).is_neg_inf()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                if (space.d(i, j).is_finite() || space.d(j, i).is_finite())
                    report.violations.push_back(
                        {Violation::Axiom::InfinitePoint, i, j, 0,
                         pt(space, i) + " is an infinite point but d(" + pt(space, i) +
                             "," + pt(space, j) + ") or d(" + pt(space, j) + "," +
                             pt(space, i) + ") is finite"});
            }
        }
    }

    if (space.kind() == SpaceKind::ClassicalMetric) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const ExtReal& dij = space.d(i, j);
                if (!dij.is_finite()) {
                    report.violations.push_back({Violation::Axiom::Finiteness, i, j, 0,
                                                 "d(" + pt(space, i) + "," +
                                                     pt(space, j) + ") is infinite"});
                    continue;
                }
                if (j > i && !approx_eq(dij, space.d(j, i), tol))
                    report.violations.push_back(
                        {Violation::Axiom::Symmetry, i, j, 0,
                         "d(" + pt(space, i) + "," + pt(space, j) + ") = " +
                             to_string(dij) + " != d(" + pt(space, j) + "," +
                             pt(space, i) + ") = " + to_string(space.d(j, i))});
                if (i != j && dij.value() <= tol)
                    report.violations.push_back(
                        {Violation::Axiom::Separation, i, j, 0,
                         "distinct points " + pt(space, i) + ", " + pt(space, j) +
                             " at distance " + to_string(dij)});
            }
    }

    check_triangle(space, tol, report);
    return report;
}

GenMetricSpace scale(const GenMetricSpace& space, double t) {
    if (std::isnan(t) || t < 0.0) throw domain_error("scale: factor must be >= 0");
    std::vector<ExtReal> d;
    d.reserve(space.distances().size());
    for (const auto& e : space.distances()) d.push_back(ext_scale(e, t));
    return GenMetricSpace(space.points(), std::move(d), space.kind());
}

GenMetricSpace symmetrize(const GenMetricSpace& space) {
    if (space.kind() == SpaceKind::RbarCategory)
        throw domain_error("symmetrize: expects a non-negative space");
    const std::size_t n = space.size();
    std::vector<ExtReal> d(space.distances());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d[i * n + j] = ext_max(space.d(i, j), space.d(j, i));
    return GenMetricSpace(space.points(), std::move(d), space.kind());
}

GenMetricSpace discrete_space(std::vector<std::string> labels) {
    const std::size_t n = labels.size();
    if (n == 0) throw domain_error("discrete_space: empty label list");
    std::vector<ExtReal> d(n * n, ExtReal::infinity(Flavor::NonNeg));
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = ExtReal::zero(Flavor::NonNeg);
    return GenMetricSpace(std::move(labels), std::move(d), SpaceKind::RplusCategory);
}

ScalarFunction::ScalarFunction(std::vector<ExtReal> values)
    : values_(std::move(values)) {
    if (values_.empty()) throw shape_error("ScalarFunction: empty");
    flavor_ = values_.front().flavor();
    for (const auto& v : values_)
        if (v.flavor() != flavor_)
            throw flavor_error("ScalarFunction: mixed flavors");
}

ScalarFunction ScalarFunction::constant(std::size_t n, const ExtReal& v) {
    return ScalarFunction(std::vector<ExtReal>(n, v));
}

ScalarFunction ScalarFunction::from_doubles(const std::vector<double>& values,
                                            Flavor flavor) {
    std::vector<ExtReal> v;
    v.reserve(values.size());
    for (double x : values) v.push_back(ExtReal::from_double(x, flavor));
    return ScalarFunction(std::move(v));
}

ExtReal funcat_distance(const GenMetricSpace& space, const ScalarFunction& f,
                        const ScalarFunction& g) {
    if (f.size() != space.size() || g.size() != space.size())
        throw shape_error("funcat_distance: function size does not match space");
    if (f.flavor() != g.flavor())
        throw flavor_error("funcat_distance: mixed flavors");
    const bool is_signed = f.flavor() == Flavor::Signed;
    // sup over the empty set would be the bottom element, but spaces are
    // nonempty by construction.
    ExtReal best = is_signed ? ExtReal::minus_infinity() : ExtReal::zero(Flavor::NonNeg);
    for (std::size_t x = 0; x < space.size(); ++x) {
        ExtReal h = is_signed ? hom_signed(f[x], g[x]) : hom_plus(f[x], g[x]);
        best = ext_max(best, h);
    }
    return best;
}

bool is_short_map(const GenMetricSpace& X, const GenMetricSpace& Y,
                  const std::vector<std::size_t>& image) {
    if (image.size() != X.size())
        throw shape_error("is_short_map: assignment must cover every point of the source");
    for (std::size_t v : image)
        if (v >= Y.size()) throw domain_error("is_short_map: image index out of range");
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < X.size(); ++j)
            if (ext_less(X.d(i, j), Y.d(image[i], image[j]))) return false;
    return true;
}

bool is_short_map(const GenMetricSpace& X, const GenMetricSpace& Y,
                  const std::vector<std::string>& image_labels) {
    std::vector<std::size_t> image;
    image.reserve(image_labels.size());
    for (const auto& lbl : image_labels) {
        auto idx = Y.index_of(lbl);
        if (!idx) throw domain_error("is_short_map: unknown target point '" + lbl + "'");
        image.push_back(*idx);
    }
    return is_short_map(X, Y, image);
}

} // namespace emt
