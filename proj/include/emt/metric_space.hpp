#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "emt/ext_real.hpp"

namespace emt {

enum class SpaceKind : std::uint8_t {
    RplusCategory,   // distances in [0, inf], zero diagonal, triangle inequality
    RbarCategory,    // distances in [-inf, inf], diagonal 0 or -inf
    ClassicalMetric, // symmetric, finite, d(x,y) = 0 iff x = y
};

Flavor flavor_of(SpaceKind kind);

// Finite point set with a square matrix of generalized distances.
// Immutable after construction; the constructor checks shape and entry
// flavor only, axiom checking is validate()'s job.
class GenMetricSpace {
public:
    GenMetricSpace(std::vector<std::string> points, std::vector<ExtReal> distances,
                   SpaceKind kind);

    // Convenience: entries as doubles (IEEE +-inf allowed).
    static GenMetricSpace from_doubles(std::vector<std::string> points,
                                       const std::vector<double>& distances,
                                       SpaceKind kind);

    std::size_t size() const { return points_.size(); }
    SpaceKind kind() const { return kind_; }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& label(std::size_t i) const { return points_[i]; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    const ExtReal& d(std::size_t i, std::size_t j) const { return d_[i * size() + j]; }
    const std::vector<ExtReal>& distances() const { return d_; }

    // Largest finite distance; nullopt when any entry is +inf (or n = 0 rows).
    std::optional<double> finite_diameter() const;

private:
    std::vector<std::string> points_;
    std::vector<ExtReal> d_;
    SpaceKind kind_;
};

struct Violation {
    enum class Axiom {
        Diagonal,      // d(i,i) not 0 (or not in {0,-inf} for signed spaces)
        Triangle,      // d(i,j) + d(j,k) < d(i,k)
        Symmetry,      // d(i,j) != d(j,i)
        Finiteness,    // classical metric with an infinite entry
        Separation,    // d(i,j) = 0 for i != j in a classical metric
        InfinitePoint, // d(x,x) = -inf but some d(x,y) or d(y,x) is finite
    };
    Axiom axiom;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0; // triangle witness only
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks every axiom of the space's kind; finite comparisons get `tol`
// slack, symbolic infinities are exact.
ValidationReport validate(const GenMetricSpace& space, double tol = kDefaultTol);

// (tX)(x,x') = t * X(x,x'), with 0 * inf = 0, so scale(X, 0) is codiscrete.
GenMetricSpace scale(const GenMetricSpace& space, double t);

// d'(i,j) = max(d(i,j), d(j,i)). Input must not be signed.
GenMetricSpace symmetrize(const GenMetricSpace& space);

// Zero diagonal, +inf everywhere else.
GenMetricSpace discrete_space(std::vector<std::string> labels);

// One extended-real value per point of some space; flavor is uniform.
class ScalarFunction {
public:
    explicit ScalarFunction(std::vector<ExtReal> values);
    static ScalarFunction constant(std::size_t n, const ExtReal& v);
    static ScalarFunction from_doubles(const std::vector<double>& values, Flavor flavor);

    std::size_t size() const { return values_.size(); }
    Flavor flavor() const { return flavor_; }
    const ExtReal& operator[](std::size_t i) const { return values_[i]; }
    const std::vector<ExtReal>& values() const { return values_; }

    friend bool operator==(const ScalarFunction& a, const ScalarFunction& b) {
        return a.values_ == b.values_;
    }

private:
    std::vector<ExtReal> values_;
    Flavor flavor_;
};

// sup_x hom(f(x), g(x)): how far g sits above f. Non-negative functions
// use the truncated difference, signed ones the signed hom.
ExtReal funcat_distance(const GenMetricSpace& space, const ScalarFunction& f,
                        const ScalarFunction& g);

// True iff X(x,x') >= Y(image[x], image[x']) for all pairs.
bool is_short_map(const GenMetricSpace& X, const GenMetricSpace& Y,
                  const std::vector<std::size_t>& image);
bool is_short_map(const GenMetricSpace& X, const GenMetricSpace& Y,
                  const std::vector<std::string>& image_labels);

} // namespace emt
