#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "emt/metric_space.hpp"

namespace emt {

using Rational = mpq_class;

// Entrywise image of distances under the size map a |-> e^{-t a},
// or any other similarity kernel supplied directly.
struct SimilarityMatrix {
    std::vector<std::string> labels;
    std::vector<double> z; // n x n row major

    std::size_t size() const { return labels.size(); }
    double at(std::size_t i, std::size_t j) const { return z[i * size() + j]; }

    SimilarityMatrix(std::vector<std::string> labels_, std::vector<double> z_);
};

// Exact-rational variant; entries come from hom-set cardinalities or from
// spaces whose similarities are exactly representable.
struct RationalSimilarityMatrix {
    std::vector<std::string> labels;
    std::vector<Rational> z;

    std::size_t size() const { return labels.size(); }
    const Rational& at(std::size_t i, std::size_t j) const { return z[i * size() + j]; }

    RationalSimilarityMatrix(std::vector<std::string> labels_, std::vector<Rational> z_);
};

// Z(x,x') = e^{-t d(x,x')} with e^{-inf} = 0 and 0 * inf = 0 in the
// exponent. Signed spaces are rejected.
SimilarityMatrix similarity_matrix(const GenMetricSpace& X, double t);

// Exact counterpart; only defined when every entry is exactly representable,
// i.e. every t*d(x,x') is 0 or +inf. Throws domain_error otherwise.
RationalSimilarityMatrix similarity_matrix_exact(const GenMetricSpace& X, double t);

// A solution of Z w = 1 plus the pivot-ratio condition estimate that the
// elimination produced. `weights` is empty iff the matrix was flagged
// singular, in which case `condition` is +inf.
struct WeightingSolve {
    std::optional<std::vector<double>> weights;
    double condition = 0.0;
    bool singular() const { return !weights.has_value(); }
};

WeightingSolve solve_weighting(const SimilarityMatrix& Z);
std::optional<std::vector<Rational>> solve_weighting_exact(const RationalSimilarityMatrix& Z);

// Sum of the weighting entries = sum of the entries of Z^{-1}.
std::optional<double> magnitude(const SimilarityMatrix& Z);
std::optional<Rational> magnitude_exact(const RationalSimilarityMatrix& Z);

// Same computation as magnitude_exact but insists on integer entries, the
// hom-set-cardinality case.
std::optional<Rational> category_magnitude(const RationalSimilarityMatrix& Z);

// Alias documenting the diversity-measure reading of the same number.
std::optional<double> effective_species(const SimilarityMatrix& F);

struct MagnitudeSample {
    double t = 0.0;
    std::optional<double> value; // nullopt = SINGULAR
    double condition = 0.0;
};

// One magnitude sample per t. The grid must be sorted and non-negative.
// Evaluation may run on several threads (capped by EMT_THREADS); the
// result order is the grid order regardless.
std::vector<MagnitudeSample> magnitude_function(const GenMetricSpace& X,
                                                const std::vector<double>& t_grid);

// Symmetric-elimination pivot test; requires exactly symmetric input.
bool is_positive_definite(const SimilarityMatrix& Z);

} // namespace emt
