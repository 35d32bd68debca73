#include "emt/magnitude.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

namespace emt {

namespace {

constexpr double kSingularPivotFactor = 1e-12;

std::size_t checked_square(std::size_t labels, std::size_t entries, const char* what) {
    if (labels == 0) throw shape_error(std::string(what) + ": empty");
    if (entries != labels * labels)
        throw shape_error(std::string(what) + ": matrix is not square");
    return labels;
}

} // namespace

SimilarityMatrix::SimilarityMatrix(std::vector<std::string> labels_,
                                   std::vector<double> z_)
    : labels(std::move(labels_)), z(std::move(z_)) {
    checked_square(labels.size(), z.size(), "SimilarityMatrix");
}

RationalSimilarityMatrix::RationalSimilarityMatrix(std::vector<std::string> labels_,
                                                   std::vector<Rational> z_)
    : labels(std::move(labels_)), z(std::move(z_)) {
    checked_square(labels.size(), z.size(), "RationalSimilarityMatrix");
}

SimilarityMatrix similarity_matrix(const GenMetricSpace& X, double t) {
    if (X.kind() == SpaceKind::RbarCategory)
        throw domain_error("similarity_matrix: signed spaces have no e^{-d} size map");
    if (std::isnan(t) || t < 0.0) throw domain_error("similarity_matrix: t must be >= 0");
    std::vector<double> z;
    z.reserve(X.size() * X.size());
    for (const auto& e : X.distances()) {
        ExtReal scaled = ext_scale(e, t);
        z.push_back(scaled.is_pos_inf() ? 0.0 : std::exp(-scaled.value()));
    }
    return SimilarityMatrix(X.points(), std::move(z));
}

RationalSimilarityMatrix similarity_matrix_exact(const GenMetricSpace& X, double t) {
    if (X.kind() == SpaceKind::RbarCategory)
        throw domain_error("similarity_matrix_exact: signed spaces have no e^{-d} size map");
    if (std::isnan(t) || t < 0.0)
        throw domain_error("similarity_matrix_exact: t must be >= 0");
    std::vector<Rational> z;
    z.reserve(X.size() * X.size());
    for (const auto& e : X.distances()) {
        ExtReal scaled = ext_scale(e, t);
        if (scaled.is_pos_inf())
            z.emplace_back(0);
        else if (scaled.value() == 0.0)
            z.emplace_back(1);
        else
            throw domain_error(
                "similarity_matrix_exact: e^{-t d} is irrational for t*d = " +
                std::to_string(scaled.value()));
    }
    return RationalSimilarityMatrix(X.points(), std::move(z));
}

WeightingSolve solve_weighting(const SimilarityMatrix& Z) {
    const std::size_t n = Z.size();
    std::vector<double> a(Z.z);
    std::vector<double> rhs(n, 1.0);

    // Scale-invariant singularity threshold: a pivot below
    // kSingularPivotFactor times the largest initial row 1-norm is treated
    // as zero.
    double max_row_norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += std::fabs(a[i * n + j]);
        max_row_norm = std::max(max_row_norm, s);
    }
    const double threshold = kSingularPivotFactor * max_row_norm;

    double min_pivot = std::numeric_limits<double>::infinity();
    double max_pivot = 0.0;
    WeightingSolve result;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        double best_mag = std::fabs(a[col * n + col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            double mag = std::fabs(a[row * n + col]);
            if (mag > best_mag) {
                best_mag = mag;
                best = row;
            }
        }
        if (best_mag <= threshold) {
            result.condition = std::numeric_limits<double>::infinity();
            return result;
        }
        if (best != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a[best * n + j], a[col * n + j]);
            std::swap(rhs[best], rhs[col]);
        }
        const double pivot = a[col * n + col];
        min_pivot = std::min(min_pivot, std::fabs(pivot));
        max_pivot = std::max(max_pivot, std::fabs(pivot));
        for (std::size_t row = col + 1; row < n; ++row) {
            const double m = a[row * n + col] / pivot;
            if (m == 0.0) continue;
            a[row * n + col] = 0.0;
            for (std::size_t j = col + 1; j < n; ++j) a[row * n + j] -= m * a[col * n + j];
            rhs[row] -= m * rhs[col];
        }
    }

    std::vector<double> w(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i * n + j] * w[j];
        w[i] = s / a[i * n + i];
    }
    result.weights = std::move(w);
    result.condition = max_pivot / min_pivot;
    return result;
}

std::optional<std::vector<Rational>> solve_weighting_exact(
    const RationalSimilarityMatrix& Z) {
    const std::size_t n = Z.size();
    std::vector<Rational> a(Z.z);
    std::vector<Rational> rhs(n, Rational(1));

    for (std::size_t col = 0; col < n; ++col) {
        // Any exactly nonzero pivot will do; take the first for determinism.
        std::size_t piv = col;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
            std::swap(rhs[piv], rhs[col]);
        }
        const Rational pivot = a[col * n + col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row * n + col] == 0) continue;
            const Rational m = a[row * n + col] / pivot;
            a[row * n + col] = 0;
            for (std::size_t j = col + 1; j < n; ++j) a[row * n + j] -= m * a[col * n + j];
            rhs[row] -= m * rhs[col];
        }
    }

    std::vector<Rational> w(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i * n + j] * w[j];
        w[i] = s / a[i * n + i];
    }
    return w;
}

std::optional<double> magnitude(const SimilarityMatrix& Z) {
    WeightingSolve solve = solve_weighting(Z);
    if (solve.singular()) return std::nullopt;
    double sum = 0.0;
    for (double wi : *solve.weights) sum += wi;
    return sum;
}

std::optional<Rational> magnitude_exact(const RationalSimilarityMatrix& Z) {
    auto w = solve_weighting_exact(Z);
    if (!w) return std::nullopt;
    Rational sum(0);
    for (const auto& wi : *w) sum += wi;
    return sum;
}

std::optional<Rational> category_magnitude(const RationalSimilarityMatrix& Z) {
    for (const auto& e : Z.z)
        if (e.get_den() != 1)
            throw domain_error("category_magnitude: entries must be integers");
    return magnitude_exact(Z);
}

std::optional<double> effective_species(const SimilarityMatrix& F) {
    return magnitude(F);
}

namespace {

std::size_t sweep_thread_count(std::size_t jobs) {
    std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("EMT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) hw = static_cast<std::size_t>(v);
    }
    return std::min(hw, std::max<std::size_t>(1, jobs));
}

} // namespace

std::vector<MagnitudeSample> magnitude_function(const GenMetricSpace& X,
                                                const std::vector<double>& t_grid) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (std::isnan(t_grid[i]) || t_grid[i] < 0.0)
            throw domain_error("magnitude_function: t values must be >= 0");
        if (i > 0 && t_grid[i] < t_grid[i - 1])
            throw domain_error("magnitude_function: t grid must be sorted");
    }

    std::vector<MagnitudeSample> samples(t_grid.size());
    auto eval = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            WeightingSolve solve = solve_weighting(similarity_matrix(X, t_grid[i]));
            MagnitudeSample& s = samples[i];
            s.t = t_grid[i];
            s.condition = solve.condition;
            if (!solve.singular()) {
                double sum = 0.0;
                for (double wi : *solve.weights) sum += wi;
                s.value = sum;
            }
        }
    };

    const std::size_t workers = sweep_thread_count(t_grid.size());
    if (workers <= 1) {
        eval(0, t_grid.size());
        return samples;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (t_grid.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(t_grid.size(), begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(eval, begin, end);
    }
    for (auto& th : pool) th.join();
    return samples;
}

bool is_positive_definite(const SimilarityMatrix& Z) {
    const std::size_t n = Z.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (Z.at(i, j) != Z.at(j, i))
                throw domain_error("is_positive_definite: matrix is not symmetric");

    // Symmetric elimination without pivoting; positive definite iff every
    // leading pivot stays positive.
    std::vector<double> a(Z.z);
    for (std::size_t col = 0; col < n; ++col) {
        const double pivot = a[col * n + col];
        if (!(pivot > 0.0)) return false;
        for (std::size_t row = col + 1; row < n; ++row) {
            const double m = a[row * n + col] / pivot;
            if (m == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a[row * n + j] -= m * a[col * n + j];
        }
    }
    return true;
}

} // namespace emt
