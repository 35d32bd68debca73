#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "emt/ext_real.hpp"

namespace emt {

// Uniformly spaced closed interval of sample coordinates.
struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t count = 2;

    double step() const { return (hi - lo) / static_cast<double>(count - 1); }
    double coord(std::size_t i) const { return lo + step() * static_cast<double>(i); }

    friend bool operator==(const Axis& a, const Axis& b) {
        return a.lo == b.lo && a.hi == b.hi && a.count == b.count;
    }
};

// One- or two-dimensional product grid, points enumerated lexicographically
// with axis 0 most significant. The same type serves for primal points
// and for dual slopes.
class Grid {
public:
    explicit Grid(Axis a0);
    Grid(Axis a0, Axis a1);

    std::size_t dim() const { return dim_; }
    const Axis& axis(std::size_t k) const;
    std::size_t size() const;
    std::array<double, 2> point(std::size_t idx) const; // unused coordinate is 0
    bool on_boundary(std::size_t idx) const;

    friend bool operator==(const Grid& a, const Grid& b) {
        if (a.dim_ != b.dim_) return false;
        for (std::size_t k = 0; k < a.dim_; ++k)
            if (!(a.axes_[k] == b.axes_[k])) return false;
        return true;
    }

private:
    std::size_t dim_;
    std::array<Axis, 2> axes_;
};

using DualGrid = Grid;

// Signed extended-real values on a grid.
class SampledFunction {
public:
    SampledFunction(Grid grid, std::vector<ExtReal> values);

    template <typename F>
    static SampledFunction sample(const Grid& grid, F&& fn) {
        std::vector<ExtReal> v;
        v.reserve(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            v.push_back(ExtReal::signed_real(fn(grid.point(i))));
        return SampledFunction(grid, std::move(v));
    }

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    const ExtReal& operator[](std::size_t i) const { return values_[i]; }
    const std::vector<ExtReal>& values() const { return values_; }

private:
    Grid grid_;
    std::vector<ExtReal> values_;
};

// A transform result plus, per output point, whether the maximum was only
// attained on the boundary of the grid being maximized over -- the
// telltale of a truncated sup.
struct LfResult {
    SampledFunction fn;
    std::vector<bool> boundary;
};

// f^(k) = sup_x { <k,x> - f(x) } over f's grid, for every k in `dual`.
LfResult lf_forward(const SampledFunction& f, const DualGrid& dual);

// g_v(x) = sup_k { <k,x> - g(k) } over g's grid, for every x in `primal`.
LfResult lf_reverse(const SampledFunction& g, const Grid& primal);

// Double transform clamped pointwise below f (the true hull never exceeds
// f; the clamp removes one-ulp excursions of the discrete sup).
SampledFunction convex_hull(const SampledFunction& f, const DualGrid& dual);

// Conjugate value at a single slope; no grid of slopes required.
ExtReal conjugate_at(const SampledFunction& f, std::array<double, 2> k);

// z-intercept -f^(k) of the supporting hyperplane of slope k. Returns
// nothing when the conjugate is infinite or its sup is only attained on
// the grid boundary (a truncation artifact standing in for +inf).
std::optional<double> supporting_hyperplane(const SampledFunction& f,
                                            std::array<double, 2> k);

// sup_x { f'(x) - f(x) } with the signed hom conventions; grids must match.
ExtReal lf_distance(const SampledFunction& f, const SampledFunction& fprime);

struct TolandSingerCheck {
    ExtReal lhs; // primal-side distance f -> f'
    ExtReal rhs; // dual-side distance in the opposite direction, f^' -> f^
    bool pass = false;
};

// The transform reverses the direction of the function-space metric; for
// closed convex inputs the two sides agree.
TolandSingerCheck toland_singer_check(const SampledFunction& f,
                                      const SampledFunction& fprime,
                                      const DualGrid& dual, double tol = kDefaultTol);

// Fenchel-Moreau fixed-point test: the double transform reproduces f.
bool is_closed_convex(const SampledFunction& f, const DualGrid& dual, double tol);

// Slopes spanning the finite-difference slopes of f, padded 10% per side;
// counts default to the primal counts.
DualGrid default_dual_grid(const SampledFunction& f, std::size_t count = 0);

// Documented accuracy of a truncated sup: 4 * (h + h^2 * max|k|), h the
// spacing of the grid being maximized over, k ranging over `eval`.
double grid_tolerance(const Grid& sup_grid, const Grid& eval);

} // namespace emt
