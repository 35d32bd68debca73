#include "emt/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "emt/errors.hpp"

namespace emt {

namespace {

void check_axis(const Axis& a) {
    if (!(a.lo < a.hi)) throw domain_error("Axis: requires lo < hi");
    if (a.count < 2) throw domain_error("Axis: requires at least 2 samples");
    if (std::isnan(a.lo) || std::isnan(a.hi) || std::isinf(a.lo) || std::isinf(a.hi))
        throw domain_error("Axis: endpoints must be finite");
}

} // namespace

Grid::Grid(Axis a0) : dim_(1), axes_{a0, Axis{}} { check_axis(a0); }

Grid::Grid(Axis a0, Axis a1) : dim_(2), axes_{a0, a1} {
    check_axis(a0);
    check_axis(a1);
}

const Axis& Grid::axis(std::size_t k) const {
    if (k >= dim_) throw domain_error("Grid::axis: index out of range");
    return axes_[k];
}

std::size_t Grid::size() const {
    return dim_ == 1 ? axes_[0].count : axes_[0].count * axes_[1].count;
}

std::array<double, 2> Grid::point(std::size_t idx) const {
    if (dim_ == 1) return {axes_[0].coord(idx), 0.0};
    const std::size_t i0 = idx / axes_[1].count;
    const std::size_t i1 = idx % axes_[1].count;
    return {axes_[0].coord(i0), axes_[1].coord(i1)};
}

bool Grid::on_boundary(std::size_t idx) const {
    if (dim_ == 1) return idx == 0 || idx + 1 == axes_[0].count;
    const std::size_t i0 = idx / axes_[1].count;
    const std::size_t i1 = idx % axes_[1].count;
    return i0 == 0 || i0 + 1 == axes_[0].count || i1 == 0 || i1 + 1 == axes_[1].count;
}

SampledFunction::SampledFunction(Grid grid, std::vector<ExtReal> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw shape_error("SampledFunction: value count does not match grid");
    for (auto& v : values_)
        if (v.flavor() != Flavor::Signed) v = v.as_signed();
}

namespace {

struct SupResult {
    ExtReal value = ExtReal::minus_infinity();
    bool interior_witness = false;
};

// Flat view of a sampled function for the hot sup loops. The pairing <y,x>
// is always finite, so IEEE arithmetic on the +-inf-mapped values agrees
// with the signed hom exactly: <y,x> - (+inf) = -inf, <y,x> - (-inf) = +inf,
// and no NaN can arise.
struct FlatFn {
    std::size_t n = 0;
    std::vector<double> value;
    std::vector<double> x0, x1;
    std::vector<unsigned char> interior;

    explicit FlatFn(const SampledFunction& fn) : n(fn.size()) {
        const Grid& g = fn.grid();
        value.reserve(n);
        x0.reserve(n);
        x1.reserve(n);
        interior.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            value.push_back(fn[i].to_double());
            auto p = g.point(i);
            x0.push_back(p[0]);
            x1.push_back(p[1]);
            interior.push_back(g.on_boundary(i) ? 0 : 1);
        }
    }

    // sup over the grid of <y, x> - fn(x), tracking whether any interior
    // grid point attains the maximum (first-witness tie handling keeps the
    // result schedule-independent).
    SupResult sup_at(double y0, double y1, bool two_d) const {
        double best = -std::numeric_limits<double>::infinity();
        bool interior_hit = false;
        for (std::size_t i = 0; i < n; ++i) {
            const double pairing = two_d ? y0 * x0[i] + y1 * x1[i] : y0 * x0[i];
            const double term = pairing - value[i];
            if (term > best) {
                best = term;
                interior_hit = interior[i] != 0;
            } else if (term == best && interior[i] != 0) {
                interior_hit = true;
            }
        }
        SupResult r;
        r.value = ExtReal::signed_real(best);
        r.interior_witness = interior_hit;
        return r;
    }
};

LfResult transform(const SampledFunction& fn, const Grid& eval) {
    FlatFn flat(fn);
    const bool two_d = fn.grid().dim() == 2;
    std::vector<ExtReal> out;
    std::vector<bool> boundary;
    out.reserve(eval.size());
    boundary.reserve(eval.size());
    for (std::size_t i = 0; i < eval.size(); ++i) {
        auto y = eval.point(i);
        SupResult r = flat.sup_at(y[0], y[1], two_d);
        out.push_back(r.value);
        boundary.push_back(!r.interior_witness);
    }
    return {SampledFunction(eval, std::move(out)), std::move(boundary)};
}

SupResult sup_pairing_minus(const SampledFunction& fn, const std::array<double, 2>& y) {
    return FlatFn(fn).sup_at(y[0], y[1], fn.grid().dim() == 2);
}

} // namespace

LfResult lf_forward(const SampledFunction& f, const DualGrid& dual) {
    if (dual.dim() != f.grid().dim())
        throw shape_error("lf_forward: dual grid dimension mismatch");
    return transform(f, dual);
}

LfResult lf_reverse(const SampledFunction& g, const Grid& primal) {
    if (primal.dim() != g.grid().dim())
        throw shape_error("lf_reverse: primal grid dimension mismatch");
    return transform(g, primal);
}

SampledFunction convex_hull(const SampledFunction& f, const DualGrid& dual) {
    LfResult fwd = lf_forward(f, dual);
    LfResult back = lf_reverse(fwd.fn, f.grid());
    std::vector<ExtReal> vals;
    vals.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        vals.push_back(ext_min(back.fn[i], f[i]));
    return SampledFunction(f.grid(), std::move(vals));
}

ExtReal conjugate_at(const SampledFunction& f, std::array<double, 2> k) {
    return sup_pairing_minus(f, k).value;
}

std::optional<double> supporting_hyperplane(const SampledFunction& f,
                                            std::array<double, 2> k) {
    SupResult r = sup_pairing_minus(f, k);
    // A sup only attained on the grid boundary is a truncation artifact of
    // the finite grid; the true conjugate there is +inf and there is no
    // supporting hyperplane.
    if (!r.value.is_finite() || !r.interior_witness) return std::nullopt;
    return -r.value.value();
}

ExtReal lf_distance(const SampledFunction& f, const SampledFunction& fprime) {
    if (!(f.grid() == fprime.grid()))
        throw shape_error("lf_distance: functions live on different grids");
    ExtReal best = ExtReal::minus_infinity();
    for (std::size_t i = 0; i < f.size(); ++i)
        best = ext_max(best, hom_signed(f[i], fprime[i]));
    return best;
}

TolandSingerCheck toland_singer_check(const SampledFunction& f,
                                      const SampledFunction& fprime,
                                      const DualGrid& dual, double tol) {
    TolandSingerCheck check;
    check.lhs = lf_distance(f, fprime);
    SampledFunction fhat = lf_forward(f, dual).fn;
    SampledFunction fphat = lf_forward(fprime, dual).fn;
    check.rhs = lf_distance(fphat, fhat); // direction reversed on the dual side
    check.pass = approx_eq(check.lhs, check.rhs, tol);
    return check;
}

bool is_closed_convex(const SampledFunction& f, const DualGrid& dual, double tol) {
    SampledFunction hull = convex_hull(f, dual);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!approx_eq(hull[i], f[i], tol)) return false;
    return true;
}

DualGrid default_dual_grid(const SampledFunction& f, std::size_t count) {
    const Grid& g = f.grid();
    std::array<Axis, 2> axes;
    for (std::size_t k = 0; k < g.dim(); ++k) {
        const Axis& ax = g.axis(k);
        const double h = ax.step();
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        // Slopes of consecutive finite samples along axis k.
        const std::size_t stride = (g.dim() == 2 && k == 0) ? g.axis(1).count : 1;
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::size_t ik = (g.dim() == 2 && k == 0) ? i / g.axis(1).count
                             : (g.dim() == 2)         ? i % g.axis(1).count
                                                      : i;
            if (ik + 1 >= ax.count) continue;
            const ExtReal& a = f[i];
            const ExtReal& b = f[i + stride];
            if (!a.is_finite() || !b.is_finite()) continue;
            const double s = (b.value() - a.value()) / h;
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        if (!(lo <= hi)) { // no finite difference anywhere
            lo = -1.0;
            hi = 1.0;
        }
        const double span = hi - lo;
        const double pad = span > 0.0 ? 0.1 * span : 0.1 * std::max(1.0, std::fabs(lo));
        axes[k] = Axis{lo - pad, hi + pad, count > 0 ? count : ax.count};
    }
    return g.dim() == 1 ? DualGrid(axes[0]) : DualGrid(axes[0], axes[1]);
}

double grid_tolerance(const Grid& sup_grid, const Grid& eval) {
    double h = 0.0;
    for (std::size_t k = 0; k < sup_grid.dim(); ++k)
        h = std::max(h, sup_grid.axis(k).step());
    double kmax = 0.0;
    for (std::size_t k = 0; k < eval.dim(); ++k)
        kmax = std::max(kmax,
                        std::max(std::fabs(eval.axis(k).lo), std::fabs(eval.axis(k).hi)));
    return 4.0 * (h + h * h * kmax);
}

} // namespace emt
