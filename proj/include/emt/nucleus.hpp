#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "emt/metric_space.hpp"

namespace emt {

// Scalar functions playing the two variances of the Isbell adjunction.
using Presheaf = ScalarFunction;   // contravariant, lives on the source
using Copresheaf = ScalarFunction; // covariant, lives on the target

// A |C| x |D| matrix of non-negative extended reals between two spaces.
// Bimodule compatibility (C(c',c) + P(c,d) + D(d,d') >= P(c',d')) is
// checked by validate(), not by the constructor.
class Profunctor {
public:
    Profunctor(GenMetricSpace source, GenMetricSpace target, std::vector<ExtReal> values);

    const GenMetricSpace& source() const { return source_; }
    const GenMetricSpace& target() const { return target_; }
    const ExtReal& at(std::size_t c, std::size_t d) const {
        return values_[c * target_.size() + d];
    }

private:
    GenMetricSpace source_;
    GenMetricSpace target_;
    std::vector<ExtReal> values_;
};

ValidationReport validate(const Profunctor& P, double tol = kDefaultTol);

// P(x, x') = X(x, x') with source = target = X.
Profunctor hom_profunctor(const GenMetricSpace& X);

// P_*(phi)(c) = sup_d { P(c,d) -. phi(d) }
Presheaf push(const Profunctor& P, const Copresheaf& phi);

// P^*(psi)(d) = sup_c { P(c,d) -. psi(c) }
Copresheaf pull(const Profunctor& P, const Presheaf& psi);

// x |-> X(-, x), the enriched Kuratowski embedding.
Presheaf yoneda(const GenMetricSpace& X, std::size_t x);
Presheaf yoneda(const GenMetricSpace& X, const std::string& label);

// One round through the adjunction: push(hom, pull(hom, psi)). Idempotent.
Presheaf isbell_hull(const GenMetricSpace& X, const Presheaf& psi);

// Fixed points of the hull are the points of the Isbell completion I(X).
bool is_isbell_point(const GenMetricSpace& X, const Presheaf& psi,
                     double tol = kDefaultTol);

// The asymmetric metric on I(X): max_x (psi2(x) -. psi1(x)).
ExtReal isbell_distance(const GenMetricSpace& X, const Presheaf& psi1,
                        const Presheaf& psi2);

// Classical tight-span membership: (1) d(m,m') >= f(m') - f(m) and
// (2) f(m) = sup_m' { d(m,m') - f(m') }, both within tol.
bool in_tight_span(const GenMetricSpace& M, const ScalarFunction& f,
                   double tol = kDefaultTol);

// Leg lengths of the tight span of a three-point space with side lengths
// r = d(b,c), s = d(a,c), t = d(a,b). Returns {leg_a, leg_b, leg_c} where
// leg_a = (s+t-r)/2, leg_b = (r+t-s)/2, leg_c = (r+s-t)/2.
std::array<double, 3> tripod_lengths(double r, double s, double t);

// All functions on the grid {0, step, ..., D}^X (D the diameter) that are
// fixed by the hull, in lexicographic order of their value tuples.
std::vector<Presheaf> sample_isbell_completion(const GenMetricSpace& X, double step,
                                               double tol = kDefaultTol,
                                               std::size_t max_grid_points = 10'000'000);

// Tight-span members among the candidates, plus a symmetry certificate:
// the largest |d(f,g) - d(g,f)| over surviving pairs.
struct TightSpanSelection {
    std::vector<Presheaf> members;
    double max_asymmetry = 0.0;
    bool symmetric = true;
};

TightSpanSelection tight_span_filter(const GenMetricSpace& M,
                                     const std::vector<Presheaf>& candidates,
                                     double tol = kDefaultTol);

} // namespace emt
