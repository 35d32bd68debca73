#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "emt/legendre.hpp"
#include "emt/magnitude.hpp"
#include "emt/metric_space.hpp"

namespace emt {

// 17 significant digits; round-trips doubles exactly.
std::string fmt17(double v);

// --- distance-matrix format -------------------------------------------
// line 1: n
// line 2: n labels
// n rows of n tokens, token in {decimal literal, inf, -inf}

struct RawMatrix {
    std::vector<std::string> labels;
    std::vector<double> values; // n*n row major, IEEE +-inf for infinities
};

RawMatrix read_matrix(std::istream& in);

// Value-based classification: anything negative or -inf means a signed
// space; finite, symmetric, zero-diagonal, separated means classical;
// otherwise a plain non-negative generalized metric.
SpaceKind detect_kind(const RawMatrix& m);

GenMetricSpace read_space(std::istream& in, SpaceKind kind);
GenMetricSpace read_space_auto(std::istream& in);
void write_space(std::ostream& out, const GenMetricSpace& space);

// --- presheaf format ---------------------------------------------------
// one `label value` line per point; every point exactly once

ScalarFunction read_presheaf(std::istream& in, const GenMetricSpace& space,
                             Flavor flavor = Flavor::NonNeg);
void write_presheaf(std::ostream& out, const GenMetricSpace& space,
                    const ScalarFunction& f);

// --- sampled-function format -------------------------------------------
// header: `n axis-spec...` with axis-spec `min:max:count`
// then one `coords value` line per grid point in lexicographic order

SampledFunction read_sampled_function(std::istream& in);
void write_sampled_function(std::ostream& out, const SampledFunction& f);

// --- sweep output ------------------------------------------------------
// one `t value` line per sample; `nan` marks SINGULAR points

void write_sweep(std::ostream& out, const std::vector<MagnitudeSample>& samples);
void write_conditions(std::ostream& out, const std::vector<MagnitudeSample>& samples);

// --- CLI grid specs ----------------------------------------------------

Axis parse_axis_spec(const std::string& spec); // min:max:count

struct GridSpec {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t count = 2;
    bool log = false;
};

GridSpec parse_grid_spec(const std::string& spec); // min:max:count[:log]
std::vector<double> make_t_grid(const GridSpec& spec);

} // namespace emt
