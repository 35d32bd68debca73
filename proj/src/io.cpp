#include "emt/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace emt {

std::string fmt17(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

// Whitespace-separated tokens with 1-based line/column bookkeeping.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    bool next(std::string& tok, std::size_t& line, std::size_t& column) {
        for (;;) {
            if (pos_ >= line_.size()) {
                if (!std::getline(in_, line_)) return false;
                ++lineno_;
                pos_ = 0;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(line_[pos_]))) {
                ++pos_;
                continue;
            }
            break;
        }
        const std::size_t start = pos_;
        while (pos_ < line_.size() &&
               !std::isspace(static_cast<unsigned char>(line_[pos_])))
            ++pos_;
        tok = line_.substr(start, pos_ - start);
        line = lineno_;
        column = start + 1;
        return true;
    }

    std::string require(const char* what) {
        std::string tok;
        std::size_t line, column;
        if (!next(tok, line, column))
            throw parse_error(std::string("unexpected end of input, expected ") + what,
                              lineno_ ? lineno_ : 1, line_.size() + 1);
        last_line_ = line;
        last_column_ = column;
        return tok;
    }

    std::size_t last_line() const { return last_line_; }
    std::size_t last_column() const { return last_column_; }

private:
    std::istream& in_;
    std::string line_;
    std::size_t lineno_ = 0;
    std::size_t pos_ = 0;
    std::size_t last_line_ = 1;
    std::size_t last_column_ = 1;
};

double parse_value(const std::string& tok, const TokenReader& r) {
    if (tok == "inf") return std::numeric_limits<double>::infinity();
    if (tok == "-inf") return -std::numeric_limits<double>::infinity();
    const char* s = tok.c_str();
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end != s + tok.size() || tok.empty() || std::isnan(v))
        throw parse_error("malformed number '" + tok + "'", r.last_line(),
                          r.last_column());
    return v;
}

std::size_t parse_count(const std::string& tok, const TokenReader& r, const char* what) {
    const char* s = tok.c_str();
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s + tok.size() || tok.empty() || v <= 0)
        throw parse_error(std::string("malformed ") + what + " '" + tok + "'",
                          r.last_line(), r.last_column());
    return static_cast<std::size_t>(v);
}

} // namespace

RawMatrix read_matrix(std::istream& in) {
    TokenReader r(in);
    RawMatrix m;
    const std::size_t n = parse_count(r.require("point count"), r, "point count");
    for (std::size_t i = 0; i < n; ++i) m.labels.push_back(r.require("label"));
    m.values.reserve(n * n);
    for (std::size_t i = 0; i < n * n; ++i)
        m.values.push_back(parse_value(r.require("matrix entry"), r));
    return m;
}

SpaceKind detect_kind(const RawMatrix& m) {
    const std::size_t n = m.labels.size();
    for (double v : m.values)
        if (v < 0.0) return SpaceKind::RbarCategory;
    bool classical = true;
    for (std::size_t i = 0; i < n && classical; ++i)
        for (std::size_t j = 0; j < n && classical; ++j) {
            const double v = m.values[i * n + j];
            if (std::isinf(v)) classical = false;
            else if (i == j && v != 0.0) classical = false;
            else if (i != j && (v <= 0.0 || v != m.values[j * n + i])) classical = false;
        }
    return classical ? SpaceKind::ClassicalMetric : SpaceKind::RplusCategory;
}

GenMetricSpace read_space(std::istream& in, SpaceKind kind) {
    RawMatrix m = read_matrix(in);
    return GenMetricSpace::from_doubles(std::move(m.labels), m.values, kind);
}

GenMetricSpace read_space_auto(std::istream& in) {
    RawMatrix m = read_matrix(in);
    SpaceKind kind = detect_kind(m);
    return GenMetricSpace::from_doubles(std::move(m.labels), m.values, kind);
}

void write_space(std::ostream& out, const GenMetricSpace& space) {
    const std::size_t n = space.size();
    out << n << '\n';
    for (std::size_t i = 0; i < n; ++i) out << (i ? " " : "") << space.label(i);
    out << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            out << (j ? " " : "") << to_string(space.d(i, j));
        out << '\n';
    }
}

ScalarFunction read_presheaf(std::istream& in, const GenMetricSpace& space,
                             Flavor flavor) {
    TokenReader r(in);
    const std::size_t n = space.size();
    std::vector<ExtReal> values(n, ExtReal::zero(flavor));
    std::vector<bool> seen(n, false);
    for (std::size_t row = 0; row < n; ++row) {
        std::string label = r.require("point label");
        auto idx = space.index_of(label);
        if (!idx)
            throw parse_error("unknown point '" + label + "'", r.last_line(),
                              r.last_column());
        if (seen[*idx])
            throw parse_error("duplicate point '" + label + "'", r.last_line(),
                              r.last_column());
        seen[*idx] = true;
        double v = parse_value(r.require("value"), r);
        try {
            values[*idx] = ExtReal::from_double(v, flavor);
        } catch (const error& e) {
            throw parse_error(e.what(), r.last_line(), r.last_column());
        }
    }
    return ScalarFunction(std::move(values));
}

void write_presheaf(std::ostream& out, const GenMetricSpace& space,
                    const ScalarFunction& f) {
    if (f.size() != space.size())
        throw shape_error("write_presheaf: function does not live on the space");
    for (std::size_t i = 0; i < space.size(); ++i)
        out << space.label(i) << ' ' << to_string(f[i]) << '\n';
}

SampledFunction read_sampled_function(std::istream& in) {
    TokenReader r(in);
    const std::size_t dim = parse_count(r.require("dimension"), r, "dimension");
    if (dim != 1 && dim != 2)
        throw parse_error("dimension must be 1 or 2", r.last_line(), r.last_column());
    std::array<Axis, 2> axes;
    for (std::size_t k = 0; k < dim; ++k) {
        std::string spec = r.require("axis spec");
        try {
            axes[k] = parse_axis_spec(spec);
        } catch (const error& e) {
            throw parse_error(e.what(), r.last_line(), r.last_column());
        }
    }
    Grid grid = dim == 1 ? Grid(axes[0]) : Grid(axes[0], axes[1]);
    std::vector<ExtReal> values;
    values.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto expect = grid.point(i);
        for (std::size_t k = 0; k < dim; ++k) {
            double c = parse_value(r.require("coordinate"), r);
            if (std::fabs(c - expect[k]) >
                1e-9 * std::max(1.0, std::fabs(expect[k])))
                throw parse_error("coordinate " + fmt17(c) + " does not match grid (" +
                                      fmt17(expect[k]) + " expected)",
                                  r.last_line(), r.last_column());
        }
        values.push_back(ExtReal::signed_real(parse_value(r.require("value"), r)));
    }
    return SampledFunction(grid, std::move(values));
}

void write_sampled_function(std::ostream& out, const SampledFunction& f) {
    const Grid& g = f.grid();
    out << g.dim();
    for (std::size_t k = 0; k < g.dim(); ++k) {
        const Axis& a = g.axis(k);
        out << ' ' << fmt17(a.lo) << ':' << fmt17(a.hi) << ':' << a.count;
    }
    out << '\n';
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto p = g.point(i);
        for (std::size_t k = 0; k < g.dim(); ++k) out << fmt17(p[k]) << ' ';
        out << to_string(f[i]) << '\n';
    }
}

void write_sweep(std::ostream& out, const std::vector<MagnitudeSample>& samples) {
    for (const auto& s : samples)
        out << fmt17(s.t) << ' ' << (s.value ? fmt17(*s.value) : "nan") << '\n';
}

void write_conditions(std::ostream& out, const std::vector<MagnitudeSample>& samples) {
    for (const auto& s : samples)
        out << fmt17(s.t) << ' ' << fmt17(s.condition) << '\n';
}

namespace {

std::vector<std::string> split_colon(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

double parse_spec_number(const std::string& tok, const std::string& spec) {
    const char* s = tok.c_str();
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (tok.empty() || end != s + tok.size() || std::isnan(v) || std::isinf(v))
        throw domain_error("bad number '" + tok + "' in spec '" + spec + "'");
    return v;
}

std::size_t parse_spec_count(const std::string& tok, const std::string& spec) {
    const char* s = tok.c_str();
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (tok.empty() || end != s + tok.size() || v < 2)
        throw domain_error("bad count '" + tok + "' in spec '" + spec +
                           "' (need an integer >= 2)");
    return static_cast<std::size_t>(v);
}

} // namespace

Axis parse_axis_spec(const std::string& spec) {
    auto parts = split_colon(spec);
    if (parts.size() != 3)
        throw domain_error("axis spec '" + spec + "' must be min:max:count");
    Axis a{parse_spec_number(parts[0], spec), parse_spec_number(parts[1], spec),
           parse_spec_count(parts[2], spec)};
    if (!(a.lo < a.hi)) throw domain_error("axis spec '" + spec + "' needs min < max");
    return a;
}

GridSpec parse_grid_spec(const std::string& spec) {
    auto parts = split_colon(spec);
    if (parts.size() != 3 && parts.size() != 4)
        throw domain_error("grid spec '" + spec + "' must be min:max:count[:log]");
    GridSpec g;
    g.lo = parse_spec_number(parts[0], spec);
    g.hi = parse_spec_number(parts[1], spec);
    g.count = parse_spec_count(parts[2], spec);
    if (parts.size() == 4) {
        if (parts[3] != "log")
            throw domain_error("grid spec '" + spec + "': unknown mode '" + parts[3] +
                               "'");
        g.log = true;
    }
    if (!(g.lo < g.hi)) throw domain_error("grid spec '" + spec + "' needs min < max");
    if (g.log && !(g.lo > 0.0))
        throw domain_error("grid spec '" + spec + "': log spacing needs min > 0");
    if (g.lo < 0.0) throw domain_error("grid spec '" + spec + "': t must be >= 0");
    return g;
}

std::vector<double> make_t_grid(const GridSpec& spec) {
    std::vector<double> t;
    t.reserve(spec.count);
    const double n1 = static_cast<double>(spec.count - 1);
    for (std::size_t i = 0; i < spec.count; ++i) {
        const double f = static_cast<double>(i) / n1;
        t.push_back(spec.log ? spec.lo * std::pow(spec.hi / spec.lo, f)
                             : spec.lo + (spec.hi - spec.lo) * f);
    }
    t.back() = spec.hi;
    return t;
}

} // namespace emt
