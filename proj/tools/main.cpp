#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "emt/hausdorff.hpp"
#include "emt/io.hpp"
#include "emt/legendre.hpp"
#include "emt/magnitude.hpp"
#include "emt/metric_space.hpp"
#include "emt/nucleus.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1; // invalid / singular / not a member
constexpr int kExitUsage = 2;   // parse or usage problem

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw emt::domain_error("cannot open '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw emt::domain_error("cannot write '" + path + "'");
    return out;
}

emt::GenMetricSpace load_space(const std::string& path, const std::string& kind) {
    auto in = open_input(path);
    emt::RawMatrix m = emt::read_matrix(in);
    emt::SpaceKind k;
    if (kind == "auto")
        k = emt::detect_kind(m);
    else if (kind == "rplus")
        k = emt::SpaceKind::RplusCategory;
    else if (kind == "rbar")
        k = emt::SpaceKind::RbarCategory;
    else if (kind == "classical")
        k = emt::SpaceKind::ClassicalMetric;
    else
        throw emt::domain_error("unknown kind '" + kind + "'");
    return emt::GenMetricSpace::from_doubles(std::move(m.labels), m.values, k);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string rational_str(const emt::Rational& q) {
    return q.get_str(); // p or p/q
}

int cmd_validate(const std::string& path, const std::string& kind, double tol) {
    auto in = open_input(path);
    emt::RawMatrix m = emt::read_matrix(in);
    emt::SpaceKind k = kind == "auto"      ? emt::detect_kind(m)
                       : kind == "rplus"   ? emt::SpaceKind::RplusCategory
                       : kind == "rbar"    ? emt::SpaceKind::RbarCategory
                       : emt::SpaceKind::ClassicalMetric;
    std::optional<emt::GenMetricSpace> space;
    try {
        space.emplace(
            emt::GenMetricSpace::from_doubles(std::move(m.labels), m.values, k));
    } catch (const emt::domain_error& e) {
        // Entries unrepresentable for this kind (e.g. negatives in a
        // non-negative space) are an invalidity verdict, not a usage error.
        std::cout << "invalid: " << e.what() << '\n';
        return kExitVerdict;
    }
    emt::ValidationReport report = emt::validate(*space, tol);
    if (report.ok()) {
        std::cout << "valid\n";
        return kExitOk;
    }
    for (const auto& v : report.violations) std::cout << v.message << '\n';
    return kExitVerdict;
}

int cmd_magnitude(const std::string& path, double t, bool rational,
                  const std::string& kind) {
    emt::GenMetricSpace space = load_space(path, kind);
    if (rational) {
        auto Z = emt::similarity_matrix_exact(space, t);
        auto mag = emt::magnitude_exact(Z);
        if (!mag) {
            std::cout << "singular\n";
            return kExitVerdict;
        }
        std::cout << rational_str(*mag) << '\n';
        return kExitOk;
    }
    auto mag = emt::magnitude(emt::similarity_matrix(space, t));
    if (!mag) {
        std::cout << "singular\n";
        return kExitVerdict;
    }
    std::cout << emt::fmt17(*mag) << '\n';
    return kExitOk;
}

int cmd_sweep(const std::string& path, const std::string& grid_spec,
              const std::string& out_path, const std::string& cond_path,
              const std::string& kind) {
    emt::GenMetricSpace space = load_space(path, kind);
    emt::GridSpec spec = emt::parse_grid_spec(grid_spec);
    auto samples = emt::magnitude_function(space, emt::make_t_grid(spec));
    if (out_path.empty()) {
        emt::write_sweep(std::cout, samples);
    } else {
        auto out = open_output(out_path);
        emt::write_sweep(out, samples);
    }
    if (!cond_path.empty()) {
        auto out = open_output(cond_path);
        emt::write_conditions(out, samples);
    }
    return kExitOk;
}

int cmd_hausdorff(const std::string& path, const std::string& a_spec,
                  const std::string& b_spec, bool directed, const std::string& kind) {
    emt::GenMetricSpace space = load_space(path, kind);
    auto A = emt::SubsetSelection::from_labels(space, split_commas(a_spec));
    auto B = emt::SubsetSelection::from_labels(space, split_commas(b_spec));
    emt::ExtReal v = directed ? emt::directed_hausdorff(space, A, B)
                              : emt::hausdorff(space, A, B);
    std::cout << emt::to_string(v) << '\n';
    return kExitOk;
}

void print_presheaf_row(std::ostream& out, const emt::Presheaf& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        out << (i ? " " : "") << emt::to_string(f[i]);
    out << '\n';
}

int cmd_tightspan(const std::string& path, double sample_step,
                  const std::string& check_path, double tol,
                  const std::string& out_path, const std::string& kind) {
    emt::GenMetricSpace space = load_space(path, kind);
    if (!check_path.empty()) {
        auto in = open_input(check_path);
        emt::ScalarFunction f = emt::read_presheaf(in, space, emt::Flavor::NonNeg);
        if (emt::in_tight_span(space, f, tol)) {
            std::cout << "in tight span\n";
            return kExitOk;
        }
        std::cout << "not in tight span\n";
        return kExitVerdict;
    }
    auto candidates = emt::sample_isbell_completion(space, sample_step, tol);
    auto selection = emt::tight_span_filter(space, candidates, tol);
    std::ostringstream body;
    body << "# isbell-completion step=" << emt::fmt17(sample_step)
         << " count=" << candidates.size() << '\n';
    for (const auto& f : candidates) print_presheaf_row(body, f);
    body << "# tight-span count=" << selection.members.size()
         << " max-asymmetry=" << emt::fmt17(selection.max_asymmetry) << '\n';
    for (const auto& f : selection.members) print_presheaf_row(body, f);
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        auto out = open_output(out_path);
        out << body.str();
    }
    return kExitOk;
}

int cmd_isbell(const std::string& path, double sample_step,
               const std::string& check_path, const std::string& hull_path,
               const std::vector<std::string>& distance_paths, double tol,
               const std::string& out_path, const std::string& kind) {
    emt::GenMetricSpace space = load_space(path, kind);
    if (!check_path.empty()) {
        auto in = open_input(check_path);
        emt::Presheaf f = emt::read_presheaf(in, space, emt::Flavor::NonNeg);
        if (emt::is_isbell_point(space, f, tol)) {
            std::cout << "isbell point\n";
            return kExitOk;
        }
        std::cout << "not an isbell point\n";
        return kExitVerdict;
    }
    if (!hull_path.empty()) {
        auto in = open_input(hull_path);
        emt::Presheaf f = emt::read_presheaf(in, space, emt::Flavor::NonNeg);
        emt::Presheaf hull = emt::isbell_hull(space, f);
        if (out_path.empty()) {
            emt::write_presheaf(std::cout, space, hull);
        } else {
            auto out = open_output(out_path);
            emt::write_presheaf(out, space, hull);
        }
        return kExitOk;
    }
    if (!distance_paths.empty()) {
        auto in1 = open_input(distance_paths[0]);
        auto in2 = open_input(distance_paths[1]);
        emt::Presheaf f = emt::read_presheaf(in1, space, emt::Flavor::NonNeg);
        emt::Presheaf g = emt::read_presheaf(in2, space, emt::Flavor::NonNeg);
        std::cout << emt::to_string(emt::isbell_distance(space, f, g)) << ' '
                  << emt::to_string(emt::isbell_distance(space, g, f)) << '\n';
        return kExitOk;
    }
    if (space.kind() != emt::SpaceKind::ClassicalMetric)
        std::cerr << "note: the sampling bound (the diameter) is a heuristic for "
                     "non-classical spaces; fixed points above it are not "
                     "enumerated\n";
    auto points = emt::sample_isbell_completion(space, sample_step, tol);
    std::ostringstream body;
    for (const auto& f : points) print_presheaf_row(body, f);
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        auto out = open_output(out_path);
        out << body.str();
    }
    return kExitOk;
}

int cmd_lf(const std::string& path, const std::vector<std::string>& dual_specs,
           bool roundtrip, const std::string& distance_path, double tol,
           const std::string& out_path) {
    auto in = open_input(path);
    emt::SampledFunction f = emt::read_sampled_function(in);

    emt::DualGrid dual = [&]() {
        if (dual_specs.empty()) return emt::default_dual_grid(f);
        if (dual_specs.size() != f.grid().dim())
            throw emt::domain_error("--dual needs one axis spec per dimension");
        emt::Axis a0 = emt::parse_axis_spec(dual_specs[0]);
        if (dual_specs.size() == 1) return emt::DualGrid(a0);
        return emt::DualGrid(a0, emt::parse_axis_spec(dual_specs[1]));
    }();

    if (!distance_path.empty()) {
        auto in2 = open_input(distance_path);
        emt::SampledFunction g = emt::read_sampled_function(in2);
        emt::ExtReal fwd = emt::lf_distance(f, g);
        emt::ExtReal rev = emt::lf_distance(g, f);
        auto ts1 = emt::toland_singer_check(f, g, dual, tol);
        auto ts2 = emt::toland_singer_check(g, f, dual, tol);
        std::cout << "d(f,g) " << emt::to_string(fwd) << '\n';
        std::cout << "d(g,f) " << emt::to_string(rev) << '\n';
        std::cout << "toland-singer d(f,g): lhs=" << emt::to_string(ts1.lhs)
                  << " rhs=" << emt::to_string(ts1.rhs) << ' '
                  << (ts1.pass ? "pass" : "fail") << '\n';
        std::cout << "toland-singer d(g,f): lhs=" << emt::to_string(ts2.lhs)
                  << " rhs=" << emt::to_string(ts2.rhs) << ' '
                  << (ts2.pass ? "pass" : "fail") << '\n';
        return ts1.pass && ts2.pass ? kExitOk : kExitVerdict;
    }

    emt::LfResult fwd = emt::lf_forward(f, dual);
    std::size_t truncated = 0;
    for (bool b : fwd.boundary) truncated += b ? 1 : 0;
    if (truncated > 0)
        std::cerr << "note: " << truncated << " of " << fwd.boundary.size()
                  << " conjugate values attained only on the grid boundary "
                     "(possible truncation)\n";

    std::ostringstream body;
    emt::write_sampled_function(body, fwd.fn);
    if (roundtrip) {
        body << '\n';
        emt::write_sampled_function(body, emt::convex_hull(f, dual));
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        auto out = open_output(out_path);
        out << body.str();
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite generalized metric spaces: validation, Hausdorff distances, "
                 "tight spans, magnitude, Legendre-Fenchel transforms"};
    app.require_subcommand(1);

    std::string space_path, fn_path, kind = "auto", out_path, cond_path;
    std::string grid_spec, a_spec, b_spec, check_path, hull_path, distance_path;
    std::vector<std::string> dual_specs, isbell_distance_paths;
    double tol = emt::kDefaultTol;
    double t_value = 1.0;
    double step = 0.0;
    bool rational = false, directed = false, roundtrip = false;

    auto* validate = app.add_subcommand("validate", "check the axioms of a space file");
    validate->add_option("space", space_path, "distance-matrix file")->required();
    validate->add_option("--kind", kind, "auto|rplus|rbar|classical");
    validate->add_option("--tol", tol, "comparison tolerance");

    auto* magnitude = app.add_subcommand("magnitude", "magnitude of a space at one scale");
    magnitude->add_option("space", space_path, "distance-matrix file")->required();
    magnitude->add_option("--t", t_value, "scale factor (default 1)");
    magnitude->add_flag("--rational", rational, "exact rational mode");
    magnitude->add_option("--kind", kind, "auto|rplus|rbar|classical");

    auto* sweep = app.add_subcommand("sweep", "magnitude function over a t grid");
    sweep->add_option("space", space_path, "distance-matrix file")->required();
    grid_spec = "0.01:100:200:log";
    sweep->add_option("--grid", grid_spec, "min:max:count[:log], log-spaced by default");
    sweep->add_option("--out", out_path, "write t/value lines here");
    sweep->add_option("--cond", cond_path, "write t/condition lines here");
    sweep->add_option("--kind", kind, "auto|rplus|rbar|classical");

    auto* hausdorff = app.add_subcommand("hausdorff", "subset distances in a classical space");
    hausdorff->add_option("space", space_path, "distance-matrix file")->required();
    hausdorff->add_option("--a", a_spec, "comma-separated labels (may be empty)");
    hausdorff->add_option("--b", b_spec, "comma-separated labels (may be empty)");
    hausdorff->add_flag("--directed", directed, "one-sided distance from A to B");
    hausdorff->add_option("--kind", kind, "auto|rplus|rbar|classical");

    auto* tightspan = app.add_subcommand("tightspan", "sample or test the tight span");
    tightspan->add_option("space", space_path, "distance-matrix file")->required();
    tightspan->add_option("--sample", step, "grid step for sampling");
    tightspan->add_option("--check", check_path, "presheaf file to test");
    tightspan->add_option("--tol", tol, "comparison tolerance");
    tightspan->add_option("--out", out_path, "output path");
    tightspan->add_option("--kind", kind, "auto|rplus|rbar|classical");

    auto* isbell = app.add_subcommand("isbell", "Isbell completion operations");
    isbell->add_option("space", space_path, "distance-matrix file")->required();
    isbell->add_option("--sample", step, "grid step for sampling");
    isbell->add_option("--check", check_path, "presheaf file to test");
    isbell->add_option("--hull", hull_path, "presheaf file to hull");
    isbell->add_option("--distance", isbell_distance_paths, "two presheaf files")
        ->expected(2);
    isbell->add_option("--tol", tol, "comparison tolerance");
    isbell->add_option("--out", out_path, "output path");
    isbell->add_option("--kind", kind, "auto|rplus|rbar|classical");

    auto* lf = app.add_subcommand("lf", "Legendre-Fenchel transform of a sampled function");
    lf->add_option("function", fn_path, "sampled-function file")->required();
    lf->add_option("--dual", dual_specs, "dual axis spec(s) min:max:count");
    lf->add_flag("--roundtrip", roundtrip, "also emit the double transform");
    lf->add_option("--distance", distance_path, "second function for distances");
    lf->add_option("--tol", tol, "comparison tolerance");
    lf->add_option("--out", out_path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(space_path, kind, tol);
        if (app.got_subcommand(magnitude))
            return cmd_magnitude(space_path, t_value, rational, kind);
        if (app.got_subcommand(sweep))
            return cmd_sweep(space_path, grid_spec, out_path, cond_path, kind);
        if (app.got_subcommand(hausdorff))
            return cmd_hausdorff(space_path, a_spec, b_spec, directed, kind);
        if (app.got_subcommand(tightspan)) {
            if (check_path.empty() && !(step > 0.0))
                throw emt::domain_error("tightspan: need --sample STEP or --check FILE");
            return cmd_tightspan(space_path, step, check_path, tol, out_path, kind);
        }
        if (app.got_subcommand(isbell)) {
            if (check_path.empty() && hull_path.empty() &&
                isbell_distance_paths.empty() && !(step > 0.0))
                throw emt::domain_error(
                    "isbell: need --sample, --check, --hull or --distance");
            return cmd_isbell(space_path, step, check_path, hull_path,
                              isbell_distance_paths, tol, out_path, kind);
        }
        if (app.got_subcommand(lf))
            return cmd_lf(fn_path, dual_specs, roundtrip, distance_path, tol, out_path);
    } catch (const emt::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const emt::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
