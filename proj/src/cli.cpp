#include "tcn/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "tcn/algebra_io.hpp"
#include "tcn/bounds.hpp"
#include "tcn/error.hpp"
#include "tcn/report_io.hpp"
#include "tcn/space_expr.hpp"
#include "tcn/sphere_planner.hpp"

namespace tcn {

namespace {

std::size_t max_dim_from_env()
{
    const char* raw = std::getenv("TCN_MAX_DIM");
    if (!raw || !*raw) return kDefaultMaxTensorDim;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0) throw InputError(std::string("TCN_MAX_DIM must be a positive integer, got '") + raw + "'");
    return static_cast<std::size_t>(v);
}

std::pair<int, int> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw InputError("--n-range must look like A..B, got '" + text + "'");
    try {
        std::size_t used_a = 0, used_b = 0;
        const std::string a_text = text.substr(0, dots), b_text = text.substr(dots + 2);
        const int a = std::stoi(a_text, &used_a);
        const int b = std::stoi(b_text, &used_b);
        if (used_a != a_text.size() || used_b != b_text.size()) throw std::invalid_argument("trailing");
        if (a > b) throw InputError("--n-range " + text + " is empty");
        return {a, b};
    } catch (const std::logic_error&) {
        throw InputError("--n-range must look like A..B, got '" + text + "'");
    }
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

void print_table_header(std::ostream& out)
{
    out << std::left << std::setw(16) << "space" << std::setw(4) << "n" << std::setw(7) << "field" << std::setw(7)
        << "lower" << std::setw(23) << "source" << std::setw(5) << "zcl" << std::setw(7) << "upper" << std::setw(11)
        << "upper_cat" << std::setw(14) << "upper_growth" << "exact\n";
}

void print_table_row(std::ostream& out, const BoundReport& r)
{
    out << std::left << std::setw(16) << r.space << std::setw(4) << r.n << std::setw(7) << r.field.to_string()
        << std::setw(7) << r.lower << std::setw(23) << to_string(r.lower_source) << std::setw(5) << r.zcl.m
        << std::setw(7) << r.upper << std::setw(11) << r.upper_cat << std::setw(14) << opt_str(r.upper_growth)
        << opt_str(r.exact);
    if (r.planner_upper) out << "   (geodesic planner: " << *r.planner_upper << " domains)";
    out << "\n";
    if (r.zcl.certificate) {
        for (const auto& f : r.zcl.certificate->factors) out << "    factor: " << f.to_string() << "\n";
        out << "    product: " << r.zcl.certificate->product.to_string() << "\n";
    }
}

struct BoundsArgs {
    std::string space;
    int n = 0;
    std::string n_range;
    std::string field = "Q";
    bool certificate = false;
    bool json = false;
    bool validate = false;
    bool no_assoc_check = false;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err)
{
    const std::size_t max_dim = max_dim_from_env();
    int lo = a.n, hi = a.n;
    if (!a.n_range.empty()) std::tie(lo, hi) = parse_range(a.n_range);
    if (lo < 2) throw InputError("n must be at least 2, got " + std::to_string(lo));

    const Field field = Field::parse(a.field);
    const SpaceDescriptor space = evaluate(parse_space(a.space), field, {a.no_assoc_check});
    check_space(space);
    if (a.validate) {
        const auto violations = validate(*space.algebra);
        if (!violations.empty()) {
            for (const auto& v : violations) err << to_string(v.kind) << ": " << v.message << "\n";
            return kExitInput;
        }
        if (!a.json) out << space.name << ": algebra valid (" << space.algebra->dim() << " basis elements)\n";
    }

    // Per-n reports are independent; results are emitted in order of n.
    std::vector<std::future<BoundReport>> jobs;
    for (int n = lo; n <= hi; ++n)
        jobs.push_back(std::async(std::launch::async, [&space, n, &a, max_dim] {
            return bounds_report(space, n, a.certificate, max_dim);
        }));

    if (!a.json) print_table_header(out);
    for (auto& job : jobs) {
        const BoundReport r = job.get();
        if (a.json)
            out << report_to_json(r).dump() << "\n";
        else
            print_table_row(out, r);
        out.flush();
    }
    return kExitOk;
}

struct PlanArgs {
    int k = 0;
    int n = 0;
    std::string points;
    std::uint64_t seed = 0;
    bool random = false;
    int samples = 100;
    double tol = kDefaultAntipodeTolerance;
    std::string out_path;
};

int cmd_plan(const PlanArgs& a, std::ostream& out, std::ostream& err)
{
    domain_count(a.k, std::max(a.n, 1));  // rejects even k up front
    if (a.n < 1) throw InputError("--n must be positive");

    std::vector<SpherePoint> config;
    if (a.random) {
        std::mt19937_64 rng(a.seed);
        std::normal_distribution<double> gauss;
        for (int i = 0; i < a.n; ++i) {
            std::vector<double> v(a.k + 1);
            for (double& c : v) c = gauss(rng);
            config.push_back(SpherePoint::normalized(std::move(v)));
        }
    } else {
        config = read_config_file(a.points);
        if (static_cast<int>(config.size()) != a.n)
            throw InputError("--n is " + std::to_string(a.n) + " but the points file has " +
                             std::to_string(config.size()) + " points");
        for (const auto& p : config) {
            if (p.sphere_dim() != a.k)
                throw InputError("points must have " + std::to_string(a.k + 1) + " coordinates for S^" +
                                 std::to_string(a.k));
        }
    }

    const Plan p = plan(config, a.samples, a.tol);
    const double residual = endpoint_residual(p, config);
    const std::string doc = plan_to_json(p).dump();

    std::ostream* summary = &out;
    if (a.out_path.empty()) {
        out << doc << "\n";
        summary = &err;
    } else {
        std::ofstream file(a.out_path);
        if (!file) throw InputError("cannot write '" + a.out_path + "'");
        file << doc << "\n";
    }
    *summary << "domain " << p.domain << "\n";
    *summary << "endpoint residual " << std::scientific << std::setprecision(3) << residual << "\n";
    return kExitOk;
}

int cmd_gap(int n, std::ostream& out)
{
    const GapRecord g = gap_demo(n);
    out << "n = " << n << " (TC_2(S²) = TC_2(T²) = 3)\n";
    out << "S²: " << g.sphere_exact << " (exact) | T²: ≥" << g.torus_lower << "\n";
    out << "T² upper bound " << g.torus.upper << "; zcl(S²) = " << g.sphere.zcl.m << ", zcl(T²) = " << g.torus.zcl.m
        << "\n";
    return kExitOk;
}

int cmd_validate(const std::string& target, bool no_assoc_check, std::ostream& out, std::ostream& err)
{
    std::string path = target;
    if (target.rfind("load", 0) == 0) {
        const SpaceExpr e = parse_space(target);
        if (e.kind != SpaceExpr::Kind::Load) throw InputError("validate expects a single load(PATH)");
        path = e.path;
    }
    const LoadedSpace loaded = read_space_file(path, {no_assoc_check});
    if (loaded.violations.empty()) {
        out << loaded.space.name << ": valid (" << loaded.space.algebra->dim() << " basis elements, field "
            << loaded.space.algebra->field().to_string() << ")\n";
        return kExitOk;
    }
    for (const auto& v : loaded.violations) err << to_string(v.kind) << ": " << v.message << "\n";
    err << loaded.violations.size() << " violation(s)\n";
    return kExitInput;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bounds for higher topological complexity TC_n and geodesic planners on odd spheres", "tcn"};
    app.require_subcommand(1);

    BoundsArgs bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "lower/upper bounds for TC_n of a space");
    bounds_cmd->add_option("--space", bounds.space, "space expression, e.g. \"S(2)*T(2)\" or \"load(x.json)\"")
        ->required();
    auto* n_opt = bounds_cmd->add_option("--n", bounds.n, "level n >= 2");
    auto* range_opt = bounds_cmd->add_option("--n-range", bounds.n_range, "levels A..B");
    n_opt->excludes(range_opt);
    bounds_cmd->add_option("--field", bounds.field, "coefficient field: Q or Fp:<p>")->capture_default_str();
    bounds_cmd->add_flag("--certificate", bounds.certificate, "include a zero-divisor certificate");
    bounds_cmd->add_flag("--json", bounds.json, "one JSON object per line");
    bounds_cmd->add_flag("--validate", bounds.validate, "check the algebra laws before computing");
    bounds_cmd->add_flag("--no-assoc-check", bounds.no_assoc_check,
                         "skip associativity checks when loading bases larger than 64");

    PlanArgs plan_args;
    std::uint64_t seed = 0;
    auto* plan_cmd = app.add_subcommand("plan", "geodesic motion planner on an odd sphere");
    plan_cmd->add_option("--k", plan_args.k, "sphere dimension (odd)")->required();
    plan_cmd->add_option("--n", plan_args.n, "number of points")->required();
    auto* points_opt = plan_cmd->add_option("--points", plan_args.points, "JSON array of points");
    auto* random_opt = plan_cmd->add_option("--random", seed, "seed for a random configuration");
    points_opt->excludes(random_opt);
    plan_cmd->add_option("--samples", plan_args.samples, "sample intervals per path")->capture_default_str();
    plan_cmd->add_option("--tol", plan_args.tol, "antipode tolerance")->capture_default_str();
    plan_cmd->add_option("--out", plan_args.out_path, "output plan file (stdout when omitted)");

    int gap_n = 0;
    auto* gap_cmd = app.add_subcommand("gap", "compare S^2 and T^2 at level n");
    gap_cmd->add_option("--n", gap_n, "level n >= 3")->required();

    std::string validate_target;
    bool validate_no_assoc = false;
    auto* validate_cmd = app.add_subcommand("validate", "check the graded-algebra laws of a custom algebra file");
    validate_cmd->add_option("file", validate_target, "PATH or load(PATH)")->required();
    validate_cmd->add_flag("--no-assoc-check", validate_no_assoc,
                           "skip associativity checks for bases larger than 64");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (bounds_cmd->parsed()) {
            if (!*n_opt && !*range_opt) throw InputError("one of --n or --n-range is required");
            return cmd_bounds(bounds, out, err);
        }
        if (plan_cmd->parsed()) {
            if (!*points_opt && !*random_opt) throw InputError("one of --points or --random is required");
            plan_args.random = bool(*random_opt);
            plan_args.seed = seed;
            return cmd_plan(plan_args, out, err);
        }
        if (gap_cmd->parsed()) return cmd_gap(gap_n, out);
        if (validate_cmd->parsed()) return cmd_validate(validate_target, validate_no_assoc, out, err);
    } catch (const MetadataError& e) {
        err << "error: " << e.what() << "\n";
        return kExitMetadata;
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << " (raise TCN_MAX_DIM to allow larger tensor powers)\n";
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}

}  // namespace tcn
