#include "curv4/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "curv4/frames.hpp"
#include "curv4/inequality.hpp"
#include "curv4/io.hpp"
#include "curv4/ode.hpp"
#include "curv4/report.hpp"
#include "curv4/soliton.hpp"
#include "curv4/spectrum.hpp"
#include "curv4/verify.hpp"
#include "curv4/version.hpp"

namespace curv4 {

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("CURV4_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return kDefaultSeed;
}

// Writes rendered output to --out when given, else to the stream.
struct Sink {
    std::string path;
    std::ostream& fallback;

    void write(const std::string& text) const {
        if (path.empty()) {
            fallback << text;
            return;
        }
        write_text_file(path, text);
    }
};

std::string render(const VerificationReport& report, const std::string& format) {
    if (format == "json") return report.to_json().dump(2) + "\n";
    return report.to_text();
}

std::string matrix_text(const Mat3& m) {
    std::ostringstream s;
    s.precision(12);
    for (int i = 0; i < 3; ++i) {
        s << "    [" << m(i, 0) << ", " << m(i, 1) << ", " << m(i, 2) << "]\n";
    }
    return s.str();
}

Json verdict_json(const PicVerdict& v) {
    return Json{{"a_pair_sum", v.a_pair_sum}, {"c_pair_sum", v.c_pair_sum},
                {"pic", v.pic},               {"nnic", v.nnic},
                {"half_pic", v.half_pic},     {"half_nnic", v.half_nnic},
                {"strict_side", to_string(v.strict_side)}};
}

Json vec3_json(const Vec3& v) { return Json{v(0), v(1), v(2)}; }

int run_decompose(const std::string& input, const std::string& format, const Sink& sink) {
    const Json doc = read_json_file(input);
    const CurvatureOperator op = operator_from_any_json(doc);
    if (format == "json") {
        sink.write(operator_to_json(op).dump(2) + "\n");
        return 0;
    }
    const BlockSpectrum spec = block_spectrum(op);
    const PicVerdict verdict = pic_classify(op);
    std::ostringstream s;
    s.precision(12);
    s << "scalar curvature R = " << op.R << "\n";
    s << "  A (self-dual block):\n" << matrix_text(op.A);
    s << "  B (off-diagonal block):\n" << matrix_text(op.B);
    s << "  C (anti-self-dual block):\n" << matrix_text(op.C);
    s << "  A eigenvalues: " << spec.a_eigs.transpose() << "\n";
    s << "  C eigenvalues: " << spec.c_eigs.transpose() << "\n";
    s << "  B singular values: " << spec.b_singulars.transpose() << "\n";
    s << "  pair sums: A " << verdict.a_pair_sum << ", C " << verdict.c_pair_sum << "\n";
    s << "  verdict: pic=" << verdict.pic << " nnic=" << verdict.nnic
      << " half_pic=" << verdict.half_pic << " half_nnic=" << verdict.half_nnic
      << " strict_side=" << to_string(verdict.strict_side) << "\n";
    sink.write(s.str());
    return 0;
}

int run_model_list(const std::string& format, const Sink& sink) {
    if (format == "json") {
        Json list = Json::array();
        for (ModelName name : model_catalog())
            list.push_back(Json{{"name", to_string(name)},
                                {"description", model_description(name)}});
        sink.write(list.dump(2) + "\n");
        return 0;
    }
    std::ostringstream s;
    for (ModelName name : model_catalog())
        s << to_string(name) << ": " << model_description(name) << "\n";
    sink.write(s.str());
    return 0;
}

int run_model_check(const std::string& name_str, const std::string& format,
                    const Sink& sink) {
    const ModelName name = model_from_string(name_str);
    VerificationReport report("model-check-" + name_str);

    {
        CheckRecord c;
        c.name = "soliton-residuals";
        c.tolerance = 1e-12;
        Stopwatch sw;
        double worst = 0.0;
        for (const ModelId& id : model_sample_points(name))
            worst = std::max(worst, soliton_residuals(model_point_data(id)).max());
        c.runtime_ms = sw.elapsed_ms();
        c.residual = worst;
        c.status = worst <= *c.tolerance ? CheckStatus::Pass : CheckStatus::Fail;
        c.detail = "five parameter points, four residuals each";
        report.checks.push_back(c);
    }
    {
        CheckRecord c;
        c.name = "classification";
        c.tolerance = 1e-12;
        Stopwatch sw;
        const CurvatureOperator op =
            to_operator(model_point_data({name, {0, 0, 0, 0}}).tensor);
        const PicVerdict verdict = pic_classify(op);
        const ModelExpectation expect = model_expectations(name);
        const BlockSpectrum spec = block_spectrum(op);
        const double worst =
            std::max({std::abs(verdict.a_pair_sum - expect.a_pair_sum),
                      std::abs(verdict.c_pair_sum - expect.c_pair_sum),
                      (spec.a_eigs - expect.a_eigs).cwiseAbs().maxCoeff(),
                      (spec.c_eigs - expect.c_eigs).cwiseAbs().maxCoeff()});
        const bool flags_ok = verdict.pic == expect.pic && verdict.nnic == expect.nnic &&
                              verdict.half_pic == expect.half_pic &&
                              verdict.half_nnic == expect.half_nnic &&
                              verdict.strict_side == expect.strict_side;
        c.runtime_ms = sw.elapsed_ms();
        c.residual = worst;
        c.status = (flags_ok && worst <= *c.tolerance) ? CheckStatus::Pass : CheckStatus::Fail;
        c.detail = "verdict and spectra against the expectation table";
        c.payload = verdict_json(verdict);
        report.checks.push_back(c);
    }
    sink.write(render(report, format));
    return report.overall_pass() ? 0 : 1;
}

int run_pic_classify(const std::string& input, std::uint64_t samples, std::uint64_t seed,
                     const std::string& format, const Sink& sink) {
    const Json doc = read_json_file(input);
    const CurvatureOperator op = operator_from_any_json(doc);
    const PicVerdict verdict = pic_classify(op);
    const BlockSpectrum spec = block_spectrum(op);

    VerificationReport report("pic-classify");
    {
        CheckRecord c;
        c.name = "eigenvalue-verdict";
        c.status = CheckStatus::ReportOnly;
        c.detail = std::string("pic=") + (verdict.pic ? "true" : "false") +
                   " half_pic=" + (verdict.half_pic ? "true" : "false") +
                   " nnic=" + (verdict.nnic ? "true" : "false") +
                   " half_nnic=" + (verdict.half_nnic ? "true" : "false") +
                   " strict_side=" + to_string(verdict.strict_side);
        c.payload = verdict_json(verdict);
        c.payload["a_eigs"] = vec3_json(spec.a_eigs);
        c.payload["c_eigs"] = vec3_json(spec.c_eigs);
        report.checks.push_back(c);
    }
    if (samples > 0) {
        CheckRecord c;
        c.name = "frame-scan-agreement";
        c.seed = seed;
        Stopwatch sw;
        const CurvatureTensor t = from_operator(op);
        const FrameScanResult minus = frame_min_scan(t, IsotropicSign::Minus, samples, seed);
        const FrameScanResult plus = frame_min_scan(t, IsotropicSign::Plus, samples, seed);
        const double a_bound = 2.0 * verdict.a_pair_sum;
        const double c_bound = 2.0 * verdict.c_pair_sum;
        const bool bound_ok =
            minus.min_value >= a_bound - 1e-9 && plus.min_value >= c_bound - 1e-9;
        c.runtime_ms = sw.elapsed_ms();
        c.residual = std::max(a_bound - minus.min_value, c_bound - plus.min_value);
        c.tolerance = 1e-9;
        c.status = bound_ok ? CheckStatus::Pass : CheckStatus::Fail;
        std::ostringstream d;
        d.precision(12);
        d << "sampled minima " << minus.min_value << " (minus), " << plus.min_value
          << " (plus) vs exact bounds " << a_bound << ", " << c_bound;
        c.detail = d.str();
        report.checks.push_back(c);
    }
    sink.write(render(report, format));
    return report.overall_pass() ? 0 : 1;
}

int run_identities(std::uint64_t samples, std::uint64_t seed, double tol,
                   const std::string& format, const Sink& sink) {
    VerificationReport report("identities");
    CheckRecord c;
    c.name = "block-identity-suite";
    c.seed = seed;
    c.tolerance = tol;
    Stopwatch sw;
    Rng rng(derive_stream(seed, 1001));
    double worst = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        CurvatureOperator op = random_bianchi_operator(rng);
        op = scale_operator(op, 1.0 / op.norm());
        worst = std::max(worst, block_identity_residuals(op).max());
    }
    c.runtime_ms = sw.elapsed_ms();
    c.residual = worst;
    c.status = worst <= tol ? CheckStatus::Pass : CheckStatus::Fail;
    c.detail = std::to_string(samples) + " random operators scaled to unit norm";
    report.checks.push_back(c);
    sink.write(render(report, format));
    return report.overall_pass() ? 0 : 1;
}

int run_gmin(double r, double step, const std::string& format, const Sink& sink) {
    VerificationReport report("gmin");
    CheckRecord c;
    c.name = "grid-objective-minimum";
    Stopwatch sw;
    const GridMinResult grid = grid_minimize_G(r, step);
    c.runtime_ms = sw.elapsed_ms();
    Json mins = Json::array();
    for (const Vec3& rep : grid.minimizers) mins.push_back(vec3_json(rep));
    c.payload = Json{{"min_value", grid.min_value},
                     {"argmin", vec3_json(grid.argmin)},
                     {"minimizers", mins},
                     {"unbounded_below", grid.unbounded_below}};
    if (grid.unbounded_below) {
        Json rays = Json::array();
        for (const auto& [s, g] : grid.ray_samples) rays.push_back(Json{{"s", s}, {"G", g}});
        c.payload["ray_samples"] = rays;
        c.status = CheckStatus::ReportOnly;
        c.detail = "R <= 0: objective unbounded below along c = s(-1,-1,2)";
        report.checks.push_back(c);
        sink.write(render(report, format));
        return 0;
    }
    const double robust_tol = 10.0 * step * r * r;
    const LagrangeSolution candidates = lagrange_candidates(r);
    const double candidate_gap = std::abs(grid.min_value - candidates.min_value());
    c.residual = std::max(-grid.min_value, 0.0);
    c.tolerance = robust_tol;
    c.status = (grid.min_value >= -robust_tol && candidate_gap <= robust_tol)
                   ? CheckStatus::Pass
                   : CheckStatus::Fail;
    std::ostringstream d;
    d.precision(12);
    d << "min G = " << grid.min_value << " over the feasible grid, "
      << grid.minimizers.size() << " minimizer clusters; closed-form candidate min "
      << candidates.min_value();
    c.detail = d.str();
    c.payload["interior_asymmetric_value"] = candidates.interior_asymmetric_value;
    report.checks.push_back(c);
    sink.write(render(report, format));
    return report.overall_pass() ? 0 : 1;
}

int parse_init_operator(const std::string& spec, std::uint64_t seed, CurvatureOperator& op,
                        std::ostream& err) {
    if (spec.rfind("constant:", 0) == 0) {
        const double k = std::stod(spec.substr(9));
        op = to_operator(constant_curvature(k));
        return 0;
    }
    if (spec == "random") {
        Rng rng(derive_stream(seed, 424242));
        op = random_bianchi_operator(rng);
        op = scale_operator(op, 1.0 / op.norm());
        return 0;
    }
    for (ModelName name : model_catalog())
        if (to_string(name) == spec) {
            op = to_operator(model_point_data({name, {0, 0, 0, 0}}).tensor);
            return 0;
        }
    err << "unknown --init spec: " << spec
        << " (expected a model name, random, or constant:K)\n";
    return 2;
}

int run_ode_run(const std::string& init, double dt, double t_max,
                const std::vector<std::string>& monitors, std::uint64_t seed,
                const Sink& sink, std::ostream& err) {
    CurvatureOperator op;
    const int rc = parse_init_operator(init, seed, op, err);
    if (rc != 0) return rc;
    const OdeResult result = ode_integrate(op, dt, t_max);
    const bool want_all = monitors.empty();
    const auto wanted = [&](const char* name) {
        return want_all || std::find(monitors.begin(), monitors.end(), name) != monitors.end();
    };
    std::ostringstream s;
    for (const OdeSample& sample : result.samples) {
        Json line{{"t", sample.t}};
        if (wanted("trace_gap")) line["trace_gap"] = sample.trace_gap;
        if (wanted("a_pair")) line["a_pair"] = sample.a_pair;
        if (wanted("c_pair")) line["c_pair"] = sample.c_pair;
        if (wanted("norm")) line["norm"] = sample.norm;
        s << line.dump() << "\n";
    }
    s << Json{{"halt", to_string(result.reason)},
              {"t_final", result.t_final},
              {"steps", result.samples.size() - 1}}
             .dump()
      << "\n";
    sink.write(s.str());
    return result.reason == HaltReason::NonFinite ? 1 : 0;
}

int run_ode_cone(std::uint64_t samples, std::uint64_t seed, double dt, double t_max,
                 double margin, double exit_tol, const std::string& format,
                 const Sink& sink) {
    VerificationReport report("ode-cone");
    CheckRecord c;
    c.name = "cone-experiment";
    c.seed = seed;
    Stopwatch sw;
    const ConeStats stats = cone_experiment(samples, seed, dt, t_max, margin, exit_tol);
    c.runtime_ms = sw.elapsed_ms();
    c.residual = static_cast<double>(stats.exits.size());
    c.tolerance = 0.0;
    c.status = CheckStatus::ReportOnly;
    c.detail = std::to_string(stats.runs) + " runs, " + std::to_string(stats.exits.size()) +
               " exits, " + std::to_string(stats.blowups) + " blow-ups" +
               (stats.exits.empty() ? "" : " FLAGGED FOR INVESTIGATION");
    Json exits = Json::array();
    for (const ConeExit& e : stats.exits)
        exits.push_back({{"sample_index", e.sample_index},
                         {"t", e.t},
                         {"c_pair", e.c_pair},
                         {"rejection_rounds", e.rejection_rounds}});
    c.payload = Json{{"runs", stats.runs},
                     {"exits", exits},
                     {"min_normalized_c_pair", stats.min_normalized_c_pair},
                     {"blowups", stats.blowups}};
    report.checks.push_back(c);
    sink.write(render(report, format));
    return 0;
}

} // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"four-dimensional curvature-operator toolbox"};
    app.set_version_flag("--version", std::string(kVersion));

    // Each subcommand binds its own numeric options: CLI11 default_val writes
    // through the bound variable at definition time, so sharing one variable
    // across subcommands would let the last definition win.
    std::string input, format = "json", out_path, model_name, init;
    std::optional<std::uint64_t> seed_flag;
    std::uint64_t classify_samples = 0, id_samples = 10000, cone_samples = 500;
    double tol = 1e-9, scalar_r = 12.0, grid_step = 1e-3;
    double run_dt = 1e-3, run_t_max = 1.0, cone_dt = 2e-3, cone_t_max = 1.0;
    double margin = 0.05, exit_tol = 1e-8;
    std::vector<std::string> monitors;

    CLI::App* decompose = app.add_subcommand("decompose", "tensor file -> operator blocks");
    decompose->add_option("--input", input, "tensor or operator JSON file")->required();
    decompose->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    decompose->add_option("--out", out_path, "write output to a file");

    CLI::App* model = app.add_subcommand("model", "model soliton catalog");
    model->require_subcommand(1);
    CLI::App* model_list = model->add_subcommand("list", "list catalog models");
    model_list->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    model_list->add_option("--out", out_path);
    CLI::App* model_check = model->add_subcommand("check", "verify one model");
    model_check->add_option("name", model_name, "model name")->required();
    model_check->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    model_check->add_option("--out", out_path);

    CLI::App* pic = app.add_subcommand("pic", "isotropic-curvature predicates");
    pic->require_subcommand(1);
    CLI::App* classify = pic->add_subcommand("classify", "two-positivity verdict");
    classify->add_option("--input", input, "tensor or operator JSON file")->required();
    classify->add_option("--samples", classify_samples, "frame-scan sample count (0 = skip)")
        ->capture_default_str();
    classify->add_option("--seed", seed_flag, "scan seed");
    classify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    classify->add_option("--out", out_path);

    CLI::App* identities = app.add_subcommand("identities", "random-operator identity suite");
    identities->add_option("--samples", id_samples)->capture_default_str();
    identities->add_option("--seed", seed_flag);
    identities->add_option("--tol", tol, "residual tolerance")->capture_default_str();
    identities->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    identities->add_option("--out", out_path);

    CLI::App* gmin = app.add_subcommand("gmin", "grid minimization of the cubic objective");
    gmin->add_option("--scalar-curvature", scalar_r, "R value")->required();
    gmin->add_option("--grid", grid_step, "grid step")->capture_default_str();
    gmin->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    gmin->add_option("--out", out_path);

    CLI::App* ode = app.add_subcommand("ode", "reaction ODE tools");
    ode->require_subcommand(1);
    CLI::App* ode_run = ode->add_subcommand("run", "integrate one trajectory (JSON lines)");
    ode_run->add_option("--init", init, "model name, random, or constant:K")->required();
    ode_run->add_option("--dt", run_dt)->capture_default_str();
    ode_run->add_option("--t-max", run_t_max)->capture_default_str();
    ode_run->add_option("--monitor", monitors,
                        "subset of trace_gap,a_pair,c_pair,norm (default all)");
    ode_run->add_option("--seed", seed_flag);
    ode_run->add_option("--out", out_path);
    CLI::App* ode_cone = ode->add_subcommand("cone", "cone-invariance experiment");
    ode_cone->add_option("--samples", cone_samples)->capture_default_str();
    ode_cone->add_option("--seed", seed_flag);
    ode_cone->add_option("--dt", cone_dt)->capture_default_str();
    ode_cone->add_option("--t-max", cone_t_max)->capture_default_str();
    ode_cone->add_option("--margin", margin)->capture_default_str();
    ode_cone->add_option("--exit-tol", exit_tol)->capture_default_str();
    ode_cone->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    ode_cone->add_option("--out", out_path);

    CLI::App* verify_all = app.add_subcommand("verify-all", "full acceptance suite");
    verify_all->add_option("--seed", seed_flag);
    verify_all->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    verify_all->add_option("--out", out_path);

    std::vector<std::string> argv_storage;
    argv_storage.push_back("curv4");
    for (const std::string& a : args) argv_storage.push_back(a);
    std::vector<const char*> argv;
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help / --version path.
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const std::uint64_t seed = resolve_seed(seed_flag);
    const Sink sink{out_path, out};

    try {
        if (app.got_subcommand(decompose)) return run_decompose(input, format, sink);
        if (app.got_subcommand(model)) {
            if (model->got_subcommand(model_list)) return run_model_list(format, sink);
            return run_model_check(model_name, format, sink);
        }
        if (app.got_subcommand(pic))
            return run_pic_classify(input, classify_samples, seed, format, sink);
        if (app.got_subcommand(identities))
            return run_identities(id_samples, seed, tol, format, sink);
        if (app.got_subcommand(gmin)) return run_gmin(scalar_r, grid_step, format, sink);
        if (app.got_subcommand(ode)) {
            if (ode->got_subcommand(ode_run))
                return run_ode_run(init, run_dt, run_t_max, monitors, seed, sink, err);
            return run_ode_cone(cone_samples, seed, cone_dt, cone_t_max, margin, exit_tol,
                                format, sink);
        }
        if (app.got_subcommand(verify_all)) {
            const VerificationReport report = run_acceptance_suite(seed);
            const bool json_out = verify_all->count("--format") > 0 && format == "json";
            sink.write(json_out ? report.to_json().dump(2) + "\n" : report.to_text());
            return report.overall_pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand given (try --help)\n";
    return 2;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_dispatch(args, std::cout, std::cerr);
}

} // namespace curv4
