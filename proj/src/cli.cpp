#include "freeharm/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "freeharm/acceptance.hpp"
#include "freeharm/coefficients.hpp"
#include "freeharm/convolution.hpp"
#include "freeharm/element_set.hpp"
#include "freeharm/errors.hpp"
#include "freeharm/leinert.hpp"
#include "freeharm/line.hpp"
#include "freeharm/report.hpp"
#include "freeharm/schur.hpp"

namespace freeharm {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string six_digits(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

json bounded_value(double value, const std::string& kind, double tol = 0.0) {
    json j{{"value", value}, {"kind", kind}};
    if (tol > 0.0) j["tol"] = tol;
    return j;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

std::vector<std::size_t> parse_dim_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (double d : parse_double_list(text)) {
        if (d < 1) throw std::invalid_argument("dimensions must be positive");
        out.push_back(static_cast<std::size_t>(d));
    }
    return out;
}

struct CliContext {
    RunConfig config;
    std::ostream& out;
    std::ostream& err;
    int exit_code = kExitOk;
};

void cmd_leinert_check(CliContext& ctx, const std::string& set_file, int max_depth) {
    const GroupElementSet set = read_set_file(set_file);
    const LeinertVerdict verdict =
        check_leinert_condition(set, max_depth, ctx.config.state_cap);
    if (ctx.config.format == OutputFormat::json) {
        json witness = json::array();
        for (const auto& w : verdict.witness) witness.push_back(format_word(w));
        json j{{"config", ctx.config.to_json()},
               {"verdict", verdict.violation ? "violation" : "no_violation"},
               {"depth", verdict.depth},
               {"witness", witness}};
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << ctx.config.header();
        ctx.out << "set: " << set_file << " (" << set.size() << " elements)\n";
        ctx.out << "max depth: " << max_depth << '\n';
        if (verdict.violation) {
            ctx.out << "verdict: violation at depth " << verdict.depth << '\n';
            ctx.out << "witness:";
            for (const auto& w : verdict.witness) ctx.out << ' ' << format_word(w);
            ctx.out << '\n';
            ctx.out << "witness re-verified by exact word arithmetic\n";
        } else {
            ctx.out << "verdict: no violation up to depth " << verdict.depth
                    << " (bounded search; deeper violations remain possible)\n";
        }
    }
}

void cmd_leinert_family(CliContext& ctx, const std::string& name, int k, int n) {
    const SetFamilySpec spec{parse_family_name(name), k, n};
    const GroupElementSet set = generate_family(spec);
    if (ctx.config.format == OutputFormat::json) {
        json words = json::array();
        for (const auto& w : set.elements()) words.push_back(format_word(w));
        json j{{"config", ctx.config.to_json()},
               {"family", family_name(spec.family)},
               {"k", k},
               {"n", n},
               {"size", set.size()},
               {"elements", words}};
        ctx.out << j.dump(2) << '\n';
    } else {
        // Set-file format: the '#' header keeps the output usable as --set input.
        ctx.out << ctx.config.header();
        ctx.out << "# family = " << family_name(spec.family) << ", k = " << k;
        if (spec.family == SetFamily::WordsOfLengthN) ctx.out << ", n = " << n;
        ctx.out << '\n';
        write_set(ctx.out, set);
    }
}

void cmd_norm_sweep(CliContext& ctx, const std::string& coeffs_file, int r_min, int r_max,
                    int num_generators) {
    const CoefficientFunction a = read_coefficients_file(coeffs_file);
    std::optional<int> gens;
    if (num_generators > 0) gens = num_generators;
    const auto rows = norm_sweep(a, r_min, r_max, ctx.config.tol, gens, ctx.config.ball_cap,
                                 ctx.config.entry_cap);
    if (ctx.config.format == OutputFormat::json) {
        json jrows = json::array();
        for (const auto& row : rows) {
            jrows.push_back(
                {{"r", row.radius},
                 {"ball_size", row.ball_size},
                 {"norm", bounded_value(row.norm.value, "lower_bound", ctx.config.tol)},
                 {"norm_converged", row.norm.converged},
                 {"row_bound", bounded_value(row.row_bound, "lower_bound")},
                 {"col_bound", bounded_value(row.col_bound, "lower_bound")},
                 {"l1_bound", bounded_value(row.l1_bound, "upper_bound")}});
        }
        json j{{"config", ctx.config.to_json()}, {"rows", jrows}};
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << ctx.config.header();
        ctx.out << "# norm: compression norm, lower bound within tol; row/col: lower bounds; "
                   "l1: upper bound\n";
        ctx.out << "r,ball_size,norm,norm_converged,row_bound,col_bound,l1_bound\n";
        for (const auto& row : rows) {
            ctx.out << row.radius << ',' << row.ball_size << ','
                    << format_double(row.norm.value) << ',' << (row.norm.converged ? 1 : 0)
                    << ',' << format_double(row.row_bound) << ','
                    << format_double(row.col_bound) << ',' << format_double(row.l1_bound)
                    << '\n';
        }
    }
}

void cmd_schur_sweep(CliContext& ctx, const std::string& dims_text) {
    const auto dims = parse_dim_list(dims_text);
    const auto entries = triangular_growth_sweep(dims, ctx.config.tol);
    if (ctx.config.format == OutputFormat::json) {
        json jrows = json::array();
        for (const auto& e : entries) {
            json row{{"n", e.n}, {"skipped", e.skipped}};
            if (!e.skipped) {
                row["norm_h"] = bounded_value(e.norm_h.value, "lower_bound", ctx.config.tol);
                row["norm_tri"] = bounded_value(e.norm_tri.value, "lower_bound", ctx.config.tol);
                row["rho"] = bounded_value(e.rho, "ratio_of_lower_bounds", ctx.config.tol);
            }
            jrows.push_back(row);
        }
        json j{{"config", ctx.config.to_json()}, {"rows", jrows}};
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << ctx.config.header();
        ctx.out << "# norms are power-iteration lower bounds within tol; rho to 6 significant "
                   "digits\n";
        ctx.out << "n,norm_h,norm_tri,rho\n";
        for (const auto& e : entries) {
            if (e.skipped) {
                ctx.out << e.n << ",,,skipped\n";
            } else {
                ctx.out << e.n << ',' << format_double(e.norm_h.value) << ','
                        << format_double(e.norm_tri.value) << ',' << six_digits(e.rho) << '\n';
            }
        }
    }
}

void cmd_schur_apply(CliContext& ctx, const std::string& symbol_file,
                     const std::string& matrix_file) {
    const SchurSymbol symbol(read_matrix_file(symbol_file));
    const DenseMatrix t = read_matrix_file(matrix_file);
    const DenseMatrix result = schur_apply(symbol, t);
    if (ctx.config.format == OutputFormat::json) {
        json rows = json::array();
        for (std::size_t i = 0; i < result.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < result.cols(); ++j)
                row.push_back({result(i, j).real(), result(i, j).imag()});
            rows.push_back(row);
        }
        json j{{"config", ctx.config.to_json()}, {"n", result.rows()}, {"entries", rows}};
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << ctx.config.header();
        write_matrix(ctx.out, result);
    }
}

void describe_function(json& j, std::ostream& human, const SampledLineFunction& f,
                       const std::string& label) {
    const auto norm = f.a_norm();
    j[label + "_a_norm"] = bounded_value(norm.value, "quadrature");
    j[label + "_a_norm_tail_bound"] = norm.tail_bound;
    human << label << " A-norm (grid quadrature) = " << format_double(norm.value)
          << ", tail bound = " << format_double(norm.tail_bound) << '\n';
}

void cmd_line_interpolate(CliContext& ctx, const std::string& phi_file, double delta,
                          const std::string& eval_points, const std::string& out_file) {
    const IntegerSequence phi = read_sequence_file(phi_file);
    const auto f = gamma_interpolate(phi, delta);

    double max_residual = 0.0;
    if (!phi.empty()) {
        const int lo = phi.min_index() - 2;
        const int hi = phi.max_index() + 2;
        const auto values = f.integer_values(lo, hi);
        for (int n = lo; n <= hi; ++n)
            max_residual = std::max(
                max_residual, std::abs(values[static_cast<std::size_t>(n - lo)] - phi.at(n)));
    }

    json j{{"config", ctx.config.to_json()},
           {"delta", delta},
           {"l2_norm_phi", phi.l2_norm()},
           {"max_interpolation_residual", max_residual}};
    std::ostringstream human;
    human << "delta = " << format_double(delta) << ", support size = " << phi.support_size()
          << ", ||phi||_2 = " << format_double(phi.l2_norm()) << '\n';
    human << "max |f(n) - phi(n)| over the support window = " << format_double(max_residual)
          << '\n';
    describe_function(j, human, f, "interpolant");

    if (!eval_points.empty()) {
        json evals = json::array();
        for (double x : parse_double_list(eval_points)) {
            const Complex v = f.evaluate(x);
            evals.push_back({{"x", x}, {"re", v.real()}, {"im", v.imag()}});
            human << "f(" << format_double(x) << ") = " << format_double(v.real()) << " + "
                  << format_double(v.imag()) << "i\n";
        }
        j["evaluations"] = evals;
    }
    if (!out_file.empty()) {
        std::ofstream file(out_file);
        if (!file) throw std::runtime_error("cannot write function file: " + out_file);
        write_function(file, f);
        human << "samples written to " << out_file << '\n';
    }

    if (ctx.config.format == OutputFormat::json) {
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << ctx.config.header() << human.str();
    }
}

void cmd_line_project(CliContext& ctx, const std::string& vhat_file, double delta,
                      const std::string& eval_points, const std::string& out_file) {
    const SampledLineFunction v = read_function_file(vhat_file);
    const auto pv = complement_projection(v, delta);

    double max_integer = 0.0;
    for (const auto& z : pv.integer_values(-pv.max_integer_range(), pv.max_integer_range()))
        max_integer = std::max(max_integer, std::abs(z));

    json j{{"config", ctx.config.to_json()},
           {"delta", delta},
           {"max_integer_abs", max_integer}};
    std::ostringstream human;
    human << "delta = " << format_double(delta) << '\n';
    describe_function(j, human, v, "input");
    describe_function(j, human, pv, "projection");
    human << "max |Pv(n)| over representable integers = " << format_double(max_integer) << '\n';

    if (!eval_points.empty()) {
        json evals = json::array();
        for (double x : parse_double_list(eval_points)) {
            const Complex z = pv.evaluate(x);
            evals.push_back({{"x", x}, {"re", z.real()}, {"im", z.imag()}});
            human << "Pv(" << format_double(x) << ") = " << format_double(z.real()) << " + "
                  << format_double(z.imag()) << "i\n";
        }
        j["evaluations"] = evals;
    }
    if (!out_file.empty()) {
        std::ofstream file(out_file);
        if (!file) throw std::runtime_error("cannot write function file: " + out_file);
        write_function(file, pv);
        human << "samples written to " << out_file << '\n';
    }

    if (ctx.config.format == OutputFormat::json) {
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << ctx.config.header() << human.str();
    }
}

void cmd_accept(CliContext& ctx) {
    AcceptanceOptions options;
    options.seed = ctx.config.seed;
    const bool human = ctx.config.format != OutputFormat::json;
    if (human) ctx.out << ctx.config.header();
    const auto results = run_acceptance(options, human ? &ctx.out : nullptr);
    if (ctx.config.format == OutputFormat::json) {
        json criteria = json::array();
        for (const auto& r : results) {
            json measurements;
            for (const auto& [k, v] : r.measurements) measurements[k] = v;
            criteria.push_back(
                {{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                 {"measurements", measurements}});
        }
        json j{{"config", ctx.config.to_json()},
               {"criteria", criteria},
               {"all_passed", all_passed(results)}};
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << (all_passed(results) ? "all criteria passed\n" : "CRITERIA FAILED\n");
    }
    if (!all_passed(results)) ctx.exit_code = kExitVerificationFailure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliContext ctx{RunConfig{}, out, err};
    bool json_flag = false;
    bool csv_flag = false;
    std::uint64_t master_cap = 0;

    CLI::App app{"freeharm: numerics for Leinert sets, free-group convolution norms,\n"
                 "Schur-multiplier truncation and line interpolation operators"};
    app.fallthrough(true);
    app.require_subcommand(1);
    app.add_option("--seed", ctx.config.seed, "random seed for randomized runs")
        ->envname("FREEHARM_SEED")
        ->capture_default_str();
    app.add_option("--tol", ctx.config.tol, "relative tolerance of the norm engine")
        ->envname("FREEHARM_TOL")
        ->capture_default_str();
    app.add_option("--cap", master_cap,
                   "master resource cap: ball elements = cap, search states = 2*cap, "
                   "operator entries = 40*cap")
        ->envname("FREEHARM_CAP");
    app.add_flag("--json", json_flag, "emit a JSON report");
    app.add_flag("--csv", csv_flag, "emit CSV (tabular commands)");

    auto* leinert = app.add_subcommand("leinert", "Leinert-condition checks and set families");
    leinert->require_subcommand(1);
    auto* check = leinert->add_subcommand("check", "bounded search for condition violations");
    std::string set_file;
    int max_depth = 3;
    check->add_option("--set", set_file, "set file, one word per line")->required();
    check->add_option("--max-depth", max_depth, "search n = 1..max-depth")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* family = leinert->add_subcommand("family", "generate a named set family");
    std::string family_tag;
    int family_k = 1;
    int family_n = 0;
    family
        ->add_option("--name", family_tag,
                     "generators | generators-and-inverses | words-of-length-n | "
                     "upper-triangular-weak | upper-triangular-strict")
        ->required();
    family->add_option("--k", family_k, "size parameter")->required()->check(CLI::PositiveNumber);
    family->add_option("--n", family_n, "word length (words-of-length-n)");

    auto* norm = app.add_subcommand("norm", "compressed convolution-operator norms");
    norm->require_subcommand(1);
    auto* sweep = norm->add_subcommand("sweep", "norms over a radius range");
    std::string coeffs_file;
    int r_min = 0, r_max = 0, num_generators = 0;
    sweep->add_option("--coeffs", coeffs_file, "coefficient file")->required();
    sweep->add_option("--r-min", r_min, "smallest radius")->required();
    sweep->add_option("--r-max", r_max, "largest radius")->required();
    sweep->add_option("--num-generators", num_generators,
                      "ambient free group rank (default: inferred from the support)");

    auto* schur = app.add_subcommand("schur", "Schur multipliers on finite matrices");
    schur->require_subcommand(1);
    auto* ssweep = schur->add_subcommand("sweep", "triangular truncation growth");
    std::string dims_text = "8,16,32,64,128,256,512,1024";
    ssweep->add_option("--dims", dims_text, "comma-separated dimensions")
        ->capture_default_str();

    auto* sapply = schur->add_subcommand("apply", "entrywise action of a symbol");
    std::string symbol_file, matrix_file;
    sapply->add_option("--symbol", symbol_file, "symbol matrix file")->required();
    sapply->add_option("--matrix", matrix_file, "target matrix file")->required();

    auto* line = app.add_subcommand("line", "interpolation and projection on the real line");
    line->require_subcommand(1);
    auto* interpolate = line->add_subcommand("interpolate", "build the interpolant of phi");
    std::string phi_file, eval_points, out_file;
    double delta = 0.5;
    interpolate->add_option("--phi", phi_file, "sequence file: lines 'n re im'")->required();
    interpolate->add_option("--delta", delta, "bump half-width, 0 < delta <= 1/2")
        ->capture_default_str();
    interpolate->add_option("--eval-points", eval_points, "comma-separated evaluation points");
    interpolate->add_option("--out", out_file, "write the function file here");

    auto* project = line->add_subcommand("project", "apply the complementing projection");
    std::string vhat_file, p_eval_points, p_out_file;
    double p_delta = 0.5;
    project->add_option("--vhat", vhat_file, "function file (header, then samples)")->required();
    project->add_option("--delta", p_delta, "bump half-width, 0 < delta <= 1/2")
        ->capture_default_str();
    project->add_option("--eval-points", p_eval_points, "comma-separated evaluation points");
    project->add_option("--out", p_out_file, "write the projected function file here");

    auto* accept = app.add_subcommand("accept", "run the built-in verification suite");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (json_flag && csv_flag) {
        err << "error: --json and --csv are mutually exclusive\n";
        return kExitUsage;
    }
    ctx.config.format = json_flag ? OutputFormat::json
                                  : (csv_flag ? OutputFormat::csv : OutputFormat::human);
    if (master_cap > 0) ctx.config.set_master_cap(master_cap);

    try {
        if (check->parsed()) {
            cmd_leinert_check(ctx, set_file, max_depth);
        } else if (family->parsed()) {
            cmd_leinert_family(ctx, family_tag, family_k, family_n);
        } else if (sweep->parsed()) {
            cmd_norm_sweep(ctx, coeffs_file, r_min, r_max, num_generators);
        } else if (ssweep->parsed()) {
            cmd_schur_sweep(ctx, dims_text);
        } else if (sapply->parsed()) {
            cmd_schur_apply(ctx, symbol_file, matrix_file);
        } else if (interpolate->parsed()) {
            cmd_line_interpolate(ctx, phi_file, delta, eval_points, out_file);
        } else if (project->parsed()) {
            cmd_line_project(ctx, vhat_file, p_delta, p_eval_points, p_out_file);
        } else if (accept->parsed()) {
            cmd_accept(ctx);
        } else {
            err << "error: no command given\n";
            return kExitUsage;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "resource cap exceeded: " << e.what() << '\n';
        return kExitResource;
    } catch (const GridResolutionError& e) {
        err << "grid resolution: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return ctx.exit_code;
}

} // namespace freeharm
