#include "freeharm/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "freeharm/cayley_ball.hpp"
#include "freeharm/coefficients.hpp"
#include "freeharm/convolution.hpp"
#include "freeharm/dense_oracle.hpp"
#include "freeharm/element_set.hpp"
#include "freeharm/leinert.hpp"
#include "freeharm/line.hpp"
#include "freeharm/report.hpp"
#include "freeharm/schur.hpp"

namespace freeharm {

namespace {

using Clock = std::chrono::steady_clock;

struct Recorder {
    CriterionResult result;
    Clock::time_point start = Clock::now();
    bool ok = true;

    Recorder(int id, std::string name) {
        result.id = id;
        result.name = std::move(name);
    }
    void measure(const std::string& key, double value) {
        result.measurements.emplace_back(key, format_double(value));
    }
    void measure(const std::string& key, const std::string& value) {
        result.measurements.emplace_back(key, value);
    }
    void require(bool condition) { ok = ok && condition; }
    CriterionResult finish() {
        result.passed = ok;
        result.runtime_seconds =
            std::chrono::duration<double>(Clock::now() - start).count();
        return result;
    }
};

std::uint64_t derived_seed(std::uint64_t seed, int criterion) {
    return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(criterion);
}

std::vector<std::uint32_t> distinct_indices(GaussianSource& rng, int count, int bound) {
    std::vector<std::uint32_t> out;
    while (static_cast<int>(out.size()) < count) {
        const auto candidate = static_cast<std::uint32_t>(rng.uniform_int(0, bound - 1));
        if (std::find(out.begin(), out.end(), candidate) == out.end())
            out.push_back(candidate);
    }
    return out;
}

// 1. The multiplier bound numeric: for the indicator of a set whose elements
// have length <= 2 the sup factor is (1+2)^2 = 9 and the emitted bound 18.
CriterionResult criterion_haagerup(const AcceptanceOptions& opts) {
    Recorder rec(1, "haagerup-bound-numeric");
    const GroupElementSet set =
        generate_family({SetFamily::UpperTriangularWeak, 3, 0});
    const CayleyBall ball = enumerate_ball(3, 2);
    const CoefficientFunction phi = indicator(set, ball);
    const double sup = haagerup_sup_term(phi);
    const double bound = haagerup_bound(phi);
    rec.measure("sup_term", sup);
    rec.measure("bound", bound);
    rec.require(sup == opts.c1_expected_sup);
    rec.require(bound == opts.c1_expected_bound);
    return rec.finish();
}

// 2. Violation discovery and bounded non-violation on the named families.
CriterionResult criterion_leinert(const AcceptanceOptions& opts) {
    Recorder rec(2, "leinert-witness-discovery");

    const auto weak = check_leinert_condition(
        generate_family({SetFamily::UpperTriangularWeak, 3, 0}), opts.c2_weak_depth);
    rec.measure("weak3_verdict", std::string(weak.violation ? "violation" : "no_violation"));
    rec.require(weak.violation);
    if (weak.violation) {
        rec.measure("weak3_witness_length", static_cast<double>(weak.witness.size()));
        rec.require(verify_witness(weak.witness,
                                   generate_family({SetFamily::UpperTriangularWeak, 3, 0})));
    }

    const auto strict = check_leinert_condition(
        generate_family({SetFamily::UpperTriangularStrict, 4, 0}), opts.c2_strict_depth);
    rec.measure("strict4_verdict",
                std::string(strict.violation ? "violation" : "no_violation"));
    rec.measure("strict4_depth", static_cast<double>(strict.depth));
    if (strict.violation) {
        std::string witness;
        for (const auto& w : strict.witness) {
            if (!witness.empty()) witness += ' ';
            witness += format_word(w);
        }
        rec.measure("strict4_witness", witness);
    }
    rec.require(!strict.violation && strict.depth == opts.c2_strict_depth);

    const auto gens = check_leinert_condition(generate_family({SetFamily::Generators, 4, 0}),
                                              opts.c2_generators_depth);
    rec.measure("generators4_verdict",
                std::string(gens.violation ? "violation" : "no_violation"));
    rec.measure("generators4_depth", static_cast<double>(gens.depth));
    rec.require(!gens.violation && gens.depth == opts.c2_generators_depth);
    return rec.finish();
}

// 3. Row/column lower bound <= compression norm <= l1 upper bound for random
// matrix-valued coefficients supported in B_2 of F_2, compressed at r = 4.
CriterionResult criterion_sandwich(const AcceptanceOptions& opts) {
    Recorder rec(3, "norm-sandwich");
    GaussianSource rng(derived_seed(opts.seed, 3));
    const CayleyBall support_ball = enumerate_ball(2, 2);

    double min_lower_slack = 1e300;
    double min_upper_slack = 1e300;
    bool converged = true;
    for (int t = 0; t < opts.c3_instances; ++t) {
        const int d = rng.uniform_int(1, 4);
        const int support_size = rng.uniform_int(1, 6);
        CoefficientFunction a(d);
        for (const auto idx :
             distinct_indices(rng, support_size, static_cast<int>(support_ball.size()))) {
            DenseMatrix block(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
            for (auto& v : block.data()) v = rng.complex_normal();
            a.set(support_ball.element(idx), block);
        }
        const auto op = build_compression(a, 4, 2);
        const NormEstimate norm = operator_norm(op);
        converged = converged && norm.converged;
        const RowColumnBounds rc = row_column_bounds(a);
        min_lower_slack = std::min(min_lower_slack, norm.value - rc.max());
        min_upper_slack = std::min(min_upper_slack, l1_bound(a) - norm.value);
    }
    rec.measure("instances", static_cast<double>(opts.c3_instances));
    rec.measure("min_lower_slack", min_lower_slack);
    rec.measure("min_upper_slack", min_upper_slack);
    rec.require(converged);
    rec.require(min_lower_slack >= -opts.c3_slack);
    rec.require(min_upper_slack >= -opts.c3_slack);
    return rec.finish();
}

// 4. Compression norms of delta_x1 + delta_x2 are nondecreasing in r and the
// r = 12 value sits between 1.9 and the l1 bound 2.
CriterionResult criterion_monotonicity(const AcceptanceOptions& opts) {
    Recorder rec(4, "compression-monotonicity");
    CoefficientFunction a(1);
    a.set_scalar(Word::generator(1), 1.0);
    a.set_scalar(Word::generator(2), 1.0);
    const auto rows = norm_sweep(a, 1, 12, kDefaultNormTol, 2);

    double min_step = 1e300;
    bool converged = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        min_step = std::min(min_step, rows[i].norm.value - rows[i - 1].norm.value);
        converged = converged && rows[i].norm.converged;
    }
    const double final_norm = rows.back().norm.value;
    rec.measure("min_step", min_step);
    rec.measure("norm_r12", final_norm);
    rec.require(converged);
    rec.require(min_step >= -opts.c4_mono_slack);
    rec.require(final_norm >= opts.c4_low && final_norm <= opts.c4_high);
    return rec.finish();
}

// 5. Triangular truncation growth on the Hilbert-type kernels.
CriterionResult criterion_triangular_growth(const AcceptanceOptions& opts) {
    Recorder rec(5, "triangular-truncation-growth");
    const std::vector<std::size_t> dims = {8, 16, 32, 64, 128, 256, 512, 1024};
    const auto entries = triangular_growth_sweep(dims);

    double max_h = 0.0;
    double min_step = 1e300;
    bool converged = true;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        max_h = std::max(max_h, entries[i].norm_h.value);
        converged = converged && entries[i].norm_h.converged && entries[i].norm_tri.converged;
        if (i > 0) min_step = std::min(min_step, entries[i].rho - entries[i - 1].rho);
    }
    const double growth = entries.back().rho / entries.front().rho;
    rec.measure("max_norm_h", max_h);
    rec.measure("rho_8", entries.front().rho);
    rec.measure("rho_1024", entries.back().rho);
    rec.measure("growth", growth);
    rec.measure("min_rho_step", min_step);
    rec.require(converged);
    rec.require(max_h <= opts.c5_h_bound);
    rec.require(min_step >= -opts.c5_mono_slack);
    rec.require(growth >= opts.c5_growth_min);
    return rec.finish();
}

// 6. Interpolation at the integers and the l2 -> A-norm contraction.
CriterionResult criterion_interpolation(const AcceptanceOptions& opts) {
    Recorder rec(6, "interpolation-contraction");
    GaussianSource rng(derived_seed(opts.seed, 6));
    const FrequencyGrid grid = FrequencyGrid::standard();

    double max_residual = 0.0;
    double max_norm = 0.0;
    for (int t = 0; t < opts.c6_sequences; ++t) {
        IntegerSequence phi;
        for (int n = -25; n < 25; ++n) phi.set(n, rng.complex_normal());
        const double scale = 1.0 / phi.l2_norm();
        IntegerSequence unit;
        for (const auto& [n, v] : phi.values()) unit.set(n, v * scale);

        const auto f = gamma_interpolate(unit, 0.5, grid);
        const auto values = f.integer_values(-40, 40);
        for (int n = -40; n <= 40; ++n)
            max_residual = std::max(
                max_residual, std::abs(values[static_cast<std::size_t>(n + 40)] - unit.at(n)));
        max_norm = std::max(max_norm, f.a_norm().value);
    }
    rec.measure("sequences", static_cast<double>(opts.c6_sequences));
    rec.measure("max_interpolation_residual", max_residual);
    rec.measure("max_a_norm", max_norm);
    rec.require(max_residual <= opts.c6_interp_tol);
    rec.require(max_norm <= 1.0 + opts.c6_norm_tol);
    return rec.finish();
}

// 7. The complementing projection vanishes on the integers and is idempotent.
CriterionResult criterion_projection(const AcceptanceOptions& opts) {
    Recorder rec(7, "projection-laws");
    GaussianSource rng(derived_seed(opts.seed, 7));
    const FrequencyGrid grid = FrequencyGrid::standard();

    double max_integer_residual = 0.0;
    double max_idempotence = 0.0;
    for (int t = 0; t < opts.c7_functions; ++t) {
        IntegerSequence psi;
        for (int n = -20; n <= 20; ++n) psi.set(n, rng.complex_normal());
        const double source_delta = rng.uniform(0.35, 0.5);
        const auto v = gamma_interpolate(psi, source_delta, grid);

        const auto pv = complement_projection(v, 0.5);
        const auto integers = pv.integer_values(-pv.max_integer_range(), pv.max_integer_range());
        for (const auto& z : integers)
            max_integer_residual = std::max(max_integer_residual, std::abs(z));

        const auto ppv = complement_projection(pv, 0.5);
        max_idempotence = std::max(max_idempotence, (ppv - pv).a_norm().value);
    }
    rec.measure("functions", static_cast<double>(opts.c7_functions));
    rec.measure("max_integer_residual", max_integer_residual);
    rec.measure("max_idempotence_a_norm", max_idempotence);
    rec.require(max_integer_residual <= opts.c7_tol);
    rec.require(max_idempotence <= opts.c7_tol);
    return rec.finish();
}

// 8. Coefficient-level module identity of the restriction projection.
CriterionResult criterion_module_property(const AcceptanceOptions& opts) {
    Recorder rec(8, "restriction-module-property");
    GaussianSource rng(derived_seed(opts.seed, 8));
    const CayleyBall ball = enumerate_ball(2, 3);

    bool all_equal = true;
    for (int t = 0; t < opts.c8_pairs; ++t) {
        const int d = rng.uniform_int(1, 3);
        CoefficientFunction big_t(d);
        for (const auto idx :
             distinct_indices(rng, rng.uniform_int(1, 6), static_cast<int>(ball.size()))) {
            DenseMatrix block(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
            for (auto& v : block.data()) v = rng.complex_normal();
            big_t.set(ball.element(idx), block);
        }
        CoefficientFunction v(1);
        for (const auto idx :
             distinct_indices(rng, rng.uniform_int(1, 8), static_cast<int>(ball.size())))
            v.set_scalar(ball.element(idx), rng.complex_normal());

        std::vector<Word> e_words;
        for (const auto idx :
             distinct_indices(rng, rng.uniform_int(1, 10), static_cast<int>(ball.size())))
            e_words.push_back(ball.element(idx));
        const GroupElementSet e_set(std::move(e_words));

        const auto lhs = vn_restrict(pointwise_product(v, big_t), e_set);
        const auto rhs = pointwise_product(v, vn_restrict(big_t, e_set));
        all_equal = all_equal && (lhs == rhs);
    }
    rec.measure("pairs", static_cast<double>(opts.c8_pairs));
    rec.measure("exact_equality", std::string(all_equal ? "true" : "false"));
    rec.require(all_equal);
    return rec.finish();
}

// 9. Power-iteration norms against the dense singular-value oracle on every
// corpus instance of dimension <= 200.
CriterionResult criterion_oracle(const AcceptanceOptions& opts) {
    Recorder rec(9, "oracle-equivalence");
    GaussianSource rng(derived_seed(opts.seed, 9));

    std::vector<DenseMatrix> corpus;
    const auto add_compression = [&corpus](const CoefficientFunction& a, int r, int n) {
        corpus.push_back(densify(build_compression(a, r, n)));
    };
    add_compression(CoefficientFunction::delta(Word::identity()), 2, 2);
    add_compression(CoefficientFunction::delta(Word::generator(1)), 1, 2);
    add_compression(CoefficientFunction::delta(Word::generator(1)), 2, 2);
    {
        CoefficientFunction a(1);
        a.set_scalar(Word::generator(1), 1.0);
        a.set_scalar(Word::generator(2), 1.0);
        add_compression(a, 2, 2);
        add_compression(a, 3, 2);
    }
    {
        const CayleyBall ball = enumerate_ball(2, 2);
        CoefficientFunction a(1);
        for (const auto idx : distinct_indices(rng, 4, static_cast<int>(ball.size())))
            a.set_scalar(ball.element(idx), rng.complex_normal());
        add_compression(a, 2, 2);

        CoefficientFunction b(3);
        for (const Word& w :
             {Word::identity(), Word::generator(1), Word::generator(2, -1)}) {
            DenseMatrix block(3, 3);
            for (auto& v : block.data()) v = rng.complex_normal();
            b.set(w, block);
        }
        add_compression(b, 2, 2);
    }
    for (std::size_t n : {2u, 8u, 32u, 64u, 128u, 200u}) corpus.push_back(hilbert_kernel(n));
    for (std::size_t n : {8u, 64u, 200u})
        corpus.push_back(triangular_truncation(hilbert_kernel(n)));
    corpus.push_back(DenseMatrix::identity(50));
    {
        DenseMatrix g(37, 53);
        for (auto& v : g.data()) v = rng.complex_normal();
        corpus.push_back(g);
        DenseMatrix h(120, 120);
        for (auto& v : h.data()) v = rng.complex_normal();
        corpus.push_back(h);
    }

    double max_rel = 0.0;
    bool converged = true;
    for (const auto& m : corpus) {
        const NormEstimate est = spectral_norm(m, opts.c9_engine_tol, 50'000);
        const double oracle = dense_sigma_max(m);
        converged = converged && est.converged;
        max_rel = std::max(max_rel,
                           std::abs(est.value - oracle) / std::max(oracle, 1e-300));
    }
    rec.measure("instances", static_cast<double>(corpus.size()));
    rec.measure("max_relative_deviation", max_rel);
    rec.require(converged);
    rec.require(max_rel <= opts.c9_rel_tol);
    return rec.finish();
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            std::ostream* progress, int only_criterion) {
    using Criterion = CriterionResult (*)(const AcceptanceOptions&);
    const Criterion criteria[] = {
        criterion_haagerup,       criterion_leinert,    criterion_sandwich,
        criterion_monotonicity,   criterion_triangular_growth,
        criterion_interpolation,  criterion_projection, criterion_module_property,
        criterion_oracle,
    };
    std::vector<CriterionResult> results;
    for (int id = 1; id <= static_cast<int>(std::size(criteria)); ++id) {
        if (only_criterion != 0 && only_criterion != id) continue;
        CriterionResult r = criteria[id - 1](options);
        if (progress) *progress << criterion_line(r) << std::endl;
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

std::string criterion_line(const CriterionResult& result) {
    std::ostringstream out;
    out << '[' << result.id << "/9] " << result.name << " ... "
        << (result.passed ? "PASS" : "FAIL") << " (";
    for (std::size_t i = 0; i < result.measurements.size(); ++i) {
        if (i) out << ", ";
        out << result.measurements[i].first << '=' << result.measurements[i].second;
    }
    out << ") [" << format_double(result.runtime_seconds) << "s]";
    return out.str();
}

} // namespace freeharm
