#include "qkostant/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qkostant/expr_io.hpp"
#include "qkostant/filtration.hpp"
#include "qkostant/hilbert.hpp"
#include "qkostant/hopf.hpp"
#include "qkostant/kostant.hpp"
#include "qkostant/mutation.hpp"
#include "qkostant/qminors.hpp"

namespace qk::cli {

namespace {

using nlohmann::ordered_json;

ordered_json json_dim(const mpz_class& v) {
    if (v.fits_ulong_p()) return v.get_ui();
    return v.get_str();
}

std::string serialize(const ordered_json& j) { return j.dump(2) + "\n"; }

struct CommonOptions {
    uint64_t seed = 42;
    int threads = 1;
    bool timings = false;
    std::string report_path;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option("--seed", common.seed, "Seed for randomized checks");
    cmd->add_option("--threads", common.threads,
                    "Worker cap (QKOSTANT_THREADS is the fallback)");
    cmd->add_flag("--timings", common.timings, "Include elapsed_ms in the JSON report");
    cmd->add_option("--report", common.report_path, "Write a JSON report to this path");
}

int env_threads() {
    const char* env = std::getenv("QKOSTANT_THREADS");
    if (env == nullptr) return 1;
    int value = std::atoi(env);
    return value >= 1 ? value : 1;
}

// ---------------------------------------------------------------- suite

struct PropertyResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    std::vector<std::string> reproducers;
};

Word random_word(std::mt19937_64& rng, int n, int max_len, int min_len = 0) {
    Word w;
    const int len =
        min_len + static_cast<int>(rng() % static_cast<uint64_t>(max_len - min_len + 1));
    for (int k = 0; k < len; ++k) {
        int r = static_cast<int>(rng() % static_cast<uint64_t>(n * n));
        w.letters.push_back(GenIndex(r / n + 1, r % n + 1, n));
    }
    return w;
}

NCPolynomial random_poly(std::mt19937_64& rng, int n, int max_terms, int max_len) {
    NCPolynomial p;
    const int terms = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_terms));
    for (int k = 0; k < terms; ++k) {
        long c = static_cast<long>(rng() % 9) - 4;
        if (c == 0) c = 2;
        int e = static_cast<int>(rng() % 5) - 2;
        p.add_term(random_word(rng, n, max_len), LaurentScalar::q_power(e, Rational(c)));
    }
    return p;
}

LaurentScalar random_scalar(std::mt19937_64& rng) {
    LaurentScalar s;
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < terms; ++k) {
        long c = static_cast<long>(rng() % 11) - 5;
        int e = static_cast<int>(rng() % 9) - 4;
        s += LaurentScalar::q_power(e, Rational(c));
    }
    return s;
}

std::vector<PropertyResult> run_suite(int n, int trials, uint64_t seed, bool corrupt_f) {
    std::vector<PropertyResult> results;
    std::mt19937_64 rng(seed);

    std::vector<MutationSystem> systems;
    for (int t = 1; t <= n; ++t) {
        MutationSystem S = build_system(n, t);
        if (corrupt_f) {
            // replace the first nonzero tail by a content-breaking word; the
            // result is genuinely non-confluent (a scalar tweak would only be
            // a change of basis and would pass every check)
            for (const auto& [lo, hi] : S.ordered_pairs()) {
                const NCPolynomial& f = S.f_entry(lo, hi);
                if (f.is_zero()) continue;
                Word bad;
                bad.letters = {lo, GenIndex(lo.row, hi.col, n)};
                S.set_f_entry(lo, hi,
                              NCPolynomial(bad, LaurentScalar::q_power(-1) -
                                                    LaurentScalar::q_power(1)));
                break;
            }
        }
        systems.push_back(std::move(S));
    }

    {
        PropertyResult r{"laurent-ring-axioms", trials, 0, {}};
        for (int k = 0; k < trials; ++k) {
            LaurentScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
            bool ok = (a + b) + c == a + (b + c) && a * b == b * a &&
                      a * (b + c) == a * b + a * c;
            Rational q0(1 + static_cast<long>(rng() % 7), 2);
            q0.canonicalize();
            ok = ok && (a * b).evaluate_at(q0) == a.evaluate_at(q0) * b.evaluate_at(q0);
            if (!ok) {
                ++r.failures;
                if (r.reproducers.size() < 3)
                    r.reproducers.push_back(a.to_string() + " ; " + b.to_string() + " ; " +
                                            c.to_string());
            }
        }
        results.push_back(std::move(r));
    }

    {
        PropertyResult r{"multiply-associativity", trials, 0, {}};
        std::vector<Rewriter> rewriters;
        for (const auto& S : systems) rewriters.emplace_back(S);
        for (int k = 0; k < trials; ++k) {
            size_t t = rng() % systems.size();
            Rewriter& rw = rewriters[t];
            NCPolynomial a = rw.normal_form(random_poly(rng, n, 2, 3));
            NCPolynomial b = rw.normal_form(random_poly(rng, n, 2, 3));
            NCPolynomial c = rw.normal_form(random_poly(rng, n, 2, 3));
            if (rw.product(rw.product(a, b), c) != rw.product(a, rw.product(b, c))) {
                ++r.failures;
                if (r.reproducers.size() < 3)
                    r.reproducers.push_back("stage " + std::to_string(t + 1) + ": " +
                                            format_expr(a) + " ; " + format_expr(b) + " ; " +
                                            format_expr(c));
            }
        }
        results.push_back(std::move(r));
    }

    {
        PropertyResult r{"strategy-independence", trials, 0, {}};
        for (int k = 0; k < trials; ++k) {
            size_t t = rng() % systems.size();
            const MutationSystem& S = systems[t];
            NCPolynomial p = random_poly(rng, n, 2, 4);
            NCPolynomial left =
                normalize_with_strategy(p, S, MutationStrategy::leftmost_of_greatest);
            NCPolynomial right =
                normalize_with_strategy(p, S, MutationStrategy::random_descent, &rng);
            NCPolynomial fast = normalize(p, S);
            if (left != right || left != fast) {
                ++r.failures;
                if (r.reproducers.size() < 3)
                    r.reproducers.push_back("stage " + std::to_string(t + 1) + ": " +
                                            format_expr(p));
            }
        }
        results.push_back(std::move(r));
    }

    {
        PropertyResult r{"symbol-multiplicativity", trials, 0, {}};
        for (int k = 0; k < trials; ++k) {
            if (n < 2) break;
            size_t t = rng() % (systems.size() - 1);
            const MutationSystem& S = systems[t];
            const MutationSystem& S_next = systems[t + 1];
            const Weighting w = weighting_wt(n, static_cast<int>(t) + 1);
            Rewriter rw(S);
            NCPolynomial a = rw.normal_form(random_poly(rng, n, 2, 3));
            NCPolynomial b = rw.normal_form(random_poly(rng, n, 2, 3));
            if (a.is_zero() || b.is_zero()) continue;
            NCPolynomial ab = rw.product(a, b);
            if (ab.is_zero()) continue;
            if (filtration_degree(ab, w) !=
                filtration_degree(a, w) + filtration_degree(b, w))
                continue;  // hypothesis of the product rule
            NCPolynomial lhs = symbol(ab, w);
            NCPolynomial rhs = normalize(symbol(a, w) * symbol(b, w), S_next);
            if (lhs != rhs) {
                ++r.failures;
                if (r.reproducers.size() < 3)
                    r.reproducers.push_back("stage " + std::to_string(t + 1) + ": " +
                                            format_expr(a) + " ; " + format_expr(b));
            }
        }
        results.push_back(std::move(r));
    }

    {
        PropertyResult r{"parse-format-roundtrip", trials, 0, {}};
        for (int k = 0; k < trials; ++k) {
            NCPolynomial p = random_poly(rng, n, 3, 3);
            std::string text = format_expr(p);
            if (parse_expr(text, n) != p) {
                ++r.failures;
                if (r.reproducers.size() < 3) r.reproducers.push_back(text);
            }
        }
        results.push_back(std::move(r));
    }

    return results;
}

// ---------------------------------------------------------------- handlers

struct Context {
    CommonOptions common;
    std::ostringstream out;
    ordered_json report;
    bool has_report = false;
    int exit_code = 0;
};

void handle_normalize(Context& ctx, int n, int stage, const std::string& expr) {
    MutationSystem S = build_system(n, stage);
    NCPolynomial input = parse_expr(expr, n);
    NCPolynomial nf = normalize(input, S);
    std::string text = format_expr(nf);
    ctx.out << text << "\n";
    ctx.report = ordered_json{{"command", "normalize"},
                              {"n", n},
                              {"stage", stage},
                              {"input", expr},
                              {"normal_form", text}};
    ctx.has_report = true;
}

void handle_relations(Context& ctx, int n, int stage) {
    MutationSystem S = build_system(n, stage);
    ordered_json rels = ordered_json::array();
    for (const auto& [lo, hi] : S.ordered_pairs()) {
        Word lhs_word;
        lhs_word.letters = {hi, lo};
        NCPolynomial rhs;
        Word sorted;
        sorted.letters = {lo, hi};
        rhs.add_term(sorted, S.q_entry(lo, hi));
        rhs += S.f_entry(lo, hi);
        std::string lhs = hi.to_string() + "*" + lo.to_string();
        std::string rhs_text = format_expr(rhs);
        ctx.out << lhs << " = " << rhs_text << "\n";
        rels.push_back(ordered_json{{"lhs", lhs}, {"rhs", rhs_text}});
    }
    ctx.report = ordered_json{
        {"command", "relations"}, {"n", n}, {"stage", stage}, {"relations", std::move(rels)}};
    ctx.has_report = true;
}

std::vector<int> parse_subset(const std::string& text, int n) {
    if (text.empty()) {
        std::vector<int> all;
        for (int k = 1; k <= n; ++k) all.push_back(k);
        return all;
    }
    std::vector<int> subset;
    std::istringstream is(text);
    std::string token;
    while (std::getline(is, token, ',')) subset.push_back(std::stoi(token));
    return subset;
}

void handle_qdet(Context& ctx, int n, const std::string& subset_text) {
    std::vector<int> subset = parse_subset(subset_text, n);
    NCPolynomial minor = qdet_principal(MinorSpec(n, subset));
    std::string text = format_expr(minor);
    ctx.out << text << "\n";
    ordered_json subset_json = ordered_json::array();
    for (int v : subset) subset_json.push_back(v);
    ctx.report = ordered_json{
        {"command", "qdet"}, {"n", n}, {"subset", std::move(subset_json)}, {"expr", text}};
    ctx.has_report = true;
}

void handle_delta(Context& ctx, int n, int d, bool prime, int stage) {
    NCPolynomial value;
    if (prime)
        value = delta_d_prime(n, d);
    else if (stage > 0)
        value = delta_d_t(n, d, stage);
    else
        value = delta_d(n, d);
    std::string text = format_expr(value);
    ctx.out << text << "\n";
    ctx.report = ordered_json{{"command", "delta"},
                              {"n", n},
                              {"d", d},
                              {"prime", prime},
                              {"stage", stage > 0 ? ordered_json(stage) : ordered_json(nullptr)},
                              {"expr", text}};
    ctx.has_report = true;
}

void handle_invariants(Context& ctx, int n, const std::string& check,
                       const std::string& element) {
    const CoactionVariant variant =
        check == "alpha" ? CoactionVariant::alpha : CoactionVariant::beta;
    QuantumGL H(n);
    ordered_json elements = ordered_json::array();
    bool all_ok = true;

    if (!element.empty()) {
        NCPolynomial p = normalize(parse_expr(element, n), H.system());
        bool inv = H.is_invariant(p, variant);
        all_ok = inv;
        ctx.out << element << (inv ? " is " : " is NOT ") << check << "-invariant\n";
        elements.push_back(ordered_json{{"name", element}, {"invariant", inv}});
    } else {
        for (int d = 1; d <= n; ++d) {
            NCPolynomial p = variant == CoactionVariant::alpha ? delta_d(n, d)
                                                               : delta_d_prime(n, d);
            std::string name =
                (variant == CoactionVariant::alpha ? "Delta_" : "Delta'_") + std::to_string(d);
            bool inv = H.is_invariant(p, variant);
            all_ok = all_ok && inv;
            ctx.out << std::left << std::setw(10) << name << (inv ? "invariant" : "FAIL")
                    << "\n";
            elements.push_back(ordered_json{{"name", name}, {"invariant", inv}});
        }
    }

    // antipode axioms: sum_k u_ik S(u_kj) = delta_ij = sum_k S(u_ik) u_kj
    bool axioms = true;
    for (int i = 1; i <= n && axioms; ++i)
        for (int j = 1; j <= n && axioms; ++j) {
            LocalizedElement left{NCPolynomial(), 0}, right{NCPolynomial(), 0};
            for (int k = 1; k <= n; ++k) {
                Word u_ik, u_kj;
                u_ik.letters = {GenIndex(i, k, n)};
                u_kj.letters = {GenIndex(k, j, n)};
                left = H.loc_add(left, H.loc_mul({NCPolynomial(u_ik), 0},
                                                 H.antipode_generator(k, j)));
                right = H.loc_add(right, H.loc_mul(H.antipode_generator(i, k),
                                                   {NCPolynomial(u_kj), 0}));
            }
            LocalizedElement expected{
                i == j ? NCPolynomial::unit() : NCPolynomial(), 0};
            axioms = H.loc_equal(left, expected) && H.loc_equal(right, expected);
        }
    all_ok = all_ok && axioms;
    ctx.out << "antipode axioms: " << (axioms ? "pass" : "FAIL") << "\n";
    ctx.out << "verdict: " << (all_ok ? "pass" : "fail") << "\n";

    ctx.report = ordered_json{{"command", "invariants"},
                              {"n", n},
                              {"check", check},
                              {"antipode_axioms", axioms},
                              {"elements", std::move(elements)},
                              {"verdict", all_ok ? "pass" : "fail"}};
    ctx.has_report = true;
    ctx.exit_code = all_ok ? 0 : 1;
}

void handle_pbw_check(Context& ctx, int n, int stage, int max_overlap_degree) {
    ordered_json stages = ordered_json::array();
    bool all_ok = true;
    for (int t = 1; t <= n; ++t) {
        if (stage > 0 && t != stage) continue;
        PbwReport report = pbw_confluence_check(build_system(n, t), max_overlap_degree);
        all_ok = all_ok && report.pass;
        ctx.out << "stage " << t << ": " << report.overlaps_checked << " overlaps, "
                << (report.pass ? "pass" : "FAIL") << "\n";
        ordered_json failures = ordered_json::array();
        for (const auto& f : report.failures) {
            NCPolynomial as_poly(f.overlap);
            failures.push_back(ordered_json{{"overlap", format_expr(as_poly)},
                                            {"left", format_expr(f.reduce_left_first)},
                                            {"right", format_expr(f.reduce_right_first)}});
        }
        stages.push_back(ordered_json{{"t", t},
                                      {"overlaps", report.overlaps_checked},
                                      {"pass", report.pass},
                                      {"failures", std::move(failures)}});
    }
    ctx.out << "verdict: " << (all_ok ? "pass" : "fail") << "\n";
    ctx.report = ordered_json{{"command", "pbw-check"},
                              {"n", n},
                              {"max_overlap_degree", max_overlap_degree},
                              {"stages", std::move(stages)},
                              {"verdict", all_ok ? "pass" : "fail"}};
    ctx.has_report = true;
    ctx.exit_code = all_ok ? 0 : 1;
}

void handle_tower_check(Context& ctx, int n, int max_degree) {
    TowerReport report = tower_check(n, max_degree);
    ordered_json stages = ordered_json::array();
    for (const auto& s : report.stages) {
        ctx.out << "t=" << s.t << ": compatible=" << (s.compatible ? "yes" : "NO")
                << " symbol=S_" << (s.t + 1) << "=" << (s.symbol_matches_next ? "yes" : "NO")
                << " graded-dims=" << (s.graded_dims_ok ? "yes" : "NO") << "\n";
        stages.push_back(ordered_json{{"t", s.t},
                                      {"compatible", s.compatible},
                                      {"symbol_matches_next", s.symbol_matches_next},
                                      {"graded_dims_ok", s.graded_dims_ok}});
    }
    ctx.out << "verdict: " << (report.pass ? "pass" : "fail") << "\n";
    ctx.report = ordered_json{{"command", "tower-check"},
                              {"n", n},
                              {"max_degree", max_degree},
                              {"stages", std::move(stages)},
                              {"verdict", report.pass ? "pass" : "fail"}};
    ctx.has_report = true;
    ctx.exit_code = report.pass ? 0 : 1;
}

void handle_hilbert(Context& ctx, int n, int max_degree) {
    HilbertProfile profile = hilbert_dims(n, max_degree);
    auto print_row = [&](const char* name, const std::vector<mpz_class>& dims) {
        ctx.out << std::left << std::setw(8) << name;
        for (const auto& v : dims) ctx.out << std::setw(10) << v.get_str();
        ctx.out << "\n";
    };
    print_row("dim A", profile.dims_A);
    print_row("dim I", profile.dims_I);
    print_row("dim H", profile.dims_H);
    auto to_json = [](const std::vector<mpz_class>& dims) {
        ordered_json arr = ordered_json::array();
        for (const auto& v : dims) arr.push_back(json_dim(v));
        return arr;
    };
    ctx.report = ordered_json{{"command", "hilbert"},
                              {"n", n},
                              {"max_degree", max_degree},
                              {"dims_A", to_json(profile.dims_A)},
                              {"dims_I", to_json(profile.dims_I)},
                              {"dims_H", to_json(profile.dims_H)}};
    ctx.has_report = true;
}

void handle_certify(Context& ctx, int n, int max_degree, std::string mode, int samples,
                    bool right_module, int bound_shift) {
    if (mode.empty()) mode = n <= 2 ? "exact" : "sampled";
    CertifyOptions options;
    options.mode = mode == "exact" ? CertifyMode::exact : CertifyMode::sampled;
    options.samples = samples;
    options.right_module = right_module;
    options.seed = ctx.common.seed;
    options.threads = ctx.common.threads;
    options.basis_bound_shift = bound_shift;

    const auto start = std::chrono::steady_clock::now();
    FreenessCertificate cert = certify_freeness(n, max_degree, options);
    const auto stop = std::chrono::steady_clock::now();

    ctx.out << std::left << std::setw(6) << "d" << std::setw(10) << "dim_A" << std::setw(12)
            << "products" << std::setw(8) << "rank" << "pass\n";
    ordered_json degrees = ordered_json::array();
    for (const auto& rec : cert.degrees) {
        ctx.out << std::left << std::setw(6) << rec.d << std::setw(10) << rec.dim_A.get_str()
                << std::setw(12) << rec.candidate_count << std::setw(8) << rec.rank
                << (rec.pass ? "yes" : "NO") << "\n";
        degrees.push_back(ordered_json{{"d", rec.d},
                                       {"dim_A", json_dim(rec.dim_A)},
                                       {"candidate_count", rec.candidate_count},
                                       {"rank", rec.rank},
                                       {"pass", rec.pass}});
    }
    ctx.out << "verdict: " << (cert.pass ? "pass" : "fail") << "\n";

    ctx.report = ordered_json{{"command", "kostant-certify"},
                              {"n", cert.n},
                              {"max_degree", cert.max_degree},
                              {"mode", mode},
                              {"right_module", cert.right_module},
                              {"counting_identity", cert.counting_identity},
                              {"rank_stable", cert.rank_stable},
                              {"seed", ctx.common.seed},
                              {"degrees", std::move(degrees)},
                              {"verdict", cert.pass ? "pass" : "fail"}};
    if (options.mode == CertifyMode::sampled) {
        ordered_json points = ordered_json::array();
        for (const auto& p : cert.sampled_points) points.push_back(p);
        ctx.report["sampled_points"] = std::move(points);
    }
    if (ctx.common.timings)
        ctx.report["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    ctx.has_report = true;
    ctx.exit_code = cert.pass ? 0 : 1;
}

void handle_suite(Context& ctx, int n, int trials, bool corrupt_f) {
    std::vector<PropertyResult> results = run_suite(n, trials, ctx.common.seed, corrupt_f);
    bool all_ok = true;
    ordered_json properties = ordered_json::array();
    for (const auto& r : results) {
        all_ok = all_ok && r.failures == 0;
        ctx.out << std::left << std::setw(28) << r.name << r.trials << " trials, "
                << r.failures << " failures\n";
        for (const auto& repro : r.reproducers) ctx.out << "    reproducer: " << repro << "\n";
        ordered_json reproducers = ordered_json::array();
        for (const auto& repro : r.reproducers) reproducers.push_back(repro);
        properties.push_back(ordered_json{{"name", r.name},
                                          {"trials", r.trials},
                                          {"failures", r.failures},
                                          {"reproducers", std::move(reproducers)}});
    }
    ctx.out << "verdict: " << (all_ok ? "pass" : "fail") << "\n";
    ctx.report = ordered_json{{"command", "suite"},
                              {"n", n},
                              {"seed", ctx.common.seed},
                              {"trials", trials},
                              {"properties", std::move(properties)},
                              {"verdict", all_ok ? "pass" : "fail"}};
    ctx.has_report = true;
    ctx.exit_code = all_ok ? 0 : 1;
}

}  // namespace

CliOutcome dispatch(const std::vector<std::string>& args) {
    CLI::App app{"qkostant: exact symbolic engine for quantum matrix invariants"};
    app.require_subcommand(1);

    Context ctx;
    ctx.common.threads = env_threads();

    // normalize
    int norm_n = 2, norm_stage = 1;
    std::string norm_expr;
    CLI::App* cmd_normalize = app.add_subcommand("normalize", "Normal form of an expression");
    cmd_normalize->add_option("--n", norm_n, "Algebra size")->required();
    cmd_normalize->add_option("--stage", norm_stage, "Mutation system stage (default 1)");
    cmd_normalize->add_option("--expr", norm_expr, "Expression to normalize")->required();
    add_common(cmd_normalize, ctx.common);

    // relations
    int rel_n = 2, rel_stage = 1;
    CLI::App* cmd_relations = app.add_subcommand("relations", "Dump the q/f relation tables");
    cmd_relations->add_option("--n", rel_n, "Algebra size")->required();
    cmd_relations->add_option("--stage", rel_stage, "Mutation system stage (default 1)");
    add_common(cmd_relations, ctx.common);

    // qdet
    int qdet_n = 2;
    std::string qdet_subset;
    CLI::App* cmd_qdet = app.add_subcommand("qdet", "Principal quantum minor");
    cmd_qdet->add_option("--n", qdet_n, "Algebra size")->required();
    cmd_qdet->add_option("--subset", qdet_subset, "Comma-separated subset, e.g. 1,3");
    add_common(cmd_qdet, ctx.common);

    // delta
    int delta_n = 2, delta_deg = 1, delta_stage = 0;
    bool delta_prime = false;
    CLI::App* cmd_delta = app.add_subcommand("delta", "Invariant generator families");
    cmd_delta->add_option("--n", delta_n, "Algebra size")->required();
    cmd_delta->add_option("--d", delta_deg, "Minor size d")->required();
    cmd_delta->add_flag("--prime", delta_prime, "The primed family Delta'_d");
    cmd_delta->add_option("--stage", delta_stage, "Stage-t family Delta_d^(t)");
    add_common(cmd_delta, ctx.common);

    // invariants
    int inv_n = 2;
    std::string inv_check = "alpha", inv_element;
    CLI::App* cmd_invariants = app.add_subcommand("invariants", "Adjoint coaction invariance");
    cmd_invariants->add_option("--n", inv_n, "Algebra size")->required();
    cmd_invariants->add_option("--check", inv_check, "alpha or beta")
        ->check(CLI::IsMember({"alpha", "beta"}));
    cmd_invariants->add_option("--element", inv_element, "Expression to test");
    add_common(cmd_invariants, ctx.common);

    // pbw-check
    int pbw_n = 2, pbw_stage = 0, pbw_maxdeg = 3;
    CLI::App* cmd_pbw = app.add_subcommand("pbw-check", "Overlap confluence check");
    cmd_pbw->add_option("--n", pbw_n, "Algebra size")->required();
    cmd_pbw->add_option("--stage", pbw_stage, "Single stage (default: all)");
    cmd_pbw->add_option("--max-overlap-degree", pbw_maxdeg, "Overlap word length cap");
    add_common(cmd_pbw, ctx.common);

    // tower-check
    int tower_n = 2, tower_maxdeg = 3;
    CLI::App* cmd_tower = app.add_subcommand("tower-check", "Filtration tower checks");
    cmd_tower->add_option("--n", tower_n, "Algebra size")->required();
    cmd_tower->add_option("--max-degree", tower_maxdeg, "Graded-dimension check depth");
    add_common(cmd_tower, ctx.common);

    // hilbert
    int hil_n = 2, hil_maxdeg = 8;
    CLI::App* cmd_hilbert = app.add_subcommand("hilbert", "Graded dimension table");
    cmd_hilbert->add_option("--n", hil_n, "Algebra size")->required();
    cmd_hilbert->add_option("--max-degree", hil_maxdeg, "Table depth")->required();
    add_common(cmd_hilbert, ctx.common);

    // kostant-certify
    int cert_n = 2, cert_maxdeg = 6, cert_samples = 3, cert_shift = 0;
    std::string cert_mode;
    bool cert_right = false;
    CLI::App* cmd_certify = app.add_subcommand("kostant-certify", "Freeness certificate");
    cmd_certify->add_option("--n", cert_n, "Algebra size")->required();
    cmd_certify->add_option("--max-degree", cert_maxdeg, "Certify degrees up to this bound")
        ->required();
    cmd_certify->add_option("--mode", cert_mode, "exact or sampled (default by n)")
        ->check(CLI::IsMember({"exact", "sampled"}));
    cmd_certify->add_option("--samples", cert_samples, "Sample points in sampled mode");
    cmd_certify->add_flag("--right", cert_right, "Certify the right-module version");
    cmd_certify->add_option("--bound-shift", cert_shift)->group("");  // negative-control hook
    add_common(cmd_certify, ctx.common);

    // suite
    int suite_n = 2, suite_trials = 200;
    bool suite_corrupt = false;
    CLI::App* cmd_suite = app.add_subcommand("suite", "Seeded random property suite");
    cmd_suite->add_option("--n", suite_n, "Algebra size");
    cmd_suite->add_option("--trials", suite_trials, "Trials per property");
    cmd_suite->add_flag("--corrupt-f", suite_corrupt)->group("");  // negative-control hook
    add_common(cmd_suite, ctx.common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        int code = app.exit(e, os, os);
        return {code == 0 ? 0 : 2, os.str(), "", false, ""};
    }

    try {
        if (cmd_normalize->parsed()) handle_normalize(ctx, norm_n, norm_stage, norm_expr);
        if (cmd_relations->parsed()) handle_relations(ctx, rel_n, rel_stage);
        if (cmd_qdet->parsed()) handle_qdet(ctx, qdet_n, qdet_subset);
        if (cmd_delta->parsed()) handle_delta(ctx, delta_n, delta_deg, delta_prime, delta_stage);
        if (cmd_invariants->parsed()) handle_invariants(ctx, inv_n, inv_check, inv_element);
        if (cmd_pbw->parsed()) handle_pbw_check(ctx, pbw_n, pbw_stage, pbw_maxdeg);
        if (cmd_tower->parsed()) handle_tower_check(ctx, tower_n, tower_maxdeg);
        if (cmd_hilbert->parsed()) handle_hilbert(ctx, hil_n, hil_maxdeg);
        if (cmd_certify->parsed())
            handle_certify(ctx, cert_n, cert_maxdeg, cert_mode, cert_samples, cert_right,
                           cert_shift);
        if (cmd_suite->parsed()) handle_suite(ctx, suite_n, suite_trials, suite_corrupt);
    } catch (const ParseError& e) {
        return {2, std::string("error: ") + e.what() + "\n", "", false, ""};
    } catch (const std::exception& e) {
        return {2, std::string("error: ") + e.what() + "\n", "", false, ""};
    }

    CliOutcome outcome;
    outcome.exit_code = ctx.exit_code;
    outcome.output = ctx.out.str();
    if (ctx.has_report) {
        outcome.report_json = serialize(ctx.report);
        outcome.has_report = true;
        outcome.report_path = ctx.common.report_path;
    }
    return outcome;
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    CliOutcome outcome = dispatch(args);
    std::fputs(outcome.output.c_str(), stdout);
    if (outcome.has_report && !outcome.report_path.empty()) {
        std::ofstream file(outcome.report_path);
        if (!file) {
            std::fprintf(stderr, "error: cannot write report to %s\n",
                         outcome.report_path.c_str());
            return 2;
        }
        file << outcome.report_json;
    }
    return outcome.exit_code;
}

}  // namespace qk::cli
