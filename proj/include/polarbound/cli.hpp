#ifndef POLARBOUND_CLI_HPP
#define POLARBOUND_CLI_HPP

// Command-line surface: verify, sweep, sharpness, probe, gen.
//
// Exit codes: 0 all checks passed, 1 at least one failed check,
// 2 usage error, malformed input, or violated precondition.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"
#include "report.hpp"
#include "verify.hpp"
#include "zero_structure.hpp"

namespace polarbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline PeelOrder parse_order(const std::string& s)
{
    if (s == "given") return PeelOrder::given;
    if (s == "exhaustive") return PeelOrder::exhaustive;
    throw std::invalid_argument("order must be \"given\" or \"exhaustive\"");
}

inline std::vector<unsigned> parse_mult(const std::string& s)
{
    if (s == "none" || s.empty()) return {};
    std::vector<unsigned> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const unsigned long v = std::stoul(item, &used);
        if (used != item.size() || v == 0)
            throw std::invalid_argument("multiplicity list must hold positive integers: " + s);
        out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

struct VerifyArgs {
    std::string poly, poly_file, regime, bound, order = "given", pattern;
    double k = 1.0, alpha = 1.0, alpha_im = 0.0, tol = 1e-8, rel_tol = 1e-8, margin = kDefaultMargin;
};

inline int run_verify(const VerifyArgs& a, std::ostream& out)
{
    if (a.poly.empty() == a.poly_file.empty())
        throw std::invalid_argument("give exactly one of --poly or --poly-file");
    const Polynomial p = polynomial_from_json(a.poly.empty() ? read_file(a.poly_file) : a.poly);
    const BoundId id = bound_from_string(a.bound);
    const Regime regime = regime_from_string(a.regime);
    VerifyOptions opt;
    opt.tol_abs = a.tol;
    opt.tol_rel = a.rel_tol;
    opt.margin = a.margin;
    opt.order = parse_order(a.order);
    opt.instance_id = "cli";
    const cplx alpha(a.alpha, a.alpha_im);

    VerificationRecord rec;
    if (!a.pattern.empty()) {
        const ZeroPattern pat = pattern_from_json(a.pattern);
        if (pat.regime != regime || pat.k != a.k)
            throw std::invalid_argument("--pattern disagrees with --regime/--k");
        rec = verify_instance(p, pat, alpha, id, opt);
    } else {
        rec = verify_classified(p, classify(p, a.k, regime, a.margin), alpha, id, opt);
    }
    out << to_json(rec) << '\n';
    return rec.status == Status::fail ? kExitFail : kExitOk;
}

struct SweepArgs {
    std::string regime = "upper", format = "json", out_path, order = "given";
    std::vector<unsigned> ns{6}, mus{1};
    std::vector<std::string> mults{"1"};
    std::vector<double> ks{2.0}, alphas{2.0};
    std::vector<std::string> bounds{"thm3_2_3"};
    unsigned instances = 10;
    std::uint64_t seed = 1;
    double tol = 1e-8;
};

inline int run_sweep_cmd(const SweepArgs& a, std::ostream& out)
{
    SweepConfig cfg;
    cfg.regime = regime_from_string(a.regime);
    cfg.ns = a.ns;
    cfg.mus = a.mus;
    cfg.ks = a.ks;
    cfg.alphas = a.alphas;
    cfg.instances_per_cell = a.instances;
    cfg.base_seed = a.seed;
    cfg.tol = a.tol;
    cfg.order = parse_order(a.order);
    cfg.multiplicities.clear();
    for (const auto& m : a.mults) cfg.multiplicities.push_back(parse_mult(m));
    cfg.bound_ids.clear();
    for (const auto& b : a.bounds) cfg.bound_ids.push_back(bound_from_string(b));
    OutputFormat fmt;
    if (a.format == "json") fmt = OutputFormat::json;
    else if (a.format == "csv") fmt = OutputFormat::csv;
    else throw std::invalid_argument("format must be json or csv");

    const SweepResult res = run_sweep(cfg);
    if (a.out_path.empty()) {
        write_records(out, res.records, fmt);
    } else {
        std::ofstream f(a.out_path);
        if (!f) throw std::invalid_argument("cannot write " + a.out_path);
        write_records(f, res.records, fmt);
    }
    const Summary s = summarize(res.records, res.skipped);
    out << to_json(s) << '\n';
    return s.fail > 0 ? kExitFail : kExitOk;
}

struct SharpnessArgs {
    std::string family = "all";
    unsigned n_max = 8;
    double threshold = 1e-8;
};

inline int run_sharpness(const SharpnessArgs& a, std::ostream& out)
{
    if (a.family != "all" && a.family != "monomial" && a.family != "gap" && a.family != "binomial")
        throw std::invalid_argument("family must be monomial, gap, binomial or all");
    if (a.n_max < 2) throw std::invalid_argument("--n-max must be >= 2");
    std::vector<SharpnessFamily> cases;
    using Kind = SharpnessFamily::Kind;
    const bool all = a.family == "all";
    if (all || a.family == "monomial")
        for (unsigned n = 2; n <= a.n_max; ++n)
            for (unsigned s = 1; s < n; ++s)
                for (double k : {1.0, 2.0, 3.0})
                    for (double al : {1.0, 2.0, 5.0})
                        cases.push_back({Kind::monomial, n, s, 1, k, al});
    if (all || a.family == "gap")
        for (unsigned mu = 1; mu <= 3; ++mu)
            for (unsigned q = 1; q <= 4; ++q)
                for (double k : {0.25, 0.5, 1.0})
                    cases.push_back({Kind::gap, mu * q, 0, mu, k, 1.0});
    if (all || a.family == "binomial")
        for (unsigned n = 2; n <= a.n_max; ++n)
            for (double k : {1.0, 2.0, 3.0, 0.25, 0.5})
                cases.push_back({Kind::binomial, n, 0, 1, k, 1.0});

    static const char* names[] = {"monomial", "gap", "binomial"};
    std::size_t bad = 0;
    double worst = 0.0;
    for (const auto& c : cases) {
        const SharpnessResult r = sharpness_check(c);
        const bool ok = r.gap <= a.threshold;
        bad += ok ? 0 : 1;
        worst = std::max(worst, r.gap);
        out << "{\"family\":" << json_string(names[static_cast<int>(c.kind)])
            << ",\"n\":" << c.n << ",\"s\":" << c.s << ",\"mu\":" << c.mu
            << ",\"k\":" << format_number(c.k) << ",\"alpha\":" << format_number(c.alpha)
            << ",\"bound_id\":" << json_string(to_string(r.bound_id))
            << ",\"lhs\":" << format_number(r.lhs) << ",\"rhs\":" << format_number(r.rhs)
            << ",\"gap\":" << format_number(r.gap) << ",\"status\":\"" << (ok ? "pass" : "fail")
            << "\"}\n";
    }
    out << "{\"cases\":" << cases.size() << ",\"fail\":" << bad
        << ",\"max_gap\":" << format_number(worst) << "}\n";
    return bad ? kExitFail : kExitOk;
}

struct ProbeArgs {
    std::string kind = "all";
    unsigned count = 100;
    unsigned samples = 256;
    unsigned degree_max = 12;
    std::uint64_t seed = 1;
};

inline int run_probe(const ProbeArgs& a, std::ostream& out)
{
    if (a.kind != "all" && a.kind != "identities" && a.kind != "limit")
        throw std::invalid_argument("kind must be identities, limit or all");
    if (a.degree_max < 2) throw std::invalid_argument("--degree-max must be >= 2");
    bool failed = false;
    if (a.kind != "limit") {
        double worst_sum = -1e300, worst_res = 0.0;
        std::size_t bad = 0;
        for (unsigned i = 0; i < a.count; ++i) {
            const Polynomial p = random_polynomial(derive_seed(a.seed, i), a.degree_max);
            const IdentityProbe r = proof_identity_probe(p, a.samples);
            const double scale = static_cast<double>(p.degree()) * r.max_unit;
            worst_sum = std::max(worst_sum, r.reciprocal_sum_excess / scale);
            worst_res = std::max(worst_res, r.reciprocal_residual / scale);
            if (r.reciprocal_sum_excess > 1e-9 * scale || r.reciprocal_residual > 1e-10 * scale) ++bad;
        }
        failed = failed || bad > 0;
        out << "{\"probe\":\"identities\",\"count\":" << a.count << ",\"fail\":" << bad
            << ",\"max_relative_sum_excess\":" << format_number(worst_sum)
            << ",\"max_relative_residual\":" << format_number(worst_res) << "}\n";
    }
    if (a.kind != "identities") {
        const std::vector<double> grid{1e2, 1e4, 1e6};
        for (Regime reg : {Regime::upper, Regime::lower}) {
            std::size_t bad = 0;
            for (unsigned i = 0; i < a.count; ++i) {
                std::mt19937_64 rng(derive_seed(a.seed + 17, i));
                ZeroPattern pat;
                pat.regime = reg;
                pat.n = 2 + static_cast<unsigned>(rng() % (a.degree_max - 1));
                pat.k = reg == Regime::upper ? 1.0 + 2.0 * (rng() % 1000) / 1000.0
                                             : 0.25 + 0.75 * (rng() % 1000) / 1000.0;
                pat.distinguished.push_back({reg == Regime::upper ? cplx{} : cplx(pat.k + 1.0), 1});
                const Polynomial p = sample_instance(pat, derive_seed(a.seed, i + 100000));
                const auto gaps = limit_recovery(p, pat, grid);
                const double ref = std::abs(limit_reference(p, pat));
                const bool ok = gaps[0] > gaps[1] && gaps[1] > gaps[2] && gaps[2] <= 1e-4 * ref;
                bad += ok ? 0 : 1;
            }
            failed = failed || bad > 0;
            out << "{\"probe\":\"limit\",\"regime\":" << json_string(to_string(reg))
                << ",\"count\":" << a.count << ",\"fail\":" << bad << "}\n";
        }
    }
    return failed ? kExitFail : kExitOk;
}

}  // namespace detail

/// Runs the command line given as argv-style strings (args[0] is the program
/// name). Normal output goes to out, diagnostics to err.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Polar-derivative and derivative bound verification on the unit circle"};
    app.require_subcommand(1);

    detail::VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Verify one bound on one polynomial");
    verify->add_option("--poly", va.poly, "Coefficients as JSON [[re,im],...], ascending powers");
    verify->add_option("--poly-file", va.poly_file, "File holding the coefficient JSON");
    verify->add_option("--k", va.k, "Disk radius k")->required();
    verify->add_option("--regime", va.regime, "upper (k >= 1) or lower (k <= 1)")->required();
    verify->add_option("--alpha", va.alpha, "Real part of alpha");
    verify->add_option("--alpha-im", va.alpha_im, "Imaginary part of alpha");
    verify->add_option("--bound", va.bound, "Bound id, e.g. thm3_2_3")->required();
    verify->add_option("--tol", va.tol, "Absolute tolerance");
    verify->add_option("--rel-tol", va.rel_tol, "Relative tolerance");
    verify->add_option("--margin", va.margin, "Root classification margin");
    verify->add_option("--order", va.order, "Peel order for composed bounds: given|exhaustive");
    verify->add_option("--pattern", va.pattern, "Expected zero pattern JSON");

    detail::SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep", "Verify bounds over a grid of random instances");
    sweep->add_option("--regime", sa.regime, "upper or lower");
    sweep->add_option("--n", sa.ns, "Degrees")->delimiter(',');
    sweep->add_option("--mult", sa.mults,
                      "Distinguished multiplicity list per cell, e.g. 1 or 1,2 or none (repeatable)");
    sweep->add_option("--mu", sa.mus, "Gap indices")->delimiter(',');
    sweep->add_option("--k", sa.ks, "Radii k")->delimiter(',');
    sweep->add_option("--alpha", sa.alphas, "alpha values")->delimiter(',');
    sweep->add_option("--instances", sa.instances, "Instances per cell");
    sweep->add_option("--seed", sa.seed, "Base seed");
    sweep->add_option("--bounds", sa.bounds, "Bound ids")->delimiter(',');
    sweep->add_option("--tol", sa.tol, "Absolute and relative tolerance");
    sweep->add_option("--format", sa.format, "json or csv");
    sweep->add_option("--out", sa.out_path, "Record output file (default stdout)");
    sweep->add_option("--order", sa.order, "Peel order for composed bounds: given|exhaustive");

    detail::SharpnessArgs sha;
    auto* sharp = app.add_subcommand("sharpness", "Check equality on the extremal families");
    sharp->add_option("--family", sha.family, "monomial, gap, binomial or all");
    sharp->add_option("--n-max", sha.n_max, "Largest degree for monomial and binomial families");
    sharp->add_option("--threshold", sha.threshold, "Largest accepted relative gap");

    detail::ProbeArgs pa;
    auto* probe = app.add_subcommand("probe", "Reciprocal identities and large-alpha limit checks");
    probe->add_option("--kind", pa.kind, "identities, limit or all");
    probe->add_option("--count", pa.count, "Number of random instances");
    probe->add_option("--samples", pa.samples, "Circle samples for the identity probe");
    probe->add_option("--degree-max", pa.degree_max, "Largest degree");
    probe->add_option("--seed", pa.seed, "Base seed");

    std::string gen_pattern;
    std::uint64_t gen_seed = 1;
    bool keep_zeros = false;
    auto* gen = app.add_subcommand("gen", "Print a random polynomial matching a zero pattern");
    gen->add_option("--pattern", gen_pattern, "Pattern JSON {n,k,regime,mu,distinguished}")->required();
    gen->add_option("--seed", gen_seed, "Seed");
    gen->add_flag("--keep-zeros", keep_zeros, "Use the pattern's distinguished zeros as given");

    std::vector<const char*> argv;
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*verify) return detail::run_verify(va, out);
        if (*sweep) return detail::run_sweep_cmd(sa, out);
        if (*sharp) return detail::run_sharpness(sha, out);
        if (*probe) return detail::run_probe(pa, out);
        if (*gen) {
            SampleOptions opt;
            opt.resample_distinguished = !keep_zeros;
            out << to_json(sample_instance(pattern_from_json(gen_pattern), gen_seed, opt)) << '\n';
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace polarbound::cli

#endif  // POLARBOUND_CLI_HPP
