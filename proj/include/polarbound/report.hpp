#ifndef POLARBOUND_REPORT_HPP
#define POLARBOUND_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "io.hpp"
#include "verify.hpp"
#include "zero_structure.hpp"

namespace polarbound {

inline std::string to_json(const VerificationRecord& r)
{
    std::string out = "{\"instance_id\":" + json_string(r.instance_id) +
                      ",\"bound_id\":" + json_string(r.bound_id) + ",\"alpha\":[" +
                      format_number(r.alpha.real()) + ',' + format_number(r.alpha.imag()) +
                      "],\"lhs\":" + format_number(r.lhs) +
                      ",\"lhs_error\":" + format_number(r.lhs_error) +
                      ",\"rhs\":" + format_number(r.rhs) + ",\"slack\":" + format_number(r.slack) +
                      ",\"status\":" + json_string(to_string(r.status)) +
                      ",\"tol\":" + format_number(r.tol);
    if (r.chain_slack) out += ",\"chain_slack\":" + format_number(*r.chain_slack);
    return out + '}';
}

inline constexpr const char* kCsvHeader =
    "instance_id,bound_id,alpha_re,alpha_im,lhs,lhs_error,rhs,slack,status";

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline std::string to_csv_row(const VerificationRecord& r)
{
    return csv_field(r.instance_id) + ',' + csv_field(r.bound_id) + ',' +
           format_number(r.alpha.real()) + ',' + format_number(r.alpha.imag()) + ',' +
           format_number(r.lhs) + ',' + format_number(r.lhs_error) + ',' + format_number(r.rhs) +
           ',' + format_number(r.slack) + ',' + to_string(r.status);
}

struct SkippedCell {
    std::string cell;
    std::string reason;
};

struct Summary {
    std::size_t total = 0;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t vacuous_pass = 0;
    double max_negative_slack = 0.0;  // min(0, smallest slack)
    std::vector<SkippedCell> skipped;
};

inline Summary summarize(const std::vector<VerificationRecord>& records,
                         std::vector<SkippedCell> skipped = {})
{
    Summary s;
    s.skipped = std::move(skipped);
    for (const auto& r : records) {
        ++s.total;
        switch (r.status) {
        case Status::pass: ++s.pass; break;
        case Status::fail: ++s.fail; break;
        case Status::vacuous_pass: ++s.vacuous_pass; break;
        }
        s.max_negative_slack = std::min(s.max_negative_slack, r.slack);
    }
    return s;
}

inline std::string to_json(const Summary& s)
{
    std::string out = "{\"total\":" + std::to_string(s.total) + ",\"pass\":" + std::to_string(s.pass) +
                      ",\"fail\":" + std::to_string(s.fail) +
                      ",\"vacuous_pass\":" + std::to_string(s.vacuous_pass) +
                      ",\"max_negative_slack\":" + format_number(s.max_negative_slack) +
                      ",\"skipped\":[";
    for (std::size_t i = 0; i < s.skipped.size(); ++i) {
        if (i) out += ',';
        out += "{\"cell\":" + json_string(s.skipped[i].cell) +
               ",\"reason\":" + json_string(s.skipped[i].reason) + '}';
    }
    return out + "]}";
}

/// Records sorted by (instance_id, bound_id) so output does not depend on
/// evaluation order.
inline void sort_records(std::vector<VerificationRecord>& records)
{
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return std::tie(a.instance_id, a.bound_id) < std::tie(b.instance_id, b.bound_id);
    });
}

enum class OutputFormat { json, csv };

inline void write_records(std::ostream& os, const std::vector<VerificationRecord>& records,
                          OutputFormat fmt)
{
    if (fmt == OutputFormat::csv) {
        os << kCsvHeader << '\n';
        for (const auto& r : records) os << to_csv_row(r) << '\n';
    } else {
        for (const auto& r : records) os << to_json(r) << '\n';
    }
}

struct SweepConfig {
    Regime regime = Regime::upper;
    std::vector<unsigned> ns{6};
    /// Each entry is one list of distinguished multiplicities t_0, t_1, ...
    std::vector<std::vector<unsigned>> multiplicities{{1}};
    std::vector<unsigned> mus{1};
    std::vector<double> ks{2.0};
    std::vector<double> alphas{2.0};
    unsigned instances_per_cell = 10;
    std::uint64_t base_seed = 1;
    std::vector<BoundId> bound_ids{BoundId::thm3_2_3};
    double tol = 1e-8;
    PeelOrder order = PeelOrder::given;
};

struct SweepResult {
    std::vector<VerificationRecord> records;
    std::vector<SkippedCell> skipped;
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string padded(unsigned v, int width)
{
    char buf[24];
    std::snprintf(buf, sizeof buf, "%0*u", width, v);
    return buf;
}

inline std::string join(const std::vector<unsigned>& v)
{
    if (v.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace detail

/// Runs every (n, multiplicities, mu, k) cell; each sampled polynomial is
/// checked for every alpha and bound. Cells whose parameters violate a
/// precondition are reported in skipped, as are bounds whose structure does
/// not fit the cell.
inline SweepResult run_sweep(const SweepConfig& cfg)
{
    SweepResult out;
    const std::string reg = to_string(cfg.regime);
    for (unsigned n : cfg.ns)
        for (const auto& mult : cfg.multiplicities)
            for (unsigned mu : cfg.mus)
                for (double k : cfg.ks) {
                    const std::string cell = reg + "/n=" + detail::padded(n, 2) +
                                             "/t=" + detail::join(mult) +
                                             "/mu=" + std::to_string(mu) + "/k=" + format_number(k);
                    ZeroPattern pat;
                    pat.n = n;
                    pat.mu = mu;
                    pat.k = k;
                    pat.regime = cfg.regime;
                    for (unsigned t : mult)
                        pat.distinguished.push_back(
                            {cfg.regime == Regime::upper ? cplx{} : cplx(k + 1.0), t});
                    try {
                        pat.validate();
                        if (pat.base_degree() % mu != 0)
                            throw std::invalid_argument("base degree not a multiple of mu");
                    } catch (const std::exception& e) {
                        out.skipped.push_back({cell, e.what()});
                        continue;
                    }

                    std::vector<std::string> dead_bounds;
                    for (unsigned i = 0; i < cfg.instances_per_cell; ++i) {
                        const std::uint64_t seed = derive_seed(cfg.base_seed ^ detail::fnv1a(cell), i);
                        const std::string inst = cell + "/i=" + detail::padded(i, 4);
                        Polynomial p = Polynomial::constant(1.0);
                        try {
                            p = sample_instance(pat, seed);
                        } catch (const std::exception& e) {
                            out.skipped.push_back({inst, e.what()});
                            continue;
                        }
                        for (double a : cfg.alphas)
                            for (BoundId id : cfg.bound_ids) {
                                const std::string bname = to_string(id);
                                if (std::find(dead_bounds.begin(), dead_bounds.end(), bname) !=
                                    dead_bounds.end())
                                    continue;
                                VerifyOptions opt;
                                opt.tol_abs = cfg.tol;
                                opt.tol_rel = cfg.tol;
                                opt.order = cfg.order;
                                opt.instance_id = inst + "/alpha=" + format_number(a);
                                try {
                                    out.records.push_back(verify_instance(p, pat, a, id, opt));
                                } catch (const BoundNotApplicable& e) {
                                    dead_bounds.push_back(bname);
                                    out.skipped.push_back({cell + "/" + bname, e.what()});
                                } catch (const std::exception& e) {
                                    out.skipped.push_back({opt.instance_id + "/" + bname, e.what()});
                                }
                            }
                    }
                }
    sort_records(out.records);
    return out;
}

}  // namespace polarbound

#endif  // POLARBOUND_REPORT_HPP
