#pragma once

#include "hilbfilt/cache.hpp"
#include "hilbfilt/fixtures.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hilbfilt {

/// Exit-code contract: 0 = all checks hold, 1 = operational error,
/// 2 = an inequality failed (which certifies a bug in this tool, since
/// every checked statement is proved).
enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitViolation = 2 };

namespace cli_detail {

struct CommonFlags {
    bool json = false;
    std::uint64_t box_cap = kDefaultBoxCap;
    int horizon_cap = 256;
    bool no_cache = false;
    std::string out_path;

    FitConfig fit() const { return FitConfig{box_cap, horizon_cap, 0}; }
};

inline void add_common(CLI::App* cmd, CommonFlags& flags, bool with_json = true) {
    if (with_json) cmd->add_flag("--json", flags.json, "emit machine-readable JSON");
    cmd->add_option("--box-cap", flags.box_cap, "pure-power box volume cap");
    cmd->add_option("--horizon-cap", flags.horizon_cap, "Hilbert sampling horizon cap");
    cmd->add_flag("--no-cache", flags.no_cache, "bypass the result cache");
    cmd->add_option("--out", flags.out_path, "write the report to PATH instead of stdout");
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Error::Code::IoError, "cannot open " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error(Error::Code::ParseError, "invalid JSON in " + path);
    return j;
}

inline void emit(const CommonFlags& flags, std::ostream& out, const std::string& text) {
    if (flags.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(flags.out_path);
    if (!file) throw Error(Error::Code::IoError, "cannot write " + flags.out_path);
    file << text;
}

inline std::optional<ResultCache> open_cache(const CommonFlags& flags) {
    if (flags.no_cache) return std::nullopt;
    return ResultCache(ResultCache::default_dir());
}

/// Fit with the result cache consulted first; a deterministic fraction of
/// hits is recomputed and compared, so a corrupt cache cannot silently
/// distort reports.
inline HilbertData fit_cached(const GoodFiltration& f, const FitConfig& config,
                              const std::optional<ResultCache>& cache) {
    if (!cache) return fit_hilbert_data(f, config);
    const std::string key = ResultCache::key_for(canonical_instance_encoding(f, config));
    if (std::optional<Json> hit = cache->load(key)) {
        HilbertData data = hilbert_from_json(*hit);
        if (ResultCache::should_spot_check(key)) {
            const HilbertData fresh = fit_hilbert_data(f, config);
            if (hilbert_to_json(fresh) != *hit)
                throw Error(Error::Code::CacheCorrupt,
                            "cache entry " + key + " disagrees with recomputation");
        }
        return data;
    }
    HilbertData data = fit_hilbert_data(f, config);
    cache->store(key, hilbert_to_json(data));
    return data;
}

inline FiltrationAnalysis analyze_cached(GoodFiltration f, const FitConfig& config,
                                         const std::optional<ResultCache>& cache) {
    HilbertData data = fit_cached(f, config, cache);
    XiVector xi = xi_vector(data.coefficients);
    return FiltrationAnalysis{std::move(f), std::move(data), std::move(xi)};
}

inline std::string coefficients_list(const std::vector<BigInt>& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += ", ";
        s += to_decimal(values[i]);
    }
    return s + "]";
}

/// Exact rendering; huge values also get their digit count.
inline std::string render_big(const BigInt& x) {
    std::string s = to_decimal(x);
    if (s.size() > 40) s += " (" + std::to_string(decimal_digits(x)) + " digits)";
    return s;
}

inline std::string report_table(const std::vector<BoundReport>& reports) {
    std::ostringstream os;
    for (const BoundReport& r : reports) {
        os << (r.holds ? "ok   " : "FAIL ") << to_string(r.statement) << "  lhs "
           << render_big(r.lhs) << (r.equality ? " = " : " <= ") << "rhs " << render_big(r.rhs);
        if (r.slack_log2) {
            os.setf(std::ios::fixed);
            os.precision(2);
            os << "  slack_log2 " << *r.slack_log2;
        }
        os << "\n";
    }
    return os.str();
}

inline int finish_reports(const CommonFlags& flags, std::ostream& out,
                          const std::vector<BoundReport>& reports) {
    if (flags.json) {
        Json j = Json::array();
        for (const BoundReport& r : reports) j.push_back(report_to_json(r));
        emit(flags, out, j.dump(2) + "\n");
    } else {
        emit(flags, out, report_table(reports));
    }
    const bool all_hold =
        std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.holds; });
    return all_hold ? kExitOk : kExitViolation;
}

// --- subcommand bodies -----------------------------------------------------

inline int cmd_coeffs(const std::string& file, const CommonFlags& flags, std::ostream& out) {
    const FiltrationInput input = parse_filtration_input(load_json_file(file));
    const GoodFiltration f = build_filtration(input, flags.box_cap);
    const std::optional<ResultCache> cache = open_cache(flags);
    const FiltrationAnalysis a = analyze_cached(f, flags.fit(), cache);

    if (flags.json) {
        Json j = hilbert_to_json(a.hilbert);
        Json xi = Json::array();
        for (const BigInt& v : a.xi.values) xi.push_back(to_decimal(v));
        j["xi"] = xi;
        j["reductionNumber"] = a.reduction();
        j["h0"] = std::to_string(a.filtration.module().h0());
        emit(flags, out, j.dump(2) + "\n");
        return kExitOk;
    }

    std::ostringstream os;
    os << "e = " << coefficients_list(a.hilbert.coefficients) << ", r = " << a.reduction()
       << ", n_post = " << a.hilbert.postulation << "\n";
    os << "d = " << a.dim() << ", h0 = " << a.filtration.module().h0()
       << ", horizon = " << a.hilbert.horizon << "\n";
    os << "xi = " << coefficients_list(a.xi.values) << "\n";
    emit(flags, out, os.str());
    return kExitOk;
}

inline int cmd_check_pair(const std::string& file_f, const std::string& file_fp,
                          const CommonFlags& flags, std::ostream& out) {
    const FiltrationInput input_f = parse_filtration_input(load_json_file(file_f));
    const FiltrationInput input_fp = parse_filtration_input(load_json_file(file_fp));
    const std::optional<ResultCache> cache = open_cache(flags);
    const FiltrationAnalysis a = analyze_cached(build_filtration(input_f, flags.box_cap),
                                                flags.fit(), cache);
    const FiltrationAnalysis ap = analyze_cached(build_filtration(input_fp, flags.box_cap),
                                                 flags.fit(), cache);
    return finish_reports(flags, out, check_pair(a, ap, file_f + " vs " + file_fp));
}

inline int cmd_check_cor34(const std::string& file, const CommonFlags& flags, std::ostream& out) {
    const FiltrationInput input = parse_filtration_input(load_json_file(file));
    const std::optional<ResultCache> cache = open_cache(flags);
    const FiltrationAnalysis a =
        analyze_cached(build_filtration(input, flags.box_cap), flags.fit(), cache);
    const FiltrationAnalysis adic = analyze_cached(
        adic_filtration(a.filtration.base_ideal(), a.filtration.module()), flags.fit(), cache);
    return finish_reports(flags, out, check_corollary34(a, adic, file));
}

inline int cmd_check_cor35(const std::string& file, const CommonFlags& flags, std::ostream& out) {
    const FiltrationInput input = parse_filtration_input(load_json_file(file));
    if (!input.annihilator.is_zero())
        throw Error(Error::Code::ParseError,
                    "the parameter-filtration check works over M = R: drop the annihilator");
    if (input.prefix.size() != 1)
        throw Error(Error::Code::ParseError,
                    "the parameter-filtration check wants exactly one prefix term F_1");
    return finish_reports(flags, out,
                          check_corollary35(input.prefix[0], input.base_ideal, file, flags.fit()));
}

inline int cmd_corpus(const std::string& spec_file, const CommonFlags& flags,
                      std::optional<std::uint64_t> seed_override, int threads,
                      const std::string& csv_path, std::ostream& out) {
    GenSpec spec = spec_from_json(load_json_file(spec_file));
    if (seed_override) spec.seed = *seed_override;

    const std::optional<ResultCache> cache = open_cache(flags);
    CorpusOptions options;
    options.threads = threads;
    options.fit = flags.fit();
    if (cache) {
        const FitConfig fit = flags.fit();
        options.lookup = [&cache, fit](const GoodFiltration& f) -> std::optional<HilbertData> {
            const std::string key = ResultCache::key_for(canonical_instance_encoding(f, fit));
            if (std::optional<Json> hit = cache->load(key)) return hilbert_from_json(*hit);
            return std::nullopt;
        };
        options.store = [&cache, fit](const GoodFiltration& f, const HilbertData& data) {
            cache->store(ResultCache::key_for(canonical_instance_encoding(f, fit)),
                         hilbert_to_json(data));
        };
    }

    const CampaignReport report = run_campaign(spec, options);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw Error(Error::Code::IoError, "cannot write " + csv_path);
        csv << campaign_to_csv(report);
    }
    if (flags.json) {
        emit(flags, out, campaign_to_json(report).dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "instances = " << report.instances << ", checks = " << report.checks
           << ", rejections = " << report.rejections.size()
           << ", violations = " << report.violations.size() << "\n";
        for (const auto& [id, tally] : report.statements) {
            os << "  " << id << ": " << tally.passed << "/" << tally.attempted << " hold";
            if (tally.slack_count > 0) {
                os.setf(std::ios::fixed);
                os.precision(2);
                os << "  slack_log2 in [" << tally.slack_min << ", " << tally.slack_max << "]";
            }
            os << "\n";
        }
        if (!report.violations.empty()) os << report_table(report.violations);
        emit(flags, out, os.str());
    }
    return report.all_hold() ? kExitOk : kExitViolation;
}

inline int cmd_fixtures(const std::string& golden_path, bool list_only, std::ostream& out) {
    if (list_only) {
        for (const Fixture& f : golden_fixtures()) out << f.id << "\n";
        return kExitOk;
    }
    const Json golden = load_json_file(golden_path);
    const std::vector<FixtureOutcome> outcomes = run_fixtures(golden);
    int failed = 0;
    for (const FixtureOutcome& o : outcomes) {
        if (o.ok) continue;
        ++failed;
        out << "FAIL " << o.id << "\n  expected: " << o.expected.dump()
            << "\n  actual:   " << o.actual.dump() << "\n";
    }
    out << outcomes.size() - failed << "/" << outcomes.size() << " fixtures match\n";
    return failed == 0 ? kExitOk : kExitViolation;
}

} // namespace cli_detail

/// In-process entry point; tools/hilbfilt.cpp is a thin wrapper. Keeping
/// the driver here makes the exit-code contract unit-testable.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"exact Hilbert-Samuel coefficients of good filtrations of monomial "
                 "quotients, with bound checking"};
    app.set_version_flag("--version", std::string("hilbfilt ") + kToolVersion);
    app.require_subcommand(1);

    CommonFlags flags;
    std::string file_a, file_b, spec_file;
    std::optional<std::uint64_t> seed_override;
    std::uint64_t seed_raw = 0;
    int threads = 0;
    std::string csv_path;
    std::string golden_path = "fixtures/golden.json";
    bool list_only = false;

    CLI::App* coeffs = app.add_subcommand(
        "coeffs", "print d, e_0..e_d, xi, r, n_post, h0 for a filtration file");
    coeffs->add_option("file", file_a, "filtration JSON file")->required();
    add_common(coeffs, flags);

    CLI::App* check_pair_cmd =
        app.add_subcommand("check-pair", "check the pair bounds for two filtrations of one "
                                         "module over one base ideal");
    check_pair_cmd->add_option("fileF", file_a, "filtration F")->required();
    check_pair_cmd->add_option("fileFprime", file_b, "filtration F'")->required();
    add_common(check_pair_cmd, flags);

    CLI::App* cor34 = app.add_subcommand(
        "check-cor34", "check the coefficient bounds against the I-adic filtration");
    cor34->add_option("file", file_a, "filtration JSON file")->required();
    add_common(cor34, flags);

    CLI::App* cor35 = app.add_subcommand(
        "check-cor35", "check the parameter-filtration bounds (base = Q, prefix = [F1])");
    cor35->add_option("file", file_a, "filtration JSON file")->required();
    add_common(cor35, flags);

    CLI::App* corpus_cmd =
        app.add_subcommand("corpus", "run a seeded campaign from a spec file");
    corpus_cmd->add_option("spec", spec_file, "campaign spec JSON file")->required();
    CLI::Option* seed_opt = corpus_cmd->add_option("--seed", seed_raw, "override the spec seed");
    corpus_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
    corpus_cmd->add_option("--csv", csv_path, "also write a CSV slack table to PATH");
    add_common(corpus_cmd, flags);

    CLI::App* fixtures_cmd =
        app.add_subcommand("fixtures", "run the built-in golden instances");
    fixtures_cmd->add_option("--file", golden_path, "golden value file");
    fixtures_cmd->add_flag("--list", list_only, "print fixture ids without running");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (seed_opt->count() > 0) seed_override = seed_raw;
        if (coeffs->parsed()) return cmd_coeffs(file_a, flags, out);
        if (check_pair_cmd->parsed()) return cmd_check_pair(file_a, file_b, flags, out);
        if (cor34->parsed()) return cmd_check_cor34(file_a, flags, out);
        if (cor35->parsed()) return cmd_check_cor35(file_a, flags, out);
        if (corpus_cmd->parsed())
            return cmd_corpus(spec_file, flags, seed_override, threads, csv_path, out);
        if (fixtures_cmd->parsed()) return cmd_fixtures(golden_path, list_only, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitError;
    }
    err << "error: no subcommand\n";
    return kExitError;
}

} // namespace hilbfilt
