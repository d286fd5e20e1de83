#pragma once

#include "hilbfilt/bounds.hpp"
#include "hilbfilt/rng.hpp"
#include "hilbfilt/text.hpp"
#include "hilbfilt/version.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace hilbfilt {

inline constexpr int kAmbientCap = 6;

/// Inclusive integer range; campaign spec fields accept a single value
/// or a [lo, hi] pair.
struct IntRange {
    int lo = 0;
    int hi = 0;

    static IntRange fixed(int v) { return {v, v}; }
    bool operator==(const IntRange&) const = default;
};

/// Deterministic corpus description. The seed fixes every instance,
/// so two runs of the same spec produce identical reports.
struct GenSpec {
    std::uint64_t seed = 42;
    IntRange ambient{2, 4};      // D
    int max_pure_power = 4;      // cap on pure-power exponents of I
    IntRange extra_gens{0, 3};   // random generators added to the pure powers
    IntRange prefix_len{1, 3};   // target L; 0 collapses to the adic filtration
    bool with_annihilator = false;
    int count = 1;

    void validate() const {
        if (count < 1) throw Error(Error::Code::InvalidSpec, "count must be >= 1");
        if (max_pure_power < 1)
            throw Error(Error::Code::InvalidSpec, "maxPurePower must be >= 1");
        if (ambient.lo < 1 || ambient.hi < ambient.lo || ambient.hi > kAmbientCap)
            throw Error(Error::Code::InvalidSpec,
                        "D must lie in [1, " + std::to_string(kAmbientCap) + "]");
        if (extra_gens.lo < 0 || extra_gens.hi < extra_gens.lo)
            throw Error(Error::Code::InvalidSpec, "extraGens range is invalid");
        if (prefix_len.lo < 0 || prefix_len.hi < prefix_len.lo)
            throw Error(Error::Code::InvalidSpec, "prefixLen range is invalid");
    }
};

/// Always m-primary: pure powers x_i^{b_i} with b_i in [1, maxPurePower],
/// plus a few random monomials of total degree below max(b_i), minimalized.
inline MonomialIdeal gen_primary_ideal(const GenSpec& spec, SplitMix64& rng, int ambient) {
    std::vector<Monomial> gens;
    int max_b = 1;
    for (int i = 0; i < ambient; ++i) {
        const int b = rng.range(1, spec.max_pure_power);
        max_b = std::max(max_b, b);
        gens.push_back(Monomial::pure_power(ambient, i, b));
    }
    const int extras = rng.range(spec.extra_gens.lo, spec.extra_gens.hi);
    for (int g = 0; g < extras && max_b >= 2; ++g) {
        const int degree = rng.range(1, max_b - 1);
        std::vector<int> exps(ambient, 0);
        for (int u = 0; u < degree; ++u) ++exps[rng.below(static_cast<std::uint64_t>(ambient))];
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal::minimalize(ambient, std::move(gens));
}

/// Proper monomial ideal with dim(R/J) >= 1: random low-degree monomials,
/// redrawn while they accidentally cover every variable with a pure power.
inline MonomialIdeal gen_annihilator(const GenSpec& spec, SplitMix64& rng, int ambient) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        const int ngens = rng.range(1, 3);
        std::vector<Monomial> gens;
        for (int g = 0; g < ngens; ++g) {
            const int degree = rng.range(1, std::max(2, spec.max_pure_power - 1));
            std::vector<int> exps(ambient, 0);
            for (int u = 0; u < degree; ++u)
                ++exps[rng.below(static_cast<std::uint64_t>(ambient))];
            gens.emplace_back(std::move(exps));
        }
        MonomialIdeal j = MonomialIdeal::minimalize(ambient, std::move(gens));
        if (!j.is_unit() && !is_primary_to_max(j)) return j;
    }
    // A single monomial in one variable always leaves dimension >= 1.
    return MonomialIdeal::minimalize(ambient, {Monomial::pure_power(ambient, 0, 1)});
}

/// Prefix built inductively between the forced floor I*G_{n-1} and the
/// ceiling G_{n-1}: each step keeps the floor and adjoins a few random
/// multiples of the previous generators. The result is validated; a
/// failure here is a generator bug and surfaces loudly.
inline GoodFiltration gen_good_filtration(const GenSpec& spec, SplitMix64& rng,
                                          const MonomialIdeal& base,
                                          const ModulePresentation& module) {
    const int ambient = module.ambient();
    const int target_len = rng.range(spec.prefix_len.lo, spec.prefix_len.hi);
    if (target_len == 0) return adic_filtration(base, module);

    std::vector<MonomialIdeal> prefix;
    MonomialIdeal previous = MonomialIdeal::unit(ambient);
    for (int n = 1; n <= target_len; ++n) {
        std::vector<Monomial> gens;
        const MonomialIdeal floor = ideal_product(base, previous);
        gens.insert(gens.end(), floor.generators().begin(), floor.generators().end());
        for (const Monomial& g : previous.generators()) {
            if (!rng.chance(1, 2)) continue;
            const int bump = rng.range(n == 1 ? 1 : 0, 2); // degree-0 adjoins of 1 stay unit
            std::vector<int> exps = g.exponents();
            for (int u = 0; u < bump; ++u) ++exps[rng.below(static_cast<std::uint64_t>(ambient))];
            gens.emplace_back(std::move(exps));
        }
        MonomialIdeal term = MonomialIdeal::minimalize(ambient, std::move(gens));
        prefix.push_back(term);
        previous = std::move(term);
    }

    const ValidationReport report = GoodFiltration::validate(module, base, prefix);
    if (!report.ok())
        throw Error(Error::Code::InvalidFiltration,
                    "generator produced an invalid filtration: " + report.first()->detail);
    return GoodFiltration::make(module, base, std::move(prefix));
}

struct StatementTally {
    int attempted = 0;
    int passed = 0;
    int failed = 0;
    // Slack distribution over finite-slack reports.
    int slack_count = 0;
    double slack_min = 0;
    double slack_max = 0;
    double slack_sum = 0;

    void record(const BoundReport& r) {
        ++attempted;
        ++(r.holds ? passed : failed);
        if (r.slack_log2) {
            if (slack_count == 0) {
                slack_min = slack_max = *r.slack_log2;
            } else {
                slack_min = std::min(slack_min, *r.slack_log2);
                slack_max = std::max(slack_max, *r.slack_log2);
            }
            slack_sum += *r.slack_log2;
            ++slack_count;
        }
    }
};

struct SlackExtreme {
    std::string statement;
    std::string instance;
    double slack_log2 = 0;
};

struct Rejection {
    int index = 0;
    std::string instance;
    std::string reason;
};

struct CampaignTimings {
    double generate_ms = 0;
    double analyze_ms = 0;
    double check_ms = 0;
    double total_ms = 0;
};

struct CampaignReport {
    GenSpec spec;
    std::string tool_version = kToolVersion;
    int instances = 0;
    int checks = 0;
    std::map<std::string, StatementTally> statements; // keyed by statement id
    std::optional<SlackExtreme> max_slack;
    std::optional<SlackExtreme> min_slack;
    std::vector<Rejection> rejections;
    std::vector<BoundReport> violations;
    CampaignTimings timings;

    bool all_hold() const { return violations.empty(); }
};

struct CorpusOptions {
    int threads = 0; // 0 = hardware concurrency
    FitConfig fit;
    /// Observer invoked per analyzed filtration; the CLI wires the result
    /// cache through this (and through `lookup`) without the corpus layer
    /// knowing about files.
    std::function<std::optional<HilbertData>(const GoodFiltration&)> lookup;
    std::function<void(const GoodFiltration&, const HilbertData&)> store;
};

namespace detail {

struct InstanceOutcome {
    std::vector<BoundReport> reports;
    std::optional<Rejection> rejection;
    double analyze_ms = 0;
    double check_ms = 0;
};

inline FiltrationAnalysis analyze_cached(GoodFiltration f, const CorpusOptions& options) {
    if (options.lookup) {
        if (std::optional<HilbertData> hit = options.lookup(f)) {
            XiVector xi = xi_vector(hit->coefficients);
            return FiltrationAnalysis{std::move(f), std::move(*hit), std::move(xi)};
        }
    }
    FiltrationAnalysis a = analyze(std::move(f), options.fit);
    if (options.store) options.store(a.filtration, a.hilbert);
    return a;
}

/// One corpus instance: draw (M, I, F, F'), run every checker whose
/// preconditions the draw satisfies. Engine capacity errors become
/// rejections; anything else is a bug and propagates.
inline InstanceOutcome run_instance(const GenSpec& spec, int index, const CorpusOptions& options) {
    using clock = std::chrono::steady_clock;
    InstanceOutcome outcome;
    SplitMix64 rng = SplitMix64::substream(spec.seed, static_cast<std::uint64_t>(index));

    const int ambient = rng.range(spec.ambient.lo, spec.ambient.hi);
    std::string descriptor = "k=" + std::to_string(index);
    try {
        const MonomialIdeal j = spec.with_annihilator
                                    ? gen_annihilator(spec, rng, ambient)
                                    : MonomialIdeal::zero(ambient);
        const ModulePresentation module = ModulePresentation::make(j, options.fit.box_cap);
        const MonomialIdeal base = gen_primary_ideal(spec, rng, ambient);
        GoodFiltration f = gen_good_filtration(spec, rng, base, module);
        GoodFiltration f_prime = gen_good_filtration(spec, rng, base, module);

        descriptor += " D=" + std::to_string(ambient) + " J=" + describe_ideal(j) +
                      " I=" + describe_ideal(base);

        const auto t0 = clock::now();
        const FiltrationAnalysis a = analyze_cached(std::move(f), options);
        const FiltrationAnalysis a_prime = analyze_cached(std::move(f_prime), options);
        const FiltrationAnalysis a_adic =
            analyze_cached(adic_filtration(base, module), options);
        const FiltrationAnalysis a_bar =
            analyze_cached(quotient_by_h0(a.filtration, options.fit.box_cap), options);
        const auto t1 = clock::now();

        auto& reports = outcome.reports;
        auto append = [&reports](std::vector<BoundReport> batch) {
            for (BoundReport& r : batch) reports.push_back(std::move(r));
        };
        append(check_pair(a, a_prime, descriptor));
        append(check_corollary34(a, a_adic, descriptor));
        append(check_lemma24_i(a, a_bar, descriptor));
        reports.push_back(check_lemma25_i0(a, descriptor));
        if (j.is_zero() && is_complete_intersection(base)) {
            append(check_corollary35(a.filtration.prefix().front(), base, descriptor,
                                     options.fit));
            reports.push_back(check_lemma26(a, descriptor, options.fit.box_cap));
        }
        const auto t2 = clock::now();
        outcome.analyze_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        outcome.check_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    } catch (const Error& e) {
        if (e.code() == Error::Code::BoxCapExceeded || e.code() == Error::Code::NonStabilized) {
            outcome.reports.clear();
            outcome.rejection = Rejection{index, descriptor, e.what()};
        } else {
            throw;
        }
    }
    return outcome;
}

} // namespace detail

/// Run the corpus: a deterministic parallel map over instances with an
/// ordered reduce, so the report content is independent of scheduling.
inline CampaignReport run_campaign(const GenSpec& spec, const CorpusOptions& options = {}) {
    using clock = std::chrono::steady_clock;
    spec.validate();
    const auto t_start = clock::now();

    int threads = options.threads > 0 ? options.threads
                                      : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, spec.count);

    std::vector<detail::InstanceOutcome> outcomes(spec.count);
    std::atomic<int> next_index{0};
    auto worker = [&]() {
        while (true) {
            const int index = next_index.fetch_add(1);
            if (index >= spec.count) break;
            outcomes[index] = detail::run_instance(spec, index, options);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::future<void>> futures;
        futures.reserve(threads);
        for (int t = 0; t < threads; ++t)
            futures.push_back(std::async(std::launch::async, worker));
        for (auto& future : futures) future.get();
    }

    CampaignReport report;
    report.spec = spec;
    report.instances = spec.count;
    for (int index = 0; index < spec.count; ++index) {
        detail::InstanceOutcome& outcome = outcomes[index];
        report.timings.analyze_ms += outcome.analyze_ms;
        report.timings.check_ms += outcome.check_ms;
        if (outcome.rejection) {
            report.rejections.push_back(std::move(*outcome.rejection));
            continue;
        }
        for (BoundReport& r : outcome.reports) {
            ++report.checks;
            report.statements[to_string(r.statement)].record(r);
            if (r.slack_log2) {
                if (!report.max_slack || *r.slack_log2 > report.max_slack->slack_log2)
                    report.max_slack = SlackExtreme{to_string(r.statement), r.instance,
                                                    *r.slack_log2};
                if (!report.min_slack || *r.slack_log2 < report.min_slack->slack_log2)
                    report.min_slack = SlackExtreme{to_string(r.statement), r.instance,
                                                    *r.slack_log2};
            }
            if (!r.holds) report.violations.push_back(std::move(r));
        }
    }
    report.timings.total_ms =
        std::chrono::duration<double, std::milli>(clock::now() - t_start).count();
    return report;
}

} // namespace hilbfilt
