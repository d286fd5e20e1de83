#pragma once

#include "hilbfilt/cache.hpp"
#include "hilbfilt/io.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hilbfilt {

/// A golden fixture: a built-in instance whose computed value is compared
/// against the stored expectation in fixtures/golden.json.
struct Fixture {
    std::string id;
    std::function<Json()> compute;
};

struct FixtureOutcome {
    std::string id;
    bool ok = false;
    Json expected;
    Json actual;
};

namespace fixtures_detail {

inline const std::vector<std::string> kXY = {"x", "y"};

inline MonomialIdeal xy(std::initializer_list<const char*> gens) {
    std::vector<std::string> texts;
    for (const char* g : gens) texts.emplace_back(g);
    return parse_ideal(texts, kXY);
}

inline MonomialIdeal max_ideal2() { return xy({"x", "y"}); }

inline Json ideal_json(const MonomialIdeal& ideal) { return format_ideal(ideal, kXY); }

inline Json fit_json(const GoodFiltration& f) {
    const HilbertData data = fit_hilbert_data(f);
    Json j;
    Json e = Json::array();
    for (const BigInt& c : data.coefficients) e.push_back(to_decimal(c));
    j["e"] = e;
    j["postulation"] = data.postulation;
    return j;
}

inline Json samples_json(const GoodFiltration& f, int upto) {
    Json j = Json::array();
    for (int n = 0; n <= upto; ++n) j.push_back(std::to_string(hilbert_samuel(f, n)));
    return j;
}

inline Json pair_json(const std::vector<BoundReport>& reports) {
    Json j = Json::array();
    for (const BoundReport& r : reports) {
        Json x;
        x["statementId"] = to_string(r.statement);
        x["lhs"] = to_decimal(r.lhs);
        x["rhs"] = to_decimal(r.rhs);
        x["holds"] = r.holds;
        j.push_back(x);
    }
    return j;
}

inline Json single_json(const BoundReport& r) {
    Json x;
    x["lhs"] = to_decimal(r.lhs);
    x["rhs"] = to_decimal(r.rhs);
    x["holds"] = r.holds;
    return x;
}

} // namespace fixtures_detail

/// The built-in instance table. Expected values live in
/// fixtures/golden.json; ids are stable.
inline const std::vector<Fixture>& golden_fixtures() {
    using namespace fixtures_detail;
    static const std::vector<Fixture> table = {
        // --- monomial arithmetic ---
        {"minimalize/pairwise",
         [] { return ideal_json(xy({"x^2*y", "x*y^2", "x^2*y^2"})); }},
        {"minimalize/filter", [] { return ideal_json(xy({"x^2", "x^3", "x*y"})); }},
        {"product/m-by-squares",
         [] { return ideal_json(ideal_product(max_ideal2(), xy({"x^2", "y^2"}))); }},
        {"power/m-squared", [] { return ideal_json(ideal_power(max_ideal2(), 2)); }},
        {"intersection/coprime",
         [] { return ideal_json(ideal_intersection(xy({"x"}), xy({"y"}))); }},
        {"colength/staircase",
         [] { return std::to_string(colength(xy({"x^2", "x*y", "y^3"}))); }},
        {"colength/m-cubed",
         [] { return std::to_string(colength(ideal_power(max_ideal2(), 3))); }},
        {"saturate/x2-xy", [] { return ideal_json(saturate(xy({"x^2", "x*y"}))); }},
        {"saturate/xy", [] { return ideal_json(saturate(xy({"x*y"}))); }},
        {"krull/x2-xy", [] { return krull_dim_of_quotient(xy({"x^2", "x*y"})); }},

        // --- modules ---
        {"module/x2-xy",
         [] {
             const ModulePresentation m = ModulePresentation::make(xy({"x^2", "x*y"}));
             return Json{{"dim", m.dim()}, {"h0", std::to_string(m.h0())}};
         }},
        {"module/xy",
         [] {
             const ModulePresentation m = ModulePresentation::make(xy({"x*y"}));
             return Json{{"dim", m.dim()}, {"h0", std::to_string(m.h0())}};
         }},
        {"module/x3-x2y",
         [] {
             const ModulePresentation m = ModulePresentation::make(xy({"x^3", "x^2*y"}));
             return Json{{"dim", m.dim()}, {"h0", std::to_string(m.h0())}};
         }},

        // --- filtrations ---
        {"validate/stability-failure",
         [] {
             const ValidationReport report = GoodFiltration::validate(
                 ModulePresentation::free_module(2), xy({"x^2", "x*y", "y^2"}),
                 {xy({"x", "y"}), xy({"x^3", "y^3"})});
             Json j;
             j["valid"] = report.ok();
             if (!report.ok()) {
                 j["kind"] = report.first()->kind == ValidationIssue::Kind::StabilityFailure
                                 ? "stability"
                                 : "other";
                 j["index"] = report.first()->index;
             }
             return j;
         }},
        {"validate/prefix-m-base-m2",
         [] {
             const ValidationReport report = GoodFiltration::validate(
                 ModulePresentation::free_module(2), ideal_power(max_ideal2(), 2),
                 {max_ideal2()});
             return Json{{"valid", report.ok()}};
         }},
        {"term/prefix-m-base-m2-n2",
         [] {
             const GoodFiltration f =
                 GoodFiltration::make(ModulePresentation::free_module(2),
                                      ideal_power(max_ideal2(), 2), {max_ideal2()});
             return ideal_json(f.term_at(2));
         }},
        {"reduction/prefix-m-base-m2",
         [] {
             const GoodFiltration f =
                 GoodFiltration::make(ModulePresentation::free_module(2),
                                      ideal_power(max_ideal2(), 2), {max_ideal2()});
             return f.reduction_number();
         }},
        {"reduction/adic-m2",
         [] {
             return adic_filtration(ideal_power(max_ideal2(), 2),
                                    ModulePresentation::free_module(2))
                 .reduction_number();
         }},
        {"efiltration/q22-term2",
         [] {
             const GoodFiltration e = e_filtration(ideal_power(max_ideal2(), 2),
                                                   xy({"x^2", "y^2"}),
                                                   ModulePresentation::free_module(2));
             return ideal_json(e.term_at(2));
         }},
        {"quotient/x2-xy-annihilator",
         [] {
             const GoodFiltration f = adic_filtration(
                 max_ideal2(), ModulePresentation::make(xy({"x^2", "x*y"})));
             return ideal_json(quotient_by_h0(f).module().annihilator());
         }},

        // --- Hilbert-Samuel samples and fits ---
        {"hs/m-adic",
         [] {
             return samples_json(
                 adic_filtration(max_ideal2(), ModulePresentation::free_module(2)), 2);
         }},
        {"hs/prefix-m-base-m2",
         [] {
             const GoodFiltration f =
                 GoodFiltration::make(ModulePresentation::free_module(2),
                                      ideal_power(max_ideal2(), 2), {max_ideal2()});
             return samples_json(f, 2);
         }},
        {"hs/m-adic-mod-x2-xy",
         [] {
             const GoodFiltration f = adic_filtration(
                 max_ideal2(), ModulePresentation::make(xy({"x^2", "x*y"})));
             return samples_json(f, 4);
         }},
        {"fit/m-adic",
         [] {
             return fit_json(
                 adic_filtration(max_ideal2(), ModulePresentation::free_module(2)));
         }},
        {"fit/m2-adic",
         [] {
             return fit_json(adic_filtration(ideal_power(max_ideal2(), 2),
                                             ModulePresentation::free_module(2)));
         }},
        {"fit/prefix-m-base-m2",
         [] {
             return fit_json(GoodFiltration::make(ModulePresentation::free_module(2),
                                                  ideal_power(max_ideal2(), 2),
                                                  {max_ideal2()}));
         }},
        {"fit/m-adic-mod-x2-xy",
         [] {
             return fit_json(adic_filtration(
                 max_ideal2(), ModulePresentation::make(xy({"x^2", "x*y"}))));
         }},
        {"fit/staircase-adic",
         [] {
             return fit_json(adic_filtration(xy({"x^2", "x*y", "y^3"}),
                                             ModulePresentation::free_module(2)));
         }},
        {"fit/efiltration-q22",
         [] {
             return fit_json(e_filtration(ideal_power(max_ideal2(), 2), xy({"x^2", "y^2"}),
                                          ModulePresentation::free_module(2)));
         }},
        {"fit/adic-x2y2",
         [] {
             return fit_json(
                 adic_filtration(xy({"x^2", "y^2"}), ModulePresentation::free_module(2)));
         }},

        // --- xi vectors ---
        {"xi/4-1-0",
         [] {
             Json j = Json::array();
             for (const BigInt& v : xi_vector({4, 1, 0}).values) j.push_back(to_decimal(v));
             return j;
         }},
        {"xi/2-m3-1",
         [] {
             Json j = Json::array();
             for (const BigInt& v : xi_vector({2, -3, 1}).values) j.push_back(to_decimal(v));
             return j;
         }},

        // --- closed-form bounds ---
        {"bound/reg-d1", [] { return to_decimal(reg_bound_thm32(1, 0, 0, 1)); }},
        {"bound/reg-d2", [] { return to_decimal(reg_bound_thm32(1, 0, 0, 2)); }},
        {"bound/reg-d2-big", [] { return to_decimal(reg_bound_thm32(4, 1, 0, 2)); }},
        {"bound/coeff-i1", [] { return to_decimal(coeff_bound_thm33(1, 4, 1, 0)); }},
        {"bound/coeff-i2", [] { return to_decimal(coeff_bound_thm33(2, 1, 1, 0)); }},
        {"bound/coeff-i3", [] { return to_decimal(coeff_bound_thm33(3, 1, 0, 0)); }},
        {"bound/h0-i0-d1",
         [] { return to_decimal(h0_bound_lemma25(0, xi_vector({1, 1}), 0, 1)); }},
        {"bound/h0-i0-d2",
         [] { return to_decimal(h0_bound_lemma25(0, xi_vector({4, 4, 4}), 0, 2)); }},
        {"bound/h0-i1-d2",
         [] { return to_decimal(h0_bound_lemma25(1, xi_vector({4, 4, 4}), 0, 2)); }},
        {"bound/b-d2", [] { return to_decimal(b_bound_lemma26(xi_vector({4, 4, 4}), 0, 2)); }},
        {"bound/b-d1", [] { return to_decimal(b_bound_lemma26(xi_vector({1, 1}), 0, 1)); }},
        {"bound/b-d2-r1",
         [] { return to_decimal(b_bound_lemma26(xi_vector({1, 1, 1}), 1, 2)); }},

        // --- full checkers ---
        {"checkpair/worked-d2",
         [] {
             const ModulePresentation r2 = ModulePresentation::free_module(2);
             const MonomialIdeal base = ideal_power(max_ideal2(), 2);
             const FiltrationAnalysis f =
                 analyze(GoodFiltration::make(r2, base, {max_ideal2()}));
             const FiltrationAnalysis fp = analyze(adic_filtration(base, r2));
             return pair_json(check_pair(f, fp, "fixture"));
         }},
        {"cor34/m-adic-mod-x2-xy",
         [] {
             const ModulePresentation m = ModulePresentation::make(xy({"x^2", "x*y"}));
             const FiltrationAnalysis f = analyze(adic_filtration(max_ideal2(), m));
             return single_json(check_corollary34(f, f, "fixture").at(0));
         }},
        {"cor35/q22",
         [] {
             return pair_json(check_corollary35(ideal_power(max_ideal2(), 2),
                                                xy({"x^2", "y^2"}), "fixture"));
         }},
        {"lemma25/m-adic-mod-x2-xy",
         [] {
             const FiltrationAnalysis f = analyze(adic_filtration(
                 max_ideal2(), ModulePresentation::make(xy({"x^2", "x*y"}))));
             return single_json(check_lemma25_i0(f, "fixture"));
         }},
        {"lemma25/x3-x2y",
         [] {
             const FiltrationAnalysis f = analyze(adic_filtration(
                 max_ideal2(), ModulePresentation::make(xy({"x^3", "x^2*y"}))));
             return single_json(check_lemma25_i0(f, "fixture"));
         }},
        {"lemma24/m-adic-mod-x2-xy",
         [] {
             const FiltrationAnalysis f = analyze(adic_filtration(
                 max_ideal2(), ModulePresentation::make(xy({"x^2", "x*y"}))));
             const FiltrationAnalysis fbar = analyze(quotient_by_h0(f.filtration));
             Json j;
             j["e0"] = to_decimal(f.e(0));
             j["e0bar"] = to_decimal(fbar.e(0));
             j["e1"] = to_decimal(f.e(1));
             j["e1bar"] = to_decimal(fbar.e(1));
             j["holds"] = check_lemma24_i(f, fbar, "fixture").at(0).holds;
             return j;
         }},
        {"lemma26/q22",
         [] {
             const FiltrationAnalysis f = analyze(
                 adic_filtration(xy({"x^2", "y^2"}), ModulePresentation::free_module(2)));
             return single_json(check_lemma26(f, "fixture"));
         }},

        // --- corpus machinery ---
        {"rng/splitmix64-seed0",
         [] {
             SplitMix64 rng(0);
             Json j = Json::array();
             for (int i = 0; i < 4; ++i) {
                 char buffer[17];
                 std::snprintf(buffer, sizeof buffer, "%016llx",
                               static_cast<unsigned long long>(rng.next()));
                 j.push_back(std::string(buffer));
             }
             return j;
         }},
        {"corpus/seed42-one-instance",
         [] {
             GenSpec spec;
             spec.seed = 42;
             spec.count = 1;
             spec.ambient = IntRange::fixed(2);
             const CampaignReport report = run_campaign(spec);
             Json j;
             j["instances"] = report.instances;
             j["checks"] = report.checks;
             j["violations"] = static_cast<int>(report.violations.size());
             j["rejections"] = static_cast<int>(report.rejections.size());
             return j;
         }},
    };
    return table;
}

/// Run all fixtures against a golden map; outcomes carry both sides so
/// a failing comparison prints as a diff.
inline std::vector<FixtureOutcome> run_fixtures(const Json& golden) {
    std::vector<FixtureOutcome> outcomes;
    for (const Fixture& fixture : golden_fixtures()) {
        FixtureOutcome outcome;
        outcome.id = fixture.id;
        outcome.actual = fixture.compute();
        if (golden.contains(fixture.id)) {
            outcome.expected = golden.at(fixture.id);
            outcome.ok = outcome.expected == outcome.actual;
        } else {
            outcome.expected = nullptr;
            outcome.ok = false;
        }
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

} // namespace hilbfilt
