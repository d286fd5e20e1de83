#pragma once

#include "hilbfilt/corpus.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hilbfilt {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Filtration input files:
//   {"vars": ["x","y"], "annihilator": ["x^2","x*y"],
//    "base_ideal": ["x^2","x*y","y^2"], "prefix": [["x","y"]]}
// Monomials use the text syntax (`x^2*y`, unit `1`). An omitted
// annihilator means J = 0; an omitted prefix means the adic filtration.
// ---------------------------------------------------------------------------

struct FiltrationInput {
    std::vector<std::string> vars;
    MonomialIdeal annihilator;
    MonomialIdeal base_ideal;
    std::vector<MonomialIdeal> prefix;

    FiltrationInput() : annihilator(MonomialIdeal::zero(0)), base_ideal(MonomialIdeal::zero(0)) {}
};

inline FiltrationInput parse_filtration_input(const Json& j) {
    if (!j.is_object()) throw Error(Error::Code::ParseError, "filtration file must be a JSON object");
    if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty())
        throw Error(Error::Code::ParseError, "filtration file needs a non-empty \"vars\" array");

    FiltrationInput input;
    for (const Json& v : j["vars"]) {
        if (!v.is_string()) throw Error(Error::Code::ParseError, "variable names must be strings");
        input.vars.push_back(v.get<std::string>());
    }
    const int D = static_cast<int>(input.vars.size());
    if (D > kAmbientCap)
        throw Error(Error::Code::ParseError,
                    "at most " + std::to_string(kAmbientCap) + " variables are supported");

    auto read_ideal = [&](const Json& node, const char* field) {
        if (!node.is_array())
            throw Error(Error::Code::ParseError, std::string(field) + " must be an array of monomials");
        std::vector<std::string> texts;
        for (const Json& m : node) {
            if (!m.is_string())
                throw Error(Error::Code::ParseError, std::string(field) + " entries must be strings");
            texts.push_back(m.get<std::string>());
        }
        return parse_ideal(texts, input.vars);
    };

    input.annihilator =
        j.contains("annihilator") ? read_ideal(j["annihilator"], "annihilator") : MonomialIdeal::zero(D);
    if (!j.contains("base_ideal"))
        throw Error(Error::Code::ParseError, "filtration file needs a \"base_ideal\" array");
    input.base_ideal = read_ideal(j["base_ideal"], "base_ideal");
    if (j.contains("prefix")) {
        if (!j["prefix"].is_array())
            throw Error(Error::Code::ParseError, "prefix must be an array of generator arrays");
        for (const Json& term : j["prefix"]) input.prefix.push_back(read_ideal(term, "prefix term"));
    } else {
        input.prefix.push_back(input.base_ideal); // adic filtration
    }
    return input;
}

inline GoodFiltration build_filtration(const FiltrationInput& input,
                                       std::uint64_t box_cap = kDefaultBoxCap) {
    ModulePresentation module = ModulePresentation::make(input.annihilator, box_cap);
    return GoodFiltration::make(std::move(module), input.base_ideal, input.prefix);
}

inline Json filtration_to_json(const FiltrationInput& input) {
    Json j;
    j["vars"] = input.vars;
    if (!input.annihilator.is_zero()) j["annihilator"] = format_ideal(input.annihilator, input.vars);
    j["base_ideal"] = format_ideal(input.base_ideal, input.vars);
    Json prefix = Json::array();
    for (const MonomialIdeal& term : input.prefix) prefix.push_back(format_ideal(term, input.vars));
    j["prefix"] = prefix;
    return j;
}

/// Canonical instance encoding: the content-addressed cache key input.
/// Everything that can influence the fitted result participates.
inline std::string canonical_instance_encoding(const GoodFiltration& f, const FitConfig& config) {
    const std::vector<std::string> vars = default_var_names(f.module().ambient());
    FiltrationInput input;
    input.vars = vars;
    input.annihilator = f.module().annihilator();
    input.base_ideal = f.base_ideal();
    input.prefix = f.prefix();
    Json j = filtration_to_json(input);
    j["boxCap"] = config.box_cap;
    j["horizonCap"] = config.horizon_cap;
    j["initialHorizon"] = config.initial_horizon;
    return j.dump();
}

// ---------------------------------------------------------------------------
// Big integers serialize as decimal strings: no precision loss, ever.
// ---------------------------------------------------------------------------

inline Json big_to_json(const BigInt& x) { return to_decimal(x); }

inline BigInt big_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw Error(Error::Code::ParseError, "expected a decimal-string integer");
}

// ---------------------------------------------------------------------------
// HilbertData
// ---------------------------------------------------------------------------

inline Json hilbert_to_json(const HilbertData& data) {
    Json j;
    j["dim"] = data.dim;
    Json coeffs = Json::array();
    for (const BigInt& e : data.coefficients) coeffs.push_back(big_to_json(e));
    j["coefficients"] = coeffs;
    j["postulation"] = data.postulation;
    j["horizon"] = data.horizon;
    Json samples = Json::array();
    for (std::size_t n = 0; n < data.samples.size(); ++n)
        samples.push_back(Json::array({n, std::to_string(data.samples[n])}));
    j["samples"] = samples;
    return j;
}

inline HilbertData hilbert_from_json(const Json& j) {
    HilbertData data;
    data.dim = j.at("dim").get<int>();
    for (const Json& e : j.at("coefficients")) data.coefficients.push_back(big_from_json(e));
    data.postulation = j.at("postulation").get<int>();
    data.horizon = j.at("horizon").get<int>();
    for (const Json& s : j.at("samples"))
        data.samples.push_back(std::stoull(s.at(1).get<std::string>()));
    return data;
}

// ---------------------------------------------------------------------------
// BoundReport: {instance, statementId, lhs, rhs, holds, slackLog2, proxyNote?}
// slackLog2 is a number, or the string "inf" when lhs <= 0. Whether a
// statement is an equality follows from its id, so no extra key is stored.
// ---------------------------------------------------------------------------

inline Json report_to_json(const BoundReport& r) {
    Json j;
    j["instance"] = r.instance;
    j["statementId"] = to_string(r.statement);
    j["lhs"] = big_to_json(r.lhs);
    j["rhs"] = big_to_json(r.rhs);
    j["holds"] = r.holds;
    if (r.slack_log2)
        j["slackLog2"] = *r.slack_log2;
    else
        j["slackLog2"] = "inf";
    if (!r.note.empty()) j["proxyNote"] = r.note;
    return j;
}

inline BoundReport report_from_json(const Json& j) {
    BoundReport r;
    r.statement = statement_from_string(j.at("statementId").get<std::string>());
    r.equality =
        r.statement == StatementId::LEMMA_2_2 || r.statement == StatementId::LEMMA_2_4_I;
    r.instance = j.at("instance").get<std::string>();
    r.lhs = big_from_json(j.at("lhs"));
    r.rhs = big_from_json(j.at("rhs"));
    r.holds = j.at("holds").get<bool>();
    if (j.at("slackLog2").is_number()) r.slack_log2 = j.at("slackLog2").get<double>();
    if (j.contains("proxyNote")) r.note = j.at("proxyNote").get<std::string>();
    return r;
}

// ---------------------------------------------------------------------------
// GenSpec: field names mirror the campaign spec file format. Range fields
// accept a single integer or a [lo, hi] pair and always serialize as pairs.
// ---------------------------------------------------------------------------

inline Json range_to_json(const IntRange& r) { return Json::array({r.lo, r.hi}); }

inline IntRange range_from_json(const Json& j) {
    if (j.is_number_integer()) return IntRange::fixed(j.get<int>());
    if (j.is_array() && j.size() == 2)
        return IntRange{j[0].get<int>(), j[1].get<int>()};
    throw Error(Error::Code::ParseError, "range fields take an integer or a [lo, hi] pair");
}

inline Json spec_to_json(const GenSpec& spec) {
    Json j;
    j["seed"] = spec.seed;
    j["D"] = range_to_json(spec.ambient);
    j["maxPurePower"] = spec.max_pure_power;
    j["extraGens"] = range_to_json(spec.extra_gens);
    j["prefixLen"] = range_to_json(spec.prefix_len);
    j["withAnnihilator"] = spec.with_annihilator;
    j["count"] = spec.count;
    return j;
}

inline GenSpec spec_from_json(const Json& j) {
    GenSpec spec;
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("D")) spec.ambient = range_from_json(j["D"]);
    if (j.contains("maxPurePower")) spec.max_pure_power = j["maxPurePower"].get<int>();
    if (j.contains("extraGens")) spec.extra_gens = range_from_json(j["extraGens"]);
    if (j.contains("prefixLen")) spec.prefix_len = range_from_json(j["prefixLen"]);
    if (j.contains("withAnnihilator")) spec.with_annihilator = j["withAnnihilator"].get<bool>();
    if (j.contains("count")) spec.count = j["count"].get<int>();
    spec.validate();
    return spec;
}

// ---------------------------------------------------------------------------
// CampaignReport. Timings live under one key so consumers comparing runs
// for determinism can drop exactly that.
// ---------------------------------------------------------------------------

inline Json campaign_to_json(const CampaignReport& report) {
    Json j;
    j["spec"] = spec_to_json(report.spec);
    j["toolVersion"] = report.tool_version;
    j["instances"] = report.instances;
    j["checks"] = report.checks;
    Json statements = Json::object();
    for (const auto& [id, tally] : report.statements) {
        Json t;
        t["attempted"] = tally.attempted;
        t["passed"] = tally.passed;
        t["failed"] = tally.failed;
        if (tally.slack_count > 0) {
            t["slackMin"] = tally.slack_min;
            t["slackMax"] = tally.slack_max;
            t["slackMean"] = tally.slack_sum / tally.slack_count;
        }
        statements[id] = t;
    }
    j["statements"] = statements;
    auto extreme = [](const SlackExtreme& e) {
        Json x;
        x["statementId"] = e.statement;
        x["instance"] = e.instance;
        x["slackLog2"] = e.slack_log2;
        return x;
    };
    if (report.max_slack) j["maxSlack"] = extreme(*report.max_slack);
    if (report.min_slack) j["minSlack"] = extreme(*report.min_slack);
    Json rejections = Json::array();
    for (const Rejection& r : report.rejections) {
        Json x;
        x["index"] = r.index;
        x["instance"] = r.instance;
        x["reason"] = r.reason;
        rejections.push_back(x);
    }
    j["rejections"] = rejections;
    Json violations = Json::array();
    for (const BoundReport& r : report.violations) violations.push_back(report_to_json(r));
    j["violations"] = violations;
    Json timings;
    timings["analyzeMs"] = report.timings.analyze_ms;
    timings["checkMs"] = report.timings.check_ms;
    timings["totalMs"] = report.timings.total_ms;
    j["timings"] = timings;
    return j;
}

inline CampaignReport campaign_from_json(const Json& j) {
    CampaignReport report;
    report.spec = spec_from_json(j.at("spec"));
    report.tool_version = j.at("toolVersion").get<std::string>();
    report.instances = j.at("instances").get<int>();
    report.checks = j.at("checks").get<int>();
    for (const auto& [id, t] : j.at("statements").items()) {
        StatementTally tally;
        tally.attempted = t.at("attempted").get<int>();
        tally.passed = t.at("passed").get<int>();
        tally.failed = t.at("failed").get<int>();
        if (t.contains("slackMin")) {
            tally.slack_min = t.at("slackMin").get<double>();
            tally.slack_max = t.at("slackMax").get<double>();
            tally.slack_sum = t.at("slackMean").get<double>(); // mean; count unknown
            tally.slack_count = 1;
        }
        report.statements[id] = tally;
    }
    auto read_extreme = [](const Json& x) {
        return SlackExtreme{x.at("statementId").get<std::string>(),
                            x.at("instance").get<std::string>(),
                            x.at("slackLog2").get<double>()};
    };
    if (j.contains("maxSlack")) report.max_slack = read_extreme(j.at("maxSlack"));
    if (j.contains("minSlack")) report.min_slack = read_extreme(j.at("minSlack"));
    for (const Json& x : j.at("rejections"))
        report.rejections.push_back(Rejection{x.at("index").get<int>(),
                                              x.at("instance").get<std::string>(),
                                              x.at("reason").get<std::string>()});
    for (const Json& x : j.at("violations")) report.violations.push_back(report_from_json(x));
    if (j.contains("timings")) {
        report.timings.analyze_ms = j["timings"].value("analyzeMs", 0.0);
        report.timings.check_ms = j["timings"].value("checkMs", 0.0);
        report.timings.total_ms = j["timings"].value("totalMs", 0.0);
    }
    return report;
}

/// CSV slack table, one row per statement tally.
inline std::string campaign_to_csv(const CampaignReport& report) {
    std::string csv = "statement,attempted,passed,failed,slack_min_log2,slack_max_log2,slack_mean_log2\n";
    for (const auto& [id, tally] : report.statements) {
        csv += id + ',' + std::to_string(tally.attempted) + ',' + std::to_string(tally.passed) +
               ',' + std::to_string(tally.failed);
        if (tally.slack_count > 0) {
            csv += ',' + std::to_string(tally.slack_min) + ',' + std::to_string(tally.slack_max) +
                   ',' + std::to_string(tally.slack_sum / tally.slack_count);
        } else {
            csv += ",,,";
        }
        csv += '\n';
    }
    return csv;
}

} // namespace hilbfilt
