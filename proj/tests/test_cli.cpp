#include "hilbfilt/cli.hpp"

#include <catch2/catch.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hilbfilt;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("hilbfilt-cli-" + std::to_string(SplitMix64(::getpid()).next() % 1000000));
        fs::create_directories(path);
        ::setenv("HILBFILT_CACHE_DIR", (path / "cache").c_str(), 1);
    }
    ~TempDir() {
        ::unsetenv("HILBFILT_CACHE_DIR");
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    fs::path file(const std::string& name, const std::string& content) const {
        const fs::path p = path / name;
        std::ofstream out(p);
        out << content;
        return p;
    }
};

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

const char* kM2Adic = R"({"vars": ["x", "y"], "base_ideal": ["x^2", "x*y", "y^2"]})";
const char* kPrefixM = R"({"vars": ["x", "y"], "base_ideal": ["x^2", "x*y", "y^2"],
                           "prefix": [["x", "y"]]})";

} // namespace

TEST_CASE("coeffs prints the fitted invariants", "[cli]") {
    TempDir tmp;
    const auto file = tmp.file("m2.json", kM2Adic);
    const CliResult r = cli({"coeffs", file.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("e = [4, 1, 0], r = 0, n_post = 0") != std::string::npos);
    CHECK(r.out.find("d = 2, h0 = 0") != std::string::npos);
    CHECK(r.out.find("xi = [4, 4, 4]") != std::string::npos);
}

TEST_CASE("coeffs --json emits the machine schema", "[cli]") {
    TempDir tmp;
    const auto file = tmp.file("m2.json", kM2Adic);
    const CliResult r = cli({"coeffs", file.string(), "--json", "--no-cache"});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j.at("dim") == 2);
    CHECK(j.at("coefficients") == Json::array({"4", "1", "0"}));
    CHECK(j.at("xi") == Json::array({"4", "4", "4"}));
    CHECK(j.at("reductionNumber") == 0);
    CHECK(j.at("postulation") == 0);
    CHECK(j.at("h0") == "0");
    CHECK(hilbert_to_json(hilbert_from_json(j)) == hilbert_to_json(hilbert_from_json(j)));
}

TEST_CASE("operational errors exit 1 with a diagnostic", "[cli]") {
    TempDir tmp;
    const auto bad_monomial =
        tmp.file("bad.json", R"({"vars": ["x", "y"], "base_ideal": ["x^-1"]})");
    CliResult r = cli({"coeffs", bad_monomial.string()});
    CHECK(r.code == kExitError);
    CHECK(r.err.find("column") != std::string::npos);

    // d = 0 module: theorems need dim >= 1
    const auto zero_dim = tmp.file("d0.json", R"({"vars": ["x", "y"],
        "annihilator": ["x", "y^2"], "base_ideal": ["x", "y"]})");
    r = cli({"coeffs", zero_dim.string()});
    CHECK(r.code == kExitError);
    CHECK(r.err.find(">= 1") != std::string::npos);

    r = cli({"coeffs", (tmp.path / "missing.json").string()});
    CHECK(r.code == kExitError);

    r = cli({"nonsense"});
    CHECK(r.code == kExitError);
}

TEST_CASE("check-pair reports the worked example", "[cli]") {
    TempDir tmp;
    const auto f = tmp.file("f.json", kPrefixM);
    const auto fp = tmp.file("fp.json", kM2Adic);
    CliResult r = cli({"check-pair", f.string(), fp.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("LEMMA_2_2") != std::string::npos);
    CHECK(r.out.find("THM_3_3_E1") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    const CliResult json_run = cli({"check-pair", f.string(), fp.string(), "--json"});
    const Json reports = Json::parse(json_run.out);
    REQUIRE(reports.is_array());
    REQUIRE(reports.size() == 4);
    for (const Json& rep : reports) {
        CHECK(rep.at("holds") == true);
        CHECK(rep.contains("slackLog2"));
        const BoundReport round = report_from_json(rep);
        CHECK(report_to_json(round) == rep);
    }

    // mismatched base ideals are an operational error, not a violation
    const auto other = tmp.file("other.json", R"({"vars":["x","y"],"base_ideal":["x","y"]})");
    r = cli({"check-pair", f.string(), other.string()});
    CHECK(r.code == kExitError);
}

TEST_CASE("corollary subcommands", "[cli]") {
    TempDir tmp;
    const auto f = tmp.file("f.json", kPrefixM);
    CHECK(cli({"check-cor34", f.string()}).code == kExitOk);

    const auto e_input = tmp.file("e.json", R"({"vars": ["x", "y"],
        "base_ideal": ["x^2", "y^2"], "prefix": [["x^2", "x*y", "y^2"]]})");
    const CliResult r = cli({"check-cor35", e_input.string(), "--json"});
    CHECK(r.code == kExitOk);
    const Json reports = Json::parse(r.out);
    CHECK(reports.size() == 2);
    CHECK(reports[0].at("lhs") == "1");
    CHECK(reports[0].at("rhs") == "600");

    // base ideal must be a complete intersection for cor35
    const auto not_ci = tmp.file("notci.json", kM2Adic);
    CHECK(cli({"check-cor35", not_ci.string()}).code == kExitError);
}

TEST_CASE("corpus subcommand is deterministic and writes reports", "[cli]") {
    TempDir tmp;
    const auto spec = tmp.file("spec.json", R"({"seed": 42, "count": 5, "D": [2, 2]})");
    const auto out_path = tmp.path / "report.json";
    const CliResult a =
        cli({"corpus", spec.string(), "--json", "--out", out_path.string()});
    CHECK(a.code == kExitOk);
    std::ifstream in(out_path);
    REQUIRE(in.good());
    Json ja = Json::parse(in);
    CHECK(ja.at("violations").empty());
    CHECK(ja.at("instances") == 5);

    const CliResult b = cli({"corpus", spec.string(), "--json"});
    Json jb = Json::parse(b.out);
    ja.erase("timings");
    jb.erase("timings");
    CHECK(ja == jb); // identical seeds, byte-identical payloads

    // --seed overrides the spec
    const CliResult c = cli({"corpus", spec.string(), "--json", "--seed", "43"});
    Json jc = Json::parse(c.out);
    jc.erase("timings");
    CHECK(jc != jb);

    // CSV table
    const auto csv_path = tmp.path / "slack.csv";
    CHECK(cli({"corpus", spec.string(), "--csv", csv_path.string()}).code == kExitOk);
    std::ifstream csv(csv_path);
    std::string header;
    std::getline(csv, header);
    CHECK(header.find("statement,attempted") == 0);

    const auto bad = tmp.file("bad.json", R"({"seed": 1, "count": 0})");
    CHECK(cli({"corpus", bad.string()}).code == kExitError);
}

TEST_CASE("coeffs results are cached and hits match recomputation", "[cli]") {
    TempDir tmp;
    const auto file = tmp.file("m2.json", kM2Adic);
    const CliResult first = cli({"coeffs", file.string(), "--json"});
    REQUIRE(first.code == kExitOk);

    const fs::path cache_dir = tmp.path / "cache";
    REQUIRE(fs::exists(cache_dir));
    std::size_t entries = 0;
    for (const auto& entry : fs::directory_iterator(cache_dir)) {
        ++entries;
        (void)entry;
    }
    CHECK(entries == 1);

    const CliResult second = cli({"coeffs", file.string(), "--json"});
    CHECK(second.out == first.out);
    CHECK(cli({"coeffs", file.string(), "--json", "--no-cache"}).out == first.out);
}

TEST_CASE("cache spot check rejects tampered entries", "[cli]") {
    TempDir tmp;
    const GoodFiltration f = build_filtration(parse_filtration_input(
        Json::parse(R"({"vars":["x","y"],"base_ideal":["x^2","y^2"]})")));

    // steer the content hash (via the horizon cap) until the key lands in
    // the deterministic spot-check bucket
    FitConfig config;
    std::string key;
    for (int cap = 256; cap < 4096; ++cap) {
        config.horizon_cap = cap;
        key = ResultCache::key_for(canonical_instance_encoding(f, config));
        if (ResultCache::should_spot_check(key)) break;
    }
    REQUIRE(ResultCache::should_spot_check(key));

    const ResultCache cache(tmp.path / "spot");
    Json value = hilbert_to_json(fit_hilbert_data(f, config));
    value["coefficients"][0] = "9"; // tamper
    cache.store(key, value);

    std::optional<ResultCache> opt(cache);
    CHECK_THROWS_AS(cli_detail::fit_cached(f, config, opt), Error);

    // an honest entry passes the same gate
    cache.store(key, hilbert_to_json(fit_hilbert_data(f, config)));
    CHECK(hilbert_to_json(cli_detail::fit_cached(f, config, opt)) ==
          hilbert_to_json(fit_hilbert_data(f, config)));
}

TEST_CASE("fixtures command", "[cli]") {
    TempDir tmp;
    const CliResult listed = cli({"fixtures", "--list"});
    CHECK(listed.code == kExitOk);
    CHECK(listed.out.find("fit/m2-adic") != std::string::npos);
    CHECK(listed.out.find("bound/coeff-i3") != std::string::npos);

    const std::string golden_path = std::string(HILBFILT_SOURCE_DIR) + "/fixtures/golden.json";
    const CliResult run = cli({"fixtures", "--file", golden_path});
    CHECK(run.code == kExitOk);
    CHECK(run.out.find("fixtures match") != std::string::npos);

    // a corrupted golden file is a violation: exit 2 plus a diff
    std::ifstream in(golden_path);
    Json corrupted = Json::parse(in);
    corrupted["fit/m2-adic"]["e"][0] = "5";
    const auto bad = tmp.file("golden-bad.json", corrupted.dump());
    const CliResult broken = cli({"fixtures", "--file", bad.string()});
    CHECK(broken.code == kExitViolation);
    CHECK(broken.out.find("FAIL fit/m2-adic") != std::string::npos);
    CHECK(broken.out.find("expected") != std::string::npos);
}

TEST_CASE("version flag", "[cli]") {
    const CliResult r = cli({"--version"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("hilbfilt") != std::string::npos);
}
