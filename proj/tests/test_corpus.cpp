#include "hilbfilt/corpus.hpp"
#include "hilbfilt/io.hpp"

#include <catch2/catch.hpp>

#include <fstream>

using namespace hilbfilt;

namespace {

std::string hex64(std::uint64_t v) {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(v));
    return buffer;
}

GenSpec small_spec(std::uint64_t seed, int count) {
    GenSpec spec;
    spec.seed = seed;
    spec.count = count;
    spec.ambient = IntRange{2, 3};
    return spec;
}

} // namespace

TEST_CASE("generator sequence matches the frozen vectors", "[corpus]") {
    std::ifstream in(std::string(HILBFILT_SOURCE_DIR) + "/tests/data/splitmix64_vectors.json");
    REQUIRE(in.good());
    const Json vectors = Json::parse(in);
    for (const auto& [seed_text, expected] : vectors.at("outputs").items()) {
        SplitMix64 rng(std::stoull(seed_text));
        for (const Json& hex : expected) REQUIRE(hex64(rng.next()) == hex.get<std::string>());
    }
    for (const auto& [key, expected] : vectors.at("substreams").items()) {
        const auto slash = key.find('/');
        SplitMix64 rng = SplitMix64::substream(std::stoull(key.substr(0, slash)),
                                               std::stoull(key.substr(slash + 1)));
        for (const Json& hex : expected) REQUIRE(hex64(rng.next()) == hex.get<std::string>());
    }
}

TEST_CASE("generated base ideals are always proper and m-primary", "[corpus]") {
    GenSpec spec;
    for (int k = 0; k < 200; ++k) {
        SplitMix64 rng = SplitMix64::substream(99, k);
        const int D = rng.range(2, 4);
        const MonomialIdeal ideal = gen_primary_ideal(spec, rng, D);
        REQUIRE(is_primary_to_max(ideal));
        REQUIRE_FALSE(ideal.is_unit());
    }
}

TEST_CASE("generated annihilators leave positive dimension", "[corpus]") {
    GenSpec spec;
    for (int k = 0; k < 200; ++k) {
        SplitMix64 rng = SplitMix64::substream(77, k);
        const int D = rng.range(2, 4);
        const MonomialIdeal j = gen_annihilator(spec, rng, D);
        REQUIRE_FALSE(j.is_unit());
        REQUIRE(krull_dim_of_quotient(j) >= 1);
    }
}

TEST_CASE("generated filtrations validate and reproduce from the seed", "[corpus]") {
    GenSpec spec;
    for (int k = 0; k < 60; ++k) {
        SplitMix64 rng = SplitMix64::substream(123, k);
        const int D = rng.range(2, 3);
        const ModulePresentation module = ModulePresentation::free_module(D);
        const MonomialIdeal base = gen_primary_ideal(spec, rng, D);
        const GoodFiltration f = gen_good_filtration(spec, rng, base, module);
        REQUIRE(GoodFiltration::validate(module, base, f.prefix()).ok());
        REQUIRE(f.reduction_number() <= f.prefix_length());

        SplitMix64 replay = SplitMix64::substream(123, k);
        REQUIRE(replay.range(2, 3) == D);
        REQUIRE(gen_primary_ideal(spec, replay, D) == base);
        REQUIRE(gen_good_filtration(spec, replay, base, module) == f);
    }
}

TEST_CASE("prefix length zero collapses to the adic filtration", "[corpus]") {
    GenSpec spec;
    spec.prefix_len = IntRange::fixed(0);
    SplitMix64 rng = SplitMix64::substream(5, 0);
    const ModulePresentation r2 = ModulePresentation::free_module(2);
    const MonomialIdeal base = gen_primary_ideal(spec, rng, 2);
    const GoodFiltration f = gen_good_filtration(spec, rng, base, r2);
    REQUIRE(f.prefix().size() == 1);
    REQUIRE(f.prefix()[0] == base);
    REQUIRE(f.reduction_number() == 0);
}

TEST_CASE("campaign on one instance holds everywhere", "[corpus]") {
    const CampaignReport report = run_campaign(small_spec(42, 1));
    CHECK(report.instances == 1);
    CHECK(report.violations.empty());
    CHECK(report.rejections.empty());
    CHECK(report.checks > 0);
    int attempted = 0;
    for (const auto& [id, tally] : report.statements) {
        attempted += tally.attempted;
        CHECK(tally.failed == 0);
        CHECK(tally.passed == tally.attempted);
    }
    CHECK(attempted == report.checks);
}

TEST_CASE("campaign spec validation", "[corpus]") {
    GenSpec bad = small_spec(1, 0);
    CHECK_THROWS_AS(run_campaign(bad), Error);
    bad = small_spec(1, 1);
    bad.ambient = IntRange{0, 2};
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = small_spec(1, 1);
    bad.ambient = IntRange{2, 9};
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = small_spec(1, 1);
    bad.max_pure_power = 0;
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("campaigns are deterministic given the seed", "[corpus]") {
    const GenSpec spec = small_spec(7, 12);
    CorpusOptions serial;
    serial.threads = 1;
    const CampaignReport a = run_campaign(spec, serial);
    const CampaignReport b = run_campaign(spec);
    Json ja = campaign_to_json(a);
    Json jb = campaign_to_json(b);
    ja.erase("timings");
    jb.erase("timings");
    REQUIRE(ja.dump() == jb.dump()); // thread count must not matter either
}

TEST_CASE("campaign with annihilators exercises positive h0", "[corpus]") {
    GenSpec spec = small_spec(11, 10);
    spec.with_annihilator = true;
    const CampaignReport report = run_campaign(spec);
    CHECK(report.violations.empty());
    REQUIRE(report.statements.count("LEMMA_2_4_I") == 1);
    REQUIRE(report.statements.count("LEMMA_2_5_I0") == 1);
    CHECK(report.statements.at("LEMMA_2_4_I").failed == 0);
}

TEST_CASE("complete-intersection draws trigger the parameter checks", "[corpus]") {
    GenSpec spec = small_spec(13, 20);
    spec.extra_gens = IntRange::fixed(0); // every base ideal is a pure-power CI
    const CampaignReport report = run_campaign(spec);
    CHECK(report.violations.empty());
    REQUIRE(report.statements.count("COR_3_5") == 1);
    REQUIRE(report.statements.count("LEMMA_2_6") == 1);
    CHECK(report.statements.at("LEMMA_2_6").attempted ==
          report.instances - static_cast<int>(report.rejections.size()));
}

TEST_CASE("campaigns reach the top of the default ambient range", "[corpus]") {
    GenSpec spec;
    spec.seed = 4444;
    spec.count = 2;
    spec.ambient = IntRange::fixed(4); // d = 4 needs the deepest horizons
    const CampaignReport report = run_campaign(spec);
    CHECK(report.violations.empty());
    CHECK(report.statements.count("THM_3_3_EI") == 1); // i in {3, 4} bounds exercised
}

TEST_CASE("campaign rejections are recorded, not failed", "[corpus]") {
    GenSpec spec = small_spec(17, 6);
    CorpusOptions options;
    options.fit.box_cap = 60; // far too small for the sampled horizons
    const CampaignReport report = run_campaign(spec, options);
    CHECK(report.violations.empty());
    CHECK_FALSE(report.rejections.empty());
    CHECK(static_cast<int>(report.rejections.size()) <= report.instances);
}
