#include <doctest.h>

#include <sstream>

#include "bkpvc/campaign.hpp"
#include "bkpvc/error.hpp"

using namespace bkpvc;

TEST_CASE("campaign finds no violations and records every trial") {
    for (const auto kind : {ForestKind::directed, ForestKind::undirected}) {
        CampaignConfig config;
        config.kind = kind;
        config.n_min = 2;
        config.n_max = 25;
        config.k_min = 2;
        config.k_max = 4;
        config.trials_per_cell = 10;
        config.seed = 99;
        std::size_t seen = 0;
        const auto report = run_campaign(config, [&](const TrialRecord&) { ++seen; });
        CHECK(report.trials == 24 * 3 * 10);
        CHECK(seen == report.trials);
        CHECK(report.violations == 0);
        for (const auto& r : report.records) {
            CHECK(r.gap.numerator >= 0);
            CHECK_FALSE(r.violation);
            CHECK(r.psi_b <= r.n);
        }
    }
}

TEST_CASE("campaign with the tight families reaches gap zero") {
    CampaignConfig config;
    config.kind = ForestKind::undirected;
    config.n_min = 2;
    config.n_max = 30;
    config.k_min = 2;
    config.k_max = 5;
    config.trials_per_cell = 2;
    config.include_extremal = true;
    const auto report = run_campaign(config);
    REQUIRE(report.min_gap);
    CHECK(report.min_gap->numerator == 0);
    std::size_t extremal = 0;
    for (const auto& r : report.records) {
        if (r.source == "extremal") {
            ++extremal;
            CHECK(r.gap.numerator == 0);
        }
    }
    // n = k(2i-1)+1 <= 30 for k=2..5: 7 + 5 + 4 + 3 members.
    CHECK(extremal == 19);
}

TEST_CASE("campaign output is reproducible") {
    CampaignConfig config;
    config.kind = ForestKind::directed;
    config.n_min = 1;
    config.n_max = 15;
    config.k_min = 2;
    config.k_max = 3;
    config.trials_per_cell = 4;
    config.seed = 2024;
    auto render = [&] {
        std::ostringstream out;
        const auto report = run_campaign(config, [&](const TrialRecord& r) { out << to_json(r).dump() << '\n'; });
        out << summary_json(report).dump() << '\n';
        for (const auto& r : report.records) out << to_csv(r) << '\n';
        return out.str();
    };
    CHECK(render() == render());
}

TEST_CASE("campaign parameter checks") {
    CampaignConfig config;
    config.kind = ForestKind::undirected;
    config.n_min = 1;
    config.n_max = 5;
    CHECK_THROWS_AS(run_campaign(config), Error);
    config.n_min = 6;
    CHECK_THROWS_AS(run_campaign(config), Error);
    config.n_min = 2;
    config.k_min = 1;
    CHECK_THROWS_AS(run_campaign(config), Error);
}

TEST_CASE("gap formatting") {
    CHECK(Gap{0, 1}.str() == "0");
    CHECK(Gap{3, 4}.str() == "3/4");
    CHECK(Gap{1, 4} < Gap{1, 2});
    CHECK(csv_header().find("psi_b") != std::string::npos);
}
