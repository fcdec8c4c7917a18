#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "exalg/suite.hpp"

using namespace exalg;

namespace {

const CheckReport* find_report(const std::vector<CheckReport>& reports,
                               const std::string& id) {
    for (const auto& r : reports) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

std::vector<std::string> ids_of_status(const std::vector<CheckReport>& reports,
                                       CheckStatus s) {
    std::vector<std::string> out;
    for (const auto& r : reports) {
        if (r.status == s) out.push_back(r.id);
    }
    return out;
}

}  // namespace

TEST_CASE("the default run exercises the whole catalog") {
    SuiteConfig cfg;
    auto reports = run_suite(cfg);
    CHECK(reports.size() == 105);
    CHECK(std::is_sorted(reports.begin(), reports.end(),
                         [](const CheckReport& a, const CheckReport& b) {
                             return a.id < b.id;
                         }));
    for (std::size_t j = 1; j < reports.size(); ++j) {
        CHECK(reports[j].id != reports[j - 1].id);
    }

    // the two statements the suite cannot confirm, reported honestly
    auto fails = ids_of_status(reports, CheckStatus::fail);
    REQUIRE(fails.size() == 2);
    CHECK(fails[0] == "lemma-5.4-tor-l3-f3");
    CHECK(fails[1] == "thm-3.1-fiber-series-l1-i0");
    CHECK(ids_of_status(reports, CheckStatus::skip).empty());
    CHECK(!all_pass(reports));

    const CheckReport* cov = find_report(reports, "catalog-coverage");
    REQUIRE(cov != nullptr);
    CHECK(cov->status == CheckStatus::pass);
    CHECK(cov->witness_text == "21 of 21 catalog entries exercised");

    const CheckReport* tor3 = find_report(reports, "lemma-5.4-tor-l3-f3");
    REQUIRE(tor3 != nullptr);
    CHECK(tor3->witness_json.find("\"total_degree\":12") != std::string::npos);

    const CheckReport* fiber =
        find_report(reports, "thm-3.1-fiber-series-l1-i0");
    REQUIRE(fiber != nullptr);
    CHECK(fiber->witness_json.find("\"degree\":4") != std::string::npos);
    CHECK(fiber->witness_text.find("model 1, series 2") != std::string::npos);

    // every report keeps elapsed at zero unless timings were requested
    for (const auto& r : reports) CHECK(r.elapsed_ms == 0);
}

TEST_CASE("the tor check reports the stated witness") {
    SuiteConfig cfg;
    cfg.ell_max = 1;
    cfg.max_degree = 12;
    cfg.selection = std::vector<std::string>{"lemma-5.4-tor-l1-q"};
    auto reports = run_suite(cfg);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].status == CheckStatus::pass);
    CHECK(reports[0].paper_ref == "Lemma 5.4");
    CHECK(reports[0].witness_text == "ℓ=1 deg=4 rank=1 (class xy)");
    CHECK(reports[0].witness_json.find("\"ranks\":{\"0\":1}") !=
          std::string::npos);
    CHECK(reports[0].witness_json.find("\"total_degree\":4") !=
          std::string::npos);
}

TEST_CASE("selection picks by id or dash prefix and rejects strangers") {
    SuiteConfig cfg;
    cfg.selection = std::vector<std::string>{"cor-7.5"};
    auto reports = run_suite(cfg);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].id == "cor-7.5-tensor-quotient");
    CHECK(reports[1].id == "cor-7.5-z2-dominance");
    CHECK(all_pass(reports));

    cfg.selection = std::vector<std::string>{"cor-7.5-z2-dominance"};
    CHECK(run_suite(cfg).size() == 1);

    // an empty selection runs nothing and counts as success
    cfg.selection = std::vector<std::string>{};
    auto empty = run_suite(cfg);
    CHECK(empty.empty());
    CHECK(all_pass(empty));

    cfg.selection = std::vector<std::string>{"lemma-5.4-tor", "nonsense"};
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
    // prefixes must sit on a dash boundary
    cfg.selection = std::vector<std::string>{"cor-7"};
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("invalid configs are rejected before any computation") {
    SuiteConfig cfg;
    cfg.ell_min = 0;
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);

    cfg = SuiteConfig{};
    cfg.ell_max = 2;
    cfg.ell_min = 3;
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);

    cfg = SuiteConfig{};
    cfg.max_degree = 20;  // needs 2*(4*3+2) = 28
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);

    cfg = SuiteConfig{};
    cfg.fields.clear();
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("reports are byte-stable across runs") {
    SuiteConfig cfg;
    cfg.ell_max = 1;
    cfg.max_degree = 14;
    cfg.selection = std::vector<std::string>{"lemma-5.4-tor", "cor-7.5",
                                             "thm-b.8-blowdown"};
    cfg.format = ReportFormat::json;
    std::ostringstream a, b;
    emit_report(run_suite(cfg), cfg, a);
    emit_report(run_suite(cfg), cfg, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("\"suite\": \"exalg\"") != std::string::npos);
    CHECK(a.str().find("\"status\": \"pass\"") != std::string::npos);

    cfg.format = ReportFormat::text;
    std::ostringstream t1, t2;
    emit_report(run_suite(cfg), cfg, t1);
    emit_report(run_suite(cfg), cfg, t2);
    CHECK(t1.str() == t2.str());
    CHECK(t1.str().rfind("PASS  cor-7.5-tensor-quotient  ", 0) == 0);
}

TEST_CASE("an empty report list still emits a valid document") {
    SuiteConfig cfg;
    cfg.selection = std::vector<std::string>{};
    cfg.format = ReportFormat::json;
    std::ostringstream out;
    emit_report(run_suite(cfg), cfg, out);
    CHECK(out.str().find("\"checks\": []") != std::string::npos);
}

TEST_CASE("a perturbed relation fails the blow-down with a divisibility witness") {
    SuiteConfig cfg;
    cfg.ell_max = 2;
    cfg.max_degree = 20;
    cfg.perturb_blowdown = true;
    cfg.selection = std::vector<std::string>{"thm-b.8-blowdown"};
    auto reports = run_suite(cfg);
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) {
        CHECK(r.status == CheckStatus::fail);
        CHECK(r.witness_text.find("not a multiple") != std::string::npos);
        CHECK(r.witness_json.find("error") != std::string::npos);
    }
    CHECK(!all_pass(reports));

    // the same selection passes without the hook
    cfg.perturb_blowdown = false;
    CHECK(all_pass(run_suite(cfg)));
}

TEST_CASE("the tor check skips the excluded prime") {
    SuiteConfig cfg;
    cfg.ell_max = 1;
    cfg.max_degree = 12;
    cfg.fields = {FieldSpec::prime(2)};
    cfg.selection = std::vector<std::string>{"lemma-5.4-tor"};
    auto reports = run_suite(cfg);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].id == "lemma-5.4-tor-l1-f2");
    CHECK(reports[0].status == CheckStatus::skip);
    CHECK(reports[0].witness_text == "stated for p != 2");
    CHECK(all_pass(reports));  // a skip is not a failure
}

TEST_CASE("restricted configs report partial catalog coverage as a skip") {
    SuiteConfig cfg;
    cfg.surface_case = CaseSel::split;
    cfg.ell_max = 1;
    cfg.max_degree = 16;
    auto reports = run_suite(cfg);
    const CheckReport* cov = find_report(reports, "catalog-coverage");
    REQUIRE(cov != nullptr);
    CHECK(cov->status == CheckStatus::skip);
    CHECK(cov->witness_text.find("(restricted config)") != std::string::npos);
    CHECK(cov->witness_json.find("twisted-base") != std::string::npos);

    // no twisted checks sneak into a split-only run
    for (const auto& r : reports) {
        CHECK(r.id.find("twisted") == std::string::npos);
        CHECK(r.id.find("-i1") == std::string::npos);
    }
}

TEST_CASE("field tags parse and reject junk") {
    CHECK(parse_field("q").is_rationals());
    CHECK(parse_field("fp:3") == FieldSpec::prime(3));
    CHECK(parse_field("fp:101") == FieldSpec::prime(101));
    CHECK_THROWS_AS(parse_field("fp:4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("f3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("fp:"), std::invalid_argument);
}
