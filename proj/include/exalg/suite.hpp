#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "exalg/field.hpp"

namespace exalg {

// The theorem suite: every check draws its objects from the catalog, runs a
// computation against an independently stated expectation, and reports one
// line. Checks are pure functions of the config; nothing is cached across
// them, so a failure reproduces in isolation.

enum class CaseSel { split, twisted, both };
enum class RegimeSel { at_or_above_critical, below_critical, both };
enum class ReportFormat { text, json };

struct SuiteConfig {
    CaseSel surface_case = CaseSel::both;
    int ell_min = 1;
    int ell_max = 3;
    RegimeSel regime = RegimeSel::both;
    int max_degree = 40;
    std::vector<FieldSpec> fields = {FieldSpec::rationals(),
                                     FieldSpec::prime(3)};
    // no value runs everything; an explicit empty list runs nothing. Each
    // token must match a check id exactly or be a dash-separated prefix of
    // one; unknown tokens are rejected before any computation starts.
    std::optional<std::vector<std::string>> selection;
    ReportFormat format = ReportFormat::text;
    bool timings = false;
    // test hook: perturbs the blow-up relation fed to the blow-down checks,
    // which must then fail with a non-divisibility witness
    bool perturb_blowdown = false;
};

enum class CheckStatus { pass, fail, skip };

struct CheckReport {
    std::string id;
    std::string paper_ref;
    CheckStatus status = CheckStatus::pass;
    std::string witness_text;  // the one-line summary used by the text format
    std::string witness_json;  // canonical serialized object, sorted keys
    long elapsed_ms = 0;       // stays 0 unless the config asks for timings
};

// Runs the selected checks and returns reports sorted by id. Throws
// std::invalid_argument for an invalid config (bad ranges, unknown selection
// tokens) before running anything.
std::vector<CheckReport> run_suite(const SuiteConfig& cfg);

bool all_pass(const std::vector<CheckReport>& reports);

// text: one line per check, "STATUS  id  witness". json: the full report
// document, sorted keys, byte-stable for a fixed config.
void emit_report(const std::vector<CheckReport>& reports,
                 const SuiteConfig& cfg, std::ostream& out);

}  // namespace exalg
