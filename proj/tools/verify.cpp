#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "exalg/cdga.hpp"
#include "exalg/parser.hpp"
#include "exalg/suite.hpp"

namespace {

using json = nlohmann::json;
using namespace exalg;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

std::pair<int, int> parse_ell(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int a = std::stoi(s);
        return {a, a};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

// A user CDGA: parse the generators and differential, validate, and report
// its betti numbers. Algebra defects (inhomogeneous image, d^2 != 0, a bad
// expression) become a failing report rather than a usage error.
CheckReport descriptor_report(const json& doc, const std::string& path,
                              const FieldSpec& field) {
    CheckReport r;
    r.id = "descriptor";
    r.paper_ref = path;
    try {
        std::vector<GcaGenerator> gens;
        for (const auto& g : doc.at("generators")) {
            int deg = g.at("degree").get<int>();
            if (deg <= 0) {
                throw std::invalid_argument(
                    "descriptor: generator degrees must be positive");
            }
            gens.push_back({g.at("name").get<std::string>(), deg});
        }
        SigPtr sig = make_signature(gens);
        Params params;
        if (doc.contains("parameters")) {
            for (const auto& [k, v] : doc.at("parameters").items()) {
                params[k] = parse_rational(v.get<std::string>());
            }
        }
        std::vector<GcaElement> diff;
        const json dmap =
            doc.contains("differential") ? doc.at("differential") : json::object();
        for (const auto& g : gens) {
            if (dmap.contains(g.name)) {
                diff.push_back(
                    parse_gca(dmap.at(g.name).get<std::string>(), sig, params));
            } else {
                diff.push_back(GcaElement(sig));
            }
        }
        int N = doc.at("max_degree").get<int>();
        if (N < 0) throw std::invalid_argument("descriptor: max_degree < 0");
        CdgaSpec spec(sig, diff, field, params);
        auto betti = cohomology(spec, N).betti_numbers();
        json jb = json::array();
        std::ostringstream text;
        text << "betti";
        for (auto x : betti) {
            jb.push_back(x);
            text << " " << x;
        }
        r.status = CheckStatus::pass;
        r.witness_json = json{{"betti", jb},
                              {"field", field.name()},
                              {"max_degree", N}}
                             .dump();
        r.witness_text = text.str() + " over " + field.name();
    } catch (const std::exception& ex) {
        r.status = CheckStatus::fail;
        r.witness_json = json{{"error", ex.what()}}.dump();
        r.witness_text = ex.what();
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exalg: exact verification of the ruled-surface catalog"};
    std::string case_s = "both", regime_s = "both", format_s = "text";
    std::string checks_s = "all", ell_s = "1..3", out_path, descriptor_path;
    int max_degree = 40;
    std::vector<std::string> field_tags;
    bool timings = false;

    app.add_option("--case", case_s, "surface case: split, twisted or both")
        ->check(CLI::IsMember({"split", "twisted", "both"}));
    app.add_option("--ell", ell_s, "blow-up count range A..B (default 1..3)");
    app.add_option("--regime", regime_s,
                   "capacity regime: crit, subcrit or both")
        ->check(CLI::IsMember({"crit", "subcrit", "both"}));
    app.add_option("--max-degree", max_degree,
                   "series and decomposition degree bound (default 40)");
    app.add_option("--field", field_tags,
                   "coefficient fields, q or fp:P (default q fp:3)");
    app.add_option("--checks", checks_s,
                   "comma-separated check ids or prefixes, or all");
    app.add_option("--format", format_s, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write the report to a file");
    app.add_option("--descriptor", descriptor_path,
                   "JSON file with a user CDGA; reports its betti numbers "
                   "instead of running the suite");
    app.add_flag("--timings", timings, "record elapsed milliseconds");
    CLI11_PARSE(app, argc, argv);

    SuiteConfig cfg;
    cfg.surface_case = case_s == "split"     ? CaseSel::split
                       : case_s == "twisted" ? CaseSel::twisted
                                             : CaseSel::both;
    cfg.regime = regime_s == "crit"      ? RegimeSel::at_or_above_critical
                 : regime_s == "subcrit" ? RegimeSel::below_critical
                                         : RegimeSel::both;
    cfg.format = format_s == "json" ? ReportFormat::json : ReportFormat::text;
    cfg.max_degree = max_degree;
    cfg.timings = timings;

    try {
        auto [lo, hi] = parse_ell(ell_s);
        cfg.ell_min = lo;
        cfg.ell_max = hi;
        if (!field_tags.empty()) {
            cfg.fields.clear();
            for (const auto& tag : field_tags) {
                cfg.fields.push_back(parse_field(tag));
            }
        }
        if (checks_s != "all") cfg.selection = split_list(checks_s);

        std::vector<CheckReport> reports;
        if (!descriptor_path.empty()) {
            std::ifstream in(descriptor_path);
            if (!in) {
                throw std::invalid_argument("cannot open descriptor file " +
                                            descriptor_path);
            }
            reports.push_back(descriptor_report(json::parse(in),
                                                descriptor_path,
                                                cfg.fields.front()));
        } else {
            reports = run_suite(cfg);
        }

        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) {
                throw std::invalid_argument("cannot write report to " +
                                            out_path);
            }
            out = &file;
        }
        emit_report(reports, cfg, *out);
        return all_pass(reports) ? 0 : 1;
    } catch (const std::exception& ex) {
        std::cerr << "verify: " << ex.what() << "\n";
        return 2;
    }
}
