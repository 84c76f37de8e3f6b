#include "loewylab/config.hpp"
#include "loewylab/groupio.hpp"
#include "loewylab/groupspec.hpp"
#include "loewylab/report.hpp"
#include "loewylab/survey.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace loewylab;

int run_analyze(const std::string& group_spec, const std::string& subgroup_spec, bool verify,
                bool compact_json, bool csv) {
    GroupPtr g = parse_group_spec(group_spec);
    Subgroup q = parse_subgroup_spec(g, subgroup_spec);
    const AnalysisReport r = analyze_pair(g, q, group_spec, subgroup_spec);
    if (csv) {
        std::cout << survey_csv_header() << '\n' << survey_csv_row(r) << '\n';
    } else {
        std::cout << report_to_json(r).dump(compact_json ? -1 : 2) << '\n';
    }
    if (verify && !r.all_match()) return 1;
    return 0;
}

int run_survey(const std::string& family, int max_order, const std::string& catalog,
               const SurveyOptions& options, bool verify, bool csv) {
    SurveyResult result;
    std::vector<std::string> warnings;
    if (!catalog.empty()) {
        result = survey_catalog(catalog, options, &warnings);
    } else {
        result = survey_family(family, max_order, options);
    }
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    if (csv)
        std::cout << survey_to_csv(result);
    else
        std::cout << survey_to_json(result).dump(2) << '\n';
    if (verify && result.aggregates.prediction_mismatches > 0) return 1;
    return 0;
}

int run_ingest(const std::string& file) {
    const IngestReport report = ingest_validate(file);
    std::cout << report.detail << '\n';
    return report.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"loewylab: exact GF(p) workbench for centralizer algebras of p-groups"};
    app.require_subcommand(1);

    std::string group_spec, subgroup_spec;
    bool verify = false, compact_json = false, csv = false;
    auto* analyze = app.add_subcommand("analyze", "analyze one pair (P, Q)");
    analyze->add_option("--group", group_spec, "group spec, e.g. dihedral(16)")->required();
    analyze->add_option("--subgroup", subgroup_spec,
                        "subgroup generators, e.g. a^2 or 0,5 ('' = trivial, P = whole group)");
    analyze->add_flag("--verify", verify, "exit 1 if any prediction mismatches");
    analyze->add_flag("--json", compact_json, "compact single-line JSON");
    analyze->add_flag("--csv", csv, "CSV output");

    std::string family, catalog;
    int max_order = 64;
    SurveyOptions options;
    bool survey_verify = false, survey_csv = false;
    auto* survey = app.add_subcommand("survey", "scan a family or an ingested catalog");
    auto* fam_opt = survey->add_option("--family", family,
                                       "dihedral|semidihedral|quaternion|modular|extraspecial|"
                                       "cyclic|abelian-index-p");
    survey->add_option("--max-order", max_order, "largest group order (default 64)");
    auto* cat_opt =
        survey->add_option("--catalog", catalog, "directory of group .json files");
    survey->add_flag("--all-subgroups", options.all_subgroups,
                     "every subgroup Q (default: cyclic subgroups)");
    survey->add_option("--parallel", options.parallel, "worker threads (default 1)");
    survey->add_flag("--verify", survey_verify, "exit 1 if any prediction mismatches");
    survey->add_flag("--csv", survey_csv, "CSV output (default JSON)");
    fam_opt->excludes(cat_opt);

    std::string ingest_file;
    auto* ingest = app.add_subcommand("ingest", "validate a group file");
    ingest->add_option("--validate", ingest_file, "group file to validate")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed())
            return run_analyze(group_spec, subgroup_spec, verify, compact_json, csv);
        if (survey->parsed()) {
            if (family.empty() && catalog.empty()) {
                std::cerr << "survey: need --family or --catalog\n";
                return 2;
            }
            return run_survey(family, max_order, catalog, options, survey_verify, survey_csv);
        }
        if (ingest->parsed()) return run_ingest(ingest_file);
    } catch (const SpecParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
