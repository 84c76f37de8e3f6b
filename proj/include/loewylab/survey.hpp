#pragma once

#include "loewylab/report.hpp"

#include <string>
#include <vector>

namespace loewylab {

struct SurveyOptions {
    bool all_subgroups = false;  // default: cyclic subgroups only
    int parallel = 1;
};

struct SurveyAggregates {
    long pairs = 0;
    long pairs_excluding_trivial = 0;
    long pairs_excluding_whole = 0;
    long pairs_proper_nontrivial = 0;
    long subgroup_classes_pairs = 0;  // Q counted up to P-conjugacy
    long star_failures = 0;
    long dstar_failures = 0;
    long dstar_witnesses = 0;
    long symmetric_pairs = 0;
    long prediction_mismatches = 0;
    // report-only counters for the open conjectures
    long star_conjecture_violations = 0;  // star fails though |Q|^2 > |P| or |C|^2 < |P|
    long omega_bound_violations = 0;      // lengths differ but ll(kC) > |Omega|-1
};

struct SurveyResult {
    std::vector<AnalysisReport> rows;
    SurveyAggregates aggregates;
};

SurveyResult survey_groups(const std::vector<std::pair<std::string, GroupPtr>>& groups,
                           const SurveyOptions& options);
SurveyResult survey_family(const std::string& family, int max_order,
                           const SurveyOptions& options);
// every .json file in the directory, sorted by filename
SurveyResult survey_catalog(const std::string& directory, const SurveyOptions& options,
                            std::vector<std::string>* warnings = nullptr);

std::string survey_to_csv(const SurveyResult& result);
nlohmann::ordered_json survey_to_json(const SurveyResult& result);

}  // namespace loewylab
