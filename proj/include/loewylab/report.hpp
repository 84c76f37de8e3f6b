#pragma once

#include "loewylab/oracles.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace loewylab {

struct PredictionVerdict {
    Prediction prediction;
    bool match;
};

// Everything the workbench knows about one pair (P, Q).
struct AnalysisReport {
    std::string group_spec;
    std::string subgroup_spec;
    GroupPtr group;
    Subgroup q;

    int c_order = 0;
    int omega = 0;
    int orbit_count = 0;
    int algebra_dim = 0;
    LoewySeries series;
    int socle_dim = 0;
    bool symmetric = false;
    bool q_central = false;

    ConditionReport conditions{};
    SymmetryCase symmetry_case = SymmetryCase::Inapplicable;
    RepresentationType rep_type = RepresentationType::Infinite;

    PoincarePolynomial jennings_q;  // layers of kP
    PoincarePolynomial alperin_r;   // layers of k[P/Q]

    std::vector<PredictionVerdict> predictions;
    std::vector<BoundCheck> bounds;

    bool all_match() const;
};

AnalysisReport analyze_pair(const GroupPtr& g, const Subgroup& q, std::string group_spec = "",
                            std::string subgroup_spec = "");

nlohmann::ordered_json report_to_json(const AnalysisReport& r);

std::string survey_csv_header();
std::string survey_csv_row(const AnalysisReport& r);

}  // namespace loewylab
