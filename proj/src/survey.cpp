#include "loewylab/survey.hpp"

#include "loewylab/families.hpp"
#include "loewylab/groupio.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>
#include <thread>

namespace loewylab {

namespace {

std::vector<Subgroup> subgroup_pool(const GroupPtr& g, bool all) {
    if (all) return all_subgroups(g);
    std::set<IndexSet> seen;
    std::vector<Subgroup> out;
    for (int x = 0; x < g->order(); ++x) {
        const int gens[1] = {x};
        Subgroup h = subgroup_generated(g, gens);
        if (seen.insert(h.members).second) out.push_back(std::move(h));
    }
    return out;
}

std::string subgroup_label(const GroupPtr& g, const Subgroup& h) {
    if (h.is_trivial()) return "1";
    if (h.is_whole_group()) return "P";
    // generator list: greedy minimal elements
    std::vector<int> gens;
    Subgroup cur = trivial_subgroup(g);
    for (const int x : h.elements()) {
        if (cur.contains(x)) continue;
        gens.push_back(x);
        std::vector<int> all(gens);
        cur = subgroup_generated(g, all);
        if (cur.members == h.members) break;
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ",";
        os << gens[i];
    }
    return os.str();
}

}  // namespace

SurveyResult survey_groups(const std::vector<std::pair<std::string, GroupPtr>>& groups,
                           const SurveyOptions& options) {
    struct PairTask {
        std::string spec;
        GroupPtr group;
        Subgroup q;
        std::string q_label;
        bool q_class_rep;
    };
    std::vector<PairTask> tasks;
    for (const auto& [spec, g] : groups) {
        auto subs = subgroup_pool(g, options.all_subgroups);
        const auto classes = subgroup_conjugacy_classes(g, subs);
        std::vector<char> is_rep(subs.size(), 0);
        for (const auto& cls : classes) is_rep[cls.front()] = 1;
        for (std::size_t i = 0; i < subs.size(); ++i)
            tasks.push_back({spec, g, subs[i], subgroup_label(g, subs[i]),
                             static_cast<bool>(is_rep[i])});
    }

    std::vector<AnalysisReport> rows(tasks.size());
    const int threads = std::max(1, options.parallel);
    auto worker = [&](int t) {
        for (std::size_t i = t; i < tasks.size(); i += threads)
            rows[i] = analyze_pair(tasks[i].group, tasks[i].q, tasks[i].spec, tasks[i].q_label);
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    SurveyResult out;
    out.rows = std::move(rows);
    SurveyAggregates& agg = out.aggregates;
    for (std::size_t i = 0; i < out.rows.size(); ++i) {
        const AnalysisReport& r = out.rows[i];
        ++agg.pairs;
        if (r.q.order() > 1) ++agg.pairs_excluding_trivial;
        if (!r.q.is_whole_group()) ++agg.pairs_excluding_whole;
        if (r.q.order() > 1 && !r.q.is_whole_group()) ++agg.pairs_proper_nontrivial;
        if (tasks[i].q_class_rep) ++agg.subgroup_classes_pairs;
        if (!r.conditions.star_linear) ++agg.star_failures;
        if (!r.conditions.dstar_linear) ++agg.dstar_failures;
        if (r.conditions.dstar_witness) ++agg.dstar_witnesses;
        if (r.symmetric) ++agg.symmetric_pairs;
        if (!r.all_match()) ++agg.prediction_mismatches;
        const long long q2 = static_cast<long long>(r.q.order()) * r.q.order();
        const long long c2 = static_cast<long long>(r.c_order) * r.c_order;
        if (!r.conditions.star_linear &&
            (q2 > r.group->order() || c2 < r.group->order()))
            ++agg.star_conjecture_violations;
        const int ll_kc = subgroup_algebra_loewy_length(centralizer(r.group, r.q));
        if (r.series.length() != ll_kc && ll_kc > r.omega - 1) ++agg.omega_bound_violations;
    }
    return out;
}

SurveyResult survey_family(const std::string& family, int max_order,
                           const SurveyOptions& options) {
    std::vector<std::pair<std::string, GroupPtr>> groups;
    for (auto& e : family_groups(family, max_order)) groups.emplace_back(e.spec, e.group);
    return survey_groups(groups, options);
}

SurveyResult survey_catalog(const std::string& directory, const SurveyOptions& options,
                            std::vector<std::string>* warnings) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(directory)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    std::vector<std::pair<std::string, GroupPtr>> groups;
    for (const auto& f : files) {
        try {
            groups.emplace_back(std::filesystem::path(f).filename().string(),
                                load_group_file(f));
        } catch (const std::exception& e) {
            if (warnings) warnings->push_back(std::string("skipped ") + f + ": " + e.what());
        }
    }
    return survey_groups(groups, options);
}

namespace {

nlohmann::ordered_json aggregates_json(const SurveyAggregates& a) {
    return {{"pairs", a.pairs},
            {"pairsExcludingTrivialQ", a.pairs_excluding_trivial},
            {"pairsExcludingWholeQ", a.pairs_excluding_whole},
            {"pairsProperNontrivialQ", a.pairs_proper_nontrivial},
            {"pairsUpToSubgroupConjugacy", a.subgroup_classes_pairs},
            {"starFailures", a.star_failures},
            {"dstarFailures", a.dstar_failures},
            {"dstarWitnesses", a.dstar_witnesses},
            {"symmetricPairs", a.symmetric_pairs},
            {"predictionMismatches", a.prediction_mismatches},
            {"starConjectureViolations", a.star_conjecture_violations},
            {"omegaBoundViolations", a.omega_bound_violations}};
}

}  // namespace

std::string survey_to_csv(const SurveyResult& result) {
    std::ostringstream os;
    os << survey_csv_header() << '\n';
    for (const auto& r : result.rows) os << survey_csv_row(r) << '\n';
    const auto agg = aggregates_json(result.aggregates);
    for (const auto& [key, value] : agg.items())
        os << "# " << key << " = " << value << '\n';
    return os.str();
}

nlohmann::ordered_json survey_to_json(const SurveyResult& result) {
    nlohmann::ordered_json doc;
    doc["schemaVersion"] = 1;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : result.rows) rows.push_back(report_to_json(r));
    doc["rows"] = rows;
    doc["aggregates"] = aggregates_json(result.aggregates);
    return doc;
}

}  // namespace loewylab
