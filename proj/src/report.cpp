#include "loewylab/report.hpp"

#include "loewylab/config.hpp"

#include <sstream>

namespace loewylab {

bool AnalysisReport::all_match() const {
    for (const auto& pv : predictions)
        if (!pv.match) return false;
    for (const auto& b : bounds)
        if (b.applicable && !b.holds) return false;
    return true;
}

AnalysisReport analyze_pair(const GroupPtr& g, const Subgroup& q, std::string group_spec,
                            std::string subgroup_spec) {
    AnalysisReport r;
    r.group_spec = group_spec.empty() ? g->name() : std::move(group_spec);
    r.subgroup_spec = std::move(subgroup_spec);
    r.group = g;
    r.q = q;

    const SplitDecomposition d = split(g, q);
    r.c_order = d.c.order();
    r.omega = static_cast<int>(d.omega_size());
    r.orbit_count = static_cast<int>(d.orbit_count());
    r.algebra_dim = r.c_order + r.omega;
    r.q_central = center(g).members.contains(q.members);
    if (static_cast<std::size_t>(g->order()) > limits().max_algebra_dim)
        throw std::invalid_argument("algebra computations for order " +
                                    std::to_string(g->order()) + " exceed the configured " +
                                    "maximum of " + std::to_string(limits().max_algebra_dim));

    const Subalgebra a = centralizer_subalgebra(g, d.basis);
    r.series = radical_series(a);
    r.socle_dim = static_cast<int>(socle(a).dim());
    r.symmetric = is_symmetric(r.series);

    r.conditions = condition_report(g, q);
    r.symmetry_case = classify_symmetry(g, q);
    r.rep_type = representation_type(g, q);

    r.jennings_q = jennings_poincare(g);
    r.alperin_r = alperin_poincare(g, q);

    const PoincarePolynomial computed = poincare(r.series);
    if (auto p = predict_extraspecial(g, q))
        r.predictions.push_back({*p, *p->layers == computed});
    if (auto p = predict_symmetry_extraspecial(g, q))
        r.predictions.push_back({*p, *p->flag == r.symmetric});
    if (auto p = predict_ll_abelian_normal(g, q))
        r.predictions.push_back({*p, *p->length == r.series.length()});
    if (auto p = predict_ll_maximal_cyclic(g, q))
        r.predictions.push_back({*p, *p->length == r.series.length()});
    {
        Prediction minimal;
        minimal.kind = "minimal-length";
        minimal.flag = check_minimal_ll(g, q, r.series);  // throws if the iff fails
        minimal.note = "ll = p criterion";
        r.predictions.push_back({minimal, true});
    }
    r.bounds = check_bounds(g, q, r.series);
    return r;
}

namespace {

nlohmann::ordered_json poly_json(const PoincarePolynomial& p) {
    return nlohmann::ordered_json(p.coeffs);
}

std::string join_ints(const std::vector<int>& v, char sep = ' ') {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

}  // namespace

nlohmann::ordered_json report_to_json(const AnalysisReport& r) {
    nlohmann::ordered_json doc;
    doc["schemaVersion"] = 1;
    doc["group"] = {{"spec", r.group_spec},
                    {"name", r.group->name()},
                    {"order", r.group->order()},
                    {"prime", r.group->prime()},
                    {"centerOrder", center(r.group).order()},
                    {"nilpotencyClass", nilpotency_class(r.group)},
                    {"exponent", r.group->exponent()}};
    doc["subgroup"] = {{"spec", r.subgroup_spec},
                       {"order", r.q.order()},
                       {"members", r.q.elements()},
                       {"central", r.q_central},
                       {"abelian", r.q.is_abelian()},
                       {"cyclic", r.q.is_cyclic()}};
    doc["centralizer"] = {{"order", r.c_order}};
    doc["algebra"] = {{"dim", r.algebra_dim},
                      {"dimC", r.c_order},
                      {"omega", r.omega},
                      {"omegaOrbits", r.orbit_count},
                      {"layerDims", r.series.layer_dims},
                      {"loewyLength", r.series.length()},
                      {"socleDim", r.socle_dim},
                      {"symmetric", r.symmetric}};
    nlohmann::ordered_json cond;
    cond["starGroup"] = r.conditions.star_group;
    cond["starLinear"] = r.conditions.star_linear;
    cond["dstarLinear"] = r.conditions.dstar_linear;
    if (r.conditions.dstar_witness)
        cond["dstarWitness"] = {r.conditions.dstar_witness->first,
                                r.conditions.dstar_witness->second};
    else
        cond["dstarWitness"] = nullptr;
    cond["pqqTrivial"] = r.conditions.pqq_trivial;
    doc["conditions"] = cond;
    doc["symmetryCase"] = to_string(r.symmetry_case);
    doc["representationType"] =
        r.rep_type == RepresentationType::Finite ? "finite" : "infinite";
    doc["jennings"] = {{"q", poly_json(r.jennings_q)},
                       {"qPalindromic", r.jennings_q.palindromic()},
                       {"r", poly_json(r.alperin_r)}};
    nlohmann::ordered_json preds = nlohmann::ordered_json::array();
    for (const auto& pv : r.predictions) {
        nlohmann::ordered_json p;
        p["kind"] = pv.prediction.kind;
        if (pv.prediction.layers) p["layers"] = poly_json(*pv.prediction.layers);
        if (pv.prediction.length) p["loewyLength"] = *pv.prediction.length;
        if (pv.prediction.flag) p["value"] = *pv.prediction.flag;
        p["note"] = pv.prediction.note;
        p["verdict"] = pv.match ? "match" : "mismatch";
        preds.push_back(std::move(p));
    }
    doc["predictions"] = preds;
    nlohmann::ordered_json bounds = nlohmann::ordered_json::array();
    for (const auto& b : r.bounds)
        bounds.push_back({{"name", b.name},
                          {"applicable", b.applicable},
                          {"holds", b.holds}});
    doc["bounds"] = bounds;
    doc["allMatch"] = r.all_match();
    return doc;
}

std::string survey_csv_header() {
    return "group,order,subgroup,subgroupOrder,central,dim,dimC,omega,omegaOrbits,"
           "loewyLength,layerDims,socleDim,symmetric,symmetryCase,starGroup,starLinear,"
           "dstarLinear,dstarWitness,pqqTrivial,representationType,predictedLength,"
           "lengthVerdict,predictedLayers,layersVerdict,allMatch";
}

std::string survey_csv_row(const AnalysisReport& r) {
    std::ostringstream os;
    auto field = [](const std::string& s) {
        if (s.find_first_of(",\"") == std::string::npos) return s;
        std::string out = "\"";
        for (const char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    };
    std::string pred_len = "", pred_len_verdict = "", pred_layers = "", pred_layers_verdict = "";
    for (const auto& pv : r.predictions) {
        if (pv.prediction.length) {
            pred_len = std::to_string(*pv.prediction.length);
            pred_len_verdict = pv.match ? "match" : "mismatch";
        }
        if (pv.prediction.layers) {
            std::vector<int> c(pv.prediction.layers->coeffs.begin(),
                               pv.prediction.layers->coeffs.end());
            pred_layers = join_ints(c);
            pred_layers_verdict = pv.match ? "match" : "mismatch";
        }
    }
    os << field(r.group_spec) << ',' << r.group->order() << ','
       << field(r.subgroup_spec.empty() ? join_ints(r.q.elements()) : r.subgroup_spec) << ','
       << r.q.order() << ',' << (r.q_central ? 1 : 0) << ',' << r.algebra_dim << ','
       << r.c_order << ',' << r.omega << ',' << r.orbit_count << ',' << r.series.length()
       << ',' << field(join_ints(r.series.layer_dims)) << ',' << r.socle_dim << ','
       << (r.symmetric ? 1 : 0) << ',' << to_string(r.symmetry_case) << ','
       << (r.conditions.star_group ? 1 : 0) << ',' << (r.conditions.star_linear ? 1 : 0) << ','
       << (r.conditions.dstar_linear ? 1 : 0) << ','
       << (r.conditions.dstar_witness
               ? field(std::to_string(r.conditions.dstar_witness->first) + " " +
                       std::to_string(r.conditions.dstar_witness->second))
               : "")
       << ',' << (r.conditions.pqq_trivial ? 1 : 0) << ','
       << (r.rep_type == RepresentationType::Finite ? "finite" : "infinite") << ','
       << pred_len << ',' << pred_len_verdict << ',' << field(pred_layers) << ','
       << pred_layers_verdict << ',' << (r.all_match() ? 1 : 0);
    return os.str();
}

}  // namespace loewylab
