#include "loewylab/groupio.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace loewylab {

namespace {

using nlohmann::json;

GroupPtr from_json(const json& doc, const std::string& origin) {
    if (doc.contains("table")) {
        const auto table = doc.at("table").get<std::vector<std::vector<int>>>();
        if (doc.contains("order") &&
            doc.at("order").get<std::size_t>() != table.size())
            throw std::invalid_argument(origin + ": declared order does not match the table");
        std::vector<std::string> labels;
        if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
        const std::string name =
            doc.contains("name") ? doc.at("name").get<std::string>() : origin;
        return Group::from_table(name, table, std::move(labels));
    }
    if (doc.contains("generators")) {
        const int degree = doc.at("degree").get<int>();
        const auto gens = doc.at("generators").get<std::vector<std::vector<int>>>();
        return from_permutation_generators(degree, gens);
    }
    throw std::invalid_argument(origin + ": expected a 'table' or 'generators' field");
}

}  // namespace

GroupPtr load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open group file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": invalid JSON: " + e.what());
    }
    return from_json(doc, path);
}

std::string group_to_json(const GroupPtr& g) {
    nlohmann::ordered_json doc;
    doc["name"] = g->name();
    doc["order"] = g->order();
    std::vector<std::vector<int>> table(g->order(), std::vector<int>(g->order()));
    for (int i = 0; i < g->order(); ++i)
        for (int j = 0; j < g->order(); ++j) table[i][j] = g->mul(i, j);
    doc["table"] = table;
    if (!g->labels().empty()) {
        std::vector<std::string> labels;
        for (int i = 0; i < g->order(); ++i) labels.push_back(g->label(i));
        doc["labels"] = labels;
    }
    return doc.dump();
}

IngestReport ingest_validate(const std::string& path) {
    GroupPtr g;
    try {
        g = load_group_file(path);
    } catch (const std::exception& e) {
        return {false, e.what(), nullptr};
    }
    std::ostringstream os;
    os << "ok, order " << g->order();
    if (g->prime()) {
        os << ", prime " << g->prime() << ", class " << nilpotency_class(g);
    } else {
        os << ", not a prime-power order";
    }
    os << ", center " << center(g).order() << ", exponent " << g->exponent();
    return {true, os.str(), g};
}

}  // namespace loewylab
