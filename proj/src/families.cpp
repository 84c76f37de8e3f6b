#include "loewylab/families.hpp"

#include "loewylab/groupspec.hpp"

#include <stdexcept>

namespace loewylab {

namespace {

void add(std::vector<FamilyEntry>& out, const std::string& spec, int max_order) {
    GroupPtr g = parse_group_spec(spec);
    if (g->order() <= max_order) out.push_back({spec, std::move(g)});
}

long long ipow(int p, int n) {
    long long v = 1;
    for (int i = 0; i < n; ++i) v *= p;
    return v;
}

}  // namespace

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {
        "dihedral",     "semidihedral", "quaternion",     "modular",
        "extraspecial", "cyclic",       "abelian-index-p"};
    return names;
}

std::vector<FamilyEntry> family_groups(const std::string& family, int max_order) {
    std::vector<FamilyEntry> out;
    if (family == "dihedral") {
        for (int o = 8; o <= max_order; o *= 2) add(out, "dihedral(" + std::to_string(o) + ")", max_order);
    } else if (family == "semidihedral") {
        for (int o = 16; o <= max_order; o *= 2)
            add(out, "semidihedral(" + std::to_string(o) + ")", max_order);
    } else if (family == "quaternion") {
        for (int o = 8; o <= max_order; o *= 2)
            add(out, "quaternion(" + std::to_string(o) + ")", max_order);
    } else if (family == "modular") {
        for (const int p : {2, 3, 5, 7}) {
            for (int n = (p == 2 ? 4 : 3); ipow(p, n) <= max_order; ++n)
                add(out, "modular(" + std::to_string(p) + "," + std::to_string(n) + ")",
                    max_order);
        }
    } else if (family == "extraspecial") {
        for (const int p : {2, 3, 5, 7}) {
            for (int m = 1; ipow(p, 1 + 2 * m) <= max_order; ++m) {
                const std::string o = std::to_string(ipow(p, 1 + 2 * m));
                const char* kinds[2] = {p == 2 ? "plus" : "exponent-p",
                                        p == 2 ? "minus" : "exponent-p2"};
                add(out, "extraspecial(" + std::to_string(p) + "," + o + "," + kinds[0] + ")",
                    max_order);
                add(out, "extraspecial(" + std::to_string(p) + "," + o + "," + kinds[1] + ")",
                    max_order);
            }
        }
    } else if (family == "cyclic") {
        for (const int p : {2, 3, 5, 7}) {
            for (int n = 1; ipow(p, n) <= max_order; ++n)
                add(out, "cyclic(" + std::to_string(p) + "," + std::to_string(n) + ")",
                    max_order);
        }
    } else if (family == "abelian-index-p") {
        for (const int p : {2, 3, 5, 7}) {
            for (int n = 2; ipow(p, n) <= max_order; ++n)
                add(out,
                    "direct(cyclic(" + std::to_string(p) + "," + std::to_string(n - 1) +
                        "),cyclic(" + std::to_string(p) + ",1))",
                    max_order);
        }
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }
    return out;
}

std::vector<FamilyEntry> family_suite(int max_order) {
    std::vector<FamilyEntry> out;
    for (const auto& name : family_names()) {
        auto groups = family_groups(name, max_order);
        out.insert(out.end(), groups.begin(), groups.end());
    }
    // elementary abelian groups beyond rank 2 (rank 2 comes from abelian-index-p)
    add(out, "direct(direct(cyclic(2,1),cyclic(2,1)),cyclic(2,1))", max_order);
    return out;
}

}  // namespace loewylab
