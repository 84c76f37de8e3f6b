#pragma once

#include "loewylab/group.hpp"

#include <string>
#include <vector>

namespace loewylab {

struct FamilyEntry {
    std::string spec;  // parseable by parse_group_spec
    GroupPtr group;
};

// Groups of one named family up to max_order. Families: dihedral,
// semidihedral, quaternion, modular, extraspecial, cyclic, abelian-index-p.
std::vector<FamilyEntry> family_groups(const std::string& family, int max_order);

// The built-in suite: every family above plus the small elementary abelian
// groups, filtered to max_order.
std::vector<FamilyEntry> family_suite(int max_order);

const std::vector<std::string>& family_names();

}  // namespace loewylab
