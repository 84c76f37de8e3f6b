#pragma once

#include "loewylab/group.hpp"

#include <stdexcept>
#include <string>

namespace loewylab {

struct SpecParseError : std::runtime_error {
    SpecParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at column " + std::to_string(position + 1) + ")"),
          pos(position) {}
    std::size_t pos;
};

// Grammar: cyclic(p,n) | dihedral(N) | semidihedral(N) | quaternion(N) |
// modular(p,n) | extraspecial(p,N,kind) | direct(spec,spec) |
// central(spec,spec) | file(path)
GroupPtr parse_group_spec(const std::string& text);

// Comma-separated element indices or words in the group's designated
// generators ("a^2,b"); "" is the trivial subgroup and "P" the whole group.
Subgroup parse_subgroup_spec(const GroupPtr& g, const std::string& text);

}  // namespace loewylab
