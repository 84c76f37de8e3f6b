#pragma once

#include "loewylab/algebra.hpp"
#include "loewylab/loewy.hpp"

#include <optional>

namespace loewylab {

// kP^Q = kC ⋉ I with C = C_P(Q) and I spanned by the nontrivial orbit sums.
struct SplitDecomposition {
    Subgroup c;
    CentralizerBasis basis;
    Subspace i;        // span of the kappa_x
    Subspace j_prime;  // J(kC) inside kP
    // orbits of Omega under left multiplication by C; entries index basis.reps
    std::vector<std::vector<int>> omega_orbits;
    // stabilizer S_x of kappa_x in C and the commutator set S_x^† = {[q,x]},
    // both per representative
    std::vector<Subgroup> stabilizers;
    std::vector<std::vector<int>> s_dagger;

    std::size_t omega_size() const { return basis.reps.size(); }
    std::size_t orbit_count() const { return omega_orbits.size(); }
};

SplitDecomposition split(const GroupPtr& g, const Subgroup& q);

struct StarResult {
    bool group;   // for all x in P, c in C there is q in Q with [x, qc] in C
    bool linear;  // J'I = IJ' as subspaces
};
StarResult check_star(const GroupPtr& g, const Subgroup& q);

struct DstarResult {
    bool linear;  // I^2 contained in J'I
    // x, y outside C with Q = C_Q(x)C_Q(y) and C_Q(xy) = C_Q(x) cap C_Q(y)
    std::optional<std::pair<int, int>> witness;
};
DstarResult check_dstar(const GroupPtr& g, const Subgroup& q);

struct ConditionReport {
    bool star_group;
    bool star_linear;
    bool dstar_linear;
    std::optional<std::pair<int, int>> dstar_witness;
    bool pqq_trivial;  // [P,Q,Q] = 1
};
ConditionReport condition_report(const GroupPtr& g, const Subgroup& q);

bool pqq_trivial(const GroupPtr& g, const Subgroup& q);

// Structure constant of kappa_z in kappa_x kappa_y: zero unless z ~_Q q^-1 x q y
// for some q, in which case it counts |q^-1 S_{x^-1}^† q ∩ S_y^†|. When
// [P,Q,Q] = 1 the shortcut |[Q,x^-1] ∩ [Q,y]| is also computed and checked.
struct MuResult {
    int integer;
    std::uint8_t scalar;
    std::optional<int> shortcut;
};
MuResult mu_xyz(const GroupPtr& g, const Subgroup& q, int x, int y, int z);

enum class SymmetryCase { CaseA, CaseB, CaseC, NotSymmetric, Inapplicable };
std::string to_string(SymmetryCase c);

// Stabilizer-based symmetry test; requires both (*) and (**) and a non-central
// Q, otherwise Inapplicable.
SymmetryCase classify_symmetry(const GroupPtr& g, const Subgroup& q);

enum class RepresentationType { Finite, Infinite };

// Finite type exactly for cyclic P. For non-central Q the structural
// consequences (I not inside J^2, dim J/J^2 >= 2) are asserted.
RepresentationType representation_type(const GroupPtr& g, const Subgroup& q);

}  // namespace loewylab
