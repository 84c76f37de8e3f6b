#pragma once

#include "loewylab/decomposition.hpp"
#include "loewylab/jennings.hpp"

#include <optional>
#include <string>

namespace loewylab {

// A closed-form prediction together with the hypothesis data that fired it.
// Predictions are only emitted when the hypotheses verifiably hold; the
// brute-force series they are checked against lives in loewy/.
struct Prediction {
    std::string kind;
    std::optional<PoincarePolynomial> layers;
    std::optional<int> length;
    std::optional<bool> flag;
    std::string note;
};

bool is_extraspecial(const GroupPtr& g);

// Layer dimensions of kP^Q for extraspecial P. The two displayed closed forms
// (C elementary abelian or not) are valid when p = 2 or C has exponent p; the
// general filtration formula q_C(t) + (|P:C|-1) t r_{C,Z}(t) covers every case
// and is cross-asserted against the closed form on its validity region.
std::optional<Prediction> predict_extraspecial(const GroupPtr& g, const Subgroup& q);

// Symmetry of the Loewy series of kP^Q for extraspecial P and non-central Q:
// symmetric exactly when p = 2 with C not elementary abelian, or p = 3 with C
// elementary abelian.
std::optional<Prediction> predict_symmetry_extraspecial(const GroupPtr& g, const Subgroup& q);

// ll(kP^Q) = ll(kC_P(Q)) for abelian Q with normal centralizer.
std::optional<Prediction> predict_ll_abelian_normal(const GroupPtr& g, const Subgroup& q);

// The four-case Loewy length tables for p-groups with a cyclic subgroup of
// index p, keyed on the shape of C_P(Q).
std::optional<Prediction> predict_ll_maximal_cyclic(const GroupPtr& g, const Subgroup& q);

enum class MaximalCyclicFamily { Cyclic, AbelianNoncyclic, Modular, DihedralLike };
struct MaximalCyclicInfo {
    MaximalCyclicFamily family;
    int n;  // |P| = p^n
};
std::optional<MaximalCyclicInfo> detect_maximal_cyclic(const GroupPtr& g);

// The fixed subalgebra of k<a> under a |a| = 2^(n-1), a -> a^(s l - 1), with
// l = 2^(n-2); spanned by 1, z = a^l and eta_i = a^i + a^(-i) z^(s i).
struct LambdaA {
    GroupPtr ambient;
    int s;
    int l;
    int z;
    Subalgebra algebra;
    std::vector<FpVec> delta;
};
LambdaA build_lambda_a(int n, int s);
// checks: delta spans, J^l = 0, zeta = a + a^3 + ... + a^(2l-1) is a nonzero
// element of J^(l-1), and every eta_i factors as eta_1 theta_i
bool verify_lemma_7_2(const LambdaA& lambda);

struct BoundCheck {
    std::string name;
    bool applicable;
    bool holds;
};
std::vector<BoundCheck> check_bounds(const GroupPtr& g, const Subgroup& q,
                                     const LoewySeries& computed);

// ll(kP^Q) = p exactly when C_P(Q) = ZP = <z> of order p and zx ~_Q x for all
// non-central x; asserts the equivalence against the computed length.
bool check_minimal_ll(const GroupPtr& g, const Subgroup& q, const LoewySeries& computed);

// Loewy length of the group algebra of a p-group, through its dimension
// subgroups (degree of q(t) plus one).
int group_algebra_loewy_length(const GroupPtr& g);
// ll(k C) for a subgroup C, through the same route
int subgroup_algebra_loewy_length(const Subgroup& c);

bool has_cyclic_maximal_subgroup(const GroupPtr& g);
int log_prime(int p, int n);

}  // namespace loewylab
