#pragma once

#include "loewylab/gfp.hpp"
#include "loewylab/group.hpp"

#include <vector>

namespace loewylab {

// The group algebra kP over GF(p), p = |P|-dividing prime. Elements are
// coefficient vectors indexed by group elements.
class GroupAlgebra {
public:
    explicit GroupAlgebra(GroupPtr g);

    const GroupPtr& group() const { return group_; }
    int prime() const { return p_; }
    std::size_t dim() const { return static_cast<std::size_t>(group_->order()); }

    FpVec zero() const { return FpVec(dim(), 0); }
    FpVec one() const;
    FpVec basis_element(int x) const;
    FpVec sum_of_group() const;  // sigma = sum of all group elements

    FpVec multiply(const FpVec& u, const FpVec& v) const;  // convolution
    std::uint8_t augmentation(const FpVec& u) const;
    FpVec conjugate(int q, const FpVec& u) const;  // q u q^-1 coordinate permutation
    std::vector<int> support(const FpVec& u) const;

    // indicator of the Q-conjugation orbit of x
    FpVec orbit_sum(const Subgroup& q, int x) const;

private:
    GroupPtr group_;
    int p_;
};

// Basis of the centralizer algebra kP^Q: the elements of C = C_P(Q) together
// with one orbit sum per nontrivial Q-orbit (representatives are the minimal
// element index in each orbit).
struct CentralizerBasis {
    Subgroup c;
    std::vector<int> reps;        // representatives of nontrivial orbits
    std::vector<FpVec> kappas;    // orbit sums, parallel to reps
    std::vector<int> orbit_sizes; // |^Qx|, parallel to reps

    std::size_t dim() const { return static_cast<std::size_t>(c.order()) + reps.size(); }
};

CentralizerBasis centralizer_basis(const GroupPtr& g, const Subgroup& q);

// A unital subalgebra of kP, held as a basis of coefficient vectors.
struct Subalgebra {
    GroupAlgebra ctx;
    Subspace span;

    std::size_t dim() const { return span.dim(); }
};

Subalgebra whole_group_algebra(const GroupPtr& g);
Subalgebra centralizer_subalgebra(const GroupPtr& g, const Subgroup& q);
Subalgebra centralizer_subalgebra(const GroupPtr& g, const CentralizerBasis& basis);
// kC embedded in kP
Subalgebra group_subalgebra(const GroupPtr& g, const Subgroup& c);
// span of orbit sums of a permutation action on group elements (each
// permutation must be multiplicative, e.g. an automorphism)
Subalgebra fixed_subalgebra(const GroupPtr& g, const std::vector<std::vector<int>>& perms);
// kN^Q = kN intersected with kP^Q, for any N <= P
Subalgebra restricted_centralizer(const GroupPtr& g, const Subgroup& n, const Subgroup& q);

// k[P/R] embedded in kP as the span of left-coset indicator vectors (a left
// ideal isomorphic to the coset permutation module).
Subspace coset_module(const GroupPtr& g, const Subgroup& r);

}  // namespace loewylab
