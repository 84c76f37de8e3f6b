#pragma once

#include "loewylab/group.hpp"
#include "loewylab/loewy.hpp"

namespace loewylab {

// Dimension subgroups kappa_1 >= kappa_2 >= ... >= 1 of a p-group:
// kappa_1 = P, and kappa_n is generated by [kappa_s, kappa_t] for s,t < n with
// s+t >= n together with p-th powers from kappa_r for r < n with pr >= n.
struct JenningsSeries {
    std::vector<Subgroup> kappas;  // kappa_1, kappa_2, ..., ending with the trivial group
    std::vector<int> layer_ranks;  // dim kappa_i / kappa_(i+1) over GF(p)

    const Subgroup& kappa(int i) const;  // 1-based, trivial beyond the computed tail
};

JenningsSeries jennings_series(const GroupPtr& g);

// q(t) = prod (1 + t^n + ... + t^((p-1)n))^(dim kappa_n/kappa_(n+1))
PoincarePolynomial jennings_poincare(const GroupPtr& g);
PoincarePolynomial jennings_poincare(const JenningsSeries& s, int p);

// r(t) = prod (1 + t^n + ... + t^((p-1)n))^(dim kappa_n/(kappa_n cap R)kappa_(n+1))
PoincarePolynomial alperin_poincare(const GroupPtr& g, const Subgroup& r);

}  // namespace loewylab
