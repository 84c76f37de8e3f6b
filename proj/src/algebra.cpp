#include "loewylab/algebra.hpp"

#include <queue>
#include <stdexcept>

namespace loewylab {

GroupAlgebra::GroupAlgebra(GroupPtr g) : group_(std::move(g)), p_(group_->prime()) {
    if (p_ == 0)
        throw std::invalid_argument("GroupAlgebra: the group is not a p-group");
}

FpVec GroupAlgebra::one() const { return basis_element(0); }

FpVec GroupAlgebra::basis_element(int x) const {
    FpVec v = zero();
    v[x] = 1;
    return v;
}

FpVec GroupAlgebra::sum_of_group() const { return FpVec(dim(), 1); }

FpVec GroupAlgebra::multiply(const FpVec& u, const FpVec& v) const {
    if (u.size() != dim() || v.size() != dim())
        throw std::invalid_argument("GroupAlgebra::multiply: dimension mismatch");
    FpVec w = zero();
    const int n = group_->order();
    for (int i = 0; i < n; ++i) {
        const int ui = u[i];
        if (!ui) continue;
        for (int j = 0; j < n; ++j) {
            const int vj = v[j];
            if (!vj) continue;
            auto& slot = w[group_->mul(i, j)];
            slot = static_cast<std::uint8_t>((slot + ui * vj) % p_);
        }
    }
    return w;
}

std::uint8_t GroupAlgebra::augmentation(const FpVec& u) const {
    int s = 0;
    for (const auto e : u) s += e;
    return static_cast<std::uint8_t>(s % p_);
}

FpVec GroupAlgebra::conjugate(int q, const FpVec& u) const {
    FpVec w = zero();
    const int n = group_->order();
    for (int x = 0; x < n; ++x)
        if (u[x]) w[group_->conj(q, x)] = u[x];
    return w;
}

std::vector<int> GroupAlgebra::support(const FpVec& u) const {
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(u.size()); ++i)
        if (u[i]) s.push_back(i);
    return s;
}

FpVec GroupAlgebra::orbit_sum(const Subgroup& q, int x) const {
    FpVec v = zero();
    std::queue<int> work;
    work.push(x);
    v[x] = 1;
    const auto qelems = q.elements();
    while (!work.empty()) {
        const int y = work.front();
        work.pop();
        for (const int c : qelems) {
            const int z = group_->conj(c, y);
            if (!v[z]) { v[z] = 1; work.push(z); }
        }
    }
    return v;
}

CentralizerBasis centralizer_basis(const GroupPtr& g, const Subgroup& q) {
    if (q.parent != g)
        throw std::invalid_argument("centralizer_basis: subgroup of another group");
    GroupAlgebra a(g);
    CentralizerBasis out{centralizer(g, q), {}, {}, {}};
    const auto orbits = q_orbits(g, q);
    for (const auto& orbit : orbits) {
        if (orbit.size() == 1) continue;  // orbit of a centralizer element
        out.reps.push_back(orbit.front());
        FpVec kappa = a.zero();
        for (const int x : orbit) kappa[x] = 1;
        out.kappas.push_back(std::move(kappa));
        out.orbit_sizes.push_back(static_cast<int>(orbit.size()));
    }
    return out;
}

Subalgebra whole_group_algebra(const GroupPtr& g) {
    GroupAlgebra ctx(g);
    std::vector<FpVec> rows;
    rows.reserve(ctx.dim());
    for (int x = 0; x < g->order(); ++x) rows.push_back(ctx.basis_element(x));
    return {ctx, Subspace::span(ctx.prime(), ctx.dim(), rows)};
}

Subalgebra centralizer_subalgebra(const GroupPtr& g, const Subgroup& q) {
    return centralizer_subalgebra(g, centralizer_basis(g, q));
}

Subalgebra centralizer_subalgebra(const GroupPtr& g, const CentralizerBasis& basis) {
    GroupAlgebra ctx(g);
    std::vector<FpVec> rows;
    for (const int c : basis.c.elements()) rows.push_back(ctx.basis_element(c));
    for (const auto& kappa : basis.kappas) rows.push_back(kappa);
    return {ctx, Subspace::span(ctx.prime(), ctx.dim(), rows)};
}

Subalgebra group_subalgebra(const GroupPtr& g, const Subgroup& c) {
    GroupAlgebra ctx(g);
    std::vector<FpVec> rows;
    for (const int x : c.elements()) rows.push_back(ctx.basis_element(x));
    return {ctx, Subspace::span(ctx.prime(), ctx.dim(), rows)};
}

Subalgebra fixed_subalgebra(const GroupPtr& g, const std::vector<std::vector<int>>& perms) {
    GroupAlgebra ctx(g);
    const int n = g->order();
    for (const auto& p : perms) {
        if (static_cast<int>(p.size()) != n)
            throw std::invalid_argument("fixed_subalgebra: permutation length mismatch");
        if (p[0] != 0)
            throw std::invalid_argument("fixed_subalgebra: permutation must fix the identity");
    }
    std::vector<char> seen(n, 0);
    std::vector<FpVec> rows;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        FpVec v = ctx.zero();
        std::queue<int> work;
        seen[x] = 1;
        v[x] = 1;
        work.push(x);
        while (!work.empty()) {
            const int y = work.front();
            work.pop();
            for (const auto& p : perms) {
                const int z = p[y];
                if (!seen[z]) { seen[z] = 1; v[z] = 1; work.push(z); }
            }
        }
        rows.push_back(std::move(v));
    }
    return {ctx, Subspace::span(ctx.prime(), ctx.dim(), rows)};
}

Subalgebra restricted_centralizer(const GroupPtr& g, const Subgroup& n, const Subgroup& q) {
    GroupAlgebra ctx(g);
    std::vector<FpVec> rows;
    std::vector<char> done(g->order(), 0);
    for (const int x : n.elements()) {
        if (done[x]) continue;
        FpVec kappa = ctx.orbit_sum(q, x);
        bool inside = true;
        for (const int y : ctx.support(kappa)) {
            done[y] = 1;
            if (!n.contains(y)) inside = false;
        }
        if (inside) rows.push_back(std::move(kappa));
    }
    return {ctx, Subspace::span(ctx.prime(), ctx.dim(), rows)};
}

Subspace coset_module(const GroupPtr& g, const Subgroup& r) {
    GroupAlgebra ctx(g);
    std::vector<char> done(g->order(), 0);
    std::vector<FpVec> rows;
    for (int x = 0; x < g->order(); ++x) {
        if (done[x]) continue;
        FpVec v = ctx.zero();
        for (const int m : r.elements()) {
            const int y = g->mul(x, m);
            v[y] = 1;
            done[y] = 1;
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span(ctx.prime(), ctx.dim(), rows);
}

}  // namespace loewylab
