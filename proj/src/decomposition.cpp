#include "loewylab/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace loewylab {

SplitDecomposition split(const GroupPtr& g, const Subgroup& q) {
    GroupAlgebra ctx(g);
    CentralizerBasis basis = centralizer_basis(g, q);
    Subgroup c = basis.c;

    std::vector<FpVec> irows = basis.kappas;
    Subspace i = Subspace::span(ctx.prime(), ctx.dim(), irows);

    std::vector<FpVec> jrows;
    const int p = ctx.prime();
    for (const int x : c.elements()) {
        if (x == 0) continue;
        FpVec v = ctx.basis_element(x);
        v[0] = static_cast<std::uint8_t>(p - 1);
        jrows.push_back(std::move(v));
    }
    Subspace j_prime = Subspace::span(ctx.prime(), ctx.dim(), jrows);

    // map each nontrivial-orbit element to its representative slot
    std::map<int, int> rep_slot;
    for (std::size_t k = 0; k < basis.reps.size(); ++k)
        for (const int x : ctx.support(basis.kappas[k])) rep_slot.emplace(x, static_cast<int>(k));

    // left action of C on Omega: c kappa_x = kappa_{cx}
    std::vector<std::vector<int>> orbits;
    std::vector<char> seen(basis.reps.size(), 0);
    const auto celems = c.elements();
    for (std::size_t k = 0; k < basis.reps.size(); ++k) {
        if (seen[k]) continue;
        std::vector<int> orbit;
        std::vector<int> work = {static_cast<int>(k)};
        seen[k] = 1;
        while (!work.empty()) {
            const int slot = work.back();
            work.pop_back();
            orbit.push_back(slot);
            for (const int cc : celems) {
                const int img = rep_slot.at(g->mul(cc, basis.reps[slot]));
                if (!seen[img]) { seen[img] = 1; work.push_back(img); }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }

    std::vector<Subgroup> stabilizers;
    std::vector<std::vector<int>> s_dagger;
    const auto qelems = q.elements();
    for (std::size_t k = 0; k < basis.reps.size(); ++k) {
        const int x = basis.reps[k];
        IndexSet stab(g->order());
        for (const int cc : celems)
            if (rep_slot.at(g->mul(cc, x)) == static_cast<int>(k)) stab.set(cc);
        stabilizers.push_back(Subgroup{g, stab});
        std::set<int> dag;
        for (const int qq : qelems) dag.insert(g->commutator(qq, x));
        s_dagger.emplace_back(dag.begin(), dag.end());
    }

    return {std::move(c), std::move(basis), std::move(i), std::move(j_prime),
            std::move(orbits), std::move(stabilizers), std::move(s_dagger)};
}

StarResult check_star(const GroupPtr& g, const Subgroup& q) {
    const Subgroup c = centralizer(g, q);
    const auto celems = c.elements();
    const auto qelems = q.elements();
    bool group = true;
    for (int x = 0; x < g->order() && group; ++x) {
        if (c.contains(x)) continue;
        for (const int cc : celems) {
            bool found = false;
            for (const int qq : qelems) {
                if (c.contains(g->commutator(x, g->mul(qq, cc)))) { found = true; break; }
            }
            if (!found) { group = false; break; }
        }
    }

    GroupAlgebra ctx(g);
    const SplitDecomposition d = split(g, q);
    auto mul = [&](const FpVec& u, const FpVec& v) { return ctx.multiply(u, v); };
    const Subspace ji = product_space(d.j_prime, d.i, mul);
    const Subspace ij = product_space(d.i, d.j_prime, mul);
    const bool linear = ji == ij;
    if (group != linear)
        throw std::runtime_error("check_star: group and linear criteria disagree");
    return {group, linear};
}

DstarResult check_dstar(const GroupPtr& g, const Subgroup& q) {
    GroupAlgebra ctx(g);
    const SplitDecomposition d = split(g, q);
    auto mul = [&](const FpVec& u, const FpVec& v) { return ctx.multiply(u, v); };
    const Subspace i2 = product_space(d.i, d.i, mul);
    const Subspace ji = product_space(d.j_prime, d.i, mul);
    const bool linear = ji.contains(i2);

    const auto qelems = q.elements();
    auto centralizer_in_q = [&](int x) {
        IndexSet m(g->order());
        for (const int qq : qelems)
            if (g->mul(qq, x) == g->mul(x, qq)) m.set(qq);
        return m;
    };
    std::optional<std::pair<int, int>> witness;
    const int qn = q.order();
    std::vector<IndexSet> cq;
    cq.reserve(g->order());
    for (int x = 0; x < g->order(); ++x) cq.push_back(centralizer_in_q(x));
    for (int x = 0; x < g->order() && !witness; ++x) {
        if (d.c.contains(x)) continue;
        for (int y = 0; y < g->order(); ++y) {
            if (d.c.contains(y)) continue;
            const IndexSet both = cq[x].intersect(cq[y]);
            // |C_Q(x) C_Q(y)| = |C_Q(x)||C_Q(y)| / |C_Q(x) cap C_Q(y)|
            if (cq[x].count() * cq[y].count() != both.count() * static_cast<std::size_t>(qn))
                continue;
            if (both == cq[g->mul(x, y)].intersect(q.members)) {
                witness = {x, y};
                break;
            }
        }
    }
    return {linear, witness};
}

bool pqq_trivial(const GroupPtr& g, const Subgroup& q) {
    const Subgroup pq = commutator_subgroup(g, whole_group(g), q);
    return commutator_subgroup(g, pq, q).order() == 1;
}

ConditionReport condition_report(const GroupPtr& g, const Subgroup& q) {
    const StarResult s = check_star(g, q);
    const DstarResult d = check_dstar(g, q);
    return {s.group, s.linear, d.linear, d.witness, pqq_trivial(g, q)};
}

MuResult mu_xyz(const GroupPtr& g, const Subgroup& q, int x, int y, int z) {
    const Subgroup c = centralizer(g, q);
    if (c.contains(x) || c.contains(y) || c.contains(z))
        throw std::invalid_argument("mu_xyz: arguments must index nontrivial orbit sums");
    const auto qelems = q.elements();
    auto s_dagger = [&](int w) {
        std::set<int> dag;
        for (const int qq : qelems) dag.insert(g->commutator(qq, w));
        return dag;
    };
    // orbit membership of z
    GroupAlgebra ctx(g);
    const FpVec orbit_z = ctx.orbit_sum(q, z);
    std::optional<int> matching_q;
    for (const int qq : qelems) {
        const int t = g->mul(g->conj(g->inv(qq), x), y);  // q^-1 x q y
        if (orbit_z[t]) { matching_q = qq; break; }
    }
    MuResult out{0, 0, std::nullopt};
    if (matching_q) {
        const std::set<int> sx = s_dagger(g->inv(x));
        const std::set<int> sy = s_dagger(y);
        int count = 0;
        const int qq = *matching_q;
        for (const int w : sx) {
            const int conj_w = g->conj(g->inv(qq), w);
            if (sy.count(conj_w)) ++count;
        }
        out.integer = count;
        out.scalar = static_cast<std::uint8_t>(count % g->prime());
    }
    if (pqq_trivial(g, q)) {
        const std::set<int> a = s_dagger(g->inv(x));  // [Q, x^-1]
        const std::set<int> b = s_dagger(y);          // [Q, y]
        int count = 0;
        for (const int w : a)
            if (b.count(w)) ++count;
        out.shortcut = count;
        if (matching_q && count != out.integer)
            throw std::runtime_error("mu_xyz: shortcut disagrees with the general count");
    }
    return out;
}

std::string to_string(SymmetryCase c) {
    switch (c) {
        case SymmetryCase::CaseA: return "case-a";
        case SymmetryCase::CaseB: return "case-b";
        case SymmetryCase::CaseC: return "case-c";
        case SymmetryCase::NotSymmetric: return "not-symmetric";
        case SymmetryCase::Inapplicable: return "inapplicable";
    }
    return "?";
}

SymmetryCase classify_symmetry(const GroupPtr& g, const Subgroup& q) {
    const Subgroup z = center(g);
    if (z.members.contains(q.members)) return SymmetryCase::Inapplicable;
    const StarResult star = check_star(g, q);
    const DstarResult dstar = check_dstar(g, q);
    if (!star.linear || !dstar.linear) return SymmetryCase::Inapplicable;

    const int p = g->prime();
    const SplitDecomposition d = split(g, q);
    const Subgroup phi_c = frattini(g, d.c);
    // kappa_3(C) = [C, Phi(C)] agemo(Phi(C))
    std::vector<int> k3gens;
    for (const int a : d.c.elements())
        for (const int b : phi_c.elements()) k3gens.push_back(g->commutator(a, b));
    for (const int a : phi_c.elements()) k3gens.push_back(g->power(a, p));
    const Subgroup kappa3_c = subgroup_generated(g, k3gens);

    // one stabilizer per C-orbit of Omega; conditions are conjugation-invariant
    std::vector<const Subgroup*> stabs;
    for (const auto& orbit : d.omega_orbits) stabs.push_back(&d.stabilizers[orbit.front()]);

    auto meets_trivially = [&](const Subgroup& s, const Subgroup& t) {
        return s.members.intersect(t.members).count() == 1;
    };

    if (p == 2) {
        bool case_a = true;
        for (const auto* s : stabs) {
            const bool ai = s->order() == 4 && s->is_elementary_abelian() &&
                            meets_trivially(*s, phi_c);
            const bool aii = s->order() == 2 && phi_c.members.contains(s->members) &&
                             meets_trivially(*s, kappa3_c);
            if (!ai && !aii) { case_a = false; break; }
        }
        if (case_a && !stabs.empty()) return SymmetryCase::CaseA;

        int trivial_slots = 0;
        bool rest_ok = true;
        for (const auto* s : stabs) {
            if (s->order() == 1) {
                ++trivial_slots;
            } else if (!(s->order() == 2 && meets_trivially(*s, phi_c))) {
                rest_ok = false;
            }
        }
        if (trivial_slots == 1 && rest_ok) return SymmetryCase::CaseB;
        return SymmetryCase::NotSymmetric;
    }
    if (p == 3) {
        for (const auto* s : stabs)
            if (!(s->order() == 3 && meets_trivially(*s, phi_c)))
                return SymmetryCase::NotSymmetric;
        return stabs.empty() ? SymmetryCase::NotSymmetric : SymmetryCase::CaseC;
    }
    return SymmetryCase::NotSymmetric;
}

RepresentationType representation_type(const GroupPtr& g, const Subgroup& q) {
    if (g->is_cyclic()) return RepresentationType::Finite;
    const Subgroup z = center(g);
    if (!z.members.contains(q.members)) {
        GroupAlgebra ctx(g);
        const Subalgebra a = centralizer_subalgebra(g, q);
        const auto chain = radical_power_chain(a);
        const Subspace& j = chain[1];
        const Subspace& j2 = chain[2];
        if (static_cast<int>(j.dim() - j2.dim()) < 2)
            throw std::runtime_error("representation_type: dim J/J^2 < 2 for non-central Q");
        const SplitDecomposition d = split(g, q);
        bool i_in_j2 = true;
        for (const auto& kappa : d.basis.kappas)
            if (!j2.contains(kappa)) { i_in_j2 = false; break; }
        if (i_in_j2 && !d.basis.kappas.empty())
            throw std::runtime_error("representation_type: I lies inside J^2 for non-central Q");
    }
    return RepresentationType::Infinite;
}

}  // namespace loewylab
