#include "loewylab/oracles.hpp"

#include <stdexcept>

namespace loewylab {

int log_prime(int p, int n) {
    int e = 0;
    while (n > 1) {
        if (n % p) throw std::logic_error("log_prime: not a power of p");
        n /= p;
        ++e;
    }
    return e;
}

bool is_extraspecial(const GroupPtr& g) {
    const int p = g->prime();
    if (p == 0) return false;
    const Subgroup z = center(g);
    if (z.order() != p) return false;
    const Subgroup derived = commutator_subgroup(g, whole_group(g), whole_group(g));
    const Subgroup phi = frattini(g, whole_group(g));
    return derived.members == z.members && phi.members == z.members;
}

int group_algebra_loewy_length(const GroupPtr& g) {
    return jennings_poincare(g).degree() + 1;
}

int subgroup_algebra_loewy_length(const Subgroup& c) {
    return group_algebra_loewy_length(subgroup_as_group(c));
}

bool has_cyclic_maximal_subgroup(const GroupPtr& g) {
    const int p = g->prime();
    if (p == 0) return false;
    const int target = g->order() / p;
    if (target == 0) return false;
    for (int x = 0; x < g->order(); ++x)
        if (g->element_order(x) >= target) return true;
    return false;
}

std::optional<Prediction> predict_extraspecial(const GroupPtr& g, const Subgroup& q) {
    if (!is_extraspecial(g)) return std::nullopt;
    const int p = g->prime();
    const Subgroup c = centralizer(g, q);
    const Subgroup z = center(g);
    const int index = g->order() / c.order();
    const int log_c = log_prime(p, c.order());

    std::vector<int> c_of_local;
    GroupPtr cg = subgroup_as_group(c, &c_of_local);
    IndexSet z_local(cg->order());
    for (int i = 0; i < cg->order(); ++i)
        if (z.contains(c_of_local[i])) z_local.set(i);
    const PoincarePolynomial q_poly = jennings_poincare(cg);
    const PoincarePolynomial r_poly = alperin_poincare(cg, Subgroup{cg, z_local});
    const PoincarePolynomial general =
        q_poly + (PoincarePolynomial::monomial(index - 1, 1) * r_poly);

    Prediction out;
    out.kind = "extraspecial-layer-dims";
    out.layers = general;
    const bool closed_form_valid = p == 2 || c.exponent() == p;
    if (closed_form_valid) {
        PoincarePolynomial tail = c.is_elementary_abelian()
                                      ? PoincarePolynomial::geometric(1, p)
                                      : PoincarePolynomial::geometric(2, p);
        tail = tail + PoincarePolynomial::monomial(index - 1, 1);
        const PoincarePolynomial closed =
            PoincarePolynomial::geometric(1, p).pow(log_c - 1) * tail;
        if (!(closed == general))
            throw std::runtime_error(
                "predict_extraspecial: closed form disagrees with the filtration formula");
        out.note = c.is_elementary_abelian() ? "closed form, C elementary abelian"
                                             : "closed form, C not elementary abelian";
    } else {
        out.note = "filtration formula (C has exponent p^2, closed form not applicable)";
    }
    return out;
}

std::optional<Prediction> predict_symmetry_extraspecial(const GroupPtr& g, const Subgroup& q) {
    if (!is_extraspecial(g)) return std::nullopt;
    const Subgroup z = center(g);
    if (z.members.contains(q.members)) return std::nullopt;
    const int p = g->prime();
    const Subgroup c = centralizer(g, q);
    const bool elem_ab = c.is_elementary_abelian();
    const bool symmetric = (p == 2 && !elem_ab) || (p == 3 && elem_ab);

    // single-generator special cases are consequences of the two main cases
    if (q.is_cyclic() && q.order() > 1) {
        int y = -1;
        for (const int x : q.elements())
            if (g->element_order(x) == q.order()) { y = x; break; }
        const int order_y = g->element_order(y);
        bool small_case = false;
        if (p == 2 && g->order() >= 32) small_case = true;
        if (g->order() == 8 && order_y == 4) small_case = true;
        if (g->order() == 27 && g->exponent() == 3) small_case = true;
        if (g->order() == 27 && g->exponent() == 9 && order_y == 3) small_case = true;
        if (small_case && !symmetric)
            throw std::runtime_error(
                "predict_symmetry_extraspecial: special case disagrees with the main rule");
    }

    Prediction out;
    out.kind = "extraspecial-symmetry";
    out.flag = symmetric;
    out.note = elem_ab ? "C elementary abelian" : "C not elementary abelian";
    return out;
}

std::optional<Prediction> predict_ll_abelian_normal(const GroupPtr& g, const Subgroup& q) {
    if (!q.is_abelian()) return std::nullopt;
    const Subgroup c = centralizer(g, q);
    if (!is_normal(g, c)) return std::nullopt;
    Prediction out;
    out.kind = "loewy-length-abelian-normal";
    out.length = subgroup_algebra_loewy_length(c);
    out.note = "Q abelian with normal centralizer of order " + std::to_string(c.order());
    return out;
}

std::optional<MaximalCyclicInfo> detect_maximal_cyclic(const GroupPtr& g) {
    const int p = g->prime();
    if (p == 0) return std::nullopt;
    const int n = log_prime(p, g->order());
    if (g->is_cyclic()) return MaximalCyclicInfo{MaximalCyclicFamily::Cyclic, n};
    if (!has_cyclic_maximal_subgroup(g)) return std::nullopt;
    if (g->is_abelian()) return MaximalCyclicInfo{MaximalCyclicFamily::AbelianNoncyclic, n};
    if (p != 2) return MaximalCyclicInfo{MaximalCyclicFamily::Modular, n};
    if (n == 3) return MaximalCyclicInfo{MaximalCyclicFamily::DihedralLike, n};
    return nilpotency_class(g) == 2
               ? MaximalCyclicInfo{MaximalCyclicFamily::Modular, n}
               : MaximalCyclicInfo{MaximalCyclicFamily::DihedralLike, n};
}

std::optional<Prediction> predict_ll_maximal_cyclic(const GroupPtr& g, const Subgroup& q) {
    const auto info = detect_maximal_cyclic(g);
    if (!info) return std::nullopt;
    const int p = g->prime();
    const int n = info->n;
    auto power = [&](int e) {
        long long v = 1;
        for (int i = 0; i < e; ++i) v *= p;
        return static_cast<int>(v);
    };
    Prediction out;
    out.kind = "loewy-length-maximal-cyclic";
    const Subgroup c = centralizer(g, q);
    switch (info->family) {
        case MaximalCyclicFamily::Cyclic:
            out.length = power(n);
            out.note = "P cyclic";
            return out;
        case MaximalCyclicFamily::AbelianNoncyclic:
            out.length = power(n - 1) + p - 1;
            out.note = "P abelian with a cyclic maximal subgroup";
            return out;
        case MaximalCyclicFamily::Modular: {
            if (c.order() == g->order()) {
                out.length = power(n - 1) + p - 1;
                out.note = "C = P";
            } else if (c.order() == power(n - 1) && c.is_cyclic()) {
                out.length = power(n - 1);
                out.note = "C = <a>";
            } else if (c.order() == power(n - 1)) {
                out.length = power(n - 2) + p - 1;
                out.note = "C = <a^p, c>";
            } else if (c.order() == power(n - 2)) {
                out.length = power(n - 2);
                out.note = "C = <a^p>";
            } else {
                return std::nullopt;  // centralizer outside the case table
            }
            return out;
        }
        case MaximalCyclicFamily::DihedralLike: {
            if (c.order() == g->order()) {
                out.length = power(n - 1) + 1;
                out.note = "C = P";
            } else if (c.order() == power(n - 1) && c.is_cyclic()) {
                out.length = power(n - 1);
                out.note = "C = <a>";
            } else if (c.order() == 4 && (n >= 4 || !c.is_cyclic())) {
                out.length = power(n - 2) + 1;
                out.note = "C = <z, c>";
            } else if (c.order() == 2) {
                out.length = power(n - 2);
                out.note = "C = <z>";
            } else {
                return std::nullopt;
            }
            return out;
        }
    }
    return std::nullopt;
}

LambdaA build_lambda_a(int n, int s) {
    if (s != 0 && s != 1) throw std::invalid_argument("build_lambda_a: s must be 0 or 1");
    if (n < 3 || (s == 1 && n < 4))
        throw std::invalid_argument("build_lambda_a: need 2^(n-1) >= 4, and >= 8 when s = 1");
    GroupPtr a = cyclic_group(2, n - 1);
    const int m = a->order();      // 2^(n-1) = 2l
    const int l = m / 2;           // 2^(n-2)
    std::vector<int> image(m);
    const long e = static_cast<long>(s) * l - 1;
    for (int i = 0; i < m; ++i) image[i] = static_cast<int>(((static_cast<long>(i) * e) % m + m) % m);
    Automorphism psi(a, image);  // validates multiplicativity
    Subalgebra fixed = fixed_subalgebra(a, {psi.image});

    std::vector<FpVec> delta;
    FpVec one(m, 0), zvec(m, 0);
    one[0] = 1;
    zvec[l] = 1;
    delta.push_back(one);
    delta.push_back(zvec);
    for (int i = 1; i <= 2 * l - 1; ++i) {
        FpVec eta(m, 0);
        eta[i % m] ^= 1;
        eta[((-i + static_cast<long>(s) * i * l) % m + m) % m] ^= 1;
        delta.push_back(std::move(eta));
    }
    return {a, s, l, l, std::move(fixed), std::move(delta)};
}

bool verify_lemma_7_2(const LambdaA& lambda) {
    const int m = lambda.ambient->order();
    const Subspace delta_span = Subspace::span(2, m, lambda.delta);
    if (!(delta_span == lambda.algebra.span)) return false;

    const auto chain = radical_power_chain(lambda.algebra);
    const int ll = static_cast<int>(chain.size()) - 1;  // first zero power
    if (ll != lambda.l) return false;

    FpVec zeta(m, 0);
    for (int i = 1; i <= 2 * lambda.l - 1; i += 2) zeta[i] = 1;
    bool zero = true;
    for (const auto e : zeta)
        if (e) zero = false;
    if (zero || !chain[lambda.l - 1].contains(zeta)) return false;

    // eta_i = eta_1 theta_i for some theta_i in Lambda_a
    GroupAlgebra ctx(lambda.ambient);
    const FpVec& eta1 = lambda.delta[2];
    const auto rows = lambda.algebra.span.basis_rows();
    FpMatrix images(2, m);
    for (const auto& r : rows) images.append_row(ctx.multiply(eta1, r));
    for (int i = 1; i <= 2 * lambda.l - 1; ++i)
        if (!solve_left(images, lambda.delta[1 + i])) return false;
    return true;
}

std::vector<BoundCheck> check_bounds(const GroupPtr& g, const Subgroup& q,
                                     const LoewySeries& computed) {
    const int p = g->prime();
    const int n = log_prime(p, g->order());
    const int ll = computed.length();
    auto power = [&](int e) {
        long long v = 1;
        for (int i = 0; i < e; ++i) v *= p;
        return static_cast<int>(v);
    };
    const Subgroup z = center(g);
    const Subgroup c = centralizer(g, q);
    const bool q_central = z.members.contains(q.members);
    const int ll_kp = group_algebra_loewy_length(g);
    const int ll_kc = subgroup_algebra_loewy_length(c);
    const std::size_t omega = static_cast<std::size_t>(g->order() - c.order()) == 0
                                  ? 0
                                  : centralizer_basis(g, q).reps.size();

    std::vector<BoundCheck> checks;
    checks.push_back({"ll >= p", true, ll >= p});
    checks.push_back({"ll >= ll(kC)", true, ll >= ll_kc});
    checks.push_back({"ll(kP) >= n(p-1)+1", true, ll_kp >= n * (p - 1) + 1});
    checks.push_back({"noncentral Q: ll < ll(kP)", !q_central, q_central || ll < ll_kp});
    const bool in_top_range =
        ll < power(n - 1) || ll == power(n - 1) || ll == power(n - 1) + p - 1 || ll == power(n);
    checks.push_back({"ll < p^(n-1) or in {p^(n-1), p^(n-1)+p-1, p^n}", n >= 1, in_top_range});
    checks.push_back({"ll = p^n iff P cyclic", true, (ll == power(n)) == g->is_cyclic()});
    const bool rhs5 = !g->is_cyclic() && has_cyclic_maximal_subgroup(g) &&
                      z.members.contains(q.members);
    checks.push_back({"ll = p^(n-1)+p-1 iff noncyclic, cyclic maximal subgroup, Q central",
                      n >= 2, n < 2 || ((ll == power(n - 1) + p - 1) == rhs5)});
    const bool elem_ab_8 = g->order() == 8 && p == 2 && g->is_elementary_abelian();
    const bool es27 = g->order() == 27 && is_extraspecial(g) && g->exponent() == 3 &&
                      z.members.contains(q.members);
    const bool c_cyclic_index_p =
        !g->is_cyclic() && c.is_cyclic() && c.order() * p == g->order();
    checks.push_back({"ll = p^(n-1) iff 2^3 elementary abelian, or 27 exponent 3 with Q "
                      "central, or C cyclic of index p",
                      n >= 2,
                      n < 2 || ((ll == power(n - 1)) == (elem_ab_8 || es27 || c_cyclic_index_p))});
    const bool tri = ll == ll_kc ||
                     (ll_kc < ll && ll <= static_cast<int>(omega) + 1);
    checks.push_back({"ll = ll(kC) or ll(kC) < ll <= |Omega|+1", true, tri});
    return checks;
}

bool check_minimal_ll(const GroupPtr& g, const Subgroup& q, const LoewySeries& computed) {
    const int p = g->prime();
    const Subgroup z = center(g);
    const Subgroup c = centralizer(g, q);
    bool group_side = c.members == z.members && z.order() == p;
    if (group_side) {
        const int zgen = z.elements()[1];
        GroupAlgebra ctx(g);
        for (int x = 0; x < g->order() && group_side; ++x) {
            if (z.contains(x)) continue;
            const FpVec orbit = ctx.orbit_sum(q, x);
            if (!orbit[g->mul(zgen, x)]) group_side = false;
        }
    }
    const bool minimal = computed.length() == p;
    if (group_side != minimal)
        throw std::runtime_error("check_minimal_ll: group criterion disagrees with ll = p");
    return minimal;
}

}  // namespace loewylab
