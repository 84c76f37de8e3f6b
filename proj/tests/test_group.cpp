#include "loewylab/group.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace loewylab;

namespace {

std::multiset<int> order_multiset(const GroupPtr& g) {
    std::multiset<int> out;
    for (int x = 0; x < g->order(); ++x) out.insert(g->element_order(x));
    return out;
}

// independent oracle: test every subset of a small group for being a subgroup
int brute_force_subgroup_count(const GroupPtr& g) {
    const int n = g->order();
    REQUIRE(n <= 16);
    int count = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & 1u)) continue;  // must contain the identity
        bool closed = true;
        for (int a = 0; a < n && closed; ++a) {
            if (!(mask >> a & 1u)) continue;
            for (int b = 0; b < n && closed; ++b) {
                if (!(mask >> b & 1u)) continue;
                closed = (mask >> g->mul(a, b)) & 1u;
            }
        }
        if (closed) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("cyclic groups") {
    const GroupPtr z2 = cyclic_group(2, 1);
    CHECK(z2->order() == 2);
    for (int x = 0; x < 2; ++x) CHECK(z2->inv(x) == x);

    CHECK(order_multiset(cyclic_group(2, 3)) == std::multiset<int>{1, 2, 4, 4, 8, 8, 8, 8});
    CHECK(order_multiset(cyclic_group(3, 1)) == std::multiset<int>{1, 3, 3});
    CHECK_THROWS(cyclic_group(4, 1));
    CHECK_THROWS(cyclic_group(2, 20));  // above the configured maximum
}

TEST_CASE("two-generator families") {
    const GroupPtr d8 = dihedral_group(8);
    const Subgroup z = center(d8);
    CHECK(z.order() == 2);
    const int a = d8->named_generator("a");
    CHECK(z.contains(d8->mul(a, a)));

    const GroupPtr q8 = quaternion_group(8);
    const auto q8_orders = order_multiset(q8);
    CHECK(std::count(q8_orders.begin(), q8_orders.end(), 2) == 1);

    const GroupPtr mod16 = modular_maximal_cyclic_group(2, 4);
    const int ma = mod16->named_generator("a");
    const int mb = mod16->named_generator("b");
    CHECK(mod16->conj(mb, ma) == mod16->power(ma, 5));  // ^ba = a^(l+1), l+1 = 5

    const GroupPtr sd16 = semidihedral_group(16);
    const int sa = sd16->named_generator("a");
    const int sb = sd16->named_generator("b");
    CHECK(sd16->conj(sb, sa) == sd16->power(sa, 3));  // l-1 = 3

    CHECK(nilpotency_class(dihedral_group(16)) == 3);
    CHECK(nilpotency_class(semidihedral_group(16)) == 3);
    CHECK(nilpotency_class(quaternion_group(16)) == 3);
    CHECK(nilpotency_class(mod16) == 2);

    CHECK_THROWS(semidihedral_group(8));
    CHECK_THROWS(modular_maximal_cyclic_group(2, 3));
}

TEST_CASE("extraspecial groups") {
    const GroupPtr es8 = extraspecial_group(2, 8, ExtraspecialKind::Plus);
    const GroupPtr d8 = dihedral_group(8);
    CHECK(order_multiset(es8) == order_multiset(d8));
    CHECK(center(es8).order() == center(d8).order());

    const GroupPtr es27 = extraspecial_group(3, 27, ExtraspecialKind::ExponentP);
    for (int x = 1; x < es27->order(); ++x) CHECK(es27->element_order(x) == 3);

    const GroupPtr es32p = extraspecial_group(2, 32, ExtraspecialKind::Plus);
    CHECK(es32p->order() == 32);
    CHECK(center(es32p).order() == 2);

    for (const GroupPtr& g : {es8, es27, es32p,
                              extraspecial_group(2, 32, ExtraspecialKind::Minus),
                              extraspecial_group(3, 27, ExtraspecialKind::ExponentP2)}) {
        const Subgroup z = center(g);
        CHECK(z.order() == g->prime());
        CHECK(commutator_subgroup(g, whole_group(g), whole_group(g)).members == z.members);
        CHECK(frattini(g, whole_group(g)).members == z.members);
        CHECK(nilpotency_class(g) == 2);
    }

    // the two order-32 kinds are distinct: different counts of involutions
    const auto plus = order_multiset(es32p);
    const auto minus = order_multiset(extraspecial_group(2, 32, ExtraspecialKind::Minus));
    CHECK(plus != minus);

    CHECK_THROWS(extraspecial_group(2, 16, ExtraspecialKind::Plus));
}

TEST_CASE("products") {
    const GroupPtr e8 = direct_product(direct_product(cyclic_group(2, 1), cyclic_group(2, 1)),
                                       cyclic_group(2, 1));
    CHECK(e8->order() == 8);
    CHECK(e8->is_elementary_abelian());

    const GroupPtr d8 = dihedral_group(8);
    const GroupPtr cp = central_product(d8, d8);
    CHECK(cp->order() == 32);
    CHECK(center(cp).order() == 2);
    CHECK(commutator_subgroup(cp, whole_group(cp), whole_group(cp)).members ==
          center(cp).members);
}

TEST_CASE("semidirect product of the order-16 dihedral group by its twist") {
    const GroupPtr q = dihedral_group(16);
    const int a = q->named_generator("a");
    const int b = q->named_generator("b");
    std::vector<int> image(q->order());
    for (int j = 0; j < 8; ++j) {
        image[q->power(a, j)] = q->power(a, 3 * j);
        image[q->mul(q->power(a, j), b)] = q->mul(q->power(a, 3 * j), b);
    }
    const Automorphism psi(q, image);
    const GroupPtr p = semidirect_product(q, {psi});
    CHECK(p->order() == 32);

    // C_P(Q) = ZP = <a^4>, of order 2
    IndexSet qmem(p->order());
    for (int x = 0; x < 16; ++x) qmem.set(x);  // D16 embeds at (x, id)
    const Subgroup qsub{p, qmem};
    const Subgroup c = centralizer(p, qsub);
    CHECK(c.order() == 2);
    CHECK(c.contains(p->power(p->named_generator("a"), 4)));
    CHECK(center(p).members == c.members);
}

TEST_CASE("table ingestion and validation") {
    const GroupPtr z2 = cyclic_group(2, 1);
    std::vector<std::vector<int>> t = {{0, 1}, {1, 0}};
    CHECK(Group::from_table("z2", t)->order() == 2);

    // a Latin square that is not associative (order 5 quasigroup)
    std::vector<std::vector<int>> latin = {{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 3, 4, 0, 1},
                                           {3, 4, 1, 2, 0},
                                           {4, 2, 0, 1, 3}};
    CHECK_THROWS_WITH_AS(static_cast<void>(Group::from_table("bad", latin)),
                         doctest::Contains("associativity"), std::invalid_argument);

    // identity relabeling: move the identity to index 2
    std::vector<std::vector<int>> shifted = {{1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
    // row/col 2 acts as identity here
    const GroupPtr g = Group::from_table("z3", shifted);
    CHECK(g->order() == 3);
    CHECK(g->mul(0, 0) != 0);  // identity is at 0 after relabeling
}

TEST_CASE("permutation closure") {
    // (0 1 2 3) and (1 3) generate the dihedral group of order 8
    const GroupPtr g = from_permutation_generators(4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
    CHECK(g->order() == 8);
    CHECK(order_multiset(g) == order_multiset(dihedral_group(8)));
    CHECK(center(g).order() == 2);
    CHECK_THROWS(from_permutation_generators(4, {{1, 1, 2, 3}}));
}

TEST_CASE("centralizers") {
    const GroupPtr d16 = dihedral_group(16);
    const int a = d16->named_generator("a");
    const int asq[1] = {d16->mul(a, a)};
    const Subgroup q = subgroup_generated(d16, asq);
    const Subgroup c = centralizer(d16, q);
    CHECK(c.order() == 8);  // <a>
    for (int j = 0; j < 8; ++j) CHECK(c.contains(d16->power(a, j)));

    CHECK(centralizer(d16, center(d16)).order() == 16);
}

TEST_CASE("q_orbits in an extraspecial group") {
    const GroupPtr es = extraspecial_group(2, 32, ExtraspecialKind::Plus);
    int y = -1;
    const Subgroup z = center(es);
    for (int x = 1; x < es->order(); ++x)
        if (!z.contains(x)) { y = x; break; }
    const int gens[1] = {y};
    const Subgroup q = subgroup_generated(es, gens);
    const Subgroup c = centralizer(es, q);
    for (const auto& orbit : q_orbits(es, q)) {
        if (c.contains(orbit.front()))
            CHECK(orbit.size() == 1);
        else
            CHECK(orbit.size() == 2);
    }
}

TEST_CASE("conjugacy class counts for dihedral groups") {
    for (const int n : {4, 5, 6}) {
        const GroupPtr g = dihedral_group(1 << n);
        CHECK(static_cast<int>(conjugacy_classes(g).size()) == (1 << (n - 2)) + 3);
    }
}

TEST_CASE("frattini = agemo * derived for subgroups of D16") {
    const GroupPtr g = dihedral_group(16);
    for (const auto& h : all_subgroups(g)) {
        std::vector<int> gens;
        for (const int x : agemo(g, h).elements()) gens.push_back(x);
        for (const int x : commutator_subgroup(g, h, h).elements()) gens.push_back(x);
        CHECK(frattini(g, h).members == subgroup_generated(g, gens).members);
    }
}

TEST_CASE("all_subgroups matches the exhaustive subset oracle") {
    for (const GroupPtr& g : {dihedral_group(8), quaternion_group(8), cyclic_group(2, 3),
                              modular_maximal_cyclic_group(2, 4)}) {
        const auto subs = all_subgroups(g);
        // each subgroup exactly once
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = i + 1; j < subs.size(); ++j)
                CHECK(!(subs[i].members == subs[j].members));
        CHECK(static_cast<int>(subs.size()) == brute_force_subgroup_count(g));
        for (const auto& h : subs) {
            CHECK(g->order() % h.order() == 0);
            CHECK(h.contains(0));
        }
    }
    CHECK(all_subgroups(dihedral_group(8)).size() == 10);
}
