#include "loewylab/jennings.hpp"

#include <cmath>
#include <stdexcept>

namespace loewylab {

namespace {

int log_p(int p, int n) {
    int e = 0;
    while (n > 1) {
        if (n % p) throw std::logic_error("log_p: not a power of p");
        n /= p;
        ++e;
    }
    return e;
}

}  // namespace

const Subgroup& JenningsSeries::kappa(int i) const {
    if (i < 1) throw std::invalid_argument("JenningsSeries::kappa: index is 1-based");
    if (i <= static_cast<int>(kappas.size())) return kappas[i - 1];
    return kappas.back();  // trivial tail
}

JenningsSeries jennings_series(const GroupPtr& g) {
    const int p = g->prime();
    if (p == 0) throw std::invalid_argument("jennings_series: not a p-group");
    JenningsSeries out;
    out.kappas.push_back(whole_group(g));
    while (out.kappas.back().order() > 1) {
        const int n = static_cast<int>(out.kappas.size()) + 1;
        std::vector<int> gens;
        for (int s = 1; s < n; ++s)
            for (int t = 1; t < n; ++t) {
                if (s + t < n) continue;
                for (const int x : out.kappas[s - 1].elements())
                    for (const int y : out.kappas[t - 1].elements())
                        gens.push_back(g->commutator(x, y));
            }
        for (int r = 1; r < n; ++r) {
            if (static_cast<long>(p) * r < n) continue;
            for (const int x : out.kappas[r - 1].elements()) gens.push_back(g->power(x, p));
        }
        out.kappas.push_back(subgroup_generated(g, gens));
    }
    if (out.kappas.size() == 1) out.kappas.push_back(trivial_subgroup(g));  // P trivial
    for (std::size_t i = 0; i + 1 < out.kappas.size(); ++i)
        out.layer_ranks.push_back(
            log_p(p, out.kappas[i].order() / out.kappas[i + 1].order()));
    return out;
}

PoincarePolynomial jennings_poincare(const JenningsSeries& s, int p) {
    PoincarePolynomial q = PoincarePolynomial::one();
    for (std::size_t i = 0; i < s.layer_ranks.size(); ++i)
        q = q * PoincarePolynomial::geometric(static_cast<int>(i) + 1, p).pow(s.layer_ranks[i]);
    return q;
}

PoincarePolynomial jennings_poincare(const GroupPtr& g) {
    return jennings_poincare(jennings_series(g), g->prime());
}

PoincarePolynomial alperin_poincare(const GroupPtr& g, const Subgroup& r) {
    if (r.parent != g) throw std::invalid_argument("alperin_poincare: subgroup of another group");
    const int p = g->prime();
    const JenningsSeries s = jennings_series(g);
    PoincarePolynomial out = PoincarePolynomial::one();
    for (std::size_t i = 0; i + 1 < s.kappas.size(); ++i) {
        // (kappa_n cap R) kappa_(n+1)
        std::vector<int> gens = s.kappas[i].members.intersect(r.members).elements();
        for (const int x : s.kappas[i + 1].elements()) gens.push_back(x);
        const Subgroup denom = subgroup_generated(g, gens);
        const int e = log_p(p, s.kappas[i].order() / denom.order());
        out = out * PoincarePolynomial::geometric(static_cast<int>(i) + 1, p).pow(e);
    }
    return out;
}

}  // namespace loewylab
