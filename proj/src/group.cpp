#include "loewylab/group.hpp"

#include "loewylab/config.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace loewylab {

IndexSet::IndexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

IndexSet IndexSet::full(std::size_t universe) {
    IndexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.set(i);
    return s;
}

std::size_t IndexSet::count() const {
    std::size_t total = 0;
    for (const auto w : words_) total += std::popcount(w);
    return total;
}

bool IndexSet::contains(const IndexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (other.words_[i] & ~words_[i]) return false;
    return true;
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
    IndexSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] = words_[i] & other.words_[i];
    return out;
}

std::vector<int> IndexSet::elements() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            out.push_back(static_cast<int>(w * 64 + std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

namespace {

int prime_power_base(int n) {
    if (n < 2) return 0;
    int p = 0;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) { p = d; break; }
    }
    if (p == 0) return n;  // n itself prime
    int m = n;
    while (m % p == 0) m /= p;
    return m == 1 ? p : 0;
}

std::vector<int> compute_inverses(const std::vector<int>& table, int n) {
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (table[static_cast<std::size_t>(a) * n + b] == 0) {
                if (table[static_cast<std::size_t>(b) * n + a] != 0)
                    throw std::invalid_argument("group table: one-sided inverse");
                inv[a] = b;
                break;
            }
        }
        if (inv[a] < 0) throw std::invalid_argument("group table: missing inverse");
    }
    return inv;
}

std::vector<int> compute_element_orders(const std::vector<int>& table, int n) {
    std::vector<int> ord(n, 0);
    for (int a = 0; a < n; ++a) {
        int x = a, k = 1;
        while (x != 0) {
            x = table[static_cast<std::size_t>(x) * n + a];
            ++k;
        }
        ord[a] = k;
    }
    return ord;
}

void check_latin_and_identity(const std::vector<int>& table, int n) {
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            const int v = table[static_cast<std::size_t>(i) * n + j];
            if (v < 0 || v >= n || seen[v])
                throw std::invalid_argument("group table: row " + std::to_string(i) +
                                            " is not a permutation");
            seen[v] = 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            const int v = table[static_cast<std::size_t>(j) * n + i];
            if (seen[v])
                throw std::invalid_argument("group table: column " + std::to_string(i) +
                                            " is not a permutation");
            seen[v] = 1;
        }
    }
    for (int j = 0; j < n; ++j) {
        if (table[j] != j || table[static_cast<std::size_t>(j) * n] != j)
            throw std::invalid_argument("group table: index 0 is not the identity");
    }
}

void check_associativity(const std::vector<int>& table, int n, bool full) {
    auto mul = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };
    auto fail = [](int a, int b, int c) {
        std::ostringstream os;
        os << "group table: associativity fails at triple (" << a << ", " << b << ", " << c
           << ")";
        throw std::invalid_argument(os.str());
    };
    if (full) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail(a, b, c);
    } else {
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> dist(0, n - 1);
        for (int t = 0; t < 200000; ++t) {
            const int a = dist(rng), b = dist(rng), c = dist(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail(a, b, c);
        }
    }
}

}  // namespace

GroupPtr make_group_unchecked(std::string name, std::vector<int> table, int n,
                              std::vector<std::string> labels,
                              std::vector<std::pair<std::string, int>> named_gens) {
    if (static_cast<std::size_t>(n) > limits().max_group_order)
        throw std::invalid_argument("group order " + std::to_string(n) +
                                    " exceeds the configured maximum of " +
                                    std::to_string(limits().max_group_order));
    check_latin_and_identity(table, n);
    if (n <= 128) check_associativity(table, n, true);
    auto g = std::shared_ptr<Group>(new Group());
    g->n_ = n;
    g->prime_ = prime_power_base(n);
    g->table_ = std::move(table);
    g->inverses_ = compute_inverses(g->table_, n);
    g->element_orders_ = compute_element_orders(g->table_, n);
    g->labels_ = std::move(labels);
    g->named_generators_ = std::move(named_gens);
    g->name_ = std::move(name);
    return g;
}

int Group::power(int x, long e) const {
    const int ord = element_orders_[x];
    long r = e % ord;
    if (r < 0) r += ord;
    int out = 0;
    for (long i = 0; i < r; ++i) out = mul(out, x);
    return out;
}

int Group::exponent() const {
    long long l = 1;
    for (const int o : element_orders_) l = std::lcm(l, static_cast<long long>(o));
    return static_cast<int>(l);
}

bool Group::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool Group::is_cyclic() const {
    for (const int o : element_orders_)
        if (o == n_) return true;
    return false;
}

bool Group::is_elementary_abelian() const {
    if (prime_ == 0 || !is_abelian()) return false;
    for (int a = 1; a < n_; ++a)
        if (element_orders_[a] != prime_) return false;
    return true;
}

std::string Group::label(int x) const {
    if (static_cast<std::size_t>(x) < labels_.size() && !labels_[x].empty()) return labels_[x];
    return "g" + std::to_string(x);
}

int Group::named_generator(const std::string& name) const {
    for (const auto& [n, idx] : named_generators_)
        if (n == name) return idx;
    return -1;
}

GroupPtr Group::from_table(std::string name, const std::vector<std::vector<int>>& table,
                           std::vector<std::string> labels,
                           std::vector<std::pair<std::string, int>> named_gens) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("group table: empty");
    if (static_cast<std::size_t>(n) > limits().max_group_order)
        throw std::invalid_argument("group order " + std::to_string(n) +
                                    " exceeds the configured maximum of " +
                                    std::to_string(limits().max_group_order));
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            throw std::invalid_argument("group table: not square");
        for (int j = 0; j < n; ++j) {
            const int v = table[i][j];
            if (v < 0 || v >= n)
                throw std::invalid_argument("group table: entry out of range");
            flat[static_cast<std::size_t>(i) * n + j] = v;
        }
    }
    // locate the identity, then relabel by the transposition (0 e)
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            ok = flat[static_cast<std::size_t>(cand) * n + j] == j &&
                 flat[static_cast<std::size_t>(j) * n + cand] == j;
        if (ok) { e = cand; break; }
    }
    if (e < 0) throw std::invalid_argument("group table: no identity element");
    auto relabel = [&](int x) { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<int> canon(flat.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            canon[static_cast<std::size_t>(relabel(i)) * n + relabel(j)] =
                relabel(flat[static_cast<std::size_t>(i) * n + j]);
    if (!labels.empty() && e != 0) std::swap(labels[0], labels[e]);
    for (auto& [nm, idx] : named_gens) idx = relabel(idx);
    check_associativity(canon, n, n <= 1024);
    return make_group_unchecked(std::move(name), std::move(canon), n, std::move(labels),
                                std::move(named_gens));
}

bool Subgroup::is_abelian() const {
    const auto elems = elements();
    for (const int a : elems)
        for (const int b : elems)
            if (parent->mul(a, b) != parent->mul(b, a)) return false;
    return true;
}

bool Subgroup::is_cyclic() const {
    const int n = order();
    for (const int a : members.elements())
        if (parent->element_order(a) == n) return true;
    return false;
}

bool Subgroup::is_elementary_abelian() const {
    const int p = parent->prime();
    if (p == 0 || !is_abelian()) return false;
    for (const int a : elements())
        if (a != 0 && parent->element_order(a) != p) return false;
    return true;
}

int Subgroup::exponent() const {
    long long l = 1;
    for (const int a : elements()) l = std::lcm(l, static_cast<long long>(parent->element_order(a)));
    return static_cast<int>(l);
}

Automorphism::Automorphism(GroupPtr g, std::vector<int> img) : parent(std::move(g)), image(std::move(img)) {
    const int n = parent->order();
    if (static_cast<int>(image.size()) != n)
        throw std::invalid_argument("automorphism: image length mismatch");
    std::vector<char> seen(n, 0);
    for (const int v : image) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("automorphism: image is not a bijection");
        seen[v] = 1;
    }
    if (image[0] != 0) throw std::invalid_argument("automorphism: identity not fixed");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (image[parent->mul(a, b)] != parent->mul(image[a], image[b]))
                throw std::invalid_argument("automorphism: not a homomorphism");
}

// --- family constructors ---

GroupPtr cyclic_group(int p, int n) {
    if (p < 2 || prime_power_base(p) != p || n < 1)
        throw std::invalid_argument("cyclic_group: need a prime p and exponent n >= 1");
    long long order = 1;
    for (int i = 0; i < n; ++i) {
        order *= p;
        if (order > static_cast<long long>(limits().max_group_order))
            throw std::invalid_argument("cyclic_group: order exceeds the configured maximum");
    }
    const int m = static_cast<int>(order);
    std::vector<int> table(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) table[static_cast<std::size_t>(i) * m + j] = (i + j) % m;
    std::vector<std::string> labels(m);
    labels[0] = "1";
    for (int i = 1; i < m; ++i) labels[i] = i == 1 ? "a" : "a^" + std::to_string(i);
    return make_group_unchecked("cyclic(" + std::to_string(p) + "," + std::to_string(n) + ")",
                                std::move(table), m, std::move(labels), {{"a", 1}});
}

namespace {

// Groups with presentation a^m = 1, b^p = a^l, b a b^-1 = a^i, where m = p^(n-1).
// Element a^j b^k has index k*m + j.
GroupPtr two_generator_metacyclic(std::string name, int p, int m, long i, int l) {
    const long long order = static_cast<long long>(m) * p;
    if (order > static_cast<long long>(limits().max_group_order))
        throw std::invalid_argument(name + ": order exceeds the configured maximum");
    const int n = static_cast<int>(order);
    // i^k mod m for k < p
    std::vector<long> ipow(p, 1);
    for (int k = 1; k < p; ++k) ipow[k] = (ipow[k - 1] * ((i % m + m) % m)) % m;
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int j1 = 0; j1 < m; ++j1)
        for (int k1 = 0; k1 < p; ++k1)
            for (int j2 = 0; j2 < m; ++j2)
                for (int k2 = 0; k2 < p; ++k2) {
                    // a^j1 b^k1 a^j2 b^k2 = a^(j1 + j2 i^k1 + l [k1+k2 >= p]) b^(k1+k2 mod p)
                    const int carries = (k1 + k2) / p;
                    const long j = (j1 + j2 * ipow[k1] + static_cast<long>(l) * carries) % m;
                    const int k = (k1 + k2) % p;
                    table[(static_cast<std::size_t>(k1) * m + j1) * n + (static_cast<std::size_t>(k2) * m + j2)] =
                        k * m + static_cast<int>(j);
                }
    std::vector<std::string> labels(n);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < p; ++k) {
            std::string s;
            if (j == 1) s = "a";
            else if (j > 1) s = "a^" + std::to_string(j);
            if (k >= 1) {
                if (!s.empty()) s += "*";
                s += k == 1 ? "b" : "b^" + std::to_string(k);
            }
            if (s.empty()) s = "1";
            labels[k * m + j] = std::move(s);
        }
    std::vector<std::pair<std::string, int>> gens = {{"a", 1}, {"b", m}};
    if (p == 2 && m >= 2) gens.emplace_back("z", m / 2);
    return make_group_unchecked(std::move(name), std::move(table), n, std::move(labels),
                                std::move(gens));
}

int log2_exact(int order) {
    if (order < 2 || (order & (order - 1)) != 0) return -1;
    return std::countr_zero(static_cast<unsigned>(order));
}

}  // namespace

GroupPtr dihedral_group(int order) {
    const int n = log2_exact(order);
    if (n < 3) throw std::invalid_argument("dihedral_group: order must be 2^n with n >= 3");
    const int m = order / 2;
    return two_generator_metacyclic("dihedral(" + std::to_string(order) + ")", 2, m, m - 1, 0);
}

GroupPtr semidihedral_group(int order) {
    const int n = log2_exact(order);
    if (n < 4) throw std::invalid_argument("semidihedral_group: order must be 2^n with n >= 4");
    const int m = order / 2;
    return two_generator_metacyclic("semidihedral(" + std::to_string(order) + ")", 2, m,
                                    m / 2 - 1, 0);
}

GroupPtr quaternion_group(int order) {
    const int n = log2_exact(order);
    if (n < 3)
        throw std::invalid_argument("quaternion_group: order must be 2^n with n >= 3");
    const int m = order / 2;
    return two_generator_metacyclic("quaternion(" + std::to_string(order) + ")", 2, m, m - 1,
                                    m / 2);
}

GroupPtr modular_maximal_cyclic_group(int p, int n) {
    if (p < 2 || prime_power_base(p) != p)
        throw std::invalid_argument("modular_maximal_cyclic_group: p must be prime");
    if (n < 3 || (p == 2 && n < 4))
        throw std::invalid_argument(
            "modular_maximal_cyclic_group: need n >= 3 (n >= 4 when p = 2)");
    long long m = 1;
    for (int i = 0; i < n - 1; ++i) m *= p;
    if (m * p > static_cast<long long>(limits().max_group_order))
        throw std::invalid_argument(
            "modular_maximal_cyclic_group: order exceeds the configured maximum");
    const long l = static_cast<long>(m / p);  // p^(n-2)
    return two_generator_metacyclic(
        "modular(" + std::to_string(p) + "," + std::to_string(n) + ")", p,
        static_cast<int>(m), l + 1, 0);
}

namespace {

// Heisenberg group: upper unitriangular 3x3 matrices over GF(p); the unique
// nonabelian group of order p^3 and exponent p for odd p.
GroupPtr heisenberg_group(int p) {
    const int n = p * p * p;
    auto idx = [&](int x, int y, int w) { return (x * p + y) * p + w; };
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x1 = 0; x1 < p; ++x1)
        for (int y1 = 0; y1 < p; ++y1)
            for (int w1 = 0; w1 < p; ++w1)
                for (int x2 = 0; x2 < p; ++x2)
                    for (int y2 = 0; y2 < p; ++y2)
                        for (int w2 = 0; w2 < p; ++w2)
                            table[static_cast<std::size_t>(idx(x1, y1, w1)) * n +
                                  idx(x2, y2, w2)] =
                                idx((x1 + x2) % p, (y1 + y2) % p,
                                    (w1 + w2 + x1 * y2) % p);
    std::vector<std::string> labels(n);
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y)
            for (int w = 0; w < p; ++w) {
                std::string s;
                auto append = [&](const char* gen, int e) {
                    if (e == 0) return;
                    if (!s.empty()) s += "*";
                    s += gen;
                    if (e > 1) s += "^" + std::to_string(e);
                };
                append("a", x);
                append("b", y);
                append("z", w);
                if (s.empty()) s = "1";
                labels[idx(x, y, w)] = std::move(s);
            }
    return make_group_unchecked("heisenberg(" + std::to_string(p) + ")", std::move(table), n,
                                std::move(labels),
                                {{"a", idx(1, 0, 0)}, {"b", idx(0, 1, 0)}, {"z", idx(0, 0, 1)}});
}

}  // namespace

ExtraspecialKind parse_extraspecial_kind(const std::string& text, int p) {
    if (text == "plus" || text == "+") return p == 2 ? ExtraspecialKind::Plus : ExtraspecialKind::ExponentP;
    if (text == "minus" || text == "-") return p == 2 ? ExtraspecialKind::Minus : ExtraspecialKind::ExponentP2;
    if (text == "exponent-p" || text == "p") return ExtraspecialKind::ExponentP;
    if (text == "exponent-p2" || text == "exponent-p^2" || text == "p2")
        return ExtraspecialKind::ExponentP2;
    throw std::invalid_argument("extraspecial kind '" + text +
                                "': expected plus|minus|exponent-p|exponent-p2");
}

GroupPtr extraspecial_group(int p, int order, ExtraspecialKind kind) {
    if (p < 2 || prime_power_base(p) != p)
        throw std::invalid_argument("extraspecial_group: p must be prime");
    // order = p^(1+2m)
    int m = 0;
    long long v = static_cast<long long>(order) / p;
    if (order % p != 0) v = 0;
    while (v > 1 && v % (static_cast<long long>(p) * p) == 0) {
        v /= static_cast<long long>(p) * p;
        ++m;
    }
    if (v != 1 || m < 1)
        throw std::invalid_argument("extraspecial_group: order must be p^(1+2m), m >= 1");
    if (p == 2 && (kind == ExtraspecialKind::ExponentP || kind == ExtraspecialKind::ExponentP2))
        throw std::invalid_argument("extraspecial_group: exponent kinds apply to odd p only");
    if (p > 2 && (kind == ExtraspecialKind::Plus || kind == ExtraspecialKind::Minus))
        kind = kind == ExtraspecialKind::Plus ? ExtraspecialKind::ExponentP
                                              : ExtraspecialKind::ExponentP2;

    auto base_factor = [&](bool last) -> GroupPtr {
        if (p == 2)
            return (kind == ExtraspecialKind::Minus && last) ? quaternion_group(8)
                                                             : dihedral_group(8);
        return (kind == ExtraspecialKind::ExponentP2 && last)
                   ? modular_maximal_cyclic_group(p, 3)
                   : heisenberg_group(p);
    };
    GroupPtr g = base_factor(m == 1);
    for (int i = 1; i < m; ++i) g = central_product(g, base_factor(i == m - 1));

    std::string kind_name;
    switch (kind) {
        case ExtraspecialKind::Plus: kind_name = "plus"; break;
        case ExtraspecialKind::Minus: kind_name = "minus"; break;
        case ExtraspecialKind::ExponentP: kind_name = "exponent-p"; break;
        case ExtraspecialKind::ExponentP2: kind_name = "exponent-p2"; break;
    }
    auto named = g->named_generators();
    std::vector<int> flat(static_cast<std::size_t>(g->order()) * g->order());
    for (int i = 0; i < g->order(); ++i)
        for (int j = 0; j < g->order(); ++j)
            flat[static_cast<std::size_t>(i) * g->order() + j] = g->mul(i, j);
    return make_group_unchecked("extraspecial(" + std::to_string(p) + "," +
                                    std::to_string(order) + "," + kind_name + ")",
                                std::move(flat), g->order(), g->labels(), std::move(named));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h) {
    const long long order = static_cast<long long>(g->order()) * h->order();
    if (order > static_cast<long long>(limits().max_group_order))
        throw std::invalid_argument("direct_product: order exceeds the configured maximum");
    const int n = static_cast<int>(order);
    const int hn = h->order();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a1 = 0; a1 < g->order(); ++a1)
        for (int b1 = 0; b1 < hn; ++b1)
            for (int a2 = 0; a2 < g->order(); ++a2)
                for (int b2 = 0; b2 < hn; ++b2)
                    table[static_cast<std::size_t>(a1 * hn + b1) * n + (a2 * hn + b2)] =
                        g->mul(a1, a2) * hn + h->mul(b1, b2);
    std::vector<std::string> labels(n);
    for (int a = 0; a < g->order(); ++a)
        for (int b = 0; b < hn; ++b) labels[a * hn + b] = "(" + g->label(a) + "," + h->label(b) + ")";
    std::vector<std::pair<std::string, int>> gens;
    for (const auto& [nm, idx] : g->named_generators()) gens.emplace_back(nm + "1", idx * hn);
    for (const auto& [nm, idx] : h->named_generators()) gens.emplace_back(nm + "2", idx);
    return make_group_unchecked("direct(" + g->name() + "," + h->name() + ")", std::move(table),
                                n, std::move(labels), std::move(gens));
}

GroupPtr quotient_group(const GroupPtr& g, const Subgroup& nsub) {
    if (nsub.parent != g) throw std::invalid_argument("quotient_group: subgroup of another group");
    if (!is_normal(g, nsub)) throw std::invalid_argument("quotient_group: subgroup is not normal");
    const int n = g->order();
    const auto nelems = nsub.elements();
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        const int c = static_cast<int>(reps.size());
        reps.push_back(x);  // x ascending, so the rep is the coset minimum
        for (const int m : nelems) coset_of[g->mul(x, m)] = c;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<int> table(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            table[static_cast<std::size_t>(i) * q + j] = coset_of[g->mul(reps[i], reps[j])];
    std::vector<std::string> labels(q);
    for (int i = 0; i < q; ++i) labels[i] = g->label(reps[i]);
    std::vector<std::pair<std::string, int>> gens;
    for (const auto& [nm, idx] : g->named_generators()) gens.emplace_back(nm, coset_of[idx]);
    return make_group_unchecked(g->name() + "/N" + std::to_string(nsub.order()),
                                std::move(table), q, std::move(labels), std::move(gens));
}

GroupPtr central_product(const GroupPtr& g, const Subgroup& zg, const GroupPtr& h,
                         const Subgroup& zh, const std::vector<std::pair<int, int>>& iso) {
    if (zg.parent != g || zh.parent != h)
        throw std::invalid_argument("central_product: subgroups of the wrong parents");
    if (!center(g).members.contains(zg.members) || !center(h).members.contains(zh.members))
        throw std::invalid_argument("central_product: amalgamated subgroups must be central");
    if (zg.order() != zh.order() || static_cast<int>(iso.size()) != zg.order())
        throw std::invalid_argument("central_product: iso must pair the two subgroups");
    std::vector<int> phi(g->order(), -1);
    for (const auto& [a, b] : iso) {
        if (!zg.contains(a) || !zh.contains(b))
            throw std::invalid_argument("central_product: iso pairs outside the subgroups");
        phi[a] = b;
    }
    for (const int a : zg.elements()) {
        if (phi[a] < 0) throw std::invalid_argument("central_product: iso misses an element");
        for (const int b : zg.elements())
            if (phi[g->mul(a, b)] != h->mul(phi[a], phi[b]))
                throw std::invalid_argument("central_product: iso is not an isomorphism");
    }
    GroupPtr prod = direct_product(g, h);
    IndexSet kernel(prod->order());
    for (const int a : zg.elements()) kernel.set(a * h->order() + h->inv(phi[a]));
    return quotient_group(prod, Subgroup{prod, kernel});
}

GroupPtr central_product(const GroupPtr& g, const GroupPtr& h) {
    const Subgroup zg = center(g), zh = center(h);
    const int p = g->prime();
    if (p == 0 || zg.order() != p || zh.order() != p || h->prime() != p)
        throw std::invalid_argument(
            "central_product: canonical form needs centers of equal prime order");
    const int a = zg.elements()[1];  // smallest nontrivial central element
    const int b = zh.elements()[1];
    std::vector<std::pair<int, int>> iso;
    for (int k = 0; k < p; ++k) iso.emplace_back(g->power(a, k), h->power(b, k));
    return central_product(g, zg, h, zh, iso);
}

GroupPtr semidirect_product(const GroupPtr& g, const std::vector<Automorphism>& acting) {
    const int n = g->order();
    for (const auto& a : acting)
        if (a.parent != g)
            throw std::invalid_argument("semidirect_product: automorphism of another group");
    // close the acting set under composition
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    std::vector<std::vector<int>> auts = {id};
    std::map<std::vector<int>, int> index = {{id, 0}};
    std::queue<int> work;
    auto push = [&](std::vector<int> perm) {
        if (index.count(perm)) return;
        if (static_cast<long long>(auts.size() + 1) * n >
            static_cast<long long>(limits().max_group_order))
            throw std::invalid_argument(
                "semidirect_product: closure exceeds the configured maximum");
        const int idx = static_cast<int>(auts.size());
        index.emplace(perm, idx);
        auts.push_back(std::move(perm));
        work.push(idx);
    };
    for (const auto& a : acting) push(a.image);
    while (!work.empty()) {
        const int i = work.front();
        work.pop();
        for (std::size_t j = 0; j < auts.size(); ++j) {
            for (const auto& [x, y] : {std::pair<int, int>{i, static_cast<int>(j)},
                                       std::pair<int, int>{static_cast<int>(j), i}}) {
                std::vector<int> comp(n);
                for (int t = 0; t < n; ++t) comp[t] = auts[x][auts[y][t]];
                push(std::move(comp));
            }
        }
    }
    const int an = static_cast<int>(auts.size());
    std::vector<int> comp_table(static_cast<std::size_t>(an) * an);
    for (int i = 0; i < an; ++i)
        for (int j = 0; j < an; ++j) {
            std::vector<int> comp(n);
            for (int t = 0; t < n; ++t) comp[t] = auts[i][auts[j][t]];
            comp_table[static_cast<std::size_t>(i) * an + j] = index.at(comp);
        }
    const int total = n * an;
    std::vector<int> table(static_cast<std::size_t>(total) * total);
    // (g1, t1)(g2, t2) = (g1 * t1(g2), t1 t2); element (g, t) has index t*n + g
    for (int t1 = 0; t1 < an; ++t1)
        for (int g1 = 0; g1 < n; ++g1)
            for (int t2 = 0; t2 < an; ++t2)
                for (int g2 = 0; g2 < n; ++g2)
                    table[static_cast<std::size_t>(t1 * n + g1) * total + (t2 * n + g2)] =
                        comp_table[static_cast<std::size_t>(t1) * an + t2] * n +
                        g->mul(g1, auts[t1][g2]);
    std::vector<std::string> labels(total);
    for (int t = 0; t < an; ++t)
        for (int x = 0; x < n; ++x)
            labels[t * n + x] =
                t == 0 ? g->label(x) : g->label(x) + ".t" + std::to_string(t);
    std::vector<std::pair<std::string, int>> gens(g->named_generators());
    for (std::size_t i = 0; i < acting.size(); ++i)
        gens.emplace_back("t" + std::to_string(i + 1), index.at(acting[i].image) * n);
    return make_group_unchecked("semidirect(" + g->name() + "," + std::to_string(acting.size()) +
                                    ")",
                                std::move(table), total, std::move(labels), std::move(gens));
}

GroupPtr from_permutation_generators(int degree, const std::vector<std::vector<int>>& gens) {
    if (degree < 1) throw std::invalid_argument("permutation generators: degree must be >= 1");
    for (const auto& p : gens) {
        if (static_cast<int>(p.size()) != degree)
            throw std::invalid_argument("permutation generators: wrong image length");
        std::vector<char> seen(degree, 0);
        for (const int v : p) {
            if (v < 0 || v >= degree || seen[v])
                throw std::invalid_argument("permutation generators: not a permutation");
            seen[v] = 1;
        }
    }
    std::vector<int> id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;
    std::vector<std::vector<int>> elems = {id};
    std::map<std::vector<int>, int> index = {{id, 0}};
    std::queue<int> work;
    auto push = [&](std::vector<int> perm) {
        if (index.count(perm)) return;
        if (elems.size() + 1 > limits().max_group_order)
            throw std::invalid_argument(
                "permutation generators: closure exceeds the configured maximum");
        index.emplace(perm, static_cast<int>(elems.size()));
        work.push(static_cast<int>(elems.size()));
        elems.push_back(std::move(perm));
    };
    for (const auto& p : gens) push(p);
    while (!work.empty()) {
        const int i = work.front();
        work.pop();
        for (std::size_t j = 0; j < elems.size(); ++j) {
            for (const auto& [x, y] : {std::pair<int, int>{i, static_cast<int>(j)},
                                       std::pair<int, int>{static_cast<int>(j), i}}) {
                std::vector<int> comp(degree);
                for (int t = 0; t < degree; ++t) comp[t] = elems[x][elems[y][t]];
                push(std::move(comp));
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> comp(degree);
            for (int t = 0; t < degree; ++t) comp[t] = elems[i][elems[j][t]];
            table[static_cast<std::size_t>(i) * n + j] = index.at(comp);
        }
    return make_group_unchecked("perm(deg=" + std::to_string(degree) + ")", std::move(table), n,
                                {}, {});
}

GroupPtr subgroup_as_group(const Subgroup& h, std::vector<int>* global_of_local) {
    const auto elems = h.elements();
    const int n = static_cast<int>(elems.size());
    std::vector<int> local_of(h.parent->order(), -1);
    for (int i = 0; i < n; ++i) local_of[elems[i]] = i;
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int prod = h.parent->mul(elems[i], elems[j]);
            if (local_of[prod] < 0)
                throw std::invalid_argument("subgroup_as_group: set is not closed");
            table[static_cast<std::size_t>(i) * n + j] = local_of[prod];
        }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = h.parent->label(elems[i]);
    if (global_of_local) *global_of_local = elems;
    return make_group_unchecked(h.parent->name() + ":sub" + std::to_string(n), std::move(table),
                                n, std::move(labels), {});
}

// --- subgroup computations ---

Subgroup trivial_subgroup(const GroupPtr& g) {
    IndexSet m(g->order());
    m.set(0);
    return {g, m};
}

Subgroup whole_group(const GroupPtr& g) { return {g, IndexSet::full(g->order())}; }

namespace {

// closure of `seed` (already closed, or empty for {1}) together with `extra`
IndexSet close_under_products(const Group& g, const IndexSet& seed,
                              const std::vector<int>& extra) {
    IndexSet members(g.order());
    std::vector<int> elems;
    std::queue<int> work;
    auto push = [&](int x, bool frontier) {
        if (members.test(x)) return;
        members.set(x);
        elems.push_back(x);
        if (frontier) work.push(x);
    };
    push(0, false);
    for (const int x : seed.elements()) push(x, false);
    for (const int x : extra) push(x, true);
    while (!work.empty()) {
        const int x = work.front();
        work.pop();
        for (std::size_t k = 0; k < elems.size(); ++k) {
            const int y = elems[k];
            push(g.mul(x, y), true);
            push(g.mul(y, x), true);
        }
    }
    return members;
}

}  // namespace

Subgroup subgroup_generated(const GroupPtr& g, std::span<const int> gens) {
    for (const int x : gens)
        if (x < 0 || x >= g->order())
            throw std::invalid_argument("subgroup_generated: generator index out of range");
    return {g, close_under_products(*g, IndexSet(g->order()),
                                    std::vector<int>(gens.begin(), gens.end()))};
}

Subgroup centralizer(const GroupPtr& g, const Subgroup& q) {
    if (q.parent != g) throw std::invalid_argument("centralizer: subgroup of another group");
    const auto qelems = q.elements();
    IndexSet m(g->order());
    for (int x = 0; x < g->order(); ++x) {
        bool ok = true;
        for (const int y : qelems) {
            if (g->mul(x, y) != g->mul(y, x)) { ok = false; break; }
        }
        if (ok) m.set(x);
    }
    return {g, m};
}

Subgroup centralizer_of_element(const GroupPtr& g, int x) {
    const int gens[1] = {x};
    return centralizer(g, subgroup_generated(g, gens));
}

Subgroup center(const GroupPtr& g) { return centralizer(g, whole_group(g)); }

Subgroup commutator_subgroup(const GroupPtr& g, const Subgroup& a, const Subgroup& b) {
    if (a.parent != g || b.parent != g)
        throw std::invalid_argument("commutator_subgroup: subgroup of another group");
    std::vector<int> gens;
    for (const int x : a.elements())
        for (const int y : b.elements()) gens.push_back(g->commutator(x, y));
    return subgroup_generated(g, gens);
}

Subgroup agemo(const GroupPtr& g, const Subgroup& h) {
    const int p = g->prime();
    if (p == 0) throw std::invalid_argument("agemo: not a p-group");
    std::vector<int> gens;
    for (const int x : h.elements()) gens.push_back(g->power(x, p));
    return subgroup_generated(g, gens);
}

Subgroup frattini(const GroupPtr& g, const Subgroup& h) {
    const int p = g->prime();
    if (p == 0) throw std::invalid_argument("frattini: not a p-group");
    std::vector<int> gens;
    for (const int x : h.elements()) gens.push_back(g->power(x, p));
    for (const int x : h.elements())
        for (const int y : h.elements()) gens.push_back(g->commutator(x, y));
    return subgroup_generated(g, gens);
}

Subgroup normal_closure(const GroupPtr& g, const Subgroup& h) {
    std::vector<int> gens;
    for (const int x : h.elements())
        for (int c = 0; c < g->order(); ++c) gens.push_back(g->conj(c, x));
    return subgroup_generated(g, gens);
}

bool is_normal(const GroupPtr& g, const Subgroup& h) {
    for (const int x : h.elements())
        for (int c = 0; c < g->order(); ++c)
            if (!h.contains(g->conj(c, x))) return false;
    return true;
}

namespace {

std::vector<std::vector<int>> orbits_under_conjugation(const Group& g,
                                                       const std::vector<int>& conjugators) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> orbits;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::vector<int> orbit;
        std::queue<int> work;
        seen[x] = 1;
        work.push(x);
        while (!work.empty()) {
            const int y = work.front();
            work.pop();
            orbit.push_back(y);
            for (const int c : conjugators) {
                const int z = g.conj(c, y);
                if (!seen[z]) { seen[z] = 1; work.push(z); }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace

std::vector<std::vector<int>> conjugacy_classes(const GroupPtr& g) {
    std::vector<int> all(g->order());
    for (int i = 0; i < g->order(); ++i) all[i] = i;
    return orbits_under_conjugation(*g, all);
}

std::vector<std::vector<int>> q_orbits(const GroupPtr& g, const Subgroup& q) {
    if (q.parent != g) throw std::invalid_argument("q_orbits: subgroup of another group");
    return orbits_under_conjugation(*g, q.elements());
}

int nilpotency_class(const GroupPtr& g) {
    if (g->order() == 1) return 0;
    Subgroup term = whole_group(g);
    int c = 0;
    while (term.order() > 1) {
        term = commutator_subgroup(g, term, whole_group(g));
        ++c;
        if (c > g->order()) throw std::runtime_error("nilpotency_class: series does not reach 1");
    }
    return c;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
    const int n = g->order();
    std::set<IndexSet> seen;
    std::vector<IndexSet> found;
    std::queue<IndexSet> work;
    IndexSet triv(n);
    triv.set(0);
    seen.insert(triv);
    found.push_back(triv);
    work.push(triv);
    while (!work.empty()) {
        const IndexSet h = work.front();
        work.pop();
        for (int x = 1; x < n; ++x) {
            if (h.test(x)) continue;
            IndexSet k = close_under_products(*g, h, {x});
            if (seen.insert(k).second) {
                found.push_back(k);
                work.push(k);
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const IndexSet& a, const IndexSet& b) {
        const auto ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a < b;
    });
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& m : found) out.push_back({g, std::move(m)});
    return out;
}

std::vector<std::vector<int>> subgroup_conjugacy_classes(const GroupPtr& g,
                                                         const std::vector<Subgroup>& subs) {
    std::map<IndexSet, int> index;
    for (std::size_t i = 0; i < subs.size(); ++i) index.emplace(subs[i].members, static_cast<int>(i));
    std::vector<char> seen(subs.size(), 0);
    std::vector<std::vector<int>> classes;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cls;
        std::queue<int> work;
        seen[i] = 1;
        work.push(static_cast<int>(i));
        while (!work.empty()) {
            const int j = work.front();
            work.pop();
            cls.push_back(j);
            for (int c = 0; c < g->order(); ++c) {
                IndexSet img(g->order());
                for (const int x : subs[j].elements()) img.set(g->conj(c, x));
                const auto it = index.find(img);
                if (it == index.end())
                    throw std::runtime_error("subgroup_conjugacy_classes: conjugate missing");
                if (!seen[it->second]) { seen[it->second] = 1; work.push(it->second); }
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace loewylab
