#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace loewylab {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Bitmask over the element indices of a fixed parent group.
class IndexSet {
public:
    IndexSet() : universe_(0) {}
    explicit IndexSet(std::size_t universe);
    static IndexSet full(std::size_t universe);

    std::size_t universe() const { return universe_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    std::size_t count() const;
    bool contains(const IndexSet& other) const;  // superset test
    IndexSet intersect(const IndexSet& other) const;
    std::vector<int> elements() const;  // ascending

    bool operator==(const IndexSet&) const = default;
    bool operator<(const IndexSet& other) const { return words_ < other.words_; }

private:
    std::size_t universe_;
    std::vector<std::uint64_t> words_;
};

// Finite group as a validated Cayley table. Identity is canonicalized to
// index 0. Immutable after construction.
class Group {
public:
    int order() const { return n_; }
    // p when the order is a power of the prime p, otherwise 0
    int prime() const { return prime_; }
    const std::string& name() const { return name_; }

    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inverses_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
    int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
    int power(int x, long e) const;
    int element_order(int x) const { return element_orders_[x]; }
    int exponent() const;
    bool is_abelian() const;
    bool is_cyclic() const;
    bool is_elementary_abelian() const;

    std::string label(int x) const;
    const std::vector<std::string>& labels() const { return labels_; }
    // designated generators ("a", "b", "z", ...) for subgroup words
    const std::vector<std::pair<std::string, int>>& named_generators() const {
        return named_generators_;
    }
    int named_generator(const std::string& name) const;  // -1 if absent

    // Validating constructor; relabels so the identity sits at index 0.
    // Associativity is checked on all triples up to order 1024, on random
    // samples above that.
    static GroupPtr from_table(std::string name, const std::vector<std::vector<int>>& table,
                               std::vector<std::string> labels = {},
                               std::vector<std::pair<std::string, int>> named_gens = {});

private:
    Group() = default;
    friend GroupPtr make_group_unchecked(std::string, std::vector<int>, int,
                                         std::vector<std::string>,
                                         std::vector<std::pair<std::string, int>>);

    int n_ = 0;
    int prime_ = 0;
    std::vector<int> table_;  // row-major n x n
    std::vector<int> inverses_;
    std::vector<int> element_orders_;
    std::vector<std::string> labels_;
    std::vector<std::pair<std::string, int>> named_generators_;
    std::string name_;
};

struct Subgroup {
    GroupPtr parent;
    IndexSet members;

    int order() const { return static_cast<int>(members.count()); }
    bool contains(int x) const { return members.test(static_cast<std::size_t>(x)); }
    std::vector<int> elements() const { return members.elements(); }
    bool is_trivial() const { return order() == 1; }
    bool is_whole_group() const { return order() == parent->order(); }
    bool is_abelian() const;
    bool is_cyclic() const;
    bool is_elementary_abelian() const;
    int exponent() const;
    bool operator==(const Subgroup& other) const {
        return parent == other.parent && members == other.members;
    }
};

// Bijection of a group with itself respecting multiplication; validated.
struct Automorphism {
    GroupPtr parent;
    std::vector<int> image;

    Automorphism(GroupPtr g, std::vector<int> img);
    int operator()(int x) const { return image[x]; }
};

// --- constructors for the group families ---

GroupPtr cyclic_group(int p, int n);
GroupPtr dihedral_group(int order);          // 2^n, n >= 3
GroupPtr semidihedral_group(int order);      // 2^n, n >= 4
GroupPtr quaternion_group(int order);        // 2^n, n >= 3
GroupPtr modular_maximal_cyclic_group(int p, int n);  // p^n, n >= 3 (n >= 4 for p = 2)

enum class ExtraspecialKind { Plus, Minus, ExponentP, ExponentP2 };
ExtraspecialKind parse_extraspecial_kind(const std::string& text, int p);
GroupPtr extraspecial_group(int p, int order, ExtraspecialKind kind);

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);
// (G x H) / {(z, iso(z)^-1)}: iso maps the elements of zg onto zh
GroupPtr central_product(const GroupPtr& g, const Subgroup& zg, const GroupPtr& h,
                         const Subgroup& zh, const std::vector<std::pair<int, int>>& iso);
// canonical central product amalgamating full centers of equal prime order
GroupPtr central_product(const GroupPtr& g, const GroupPtr& h);
GroupPtr semidirect_product(const GroupPtr& g, const std::vector<Automorphism>& acting);
GroupPtr quotient_group(const GroupPtr& g, const Subgroup& n);
GroupPtr from_permutation_generators(int degree, const std::vector<std::vector<int>>& gens);

// The subgroup as a group in its own right; global_of_local[i] gives the
// parent index of local element i (local identity is 0).
GroupPtr subgroup_as_group(const Subgroup& h, std::vector<int>* global_of_local = nullptr);

// --- subgroup-level operations ---

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
Subgroup subgroup_generated(const GroupPtr& g, std::span<const int> gens);
Subgroup centralizer(const GroupPtr& g, const Subgroup& q);
Subgroup centralizer_of_element(const GroupPtr& g, int x);
Subgroup center(const GroupPtr& g);
Subgroup commutator_subgroup(const GroupPtr& g, const Subgroup& a, const Subgroup& b);
Subgroup agemo(const GroupPtr& g, const Subgroup& h);     // <x^p : x in H>
Subgroup frattini(const GroupPtr& g, const Subgroup& h);  // agemo(H) [H,H] for p-groups
Subgroup normal_closure(const GroupPtr& g, const Subgroup& h);
bool is_normal(const GroupPtr& g, const Subgroup& h);

std::vector<std::vector<int>> conjugacy_classes(const GroupPtr& g);
// orbits of P under conjugation by Q
std::vector<std::vector<int>> q_orbits(const GroupPtr& g, const Subgroup& q);
int nilpotency_class(const GroupPtr& g);
std::vector<Subgroup> all_subgroups(const GroupPtr& g);
// partition of the subgroup list into conjugacy classes (vectors of indices)
std::vector<std::vector<int>> subgroup_conjugacy_classes(const GroupPtr& g,
                                                         const std::vector<Subgroup>& subs);

}  // namespace loewylab
