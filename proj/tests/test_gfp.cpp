#include "loewylab/gfp.hpp"

#include <doctest.h>

#include <random>

using namespace loewylab;

namespace {

FpVec vec(std::initializer_list<int> entries) {
    FpVec v;
    for (const int e : entries) v.push_back(static_cast<std::uint8_t>(e));
    return v;
}

FpMatrix from_rows(int p, std::size_t cols, const std::vector<FpVec>& rows) {
    FpMatrix m(p, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

std::vector<FpVec> random_vectors(int p, std::size_t ambient, std::size_t count,
                                  std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(0, p - 1);
    std::vector<FpVec> out(count, FpVec(ambient, 0));
    for (auto& v : out)
        for (auto& e : v) e = static_cast<std::uint8_t>(dist(rng));
    return out;
}

}  // namespace

TEST_CASE("rref basics") {
    CHECK(rank(from_rows(2, 4, {vec({0, 0, 0, 0})})) == 0);

    FpMatrix id3 = FpMatrix::identity(2, 3);
    auto r = rref(id3);
    CHECK(r.pivots == std::vector<int>{0, 1, 2});
    CHECK(r.mat == id3);

    // rows 110, 011, 101 over GF(2) are dependent: hand elimination gives rank 2
    CHECK(rank(from_rows(2, 3, {vec({1, 1, 0}), vec({0, 1, 1}), vec({1, 0, 1})})) == 2);
}

TEST_CASE("rref is idempotent and canonical") {
    std::mt19937 rng(7);
    for (const int p : {2, 3, 5}) {
        for (int trial = 0; trial < 25; ++trial) {
            const auto rows = random_vectors(p, 8, 5, rng);
            auto r1 = rref(from_rows(p, 8, rows));
            auto r2 = rref(r1.mat);
            CHECK(r1.mat == r2.mat);

            // a different spanning set of the same space has the same rref
            std::vector<FpVec> mixed;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                FpVec sum(8, 0);
                for (std::size_t j = 0; j <= i; ++j)
                    for (std::size_t c = 0; c < 8; ++c)
                        sum[c] = static_cast<std::uint8_t>((sum[c] + rows[j][c]) % p);
                mixed.push_back(std::move(sum));
            }
            auto r3 = rref(from_rows(p, 8, mixed));
            CHECK(r1.mat == r3.mat);
        }
    }
}

TEST_CASE("subspace arithmetic") {
    const Subspace zero(2, 4);
    const Subspace s = Subspace::span(2, 4, {vec({1, 0, 1, 0}), vec({0, 1, 1, 0})});
    CHECK(s.sum(zero) == s);
    CHECK(s.dim() == 2);

    const Subspace e1 = Subspace::span(2, 4, {vec({1, 0, 0, 0})});
    const Subspace e2 = Subspace::span(2, 4, {vec({0, 1, 0, 0})});
    CHECK(e1.intersect(e2).dim() == 0);

    // span{e1, e1+e2} = span{e1, e2}
    const Subspace a = Subspace::span(2, 4, {vec({1, 0, 0, 0}), vec({1, 1, 0, 0})});
    const Subspace b = Subspace::span(2, 4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0})});
    CHECK(a == b);
}

TEST_CASE("dim(sum) + dim(intersect) = dim(a) + dim(b)") {
    std::mt19937 rng(11);
    for (const int p : {2, 3}) {
        for (int trial = 0; trial < 40; ++trial) {
            const Subspace a = Subspace::span(p, 10, random_vectors(p, 10, 4, rng));
            const Subspace b = Subspace::span(p, 10, random_vectors(p, 10, 4, rng));
            CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
            CHECK(a.sum(b).contains(a));
            CHECK(a.contains(a.intersect(b)));
        }
    }
}

TEST_CASE("product_space is monotone and respects trivial factors") {
    // bilinear map: pointwise product (diagonal algebra)
    auto mul = [](const FpVec& u, const FpVec& v) {
        FpVec w(u.size(), 0);
        for (std::size_t i = 0; i < u.size(); ++i)
            w[i] = static_cast<std::uint8_t>(u[i] * v[i] % 3);
        return w;
    };
    std::mt19937 rng(3);
    const Subspace zero(3, 6);
    const Subspace v = Subspace::span(3, 6, random_vectors(3, 6, 3, rng));
    CHECK(product_space(v, zero, mul).dim() == 0);

    const Subspace u = Subspace::span(3, 6, random_vectors(3, 6, 3, rng));
    const Subspace usmall = Subspace::span(3, 6, {u.basis_row(0)});
    CHECK(product_space(u, v, mul).contains(product_space(usmall, v, mul)));

    const Subspace ones = Subspace::span(3, 6, {FpVec(6, 1)});  // identity for pointwise mult
    CHECK(product_space(ones, v, mul) == v);
}

TEST_CASE("left kernel and solve_left") {
    // rows r0 + r1 = r2 over GF(2)
    FpMatrix m = from_rows(2, 3, {vec({1, 1, 0}), vec({0, 1, 1}), vec({1, 0, 1})});
    const Subspace k = left_kernel(m);
    CHECK(k.dim() == 1);
    CHECK(k.contains(vec({1, 1, 1})));

    const auto x = solve_left(m, vec({1, 0, 1}));
    REQUIRE(x.has_value());
    // check x * m = b
    FpVec prod(3, 0);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t c = 0; c < 3; ++c) prod[c] ^= static_cast<std::uint8_t>((*x)[i] * m.get(i, c));
    CHECK(prod == vec({1, 0, 1}));

    FpMatrix tall = from_rows(3, 2, {vec({1, 0}), vec({0, 1})});
    CHECK(!solve_left(from_rows(3, 2, {vec({1, 0})}), vec({0, 1})).has_value());
    const auto y = solve_left(tall, vec({2, 1}));
    REQUIRE(y.has_value());
    CHECK(*y == vec({2, 1}));
}
