#include "loewylab/loewy.hpp"

#include <stdexcept>

namespace loewylab {

void PoincarePolynomial::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

long long PoincarePolynomial::eval_one() const {
    long long s = 0;
    for (const auto c : coeffs) s += c;
    return s;
}

bool PoincarePolynomial::palindromic() const {
    for (std::size_t i = 0, j = coeffs.size(); i < j; ++i)
        if (coeffs[i] != coeffs[coeffs.size() - 1 - i]) return false;
    return true;
}

PoincarePolynomial PoincarePolynomial::one() { return {{1}}; }

PoincarePolynomial PoincarePolynomial::monomial(long long c, int k) {
    PoincarePolynomial p;
    p.coeffs.assign(k + 1, 0);
    p.coeffs[k] = c;
    p.normalize();
    return p;
}

PoincarePolynomial PoincarePolynomial::geometric(int n, int p) {
    PoincarePolynomial out;
    out.coeffs.assign(static_cast<std::size_t>(n) * (p - 1) + 1, 0);
    for (int i = 0; i < p; ++i) out.coeffs[static_cast<std::size_t>(i) * n] = 1;
    return out;
}

PoincarePolynomial PoincarePolynomial::operator*(const PoincarePolynomial& other) const {
    if (coeffs.empty() || other.coeffs.empty()) return {};
    PoincarePolynomial out;
    out.coeffs.assign(coeffs.size() + other.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i]) continue;
        for (std::size_t j = 0; j < other.coeffs.size(); ++j)
            out.coeffs[i + j] += coeffs[i] * other.coeffs[j];
    }
    out.normalize();
    return out;
}

PoincarePolynomial PoincarePolynomial::operator+(const PoincarePolynomial& other) const {
    PoincarePolynomial out;
    out.coeffs.assign(std::max(coeffs.size(), other.coeffs.size()), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += coeffs[i];
    for (std::size_t i = 0; i < other.coeffs.size(); ++i) out.coeffs[i] += other.coeffs[i];
    out.normalize();
    return out;
}

PoincarePolynomial PoincarePolynomial::pow(int e) const {
    PoincarePolynomial out = one();
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

PoincarePolynomial PoincarePolynomial::shifted(int k) const {
    return *this * monomial(1, k);
}

bool is_symmetric(const LoewySeries& s) {
    return poincare(s).palindromic();
}

PoincarePolynomial poincare(const LoewySeries& s) {
    PoincarePolynomial p;
    p.coeffs.assign(s.layer_dims.begin(), s.layer_dims.end());
    p.normalize();
    return p;
}

namespace {

void validate_subalgebra(const Subalgebra& a) {
    if (!a.span.contains(a.ctx.one()))
        throw std::invalid_argument("subalgebra: does not contain the identity");
    const auto rows = a.span.basis_rows();
    for (const auto& u : rows)
        for (const auto& v : rows)
            if (!a.span.contains(a.ctx.multiply(u, v)))
                throw std::invalid_argument("subalgebra: basis is not closed under multiplication");
}

// basis vectors of J independent modulo J^2; they span J/J^2, and
// J^m = span{ s * v : s in S, v basis of J^(m-1) } for m >= 2.
std::vector<FpVec> radical_generators(const Subspace& j, const Subspace& j2) {
    std::vector<FpVec> s;
    SpanBuilder sb(j2);
    for (const auto& row : j.basis_rows())
        if (sb.insert(row)) s.push_back(row);
    return s;
}

Subspace multiply_span(const GroupAlgebra& ctx, const std::vector<FpVec>& gens,
                       const Subspace& v, Side side) {
    SpanBuilder sb(ctx.prime(), ctx.dim());
    const auto vrows = v.basis_rows();
    for (const auto& s : gens)
        for (const auto& row : vrows)
            sb.insert(side == Side::Left ? ctx.multiply(s, row) : ctx.multiply(row, s));
    return sb.take();
}

}  // namespace

Subspace radical(const Subalgebra& a) {
    validate_subalgebra(a);
    SpanBuilder sb(a.ctx.prime(), a.ctx.dim());
    const FpVec unit = a.ctx.one();
    const int p = a.ctx.prime();
    for (const auto& row : a.span.basis_rows()) {
        FpVec v = row;
        const std::uint8_t eps = a.ctx.augmentation(row);
        if (eps)
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] = static_cast<std::uint8_t>((v[i] + (p - eps) * unit[i]) % p);
        sb.insert(v);
    }
    return sb.take();
}

std::vector<Subspace> radical_power_chain(const Subalgebra& a, Side side) {
    std::vector<Subspace> chain = {a.span};
    Subspace j = radical(a);
    chain.push_back(j);
    if (j.dim() == 0) return chain;
    auto mul = [&](const FpVec& u, const FpVec& v) { return a.ctx.multiply(u, v); };
    Subspace j2 = product_space(j, j, mul);
    chain.push_back(j2);
    const std::vector<FpVec> gens = radical_generators(j, j2);
    while (chain.back().dim() > 0) {
        Subspace next = multiply_span(a.ctx, gens, chain.back(), side);
        if (next.dim() >= chain.back().dim())
            throw std::runtime_error("radical_power_chain: radical is not nilpotent");
        chain.push_back(std::move(next));
    }
    return chain;
}

LoewySeries radical_series(const Subalgebra& a) {
    const auto chain = radical_power_chain(a);
    LoewySeries s;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        s.layer_dims.push_back(static_cast<int>(chain[i].dim() - chain[i + 1].dim()));
    while (!s.layer_dims.empty() && s.layer_dims.back() == 0) s.layer_dims.pop_back();
    return s;
}

int loewy_length(const Subalgebra& a) { return radical_series(a).length(); }

LoewySeries module_radical_series(const Subalgebra& a, const Subspace& m) {
    for (const auto& u : a.span.basis_rows())
        for (const auto& v : m.basis_rows())
            if (!m.contains(a.ctx.multiply(u, v)))
                throw std::invalid_argument("module_radical_series: subspace is not A-invariant");
    const Subspace j = radical(a);
    std::vector<Subspace> chain = {m};
    if (j.dim() > 0 && m.dim() > 0) {
        auto mul = [&](const FpVec& u, const FpVec& v) { return a.ctx.multiply(u, v); };
        const Subspace j2 = product_space(j, j, mul);
        const std::vector<FpVec> gens = radical_generators(j, j2);
        while (chain.back().dim() > 0) {
            Subspace next = multiply_span(a.ctx, gens, chain.back(), Side::Left);
            if (next.dim() >= chain.back().dim())
                throw std::runtime_error("module_radical_series: series does not terminate");
            chain.push_back(std::move(next));
        }
    }
    LoewySeries s;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        s.layer_dims.push_back(static_cast<int>(chain[i].dim() - chain[i + 1].dim()));
    if (chain.size() == 1 && m.dim() > 0) s.layer_dims.push_back(static_cast<int>(m.dim()));
    while (!s.layer_dims.empty() && s.layer_dims.back() == 0) s.layer_dims.pop_back();
    return s;
}

Subspace annihilator_in(const Subalgebra& a, const Subspace& s, Side side) {
    const auto arow = a.span.basis_rows();
    const auto srow = s.basis_rows();
    const std::size_t n = a.ctx.dim();
    if (srow.empty()) return a.span;
    FpMatrix stacked(a.ctx.prime(), srow.size() * n);
    for (std::size_t i = 0; i < arow.size(); ++i) {
        FpVec row(srow.size() * n, 0);
        for (std::size_t k = 0; k < srow.size(); ++k) {
            const FpVec prod = side == Side::Left ? a.ctx.multiply(srow[k], arow[i])
                                                  : a.ctx.multiply(arow[i], srow[k]);
            std::copy(prod.begin(), prod.end(), row.begin() + k * n);
        }
        stacked.append_row(row);
    }
    const Subspace combos = left_kernel(stacked);
    std::vector<FpVec> rows;
    const int p = a.ctx.prime();
    for (const auto& x : combos.basis_rows()) {
        FpVec v(n, 0);
        for (std::size_t i = 0; i < arow.size(); ++i) {
            if (!x[i]) continue;
            for (std::size_t c = 0; c < n; ++c)
                v[c] = static_cast<std::uint8_t>((v[c] + x[i] * arow[i][c]) % p);
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span(p, n, rows);
}

Subspace socle(const Subalgebra& a, Side side) {
    return annihilator_in(a, radical(a), side);
}

}  // namespace loewylab
