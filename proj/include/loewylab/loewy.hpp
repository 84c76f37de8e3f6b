#pragma once

#include "loewylab/algebra.hpp"

#include <vector>

namespace loewylab {

// Integer-coefficient polynomial counting layer dimensions.
struct PoincarePolynomial {
    std::vector<long long> coeffs;  // coeffs[i] is the coefficient of t^i, no trailing zeros

    void normalize();
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    long long eval_one() const;
    bool palindromic() const;
    long long coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0;
    }

    static PoincarePolynomial one();
    static PoincarePolynomial monomial(long long c, int k);
    // 1 + t^n + t^(2n) + ... + t^((p-1)n)
    static PoincarePolynomial geometric(int n, int p);

    PoincarePolynomial operator*(const PoincarePolynomial& other) const;
    PoincarePolynomial operator+(const PoincarePolynomial& other) const;
    PoincarePolynomial pow(int e) const;
    PoincarePolynomial shifted(int k) const;  // * t^k

    bool operator==(const PoincarePolynomial&) const = default;
};

struct LoewySeries {
    std::vector<int> layer_dims;  // dim J^i / J^(i+1), i = 0 .. length-1
    int length() const { return static_cast<int>(layer_dims.size()); }
};

bool is_symmetric(const LoewySeries& s);
PoincarePolynomial poincare(const LoewySeries& s);

// J(A) = Ker(augmentation) | A, the radical of a unital subalgebra of kP for a
// p-group P. Validates that the basis spans a unital, multiplicatively closed
// subspace.
Subspace radical(const Subalgebra& a);

enum class Side { Left, Right };

// A = J^0 >= J^1 >= ... >= J^L = 0
std::vector<Subspace> radical_power_chain(const Subalgebra& a, Side side = Side::Left);
LoewySeries radical_series(const Subalgebra& a);
int loewy_length(const Subalgebra& a);

// layers of M >= JM >= J^2 M >= ...; M must be an A-invariant subspace of kP
LoewySeries module_radical_series(const Subalgebra& a, const Subspace& m);

// {v in A : s v = 0 for all s in S} (or v s = 0 on the right)
Subspace annihilator_in(const Subalgebra& a, const Subspace& s, Side side = Side::Left);
// socle of the regular module: the annihilator of J(A)
Subspace socle(const Subalgebra& a, Side side = Side::Left);

}  // namespace loewylab
