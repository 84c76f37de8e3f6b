#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace loewylab {

// Coefficient vector over GF(p), one byte per entry, values in {0..p-1}.
using FpVec = std::vector<std::uint8_t>;

std::uint8_t fp_inverse(int p, std::uint8_t c);

// Dense matrix over GF(p). GF(2) rows are bit-packed into 64-bit words and
// row operations run word-parallel; odd primes use byte entries.
class FpMatrix {
public:
    FpMatrix(int p, std::size_t cols);
    static FpMatrix identity(int p, std::size_t n);

    int prime() const { return p_; }
    std::size_t rows() const { return nrows_; }
    std::size_t cols() const { return cols_; }

    void append_row(const FpVec& v);
    void append_zero_row();
    void pop_row();

    std::uint8_t get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, std::uint8_t v);

    // row[dst] += coeff * row[src]
    void axpy_row(std::size_t dst, std::size_t src, std::uint8_t coeff);
    void scale_row(std::size_t r, std::uint8_t coeff);
    void swap_rows(std::size_t a, std::size_t b);
    // first column >= from with a nonzero entry, or -1
    int first_nonzero(std::size_t r, std::size_t from = 0) const;
    bool row_is_zero(std::size_t r) const;
    FpVec row(std::size_t r) const;

    bool operator==(const FpMatrix&) const = default;

private:
    int p_;
    std::size_t cols_;
    std::size_t wpr_;  // words per row (p == 2)
    std::size_t nrows_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint8_t> bytes_;
};

struct RrefResult {
    FpMatrix mat;  // canonical reduced row-echelon form, zero rows dropped
    std::vector<int> pivots;
};

RrefResult rref(FpMatrix m);
std::size_t rank(const FpMatrix& m);

// Row space {x : x M = 0} of combinations annihilating M's rows.
class Subspace;
Subspace left_kernel(const FpMatrix& m);

// x with x A = b, if any.
std::optional<FpVec> solve_left(const FpMatrix& a, const FpVec& b);

// GF(p) subspace of a fixed ambient coordinate space, held as a canonical
// reduced row-echelon basis so equality of subspaces is equality of data.
class Subspace {
public:
    Subspace(int p, std::size_t ambient);  // zero subspace
    static Subspace span(int p, std::size_t ambient, const std::vector<FpVec>& vecs);

    int prime() const { return basis_.prime(); }
    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const FpMatrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    FpVec basis_row(std::size_t i) const { return basis_.row(i); }
    std::vector<FpVec> basis_rows() const;

    // v reduced against the basis; zero residue means membership
    FpVec reduce(FpVec v) const;
    bool contains(const FpVec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace&) const = default;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

private:
    friend class SpanBuilder;
    FpMatrix basis_;
    std::vector<int> pivots_;
};

// Incremental rref accumulator: rows stay fully reduced against each other,
// physical order is arbitrary and take() emits them pivot-sorted.
class SpanBuilder {
public:
    SpanBuilder(int p, std::size_t ambient);
    explicit SpanBuilder(const Subspace& seed);

    // true if the vector enlarged the span
    bool insert(const FpVec& v);
    std::size_t dim() const { return pivots_.size(); }
    bool contains(const FpVec& v) const;
    Subspace take() const;

private:
    FpMatrix rows_;
    std::vector<int> pivots_;  // pivot column of each physical row
};

// Span of all pairwise products of basis vectors of u and v.
Subspace product_space(const Subspace& u, const Subspace& v,
                       const std::function<FpVec(const FpVec&, const FpVec&)>& mul);

}  // namespace loewylab
