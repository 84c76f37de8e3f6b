#include "loewylab/gfp.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace loewylab {

std::uint8_t fp_inverse(int p, std::uint8_t c) {
    if (c == 0) throw std::domain_error("fp_inverse: zero has no inverse");
    for (int d = 1; d < p; ++d)
        if (d * c % p == 1) return static_cast<std::uint8_t>(d);
    throw std::domain_error("fp_inverse: p is not prime");
}

FpMatrix::FpMatrix(int p, std::size_t cols)
    : p_(p), cols_(cols), wpr_(p == 2 ? (cols + 63) / 64 : 0) {
    if (p < 2) throw std::invalid_argument("FpMatrix: prime must be >= 2");
}

FpMatrix FpMatrix::identity(int p, std::size_t n) {
    FpMatrix m(p, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.append_zero_row();
        m.set(i, i, 1);
    }
    return m;
}

void FpMatrix::append_row(const FpVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("FpMatrix: row length mismatch");
    append_zero_row();
    for (std::size_t c = 0; c < cols_; ++c) {
        const std::uint8_t e = static_cast<std::uint8_t>(v[c] % p_);
        if (e) set(nrows_ - 1, c, e);
    }
}

void FpMatrix::append_zero_row() {
    if (p_ == 2)
        bits_.resize(bits_.size() + wpr_, 0);
    else
        bytes_.resize(bytes_.size() + cols_, 0);
    ++nrows_;
}

void FpMatrix::pop_row() {
    if (p_ == 2)
        bits_.resize(bits_.size() - wpr_);
    else
        bytes_.resize(bytes_.size() - cols_);
    --nrows_;
}

std::uint8_t FpMatrix::get(std::size_t r, std::size_t c) const {
    if (p_ == 2) return (bits_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
    return bytes_[r * cols_ + c];
}

void FpMatrix::set(std::size_t r, std::size_t c, std::uint8_t v) {
    if (p_ == 2) {
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        auto& w = bits_[r * wpr_ + c / 64];
        w = (v & 1u) ? (w | mask) : (w & ~mask);
    } else {
        bytes_[r * cols_ + c] = static_cast<std::uint8_t>(v % p_);
    }
}

void FpMatrix::axpy_row(std::size_t dst, std::size_t src, std::uint8_t coeff) {
    coeff = static_cast<std::uint8_t>(coeff % p_);
    if (coeff == 0) return;
    if (p_ == 2) {
        const std::uint64_t* s = &bits_[src * wpr_];
        std::uint64_t* d = &bits_[dst * wpr_];
        for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
    } else {
        const std::uint8_t* s = &bytes_[src * cols_];
        std::uint8_t* d = &bytes_[dst * cols_];
        for (std::size_t c = 0; c < cols_; ++c)
            d[c] = static_cast<std::uint8_t>((d[c] + coeff * s[c]) % p_);
    }
}

void FpMatrix::scale_row(std::size_t r, std::uint8_t coeff) {
    coeff = static_cast<std::uint8_t>(coeff % p_);
    if (p_ == 2 || coeff == 1) return;
    std::uint8_t* d = &bytes_[r * cols_];
    for (std::size_t c = 0; c < cols_; ++c)
        d[c] = static_cast<std::uint8_t>(d[c] * coeff % p_);
}

void FpMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    if (p_ == 2) {
        for (std::size_t w = 0; w < wpr_; ++w)
            std::swap(bits_[a * wpr_ + w], bits_[b * wpr_ + w]);
    } else {
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(bytes_[a * cols_ + c], bytes_[b * cols_ + c]);
    }
}

int FpMatrix::first_nonzero(std::size_t r, std::size_t from) const {
    if (p_ == 2) {
        std::size_t w = from / 64;
        if (w >= wpr_) return -1;
        std::uint64_t word = bits_[r * wpr_ + w] >> (from % 64);
        if (word) return static_cast<int>(from + std::countr_zero(word));
        for (++w; w < wpr_; ++w) {
            word = bits_[r * wpr_ + w];
            if (word) return static_cast<int>(w * 64 + std::countr_zero(word));
        }
        return -1;
    }
    for (std::size_t c = from; c < cols_; ++c)
        if (bytes_[r * cols_ + c]) return static_cast<int>(c);
    return -1;
}

bool FpMatrix::row_is_zero(std::size_t r) const { return first_nonzero(r) < 0; }

FpVec FpMatrix::row(std::size_t r) const {
    FpVec v(cols_, 0);
    if (p_ == 2) {
        for (int c = first_nonzero(r); c >= 0;
             c = first_nonzero(r, static_cast<std::size_t>(c) + 1))
            v[c] = 1;
    } else {
        for (std::size_t c = 0; c < cols_; ++c) v[c] = bytes_[r * cols_ + c];
    }
    return v;
}

namespace {

// Gauss-Jordan over the column range [0, pivot_cols); returns pivot columns.
std::vector<int> eliminate(FpMatrix& m, std::size_t pivot_cols) {
    std::vector<int> pivots;
    const int p = m.prime();
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
        std::size_t pivot = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (m.get(i, c)) { pivot = i; break; }
        }
        if (pivot == m.rows()) continue;
        m.swap_rows(r, pivot);
        m.scale_row(r, fp_inverse(p, m.get(r, c)));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const std::uint8_t coeff = m.get(i, c);
            if (coeff) m.axpy_row(i, r, static_cast<std::uint8_t>(p - coeff));
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

RrefResult rref(FpMatrix m) {
    std::vector<int> pivots = eliminate(m, m.cols());
    while (m.rows() > pivots.size()) m.pop_row();
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return rref(m).pivots.size(); }

Subspace left_kernel(const FpMatrix& m) {
    const std::size_t n = m.rows();
    FpMatrix aug(m.prime(), m.cols() + n);
    for (std::size_t r = 0; r < n; ++r) {
        aug.append_zero_row();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::uint8_t e = m.get(r, c);
            if (e) aug.set(r, c, e);
        }
        aug.set(r, m.cols() + r, 1);
    }
    eliminate(aug, m.cols());
    std::vector<FpVec> kernel_rows;
    for (std::size_t r = 0; r < aug.rows(); ++r) {
        if (aug.first_nonzero(r) >= static_cast<int>(m.cols())) {
            FpVec v(n, 0);
            for (std::size_t c = 0; c < n; ++c) v[c] = aug.get(r, m.cols() + c);
            kernel_rows.push_back(std::move(v));
        }
    }
    return Subspace::span(m.prime(), n, kernel_rows);
}

std::optional<FpVec> solve_left(const FpMatrix& a, const FpVec& b) {
    if (b.size() != a.cols()) throw std::invalid_argument("solve_left: size mismatch");
    const int p = a.prime();
    const std::size_t n = a.rows();
    FpMatrix aug(p, a.cols() + n);
    for (std::size_t r = 0; r < n; ++r) {
        aug.append_zero_row();
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const std::uint8_t e = a.get(r, c);
            if (e) aug.set(r, c, e);
        }
        aug.set(r, a.cols() + r, 1);
    }
    const std::vector<int> pivots = eliminate(aug, a.cols());
    // reduce (b | 0) against the eliminated rows
    FpVec cur(a.cols() + n, 0);
    for (std::size_t c = 0; c < a.cols(); ++c) cur[c] = static_cast<std::uint8_t>(b[c] % p);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const std::uint8_t coeff = cur[pivots[r]];
        if (!coeff) continue;
        for (std::size_t c = 0; c < cur.size(); ++c) {
            const std::uint8_t e = aug.get(r, c);
            if (e) cur[c] = static_cast<std::uint8_t>((cur[c] + (p - coeff) * e) % p);
        }
    }
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (cur[c]) return std::nullopt;
    FpVec x(n, 0);
    for (std::size_t c = 0; c < n; ++c)
        x[c] = static_cast<std::uint8_t>((p - cur[a.cols() + c]) % p);
    return x;
}

Subspace::Subspace(int p, std::size_t ambient) : basis_(p, ambient) {}

Subspace Subspace::span(int p, std::size_t ambient, const std::vector<FpVec>& vecs) {
    SpanBuilder sb(p, ambient);
    for (const auto& v : vecs) sb.insert(v);
    return sb.take();
}

std::vector<FpVec> Subspace::basis_rows() const {
    std::vector<FpVec> rows;
    rows.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
    return rows;
}

FpVec Subspace::reduce(FpVec v) const {
    const int p = prime();
    if (v.size() != ambient()) throw std::invalid_argument("Subspace: ambient mismatch");
    for (auto& e : v) e = static_cast<std::uint8_t>(e % p);
    for (std::size_t i = 0; i < dim(); ++i) {
        const std::uint8_t coeff = v[pivots_[i]];
        if (!coeff) continue;
        if (p == 2) {
            for (int c = basis_.first_nonzero(i); c >= 0;
                 c = basis_.first_nonzero(i, static_cast<std::size_t>(c) + 1))
                v[c] ^= 1;
        } else {
            for (std::size_t c = 0; c < v.size(); ++c) {
                const std::uint8_t e = basis_.get(i, c);
                if (e) v[c] = static_cast<std::uint8_t>((v[c] + (p - coeff) * e) % p);
            }
        }
    }
    return v;
}

bool Subspace::contains(const FpVec& v) const {
    const FpVec res = reduce(v);
    for (const auto e : res)
        if (e) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.dim() > dim()) return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (prime() != other.prime() || ambient() != other.ambient())
        throw std::invalid_argument("Subspace::sum: mismatched spaces");
    SpanBuilder sb(*this);
    for (std::size_t i = 0; i < other.dim(); ++i) sb.insert(other.basis_.row(i));
    return sb.take();
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (prime() != other.prime() || ambient() != other.ambient())
        throw std::invalid_argument("Subspace::intersect: mismatched spaces");
    // Zassenhaus: eliminate [U|U; V|0] on the left block, rows with zero left
    // block carry the intersection in the right block.
    const std::size_t n = ambient();
    FpMatrix aug(prime(), 2 * n);
    for (std::size_t i = 0; i < dim(); ++i) {
        aug.append_zero_row();
        for (std::size_t c = 0; c < n; ++c) {
            const std::uint8_t e = basis_.get(i, c);
            if (e) { aug.set(i, c, e); aug.set(i, n + c, e); }
        }
    }
    for (std::size_t i = 0; i < other.dim(); ++i) {
        aug.append_zero_row();
        const std::size_t r = dim() + i;
        for (std::size_t c = 0; c < n; ++c) {
            const std::uint8_t e = other.basis_.get(i, c);
            if (e) aug.set(r, c, e);
        }
    }
    eliminate(aug, n);
    std::vector<FpVec> rows;
    for (std::size_t r = 0; r < aug.rows(); ++r) {
        const int fn = aug.first_nonzero(r);
        if (fn < static_cast<int>(n)) continue;
        FpVec v(n, 0);
        for (std::size_t c = 0; c < n; ++c) v[c] = aug.get(r, n + c);
        rows.push_back(std::move(v));
    }
    return span(prime(), n, rows);
}

SpanBuilder::SpanBuilder(int p, std::size_t ambient) : rows_(p, ambient) {}

SpanBuilder::SpanBuilder(const Subspace& seed)
    : rows_(seed.basis()), pivots_(seed.pivots()) {}

bool SpanBuilder::insert(const FpVec& v) {
    const int p = rows_.prime();
    rows_.append_row(v);
    const std::size_t last = rows_.rows() - 1;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const std::uint8_t coeff = rows_.get(last, pivots_[i]);
        if (coeff) rows_.axpy_row(last, i, static_cast<std::uint8_t>(p - coeff));
    }
    const int piv = rows_.first_nonzero(last);
    if (piv < 0) {
        rows_.pop_row();
        return false;
    }
    rows_.scale_row(last, fp_inverse(p, rows_.get(last, piv)));
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const std::uint8_t coeff = rows_.get(i, piv);
        if (coeff) rows_.axpy_row(i, last, static_cast<std::uint8_t>(p - coeff));
    }
    pivots_.push_back(piv);
    return true;
}

bool SpanBuilder::contains(const FpVec& v) const {
    const int p = rows_.prime();
    FpVec cur(v);
    for (auto& e : cur) e = static_cast<std::uint8_t>(e % p);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const std::uint8_t coeff = cur[pivots_[i]];
        if (!coeff) continue;
        for (int c = rows_.first_nonzero(i); c >= 0;
             c = rows_.first_nonzero(i, static_cast<std::size_t>(c) + 1)) {
            const std::uint8_t e = rows_.get(i, c);
            cur[c] = static_cast<std::uint8_t>((cur[c] + (p - coeff) * e) % p);
        }
    }
    for (const auto e : cur)
        if (e) return false;
    return true;
}

Subspace SpanBuilder::take() const {
    std::vector<std::size_t> order(pivots_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    Subspace s(rows_.prime(), rows_.cols());
    for (const std::size_t i : order) {
        s.basis_.append_row(rows_.row(i));
        s.pivots_.push_back(pivots_[i]);
    }
    return s;
}

Subspace product_space(const Subspace& u, const Subspace& v,
                       const std::function<FpVec(const FpVec&, const FpVec&)>& mul) {
    SpanBuilder sb(u.prime(), u.ambient());
    const auto urows = u.basis_rows();
    const auto vrows = v.basis_rows();
    for (const auto& a : urows)
        for (const auto& b : vrows) sb.insert(mul(a, b));
    return sb.take();
}

}  // namespace loewylab
