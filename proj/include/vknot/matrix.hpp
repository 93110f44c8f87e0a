#pragma once

// Dense matrices over the exact rings and fraction-free determinants.

#include "vknot/algebra.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vknot {

template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    R& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const R& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Copy with one row and one column removed.
    Matrix without(std::size_t row, std::size_t col) const
    {
        Matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
            if (r == row)
                continue;
            for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
                if (c == col)
                    continue;
                m(rr, cc++) = (*this)(r, c);
            }
            ++rr;
        }
        return m;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<R> data_;
};

template <class R>
Matrix<R> operator*(const Matrix<R>& a, const Matrix<R>& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix dimensions do not match");
    Matrix<R> m(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(r, k).is_zero())
                continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                m(r, c) += a(r, k) * b(k, c);
        }
    return m;
}

template <class R>
struct RingTraits;

template <>
struct RingTraits<LaurentPoly> {
    static LaurentPoly one() { return LaurentPoly::constant(1); }
    static std::size_t size(const LaurentPoly& p) { return p.terms().size(); }
};

template <>
struct RingTraits<LaurentPoly2> {
    static LaurentPoly2 one() { return LaurentPoly2::constant(1); }
    static std::size_t size(const LaurentPoly2& p) { return p.terms().size(); }
};

template <>
struct RingTraits<GaussianLaurent> {
    static GaussianLaurent one() { return GaussianLaurent::constant(1); }
    static std::size_t size(const GaussianLaurent& g) { return g.size(); }
};

template <>
struct RingTraits<QuatLaurent> {
    static QuatLaurent one() { return QuatLaurent::constant(1); }
};

template <class R>
Matrix<R> identity_matrix(std::size_t n)
{
    Matrix<R> m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m(k, k) = RingTraits<R>::one();
    return m;
}

/// Bareiss elimination over a commutative integral domain. Each pivot is the entry
/// with the fewest terms in its column; every division is exact.
template <class R>
R det_fraction_free(Matrix<R> m)
{
    if (!m.square())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return RingTraits<R>::one();
    bool negate = false;
    R prev = RingTraits<R>::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t r = k; r < n; ++r)
            if (!m(r, k).is_zero() &&
                (pivot == n || RingTraits<R>::size(m(r, k)) < RingTraits<R>::size(m(pivot, k))))
                pivot = r;
        if (pivot == n)
            return R{};
        if (pivot != k) {
            m.swap_rows(pivot, k);
            negate = !negate;
        }
        const R& p = m(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const R f = m(r, k);
            for (std::size_t c = k + 1; c < n; ++c) {
                R v = p * m(r, c);
                if (!f.is_zero() && !m(k, c).is_zero())
                    v -= f * m(k, c);
                m(r, c) = exact_divide(v, prev);
            }
            m(r, k) = R{};
        }
        prev = p;
    }
    R d = m(n - 1, n - 1);
    return negate ? -d : d;
}

} // namespace vknot
