#include "vknot/study.hpp"

#include "modular.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace vknot {

Matrix<GaussianLaurent> quaternion_to_complex(const Matrix<QuatLaurent>& m)
{
    Matrix<GaussianLaurent> c(2 * m.rows(), 2 * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t k = 0; k < m.cols(); ++k) {
            const QuatLaurent& q = m(r, k);
            GaussianLaurent z1(q.w, q.x), z2(q.y, q.z);
            c(2 * r, 2 * k) = z1;
            c(2 * r, 2 * k + 1) = z2;
            c(2 * r + 1, 2 * k) = -z2.conj();
            c(2 * r + 1, 2 * k + 1) = z1.conj();
        }
    return c;
}

namespace {

LaurentPoly real_part(const GaussianLaurent& d)
{
    if (!d.im.is_zero())
        throw NonRealStudyDeterminant("Study determinant has imaginary part " + to_string(d.im));
    LaurentPoly r = d.re;
    return r.is_zero() ? LaurentPoly('t') : r;
}

} // namespace

LaurentPoly study_determinant(const Matrix<QuatLaurent>& m)
{
    if (!m.square())
        throw std::invalid_argument("Study determinant of a non-square matrix");
    return real_part(det_fraction_free(quaternion_to_complex(m)));
}

std::vector<LaurentPoly> codim1_study_minors(const Matrix<QuatLaurent>& m)
{
    if (!m.square() || m.rows() == 0)
        throw std::invalid_argument("codimension-1 minors need a non-empty square matrix");
    std::vector<LaurentPoly> out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out.push_back(study_determinant(m.without(r, c)));
    return out;
}

namespace {

using detail::is_prime;
using detail::PrimeField;
using detail::u128;
using detail::u64;

const PrimeField& field()
{
    static const PrimeField f = [] {
        PrimeField g;
        u64 p = (u64{1} << 62) - 3; // p = 1 mod 4
        while (!is_prime(p))
            p -= 4;
        g.p = p;
        for (u64 a = 2;; ++a) {
            if (g.pow(a, (p - 1) / 2) == p - 1) {
                g.iota = g.pow(a, (p - 1) / 4);
                break;
            }
        }
        return g;
    }();
    return f;
}

// Dense square matrix over the prime field.
struct ModMatrix {
    std::size_t n = 0;
    std::vector<u64> a;

    explicit ModMatrix(std::size_t size) : n(size), a(size * size, 0) {}
    u64& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
    u64 operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }

    ModMatrix transposed() const
    {
        ModMatrix t(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    ModMatrix without_blocks(std::size_t row_block, std::size_t col_block) const
    {
        ModMatrix m(n - 2);
        for (std::size_t r = 0, rr = 0; r < n; ++r) {
            if (r / 2 == row_block)
                continue;
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c / 2 != col_block)
                    m(rr, cc++) = (*this)(r, c);
            ++rr;
        }
        return m;
    }
};

u64 det_mod(ModMatrix m, const PrimeField& f)
{
    u64 det = 1;
    for (std::size_t k = 0; k < m.n; ++k) {
        std::size_t piv = k;
        while (piv < m.n && m(piv, k) == 0)
            ++piv;
        if (piv == m.n)
            return 0;
        if (piv != k) {
            for (std::size_t c = k; c < m.n; ++c)
                std::swap(m(piv, c), m(k, c));
            det = f.sub(0, det);
        }
        det = f.mul(det, m(k, k));
        u64 inv = f.inv(m(k, k));
        for (std::size_t r = k + 1; r < m.n; ++r) {
            if (m(r, k) == 0)
                continue;
            u64 factor = f.mul(m(r, k), inv);
            for (std::size_t c = k; c < m.n; ++c)
                m(r, c) = f.sub(m(r, c), f.mul(factor, m(k, c)));
        }
    }
    return det;
}

// Reduced row echelon form of [m | aug] (aug may be empty). Returns pivot columns.
std::vector<std::size_t> rref(ModMatrix& m, ModMatrix* aug, const PrimeField& f)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.n && row < m.n; ++col) {
        std::size_t piv = row;
        while (piv < m.n && m(piv, col) == 0)
            ++piv;
        if (piv == m.n)
            continue;
        for (std::size_t c = 0; c < m.n; ++c) {
            std::swap(m(piv, c), m(row, c));
            if (aug)
                std::swap((*aug)(piv, c), (*aug)(row, c));
        }
        u64 inv = f.inv(m(row, col));
        for (std::size_t c = 0; c < m.n; ++c) {
            m(row, c) = f.mul(m(row, c), inv);
            if (aug)
                (*aug)(row, c) = f.mul((*aug)(row, c), inv);
        }
        for (std::size_t r = 0; r < m.n; ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            u64 factor = m(r, col);
            for (std::size_t c = 0; c < m.n; ++c) {
                m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
                if (aug)
                    (*aug)(r, c) = f.sub((*aug)(r, c), f.mul(factor, (*aug)(row, c)));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Basis of {v : m v = 0}, one vector per free column.
std::vector<std::vector<u64>> right_kernel(ModMatrix m, const PrimeField& f)
{
    auto pivots = rref(m, nullptr, f);
    std::vector<char> is_pivot(m.n, 0);
    for (auto c : pivots)
        is_pivot[c] = 1;
    std::vector<std::vector<u64>> basis;
    for (std::size_t free = 0; free < m.n; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<u64> v(m.n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.sub(0, m(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

// Determinants of the complex form at one point: the full determinant and the
// n^2 minors obtained by deleting one 2x2 block row and block column.
struct PointValues {
    u64 det = 0;
    std::vector<u64> minors; // row-major (block row, block col)
};

PointValues evaluate_point(const ModMatrix& x, const PrimeField& f)
{
    const std::size_t big = x.n, n = big / 2;
    PointValues out;
    out.minors.assign(n * n, 0);
    if (n == 1) {
        out.det = det_mod(x, f);
        out.minors[0] = 1;
        return out;
    }

    ModMatrix work = x;
    ModMatrix inverse(big);
    for (std::size_t k = 0; k < big; ++k)
        inverse(k, k) = 1;
    auto pivots = rref(work, &inverse, f);
    const std::size_t rank = pivots.size();

    if (rank == big) {
        out.det = det_mod(x, f);
        // Jacobi: the minor deleting block row a and block column b equals
        // det(X) times the 2x2 minor of X^-1 on rows 2b,2b+1 and columns 2a,2a+1.
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                u64 m2 = f.sub(f.mul(inverse(2 * b, 2 * a), inverse(2 * b + 1, 2 * a + 1)),
                               f.mul(inverse(2 * b, 2 * a + 1), inverse(2 * b + 1, 2 * a)));
                out.minors[a * n + b] = f.mul(out.det, m2);
            }
        return out;
    }
    if (rank + 2 < big)
        return out;
    if (rank + 1 == big) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                out.minors[a * n + b] = det_mod(x.without_blocks(a, b), f);
        return out;
    }

    // Corank 2: the maximal minors factor through the Pluecker coordinates of the
    // two kernels, and a block deletion carries no permutation sign.
    auto right = right_kernel(x, f);
    auto left = right_kernel(x.transposed(), f);
    auto block_det = [&](const std::vector<std::vector<u64>>& k, std::size_t blk) {
        return f.sub(f.mul(k[0][2 * blk], k[1][2 * blk + 1]), f.mul(k[1][2 * blk], k[0][2 * blk + 1]));
    };
    std::vector<u64> dl(n), dr(n);
    for (std::size_t b = 0; b < n; ++b) {
        dl[b] = block_det(left, b);
        dr[b] = block_det(right, b);
    }
    auto ia = std::find_if(dl.begin(), dl.end(), [](u64 v) { return v != 0; });
    auto ib = std::find_if(dr.begin(), dr.end(), [](u64 v) { return v != 0; });
    if (ia == dl.end() || ib == dr.end())
        return out;
    std::size_t a0 = static_cast<std::size_t>(ia - dl.begin()), b0 = static_cast<std::size_t>(ib - dr.begin());
    u64 scale = f.mul(det_mod(x.without_blocks(a0, b0), f), f.inv(f.mul(dl[a0], dr[b0])));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            out.minors[a * n + b] = f.mul(scale, f.mul(dl[a], dr[b]));
    return out;
}

// Coefficients c_0..c_d of the polynomial through (1, y_0), ..., (d+1, y_d).
std::vector<u64> interpolate(const std::vector<u64>& y, const PrimeField& f)
{
    const std::size_t m = y.size();
    std::vector<u64> dd = y; // Newton divided differences
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t k = m - 1; k >= level; --k) {
            u64 denom = f.inv(static_cast<u64>(level)); // x_k - x_{k-level} = level
            dd[k] = f.mul(f.sub(dd[k], dd[k - 1]), denom);
        }
    std::vector<u64> coeffs(m, 0);
    for (std::size_t k = m; k-- > 0;) {
        // coeffs = coeffs * (t - x_k) + dd[k], with x_k = k + 1
        u64 xk = static_cast<u64>(k + 1);
        std::vector<u64> next(m, 0);
        for (std::size_t e = 0; e + 1 < m; ++e) {
            next[e + 1] = f.add(next[e + 1], coeffs[e]);
            next[e] = f.sub(next[e], f.mul(coeffs[e], xk));
        }
        next[0] = f.add(next[0], dd[k]);
        coeffs = std::move(next);
    }
    return coeffs;
}

LaurentPoly lift(const std::vector<u64>& coeffs, int min_exp, const PrimeField& f)
{
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        u64 c = coeffs[e];
        if (c == 0)
            continue;
        Coeff v = c > f.p / 2 ? -static_cast<Coeff>(f.p - c) : static_cast<Coeff>(c);
        terms.emplace_back(min_exp + static_cast<int>(e), v);
    }
    return LaurentPoly(std::move(terms), 't');
}

u64 eval_poly(const LaurentPoly& p, const std::vector<u64>& powers, int min_exp, const PrimeField& f)
{
    u64 s = 0;
    for (auto [e, c] : p.terms())
        s = f.add(s, f.mul(f.from(c), powers[static_cast<std::size_t>(e - min_exp)]));
    return s;
}

StudyPair study_pair_symbolic(const Matrix<QuatLaurent>& m)
{
    StudyPair out{study_determinant(m), LaurentPoly('t')};
    for (const auto& d : codim1_study_minors(m)) {
        out.gcd = poly_gcd(out.gcd, d);
        if (out.gcd == LaurentPoly::constant(1))
            break;
    }
    return out;
}

} // namespace

StudyPair study_pair(const Matrix<QuatLaurent>& m)
{
    if (!m.square() || m.rows() == 0)
        throw std::invalid_argument("Study pair needs a non-empty square matrix");
    const PrimeField& f = field();
    const std::size_t n = m.rows();

    // Per quaternionic row: exponent window and l1 norm of all coefficients.
    std::vector<int> lo(n, 0), hi(n, 0);
    long double bound = 1;
    int emin = 0, emax = 0;
    for (std::size_t r = 0; r < n; ++r) {
        bool any = false;
        long double l1 = 0;
        for (std::size_t c = 0; c < n; ++c) {
            const QuatLaurent& q = m(r, c);
            for (const LaurentPoly* p : {&q.w, &q.x, &q.y, &q.z}) {
                for (auto [e, v] : p->terms()) {
                    lo[r] = any ? std::min(lo[r], e) : e;
                    hi[r] = any ? std::max(hi[r], e) : e;
                    any = true;
                    l1 += std::fabs(static_cast<long double>(v));
                }
            }
        }
        emin = std::min(emin, lo[r]);
        emax = std::max(emax, hi[r]);
        bound *= std::max<long double>(1, l1) * std::max<long double>(1, l1);
    }
    if (bound * 4 >= static_cast<long double>(f.p))
        return study_pair_symbolic(m);

    int full_lo = 0, degree = 0;
    for (std::size_t r = 0; r < n; ++r) {
        full_lo += 2 * lo[r];
        degree += 2 * (hi[r] - lo[r]);
    }
    const std::size_t points = static_cast<std::size_t>(degree) + 1;

    std::vector<u64> det_re(points), det_im(points);
    std::vector<std::vector<u64>> minor_re(n * n, std::vector<u64>(points)), minor_im = minor_re;
    const u64 inv2 = f.inv(2), inv2i = f.inv(f.mul(2, f.iota));

    std::vector<u64> powers(static_cast<std::size_t>(emax - emin + 1));
    for (std::size_t k = 0; k < points; ++k) {
        const u64 x = static_cast<u64>(k + 1);
        const u64 xinv = f.inv(x);
        for (int e = emin; e <= emax; ++e)
            powers[static_cast<std::size_t>(e - emin)] = e >= 0 ? f.pow(x, static_cast<u64>(e))
                                                                : f.pow(xinv, static_cast<u64>(-e));
        std::array<PointValues, 2> vals;
        for (int side = 0; side < 2; ++side) {
            const u64 eps = side == 0 ? f.iota : f.sub(0, f.iota);
            ModMatrix cx(2 * n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    const QuatLaurent& q = m(r, c);
                    u64 w = eval_poly(q.w, powers, emin, f), xi = eval_poly(q.x, powers, emin, f);
                    u64 y = eval_poly(q.y, powers, emin, f), z = eval_poly(q.z, powers, emin, f);
                    u64 z1 = f.add(w, f.mul(xi, eps)), z1c = f.sub(w, f.mul(xi, eps));
                    u64 z2 = f.add(y, f.mul(z, eps)), z2c = f.sub(y, f.mul(z, eps));
                    cx(2 * r, 2 * c) = z1;
                    cx(2 * r, 2 * c + 1) = z2;
                    cx(2 * r + 1, 2 * c) = f.sub(0, z2c);
                    cx(2 * r + 1, 2 * c + 1) = z1c;
                }
            vals[side] = evaluate_point(cx, f);
        }
        // Undo the exponent shift so every value comes from a polynomial of degree <= degree.
        auto shift = [&](u64 v, int low) {
            return low >= 0 ? f.mul(v, f.pow(xinv, static_cast<u64>(low))) : f.mul(v, f.pow(x, static_cast<u64>(-low)));
        };
        auto split = [&](u64 v1, u64 v2, u64& re, u64& im) {
            re = f.mul(f.add(v1, v2), inv2);
            im = f.mul(f.sub(v1, v2), inv2i);
        };
        split(shift(vals[0].det, full_lo), shift(vals[1].det, full_lo), det_re[k], det_im[k]);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                int low = full_lo - 2 * lo[a];
                split(shift(vals[0].minors[a * n + b], low), shift(vals[1].minors[a * n + b], low),
                      minor_re[a * n + b][k], minor_im[a * n + b][k]);
            }
    }

    auto finish = [&](const std::vector<u64>& re, const std::vector<u64>& im, int low) {
        LaurentPoly imag = lift(interpolate(im, f), low, f);
        if (!imag.is_zero())
            throw NonRealStudyDeterminant("Study determinant has imaginary part " + to_string(imag));
        return lift(interpolate(re, f), low, f);
    };

    StudyPair out{finish(det_re, det_im, full_lo), LaurentPoly('t')};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            out.gcd = poly_gcd(out.gcd, finish(minor_re[a * n + b], minor_im[a * n + b], full_lo - 2 * lo[a]));
            if (out.gcd == LaurentPoly::constant(1))
                return out;
        }
    return out;
}

LaurentPoly codim1_gcd(const Matrix<QuatLaurent>& m)
{
    return study_pair(m).gcd;
}

} // namespace vknot
