#include "support.hpp"
#include "vknot/study.hpp"

#include <doctest.h>

using namespace vknot;
using namespace vknot::testing;

namespace {

LaurentPoly T(std::vector<LaurentPoly::Term> terms) { return LaurentPoly(std::move(terms), 't'); }
LaurentPoly2 P2(std::vector<LaurentPoly2::Term> terms) { return LaurentPoly2(std::move(terms)); }

template <class R, class Gen>
Matrix<R> random_matrix(std::size_t n, Gen gen)
{
    Matrix<R> m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = gen();
    return m;
}

template <class R, class Gen>
void check_ring_laws(Gen gen, int trials)
{
    for (int k = 0; k < trials; ++k) {
        R a = gen(), b = gen(), c = gen();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a - b) + b == a);
    }
}

Matrix<GaussianLaurent> conj_transpose(const Matrix<GaussianLaurent>& m)
{
    Matrix<GaussianLaurent> out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(c, r) = m(r, c).conj();
    return out;
}

} // namespace

TEST_CASE("laurent arithmetic and rendering")
{
    auto A2 = LaurentPoly::monomial(1, 2, 'A');
    CHECK(A2 * LaurentPoly::monomial(1, -2, 'A') == LaurentPoly::constant(1));
    CHECK(to_string(LaurentPoly::monomial(-1, -3, 'A')) == "-A^-3");
    CHECK(to_string(T({{0, 2}, {2, 5}, {4, 2}})) == "2+5*t^2+2*t^4");
    CHECK(to_string(T({{1, 1}, {0, -1}})) == "-1+t");
    CHECK(to_string(LaurentPoly()) == "0");
    CHECK(T({{1, 0}, {2, 3}, {2, -3}}).is_zero());
    CHECK(T({{3, 1}, {-1, 2}}).inverted() == T({{-3, 1}, {1, 2}}));
    CHECK(T({{1, 1}, {0, 1}}).substitute_power(-2) == T({{-2, 1}, {0, 1}}));
    CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
    CHECK_THROWS(LaurentPoly::monomial(1, 1, 'A') + LaurentPoly::monomial(1, 1, 't'));
}

TEST_CASE("laurent division and gcd")
{
    auto a = T({{0, -1}, {2, 1}}); // t^2 - 1
    auto b = T({{0, 1}, {1, 1}});  // t + 1
    CHECK(exact_divide(a, b) == T({{0, -1}, {1, 1}}));
    CHECK(exact_divide(a.shifted(-3), b) == T({{0, -1}, {1, 1}}).shifted(-3));
    CHECK_THROWS_AS(exact_divide(a, T({{0, 2}, {1, 1}})), std::domain_error);
    CHECK_THROWS_AS(exact_divide(a, LaurentPoly()), std::domain_error);

    // 2t^2 - 2 = 2(t-1)(t+1) and 4t - 4 = 4(t-1)
    CHECK(to_string(poly_gcd(T({{0, -2}, {2, 2}}), T({{0, -4}, {1, 4}}))) == "-2+2*t");
    auto p = T({{-2, -3}, {0, 6}, {1, 9}});
    CHECK(poly_gcd(p, LaurentPoly()) == normalize_gcd(p));
    CHECK(poly_gcd(p, p) == normalize_gcd(p));
    CHECK(to_string(normalize_gcd(p)) == "-3+6*t^2+9*t^3");
    CHECK(poly_gcd(LaurentPoly(), LaurentPoly()).is_zero());

    std::mt19937_64 rng(2);
    for (int k = 0; k < 300; ++k) {
        auto x = random_poly(rng), y = random_poly(rng), c = random_poly(rng);
        if (c.is_zero())
            continue;
        auto g = poly_gcd(x * c, y * c);
        if (g.is_zero()) {
            CHECK((x * c).is_zero());
            continue;
        }
        CHECK_NOTHROW(exact_divide(g, c));
        if (!(x * c).is_zero())
            CHECK_NOTHROW(exact_divide(x * c, g));
        if (!(y * c).is_zero())
            CHECK_NOTHROW(exact_divide(y * c, g));
        CHECK(exact_divide(x * c, c) == x);
    }
}

TEST_CASE("gcd of large polynomials")
{
    // Remainder sequences of these overflow 64 bits; the gcd itself is small.
    std::mt19937_64 rng(3);
    auto dense = [&](int degree, int bound) {
        std::vector<LaurentPoly::Term> terms;
        for (int e = 0; e <= degree; ++e)
            terms.push_back({e, static_cast<Coeff>(rng() % (2 * bound + 1)) - bound});
        terms.push_back({degree + 1, 1 + static_cast<Coeff>(rng() % bound)});
        return LaurentPoly(terms, 't');
    };
    for (int k = 0; k < 10; ++k) {
        auto a = dense(12, 60), b = dense(12, 60), c = dense(3, 5);
        auto g = poly_gcd(a * c, b * c);
        CHECK_NOTHROW(exact_divide(g, normalize_gcd(c)));
        CHECK_NOTHROW(exact_divide(a * c, g));
        CHECK_NOTHROW(exact_divide(b * c, g));
        CHECK(poly_gcd(exact_divide(a * c, g), exact_divide(b * c, g)) == LaurentPoly::constant(1));
    }
}

TEST_CASE("ring laws on random elements")
{
    std::mt19937_64 rng(7);
    check_ring_laws<LaurentPoly>([&] { return random_poly(rng); }, 1000);
    check_ring_laws<LaurentPoly2>([&] { return random_poly2(rng); }, 1000);
    check_ring_laws<GaussianLaurent>([&] { return GaussianLaurent(random_poly(rng), random_poly(rng)); }, 1000);
    check_ring_laws<QuatLaurent>([&] { return random_quat(rng); }, 1000);
}

TEST_CASE("gaussian and quaternion units")
{
    CHECK(GaussianLaurent::constant(1, 1) * GaussianLaurent::constant(1, -1) == GaussianLaurent::constant(2));
    const auto i = QuatLaurent::i(), j = QuatLaurent::j(), k = QuatLaurent::k(), one = QuatLaurent::constant(1);
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(j * k == i);
    CHECK(k * j == -i);
    CHECK(k * i == j);
    CHECK(i * k == -j);
    CHECK(i * i == -one);
    CHECK(j * j == -one);
    CHECK(k * k == -one);
    CHECK(i * j * k == -one);
    std::mt19937_64 rng(4);
    for (int n = 0; n < 100; ++n) {
        auto q = random_quat(rng);
        auto norm = q * q.conj();
        CHECK(norm.x.is_zero());
        CHECK(norm.y.is_zero());
        CHECK(norm.z.is_zero());
    }
    auto g = GaussianLaurent(T({{0, 3}, {1, 1}}), T({{2, -1}}));
    CHECK(exact_divide(g * GaussianLaurent::constant(1, 1), GaussianLaurent::constant(1, 1)) == g);
}

TEST_CASE("unit normalization in two variables")
{
    auto one_minus_st = P2({{{0, 0}, 1}, {{1, 1}, -1}});
    auto multiplied = P2({{{2, 1}, -1}}) * one_minus_st;
    CHECK(normalize_unit(multiplied) == normalize_unit(one_minus_st));
    CHECK(to_string(normalize_unit(one_minus_st)) == "1-s*t");
    CHECK(normalize_unit(LaurentPoly2()).is_zero());
    std::mt19937_64 rng(9);
    for (int k = 0; k < 200; ++k) {
        auto p = random_poly2(rng);
        CHECK(normalize_unit(P2({{{3, -2}, -1}}) * p) == normalize_unit(p));
    }
    CHECK(to_string(P2({{{-1, 3}, -2}})) == "-2*s^-1*t^3");
    CHECK(exact_divide(one_minus_st * P2({{{0, 1}, 1}, {{2, 0}, 3}}), one_minus_st) ==
          P2({{{0, 1}, 1}, {{2, 0}, 3}}));
    CHECK_THROWS_AS(exact_divide(one_minus_st, P2({{{0, 0}, 1}, {{1, 0}, 1}})), std::domain_error);
}

TEST_CASE("fraction-free determinant")
{
    CHECK(det_fraction_free(identity_matrix<LaurentPoly>(3)) == LaurentPoly::constant(1));
    CHECK(det_fraction_free(Matrix<LaurentPoly>(0, 0)) == LaurentPoly::constant(1));
    Matrix<LaurentPoly2> m(2, 2);
    m(0, 0) = P2({{{0, 1}, 1}});
    m(0, 1) = P2({{{0, 0}, 1}, {{1, 1}, -1}});
    m(1, 1) = P2({{{1, 0}, 1}});
    CHECK(det_fraction_free(m) == P2({{{1, 1}, 1}}));

    std::mt19937_64 rng(13);
    for (int k = 0; k < 100; ++k) {
        auto a = random_matrix<LaurentPoly>(4, [&] { return random_poly(rng); });
        CHECK(det_fraction_free(a) == cofactor_det(a));
        auto b = random_matrix<LaurentPoly2>(4, [&] { return random_poly2(rng); });
        CHECK(det_fraction_free(b) == cofactor_det(b));
        auto c = random_matrix<GaussianLaurent>(4, [&] { return GaussianLaurent(random_poly(rng), random_poly(rng)); });
        CHECK(det_fraction_free(c) == cofactor_det(c));
    }
    for (int k = 0; k < 30; ++k) {
        auto a = random_matrix<LaurentPoly>(3, [&] { return random_poly(rng); });
        auto b = random_matrix<LaurentPoly>(3, [&] { return random_poly(rng); });
        CHECK(det_fraction_free(a * b) == det_fraction_free(a) * det_fraction_free(b));
    }
}

TEST_CASE("complex form of quaternion matrices")
{
    Matrix<QuatLaurent> j(1, 1);
    j(0, 0) = QuatLaurent::j();
    auto cj = quaternion_to_complex(j);
    CHECK(cj(0, 0).is_zero());
    CHECK(cj(0, 1) == GaussianLaurent::constant(1));
    CHECK(cj(1, 0) == GaussianLaurent::constant(-1));
    CHECK(cj(1, 1).is_zero());
    CHECK(study_determinant(j) == LaurentPoly::constant(1));

    Matrix<QuatLaurent> u(1, 1);
    u(0, 0) = QuatLaurent::constant(1, 1);
    auto cu = quaternion_to_complex(u);
    CHECK(cu(0, 0) == GaussianLaurent::constant(1, 1));
    CHECK(cu(1, 1) == GaussianLaurent::constant(1, -1));
    CHECK(study_determinant(u) == LaurentPoly::constant(2));

    std::mt19937_64 rng(21);
    for (int k = 0; k < 50; ++k) {
        auto a = random_matrix<QuatLaurent>(2, [&] { return random_quat(rng); });
        auto b = random_matrix<QuatLaurent>(2, [&] { return random_quat(rng); });
        CHECK(quaternion_to_complex(a * b) == quaternion_to_complex(a) * quaternion_to_complex(b));
        Matrix<QuatLaurent> h(2, 2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                h(c, r) = a(r, c).conj();
        CHECK(quaternion_to_complex(h) == conj_transpose(quaternion_to_complex(a)));
    }
}

TEST_CASE("study determinants")
{
    std::mt19937_64 rng(31);
    for (int k = 0; k < 20; ++k) {
        auto a = random_matrix<QuatLaurent>(3, [&] { return random_quat(rng); });
        for (std::size_t c = 0; c < 3; ++c)
            a(1, c) = QuatLaurent();
        CHECK(study_determinant(a).is_zero());

        auto x = random_matrix<QuatLaurent>(2, [&] { return random_quat(rng); });
        auto y = random_matrix<QuatLaurent>(1, [&] { return random_quat(rng); });
        Matrix<QuatLaurent> block(3, 3);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                block(r, c) = x(r, c);
        block(2, 2) = y(0, 0);
        CHECK(study_determinant(block) == study_determinant(x) * study_determinant(y));
    }
}

TEST_CASE("codimension-1 gcd")
{
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(codim1_gcd(identity_matrix<QuatLaurent>(n)) == LaurentPoly::constant(1));
    CHECK(codim1_gcd(Matrix<QuatLaurent>(3, 3)).is_zero());
    // A 1x1 matrix has the empty matrix as its only minor.
    Matrix<QuatLaurent> zero1(1, 1);
    CHECK(codim1_gcd(zero1) == LaurentPoly::constant(1));

    std::mt19937_64 rng(41);
    for (int k = 0; k < 40; ++k) {
        std::size_t n = 2 + k % 3;
        auto a = random_matrix<QuatLaurent>(n, [&] { return random_quat(rng); });
        // Make some matrices singular: a left multiple of one row added to another, or
        // two such dependencies for corank 2.
        if (k % 3 >= 1)
            for (std::size_t c = 0; c < n; ++c)
                a(0, c) = QuatLaurent::j() * a(1, c);
        if (k % 3 == 2 && n > 2)
            for (std::size_t c = 0; c < n; ++c)
                a(2, c) = QuatLaurent::constant(1, 1) * a(1, c);
        auto minors = codim1_study_minors(a);
        LaurentPoly g;
        for (const auto& m : minors)
            g = poly_gcd(g, m);
        auto pair = study_pair(a);
        CHECK(pair.det == study_determinant(a));
        CHECK(pair.gcd == g);
        CHECK(codim1_gcd(a) == g);
        for (const auto& m : minors)
            if (!m.is_zero())
                CHECK_NOTHROW(exact_divide(m, g));
    }
}
