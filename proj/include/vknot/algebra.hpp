#pragma once

// Exact integer Laurent polynomials and the coefficient rings built on them.
// Coefficients are int64; every operation that would overflow throws
// std::overflow_error instead of wrapping.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vknot {

using Coeff = std::int64_t;

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_sub(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

// ---------------------------------------------------------------------------
// One variable

class LaurentPoly {
public:
    using Term = std::pair<int, Coeff>; // exponent, coefficient

    LaurentPoly() = default;
    explicit LaurentPoly(char var) : var_(var) {}
    /// Terms may be unsorted and contain duplicates or zeros.
    LaurentPoly(std::vector<Term> terms, char var = 't');

    static LaurentPoly constant(Coeff c, char var = 't');
    static LaurentPoly monomial(Coeff c, int exponent, char var = 't');

    char var() const { return var_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    Coeff coeff(int exponent) const;
    /// Precondition: non-zero.
    int min_exponent() const { return terms_.front().first; }
    int max_exponent() const { return terms_.back().first; }
    Coeff leading_coeff() const { return terms_.back().second; }

    /// Multiply by var^k.
    LaurentPoly shifted(int k) const;
    /// var -> var^-1
    LaurentPoly inverted() const;
    /// var -> var^k; k may be negative, not zero.
    LaurentPoly substitute_power(int k) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    /// Constants compare equal regardless of the variable tag.
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    void merge_var(const LaurentPoly& o);

    char var_ = 't';
    std::vector<Term> terms_; // ascending exponent, no zero coefficients
};

/// Quotient a / b; throws std::domain_error if b does not divide a exactly or b is zero.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// gcd in Z[t] after removing powers of t: positive leading coefficient,
/// minimal exponent 0, content included. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Unit normalization used for gcds: exponent shift to 0, positive leading coefficient.
LaurentPoly normalize_gcd(const LaurentPoly& p);

/// Ascending exponents, e.g. "2+5*t^2+2*t^4", "-A^-3", "0".
std::string to_string(const LaurentPoly& p);

// ---------------------------------------------------------------------------
// Two variables s, t

class LaurentPoly2 {
public:
    struct Exp {
        int s = 0, t = 0;
        friend constexpr auto operator<=>(const Exp&, const Exp&) = default;
    };
    using Term = std::pair<Exp, Coeff>;

    LaurentPoly2() = default;
    LaurentPoly2(std::vector<Term> terms);

    static LaurentPoly2 constant(Coeff c);
    static LaurentPoly2 monomial(Coeff c, int s_exp, int t_exp);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(int s_exp, int t_exp) const;

    LaurentPoly2 shifted(int ds, int dt) const;

    LaurentPoly2 operator-() const;
    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
    friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

private:
    std::vector<Term> terms_; // ascending (s, t) lex order, no zero coefficients
};

/// Throws std::domain_error if the division is not exact.
LaurentPoly2 exact_divide(const LaurentPoly2& a, const LaurentPoly2& b);

/// Representative of the orbit under multiplication by +-s^i t^j: minimal s and t
/// exponents shifted to 0 and the lex-first term made positive.
LaurentPoly2 normalize_unit(const LaurentPoly2& p);

/// e.g. "1-s-t+s*t", "-2*s^-1*t^3", "0".
std::string to_string(const LaurentPoly2& p);

// ---------------------------------------------------------------------------
// Gaussian integers over Z[t, t^-1]

struct GaussianLaurent {
    LaurentPoly re, im;

    GaussianLaurent() = default;
    GaussianLaurent(LaurentPoly r) : re(std::move(r)) {}
    GaussianLaurent(LaurentPoly r, LaurentPoly i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianLaurent constant(Coeff r, Coeff i = 0);

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    /// Complex conjugation on i; t is fixed.
    GaussianLaurent conj() const { return {re, -im}; }
    /// re^2 + im^2
    LaurentPoly norm() const;
    std::size_t size() const { return re.terms().size() + im.terms().size(); }

    GaussianLaurent operator-() const { return {-re, -im}; }
    GaussianLaurent& operator+=(const GaussianLaurent& o);
    GaussianLaurent& operator-=(const GaussianLaurent& o);
    GaussianLaurent& operator*=(const GaussianLaurent& o) { return *this = *this * o; }
    friend GaussianLaurent operator+(GaussianLaurent a, const GaussianLaurent& b) { return a += b; }
    friend GaussianLaurent operator-(GaussianLaurent a, const GaussianLaurent& b) { return a -= b; }
    friend GaussianLaurent operator*(const GaussianLaurent& a, const GaussianLaurent& b);
    friend bool operator==(const GaussianLaurent&, const GaussianLaurent&) = default;
};

GaussianLaurent exact_divide(const GaussianLaurent& a, const GaussianLaurent& b);
std::string to_string(const GaussianLaurent& g);

// ---------------------------------------------------------------------------
// Quaternions w + x i + y j + z k over Z[t, t^-1], t central

struct QuatLaurent {
    LaurentPoly w, x, y, z;

    QuatLaurent() = default;
    QuatLaurent(LaurentPoly w_, LaurentPoly x_ = {}, LaurentPoly y_ = {}, LaurentPoly z_ = {})
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_))
    {
    }

    static QuatLaurent constant(Coeff w, Coeff x = 0, Coeff y = 0, Coeff z = 0);
    static QuatLaurent i() { return constant(0, 1, 0, 0); }
    static QuatLaurent j() { return constant(0, 0, 1, 0); }
    static QuatLaurent k() { return constant(0, 0, 0, 1); }

    bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
    QuatLaurent conj() const { return {w, -x, -y, -z}; }
    /// Multiply every component by t^k.
    QuatLaurent shifted(int k) const { return {w.shifted(k), x.shifted(k), y.shifted(k), z.shifted(k)}; }

    QuatLaurent operator-() const { return {-w, -x, -y, -z}; }
    QuatLaurent& operator+=(const QuatLaurent& o);
    QuatLaurent& operator-=(const QuatLaurent& o);
    friend QuatLaurent operator+(QuatLaurent a, const QuatLaurent& b) { return a += b; }
    friend QuatLaurent operator-(QuatLaurent a, const QuatLaurent& b) { return a -= b; }
    /// Hamilton product; not commutative.
    friend QuatLaurent operator*(const QuatLaurent& a, const QuatLaurent& b);
    friend bool operator==(const QuatLaurent&, const QuatLaurent&) = default;
};

std::string to_string(const QuatLaurent& q);

} // namespace vknot
