#include "vknot/algebra.hpp"

#include "modular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vknot {

Coeff checked_add(Coeff a, Coeff b)
{
    Coeff r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer coefficient overflow");
    return r;
}

Coeff checked_sub(Coeff a, Coeff b)
{
    Coeff r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer coefficient overflow");
    return r;
}

Coeff checked_mul(Coeff a, Coeff b)
{
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer coefficient overflow");
    return r;
}

namespace {

using Dense = std::vector<Coeff>;

// Coefficients of t^min .. t^max.
Dense to_dense(const LaurentPoly& p)
{
    Dense d(static_cast<std::size_t>(p.max_exponent() - p.min_exponent() + 1), 0);
    for (auto [e, c] : p.terms())
        d[static_cast<std::size_t>(e - p.min_exponent())] = c;
    return d;
}

LaurentPoly from_dense(const Dense& d, int min_exp, char var)
{
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t k = 0; k < d.size(); ++k)
        if (d[k] != 0)
            terms.emplace_back(min_exp + static_cast<int>(k), d[k]);
    return LaurentPoly(std::move(terms), var);
}

void trim(Dense& d)
{
    while (!d.empty() && d.back() == 0)
        d.pop_back();
}

Coeff content(const Dense& d)
{
    Coeff g = 0;
    for (Coeff c : d)
        g = std::gcd(g, c);
    return g;
}

void divide_by(Dense& d, Coeff c)
{
    for (Coeff& x : d)
        x /= c;
}

// Pseudo-remainder of a by b (deg a >= deg b), made primitive.
Dense primitive_prem(Dense a, const Dense& b)
{
    const Coeff lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        Coeff la = a.back();
        std::size_t shift = a.size() - b.size();
        Coeff g = std::gcd(la, lb);
        Coeff fa = lb / g, fb = la / g;
        for (Coeff& x : a)
            x = checked_mul(x, fa);
        for (std::size_t k = 0; k < b.size(); ++k)
            a[k + shift] = checked_sub(a[k + shift], checked_mul(b[k], fb));
        trim(a);
        if (Coeff c = content(a); c > 1)
            divide_by(a, c);
    }
    return a;
}

using detail::PrimeField;
using detail::u64;
__extension__ typedef __int128 i128;

using ModPoly = std::vector<u64>;

void trim(ModPoly& d)
{
    while (!d.empty() && d.back() == 0)
        d.pop_back();
}

ModPoly monic_gcd_mod(ModPoly a, ModPoly b, const PrimeField& f)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        const u64 inv = f.inv(b.back());
        while (a.size() >= b.size()) {
            u64 q = f.mul(a.back(), inv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k)
                a[k + shift] = f.sub(a[k + shift], f.mul(q, b[k]));
            trim(a);
        }
        std::swap(a, b);
    }
    const u64 inv = f.inv(a.back());
    for (u64& c : a)
        c = f.mul(c, inv);
    return a;
}

bool divides(const Dense& d, const Dense& x)
{
    try {
        exact_divide(from_dense(x, 0, 't'), from_dense(d, 0, 't'));
        return true;
    } catch (const std::domain_error&) {
        return false;
    } catch (const std::overflow_error&) {
        return false;
    }
}

// gcd of primitive polynomials by images modulo primes just below 2^62, combined by
// CRT over at most two primes. The image of gcd(lc x, lc y) * monic gcd is an
// integer multiple of the true gcd; its primitive part is accepted once it divides
// both inputs, so an unlucky prime only costs another round.
Dense modular_gcd(const Dense& x, const Dense& y)
{
    const Coeff lead = std::gcd(x.back(), y.back());
    ModPoly acc;
    u64 acc_mod = 0;
    std::size_t best_degree = std::min(x.size(), y.size());
    u64 p = (u64{1} << 62) - 1;
    for (int round = 0; round < 40; ++round, p -= 2) {
        while (!detail::is_prime(p))
            p -= 2;
        PrimeField f{p, 0};
        if (f.from(x.back()) == 0 || f.from(y.back()) == 0)
            continue;
        ModPoly xm, ym;
        for (Coeff c : x)
            xm.push_back(f.from(c));
        for (Coeff c : y)
            ym.push_back(f.from(c));
        ModPoly g = monic_gcd_mod(xm, ym, f);
        if (g.size() == 1)
            return {1};
        if (g.size() > best_degree)
            continue;
        for (u64& c : g)
            c = f.mul(c, f.from(lead));
        if (g.size() < best_degree || acc_mod == 0) {
            best_degree = g.size();
            acc = g;
            acc_mod = p;
        } else {
            // Combine acc (mod acc_mod) with g (mod p); only two primes are ever combined.
            PrimeField q{p, 0};
            u64 inv = q.inv(acc_mod % p);
            std::vector<i128> combined;
            i128 m = static_cast<i128>(acc_mod) * p;
            for (std::size_t k = 0; k < g.size(); ++k) {
                u64 a = acc[k] % p;
                u64 t = q.mul(q.sub(g[k], a), inv);
                i128 v = static_cast<i128>(acc[k]) + static_cast<i128>(acc_mod) * t;
                if (v > m / 2)
                    v -= m;
                combined.push_back(v);
            }
            i128 cont = 0;
            for (auto v : combined) {
                i128 a = v < 0 ? -v : v, b = cont;
                while (b) {
                    i128 r = a % b;
                    a = b;
                    b = r;
                }
                cont = a;
            }
            Dense cand;
            bool fits = cont != 0;
            for (auto v : combined) {
                if (!fits)
                    break;
                i128 c = v / cont;
                if (c > INT64_MAX || c < INT64_MIN)
                    fits = false;
                cand.push_back(static_cast<Coeff>(c));
            }
            if (fits) {
                trim(cand);
                if (divides(cand, x) && divides(cand, y))
                    return cand;
            }
            acc_mod = 0; // start over with the next primes
            continue;
        }
        // A single image: symmetric lift, then try it directly.
        Dense cand;
        for (u64 c : acc)
            cand.push_back(c > p / 2 ? -static_cast<Coeff>(p - c) : static_cast<Coeff>(c));
        trim(cand);
        if (Coeff c = content(cand); c > 1)
            divide_by(cand, c);
        if (divides(cand, x) && divides(cand, y))
            return cand;
    }
    throw std::overflow_error("integer coefficient overflow in polynomial gcd");
}

} // namespace

LaurentPoly::LaurentPoly(std::vector<Term> terms, char var) : var_(var), terms_(std::move(terms))
{
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t k = 0; k < terms_.size();) {
        int e = terms_[k].first;
        Coeff c = 0;
        for (; k < terms_.size() && terms_[k].first == e; ++k)
            c = checked_add(c, terms_[k].second);
        if (c != 0)
            terms_[out++] = {e, c};
    }
    terms_.resize(out);
}

LaurentPoly LaurentPoly::constant(Coeff c, char var)
{
    return monomial(c, 0, var);
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent, char var)
{
    LaurentPoly p(var);
    if (c != 0)
        p.terms_.emplace_back(exponent, c);
    return p;
}

Coeff LaurentPoly::coeff(int exponent) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    return it != terms_.end() && it->first == exponent ? it->second : 0;
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly r = *this;
    for (auto& t : r.terms_)
        t.first += k;
    return r;
}

LaurentPoly LaurentPoly::inverted() const
{
    return substitute_power(-1);
}

LaurentPoly LaurentPoly::substitute_power(int k) const
{
    if (k == 0)
        throw std::invalid_argument("substitute_power needs a non-zero power");
    std::vector<Term> terms = terms_;
    for (auto& t : terms)
        t.first *= k;
    return LaurentPoly(std::move(terms), var_);
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& t : r.terms_)
        t.second = checked_sub(0, t.second);
    return r;
}

void LaurentPoly::merge_var(const LaurentPoly& o)
{
    if (o.is_constant())
        return;
    if (is_constant())
        var_ = o.var_;
    else if (var_ != o.var_)
        throw std::invalid_argument("mixing Laurent polynomials in different variables");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    merge_var(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.cbegin(), b = o.terms_.cbegin();
    while (a != terms_.cend() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.cend() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == terms_.cend() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            Coeff c = checked_add(a->second, b->second);
            if (c != 0)
                out.emplace_back(a->first, c);
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    return *this += -o;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r = a;
    r.merge_var(b);
    if (a.is_zero() || b.is_zero()) {
        r.terms_.clear();
        return r;
    }
    const int lo = a.min_exponent() + b.min_exponent();
    const int hi = a.max_exponent() + b.max_exponent();
    const char var = r.var_;
    if (static_cast<long>(hi) - lo < 4096) {
        Dense acc(static_cast<std::size_t>(hi - lo + 1), 0);
        for (auto [ea, ca] : a.terms_)
            for (auto [eb, cb] : b.terms_) {
                Coeff& slot = acc[static_cast<std::size_t>(ea + eb - lo)];
                slot = checked_add(slot, checked_mul(ca, cb));
            }
        return from_dense(acc, lo, var);
    }
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (auto [ea, ca] : a.terms_)
        for (auto [eb, cb] : b.terms_)
            terms.emplace_back(ea + eb, checked_mul(ca, cb));
    return LaurentPoly(std::move(terms), var);
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.terms_ != b.terms_)
        return false;
    return a.is_constant() || a.var_ == b.var_;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("division by zero polynomial");
    char var = a.is_constant() ? b.var() : a.var();
    if (a.is_zero())
        return LaurentPoly(var);
    if (b.terms().size() == 1) {
        Coeff c = b.terms()[0].second;
        std::vector<LaurentPoly::Term> terms;
        for (auto [e, x] : a.terms()) {
            if (x % c != 0)
                throw std::domain_error("inexact polynomial division");
            terms.emplace_back(e - b.terms()[0].first, x / c);
        }
        return LaurentPoly(std::move(terms), var);
    }
    Dense r = to_dense(a), d = to_dense(b);
    if (r.size() < d.size())
        throw std::domain_error("inexact polynomial division");
    Dense q(r.size() - d.size() + 1, 0);
    const Coeff ld = d.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Coeff top = r[k + d.size() - 1];
        if (top == 0)
            continue;
        if (top % ld != 0)
            throw std::domain_error("inexact polynomial division");
        Coeff c = top / ld;
        q[k] = c;
        for (std::size_t m = 0; m < d.size(); ++m)
            r[k + m] = checked_sub(r[k + m], checked_mul(c, d[m]));
    }
    for (Coeff x : r)
        if (x != 0)
            throw std::domain_error("inexact polynomial division");
    return from_dense(q, a.min_exponent() - b.min_exponent(), var);
}

LaurentPoly normalize_gcd(const LaurentPoly& p)
{
    if (p.is_zero())
        return p;
    LaurentPoly r = p.shifted(-p.min_exponent());
    return r.leading_coeff() < 0 ? -r : r;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b)
{
    char var = a.is_constant() ? b.var() : a.var();
    if (a.is_zero())
        return normalize_gcd(b);
    if (b.is_zero())
        return normalize_gcd(a);
    Dense x = to_dense(a), y = to_dense(b);
    Coeff g = std::gcd(content(x), content(y));
    divide_by(x, content(x));
    divide_by(y, content(y));
    if (x.size() < y.size())
        std::swap(x, y);
    try {
        Dense u = x, v = y;
        while (!v.empty()) {
            Dense r = primitive_prem(u, v);
            u = std::move(v);
            v = std::move(r);
        }
        x = std::move(u);
    } catch (const std::overflow_error&) {
        // Remainder sequences can outgrow 64 bits long before the gcd does.
        x = modular_gcd(x, y);
    }
    divide_by(x, content(x));
    for (Coeff& c : x)
        c = checked_mul(c, g);
    return normalize_gcd(from_dense(x, 0, var));
}

std::string to_string(const LaurentPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    const std::string var(1, p.var());
    for (auto [e, c] : p.terms()) {
        if (!out.empty() && c > 0)
            out += '+';
        std::string mono;
        if (e != 0)
            mono = e == 1 ? var : var + "^" + std::to_string(e);
        if (mono.empty())
            out += std::to_string(c);
        else if (c == 1)
            out += mono;
        else if (c == -1)
            out += "-" + mono;
        else
            out += std::to_string(c) + "*" + mono;
    }
    return out;
}

} // namespace vknot
