#include "vknot/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace vknot {

LaurentPoly2::LaurentPoly2(std::vector<Term> terms) : terms_(std::move(terms))
{
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t k = 0; k < terms_.size();) {
        Exp e = terms_[k].first;
        Coeff c = 0;
        for (; k < terms_.size() && terms_[k].first == e; ++k)
            c = checked_add(c, terms_[k].second);
        if (c != 0)
            terms_[out++] = {e, c};
    }
    terms_.resize(out);
}

LaurentPoly2 LaurentPoly2::constant(Coeff c)
{
    return monomial(c, 0, 0);
}

LaurentPoly2 LaurentPoly2::monomial(Coeff c, int s_exp, int t_exp)
{
    LaurentPoly2 p;
    if (c != 0)
        p.terms_.push_back({{s_exp, t_exp}, c});
    return p;
}

Coeff LaurentPoly2::coeff(int s_exp, int t_exp) const
{
    Exp e{s_exp, t_exp};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exp& x) { return t.first < x; });
    return it != terms_.end() && it->first == e ? it->second : 0;
}

LaurentPoly2 LaurentPoly2::shifted(int ds, int dt) const
{
    LaurentPoly2 r = *this;
    for (auto& t : r.terms_) {
        t.first.s += ds;
        t.first.t += dt;
    }
    return r;
}

LaurentPoly2 LaurentPoly2::operator-() const
{
    LaurentPoly2 r = *this;
    for (auto& t : r.terms_)
        t.second = checked_sub(0, t.second);
    return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o)
{
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
                out.push_back({a->first, c});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o)
{
    return *this += -o;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<LaurentPoly2::Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            terms.push_back({{ea.s + eb.s, ea.t + eb.t}, checked_mul(ca, cb)});
    return LaurentPoly2(std::move(terms));
}

LaurentPoly2 exact_divide(const LaurentPoly2& a, const LaurentPoly2& b)
{
    if (b.is_zero())
        throw std::domain_error("division by zero polynomial");
    if (a.is_zero())
        return {};
    const auto& bt = b.terms();
    if (bt.size() == 1) {
        std::vector<LaurentPoly2::Term> terms;
        for (const auto& [e, c] : a.terms()) {
            if (c % bt[0].second != 0)
                throw std::domain_error("inexact polynomial division");
            terms.push_back({{e.s - bt[0].first.s, e.t - bt[0].first.t}, c / bt[0].second});
        }
        return LaurentPoly2(std::move(terms));
    }

    // Lex long division from the top. Any quotient term lies between
    // low(a)/low(b) and high(a)/high(b) in lex order.
    const LaurentPoly2::Exp lead = bt.back().first;
    const Coeff lead_c = bt.back().second;
    const LaurentPoly2::Exp floor{a.terms().front().first.s - bt.front().first.s,
                                  a.terms().front().first.t - bt.front().first.t};
    std::vector<LaurentPoly2::Term> quotient;
    LaurentPoly2 r = a;
    while (!r.is_zero()) {
        const auto& [re, rc] = r.terms().back();
        LaurentPoly2::Exp qe{re.s - lead.s, re.t - lead.t};
        if (qe < floor || rc % lead_c != 0)
            throw std::domain_error("inexact polynomial division");
        Coeff qc = rc / lead_c;
        quotient.push_back({qe, qc});
        r -= LaurentPoly2::monomial(qc, qe.s, qe.t) * b;
    }
    return LaurentPoly2(std::move(quotient));
}

LaurentPoly2 normalize_unit(const LaurentPoly2& p)
{
    if (p.is_zero())
        return p;
    int ms = p.terms().front().first.s, mt = p.terms().front().first.t;
    for (const auto& [e, c] : p.terms()) {
        ms = std::min(ms, e.s);
        mt = std::min(mt, e.t);
    }
    LaurentPoly2 r = p.shifted(-ms, -mt);
    return r.terms().front().second < 0 ? -r : r;
}

std::string to_string(const LaurentPoly2& p)
{
    if (p.is_zero())
        return "0";
    auto power = [](const char* v, int e) -> std::string {
        if (e == 0)
            return "";
        return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
    };
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        if (!out.empty() && c > 0)
            out += '+';
        std::string mono = power("s", e.s);
        std::string tp = power("t", e.t);
        if (!tp.empty())
            mono += (mono.empty() ? "" : "*") + tp;
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
