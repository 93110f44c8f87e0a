#include "vknot/algebra.hpp"

#include <stdexcept>

namespace vknot {

GaussianLaurent GaussianLaurent::constant(Coeff r, Coeff i)
{
    return {LaurentPoly::constant(r), LaurentPoly::constant(i)};
}

LaurentPoly GaussianLaurent::norm() const
{
    return re * re + im * im;
}

GaussianLaurent& GaussianLaurent::operator+=(const GaussianLaurent& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

GaussianLaurent& GaussianLaurent::operator-=(const GaussianLaurent& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianLaurent operator*(const GaussianLaurent& a, const GaussianLaurent& b)
{
    if (a.im.is_zero() && b.im.is_zero())
        return {a.re * b.re};
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianLaurent exact_divide(const GaussianLaurent& a, const GaussianLaurent& b)
{
    if (b.is_zero())
        throw std::domain_error("division by zero");
    if (b.im.is_zero())
        return {exact_divide(a.re, b.re), a.im.is_zero() ? LaurentPoly() : exact_divide(a.im, b.re)};
    // a/b = a*conj(b) / N(b) and N(b) is real.
    GaussianLaurent num = a * b.conj();
    LaurentPoly n = b.norm();
    return {exact_divide(num.re, n), num.im.is_zero() ? LaurentPoly() : exact_divide(num.im, n)};
}

std::string to_string(const GaussianLaurent& g)
{
    if (g.im.is_zero())
        return to_string(g.re);
    if (g.re.is_zero())
        return "(" + to_string(g.im) + ")*i";
    return "(" + to_string(g.re) + ")+(" + to_string(g.im) + ")*i";
}

} // namespace vknot
