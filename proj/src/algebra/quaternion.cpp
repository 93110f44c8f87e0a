#include "vknot/algebra.hpp"

namespace vknot {

QuatLaurent QuatLaurent::constant(Coeff w, Coeff x, Coeff y, Coeff z)
{
    return {LaurentPoly::constant(w), LaurentPoly::constant(x), LaurentPoly::constant(y),
            LaurentPoly::constant(z)};
}

QuatLaurent& QuatLaurent::operator+=(const QuatLaurent& o)
{
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
}

QuatLaurent& QuatLaurent::operator-=(const QuatLaurent& o)
{
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
}

QuatLaurent operator*(const QuatLaurent& a, const QuatLaurent& b)
{
    return {
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    };
}

std::string to_string(const QuatLaurent& q)
{
    std::string out;
    auto part = [&](const LaurentPoly& p, const char* unit) {
        if (p.is_zero())
            return;
        if (!out.empty())
            out += '+';
        out += "(" + to_string(p) + ")" + unit;
    };
    part(q.w, "");
    part(q.x, "*i");
    part(q.y, "*j");
    part(q.z, "*k");
    return out.empty() ? "0" : out;
}

} // namespace vknot
