#include "vknot/coloring.hpp"

#include <sstream>

namespace vknot {

namespace {

struct Reporter {
    std::vector<AxiomViolation> out;
    void add(int axiom, const std::string& what) { out.push_back({axiom, what}); }
};

std::string cell(const char* what, std::uint32_t a, std::uint32_t b)
{
    std::ostringstream s;
    s << what << " fails at (" << a << ", " << b << ")";
    return s.str();
}

std::string cell(const char* what, std::uint32_t a, std::uint32_t b, std::uint32_t c)
{
    std::ostringstream s;
    s << what << " fails at (" << a << ", " << b << ", " << c << ")";
    return s.str();
}

} // namespace

std::vector<AxiomViolation> check_biquandle_axioms(const FiniteBiquandle& bq)
{
    Reporter r;
    const std::size_t n = bq.n;
    for (const auto* t : {&bq.up, &bq.down, &bq.ubar, &bq.dbar}) {
        if (t->size() != n * n) {
            r.add(0, "table has the wrong size");
            return r.out;
        }
        for (auto v : *t)
            if (v >= n) {
                r.add(0, "table entry " + std::to_string(v) + " outside the carrier");
                return r.out;
            }
    }
    const auto N = static_cast<std::uint32_t>(n);

    // 1: for every a some x has x = a_x and a = x^a; some y has y = a^{y-bar} and a = y_{a-bar}.
    for (std::uint32_t a = 0; a < N; ++a) {
        bool found_x = false, found_y = false;
        for (std::uint32_t x = 0; x < N; ++x) {
            found_x |= bq.d(a, x) == x && bq.u(x, a) == a;
            found_y |= bq.ub(a, x) == x && bq.db(x, a) == a;
        }
        if (!found_x)
            r.add(1, "no x with x = a_x, a = x^a for a = " + std::to_string(a));
        if (!found_y)
            r.add(1, "no y with y = a^{y-bar}, a = y_{a-bar} for a = " + std::to_string(a));
    }

    // 2: the barred operations undo the unbarred ones and conversely.
    for (std::uint32_t a = 0; a < N; ++a)
        for (std::uint32_t b = 0; b < N; ++b) {
            std::uint32_t ab = bq.u(a, b), ba = bq.d(b, a);
            std::uint32_t abb = bq.ub(a, b), bab = bq.db(b, a);
            if (bq.ub(ab, ba) != a)
                r.add(2, cell("a = (a^b)^{bar(b_a)}", a, b));
            if (bq.db(ba, ab) != b)
                r.add(2, cell("b = (b_a)_{bar(a^b)}", a, b));
            if (bq.u(abb, bab) != a)
                r.add(2, cell("a = (a^{bar b})^{b_{bar a}}", a, b));
            if (bq.d(bab, abb) != b)
                r.add(2, cell("b = (b_{bar a})_{a^{bar b}}", a, b));
        }

    // 3: for every a, b there are x, y with x_b = a, y^{a-bar} = b, b^x = y, a_{y-bar} = x,
    // and z, w with w^a = b, a_w = z, z_{b-bar} = a, b^{z-bar} = w.
    for (std::uint32_t a = 0; a < N; ++a)
        for (std::uint32_t b = 0; b < N; ++b) {
            bool xy = false, zw = false;
            for (std::uint32_t x = 0; x < N && !xy; ++x) {
                std::uint32_t y = bq.u(b, x);
                xy = bq.d(x, b) == a && bq.ub(y, a) == b && bq.db(a, y) == x;
            }
            for (std::uint32_t w = 0; w < N && !zw; ++w) {
                std::uint32_t z = bq.d(a, w);
                zw = bq.u(w, a) == b && bq.db(z, b) == a && bq.ub(b, z) == w;
            }
            if (!xy)
                r.add(3, cell("no (x, y) witness", a, b));
            if (!zw)
                r.add(3, cell("no (z, w) witness", a, b));
        }

    // 4: the three exchange laws, then again with the barred operations.
    for (int barred = 0; barred < 2; ++barred) {
        auto U = [&](std::uint32_t a, std::uint32_t b) { return barred ? bq.ub(a, b) : bq.u(a, b); };
        auto D = [&](std::uint32_t a, std::uint32_t b) { return barred ? bq.db(a, b) : bq.d(a, b); };
        for (std::uint32_t a = 0; a < N; ++a)
            for (std::uint32_t b = 0; b < N; ++b)
                for (std::uint32_t c = 0; c < N; ++c) {
                    if (U(U(a, b), c) != U(U(a, D(c, b)), U(b, c)))
                        r.add(4, cell(barred ? "barred a^{bc} = a^{c_b b^c}" : "a^{bc} = a^{c_b b^c}", a, b, c));
                    if (D(D(c, b), a) != D(D(c, U(a, b)), D(b, a)))
                        r.add(4, cell(barred ? "barred c_{ba} = c_{a^b b_a}" : "c_{ba} = c_{a^b b_a}", a, b, c));
                    if (U(D(b, a), D(c, U(a, b))) != D(U(b, c), U(a, D(c, b))))
                        r.add(4, cell(barred ? "barred (b_a)^{c_{a^b}} = (b^c)_{a^{c_b}}"
                                             : "(b_a)^{c_{a^b}} = (b^c)_{a^{c_b}}",
                                      a, b, c));
                }
    }
    return r.out;
}

bool is_strong(const FiniteBiquandle& bq)
{
    const auto N = static_cast<std::uint32_t>(bq.n);
    for (std::uint32_t a = 0; a < N; ++a)
        for (std::uint32_t b = 0; b < N; ++b) {
            int xy = 0, zw = 0;
            for (std::uint32_t x = 0; x < N; ++x) {
                std::uint32_t y = bq.u(b, x);
                xy += bq.d(x, b) == a && bq.ub(y, a) == b && bq.db(a, y) == x;
            }
            for (std::uint32_t w = 0; w < N; ++w) {
                std::uint32_t z = bq.d(a, w);
                zw += bq.u(w, a) == b && bq.db(z, b) == a && bq.ub(b, z) == w;
            }
            if (xy != 1 || zw != 1)
                return false;
        }
    return true;
}

FiniteBiquandle make_alexander_biquandle_modp(std::uint32_t p, std::int64_t s, std::int64_t t)
{
    if (p < 2)
        throw std::invalid_argument("modulus must be prime");
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    const std::int64_t P = p;
    auto mod = [&](std::int64_t v) { return ((v % P) + P) % P; };
    auto inverse = [&](std::int64_t v) {
        for (std::int64_t k = 1; k < P; ++k)
            if (mod(v * k) == 1)
                return k;
        throw std::invalid_argument("parameter " + std::to_string(v) + " is not a unit mod " + std::to_string(p));
    };
    s = mod(s);
    t = mod(t);
    const std::int64_t si = inverse(s), ti = inverse(t);

    FiniteBiquandle bq;
    bq.n = p;
    for (auto* tab : {&bq.up, &bq.down, &bq.ubar, &bq.dbar})
        tab->resize(static_cast<std::size_t>(p) * p);
    for (std::int64_t a = 0; a < P; ++a)
        for (std::int64_t b = 0; b < P; ++b) {
            std::size_t k = static_cast<std::size_t>(a * P + b);
            bq.up[k] = static_cast<std::uint32_t>(mod(t * a + mod(1 - s * t) * b));
            bq.down[k] = static_cast<std::uint32_t>(mod(s * a));
            bq.ubar[k] = static_cast<std::uint32_t>(mod(ti * a + mod(1 - si * ti) * b));
            bq.dbar[k] = static_cast<std::uint32_t>(mod(si * a));
        }
    return bq;
}

} // namespace vknot
