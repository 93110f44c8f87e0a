#include "vknot/coloring.hpp"

namespace vknot {

std::vector<std::string> check_quandle_axioms(const FiniteQuandle& q)
{
    std::vector<std::string> out;
    const std::size_t n = q.n;
    if (q.op.size() != n * n) {
        out.push_back("table has the wrong size");
        return out;
    }
    for (auto v : q.op)
        if (v >= n) {
            out.push_back("table entry " + std::to_string(v) + " outside the carrier");
            return out;
        }
    const auto N = static_cast<std::uint32_t>(n);
    bool involutory = true;
    for (std::uint32_t a = 0; a < N; ++a) {
        if (q.act(a, a) != a)
            out.push_back("a |> a != a for a = " + std::to_string(a));
        std::vector<char> hit(n, 0);
        for (std::uint32_t b = 0; b < N; ++b) {
            hit[q.act(b, a)] = 1;
            involutory &= q.act(q.act(b, a), a) == b;
        }
        for (std::size_t k = 0; k < n; ++k)
            if (!hit[k]) {
                out.push_back("right translation by " + std::to_string(a) + " is not a bijection");
                break;
            }
    }
    for (std::uint32_t a = 0; a < N; ++a)
        for (std::uint32_t b = 0; b < N; ++b)
            for (std::uint32_t c = 0; c < N; ++c)
                if (q.act(q.act(a, b), c) != q.act(q.act(a, c), q.act(b, c))) {
                    out.push_back("(a |> b) |> c != (a |> c) |> (b |> c) at (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ", " + std::to_string(c) + ")");
                    return out;
                }
    if (involutory != q.involutory)
        out.push_back(q.involutory ? "flagged involutory but (a |> b) |> b != a" : "involutory flag missing");
    return out;
}

FiniteQuandle make_dihedral_quandle(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("dihedral quandle needs n >= 1");
    FiniteQuandle q;
    q.n = n;
    q.involutory = true;
    q.op.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            q.op[a * n + b] = static_cast<std::uint32_t>((2 * b + n - a) % n);
    return q;
}

} // namespace vknot
