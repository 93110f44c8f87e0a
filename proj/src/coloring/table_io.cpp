#include "vknot/coloring.hpp"

#include <istream>
#include <ostream>

namespace vknot {

namespace {

std::size_t read_size(std::istream& in)
{
    long long n = 0;
    if (!(in >> n) || n <= 0 || n > 4096)
        throw std::invalid_argument("table file: expected a carrier size between 1 and 4096");
    return static_cast<std::size_t>(n);
}

std::vector<std::uint32_t> read_table(std::istream& in, std::size_t n, const char* name)
{
    std::vector<std::uint32_t> t(n * n);
    for (auto& v : t) {
        long long x = 0;
        if (!(in >> x))
            throw std::invalid_argument(std::string("table file: table ") + name + " is truncated");
        if (x < 0 || static_cast<std::size_t>(x) >= n)
            throw std::invalid_argument(std::string("table file: entry ") + std::to_string(x) + " of table " +
                                        name + " outside the carrier");
        v = static_cast<std::uint32_t>(x);
    }
    return t;
}

void write_table(std::ostream& out, std::size_t n, const std::vector<std::uint32_t>& t)
{
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            out << (b ? " " : "") << t[a * n + b];
        out << '\n';
    }
}

} // namespace

FiniteBiquandle read_biquandle(std::istream& in)
{
    FiniteBiquandle bq;
    bq.n = read_size(in);
    bq.up = read_table(in, bq.n, "a^b");
    bq.down = read_table(in, bq.n, "a_b");
    bq.ubar = read_table(in, bq.n, "a^{b-bar}");
    bq.dbar = read_table(in, bq.n, "a_{b-bar}");
    return bq;
}

void write_biquandle(std::ostream& out, const FiniteBiquandle& bq)
{
    out << bq.n << '\n';
    for (const auto* t : {&bq.up, &bq.down, &bq.ubar, &bq.dbar})
        write_table(out, bq.n, *t);
}

FiniteQuandle read_quandle(std::istream& in)
{
    FiniteQuandle q;
    q.n = read_size(in);
    q.op = read_table(in, q.n, "a |> b");
    int flag = -1;
    if (!(in >> flag) || (flag != 0 && flag != 1))
        throw std::invalid_argument("table file: expected involutory flag 0 or 1");
    q.involutory = flag == 1;
    return q;
}

void write_quandle(std::ostream& out, const FiniteQuandle& q)
{
    out << q.n << '\n';
    write_table(out, q.n, q.op);
    out << (q.involutory ? 1 : 0) << '\n';
}

} // namespace vknot
