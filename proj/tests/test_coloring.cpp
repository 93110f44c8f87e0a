#include "support.hpp"
#include "vknot/moves.hpp"

#include <doctest.h>

#include <sstream>

using namespace vknot;
using namespace vknot::testing;

namespace {

const char* const trefoil = "O1+U2+O3+U1+O2+U3+";

std::vector<std::pair<std::int64_t, std::int64_t>> unit_pairs(std::uint32_t p)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t s = 1; s < p; ++s)
        for (std::int64_t t = 1; t < p; ++t)
            out.emplace_back(s, t);
    return out;
}

} // namespace

TEST_CASE("alexander biquandles satisfy the axioms")
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (auto [s, t] : unit_pairs(p)) {
            auto bq = make_alexander_biquandle_modp(p, s, t);
            CHECK(bq.n == p);
            CHECK(check_biquandle_axioms(bq).empty());
            CHECK(is_strong(bq));
        }
    CHECK_THROWS_AS(make_alexander_biquandle_modp(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_alexander_biquandle_modp(5, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_alexander_biquandle_modp(5, 2, 5), std::invalid_argument);
}

TEST_CASE("corrupted tables are rejected")
{
    auto bq = make_alexander_biquandle_modp(3, 2, 2);
    for (auto table : {&FiniteBiquandle::up, &FiniteBiquandle::down, &FiniteBiquandle::ubar, &FiniteBiquandle::dbar})
        for (std::size_t cell = 0; cell < bq.n * bq.n; ++cell) {
            auto bad = bq;
            (bad.*table)[cell] = ((bad.*table)[cell] + 1) % bad.n;
            CHECK_FALSE(check_biquandle_axioms(bad).empty());
        }
    auto shape = bq;
    shape.up.pop_back();
    auto v = check_biquandle_axioms(shape);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().axiom == 0);
    auto range = bq;
    range.down[0] = 7;
    CHECK(check_biquandle_axioms(range).front().axiom == 0);
}

TEST_CASE("quandle axioms")
{
    for (std::size_t n : {1u, 3u, 5u, 7u})
        CHECK(check_quandle_axioms(make_dihedral_quandle(n)).empty());
    auto q = make_dihedral_quandle(5);
    auto flag = q;
    flag.involutory = false;
    CHECK_FALSE(check_quandle_axioms(flag).empty());
    auto idem = q;
    idem.op[2 * 5 + 2] = 3;
    CHECK_FALSE(check_quandle_axioms(idem).empty());
    // Alexander quandle a |> b = 2a - b over Z/5: a quandle, but not involutory.
    FiniteQuandle affine{5, std::vector<std::uint32_t>(25), false};
    for (std::uint32_t a = 0; a < 5; ++a)
        for (std::uint32_t b = 0; b < 5; ++b)
            affine.op[a * 5 + b] = (2 * a + 4 * b) % 5;
    CHECK(check_quandle_axioms(affine).empty());
    CHECK_THROWS_AS(count_iq_colorings(parse_gauss(trefoil), affine), std::invalid_argument);
}

TEST_CASE("coloring counts agree with exhaustive labeling")
{
    std::mt19937_64 rng(43);
    std::vector<FiniteBiquandle> bqs{make_alexander_biquandle_modp(3, 2, 2), make_alexander_biquandle_modp(5, 2, 3),
                                     make_alexander_biquandle_modp(2, 1, 1)};
    std::vector<FiniteQuandle> qs{make_dihedral_quandle(3), make_dihedral_quandle(5)};
    for (int k = 0; k < 60; ++k) {
        auto code = random_code(rng, 1 + k % 4, 1 + k % 2);
        for (const auto& bq : bqs)
            CHECK(count_biquandle_colorings(code, bq) == brute_biquandle_colorings(code, bq));
        for (const auto& q : qs)
            CHECK(count_iq_colorings(code, q) == brute_iq_colorings(code, q));
    }
    auto t = parse_gauss(trefoil);
    CHECK(count_iq_colorings(t, make_dihedral_quandle(3)) == 9);
    CHECK(brute_iq_colorings(t, make_dihedral_quandle(3)) == 9);
    CHECK(count_iq_colorings(LinkGaussCode(), make_dihedral_quandle(3)) == 3);
    CHECK(count_biquandle_colorings(parse_gauss("()/()"), bqs[1]) == 25);
}

TEST_CASE("alexander biquandle counts are powers of p")
{
    std::mt19937_64 rng(47);
    for (int k = 0; k < 50; ++k) {
        auto code = random_code(rng, 1 + k % 5);
        for (std::uint32_t p : {3u, 5u}) {
            auto c = count_biquandle_colorings(code, make_alexander_biquandle_modp(p, 2, p - 1));
            while (c % p == 0)
                c /= p;
            CHECK(c == 1);
        }
    }
}

TEST_CASE("iq colorings ignore virtualized crossings' signs")
{
    std::mt19937_64 rng(53);
    auto q = make_dihedral_quandle(5);
    for (int k = 0; k < 40; ++k) {
        auto code = random_code(rng, 2 + k % 4);
        auto base = count_iq_colorings(code, q);
        for (auto l : code.labels())
            CHECK(count_iq_colorings(virtualize_crossing(code, l), q) == base);
    }
}

TEST_CASE("budget")
{
    std::mt19937_64 rng(59);
    auto code = random_code(rng, 8);
    CHECK_THROWS_AS(count_biquandle_colorings(code, make_alexander_biquandle_modp(7, 2, 3), 1), BudgetExceeded);
}

TEST_CASE("table files")
{
    auto bq = make_alexander_biquandle_modp(5, 2, 3);
    std::stringstream ss;
    write_biquandle(ss, bq);
    auto back = read_biquandle(ss);
    CHECK(back.n == bq.n);
    CHECK(back.up == bq.up);
    CHECK(back.down == bq.down);
    CHECK(back.ubar == bq.ubar);
    CHECK(back.dbar == bq.dbar);

    auto q = make_dihedral_quandle(7);
    std::stringstream qs;
    write_quandle(qs, q);
    auto qb = read_quandle(qs);
    CHECK(qb.op == q.op);
    CHECK(qb.involutory);

    std::istringstream truncated("3\n0 1 2\n");
    CHECK_THROWS(read_quandle(truncated));
    std::istringstream range("2\n0 5\n1 1\n1\n");
    CHECK_THROWS(read_quandle(range));
    std::istringstream empty("");
    CHECK_THROWS(read_biquandle(empty));
}
