#pragma once

// Finite biquandles and involutory quandles, and coloring counts of Gauss codes.

#include "vknot/gauss.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace vknot {

/// Tables indexed [a * n + b]:
///   up   = a^b,   down = a_b,   ubar = a^{b-bar},   dbar = a_{b-bar}.
/// At a positive crossing with under input a and over input b the outputs are a^b
/// (under) and b_a (over); a negative crossing uses ubar and dbar the same way.
struct FiniteBiquandle {
    std::size_t n = 0;
    std::vector<std::uint32_t> up, down, ubar, dbar;

    std::uint32_t u(std::uint32_t a, std::uint32_t b) const { return up[a * n + b]; }
    std::uint32_t d(std::uint32_t a, std::uint32_t b) const { return down[a * n + b]; }
    std::uint32_t ub(std::uint32_t a, std::uint32_t b) const { return ubar[a * n + b]; }
    std::uint32_t db(std::uint32_t a, std::uint32_t b) const { return dbar[a * n + b]; }
};

struct AxiomViolation {
    int axiom = 0; ///< 0 for a table that is not closed or has the wrong shape
    std::string detail;
};

/// Empty iff all four axiom groups hold. Existence clauses are checked by search.
std::vector<AxiomViolation> check_biquandle_axioms(const FiniteBiquandle& bq);

/// The existence witnesses of axiom 3 are unique. Assumes the axioms hold.
bool is_strong(const FiniteBiquandle& bq);

/// a^b = ta + (1-st)b, a_b = sa, a^{b-bar} = t^-1 a + (1 - s^-1 t^-1) b, a_{b-bar} = s^-1 a
/// over Z/p. Throws std::invalid_argument if p is not prime or s, t are not units.
FiniteBiquandle make_alexander_biquandle_modp(std::uint32_t p, std::int64_t s, std::int64_t t);

/// a |> b stored at [a * n + b].
struct FiniteQuandle {
    std::size_t n = 0;
    std::vector<std::uint32_t> op;
    bool involutory = false;

    std::uint32_t act(std::uint32_t a, std::uint32_t b) const { return op[a * n + b]; }
};

/// Idempotence, invertible right translations, right self-distributivity; and the
/// involutory flag must match the table.
std::vector<std::string> check_quandle_axioms(const FiniteQuandle& q);

/// a |> b = 2b - a mod n.
FiniteQuandle make_dihedral_quandle(std::size_t n);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge labelings satisfying the crossing relations. Labels are propagated through
/// crossings and only undetermined edges are branched on; more than `budget`
/// branch nodes throws BudgetExceeded.
std::uint64_t count_biquandle_colorings(const LinkGaussCode& code, const FiniteBiquandle& bq,
                                        std::uint64_t budget = 100'000'000);

/// Arc labelings with (under output) = (under input) |> (over arc). Throws
/// std::invalid_argument unless the quandle is involutory.
std::uint64_t count_iq_colorings(const LinkGaussCode& code, const FiniteQuandle& q,
                                 std::uint64_t budget = 100'000'000);

/// "n", then n rows of n entries for each table in the order up, down, ubar, dbar.
FiniteBiquandle read_biquandle(std::istream& in);
void write_biquandle(std::ostream& out, const FiniteBiquandle& bq);
/// "n", n rows of n entries, then a line "1" (involutory) or "0".
FiniteQuandle read_quandle(std::istream& in);
void write_quandle(std::ostream& out, const FiniteQuandle& q);

} // namespace vknot
