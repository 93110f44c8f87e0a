#pragma once

// Polynomial and combinatorial invariants of Gauss codes.
//
// Smoothing convention: at a positive crossing the A-smoothing joins each incoming
// strand to the outgoing strand of the other one (the orientation-respecting
// reconnection); the B-smoothing joins the two incoming ends and the two outgoing
// ends. At a negative crossing the two are exchanged. With this choice the kink
// O1+U1+ has bracket -A^3 and the all-positive trefoil has V(t) = t + t^3 - t^4.

#include "vknot/gauss.hpp"
#include "vknot/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace vknot {

enum class Smoothing { A, B };
using State = std::map<CrossingLabel, Smoothing>;

/// Loops after smoothing every crossing; free components count as one loop each.
/// Throws std::invalid_argument if the state misses a label.
std::size_t loop_count(const LinkGaussCode& code, const State& state);

/// Bracket polynomial in A, summed over all 2^n states, normalized so that a
/// crossingless circle has bracket 1.
LaurentPoly bracket(const LinkGaussCode& code);

int writhe(const LinkGaussCode& code);

/// (-A^3)^(-w) <K>
LaurentPoly f_polynomial(const LinkGaussCode& code);

/// f with A = t^(-1/4); empty when some exponent of f is not a multiple of 4.
std::optional<LaurentPoly> jones_from_f(const LaurentPoly& f);

/// One column per edge and two rows per crossing (under output, then over output),
/// crossings in label order. A crossingless component adds one free generator: a
/// zero row and a fresh column.
///
/// Positive crossing with under input a and over input b:
///     under_out = C a + D b,   over_out = A a + B b.
/// Negative crossing: the same with inputs and outputs exchanged,
///     under_in = C u + D o,   over_in = A u + B o   (u, o the outputs).
Matrix<LaurentPoly2> alexander_matrix(const LinkGaussCode& code);
Matrix<QuatLaurent> quaternionic_matrix(const LinkGaussCode& code);

/// det of the Alexander biquandle relation matrix (A=0, B=s, C=t, D=1-st) after normalize_unit.
LaurentPoly2 gen_alexander(const LinkGaussCode& code);

/// Study determinant and codimension-1 gcd of the quaternionic relation matrix,
/// A = D = 1+i, B = jt, C = -jt^(-1) acting by left multiplication. Both are
/// normalized with normalize_gcd since moves change them by units t^k.
struct QuaternionicPair {
    LaurentPoly study_det;
    LaurentPoly codim1_gcd;
    friend bool operator==(const QuaternionicPair&, const QuaternionicPair&) = default;
};
QuaternionicPair quaternionic_invariant(const LinkGaussCode& code);

/// The surface has the crossings as vertices and the loops of the all-A and all-B
/// states as faces. genus is the orientable genus when orientable, otherwise the
/// number of crosscaps, summed over the connected pieces of the diagram. Free
/// components add a loop to each state but nothing to the surface.
struct AtomProfile {
    int genus = 0;
    bool orientable = true;
    std::size_t a_loops = 0;
    std::size_t b_loops = 0;
    int euler_characteristic = 0;
    friend bool operator==(const AtomProfile&, const AtomProfile&) = default;
};
AtomProfile atom_profile(const LinkGaussCode& code);

/// Canonical dotted sub-diagram (as a canonical single-component code string,
/// "()" for the empty one) -> coefficient.
using ArrowSum = std::map<std::string, std::int64_t>;

/// Sum over all chord subsets of size <= max_arrows. Single component only.
ArrowSum arrow_expansion(const LinkGaussCode& code, std::size_t max_arrows);

} // namespace vknot
