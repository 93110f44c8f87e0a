#pragma once

// Generalized Reidemeister moves on Gauss codes.
//
// Virtual crossings are not recorded, so the purely virtual moves and the detour
// move act as the identity on codes and have no sites here. ForbiddenOver (two
// consecutive over passages exchanging places) is not a virtual isotopy; it is
// only produced when explicitly requested and models welded equivalence.

#include "vknot/gauss.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace vknot {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3, ForbiddenOver };

const char* to_string(MoveKind kind);

/// Everything needed to apply one move deterministically.
///
/// positions holds: R1Add one insertion gap; R1Remove the two adjacent entries;
/// R2Add two gaps (over strand, under strand); R2Remove the two over entries then
/// the two under entries; R3 three adjacent pairs (top, middle, bottom strand);
/// ForbiddenOver the two adjacent over entries. A gap (c, k) means "before entry k
/// of component c"; an empty component has the single gap (c, 0).
struct MoveSite {
    MoveKind kind = MoveKind::R1Add;
    std::vector<EntryRef> positions;
    Sign sign = Sign::Positive; ///< R1Add: new crossing; R2Add: first of the two new crossings
    bool over_first = true;     ///< R1Add: O before U; R2Add at a single gap: over pair first
    bool parallel = true;       ///< R2Add: under pair in the same order as the over pair

    friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

class StaleSiteError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// All sites of one kind, in a deterministic order.
std::vector<MoveSite> enumerate_sites(const LinkGaussCode& code, MoveKind kind);

/// Throws StaleSiteError if the site does not fit the code.
LinkGaussCode apply_move(const LinkGaussCode& code, const MoveSite& site);

/// s(i): both entries exchange passage and negate sign.
LinkGaussCode switch_crossing(const LinkGaussCode& code, CrossingLabel label);

/// v(i): both entries keep passage and negate sign. Flanking a crossing by two
/// virtual crossings turns the planar picture of the crossing by a quarter turn:
/// smoothings and writhe change as for s(i) while the over/under pattern survives.
LinkGaussCode virtualize_crossing(const LinkGaussCode& code, CrossingLabel label);

/// Labels whose first passage met from entry `basepoint` is Under. Single component only.
std::set<CrossingLabel> descending_switch_set(const LinkGaussCode& code, std::size_t basepoint = 0);

/// Virtualizes the descending switch set taken from entry 0 of the code as given.
/// For a classical code the result has f-polynomial 1; for other input the
/// construction is still carried out.
LinkGaussCode virt_construction(const LinkGaussCode& code);

struct WalkOptions {
    bool allow_forbidden = false;
    /// Adds that would exceed this crossing count are skipped while any other move
    /// exists. 0 means two more than the starting code.
    std::size_t max_crossings = 0;
};

/// steps + 1 codes starting with `code`; each is one move from its predecessor.
/// Deterministic for a given seed.
std::vector<LinkGaussCode> random_walk(const LinkGaussCode& code, std::size_t steps, std::uint64_t seed,
                                       const WalkOptions& options = {});

} // namespace vknot
