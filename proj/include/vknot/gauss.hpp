#pragma once

// Signed oriented Gauss codes of virtual knots and links.
//
// A code is a list of components; each component is the cyclic sequence of
// classical crossing passages met while walking along it. Virtual crossings
// are not recorded. Every crossing label occurs exactly twice in a valid
// code: once as an Over passage and once as an Under passage, both carrying
// the crossing's sign.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vknot {

struct CrossingLabel {
    std::uint32_t id = 0;

    constexpr CrossingLabel() = default;
    constexpr explicit CrossingLabel(std::uint32_t value) : id(value) {}

    friend constexpr auto operator<=>(CrossingLabel, CrossingLabel) = default;
};

enum class Passage : std::uint8_t { Over, Under };
enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Passage opposite(Passage p) { return p == Passage::Over ? Passage::Under : Passage::Over; }
constexpr Sign negate(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
constexpr int to_int(Sign s) { return static_cast<int>(s); }

struct GaussEntry {
    CrossingLabel label;
    Passage passage = Passage::Over;
    Sign sign = Sign::Positive;

    friend constexpr bool operator==(const GaussEntry&, const GaussEntry&) = default;
};

using Component = std::vector<GaussEntry>;

/// Position of one passage: component index and index within the component.
struct EntryRef {
    std::size_t component = 0;
    std::size_t index = 0;

    friend constexpr auto operator<=>(const EntryRef&, const EntryRef&) = default;
};

class LinkGaussCode {
public:
    /// The unknot: one empty component.
    LinkGaussCode();
    /// Does not validate; see validate_code() and make_code().
    explicit LinkGaussCode(std::vector<Component> components);

    const std::vector<Component>& components() const { return components_; }
    std::size_t num_components() const { return components_.size(); }
    std::size_t num_entries() const;
    std::size_t num_crossings() const { return num_entries() / 2; }

    /// Labels in ascending order.
    std::vector<CrossingLabel> labels() const;
    /// Largest label in use, 0 for a crossingless code.
    std::uint32_t max_label() const;

    const GaussEntry& at(EntryRef ref) const { return components_[ref.component][ref.index]; }

    friend bool operator==(const LinkGaussCode&, const LinkGaussCode&) = default;

private:
    std::vector<Component> components_;
};

/// Where a crossing's two passages live. Built from a valid code.
struct CrossingInfo {
    EntryRef over;
    EntryRef under;
    Sign sign = Sign::Positive;
};

class CrossingIndex {
public:
    explicit CrossingIndex(const LinkGaussCode& code);

    bool contains(CrossingLabel label) const { return table_.count(label) != 0; }
    /// Throws std::out_of_range for an unknown label.
    const CrossingInfo& at(CrossingLabel label) const;
    const std::map<CrossingLabel, CrossingInfo>& table() const { return table_; }

private:
    std::map<CrossingLabel, CrossingInfo> table_;
};

// ---------------------------------------------------------------------------
// Errors

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct Violation {
    enum class Kind { MissingPartner, ExtraOccurrence, PassageMismatch, SignMismatch, ZeroLabel };
    Kind kind;
    CrossingLabel label;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// e.g. "MissingPartner(1)".
std::string to_string(const Violation& v);

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

class UnknownLabelError : public std::out_of_range {
public:
    explicit UnknownLabelError(CrossingLabel label);
};

// ---------------------------------------------------------------------------
// Operations

/// code := component ("/" component)*; component := "()" | entry+;
/// entry := ("O"|"U") integer ("+"|"-"). Whitespace is allowed between tokens.
/// The empty string is accepted as the unknot.
LinkGaussCode parse_gauss(std::string_view text);

/// Inverse of parse_gauss; labels are kept verbatim.
std::string render_gauss(const LinkGaussCode& code);

/// Empty iff every label occurs exactly twice with opposite passages and equal signs.
/// Violations are sorted by label, then kind.
std::vector<Violation> validate_code(const LinkGaussCode& code);

/// Builds a code and throws ValidationError if it is not valid.
LinkGaussCode make_code(std::vector<Component> components);

/// Representative of the orbit under rotation of each component, permutation of
/// components and relabeling. Labels are renumbered 1..n in first-traversal order.
LinkGaussCode canonicalize(const LinkGaussCode& code);

/// A code with passage and sign information erased.
struct FlatCode {
    std::vector<std::vector<CrossingLabel>> components;

    friend bool operator==(const FlatCode&, const FlatCode&) = default;
};

FlatCode flat_projection(const LinkGaussCode& code);
FlatCode canonicalize_flat(const FlatCode& flat);
/// Labels separated by spaces, components by " / ", empty component "()".
std::string render_flat(const FlatCode& flat);

/// True iff the code is the Gauss code of a planar diagram (no virtual crossings needed).
bool realizability_check(const LinkGaussCode& code);

/// Planarity decided by exhaustive search over the two admissible rotations at every
/// crossing. Exponential; used for multi-component codes and as a cross-check.
bool realizable_by_embedding_search(const LinkGaussCode& code);

/// Gauss-word criterion (interlacement-graph parity conditions plus the cocycle
/// condition) for a single component. Throws std::invalid_argument otherwise.
bool realizable_by_interlacement(const LinkGaussCode& code);

/// Number of classical crossings shared by components i and j, mod 2. In any planar
/// representation the virtual crossings between the two components have the same parity.
int inter_component_parity(const LinkGaussCode& code, std::size_t i, std::size_t j);

// ---------------------------------------------------------------------------
// Edges and arcs

struct Edge {
    std::size_t component = 0;
    std::size_t from = 0; ///< entry index the edge leaves
    std::size_t to = 0;   ///< entry index the edge enters (cyclic successor)
};

struct Arc {
    std::size_t component = 0;
    std::vector<std::size_t> edges; ///< in traversal order
    bool closed = false;            ///< no Under passage on the component
};

/// The four edges at a crossing and the arcs they belong to.
struct CrossingIncidence {
    CrossingLabel label;
    Sign sign = Sign::Positive;
    std::size_t over_in = 0, over_out = 0, under_in = 0, under_out = 0;
    std::size_t over_arc = 0, under_in_arc = 0, under_out_arc = 0;
};

struct EdgeStructure {
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    std::vector<CrossingIncidence> crossings; ///< ascending label order
    /// Edge id of the edge leaving entry (component, index).
    std::vector<std::vector<std::size_t>> edge_of_entry;
    /// Components with no crossings at all; each is a free circle.
    std::vector<std::size_t> free_components;
};

/// Edge k of a component runs from entry k to entry k+1 (cyclically). Arcs are broken
/// only at Under passages. Empty components produce no edges and are listed in
/// free_components; they also get a closed arc with no edges.
EdgeStructure edge_structure(const LinkGaussCode& code);

} // namespace vknot
