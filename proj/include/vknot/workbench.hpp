#pragma once

// Catalog of named diagrams, invariant reports and the command-line driver.

#include "vknot/coloring.hpp"
#include "vknot/gauss.hpp"
#include "vknot/invariants.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace vknot {

// ---------------------------------------------------------------------------
// Coloring structures named on the command line

/// "dihedral:N", "alexander:P:S:T", "quandle:PATH" or "biquandle:PATH".
struct ColoringStructure {
    std::string name;
    std::variant<FiniteQuandle, FiniteBiquandle> algebra;
};

/// Throws std::invalid_argument for an unknown form or a table that fails its axioms.
ColoringStructure parse_structure(const std::string& spec);

std::uint64_t count_colorings(const LinkGaussCode& code, const ColoringStructure& s, std::uint64_t budget);

/// Budget for coloring searches and tabulation: $VKNOT_BUDGET if set, else the default.
std::uint64_t compute_budget(std::uint64_t fallback = 100'000'000);

// ---------------------------------------------------------------------------
// Catalog

/// Expected values checked by check_entry. Polynomials are compared as rendered strings.
struct Expectations {
    std::optional<std::string> f;
    std::optional<std::string> gen_alexander;
    std::optional<std::string> study_det;
    std::optional<std::string> codim1_gcd;
    std::optional<bool> classical;
    std::optional<int> parity_01; ///< inter_component_parity of components 0 and 1
    /// Every codimension-1 minor of the Alexander matrix is divisible by this
    /// polynomial and the quotients have no common factor.
    std::optional<LaurentPoly2> alexander_codim1_generator;
    std::map<std::string, std::uint64_t> colorings; ///< structure spec -> count
};

struct CatalogEntry {
    std::string name;
    LinkGaussCode code;
    std::string note;
    bool provisional = false;
    Expectations expect;
};

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<CatalogEntry> builtin_catalog();

/// Built-in entries followed by "name<TAB>code" lines from the file ('#' lines and
/// blank lines skipped). Throws CatalogError on a malformed line, an invalid code or
/// a name already in use.
std::vector<CatalogEntry> load_catalog(const std::optional<std::string>& path = std::nullopt);
std::vector<CatalogEntry> read_catalog(std::istream& in, std::vector<CatalogEntry> base);

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name);

/// Descriptions of the expectations that fail; empty when all hold.
std::vector<std::string> check_entry(const CatalogEntry& entry);

// ---------------------------------------------------------------------------
// Reports

struct ReportOptions {
    bool f = false;
    bool gen_alexander = false;
    bool quaternionic = false;
    bool atom = false;
    std::vector<std::string> colorings;
    std::uint64_t budget = 100'000'000;

    static ReportOptions all();
};

struct InvariantReport {
    std::string code;
    std::size_t crossings = 0;
    std::size_t components = 0;
    int writhe = 0;
    bool realizable = false;
    std::vector<std::vector<int>> parity; ///< components x components, 0 on the diagonal
    std::optional<std::string> f;
    std::optional<std::string> jones;
    std::optional<std::string> gen_alexander;
    std::optional<std::pair<std::string, std::string>> quaternionic;
    std::optional<AtomProfile> atom;
    std::vector<std::pair<std::string, std::uint64_t>> colorings;
};

InvariantReport make_report(const LinkGaussCode& code, const ReportOptions& options,
                            const std::vector<ColoringStructure>& structures);

/// JSON with a fixed key order; `indent` < 0 gives a single line.
std::string serialize(const InvariantReport& report, int indent = 2);

// ---------------------------------------------------------------------------
// Command line

/// Exit codes: 0 success, 1 an invariant diverged or a catalog assertion failed,
/// 2 bad input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace vknot
