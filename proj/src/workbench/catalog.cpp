#include "vknot/workbench.hpp"

#include "vknot/study.hpp"

#include <fstream>
#include <istream>
#include <set>

namespace vknot {

namespace {

LaurentPoly2 poly2(std::vector<LaurentPoly2::Term> terms) { return LaurentPoly2(std::move(terms)); }

CatalogEntry entry(std::string name, const char* code, std::string note)
{
    return CatalogEntry{std::move(name), parse_gauss(code), std::move(note), false, {}};
}

// Integer specialization of one variable, after shifting exponents to be non-negative.
LaurentPoly specialize(const LaurentPoly2& p, bool fix_s, Coeff value)
{
    const LaurentPoly2 q = normalize_unit(p);
    std::vector<LaurentPoly::Term> terms;
    for (const auto& [e, c] : q.terms()) {
        int fixed = fix_s ? e.s : e.t;
        Coeff v = c;
        for (int k = 0; k < fixed; ++k)
            v = checked_mul(v, value);
        terms.push_back({fix_s ? e.t : e.s, v});
    }
    return LaurentPoly(std::move(terms), fix_s ? 't' : 's');
}

// A common factor with positive t-degree survives (up to a unit) every specialization
// s = v that does not kill its leading coefficient, and likewise for s, so a unit gcd
// at some point for each variable rules one out.
bool coprime(const std::vector<LaurentPoly2>& polys)
{
    auto unit_somewhere = [&](bool fix_s) {
        for (Coeff v : {2, 3, 5, -2, 7}) {
            LaurentPoly g;
            for (const auto& p : polys)
                g = poly_gcd(g, specialize(p, fix_s, v));
            if (g == LaurentPoly::constant(1))
                return true;
        }
        return false;
    };
    return unit_somewhere(true) && unit_somewhere(false);
}

std::optional<std::string> check_codim1_generator(const LinkGaussCode& code, const LaurentPoly2& gen)
{
    const auto m = alexander_matrix(code);
    std::vector<LaurentPoly2> quotients;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            auto minor = det_fraction_free(m.without(r, c));
            if (minor.is_zero())
                continue;
            try {
                quotients.push_back(exact_divide(minor, gen));
            } catch (const std::domain_error&) {
                return "minor (" + std::to_string(r) + ", " + std::to_string(c) + ") = " + to_string(minor) +
                       " is not divisible by " + to_string(gen);
            }
        }
    if (quotients.empty())
        return "all codimension-1 minors vanish";
    if (!coprime(quotients))
        return "codimension-1 minors share a factor beyond " + to_string(gen);
    return std::nullopt;
}

} // namespace

std::vector<CatalogEntry> builtin_catalog()
{
    std::vector<CatalogEntry> c;

    c.push_back(entry("unknot", "()", "crossingless circle"));
    c.back().expect.f = "1";
    c.back().expect.classical = true;
    c.back().expect.colorings = {{"dihedral:3", 3}, {"alexander:5:2:3", 5}};

    c.push_back(entry("kink", "O1+U1+", "unknot with one positive curl"));
    c.back().expect.f = "1";
    c.back().expect.classical = true;
    c.back().expect.colorings = {{"dihedral:3", 3}, {"alexander:5:2:3", 5}};

    c.push_back(entry("trefoil", "O1+U2+O3+U1+O2+U3+", "classical trefoil, all crossings positive"));
    c.back().expect.f = "-A^-16+A^-12+A^-4";
    c.back().expect.gen_alexander = "0";
    c.back().expect.classical = true;
    c.back().expect.colorings = {{"dihedral:3", 9}, {"dihedral:5", 5}};

    // Alternating planar 4-crossing code chosen by its Jones polynomial
    // t^-2 - t^-1 + 1 - t + t^2.
    c.push_back(entry("figure-eight", "O1+U2-O3-U1+O4+U3-O2-U4+", "classical figure-eight knot, writhe 0"));
    c.back().expect.f = "A^-8-A^-4+1-A^4+A^8";
    c.back().expect.gen_alexander = "0";
    c.back().expect.classical = true;
    c.back().expect.colorings = {{"dihedral:3", 3}, {"dihedral:5", 25}};

    c.push_back(entry("virtual-trefoil", "O1+O2+U1+U2+", "two classical crossings, one virtual"));
    c.back().expect.gen_alexander = "1-t-s+s*t^2+s^2*t-s^2*t^2";
    c.back().expect.study_det = "4+8*t^2+4*t^4";
    c.back().expect.codim1_gcd = "1";
    c.back().expect.classical = false;

    // Two copies of the 2-crossing virtual unknot O a, U b, U a, O b (signs opposite,
    // removable by R2 on its own) joined end to end; the second copy is entered at
    // its under passage and carries the opposite signs. Chosen among the 64 joins
    // of two such pieces as one whose Alexander module is trivial (a unit
    // codimension-1 minor) while the quaternionic gcd is not.
    c.push_back(entry("kishino", "O1-U2+U1-O2+U3+O4-O3+U4-", "Kishino knot, connected sum of two virtual unknots"));
    c.back().expect.f = "1";
    c.back().expect.gen_alexander = "0";
    c.back().expect.study_det = "0";
    c.back().expect.codim1_gcd = "2+5*t^2+2*t^4";
    c.back().expect.alexander_codim1_generator = LaurentPoly2::constant(1);
    c.back().expect.colorings = {{"dihedral:3", 3}};

    // Same two pieces joined the other way round. The relation check below is the
    // module statement (s^-1 - t - 1)(a - b) = 0, i.e. G = 0 and the codimension-1
    // minors generate the ideal of s^-1 - t - 1 (here multiplied by the unit -s).
    c.push_back(entry("knot-k", "U1+O2-O1+U2-U3+O4-O3+U4-", "virtual knot with Alexander module Z[s,t]/(s^-1-t-1)"));
    c.back().provisional = true;
    c.back().expect.gen_alexander = "0";
    c.back().expect.alexander_codim1_generator = poly2({{{0, 0}, -1}, {{1, 0}, 1}, {{1, 1}, 1}});

    c.push_back(entry("flat-h", "O1+/U1+", "two circles meeting in one classical and one virtual crossing"));
    c.back().expect.parity_01 = 1;
    c.back().expect.classical = false;

    c.push_back(entry("hopf", "O1+U2+/U1+O2+", "classical positive Hopf link"));
    c.back().expect.parity_01 = 0;
    c.back().expect.classical = true;
    c.back().expect.colorings = {{"dihedral:3", 3}};

    return c;
}

std::vector<CatalogEntry> read_catalog(std::istream& in, std::vector<CatalogEntry> base)
{
    std::set<std::string> names;
    for (const auto& e : base)
        names.insert(e.name);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0)
            throw CatalogError("catalog line " + std::to_string(number) + ": expected name<TAB>code");
        std::string name = line.substr(0, tab);
        if (!names.insert(name).second)
            throw CatalogError("catalog line " + std::to_string(number) + ": duplicate name '" + name + "'");
        CatalogEntry e;
        e.name = name;
        e.note = "user entry";
        try {
            e.code = parse_gauss(line.substr(tab + 1));
            auto violations = validate_code(e.code);
            if (!violations.empty())
                throw ValidationError(violations);
        } catch (const std::exception& ex) {
            throw CatalogError("catalog line " + std::to_string(number) + " (" + name + "): " + ex.what());
        }
        base.push_back(std::move(e));
    }
    return base;
}

std::vector<CatalogEntry> load_catalog(const std::optional<std::string>& path)
{
    auto base = builtin_catalog();
    if (!path)
        return base;
    std::ifstream in(*path);
    if (!in)
        throw CatalogError("cannot open catalog file " + *path);
    return read_catalog(in, std::move(base));
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name)
{
    for (const auto& e : catalog)
        if (e.name == name)
            return &e;
    return nullptr;
}

std::vector<std::string> check_entry(const CatalogEntry& entry)
{
    std::vector<std::string> failures;
    const auto& x = entry.expect;
    const auto& code = entry.code;
    auto compare = [&](const char* what, const std::optional<std::string>& want, const std::string& got) {
        if (want && *want != got)
            failures.push_back(std::string(what) + ": expected " + *want + ", got " + got);
    };
    if (auto v = validate_code(code); !v.empty()) {
        failures.push_back("code does not validate");
        return failures;
    }
    if (x.f)
        compare("f", x.f, to_string(f_polynomial(code)));
    if (x.gen_alexander)
        compare("gen_alexander", x.gen_alexander, to_string(gen_alexander(code)));
    if (x.study_det || x.codim1_gcd) {
        auto q = quaternionic_invariant(code);
        compare("study_det", x.study_det, to_string(q.study_det));
        compare("codim1_gcd", x.codim1_gcd, to_string(q.codim1_gcd));
    }
    if (x.classical && realizability_check(code) != *x.classical)
        failures.push_back(std::string("realizability: expected ") + (*x.classical ? "planar" : "non-planar"));
    if (x.parity_01) {
        int p = inter_component_parity(code, 0, 1);
        if (p != *x.parity_01)
            failures.push_back("parity: expected " + std::to_string(*x.parity_01) + ", got " + std::to_string(p));
    }
    if (x.alexander_codim1_generator)
        if (auto why = check_codim1_generator(code, *x.alexander_codim1_generator))
            failures.push_back("alexander codim-1 ideal: " + *why);
    for (const auto& [spec, want] : x.colorings) {
        auto got = count_colorings(code, parse_structure(spec), compute_budget());
        if (got != want)
            failures.push_back("colorings " + spec + ": expected " + std::to_string(want) + ", got " +
                               std::to_string(got));
    }
    return failures;
}

} // namespace vknot
