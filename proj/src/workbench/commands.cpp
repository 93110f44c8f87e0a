#include "vknot/workbench.hpp"

#include "vknot/moves.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace vknot {

namespace {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Selection {
    bool f = false, gen_alexander = false, quaternionic = false, atom = false, all = false;
    std::vector<std::string> colorings;

    void add_flags(CLI::App* app)
    {
        app->add_flag("--f", f, "writhe-normalized bracket f(A)");
        app->add_flag("--gen-alexander", gen_alexander, "generalized Alexander polynomial G(s,t)");
        app->add_flag("--quaternionic", quaternionic, "Study determinant and codimension-1 gcd");
        app->add_flag("--atom", atom, "atom genus, orientability and loop counts");
        app->add_option("--colorings", colorings,
                        "coloring structure: dihedral:N, alexander:P:S:T, quandle:PATH, biquandle:PATH")
            ->take_all();
        app->add_flag("--all", all, "every invariant with the default coloring structures");
    }

    bool empty() const { return !f && !gen_alexander && !quaternionic && !atom && !all && colorings.empty(); }

    ReportOptions options(const ReportOptions& when_empty) const
    {
        if (empty())
            return when_empty;
        ReportOptions o = all ? ReportOptions::all() : ReportOptions{};
        o.f |= f;
        o.gen_alexander |= gen_alexander;
        o.quaternionic |= quaternionic;
        o.atom |= atom;
        for (const auto& c : colorings)
            if (std::find(o.colorings.begin(), o.colorings.end(), c) == o.colorings.end())
                o.colorings.push_back(c);
        return o;
    }
};

struct Input {
    std::string code, name;

    void add_flags(CLI::App* app)
    {
        auto* c = app->add_option("--code", code, "Gauss code, e.g. \"O1+U2+O3+U1+O2+U3+\"");
        auto* n = app->add_option("--name", name, "catalog entry");
        c->excludes(n);
        n->excludes(c);
    }

    LinkGaussCode resolve(const std::vector<CatalogEntry>& catalog) const
    {
        if (!name.empty()) {
            const auto* e = find_entry(catalog, name);
            if (!e)
                throw InputError("no catalog entry named '" + name + "'");
            return e->code;
        }
        if (code.empty())
            throw InputError("one of --code or --name is required");
        LinkGaussCode parsed = parse_gauss(code);
        if (auto v = validate_code(parsed); !v.empty())
            throw ValidationError(v);
        return parsed;
    }
};

std::vector<ColoringStructure> structures_for(const ReportOptions& o)
{
    std::vector<ColoringStructure> out;
    for (const auto& s : o.colorings)
        out.push_back(parse_structure(s));
    return out;
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw InputError("cannot write " + path);
            stream_ = &file_;
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

// ---------------------------------------------------------------------------
// fuzz

struct Suite {
    struct Check {
        std::string name;
        std::function<std::string(const LinkGaussCode&)> value;
    };
    std::vector<Check> checks;
};

// Under ForbiddenOver only quandle (arc) colorings are expected to survive.
Suite make_suite(const ReportOptions& o, const std::vector<ColoringStructure>& structures, bool forbidden)
{
    Suite s;
    if (!forbidden) {
        if (o.f)
            s.checks.push_back({"f", [](const LinkGaussCode& c) { return to_string(f_polynomial(c)); }});
        if (o.gen_alexander)
            s.checks.push_back({"gen_alexander", [](const LinkGaussCode& c) { return to_string(gen_alexander(c)); }});
        if (o.quaternionic)
            s.checks.push_back({"quaternionic", [](const LinkGaussCode& c) {
                                    auto q = quaternionic_invariant(c);
                                    return to_string(q.study_det) + " ; " + to_string(q.codim1_gcd);
                                }});
        if (o.atom)
            // Only the "violated" marker counts as a divergence: the atom changes along a
            // walk, and mod-4 residues of f may split when it is non-orientable.
            s.checks.push_back({"atom_congruence", [](const LinkGaussCode& c) {
                                    auto f = f_polynomial(c);
                                    std::set<int> mod4, mod2;
                                    for (const auto& [e, coef] : f.terms()) {
                                        mod4.insert(((e % 4) + 4) % 4);
                                        mod2.insert(((e % 2) + 2) % 2);
                                    }
                                    if (mod2.size() > 1)
                                        return std::string("violated: exponents not congruent mod 2");
                                    if (atom_profile(c).orientable && mod4.size() > 1)
                                        return std::string("violated: orientable atom, exponents not congruent mod 4");
                                    return std::string(mod4.size() == 1 ? "single class mod 4" : "mod 2 only");
                                }});
    }
    for (const auto& st : structures) {
        bool quandle = std::holds_alternative<FiniteQuandle>(st.algebra);
        if (forbidden && !quandle)
            continue;
        s.checks.push_back({"colorings " + st.name, [st, budget = o.budget](const LinkGaussCode& c) {
                                return std::to_string(count_colorings(c, st, budget));
                            }});
    }
    return s;
}

int cmd_fuzz(const LinkGaussCode& seed_code, std::size_t walks, std::size_t steps, std::uint64_t seed,
             bool forbidden, const ReportOptions& o, std::ostream& out)
{
    auto structures = structures_for(o);
    Suite suite = make_suite(o, structures, forbidden);
    std::vector<std::string> reference;
    for (const auto& c : suite.checks)
        reference.push_back(c.value(seed_code));

    Json summary;
    summary["seed_code"] = render_gauss(seed_code);
    summary["walks"] = walks;
    summary["steps"] = steps;
    summary["seed"] = seed;
    summary["allow_forbidden"] = forbidden;
    Json checked = Json::array();
    for (const auto& c : suite.checks)
        checked.push_back(c.name);
    summary["invariants"] = checked;

    std::size_t codes = 0;
    for (std::size_t w = 0; w < walks; ++w) {
        WalkOptions wo;
        wo.allow_forbidden = forbidden;
        auto walk = random_walk(seed_code, steps, seed + w, wo);
        for (std::size_t k = 1; k < walk.size(); ++k) {
            ++codes;
            for (std::size_t i = 0; i < suite.checks.size(); ++i) {
                std::string v = suite.checks[i].value(walk[k]);
                bool same = suite.checks[i].name == "atom_congruence" ? v.rfind("violated", 0) != 0
                                                                        : v == reference[i];
                if (!same) {
                    summary["status"] = "diverged";
                    summary["divergence"] = {{"walk", w},        {"step", k},
                                             {"invariant", suite.checks[i].name},
                                             {"expected", reference[i]}, {"got", v},
                                             {"before", render_gauss(walk[k - 1])},
                                             {"after", render_gauss(walk[k])}};
                    out << summary.dump(2) << '\n';
                    return 1;
                }
            }
        }
    }
    summary["codes_checked"] = codes;
    summary["status"] = "ok";
    out << summary.dump(2) << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// tabulate

// Single-component codes with n crossings, labels in first-occurrence order.
void for_each_code(std::size_t n, const std::function<void(const LinkGaussCode&)>& visit)
{
    if (n == 0) {
        visit(LinkGaussCode());
        return;
    }
    std::vector<std::uint32_t> word(2 * n, 0);
    std::function<void(std::size_t, std::uint32_t)> pair_up = [&](std::size_t pos, std::uint32_t next) {
        while (pos < word.size() && word[pos])
            ++pos;
        if (pos == word.size()) {
            for (std::uint64_t pm = 0; pm < (1u << n); ++pm)
                for (std::uint64_t sm = 0; sm < (1u << n); ++sm) {
                    Component c;
                    std::vector<char> seen(n + 1, 0);
                    for (auto l : word) {
                        bool first = !seen[l];
                        seen[l] = 1;
                        bool over_first = (pm >> (l - 1)) & 1;
                        c.push_back({CrossingLabel(l), first == over_first ? Passage::Over : Passage::Under,
                                     (sm >> (l - 1)) & 1 ? Sign::Negative : Sign::Positive});
                    }
                    visit(LinkGaussCode({c}));
                }
            return;
        }
        for (std::size_t q = pos + 1; q < word.size(); ++q)
            if (!word[q]) {
                word[pos] = word[q] = next;
                pair_up(pos + 1, next + 1);
                word[pos] = word[q] = 0;
            }
    };
    pair_up(0, 1);
}

std::uint64_t raw_code_count(std::size_t n)
{
    std::uint64_t chords = 1; // (2n-1)!!
    for (std::uint64_t k = 1; k < 2 * n; k += 2)
        chords *= k;
    return chords << (2 * n);
}

int cmd_tabulate(std::size_t max_crossings, const ReportOptions& o, std::ostream& out, std::ostream& err)
{
    if (max_crossings > 6)
        throw InputError("tabulate supports at most 6 crossings");
    const std::uint64_t budget = compute_budget(2'000'000);
    std::uint64_t raw = 0;
    for (std::size_t n = 0; n <= max_crossings; ++n)
        raw += raw_code_count(n);
    if (raw > budget) {
        err << "error: budget exceeded: " << raw << " raw codes to canonicalize, budget " << budget
            << " (set VKNOT_BUDGET to raise it)\n";
        return 2;
    }
    auto structures = structures_for(o);
    Json header;
    header["max_crossings"] = max_crossings;
    header["note"] = "codes deduplicated by canonical form only; distinct lines may be the same knot";
    out << header.dump() << '\n';
    for (std::size_t n = 0; n <= max_crossings; ++n) {
        std::set<std::string> seen;
        for_each_code(n, [&](const LinkGaussCode& c) { seen.insert(render_gauss(canonicalize(c))); });
        for (const auto& s : seen)
            out << serialize(make_report(parse_gauss(s), o, structures), -1) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_virt(const LinkGaussCode& code, const ReportOptions& o, std::ostream& out, std::ostream& err)
{
    if (code.num_components() != 1)
        throw InputError("virt needs a single-component code");
    if (!realizability_check(code))
        err << "warning: input is not a classical diagram; f(Virt(K)) need not be 1\n";
    auto structures = structures_for(o);
    LinkGaussCode v = virt_construction(code);
    Json j;
    j["input"] = render_gauss(code);
    Json input_counts = Json::object();
    for (const auto& s : structures)
        input_counts[s.name] = count_colorings(code, s, o.budget);
    j["input_colorings"] = input_counts;
    auto switched = descending_switch_set(code, 0);
    Json labels = Json::array();
    for (auto l : switched)
        labels.push_back(l.id);
    j["virtualized"] = labels;
    j["virt"] = Json::parse(serialize(make_report(v, o, structures)));
    j["virt"]["gauss"] = render_gauss(v);
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_catalog(const std::vector<CatalogEntry>& catalog, bool check, std::ostream& out)
{
    int status = 0;
    Json list = Json::array();
    for (const auto& e : catalog) {
        Json j;
        j["name"] = e.name;
        j["code"] = render_gauss(e.code);
        j["note"] = e.note;
        if (e.provisional)
            j["provisional"] = true;
        if (check) {
            auto failures = check_entry(e);
            j["assertions"] = failures.empty() ? "pass" : "fail";
            if (!failures.empty()) {
                j["failures"] = failures;
                status = 1;
            }
        }
        list.push_back(j);
    }
    out << list.dump(2) << '\n';
    return status;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Virtual knot workbench: Gauss codes, moves and invariants"};
    app.require_subcommand(1);
    std::string catalog_path, out_path;
    app.add_option("--catalog", catalog_path, "extra catalog file, one name<TAB>code per line");

    Input input;
    Selection selection;

    auto* inv = app.add_subcommand("invariants", "report invariants of one code");
    input.add_flags(inv);
    selection.add_flags(inv);
    inv->add_option("--out", out_path, "write the report here");

    std::size_t walks = 200, steps = 15;
    std::uint64_t seed = 1;
    bool forbidden = false;
    auto* fuzz = app.add_subcommand("fuzz", "check invariants along random move walks");
    input.add_flags(fuzz);
    selection.add_flags(fuzz);
    fuzz->add_option("--walks", walks, "number of walks")->capture_default_str();
    fuzz->add_option("--steps", steps, "moves per walk")->capture_default_str();
    fuzz->add_option("--seed", seed, "seed of the first walk; walk k uses seed + k")->capture_default_str();
    fuzz->add_flag("--allow-forbidden", forbidden, "include the upper forbidden move (welded equivalence)");
    fuzz->add_option("--out", out_path, "write the summary here");

    std::size_t max_crossings = 2;
    auto* tab = app.add_subcommand("tabulate", "list canonical single-component codes up to a crossing bound");
    tab->add_option("--max", max_crossings, "largest crossing number (at most 6)")->capture_default_str();
    selection.add_flags(tab);
    tab->add_option("--out", out_path, "write the table here");

    auto* virt = app.add_subcommand("virt", "build Virt(K) from a classical diagram");
    input.add_flags(virt);
    selection.add_flags(virt);
    virt->add_option("--out", out_path, "write the report here");

    bool check = true;
    auto* cat = app.add_subcommand("catalog", "list catalog entries and check their assertions");
    cat->add_flag("!--no-check", check, "skip the attached assertions");
    cat->add_option("--out", out_path, "write the listing here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        auto catalog = load_catalog(catalog_path.empty() ? std::nullopt : std::optional<std::string>(catalog_path));
        Output sink(out_path, out);
        ReportOptions defaults = ReportOptions::all();
        const std::uint64_t budget = compute_budget();
        if (*inv) {
            auto o = selection.options(defaults);
            o.budget = budget;
            *sink << serialize(make_report(input.resolve(catalog), o, structures_for(o))) << '\n';
            return 0;
        }
        if (*fuzz) {
            auto o = selection.options(defaults);
            o.budget = budget;
            return cmd_fuzz(input.resolve(catalog), walks, steps, seed, forbidden, o, *sink);
        }
        if (*tab) {
            ReportOptions f_only;
            f_only.f = true;
            auto o = selection.options(f_only);
            o.budget = budget;
            return cmd_tabulate(max_crossings, o, *sink, err);
        }
        if (*virt) {
            ReportOptions d;
            d.f = true;
            d.colorings = {"dihedral:3", "dihedral:5"};
            auto o = selection.options(d);
            o.budget = budget;
            return cmd_virt(input.resolve(catalog), o, *sink, err);
        }
        return cmd_catalog(catalog, check, *sink);
    } catch (const ParseError& e) {
        err << "error: parse error at position " << e.position() << ": " << e.what() << '\n';
    } catch (const ValidationError& e) {
        err << "error: invalid code:";
        for (const auto& v : e.violations())
            err << ' ' << to_string(v);
        err << '\n';
    } catch (const BudgetExceeded& e) {
        err << "error: budget exceeded: " << e.what() << " (set VKNOT_BUDGET to raise it)\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

} // namespace vknot
