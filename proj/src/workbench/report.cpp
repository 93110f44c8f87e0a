#include "vknot/workbench.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>

namespace vknot {

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        auto k = s.find(sep, start);
        parts.push_back(s.substr(start, k - start));
        if (k == std::string::npos)
            return parts;
        start = k + 1;
    }
}

std::int64_t to_integer(const std::string& s, const std::string& spec)
{
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size())
        throw std::invalid_argument("structure '" + spec + "': '" + s + "' is not an integer");
    return v;
}

} // namespace

ColoringStructure parse_structure(const std::string& spec)
{
    auto parts = split(spec, ':');
    const std::string& kind = parts[0];
    if (kind == "dihedral" && parts.size() == 2) {
        auto n = to_integer(parts[1], spec);
        if (n < 1 || n > 4096)
            throw std::invalid_argument("structure '" + spec + "': size out of range");
        return {spec, make_dihedral_quandle(static_cast<std::size_t>(n))};
    }
    if (kind == "alexander" && parts.size() == 4) {
        auto p = to_integer(parts[1], spec);
        if (p < 2 || p > 4096)
            throw std::invalid_argument("structure '" + spec + "': modulus out of range");
        return {spec, make_alexander_biquandle_modp(static_cast<std::uint32_t>(p), to_integer(parts[2], spec),
                                                    to_integer(parts[3], spec))};
    }
    if ((kind == "quandle" || kind == "biquandle") && parts.size() >= 2) {
        std::string path = spec.substr(kind.size() + 1);
        std::ifstream in(path);
        if (!in)
            throw std::invalid_argument("structure '" + spec + "': cannot open " + path);
        if (kind == "quandle") {
            auto q = read_quandle(in);
            if (auto v = check_quandle_axioms(q); !v.empty())
                throw std::invalid_argument("structure '" + spec + "': " + v.front());
            return {spec, std::move(q)};
        }
        auto bq = read_biquandle(in);
        if (auto v = check_biquandle_axioms(bq); !v.empty())
            throw std::invalid_argument("structure '" + spec + "': axiom " + std::to_string(v.front().axiom) +
                                        ": " + v.front().detail);
        return {spec, std::move(bq)};
    }
    throw std::invalid_argument("unknown coloring structure '" + spec +
                                "' (expected dihedral:N, alexander:P:S:T, quandle:PATH or biquandle:PATH)");
}

std::uint64_t count_colorings(const LinkGaussCode& code, const ColoringStructure& s, std::uint64_t budget)
{
    if (const auto* q = std::get_if<FiniteQuandle>(&s.algebra))
        return count_iq_colorings(code, *q, budget);
    return count_biquandle_colorings(code, std::get<FiniteBiquandle>(s.algebra), budget);
}

std::uint64_t compute_budget(std::uint64_t fallback)
{
    const char* env = std::getenv("VKNOT_BUDGET");
    if (!env || !*env)
        return fallback;
    std::uint64_t v = 0;
    std::string_view text(env);
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size() || v == 0)
        throw std::invalid_argument("VKNOT_BUDGET must be a positive integer");
    return v;
}

ReportOptions ReportOptions::all()
{
    ReportOptions o;
    o.f = o.gen_alexander = o.quaternionic = o.atom = true;
    o.colorings = {"dihedral:3", "dihedral:5", "alexander:5:2:3"};
    return o;
}

InvariantReport make_report(const LinkGaussCode& code, const ReportOptions& options,
                            const std::vector<ColoringStructure>& structures)
{
    InvariantReport r;
    r.code = render_gauss(canonicalize(code));
    r.crossings = code.num_crossings();
    r.components = code.num_components();
    r.writhe = writhe(code);
    r.realizable = realizability_check(code);
    r.parity.assign(r.components, std::vector<int>(r.components, 0));
    for (std::size_t i = 0; i < r.components; ++i)
        for (std::size_t j = i + 1; j < r.components; ++j)
            r.parity[i][j] = r.parity[j][i] = inter_component_parity(code, i, j);
    if (options.f) {
        auto f = f_polynomial(code);
        r.f = to_string(f);
        if (auto v = jones_from_f(f))
            r.jones = to_string(*v);
    }
    if (options.gen_alexander)
        r.gen_alexander = to_string(gen_alexander(code));
    if (options.quaternionic) {
        auto q = quaternionic_invariant(code);
        r.quaternionic = {to_string(q.study_det), to_string(q.codim1_gcd)};
    }
    if (options.atom)
        r.atom = atom_profile(code);
    for (const auto& s : structures)
        r.colorings.push_back({s.name, count_colorings(code, s, options.budget)});
    return r;
}

std::string serialize(const InvariantReport& r, int indent)
{
    nlohmann::ordered_json j;
    j["code"] = r.code;
    j["crossings"] = r.crossings;
    j["components"] = r.components;
    j["writhe"] = r.writhe;
    j["realizable"] = r.realizable;
    if (r.components > 1)
        j["parity"] = r.parity;
    if (r.f) {
        j["f"] = *r.f;
        j["jones"] = r.jones ? nlohmann::ordered_json(*r.jones) : nlohmann::ordered_json(nullptr);
    }
    if (r.gen_alexander)
        j["gen_alexander"] = *r.gen_alexander;
    if (r.quaternionic)
        j["quaternionic"] = {{"study_det", r.quaternionic->first}, {"codim1_gcd", r.quaternionic->second}};
    if (r.atom) {
        const auto& a = *r.atom;
        j["atom"] = {{"genus", a.genus},
                     {"orientable", a.orientable},
                     {"a_loops", a.a_loops},
                     {"b_loops", a.b_loops},
                     {"euler_characteristic", a.euler_characteristic}};
    }
    if (!r.colorings.empty()) {
        nlohmann::ordered_json c = nlohmann::ordered_json::object();
        for (const auto& [name, n] : r.colorings)
            c[name] = n;
        j["colorings"] = c;
    }
    return j.dump(indent);
}

} // namespace vknot
