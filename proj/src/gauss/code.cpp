#include "vknot/gauss.hpp"

#include <algorithm>
#include <tuple>

namespace vknot {

LinkGaussCode::LinkGaussCode() : components_(1) {}

LinkGaussCode::LinkGaussCode(std::vector<Component> components) : components_(std::move(components))
{
    if (components_.empty())
        components_.emplace_back();
}

std::size_t LinkGaussCode::num_entries() const
{
    std::size_t total = 0;
    for (const auto& c : components_)
        total += c.size();
    return total;
}

std::vector<CrossingLabel> LinkGaussCode::labels() const
{
    std::vector<CrossingLabel> out;
    for (const auto& c : components_)
        for (const auto& e : c)
            out.push_back(e.label);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint32_t LinkGaussCode::max_label() const
{
    std::uint32_t m = 0;
    for (const auto& c : components_)
        for (const auto& e : c)
            m = std::max(m, e.label.id);
    return m;
}

CrossingIndex::CrossingIndex(const LinkGaussCode& code)
{
    const auto& comps = code.components();
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        for (std::size_t k = 0; k < comps[ci].size(); ++k) {
            const GaussEntry& e = comps[ci][k];
            CrossingInfo& info = table_[e.label];
            info.sign = e.sign;
            if (e.passage == Passage::Over)
                info.over = {ci, k};
            else
                info.under = {ci, k};
        }
    }
}

const CrossingInfo& CrossingIndex::at(CrossingLabel label) const
{
    auto it = table_.find(label);
    if (it == table_.end())
        throw UnknownLabelError(label);
    return it->second;
}

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position)
{
}

std::string to_string(const Violation& v)
{
    const char* name = "";
    switch (v.kind) {
    case Violation::Kind::MissingPartner: name = "MissingPartner"; break;
    case Violation::Kind::ExtraOccurrence: name = "ExtraOccurrence"; break;
    case Violation::Kind::PassageMismatch: name = "PassageMismatch"; break;
    case Violation::Kind::SignMismatch: name = "SignMismatch"; break;
    case Violation::Kind::ZeroLabel: name = "ZeroLabel"; break;
    }
    return std::string(name) + "(" + std::to_string(v.label.id) + ")";
}

namespace {

std::string describe(const std::vector<Violation>& vs)
{
    std::string msg = "invalid Gauss code:";
    for (const auto& v : vs)
        msg += " " + to_string(v);
    return msg;
}

} // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations))
{
}

UnknownLabelError::UnknownLabelError(CrossingLabel label)
    : std::out_of_range("unknown crossing label " + std::to_string(label.id))
{
}

std::vector<Violation> validate_code(const LinkGaussCode& code)
{
    struct Seen {
        std::vector<const GaussEntry*> entries;
    };
    std::map<CrossingLabel, Seen> seen;
    for (const auto& c : code.components())
        for (const auto& e : c)
            seen[e.label].entries.push_back(&e);

    std::vector<Violation> out;
    for (const auto& [label, s] : seen) {
        if (label.id == 0)
            out.push_back({Violation::Kind::ZeroLabel, label});
        if (s.entries.size() == 1) {
            out.push_back({Violation::Kind::MissingPartner, label});
            continue;
        }
        if (s.entries.size() > 2) {
            out.push_back({Violation::Kind::ExtraOccurrence, label});
            continue;
        }
        if (s.entries[0]->passage == s.entries[1]->passage)
            out.push_back({Violation::Kind::PassageMismatch, label});
        if (s.entries[0]->sign != s.entries[1]->sign)
            out.push_back({Violation::Kind::SignMismatch, label});
    }
    std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.label, a.kind) < std::tie(b.label, b.kind);
    });
    return out;
}

LinkGaussCode make_code(std::vector<Component> components)
{
    LinkGaussCode code(std::move(components));
    auto violations = validate_code(code);
    if (!violations.empty())
        throw ValidationError(std::move(violations));
    return code;
}

FlatCode flat_projection(const LinkGaussCode& code)
{
    FlatCode flat;
    for (const auto& c : code.components()) {
        auto& fc = flat.components.emplace_back();
        for (const auto& e : c)
            fc.push_back(e.label);
    }
    return flat;
}

std::string render_flat(const FlatCode& flat)
{
    std::string out;
    for (std::size_t ci = 0; ci < flat.components.size(); ++ci) {
        if (ci)
            out += " / ";
        const auto& c = flat.components[ci];
        if (c.empty()) {
            out += "()";
            continue;
        }
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k)
                out += ' ';
            out += std::to_string(c[k].id);
        }
    }
    return out;
}

int inter_component_parity(const LinkGaussCode& code, std::size_t i, std::size_t j)
{
    if (i >= code.num_components() || j >= code.num_components())
        throw std::out_of_range("component index out of range");
    if (i == j)
        throw std::invalid_argument("inter_component_parity needs two distinct components");
    CrossingIndex index(code);
    int shared = 0;
    for (const auto& [label, info] : index.table()) {
        std::size_t a = info.over.component, b = info.under.component;
        if ((a == i && b == j) || (a == j && b == i))
            ++shared;
    }
    return shared % 2;
}

} // namespace vknot
