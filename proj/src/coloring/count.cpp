#include "vknot/coloring.hpp"

#include <array>
#include <optional>

namespace vknot {

namespace {

// A crossing as a map (under_in, over_in) -> (under_out, over_out) on labels.
// Variables can repeat: for arc colorings the over variable is used on both sides.
struct Relation {
    std::array<std::size_t, 4> var; // under_in, over_in, under_out, over_out
    int table = 0;
};

struct PairTable {
    std::vector<std::uint32_t> fwd; // packed a * n + b
    std::optional<std::vector<std::uint32_t>> inv;
};

PairTable make_table(std::size_t n, const std::vector<std::uint32_t>& out_under,
                     const std::vector<std::uint32_t>& out_over)
{
    PairTable t;
    t.fwd.resize(n * n);
    std::vector<std::uint32_t> inv(n * n, UINT32_MAX);
    bool bijective = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto packed = static_cast<std::uint32_t>(out_under[a * n + b] * n + out_over[a * n + b]);
            t.fwd[a * n + b] = packed;
            if (inv[packed] != UINT32_MAX)
                bijective = false;
            inv[packed] = static_cast<std::uint32_t>(a * n + b);
        }
    if (bijective)
        t.inv = std::move(inv);
    return t;
}

class Solver {
public:
    Solver(std::size_t n, std::size_t vars, std::vector<Relation> rels, std::array<PairTable, 2> tables,
           std::uint64_t budget)
        : n_(n), value_(vars, kUnset), rels_(std::move(rels)), tables_(std::move(tables)), budget_(budget),
          touching_(vars)
    {
        for (std::size_t r = 0; r < rels_.size(); ++r)
            for (auto v : rels_[r].var)
                touching_[v].push_back(r);
    }

    std::uint64_t count()
    {
        std::uint64_t total = 0;
        search(0, total);
        return total;
    }

private:
    static constexpr std::uint32_t kUnset = UINT32_MAX;

    bool set(std::size_t var, std::uint32_t v, std::vector<std::size_t>& trail, std::vector<std::size_t>& queue)
    {
        if (value_[var] != kUnset)
            return value_[var] == v;
        value_[var] = v;
        trail.push_back(var);
        for (auto r : touching_[var])
            queue.push_back(r);
        return true;
    }

    bool propagate(std::vector<std::size_t>& queue, std::vector<std::size_t>& trail)
    {
        while (!queue.empty()) {
            const Relation& r = rels_[queue.back()];
            queue.pop_back();
            const PairTable& t = tables_[r.table];
            auto ui = value_[r.var[0]], oi = value_[r.var[1]];
            if (ui != kUnset && oi != kUnset) {
                auto packed = t.fwd[ui * n_ + oi];
                if (!set(r.var[2], static_cast<std::uint32_t>(packed / n_), trail, queue) ||
                    !set(r.var[3], static_cast<std::uint32_t>(packed % n_), trail, queue))
                    return false;
                continue;
            }
            auto uo = value_[r.var[2]], oo = value_[r.var[3]];
            if (t.inv && uo != kUnset && oo != kUnset) {
                auto packed = (*t.inv)[uo * n_ + oo];
                if (packed == UINT32_MAX)
                    return false;
                if (!set(r.var[0], static_cast<std::uint32_t>(packed / n_), trail, queue) ||
                    !set(r.var[1], static_cast<std::uint32_t>(packed % n_), trail, queue))
                    return false;
            }
        }
        return true;
    }

    void search(std::size_t from, std::uint64_t& total)
    {
        while (from < value_.size() && value_[from] != kUnset)
            ++from;
        if (from == value_.size()) {
            ++total;
            return;
        }
        for (std::uint32_t v = 0; v < n_; ++v) {
            if (++nodes_ > budget_)
                throw BudgetExceeded("coloring search exceeded " + std::to_string(budget_) + " nodes");
            std::vector<std::size_t> trail, queue;
            if (set(from, v, trail, queue) && propagate(queue, trail))
                search(from + 1, total);
            for (auto var : trail)
                value_[var] = kUnset;
        }
    }

    std::size_t n_;
    std::vector<std::uint32_t> value_;
    std::vector<Relation> rels_;
    std::array<PairTable, 2> tables_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<std::size_t>> touching_;
};

std::uint64_t checked_pow(std::uint64_t base, std::size_t e)
{
    std::uint64_t r = 1;
    for (std::size_t k = 0; k < e; ++k) {
        if (base != 0 && r > UINT64_MAX / base)
            throw std::overflow_error("coloring count overflows 64 bits");
        r *= base;
    }
    return r;
}

} // namespace

std::uint64_t count_biquandle_colorings(const LinkGaussCode& code, const FiniteBiquandle& bq, std::uint64_t budget)
{
    if (bq.n == 0)
        return 0;
    const auto es = edge_structure(code);
    // The over output is b_a: the down table read with the over input first.
    auto transpose = [&](const std::vector<std::uint32_t>& t) {
        std::vector<std::uint32_t> r(bq.n * bq.n);
        for (std::size_t a = 0; a < bq.n; ++a)
            for (std::size_t b = 0; b < bq.n; ++b)
                r[a * bq.n + b] = t[b * bq.n + a];
        return r;
    };
    std::array<PairTable, 2> tables{make_table(bq.n, bq.up, transpose(bq.down)),
                                    make_table(bq.n, bq.ubar, transpose(bq.dbar))};
    std::vector<Relation> rels;
    for (const auto& c : es.crossings)
        rels.push_back({{c.under_in, c.over_in, c.under_out, c.over_out}, c.sign == Sign::Positive ? 0 : 1});
    Solver solver(bq.n, es.edges.size(), std::move(rels), std::move(tables), budget);
    std::uint64_t count = solver.count();
    std::uint64_t free = checked_pow(bq.n, es.free_components.size());
    if (count != 0 && free > UINT64_MAX / count)
        throw std::overflow_error("coloring count overflows 64 bits");
    return count * free;
}

std::uint64_t count_iq_colorings(const LinkGaussCode& code, const FiniteQuandle& q, std::uint64_t budget)
{
    if (!q.involutory)
        throw std::invalid_argument("IQ colorings need an involutory quandle");
    if (q.n == 0)
        return 0;
    const auto es = edge_structure(code);
    std::vector<std::uint32_t> over(q.n * q.n);
    for (std::size_t a = 0; a < q.n; ++a)
        for (std::size_t b = 0; b < q.n; ++b)
            over[a * q.n + b] = static_cast<std::uint32_t>(b);
    // Crossing sign is irrelevant since a |> b |> b = a.
    PairTable t = make_table(q.n, q.op, over);
    std::array<PairTable, 2> tables{t, t};
    std::vector<Relation> rels;
    for (const auto& c : es.crossings)
        rels.push_back({{c.under_in_arc, c.over_arc, c.under_out_arc, c.over_arc}, 0});
    Solver solver(q.n, es.arcs.size(), std::move(rels), std::move(tables), budget);
    return solver.count();
}

} // namespace vknot
