#include "vknot/gauss.hpp"

#include <array>
#include <numeric>
#include <queue>

namespace vknot {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

} // namespace

bool realizable_by_interlacement(const LinkGaussCode& code)
{
    if (code.num_components() != 1)
        throw std::invalid_argument("interlacement criterion needs a single component");
    const auto& word = code.components()[0];
    auto labels = code.labels();
    const std::size_t n = labels.size();
    if (n == 0)
        return true;

    std::map<CrossingLabel, std::size_t> id;
    for (std::size_t i = 0; i < n; ++i)
        id[labels[i]] = i;
    std::vector<std::array<std::size_t, 2>> pos(n, {word.size(), word.size()});
    for (std::size_t k = 0; k < word.size(); ++k) {
        auto& p = pos[id[word[k].label]];
        (p[0] == word.size() ? p[0] : p[1]) = k;
    }

    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            auto inside = [&](std::size_t k) { return pos[a][0] < k && k < pos[a][1]; };
            bool interlaced = inside(pos[b][0]) != inside(pos[b][1]);
            adj[a][b] = adj[b][a] = interlaced;
        }

    for (std::size_t a = 0; a < n; ++a) {
        int deg = 0;
        for (std::size_t b = 0; b < n; ++b)
            deg += adj[a][b];
        if (deg % 2)
            return false;
    }

    auto common = [&](std::size_t a, std::size_t b) {
        int c = 0;
        for (std::size_t k = 0; k < n; ++k)
            c += adj[a][k] && adj[b][k];
        return c;
    };

    // Interlaced pairs with an even number of common neighbours must form a cut.
    std::vector<std::vector<char>> marked(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            int c = common(a, b);
            if (!adj[a][b] && c % 2)
                return false;
            if (adj[a][b] && c % 2 == 0)
                marked[a][b] = marked[b][a] = 1;
        }

    std::vector<int> side(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t v = 0; v < n; ++v) {
                if (!adj[u][v])
                    continue;
                int want = side[u] ^ marked[u][v];
                if (side[v] == -1) {
                    side[v] = want;
                    q.push(v);
                } else if (side[v] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool realizable_by_embedding_search(const LinkGaussCode& code)
{
    EdgeStructure es = edge_structure(code);
    const std::size_t n = es.crossings.size();
    if (n == 0)
        return true;
    if (n > 24)
        throw std::invalid_argument("embedding search limited to 24 crossings");

    // Half-edge 4*c + slot, slots: 0 over_in, 1 over_out, 2 under_in, 3 under_out.
    std::vector<std::size_t> partner(4 * n);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    {
        std::vector<std::array<std::size_t, 2>> ends(es.edges.size()); // tail, head
        for (std::size_t c = 0; c < n; ++c) {
            const auto& x = es.crossings[c];
            ends[x.over_in][1] = 4 * c + 0;
            ends[x.over_out][0] = 4 * c + 1;
            ends[x.under_in][1] = 4 * c + 2;
            ends[x.under_out][0] = 4 * c + 3;
        }
        for (const auto& e : ends) {
            partner[e[0]] = e[1];
            partner[e[1]] = e[0];
            std::size_t a = find_root(parent, e[0] / 4), b = find_root(parent, e[1] / 4);
            parent[a] = b;
        }
    }
    std::size_t pieces = 0;
    for (std::size_t c = 0; c < n; ++c)
        pieces += find_root(parent, c) == c;

    // Cyclic rotations in which the strands cross transversally.
    static constexpr std::array<std::array<std::size_t, 4>, 2> next_slot = {{
        {2, 3, 1, 0}, // 0 -> 2 -> 1 -> 3 -> 0
        {3, 2, 0, 1}, // 0 -> 3 -> 1 -> 2 -> 0
    }};

    const long target = 2 * static_cast<long>(pieces) - static_cast<long>(n) + 2 * static_cast<long>(n);
    std::vector<char> seen(4 * n);
    // Reversing every rotation preserves the face count, so crossing 0 is fixed.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        auto rot = [&](std::size_t h) {
            std::size_t c = h / 4;
            std::size_t choice = c == 0 ? 0 : (mask >> (c - 1)) & 1;
            return 4 * c + next_slot[choice][h % 4];
        };
        std::fill(seen.begin(), seen.end(), 0);
        long faces = 0;
        for (std::size_t h = 0; h < 4 * n; ++h) {
            if (seen[h])
                continue;
            ++faces;
            std::size_t cur = h;
            while (!seen[cur]) {
                seen[cur] = 1;
                cur = rot(partner[cur]);
            }
        }
        // Sum of V - E + F over pieces must be 2 per piece; V = n, E = 2n.
        if (faces == target)
            return true;
    }
    return false;
}

bool realizability_check(const LinkGaussCode& code)
{
    if (code.num_components() == 1)
        return realizable_by_interlacement(code);
    return realizable_by_embedding_search(code);
}

} // namespace vknot
