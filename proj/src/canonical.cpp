#include "cwhom/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace cwhom {

namespace {

// A labelling key: for each canonical position j, the vertex colour followed
// by its adjacency bits towards positions 0..j-1.  Lexicographically smallest
// key over all colour-respecting labellings is the canonical one.
using Key = std::vector<std::uint64_t>;

Key key_of_order(const Graph& g, const std::vector<int>& colors, const std::vector<int>& order) {
    Key key;
    key.reserve(2 * order.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
        key.push_back(colors.empty() ? 0 : static_cast<std::uint64_t>(colors[order[j]]));
        std::uint64_t row = 0;
        for (std::size_t i = 0; i < j; ++i)
            if (g.has_edge(order[i], order[j])) row |= std::uint64_t{1} << i;
        key.push_back(row);
    }
    return key;
}

// Equitable refinement of an ordered partition; cell order is determined by
// parent position and neighbour-count signature, so it is iso-invariant.
void refine(const Graph& g, std::vector<Mask>& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t < cells.size(); ++t) {
            Mask target = cells[t];
            std::vector<Mask> next;
            next.reserve(cells.size());
            for (Mask cell : cells) {
                if (popcount(cell) <= 1) {
                    next.push_back(cell);
                    continue;
                }
                std::map<int, Mask> groups;
                Mask m = cell;
                while (m) {
                    int v = lowest_bit(m);
                    m &= m - 1;
                    groups[popcount(g.adj(v) & target)] |= bit(v);
                }
                if (groups.size() > 1) changed = true;
                for (auto& [cnt, grp] : groups) next.push_back(grp);
            }
            cells = std::move(next);
            if (changed) break;  // restart with the refined partition
        }
    }
}

struct Search {
    const Graph& g;
    const std::vector<int>& colors;
    Key best;
    std::vector<int> best_order;
    bool have_best = false;

    void leaf(const std::vector<Mask>& cells) {
        std::vector<int> order;
        order.reserve(cells.size());
        for (Mask c : cells) order.push_back(lowest_bit(c));
        Key key = key_of_order(g, colors, order);
        if (!have_best || key < best) {
            best = std::move(key);
            best_order = std::move(order);
            have_best = true;
        }
    }

    void run(std::vector<Mask> cells) {
        refine(g, cells);
        std::size_t split = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (popcount(cells[i]) > 1) {
                split = i;
                break;
            }
        if (split == cells.size()) {
            leaf(cells);
            return;
        }
        Mask cell = cells[split];
        std::vector<int> tried;
        Mask m = cell;
        while (m) {
            int v = lowest_bit(m);
            m &= m - 1;
            // Twin pruning: branching on a twin of an already-tried vertex
            // explores the same labellings.
            bool twin = false;
            for (int u : tried)
                if ((g.adj(u) & ~bit(v)) == (g.adj(v) & ~bit(u))) {
                    twin = true;
                    break;
                }
            if (twin) continue;
            tried.push_back(v);
            std::vector<Mask> next;
            next.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i == split) {
                    next.push_back(bit(v));
                    if (cell & ~bit(v)) next.push_back(cell & ~bit(v));
                } else {
                    next.push_back(cells[i]);
                }
            }
            run(std::move(next));
        }
    }
};

std::vector<Mask> initial_partition(const Graph& g, const std::vector<int>& colors) {
    if (colors.empty()) {
        return g.n() ? std::vector<Mask>{g.vertex_mask()} : std::vector<Mask>{};
    }
    if (static_cast<int>(colors.size()) != g.n())
        throw std::invalid_argument("color vector size mismatch");
    std::map<int, Mask> by_color;
    for (int v = 0; v < g.n(); ++v) by_color[colors[v]] |= bit(v);
    std::vector<Mask> cells;
    for (auto& [c, m] : by_color) cells.push_back(m);
    return cells;
}

std::string serialize_key(int n, const Key& key) {
    std::string out;
    out.push_back(static_cast<char>(n));
    for (std::uint64_t word : key)
        for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((word >> (8 * b)) & 0xff));
    return out;
}

Search canonical_search(const Graph& g, const std::vector<int>& colors) {
    Search s{g, colors};
    s.run(initial_partition(g, colors));
    if (g.n() > 0 && !s.have_best) throw std::logic_error("canonical search found no labelling");
    return s;
}

}  // namespace

std::string canonical_form(const Graph& g, const std::vector<int>& colors) {
    if (g.n() == 0) return std::string(1, '\0');
    Search s = canonical_search(g, colors);
    return serialize_key(g.n(), s.best);
}

std::vector<int> canonical_labeling(const Graph& g, const std::vector<int>& colors) {
    if (g.n() == 0) return {};
    return canonical_search(g, colors).best_order;
}

std::string canonical_form_bruteforce(const Graph& g, const std::vector<int>& colors) {
    int n = g.n();
    if (n > 16) throw std::invalid_argument("bruteforce canonical form limited to n <= 16");
    if (n == 0) return std::string(1, '\0');
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Key best;
    bool have = false;
    do {
        Key key = key_of_order(g, colors, perm);
        if (!have || key < best) {
            best = key;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return serialize_key(n, best);
}

namespace {

// Packed upper-triangle code of a canonically labelled graph, n <= 10.
std::uint64_t pack(const Graph& g) {
    std::uint64_t code = 0;
    int k = 0;
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.has_edge(i, j)) code |= std::uint64_t{1} << k;
    return code;
}

Graph unpack(std::uint64_t code, int n) {
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((code >> k) & 1) g.add_edge(i, j);
    return g;
}

Graph canonical_relabel(const Graph& g) {
    std::vector<int> order = canonical_labeling(g);
    Graph out(g.n());
    for (int j = 0; j < g.n(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(order[i], order[j])) out.add_edge(i, j);
    return out;
}

}  // namespace

void enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 10)
        throw std::invalid_argument(
            "builtin generator supports 1 <= n <= 10; supply a graph6 file for larger n");
    // Level-by-level isomorph-free growth: every graph on k+1 vertices arises
    // from some graph on k vertices by attaching a new vertex; dedup by
    // canonical code at each level.
    std::vector<std::uint64_t> level = {0};  // K_1
    for (int k = 1; k < n; ++k) {
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t code : level) {
            Graph parent = unpack(code, k);
            for (Mask mask = 0; mask < (Mask{1} << k); ++mask) {
                Graph child(k + 1);
                for (auto [u, v] : parent.edges()) child.add_edge(u, v);
                Mask m = mask;
                while (m) {
                    int v = lowest_bit(m);
                    m &= m - 1;
                    child.add_edge(v, k);
                }
                seen.insert(pack(canonical_relabel(child)));
            }
        }
        level.assign(seen.begin(), seen.end());
        std::sort(level.begin(), level.end());
    }
    for (std::uint64_t code : level) {
        Graph g = unpack(code, n);
        if (g.connected()) fn(g);
    }
}

std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    enumerate_connected_graphs(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace cwhom
