#include "cwhom/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace cwhom {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range [0, 62]: " + std::to_string(n));
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge rejected");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        Mask m = adj_[u] & ~((bit(u) << 1) - 1);  // neighbours > u
        while (m) {
            int v = lowest_bit(m);
            m &= m - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::connected() const {
    if (n_ == 0) return false;
    Mask seen = bit(0), frontier = bit(0);
    while (frontier) {
        Mask next = 0;
        while (frontier) {
            int v = lowest_bit(frontier);
            frontier &= frontier - 1;
            next |= adj_[v];
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == vertex_mask();
}

bool Graph::is_independent(Mask s) const {
    Mask m = s;
    while (m) {
        int v = lowest_bit(m);
        m &= m - 1;
        if (adj_[v] & s) return false;
    }
    return true;
}

Mask Graph::closed_neighborhood(Mask s) const {
    Mask out = s;
    Mask m = s;
    while (m) {
        int v = lowest_bit(m);
        m &= m - 1;
        out |= adj_[v];
    }
    return out;
}

Graph Graph::induced(Mask w) const {
    std::vector<int> verts;
    Mask m = w;
    while (m) {
        verts.push_back(lowest_bit(m));
        m &= m - 1;
    }
    Graph g(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

namespace {

[[noreturn]] void g6_fail(const std::string& why, std::size_t offset) {
    throw std::invalid_argument("graph6: " + why + " at byte offset " + std::to_string(offset));
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    if (text.empty()) g6_fail("empty input", 0);
    std::size_t pos = 0;
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 < 63 || c0 > 126) g6_fail("length byte out of printable range 63..126", 0);
    long long n;
    if (c0 < 126) {
        n = c0 - 63;
        pos = 1;
    } else {
        // 126-prefixed multi-byte header; any such n exceeds our 62-vertex limit,
        // decode it just so the diagnostic can name it.
        if (text.size() < 4) g6_fail("truncated multi-byte length header", text.size());
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) {
            unsigned char c = static_cast<unsigned char>(text[i]);
            if (c < 63 || c > 126) g6_fail("length byte out of printable range 63..126", i);
            n = (n << 6) | (c - 63);
        }
        pos = 4;
    }
    if (n > kMaxVertices)
        g6_fail("vertex count " + std::to_string(n) + " exceeds the 62-vertex limit", 0);

    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() < pos + nbytes) g6_fail("truncated edge bits", text.size());
    if (text.size() > pos + nbytes) g6_fail("trailing garbage", pos + nbytes);

    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            std::size_t byte = pos + static_cast<std::size_t>(k / 6);
            unsigned char c = static_cast<unsigned char>(text[byte]);
            if (c < 63 || c > 126) g6_fail("edge byte out of printable range 63..126", byte);
            int shift = 5 - static_cast<int>(k % 6);
            if ((c - 63) >> shift & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::pair<int, int>> edges;
    int maxv = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw std::invalid_argument("edge list: bad line: " + line);
        edges.emplace_back(u, v);
        maxv = std::max({maxv, u, v});
    }
    Graph g(maxv + 1);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

namespace {

// Branch and bound maximum independent set.
int mis_rec(const Graph& g, Mask avail, int have, int& best) {
    if (have + popcount(avail) <= best) return best;
    if (!avail) {
        best = std::max(best, have);
        return best;
    }
    // Branch on a vertex of maximum degree within avail.
    int pick = -1, pickdeg = -1;
    Mask m = avail;
    while (m) {
        int v = lowest_bit(m);
        m &= m - 1;
        int d = popcount(g.adj(v) & avail);
        if (d > pickdeg) {
            pickdeg = d;
            pick = v;
        }
    }
    if (pickdeg <= 1) {
        // Remaining graph is a disjoint union of edges and isolated vertices:
        // take one endpoint of each edge and every isolated vertex.
        int extra = 0;
        Mask rest = avail;
        while (rest) {
            int v = lowest_bit(rest);
            rest &= ~(bit(v) | (g.adj(v) & rest));
            ++extra;
        }
        best = std::max(best, have + extra);
        return best;
    }
    mis_rec(g, avail & ~(bit(pick) | g.adj(pick)), have + 1, best);
    mis_rec(g, avail & ~bit(pick), have, best);
    return best;
}

}  // namespace

int independence_number(const Graph& g) {
    int best = 0;
    return mis_rec(g, g.vertex_mask(), 0, best);
}

namespace {

struct EdgeRec {
    Mask ends;      // the two endpoints
    Mask conflict;  // closed neighbourhood of both endpoints (induced-matching exclusion)
};

void matching_rec(const std::vector<EdgeRec>& es, std::size_t i, Mask used, int have, int& best,
                  bool induced) {
    best = std::max(best, have);
    if (i >= es.size()) return;
    if (have + static_cast<int>(es.size() - i) <= best) return;
    // `used` holds the ends of chosen edges (plain matching) or their closed
    // neighbourhoods (induced matching); either way a new edge is compatible
    // iff its two endpoints avoid it.
    if (!(used & es[i].ends)) {
        matching_rec(es, i + 1, used | (induced ? es[i].conflict : es[i].ends), have + 1, best,
                     induced);
    }
    matching_rec(es, i + 1, used, have, best, induced);
}

}  // namespace

MatchingNumbers matching_numbers(const Graph& g) {
    std::vector<EdgeRec> es;
    for (auto [u, v] : g.edges()) {
        Mask ends = bit(u) | bit(v);
        es.push_back({ends, ends | g.adj(u) | g.adj(v)});
    }
    int m = 0, im = 0;
    matching_rec(es, 0, 0, 0, m, false);
    matching_rec(es, 0, 0, 0, im, true);
    return {m, im};
}

Graph s_suspension(const Graph& g, Mask s) {
    if ((s & ~g.vertex_mask()) != 0) throw std::invalid_argument("S mentions vertices outside the graph");
    if (!g.is_independent(s)) throw std::invalid_argument("S is not an independent set");
    Graph out(g.n() + 1);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int v = 0; v < g.n(); ++v)
        if (!((s >> v) & 1)) out.add_edge(v, g.n());
    return out;
}

bool is_star(const Graph& g) {
    // K_{1,n-1} with n >= 2: one center adjacent to all other vertices, no other edges.
    int n = g.n();
    if (n < 2) return false;
    for (int c = 0; c < n; ++c) {
        if (g.degree(c) != n - 1) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (v != c && g.degree(v) != 1) ok = false;
        if (ok) return true;
    }
    return false;
}

bool is_star_triangle(const Graph& g) {
    // k >= 1 triangles joined at one common vertex: n = 2k+1, center degree 2k,
    // all other vertices degree 2 and paired into edges inside the center's link.
    int n = g.n();
    if (n < 3 || n % 2 == 0) return false;
    int k = (n - 1) / 2;
    for (int c = 0; c < n; ++c) {
        if (g.degree(c) != 2 * k) continue;
        bool ok = g.edge_count() == 3 * k;
        for (int v = 0; v < n && ok; ++v) {
            if (v == c) continue;
            if (g.degree(v) != 2 || !g.has_edge(v, c)) ok = false;
            // the other neighbour must itself close a triangle through c
            else if (popcount(g.adj(v) & ~bit(c)) != 1) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace cwhom
