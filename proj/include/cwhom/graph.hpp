#ifndef CWHOM_GRAPH_HPP
#define CWHOM_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cwhom {

using Mask = std::uint64_t;

constexpr int kMaxVertices = 62;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest_bit(Mask m) { return __builtin_ctzll(m); }
inline Mask bit(int v) { return Mask{1} << v; }

/// Simple undirected graph on at most 62 vertices.
/// adj[v] is the neighbour set of v as a bitmask.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    Mask adj(int v) const { return adj_[v]; }
    Mask vertex_mask() const { return n_ == 0 ? 0 : (bit(n_ - 1) << 1) - 1; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    int degree(int v) const { return popcount(adj_[v]); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool connected() const;
    bool is_independent(Mask s) const;
    /// Closed neighbourhood mask of a vertex set.
    Mask closed_neighborhood(Mask s) const;

    /// Induced subgraph on the vertices of `w`, relabelled 0..|w|-1
    /// in increasing vertex order.
    Graph induced(Mask w) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<Mask> adj_;
};

/// Thrown for malformed graph6 input; message names the byte offset.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

/// One "u v" pair per line, 0-based vertex indices.
Graph parse_edge_list(const std::string& text);

int independence_number(const Graph& g);

struct MatchingNumbers {
    int m;   // maximum matching
    int im;  // maximum induced matching
};
MatchingNumbers matching_numbers(const Graph& g);

/// Add a new vertex joined to every vertex not in S.  S must be independent.
Graph s_suspension(const Graph& g, Mask s);

bool is_star(const Graph& g);
bool is_star_triangle(const Graph& g);

}  // namespace cwhom

#endif
