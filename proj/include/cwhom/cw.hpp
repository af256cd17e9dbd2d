#ifndef CWHOM_CW_HPP
#define CWHOM_CW_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cwhom/graph.hpp"
#include "cwhom/oracle.hpp"

namespace cwhom {

/// Structure data of a Cameron-Walker graph: a connected bipartite middle on
/// v_1..v_m and w_1..w_p, s_i >= 1 leaves on each v_i, t_j >= 0 pendant
/// triangles on each w_j.
struct CwShape {
    int m = 0;
    int p = 0;
    std::vector<int> s;    // size m, each >= 1
    std::vector<int> t;    // size p, each >= 0
    std::vector<Mask> bip;  // bip[i] = w-indices adjacent to v_i

    int vertex_count() const;
    int sum_s() const;
    int sum_t() const;
    int zero_t_count() const;
    Mask w_neighbors(int j) const;  // v-indices adjacent to w_j
    bool bip_complete() const;

    /// Throws std::invalid_argument naming the violated clause.
    void validate() const;

    /// Canonical key: equal iff the shapes agree up to the bipartite-part
    /// symmetry respecting the (s, t) decorations.
    std::string key() const;
};

/// Canonical vertex layout: v's, then w's, then leaves grouped by i,
/// then triangle pairs grouped by j.
Graph build_cw(const CwShape& shape);

/// Structural + semantic recognition, cross-checked; nullopt when the graph
/// is not Cameron-Walker.  A disagreement between the two routes throws.
std::optional<CwShape> recognize_cw(const Graph& g);

struct DepthWitness {
    int depth = 0;
    Mask argmin_v = 0;  // subset of {v_1..v_m}, lexicographically least minimizer
    Mask witness_a = 0; // the independent dominating set A(V) in build_cw layout
};

/// Exact depth as min over V of f(V), with the proof witness A(V); verifies
/// independence, closed-neighbourhood cover and |A(V)| = f(V).
DepthWitness depth_via_fV(const CwShape& shape);

int fV(const CwShape& shape, Mask v_subset);

/// Formula-based invariants; field-independent.
InvariantBundle cw_invariants(const CwShape& shape);

/// i(G): minimum size of an independent set A with A ∪ N_G(A) = V(G).
int independence_domination(const Graph& g);

Graph construct_star(int n);
Graph construct_star_triangle(int k);
Graph construct_Gms(int m, const std::vector<int>& s);

CwShape shape_G1(int m, int p, int t);
CwShape shape_G2(int m, int s, int t);
CwShape shape_e1(int s1, int s2, int p);
CwShape shape_e2(int s1);
CwShape shape_e3(int t1);

/// Family dispatcher used by the CLI: star(n) | star-triangle(k) |
/// g(m;s1,..,sm) | g1(m,p,t) | g2(m,s,t) | e1(s1,s2,p) | e2(s1) | e3(t1).
Graph construct_family(const std::string& family, const std::vector<int>& params);

/// "cw m=2 p=2 s=1,1 t=1,0 bip=1-1,1-2,2-2" (1-based v-w pairs).
CwShape parse_shape_literal(const std::string& text);
std::string shape_literal(const CwShape& shape);

/// Every Cameron-Walker shape with vertex_count == n (labelled middles;
/// duplicates across symmetric labelings possible).
void enumerate_cw_shapes(int n, const std::function<void(const CwShape&)>& fn);

}  // namespace cwhom

#endif
