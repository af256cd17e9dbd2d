#ifndef CWHOM_LATTICE_HPP
#define CWHOM_LATTICE_HPP

#include <set>
#include <string>
#include <vector>

#include "cwhom/cw.hpp"
#include "cwhom/graph.hpp"
#include "cwhom/oracle.hpp"

namespace cwhom {

using Point = std::vector<int>;

struct LatticePointSet {
    std::string kind;           // closed-form name or enumeration label
    int n = 0;
    int arity = 2;
    std::string field = "any";  // FieldDesc name for enumerated sets
    std::set<Point> points;

    bool contains(const Point& p) const { return points.count(p) > 0; }
    LatticePointSet project(const std::vector<int>& coords, const std::string& new_kind) const;
};

/// c-minus | c-plus | cw2-dd | cw-dd | cw-tuple4 | rd
enum class SetKind { CMinus, CPlus, Cw2Dd, CwDd, CwTuple4, RD };

SetKind parse_set_kind(const std::string& name);
std::string set_kind_name(SetKind kind);

/// Materialize the closed-form set; exact integer arithmetic throughout.
LatticePointSet closed_form_set(SetKind kind, int n);

/// (depth, dim) over every connected graph on n vertices.  source is
/// "builtin" (n <= 10) or "graph6:PATH"; cache_dir may be empty (no cache).
LatticePointSet enumerate_graph_pair_set(int n, const std::string& source, FieldDesc field,
                                         const std::string& cache_dir, int threads);

struct CwSets {
    LatticePointSet pairs;   // (depth, dim)
    LatticePointSet tuples;  // (depth, reg, dim, degh)
};

/// Formula invariants over every Cameron-Walker shape with n vertices.
CwSets enumerate_cw_sets(int n);

enum class WitnessTheorem { GraphPair, CwPair, CwTuple };

WitnessTheorem parse_witness_theorem(const std::string& name);  // graph-pair | cw-pair | cw-tuple

/// Constructive witness for a closed-form point, self-verified before return
/// (oracle for general graphs, formula invariants for Cameron-Walker ones).
/// Rejects points outside the corresponding closed-form set.
Graph witness_for_point(WitnessTheorem theorem, int n, const Point& point);

struct ConvexityReport {
    bool convex = true;
    Point p1, p2, missing;  // first violating gap when not convex
};

ConvexityReport is_convex(const LatticePointSet& set);

/// Violated inequality clauses; empty on a compliant bundle.
std::vector<std::string> audit_inequalities(const InvariantBundle& b, bool cw);

std::string set_to_tsv(const LatticePointSet& set);
LatticePointSet set_from_tsv(const std::string& text);

/// Rows only in `b` prefixed "+", rows only in `a` prefixed "-".
std::string diff_sets(const LatticePointSet& a, const LatticePointSet& b);

/// Deterministic monochrome scatter plot; arity 2 only.
std::string emit_scatter_svg(const LatticePointSet& set);

}  // namespace cwhom

#endif
