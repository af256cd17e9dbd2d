#ifndef CWHOM_CANONICAL_HPP
#define CWHOM_CANONICAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "cwhom/graph.hpp"

namespace cwhom {

/// Canonical byte string: equal iff the (optionally vertex-coloured) graphs
/// are isomorphic.  Colour classes must be respected by the isomorphism.
std::string canonical_form(const Graph& g, const std::vector<int>& colors = {});

/// The relabelling behind canonical_form: position i of the result holds the
/// original vertex placed at canonical position i.
std::vector<int> canonical_labeling(const Graph& g, const std::vector<int>& colors = {});

/// Exhaustive-permutation reference implementation, test oracle only.
std::string canonical_form_bruteforce(const Graph& g, const std::vector<int>& colors = {});

/// All connected graphs on n vertices, one per isomorphism class,
/// in a fixed deterministic order.  Supported for 1 <= n <= 10; larger
/// inputs are rejected with a hint to supply a graph6 file.
std::vector<Graph> connected_graphs(int n);

void enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& fn);

}  // namespace cwhom

#endif
