#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "cwhom/canonical.hpp"

using namespace cwhom;

namespace {

Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

Graph labeled(int n, Mask code) {
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((code >> k) & 1) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("relabelings collide, different graphs do not") {
    Graph p1 = from_edges(3, {{0, 1}, {1, 2}});
    Graph p2 = from_edges(3, {{1, 0}, {0, 2}});
    Graph tri = from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(canonical_form(p1) == canonical_form(p2));
    CHECK(canonical_form(p1) != canonical_form(tri));
}

TEST_CASE("labeled trees on 4 vertices form two isomorphism classes") {
    std::set<std::string> classes;
    int trees = 0;
    for (Mask code = 0; code < (Mask{1} << 6); ++code) {
        Graph g = labeled(4, code);
        if (g.edge_count() == 3 && g.connected()) {
            ++trees;
            classes.insert(canonical_form(g));
        }
    }
    CHECK(trees == 16);  // Cayley: 4^{4-2}
    CHECK(classes.size() == 2);
}

TEST_CASE("canonical form induces the same partition as the permutation oracle") {
    for (int n = 1; n <= 5; ++n) {
        std::map<std::string, std::set<std::string>> groups;
        for (Mask code = 0; code < (Mask{1} << (n * (n - 1) / 2)); ++code) {
            Graph g = labeled(n, code);
            groups[canonical_form_bruteforce(g)].insert(canonical_form(g));
        }
        std::set<std::string> fast;
        for (auto& [slow_key, fast_keys] : groups) {
            CHECK(fast_keys.size() == 1);  // iso graphs agree
            CHECK(fast.insert(*fast_keys.begin()).second);  // non-iso graphs differ
        }
    }
}

TEST_CASE("colored canonical form distinguishes colorings") {
    Graph p = from_edges(3, {{0, 1}, {1, 2}});
    CHECK(canonical_form(p, {1, 0, 0}) == canonical_form(p, {0, 0, 1}));
    CHECK(canonical_form(p, {1, 0, 0}) != canonical_form(p, {0, 1, 0}));
}

TEST_CASE("connected graph counts") {
    const int counts[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) CHECK(connected_graphs(n).size() == std::size_t(counts[n]));
    CHECK_THROWS_WITH_AS(connected_graphs(11), doctest::Contains("graph6"),
                         std::invalid_argument);
    CHECK_THROWS_AS(connected_graphs(0), std::invalid_argument);
}

TEST_CASE("generator matches labeled enumeration with canonical dedup, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> classes;
        for (Mask code = 0; code < (Mask{1} << (n * (n - 1) / 2)); ++code) {
            Graph g = labeled(n, code);
            if (g.connected()) classes.insert(canonical_form(g));
        }
        std::set<std::string> generated;
        for (const Graph& g : connected_graphs(n)) {
            CHECK(g.connected());
            CHECK(generated.insert(canonical_form(g)).second);  // pairwise non-isomorphic
        }
        CHECK(generated == classes);
    }
}
