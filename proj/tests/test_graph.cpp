#include <doctest.h>

#include <stdexcept>

#include "cwhom/canonical.hpp"
#include "cwhom/graph.hpp"

using namespace cwhom;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph star_triangle(int k) {
    Graph g(2 * k + 1);
    for (int i = 0; i < k; ++i) {
        g.add_edge(0, 2 * i + 1);
        g.add_edge(0, 2 * i + 2);
        g.add_edge(2 * i + 1, 2 * i + 2);
    }
    return g;
}

// Matching oracle: try all edge subsets.
std::pair<int, int> matching_bruteforce(const Graph& g) {
    auto es = g.edges();
    int m = 0, im = 0;
    for (Mask sub = 0; sub < (Mask{1} << es.size()); ++sub) {
        Mask verts = 0;
        bool matching = true;
        for (std::size_t i = 0; i < es.size() && matching; ++i) {
            if (!((sub >> i) & 1)) continue;
            Mask ends = bit(es[i].first) | bit(es[i].second);
            if (verts & ends) matching = false;
            verts |= ends;
        }
        if (!matching) continue;
        int size = 0;
        bool induced = true;
        for (std::size_t i = 0; i < es.size(); ++i) {
            if (!((sub >> i) & 1)) continue;
            ++size;
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                if (!((sub >> j) & 1)) continue;
                Mask close = bit(es[i].first) | bit(es[i].second) | g.adj(es[i].first) |
                             g.adj(es[i].second);
                if (close & (bit(es[j].first) | bit(es[j].second))) induced = false;
            }
        }
        m = std::max(m, size);
        if (induced) im = std::max(im, size);
    }
    return {m, im};
}

}  // namespace

TEST_CASE("graph6 decoding of known codes") {
    Graph one = parse_graph6("@");
    CHECK(one.n() == 1);
    CHECK(one.edge_count() == 0);

    Graph edge = parse_graph6("A_");
    CHECK(edge.n() == 2);
    CHECK(edge.has_edge(0, 1));

    Graph k14 = parse_graph6("D?{");
    CHECK(k14.n() == 5);
    CHECK(k14.edge_count() == 4);
    CHECK(k14.degree(4) == 4);
    CHECK(emit_graph6(k14) == "D?{");

    Graph tri = parse_graph6("Bw");
    CHECK(tri.n() == 3);
    CHECK(tri.edge_count() == 3);
}

TEST_CASE("graph6 round trips on every connected graph up to n = 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) {
            Graph back = parse_graph6(emit_graph6(g));
            CHECK(back == g);
        }
}

TEST_CASE("graph6 rejects malformed input with a byte offset") {
    CHECK_THROWS_WITH_AS(parse_graph6(""), doctest::Contains("byte offset 0"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph6("Bw\x01"), doctest::Contains("trailing"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph6("B"), doctest::Contains("truncated"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph6("\x0a"), doctest::Contains("printable"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);  // multi-byte header > 62
}

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("0 1\n1 2\n\n# comment\n2 3\n");
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);
    CHECK_THROWS_AS(parse_edge_list("0 x"), std::invalid_argument);
}

TEST_CASE("independence number") {
    CHECK(independence_number(path(3)) == 2);
    CHECK(independence_number(parse_graph6("Bw")) == 1);
    CHECK(independence_number(Graph(6)) == 6);
    for (int n = 2; n <= 8; ++n) CHECK(independence_number(star(n)) == n - 1);
}

TEST_CASE("matching numbers on known graphs") {
    auto s5 = matching_numbers(star(5));
    CHECK(s5.m == 1);
    CHECK(s5.im == 1);
    auto c5 = matching_numbers(cycle(5));
    CHECK(c5.m == 2);
    CHECK(c5.im == 1);
    auto p5 = matching_numbers(path(5));
    CHECK(p5.m == 2);
    CHECK(p5.im == 2);
    for (int k = 1; k <= 4; ++k) {
        auto st = matching_numbers(star_triangle(k));
        CHECK(st.m == k);
        CHECK(st.im == k);
    }
}

TEST_CASE("matching numbers agree with the edge-subset oracle, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : connected_graphs(n)) {
            auto got = matching_numbers(g);
            auto want = matching_bruteforce(g);
            CHECK(got.m == want.first);
            CHECK(got.im == want.second);
        }
}

TEST_CASE("im <= m over the full enumeration up to n = 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n)) {
            auto mn = matching_numbers(g);
            CHECK(mn.im <= mn.m);
        }
}

TEST_CASE("s-suspension") {
    Graph iso3(3);
    Graph sus = s_suspension(iso3, 0);
    CHECK(canonical_form(sus) == canonical_form(star(4)));

    Graph one(1);
    Graph two = s_suspension(one, bit(0));
    CHECK(two.n() == 2);
    CHECK(two.edge_count() == 0);

    Graph tri = parse_graph6("Bw");
    CHECK_THROWS_AS(s_suspension(tri, bit(0) | bit(1)), std::invalid_argument);
    CHECK_THROWS_AS(s_suspension(tri, bit(5)), std::invalid_argument);
}

TEST_CASE("suspension preserves the independence number when |S| < alpha") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) {
            if (g.edge_count() == 0) continue;
            int alpha = independence_number(g);
            for (Mask s = 0; s < (Mask{1} << n); ++s) {
                if (popcount(s) > alpha - 1 || !g.is_independent(s)) continue;
                CHECK(independence_number(s_suspension(g, s)) == alpha);
            }
        }
}

TEST_CASE("star and star triangle predicates") {
    for (int n = 2; n <= 7; ++n) CHECK(is_star(star(n)));
    CHECK(!is_star(path(4)));
    CHECK(!is_star(cycle(4)));
    for (int k = 1; k <= 4; ++k) {
        CHECK(is_star_triangle(star_triangle(k)));
        CHECK(!is_star(star_triangle(k)));
    }
    CHECK(is_star_triangle(parse_graph6("Bw")));  // one triangle
    CHECK(!is_star_triangle(cycle(5)));
}

TEST_CASE("generated graphs are simple and symmetric") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n))
            for (int v = 0; v < n; ++v) {
                CHECK(((g.adj(v) >> v) & 1) == 0);
                CHECK((g.adj(v) & ~g.vertex_mask()) == 0);
                Mask m = g.adj(v);
                while (m) {
                    int u = lowest_bit(m);
                    m &= m - 1;
                    CHECK(g.has_edge(u, v));
                }
            }
}
