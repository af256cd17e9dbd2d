// Acceptance harness: one pass/fail line per criterion.  Criterion 2 is a
// stretch run (n = 9 full enumeration) and never gates the exit status.
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cwhom/canonical.hpp"
#include "cwhom/cw.hpp"
#include "cwhom/lattice.hpp"
#include "cwhom/oracle.hpp"
#include "cwhom/parallel.hpp"

using namespace cwhom;

namespace {

int threads = default_thread_count();
const FieldDesc kGf2 = FieldDesc::gf2();

// Shared corpora, filled by earlier criteria and reused by later ones.
std::map<int, LatticePointSet> graph_pairs;             // n -> enumerated (depth, dim)
std::map<int, std::vector<CwShape>> shapes_by_n;        // deduplicated by key
std::map<int, std::vector<InvariantBundle>> cw_bundles; // formula bundles per shape

void report(int number, bool ok, const std::string& what, bool optional = false) {
    std::cout << "criterion " << number << ": " << (ok ? "pass" : "FAIL") << " - " << what
              << (optional ? " (optional, non-gating)" : "") << "\n"
              << std::flush;
}

const std::vector<CwShape>& shapes(int n) {
    auto it = shapes_by_n.find(n);
    if (it != shapes_by_n.end()) return it->second;
    std::set<std::string> seen;
    auto& out = shapes_by_n[n];
    enumerate_cw_shapes(n, [&](const CwShape& sh) {
        if (seen.insert(sh.key()).second) out.push_back(sh);
    });
    return out;
}

bool criterion1() {
    bool ok = true;
    for (int n = 3; n <= 8; ++n) {
        graph_pairs[n] = enumerate_graph_pair_set(n, "builtin", kGf2, "", threads);
        if (graph_pairs[n].points != closed_form_set(SetKind::CMinus, n).points) {
            std::cout << "  graph pair set differs from c-minus at n=" << n << "\n";
            ok = false;
        }
    }
    return ok;
}

bool criterion2() {
    LatticePointSet got = enumerate_graph_pair_set(9, "builtin", kGf2, "", threads);
    std::set<Point> want = closed_form_set(SetKind::CMinus, 9).points;
    want.insert({5, 6});
    if (got.points != want) {
        std::cout << "  n=9 enumeration differs from c-minus(9) + {(5,6)}\n";
        return false;
    }
    for (const Graph& g : connected_graphs(9)) {
        if (independence_number(g) != 6) continue;
        InvariantBundle b = oracle_invariants(g, kGf2);
        if (b.depth == 5) {
            std::ofstream out("acceptance-n9-depth5-dim6.g6");
            out << emit_graph6(g) << "\n";
            std::cout << "  archived (5,6) witness " << emit_graph6(g)
                      << " to acceptance-n9-depth5-dim6.g6\n";
            return true;
        }
    }
    std::cout << "  no (5,6) witness found on 9 vertices\n";
    return false;
}

bool criterion3() {
    bool ok = true;
    for (int n = 5; n <= 12; ++n)
        if (enumerate_cw_sets(n).pairs.points != closed_form_set(SetKind::CwDd, n).points) {
            std::cout << "  cw pair set differs from the closed form at n=" << n << "\n";
            ok = false;
        }
    return ok;
}

bool criterion4() {
    bool ok = true;
    for (int n = 5; n <= 12; ++n)
        if (enumerate_cw_sets(n).tuples.points != closed_form_set(SetKind::CwTuple4, n).points) {
            std::cout << "  cw tuple set differs from the closed form at n=" << n << "\n";
            ok = false;
        }
    std::set<Point> eight = {{2, 2, 5, 5}, {2, 2, 6, 6}, {3, 3, 3, 3}, {3, 3, 4, 4}, {3, 3, 5, 5}};
    std::set<Point> nine = {{2, 2, 6, 6}, {2, 2, 7, 7}, {2, 4, 4, 4}, {3, 4, 4, 4}, {4, 4, 4, 4},
                            {3, 3, 4, 4}, {3, 3, 5, 5}, {3, 3, 6, 6}, {4, 4, 5, 5}};
    ok &= closed_form_set(SetKind::CwTuple4, 8).points == eight;
    ok &= closed_form_set(SetKind::CwTuple4, 9).points == nine;
    return ok;
}

bool criterion5() {
    bool ok = true;
    for (int n = 5; n <= 11; ++n) {
        const auto& corpus = shapes(n);
        auto& bundles = cw_bundles[n];
        bundles.resize(corpus.size());
        std::vector<char> good(corpus.size(), 0);
        parallel_for(corpus.size(), threads, [&](std::size_t i) {
            bundles[i] = cw_invariants(corpus[i]);
            InvariantBundle o = oracle_invariants(build_cw(corpus[i]), kGf2);
            good[i] = bundles[i].depth == o.depth && bundles[i].reg == o.reg &&
                      bundles[i].dim == o.dim && bundles[i].degh == o.degh;
        });
        for (std::size_t i = 0; i < corpus.size(); ++i)
            if (!good[i]) {
                std::cout << "  formula/oracle mismatch: " << shape_literal(corpus[i]) << "\n";
                ok = false;
            }
    }
    return ok;
}

bool criterion6() {
    bool ok = true;
    for (int n = 5; n <= 11; ++n) {
        const auto& corpus = shapes(n);
        std::vector<char> good(corpus.size(), 0);
        parallel_for(corpus.size(), threads, [&](std::size_t i) {
            // depth_via_fV re-verifies A(V) internally and throws on a bad witness.
            DepthWitness w = depth_via_fV(corpus[i]);
            good[i] = w.depth == independence_domination(build_cw(corpus[i]));
        });
        for (std::size_t i = 0; i < corpus.size(); ++i)
            if (!good[i]) {
                std::cout << "  f(V) depth vs domination mismatch: " << shape_literal(corpus[i])
                          << "\n";
                ok = false;
            }
    }
    return ok;
}

bool criterion7() {
    bool ok = true;
    for (int n = 2; n <= 9; ++n) {
        InvariantBundle b = oracle_invariants(construct_star(n), kGf2);
        ok &= b.depth == 1 && b.dim == n - 1;
    }
    InvariantBundle g3 = oracle_invariants(construct_Gms(3, {1, 2, 3}), kGf2);
    ok &= g3.depth == 4 && g3.dim == 6;
    for (int m = 1; m <= 4; ++m)
        for (int p = 1; p <= 4; ++p)
            for (int t = 1; t <= 4; ++t) {
                if (2 * m + 3 * p + 2 * t - 2 > 12) continue;
                CwShape sh = shape_G1(m, p, t);
                InvariantBundle f = cw_invariants(sh);
                InvariantBundle o = oracle_invariants(build_cw(sh), kGf2);
                if (f.depth != o.depth || f.reg != o.reg || f.dim != o.dim || f.degh != o.degh) {
                    std::cout << "  G1 mismatch at m=" << m << " p=" << p << " t=" << t << "\n";
                    ok = false;
                }
            }
    for (int m = 2; m <= 4; ++m)
        for (int s = 1; s <= 5; ++s)
            for (int t = 1; t <= 4; ++t) {
                if (2 * m + s + 2 * t + 1 > 12) continue;
                CwShape sh = shape_G2(m, s, t);
                InvariantBundle f = cw_invariants(sh);
                InvariantBundle o = oracle_invariants(build_cw(sh), kGf2);
                if (f.depth != o.depth || f.reg != o.reg || f.dim != o.dim || f.degh != o.degh) {
                    std::cout << "  G2 mismatch at m=" << m << " s=" << s << " t=" << t << "\n";
                    ok = false;
                }
            }
    return ok;
}

bool criterion8() {
    bool ok = true;
    for (int n = 5; n <= 11; ++n)
        for (const CwShape& sh : shapes(n)) {
            if (cw_invariants(sh).depth != 2) continue;
            auto rec = recognize_cw(build_cw(sh));
            if (!rec) {
                ok = false;
                continue;
            }
            bool e1 = rec->m == 2 && rec->sum_t() == 0;
            bool e2 = rec->m == 1 && rec->p == 1 && rec->t[0] == 1;
            bool e3 = rec->m == 1 && rec->p == 1 && rec->t[0] >= 2 && rec->s[0] == 1;
            if (!(e1 || e2 || e3)) {
                std::cout << "  off-template depth-2 graph: " << shape_literal(*rec) << "\n";
                ok = false;
            }
        }
    for (int n = 5; n <= 12; ++n) {
        std::set<int> dims;
        for (const CwShape& sh : shapes(n)) {
            InvariantBundle b = cw_invariants(sh);
            if (b.depth == 2) dims.insert(b.dim);
        }
        std::set<int> want = {n - 2, n - 3};
        if (n % 2 == 1) want.insert((n - 1) / 2);
        if (dims != want) {
            std::cout << "  depth-2 dim membership differs at n=" << n << "\n";
            ok = false;
        }
    }
    return ok;
}

bool criterion9() {
    bool ok = true;
    for (int n = 5; n <= 20; ++n) {
        bool expect = n % 2 == 0 || n == 5 || n == 7;
        if (is_convex(closed_form_set(SetKind::CwDd, n)).convex != expect) {
            std::cout << "  cw-dd convexity differs at n=" << n << "\n";
            ok = false;
        }
    }
    for (int n = 3; n <= 8; ++n)
        if (!is_convex(graph_pairs.at(n)).convex) {
            std::cout << "  enumerated graph pair set not convex at n=" << n << "\n";
            ok = false;
        }
    return ok;
}

bool criterion10() {
    bool ok = true;
    // Pair-region arithmetic bound, exact integers.
    for (int n = 6; n <= 200; ++n)
        for (int b = (n + 1) / 2 + 1; b <= n - 2; ++b)
            if (b + 1 - (b + (n - b) - 1) / (n - b) < n / 2) {
                std::cout << "  arithmetic bound fails at n=" << n << " b=" << b << "\n";
                ok = false;
            }
    // Bundles behind criterion 1 (general graphs, re-derived at small n).
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n)) {
            if (g.edge_count() == 0) continue;
            if (!audit_inequalities(oracle_invariants(g, kGf2), false).empty()) {
                std::cout << "  general inequality violated at " << emit_graph6(g) << "\n";
                ok = false;
            }
        }
    // Bundles behind criteria 3 and 5 (every Cameron-Walker shape, n <= 11).
    for (int n = 5; n <= 11; ++n)
        for (const InvariantBundle& b : cw_bundles.at(n))
            if (!audit_inequalities(b, true).empty()) {
                std::cout << "  cw inequality violated at n=" << n << "\n";
                ok = false;
            }
    // Sandwich and monotonicity of the enumerated pair sets.
    for (int n = 3; n <= 8; ++n) {
        const auto& mid = graph_pairs.at(n).points;
        const auto& low = closed_form_set(SetKind::CMinus, n).points;
        const auto& high = closed_form_set(SetKind::CPlus, n).points;
        ok &= std::includes(mid.begin(), mid.end(), low.begin(), low.end());
        ok &= std::includes(high.begin(), high.end(), mid.begin(), mid.end());
        if (n > 3) {
            const auto& prev = graph_pairs.at(n - 1).points;
            ok &= std::includes(mid.begin(), mid.end(), prev.begin(), prev.end());
        }
    }
    return ok;
}

bool criterion11() {
    bool ok = true;
    auto try_all = [&](WitnessTheorem thm, SetKind kind, int n) {
        for (const Point& p : closed_form_set(kind, n).points) {
            try {
                witness_for_point(thm, n, p);  // self-verifies, throws on failure
            } catch (const std::exception& e) {
                std::cout << "  witness failed for n=" << n << ": " << e.what() << "\n";
                ok = false;
            }
        }
    };
    for (int n = 3; n <= 8; ++n) try_all(WitnessTheorem::GraphPair, SetKind::CMinus, n);
    for (int n = 5; n <= 12; ++n) {
        try_all(WitnessTheorem::CwPair, SetKind::CwDd, n);
        try_all(WitnessTheorem::CwTuple, SetKind::CwTuple4, n);
    }
    return ok;
}

}  // namespace

int main() {
    bool gate = true;
    bool c1 = criterion1();
    report(1, c1, "graph pair enumeration equals c-minus for n = 3..8");
    gate &= c1;

    bool c2 = std::getenv("CWHOM_SKIP_STRETCH") ? true : criterion2();
    report(2, c2, "n = 9 enumeration equals c-minus(9) + {(5,6)} with archived witness", true);

    bool c3 = criterion3();
    report(3, c3, "cw pair sets equal the closed form for n = 5..12");
    gate &= c3;

    bool c4 = criterion4();
    report(4, c4, "cw tuple sets equal the closed form for n = 5..12, frozen lists at 8 and 9");
    gate &= c4;

    bool c5 = criterion5();
    report(5, c5, "formula invariants match the oracle on every shape, n <= 11");
    gate &= c5;

    bool c6 = criterion6();
    report(6, c6, "f(V) depth equals independence domination with verified witnesses");
    gate &= c6;

    bool c7 = criterion7();
    report(7, c7, "construction families match the oracle for all parameters, n <= 12");
    gate &= c7;

    bool c8 = criterion8();
    report(8, c8, "depth-2 graphs match the three templates; dim membership for n = 5..12");
    gate &= c8;

    bool c9 = criterion9();
    report(9, c9, "convexity law for cw-dd n = 5..20 and enumerated pair sets n <= 8");
    gate &= c9;

    bool c10 = criterion10();
    report(10, c10, "inequality audit, arithmetic bound, sandwich and monotonicity");
    gate &= c10;

    bool c11 = criterion11();
    report(11, c11, "self-verified witnesses for every closed-form point");
    gate &= c11;

    std::cout << (gate ? "acceptance: all gating criteria passed\n"
                       : "acceptance: FAILURES above\n");
    return gate ? 0 : 1;
}
