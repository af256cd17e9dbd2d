#include "cwhom/cw.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cwhom/canonical.hpp"

namespace cwhom {

int CwShape::vertex_count() const { return m + p + sum_s() + 2 * sum_t(); }
int CwShape::sum_s() const { return std::accumulate(s.begin(), s.end(), 0); }
int CwShape::sum_t() const { return std::accumulate(t.begin(), t.end(), 0); }

int CwShape::zero_t_count() const {
    return static_cast<int>(std::count(t.begin(), t.end(), 0));
}

Mask CwShape::w_neighbors(int j) const {
    Mask out = 0;
    for (int i = 0; i < m; ++i)
        if ((bip[i] >> j) & 1) out |= bit(i);
    return out;
}

bool CwShape::bip_complete() const {
    Mask full = (bit(p - 1) << 1) - 1;
    for (int i = 0; i < m; ++i)
        if (bip[i] != full) return false;
    return true;
}

void CwShape::validate() const {
    if (m < 1) throw std::invalid_argument("shape: m >= 1 required");
    if (p < 1) throw std::invalid_argument("shape: p >= 1 required");
    if (static_cast<int>(s.size()) != m || static_cast<int>(t.size()) != p ||
        static_cast<int>(bip.size()) != m)
        throw std::invalid_argument("shape: s/t/bip size mismatch");
    for (int i = 0; i < m; ++i)
        if (s[i] < 1) throw std::invalid_argument("shape: s_i >= 1 required");
    for (int j = 0; j < p; ++j)
        if (t[j] < 0) throw std::invalid_argument("shape: t_j >= 0 required");
    Mask wfull = (bit(p - 1) << 1) - 1;
    for (int i = 0; i < m; ++i) {
        if (bip[i] & ~wfull) throw std::invalid_argument("shape: bip mentions w outside range");
        if (!bip[i]) throw std::invalid_argument("shape: every v_i needs a bipartite edge");
    }
    for (int j = 0; j < p; ++j)
        if (!w_neighbors(j)) throw std::invalid_argument("shape: every w_j needs a bipartite edge");
    // bip connectivity over m + p vertices
    Mask seen = bit(0), frontier = bit(0);  // start at v_1; w_j represented as bit(m + j)
    while (frontier) {
        Mask next = 0;
        Mask f = frontier;
        while (f) {
            int x = lowest_bit(f);
            f &= f - 1;
            if (x < m) {
                next |= bip[x] << m;
            } else {
                next |= w_neighbors(x - m);
            }
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    if (seen != (bit(m + p - 1) << 1) - 1)
        throw std::invalid_argument("shape: bipartite part must be connected");
    if (m == 1 && sum_t() == 0)
        throw std::invalid_argument("shape: m = 1 with no pendant triangles builds a star");
    if (vertex_count() < 5) throw std::invalid_argument("shape: at least five vertices required");
}

std::string CwShape::key() const {
    // Bipartite middle with decorations as colours: even colours on the
    // v side carry s_i, odd colours on the w side carry t_j.
    Graph g(m + p);
    for (int i = 0; i < m; ++i) {
        Mask b = bip[i];
        while (b) {
            int j = lowest_bit(b);
            b &= b - 1;
            g.add_edge(i, m + j);
        }
    }
    std::vector<int> colors(m + p);
    for (int i = 0; i < m; ++i) colors[i] = 2 * s[i];
    for (int j = 0; j < p; ++j) colors[m + j] = 2 * t[j] + 1;
    return canonical_form(g, colors);
}

Graph build_cw(const CwShape& shape) {
    shape.validate();
    int m = shape.m, p = shape.p;
    Graph g(shape.vertex_count());
    for (int i = 0; i < m; ++i) {
        Mask b = shape.bip[i];
        while (b) {
            int j = lowest_bit(b);
            b &= b - 1;
            g.add_edge(i, m + j);
        }
    }
    int next = m + p;
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < shape.s[i]; ++k) g.add_edge(i, next++);
    for (int j = 0; j < p; ++j)
        for (int l = 0; l < shape.t[j]; ++l) {
            g.add_edge(m + j, next);
            g.add_edge(m + j, next + 1);
            g.add_edge(next, next + 1);
            next += 2;
        }
    return g;
}

namespace {

std::optional<CwShape> recognize_structural(const Graph& g) {
    int n = g.n();
    if (n < 5 || !g.connected()) return std::nullopt;

    Mask leaves = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) leaves |= bit(v);

    // Pendant triangles: {a, y1, y2} with deg(y1) = deg(y2) = 2 and deg(a) > 2.
    Mask triangle_ys = 0;
    std::vector<std::pair<int, std::pair<int, int>>> triangles;  // apex -> (y1, y2)
    for (int y1 = 0; y1 < n; ++y1) {
        if (g.degree(y1) != 2) continue;
        Mask nb = g.adj(y1);
        int u = lowest_bit(nb);
        int v = lowest_bit(nb & (nb - 1));
        if (!g.has_edge(u, v)) continue;  // y1 not in a triangle
        int y2, apex;
        if (g.degree(u) == 2) {
            y2 = u;
            apex = v;
        } else if (g.degree(v) == 2) {
            y2 = v;
            apex = u;
        } else {
            continue;  // a triangle inside the middle, caught by the bipartite check
        }
        if (y2 < y1) continue;  // handle each pair once, y1 < y2
        if (g.degree(apex) <= 2) return std::nullopt;  // bare triangle component
        triangles.push_back({apex, {y1, y2}});
        triangle_ys |= bit(y1) | bit(y2);
    }

    Mask middle = g.vertex_mask() & ~leaves & ~triangle_ys;
    if (!middle) return std::nullopt;

    Mask vside = 0;
    Mask lv = leaves;
    while (lv) {
        int x = lowest_bit(lv);
        lv &= lv - 1;
        int sup = lowest_bit(g.adj(x));
        if (!((middle >> sup) & 1)) return std::nullopt;
        vside |= bit(sup);
    }
    Mask wside = middle & ~vside;
    if (!vside || !wside) return std::nullopt;

    for (auto& [apex, ys] : triangles)
        if (!((wside >> apex) & 1)) return std::nullopt;  // triangles belong to the w side

    // Bipartite middle: no edges inside either side, and its leftover edges
    // connect V with W only.
    Mask mm = middle;
    while (mm) {
        int v = lowest_bit(mm);
        mm &= mm - 1;
        Mask same = ((vside >> v) & 1) ? vside : wside;
        if (g.adj(v) & same & ~bit(v)) return std::nullopt;
    }

    std::vector<int> vlist, wlist;
    for (int v = 0; v < n; ++v) {
        if ((vside >> v) & 1) vlist.push_back(v);
        if ((wside >> v) & 1) wlist.push_back(v);
    }
    CwShape shape;
    shape.m = static_cast<int>(vlist.size());
    shape.p = static_cast<int>(wlist.size());
    shape.s.assign(shape.m, 0);
    shape.t.assign(shape.p, 0);
    shape.bip.assign(shape.m, 0);
    for (int i = 0; i < shape.m; ++i) {
        shape.s[i] = popcount(g.adj(vlist[i]) & leaves);
        for (int j = 0; j < shape.p; ++j)
            if (g.has_edge(vlist[i], wlist[j])) shape.bip[i] |= bit(j);
    }
    for (auto& [apex, ys] : triangles) {
        auto it = std::lower_bound(wlist.begin(), wlist.end(), apex);
        ++shape.t[it - wlist.begin()];
    }
    // Every edge must be accounted for: leaf, triangle, or bipartite.
    int bip_edges = 0;
    for (Mask b : shape.bip) bip_edges += popcount(b);
    if (g.edge_count() !=
        popcount(leaves) + 3 * static_cast<int>(triangles.size()) + bip_edges)
        return std::nullopt;
    try {
        shape.validate();
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return shape;
}

}  // namespace

std::optional<CwShape> recognize_cw(const Graph& g) {
    bool semantic = false;
    if (g.edge_count() >= 1 && g.connected() && !is_star(g) && !is_star_triangle(g)) {
        MatchingNumbers mn = matching_numbers(g);
        semantic = mn.im == mn.m;
    }
    std::optional<CwShape> structural = recognize_structural(g);
    if (semantic != structural.has_value())
        throw std::logic_error("Cameron-Walker recognition routes disagree on " + emit_graph6(g));
    return structural;
}

int fV(const CwShape& shape, Mask v_subset) {
    int val = shape.m - popcount(v_subset);
    for (int i = 0; i < shape.m; ++i)
        if ((v_subset >> i) & 1) val += shape.s[i];
    for (int j = 0; j < shape.p; ++j) {
        Mask nb = shape.w_neighbors(j);
        if ((nb & ~v_subset) == 0)
            val += 1;  // N(w_j) inside V
        else
            val += shape.t[j];
    }
    return val;
}

DepthWitness depth_via_fV(const CwShape& shape) {
    shape.validate();
    if (shape.m > 30) throw std::invalid_argument("depth_via_fV sweep limited to m <= 30");
    DepthWitness out;
    out.depth = -1;
    for (Mask v = 0; v < (Mask{1} << shape.m); ++v) {
        int val = fV(shape, v);
        if (out.depth < 0 || val < out.depth) {
            out.depth = val;
            out.argmin_v = v;
        }
    }

    // Assemble A(V) in the build_cw layout and check the proof's claims.
    const Mask v_set = out.argmin_v;
    int m = shape.m, p = shape.p;
    Mask a = 0;
    for (int i = 0; i < m; ++i)
        if (!((v_set >> i) & 1)) a |= bit(i);
    int next = m + p;
    for (int i = 0; i < m; ++i) {
        if ((v_set >> i) & 1)
            for (int k = 0; k < shape.s[i]; ++k) a |= bit(next + k);
        next += shape.s[i];
    }
    std::vector<int> tri_base(p);
    for (int j = 0; j < p; ++j) {
        tri_base[j] = next;
        next += 2 * shape.t[j];
    }
    for (int j = 0; j < p; ++j) {
        Mask nb = shape.w_neighbors(j);
        if ((nb & ~v_set) == 0) {
            a |= bit(m + j);
        } else {
            for (int l = 0; l < shape.t[j]; ++l) a |= bit(tri_base[j] + 2 * l);
        }
    }
    Graph g = build_cw(shape);
    if (!g.is_independent(a)) throw std::logic_error("A(V) is not independent");
    if (g.closed_neighborhood(a) != g.vertex_mask())
        throw std::logic_error("A(V) does not dominate V(G)");
    if (popcount(a) != out.depth) throw std::logic_error("|A(V)| != f(V)");
    out.witness_a = a;
    return out;
}

InvariantBundle cw_invariants(const CwShape& shape) {
    shape.validate();
    InvariantBundle b;
    b.n = shape.vertex_count();
    b.dim = b.degh = shape.sum_s() + shape.sum_t() + shape.zero_t_count();
    b.reg = shape.m + shape.sum_t();
    b.depth = depth_via_fV(shape).depth;
    b.field = FieldDesc::any();
    return b;
}

namespace {

void idom_rec(const Graph& g, Mask a, int& best) {
    if (popcount(a) >= best) return;
    Mask dominated = g.closed_neighborhood(a);
    if (dominated == g.vertex_mask()) {
        best = popcount(a);
        return;
    }
    int u = lowest_bit(~dominated & g.vertex_mask());
    Mask candidates = (g.adj(u) | bit(u)) & ~g.closed_neighborhood(a);
    while (candidates) {
        int c = lowest_bit(candidates);
        candidates &= candidates - 1;
        if (g.adj(c) & a) continue;
        idom_rec(g, a | bit(c), best);
    }
}

}  // namespace

int independence_domination(const Graph& g) {
    if (g.n() > 26) throw std::invalid_argument("independence_domination limited to n <= 26");
    int best = g.n() + 1;
    idom_rec(g, 0, best);
    return best;
}

Graph construct_star(int n) {
    if (n < 1) throw std::invalid_argument("star needs n >= 1");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph construct_star_triangle(int k) {
    if (k < 1) throw std::invalid_argument("star triangle needs k >= 1");
    Graph g(2 * k + 1);
    for (int i = 0; i < k; ++i) {
        g.add_edge(0, 2 * i + 1);
        g.add_edge(0, 2 * i + 2);
        g.add_edge(2 * i + 1, 2 * i + 2);
    }
    return g;
}

Graph construct_Gms(int m, const std::vector<int>& s) {
    if (m < 1 || static_cast<int>(s.size()) != m)
        throw std::invalid_argument("G(m;s) needs m >= 1 leaf counts");
    for (int si : s)
        if (si < 1) throw std::invalid_argument("G(m;s) needs every s_i >= 1");
    int n = m + std::accumulate(s.begin(), s.end(), 0);
    Graph g(n);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
    int next = m;
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < s[i]; ++k) g.add_edge(i, next++);
    return g;
}

CwShape shape_G1(int m, int p, int t) {
    if (m < 1 || p < 1 || t < 1) throw std::invalid_argument("G1 needs m, p, t >= 1");
    CwShape sh;
    sh.m = m;
    sh.p = p;
    sh.s.assign(m, 1);
    sh.t.assign(p, 1);
    sh.t[p - 1] = t;
    sh.bip.assign(m, (bit(p - 1) << 1) - 1);  // complete K_{m,p}
    return sh;
}

CwShape shape_G2(int m, int s, int t) {
    if (m < 2 || s < 1 || t < 1) throw std::invalid_argument("G2 needs m >= 2, s >= 1, t >= 1");
    CwShape sh;
    sh.m = m;
    sh.p = 2;
    sh.s.assign(m, 1);
    sh.s[m - 1] = s;
    sh.t = {t, 0};
    sh.bip.assign(m, bit(1));
    sh.bip[0] = bit(0) | bit(1);  // v_1 - w_1 and v_1 - w_2
    return sh;
}

CwShape shape_e1(int s1, int s2, int p) {
    if (s1 < 1 || s2 < 1 || p < 1) throw std::invalid_argument("e1 needs s1, s2, p >= 1");
    CwShape sh;
    sh.m = 2;
    sh.p = p;
    sh.s = {s1, s2};
    sh.t.assign(p, 0);
    sh.bip.assign(2, (bit(p - 1) << 1) - 1);
    return sh;
}

CwShape shape_e2(int s1) {
    if (s1 < 1) throw std::invalid_argument("e2 needs s1 >= 1");
    CwShape sh;
    sh.m = 1;
    sh.p = 1;
    sh.s = {s1};
    sh.t = {1};
    sh.bip = {bit(0)};
    return sh;
}

CwShape shape_e3(int t1) {
    if (t1 < 2) throw std::invalid_argument("e3 needs t1 >= 2");
    CwShape sh;
    sh.m = 1;
    sh.p = 1;
    sh.s = {1};
    sh.t = {t1};
    sh.bip = {bit(0)};
    return sh;
}

Graph construct_family(const std::string& family, const std::vector<int>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument(family + " takes " + std::to_string(k) + " parameters");
    };
    if (family == "star") {
        need(1);
        return construct_star(params[0]);
    }
    if (family == "star-triangle") {
        need(1);
        return construct_star_triangle(params[0]);
    }
    if (family == "g") {
        if (params.size() < 2) throw std::invalid_argument("g takes m followed by s_1..s_m");
        return construct_Gms(params[0], {params.begin() + 1, params.end()});
    }
    if (family == "g1") {
        need(3);
        return build_cw(shape_G1(params[0], params[1], params[2]));
    }
    if (family == "g2") {
        need(3);
        return build_cw(shape_G2(params[0], params[1], params[2]));
    }
    if (family == "e1") {
        need(3);
        return build_cw(shape_e1(params[0], params[1], params[2]));
    }
    if (family == "e2") {
        need(1);
        return build_cw(shape_e2(params[0]));
    }
    if (family == "e3") {
        need(1);
        return build_cw(shape_e3(params[0]));
    }
    throw std::invalid_argument("unknown construction family: " + family);
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
    return out;
}

}  // namespace

CwShape parse_shape_literal(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    CwShape sh;
    bool have_m = false, have_p = false, have_s = false, have_t = false, have_bip = false;
    std::string bip_text;
    while (in >> tok) {
        if (tok == "cw") continue;
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("shape literal: bad token " + tok);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "m") {
            sh.m = std::stoi(val);
            have_m = true;
        } else if (key == "p") {
            sh.p = std::stoi(val);
            have_p = true;
        } else if (key == "s") {
            sh.s = parse_int_list(val);
            have_s = true;
        } else if (key == "t") {
            sh.t = parse_int_list(val);
            have_t = true;
        } else if (key == "bip") {
            bip_text = val;
            have_bip = true;
        } else {
            throw std::invalid_argument("shape literal: unknown key " + key);
        }
    }
    if (!have_m || !have_p || !have_s || !have_t || !have_bip)
        throw std::invalid_argument("shape literal: m, p, s, t, bip all required");
    sh.bip.assign(sh.m, 0);
    std::istringstream bin(bip_text);
    std::string pair;
    while (std::getline(bin, pair, ',')) {
        auto dash = pair.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("shape literal: bip pair needs v-w form: " + pair);
        int i = std::stoi(pair.substr(0, dash)), j = std::stoi(pair.substr(dash + 1));
        if (i < 1 || i > sh.m || j < 1 || j > sh.p)
            throw std::invalid_argument("shape literal: bip pair out of range: " + pair);
        sh.bip[i - 1] |= bit(j - 1);
    }
    sh.validate();
    return sh;
}

std::string shape_literal(const CwShape& sh) {
    std::ostringstream out;
    out << "cw m=" << sh.m << " p=" << sh.p << " s=";
    for (int i = 0; i < sh.m; ++i) out << (i ? "," : "") << sh.s[i];
    out << " t=";
    for (int j = 0; j < sh.p; ++j) out << (j ? "," : "") << sh.t[j];
    out << " bip=";
    bool first = true;
    for (int i = 0; i < sh.m; ++i) {
        Mask b = sh.bip[i];
        while (b) {
            int j = lowest_bit(b);
            b &= b - 1;
            out << (first ? "" : ",") << (i + 1) << "-" << (j + 1);
            first = false;
        }
    }
    return out.str();
}

namespace {

void compositions(int total, int parts, int minimum, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn) {
    if (parts == 1) {
        if (total >= minimum) {
            cur.push_back(total);
            fn(cur);
            cur.pop_back();
        }
        return;
    }
    for (int first = minimum; first <= total - minimum * (parts - 1); ++first) {
        cur.push_back(first);
        compositions(total - first, parts - 1, minimum, cur, fn);
        cur.pop_back();
    }
}

bool middle_ok(const std::vector<Mask>& bip, int m, int p) {
    Mask wcover = 0;
    for (int i = 0; i < m; ++i) {
        if (!bip[i]) return false;
        wcover |= bip[i];
    }
    if (wcover != (bit(p - 1) << 1) - 1) return false;
    // connectivity over v-side reachability
    Mask vseen = bit(0);
    Mask wseen = bip[0];
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < m; ++i) {
            if ((vseen >> i) & 1) continue;
            if (bip[i] & wseen) {
                vseen |= bit(i);
                wseen |= bip[i];
                grew = true;
            }
        }
    }
    return vseen == (bit(m - 1) << 1) - 1;
}

}  // namespace

void enumerate_cw_shapes(int n, const std::function<void(const CwShape&)>& fn) {
    if (n < 5) throw std::invalid_argument("no Cameron-Walker graph has fewer than five vertices");
    if (n > 14) throw std::invalid_argument("shape enumeration budget limited to n <= 14");
    for (int m = 1; 2 * m + 1 <= n; ++m) {
        for (int p = 1; 2 * m + p <= n; ++p) {
            int rem = n - m - p;  // sum(s) + 2 sum(t)
            std::vector<Mask> bip(m, 0);
            Mask limit = Mask{1} << (m * p);
            for (Mask code = 0; code < limit; ++code) {
                for (int i = 0; i < m; ++i)
                    bip[i] = (code >> (i * p)) & ((bit(p - 1) << 1) - 1);
                if (!middle_ok(bip, m, p)) continue;
                // w_j with one bipartite neighbour and no triangles is really a
                // leaf; such labellings duplicate shapes with a larger s_i.
                std::vector<char> needs_triangle(p, 0);
                for (int j = 0; j < p; ++j) {
                    Mask nb = 0;
                    for (int i = 0; i < m; ++i)
                        if ((bip[i] >> j) & 1) nb |= bit(i);
                    needs_triangle[j] = popcount(nb) == 1;
                }
                for (int ssum = m; ssum <= rem; ++ssum) {
                    if ((rem - ssum) % 2) continue;
                    int tsum = (rem - ssum) / 2;
                    if (m == 1 && tsum == 0) continue;  // builds a star
                    std::vector<int> scur, tcur;
                    compositions(ssum, m, 1, scur, [&](const std::vector<int>& sv) {
                        compositions(tsum, p, 0, tcur, [&](const std::vector<int>& tv) {
                            for (int j = 0; j < p; ++j)
                                if (needs_triangle[j] && tv[j] == 0) return;
                            CwShape sh;
                            sh.m = m;
                            sh.p = p;
                            sh.s = sv;
                            sh.t = tv;
                            sh.bip = bip;
                            fn(sh);
                        });
                    });
                }
            }
        }
    }
}

}  // namespace cwhom
