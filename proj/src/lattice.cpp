#include "cwhom/lattice.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "cwhom/canonical.hpp"
#include "cwhom/parallel.hpp"

namespace cwhom {

LatticePointSet LatticePointSet::project(const std::vector<int>& coords,
                                         const std::string& new_kind) const {
    LatticePointSet out;
    out.kind = new_kind;
    out.n = n;
    out.arity = static_cast<int>(coords.size());
    out.field = field;
    for (const Point& p : points) {
        Point q;
        for (int c : coords) q.push_back(p.at(c));
        out.points.insert(q);
    }
    return out;
}

SetKind parse_set_kind(const std::string& name) {
    if (name == "c-minus") return SetKind::CMinus;
    if (name == "c-plus") return SetKind::CPlus;
    if (name == "cw2-dd") return SetKind::Cw2Dd;
    if (name == "cw-dd") return SetKind::CwDd;
    if (name == "cw-tuple4") return SetKind::CwTuple4;
    if (name == "rd") return SetKind::RD;
    throw std::invalid_argument("unknown set kind: " + name);
}

std::string set_kind_name(SetKind kind) {
    switch (kind) {
        case SetKind::CMinus: return "c-minus";
        case SetKind::CPlus: return "c-plus";
        case SetKind::Cw2Dd: return "cw2-dd";
        case SetKind::CwDd: return "cw-dd";
        case SetKind::CwTuple4: return "cw-tuple4";
        case SetKind::RD: return "rd";
    }
    throw std::logic_error("unreachable");
}

namespace {

std::set<Point> cw2_dd_points(int n) {
    std::set<Point> pts = {{2, n - 2}, {2, n - 3}};
    if (n % 2 == 1) pts.insert({2, (n - 1) / 2});
    return pts;
}

std::set<Point> cw_dd_points(int n) {
    std::set<Point> pts = cw2_dd_points(n);
    for (int b = 1; b <= n; ++b)
        if (3 * b > n && 2 * b < n) pts.insert({b, b});
    for (int a = 3; a <= (n - 1) / 2; ++a)
        for (int b = a + 1; b <= n - a; ++b)
            if (2 * b > n - a) pts.insert({a, b});
    return pts;
}

std::set<Point> cw_tuple4_points(int n) {
    std::set<Point> pts = {{2, 2, n - 2, n - 2}, {2, 2, n - 3, n - 3}};
    if (n % 2 == 1) {
        int b = (n - 1) / 2;
        pts.insert({2, b, b, b});
    }
    for (int a = 3; a <= (n - 1) / 2; ++a)
        for (int d = a; d <= (n - 1) / 2; ++d)
            if (n < a + 2 * d) pts.insert({a, d, d, d});
    for (int a = 3; a <= n; ++a)
        for (int d = a + 1; d <= n - a; ++d)
            if (n <= 2 * a + d - 1) pts.insert({a, a, d, d});
    for (int a = 3; a <= n; ++a)
        for (int r = a + 1; r <= n; ++r)
            for (int d = r + 1; d < n - r; ++d)
                if (n + 2 <= a + r + d) pts.insert({a, r, d, d});
    return pts;
}

}  // namespace

LatticePointSet closed_form_set(SetKind kind, int n) {
    bool cw = kind == SetKind::Cw2Dd || kind == SetKind::CwDd || kind == SetKind::CwTuple4;
    if (cw && n < 5)
        throw std::invalid_argument(set_kind_name(kind) + " needs n >= 5, got " + std::to_string(n));
    if (!cw && n < 3)
        throw std::invalid_argument(set_kind_name(kind) + " needs n >= 3, got " + std::to_string(n));
    LatticePointSet out;
    out.kind = set_kind_name(kind);
    out.n = n;
    out.arity = kind == SetKind::CwTuple4 ? 4 : 2;
    switch (kind) {
        case SetKind::CMinus:
            out.points.insert({1, n - 1});
            for (int a = 1; a <= n / 2; ++a)
                for (int b = a; b <= n - 2; ++b) out.points.insert({a, b});
            break;
        case SetKind::CPlus:
            for (int a = 1; a <= n - 1; ++a)
                for (int b = a; b <= n - 1; ++b) out.points.insert({a, b});
            break;
        case SetKind::Cw2Dd:
            out.points = cw2_dd_points(n);
            break;
        case SetKind::CwDd:
            out.points = cw_dd_points(n);
            break;
        case SetKind::CwTuple4:
            out.points = cw_tuple4_points(n);
            break;
        case SetKind::RD:
            for (int r = 2; r <= (n - 1) / 2; ++r)
                for (int d = std::max(r, -2 * r + n + 1); d <= n - r; ++d)
                    out.points.insert({r, d});
            break;
    }
    return out;
}

namespace {

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) out[i] = digits[v & 0xf];
    return out;
}

std::vector<Graph> load_source(int n, const std::string& source, std::string& digest_input) {
    digest_input = source;
    std::vector<Graph> graphs;
    if (source == "builtin") {
        graphs = connected_graphs(n);
        return graphs;
    }
    if (source.rfind("graph6:", 0) == 0) {
        std::string path = source.substr(7);
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot read graph6 source: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string content = buf.str();
        digest_input += "\n" + content;
        std::istringstream lines(content);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.empty()) continue;
            Graph g = parse_graph6(line);
            if (g.n() != n)
                throw std::runtime_error("graph6 source has a graph on " + std::to_string(g.n()) +
                                         " vertices, expected " + std::to_string(n));
            if (g.connected()) graphs.push_back(g);
        }
        return graphs;
    }
    throw std::invalid_argument("unknown source (want builtin or graph6:PATH): " + source);
}

}  // namespace

LatticePointSet enumerate_graph_pair_set(int n, const std::string& source, FieldDesc field,
                                         const std::string& cache_dir, int threads) {
    std::string digest_input;
    std::vector<Graph> graphs = load_source(n, source, digest_input);

    std::map<std::string, std::pair<int, int>> cached;
    std::string cache_path;
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        cache_path = cache_dir + "/pairs-n" + std::to_string(n) + "-" +
                     hex64(fnv1a(digest_input)) + "-" + field.name() + ".tsv";
        std::ifstream in(cache_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream row(line);
            std::string code;
            int depth, dim;
            if (!(row >> code >> depth >> dim))
                throw std::runtime_error("corrupt cache row in " + cache_path + ": " + line);
            cached[code] = {depth, dim};
        }
    }

    std::vector<std::string> codes(graphs.size());
    std::vector<std::pair<int, int>> pairs(graphs.size());
    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        codes[i] = emit_graph6(graphs[i]);
        auto it = cached.find(codes[i]);
        if (it != cached.end())
            pairs[i] = it->second;
        else
            missing.push_back(i);
    }

    std::mutex io;
    std::ofstream append;
    if (!cache_path.empty()) append.open(cache_path, std::ios::app);
    parallel_for(missing.size(), threads, [&](std::size_t k) {
        std::size_t i = missing[k];
        InvariantBundle b = oracle_invariants(graphs[i], field);
        pairs[i] = {b.depth, b.dim};
        if (append.is_open()) {
            std::lock_guard<std::mutex> lock(io);
            append << codes[i] << "\t" << b.depth << "\t" << b.dim << "\n" << std::flush;
        }
    });

    LatticePointSet out;
    out.kind = "graph-pairs";
    out.n = n;
    out.arity = 2;
    out.field = field.name();
    for (auto [depth, dim] : pairs) out.points.insert({depth, dim});
    return out;
}

CwSets enumerate_cw_sets(int n) {
    CwSets out;
    out.pairs.kind = "cw-pairs";
    out.tuples.kind = "cw-tuples";
    out.pairs.n = out.tuples.n = n;
    out.pairs.arity = 2;
    out.tuples.arity = 4;
    enumerate_cw_shapes(n, [&](const CwShape& shape) {
        InvariantBundle b = cw_invariants(shape);
        out.pairs.points.insert({b.depth, b.dim});
        out.tuples.points.insert({b.depth, b.reg, b.dim, b.degh});
    });
    return out;
}

WitnessTheorem parse_witness_theorem(const std::string& name) {
    if (name == "graph-pair") return WitnessTheorem::GraphPair;
    if (name == "cw-pair") return WitnessTheorem::CwPair;
    if (name == "cw-tuple") return WitnessTheorem::CwTuple;
    throw std::invalid_argument("unknown witness theorem: " + name);
}

namespace {

std::string point_str(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
    return out + ")";
}

Graph graph_pair_witness(int n, int a, int b) {
    if (a == 1 && b == n - 1) return construct_star(n);
    if (a + b <= n) {
        std::vector<int> s(a, 1);
        s[a - 1] = b - a + 1;
        Graph g = construct_Gms(a, s);
        Mask susp = 0;  // one leaf of each of v_1..v_{a-1}: an independent set
        for (int i = 0; i + 1 < a; ++i) susp |= bit(a + i);
        while (g.n() < n) g = s_suspension(g, susp);
        return g;
    }
    int m = n - b;  // here m >= 2 and a - 1 >= m - 1 >= 1
    int q = (a - 1) / (m - 1), t = (a - 1) % (m - 1);
    std::vector<int> s(m);
    for (int i = 0; i + 1 < m; ++i) s[i] = (i < m - 1 - t) ? q : q + 1;
    s[m - 1] = b - a + 1;
    return construct_Gms(m, s);
}

CwShape complete_bip_shape(int m, int p, std::vector<int> s, std::vector<int> t) {
    CwShape sh;
    sh.m = m;
    sh.p = p;
    sh.s = std::move(s);
    sh.t = std::move(t);
    sh.bip.assign(m, (bit(p - 1) << 1) - 1);
    return sh;
}

CwShape cw_pair_shape(int n, int a, int b) {
    if (a == 2) {
        if (b == n - 2) return shape_e1(1, 1, b - 2);
        if (b == n - 3) return shape_e2(b - 1);
        return n == 5 ? shape_e2(1) : shape_e3(b - 1);  // odd n, b = (n-1)/2
    }
    if (a == b) return shape_G1(3 * b - n, n - 2 * b, 1);
    if (2 * b < n) return shape_G1(a + 2 * b - n, n - 2 * b, b - a + 1);
    if (b < n - a) return shape_G2(a - 1, 2 * b + 1 - n, n - a - b);
    // b = n - a
    std::vector<int> s(a, 1);
    s[a - 1] = b - a;
    return complete_bip_shape(a, 1, std::move(s), {0});
}

CwShape cw_tuple_shape(int n, int a, int r, int d) {
    if (a == 2) {
        if (r == 2 && d == n - 2) return shape_e1(1, 1, d - 2);
        if (r == 2 && d == n - 3) return shape_e2(d - 1);
        return n == 5 ? shape_e2(1) : shape_e3(d - 1);  // odd n, r = d = (n-1)/2
    }
    if (r == d) return shape_G1(a + 2 * d - n, n - 2 * d, d - a + 1);
    if (a == r) {
        if (d < n - a) {
            int m = 2 * a + d - n, p = n - a - d;
            std::vector<int> s(m, 1);
            s[m - 1] = d - a + 1;
            return complete_bip_shape(m, p, std::move(s), std::vector<int>(p, 1));
        }
        // d = n - a
        return complete_bip_shape(a, d - a, std::vector<int>(a, 1),
                                  std::vector<int>(d - a, 0));
    }
    // a < r < d: non-complete bipartite middles
    int p = n - d - r + 1;
    std::vector<int> t(p, 1);
    t[p - 1] = 0;
    CwShape sh;
    sh.p = p;
    if (n >= a + 2 * r) {
        sh.m = 2;
        sh.s = {a + r + d - n - 1, n - a - 2 * r + 2};
        t[0] = 2 * r + d - n - 1;
        sh.bip = {(bit(p - 1) << 1) - 1, bit(p - 1)};  // v_1 to all w, v_2 to w_p
    } else {
        sh.m = a + 2 * r + 1 - n;
        sh.s.assign(sh.m, 1);
        sh.s[0] = d - r;
        t[0] = d - a;
        sh.bip.assign(sh.m, bit(p - 1));  // v_2..v_m to w_p only
        sh.bip[0] = (bit(p - 1) << 1) - 1;
    }
    sh.t = std::move(t);
    return sh;
}

}  // namespace

Graph witness_for_point(WitnessTheorem theorem, int n, const Point& point) {
    if (theorem == WitnessTheorem::GraphPair) {
        if (point.size() != 2) throw std::invalid_argument("graph-pair point needs arity 2");
        if (!closed_form_set(SetKind::CMinus, n).contains(point))
            throw std::invalid_argument("point " + point_str(point) + " is not in c-minus(" +
                                        std::to_string(n) + ")");
        if (n > 12)
            throw std::invalid_argument("graph-pair witnesses are oracle-verified, n <= 12 only");
        Graph g = graph_pair_witness(n, point[0], point[1]);
        InvariantBundle b = oracle_invariants(g, FieldDesc::gf2());
        if (g.n() != n || b.depth != point[0] || b.dim != point[1])
            throw std::logic_error("witness verification failed for graph-pair point " +
                                   point_str(point) + " at n=" + std::to_string(n) + ": got (" +
                                   std::to_string(b.depth) + "," + std::to_string(b.dim) + ")");
        return g;
    }

    SetKind kind = theorem == WitnessTheorem::CwPair ? SetKind::CwDd : SetKind::CwTuple4;
    if (!closed_form_set(kind, n).contains(point))
        throw std::invalid_argument("point " + point_str(point) + " is not in " +
                                    set_kind_name(kind) + "(" + std::to_string(n) + ")");
    CwShape shape = theorem == WitnessTheorem::CwPair
                        ? cw_pair_shape(n, point[0], point[1])
                        : cw_tuple_shape(n, point[0], point[1], point[2]);
    InvariantBundle b = cw_invariants(shape);
    Point got = theorem == WitnessTheorem::CwPair ? Point{b.depth, b.dim}
                                                  : Point{b.depth, b.reg, b.dim, b.degh};
    if (b.n != n || got != point)
        throw std::logic_error("witness verification failed for " + set_kind_name(kind) +
                               " point " + point_str(point) + " at n=" + std::to_string(n) +
                               ": built " + shape_literal(shape) + " with invariants " +
                               point_str(got));
    return build_cw(shape);
}

ConvexityReport is_convex(const LatticePointSet& set) {
    if (set.arity != 2) throw std::invalid_argument("convexity is defined for arity-2 sets");
    std::map<int, std::vector<int>> cols, rows;
    for (const Point& p : set.points) {
        cols[p[0]].push_back(p[1]);
        rows[p[1]].push_back(p[0]);
    }
    ConvexityReport rep;
    for (auto& [a, bs] : cols)
        for (std::size_t i = 0; i + 1 < bs.size(); ++i)
            if (bs[i + 1] > bs[i] + 1) {
                rep.convex = false;
                rep.p1 = {a, bs[i]};
                rep.p2 = {a, bs[i + 1]};
                rep.missing = {a, bs[i] + 1};
                return rep;
            }
    for (auto& [b, as] : rows)
        for (std::size_t i = 0; i + 1 < as.size(); ++i)
            if (as[i + 1] > as[i] + 1) {
                rep.convex = false;
                rep.p1 = {as[i], b};
                rep.p2 = {as[i + 1], b};
                rep.missing = {as[i] + 1, b};
                return rep;
            }
    return rep;
}

std::vector<std::string> audit_inequalities(const InvariantBundle& b, bool cw) {
    std::vector<std::string> out;
    if (b.degh - b.reg > b.dim - b.depth) out.push_back("degh - reg <= dim - depth");
    if (b.reg + b.degh > b.n) out.push_back("reg + degh <= n");
    if (!cw) return out;
    if (!(2 <= b.depth && b.depth <= (b.n - 1) / 2)) out.push_back("2 <= depth <= floor((n-1)/2)");
    if (b.depth + b.dim > b.n) out.push_back("depth + dim <= n");
    if (!(b.n < b.depth + 2 * b.dim)) out.push_back("n < depth + 2 dim");
    if (!(b.depth <= b.reg && b.reg <= b.dim && b.dim == b.degh))
        out.push_back("depth <= reg <= dim = degh");
    if (b.depth + b.reg + b.dim < b.n + 1) out.push_back("n + 1 <= depth + reg + dim");
    return out;
}

std::string set_to_tsv(const LatticePointSet& set) {
    std::ostringstream out;
    out << "# " << set.kind << " " << set.n << " " << set.arity << " " << set.field << "\n";
    for (const Point& p : set.points) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "\t" : "") << p[i];
        out << "\n";
    }
    return out.str();
}

LatticePointSet set_from_tsv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.size() < 2 || line[0] != '#')
        throw std::invalid_argument("set file: missing '# kind n arity field' header");
    std::istringstream header(line.substr(1));
    LatticePointSet set;
    if (!(header >> set.kind >> set.n >> set.arity >> set.field))
        throw std::invalid_argument("set file: malformed header: " + line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        Point p;
        int v;
        while (row >> v) p.push_back(v);
        if (static_cast<int>(p.size()) != set.arity)
            throw std::invalid_argument("set file: row arity mismatch: " + line);
        set.points.insert(p);
    }
    return set;
}

std::string diff_sets(const LatticePointSet& a, const LatticePointSet& b) {
    std::set<Point> all(a.points);
    all.insert(b.points.begin(), b.points.end());
    std::ostringstream out;
    for (const Point& p : all) {
        bool in_a = a.contains(p), in_b = b.contains(p);
        if (in_a == in_b) continue;
        out << (in_b ? "+" : "-");
        for (int v : p) out << "\t" << v;
        out << "\n";
    }
    return out.str();
}

std::string emit_scatter_svg(const LatticePointSet& set) {
    if (set.arity != 2)
        throw std::invalid_argument("scatter plot needs an arity-2 set; project first");
    int xmax = 1, ymax = 1;
    for (const Point& p : set.points) {
        xmax = std::max(xmax, p[0]);
        ymax = std::max(ymax, p[1]);
    }
    const int cell = 24, margin = 48;
    int width = 2 * margin + cell * xmax;
    int height = 2 * margin + cell * ymax;
    auto px = [&](int x) { return margin + cell * (x - 1) + cell / 2; };
    auto py = [&](int y) { return height - margin - cell * (y - 1) - cell / 2; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    for (int x = 1; x <= xmax; ++x)
        out << "  <line x1=\"" << px(x) << "\" y1=\"" << py(1) << "\" x2=\"" << px(x)
            << "\" y2=\"" << py(ymax) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    for (int y = 1; y <= ymax; ++y)
        out << "  <line x1=\"" << px(1) << "\" y1=\"" << py(y) << "\" x2=\"" << px(xmax)
            << "\" y2=\"" << py(y) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    for (int x = 1; x <= xmax; ++x)
        out << "  <text x=\"" << px(x) << "\" y=\"" << height - margin + 20
            << "\" font-size=\"12\" text-anchor=\"middle\">" << x << "</text>\n";
    for (int y = 1; y <= ymax; ++y)
        out << "  <text x=\"" << margin - 12 << "\" y=\"" << py(y) + 4
            << "\" font-size=\"12\" text-anchor=\"end\">" << y << "</text>\n";
    out << "  <text x=\"" << width / 2 << "\" y=\"" << height - 8
        << "\" font-size=\"14\" text-anchor=\"middle\">depth</text>\n";
    out << "  <text x=\"14\" y=\"" << height / 2
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 14 " << height / 2
        << ")\">dim</text>\n";
    for (const Point& p : set.points)
        out << "  <circle cx=\"" << px(p[0]) << "\" cy=\"" << py(p[1])
            << "\" r=\"5\" fill=\"black\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace cwhom
