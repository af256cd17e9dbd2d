#include "cwhom/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cwhom {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

FieldDesc FieldDesc::gfp(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("GF(p) needs a prime p, got " + std::to_string(p));
    return {p};
}

std::string FieldDesc::name() const {
    if (p == 0) return "any";
    if (p == 2) return "gf2";
    return "gfp:" + std::to_string(p);
}

FieldDesc parse_field(const std::string& text) {
    if (text == "gf2") return FieldDesc::gf2();
    if (text.rfind("gfp:", 0) == 0) return FieldDesc::gfp(std::stoul(text.substr(4)));
    throw std::invalid_argument("unknown field descriptor: " + text);
}

namespace {

void independent_sets_rec(const Graph& g, Mask avail, Mask cur, std::vector<Mask>& out) {
    out.push_back(cur);
    while (avail) {
        int v = lowest_bit(avail);
        avail &= avail - 1;
        independent_sets_rec(g, avail & ~g.adj(v), cur | bit(v), out);
    }
}

/// All independent sets of g, the empty set included.
std::vector<Mask> independent_sets(const Graph& g) {
    std::vector<Mask> out;
    independent_sets_rec(g, g.vertex_mask(), 0, out);
    return out;
}

}  // namespace

FVector independence_fvector(const Graph& g) {
    FVector fv;
    int d = g.edge_count() == 0 ? g.n() : independence_number(g);
    fv.d = d;
    fv.f.assign(d + 1, 0);
    for (Mask s : independent_sets(g)) ++fv.f[popcount(s)];
    return fv;
}

HPolynomial h_polynomial(const FVector& fv) {
    int d = fv.d;
    // h(t) = sum_i f_{i-1} t^i (1-t)^{d-i}, exact integer arithmetic
    std::vector<long long> h(d + 1, 0);
    std::vector<long long> binom(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        // (1-t)^{d-i} expansion
        binom.assign(d - i + 1, 0);
        binom[0] = 1;
        for (int row = 1; row <= d - i; ++row)
            for (int k = row; k >= 1; --k) binom[k] += binom[k - 1];
        for (int k = 0; k <= d - i; ++k) {
            long long coeff = binom[k] * ((k % 2) ? -1 : 1);
            h[i + k] += fv.f[i] * coeff;
        }
    }
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    HPolynomial out;
    out.d = d;
    out.h = std::move(h);
    if (out.h[0] != 1) throw std::logic_error("h-polynomial must have h_0 = 1");
    long long at_one = 0;
    for (long long c : out.h) at_one += c;
    if (at_one <= 0) throw std::logic_error("h(1) must be positive for a nonempty complex");
    return out;
}

long long BettiTable::beta(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

int BettiTable::reg() const {
    int r = 0;
    for (auto& [ij, b] : entries)
        if (b) r = std::max(r, ij.second - ij.first);
    return r;
}

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (auto& [ij, b] : entries)
        if (b) pd = std::max(pd, ij.first);
    return pd;
}

namespace {

int rank_gf2(std::vector<std::vector<std::uint64_t>>& rows) {
    int rank = 0;
    std::size_t nrows = rows.size();
    if (nrows == 0) return 0;
    std::size_t words = rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t w = 0; w < words && pivot_row < nrows; ++w) {
        for (int b = 0; b < 64 && pivot_row < nrows; ++b) {
            std::uint64_t mask = std::uint64_t{1} << b;
            std::size_t sel = nrows;
            for (std::size_t r = pivot_row; r < nrows; ++r)
                if (rows[r][w] & mask) {
                    sel = r;
                    break;
                }
            if (sel == nrows) continue;
            std::swap(rows[pivot_row], rows[sel]);
            for (std::size_t r = 0; r < nrows; ++r)
                if (r != pivot_row && (rows[r][w] & mask))
                    for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[pivot_row][k];
            ++pivot_row;
            ++rank;
        }
    }
    return rank;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

int rank_gfp(std::vector<std::vector<std::int64_t>>& rows, std::uint64_t p) {
    int rank = 0;
    std::size_t nrows = rows.size();
    if (nrows == 0) return 0;
    std::size_t ncols = rows[0].size();
    std::size_t pr = 0;
    for (std::size_t c = 0; c < ncols && pr < nrows; ++c) {
        std::size_t sel = nrows;
        for (std::size_t r = pr; r < nrows; ++r)
            if (rows[r][c] % static_cast<std::int64_t>(p) != 0) {
                sel = r;
                break;
            }
        if (sel == nrows) continue;
        std::swap(rows[pr], rows[sel]);
        std::uint64_t lead = static_cast<std::uint64_t>(((rows[pr][c] % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
        std::uint64_t inv = pow_mod(lead, p - 2, p);
        for (std::size_t k = c; k < ncols; ++k) {
            std::uint64_t v = static_cast<std::uint64_t>(((rows[pr][k] % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
            rows[pr][k] = static_cast<std::int64_t>(v * inv % p);
        }
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == pr) continue;
            std::int64_t factor = ((rows[r][c] % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p);
            if (!factor) continue;
            for (std::size_t k = c; k < ncols; ++k) {
                rows[r][k] = ((rows[r][k] - factor * rows[pr][k]) % static_cast<std::int64_t>(p) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p);
            }
        }
        ++pr;
        ++rank;
    }
    return rank;
}

/// Rank of the boundary map from k-faces to (k-1)-faces of the listed faces.
int boundary_rank(const std::vector<Mask>& kfaces, const std::vector<Mask>& lower, FieldDesc field) {
    if (kfaces.empty() || lower.empty()) return 0;
    std::unordered_map<Mask, int> col;
    col.reserve(lower.size());
    for (std::size_t i = 0; i < lower.size(); ++i) col[lower[i]] = static_cast<int>(i);
    if (field.p == 2) {
        std::size_t words = (lower.size() + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(kfaces.size(),
                                                     std::vector<std::uint64_t>(words, 0));
        for (std::size_t r = 0; r < kfaces.size(); ++r) {
            Mask f = kfaces[r];
            Mask m = f;
            while (m) {
                int v = lowest_bit(m);
                m &= m - 1;
                int c = col.at(f & ~bit(v));
                rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
            }
        }
        return rank_gf2(rows);
    }
    std::vector<std::vector<std::int64_t>> rows(kfaces.size(),
                                                std::vector<std::int64_t>(lower.size(), 0));
    for (std::size_t r = 0; r < kfaces.size(); ++r) {
        Mask f = kfaces[r];
        int idx = 0, sign = 1;
        Mask m = f;
        while (m) {
            int v = lowest_bit(m);
            m &= m - 1;
            rows[r][col.at(f & ~bit(v))] = sign;
            sign = -sign;
            ++idx;
        }
    }
    return rank_gfp(rows, field.p);
}

}  // namespace

BettiTable betti_table(const Graph& g, FieldDesc field) {
    int n = g.n();
    if (n > 26) throw std::invalid_argument("betti_table subset sweep limited to n <= 26");
    if (field.p == 0 || !is_prime(field.p))
        throw std::invalid_argument("betti_table needs a prime field, got " + field.name());
    BettiTable table;
    table.n = n;
    table.field = field;
    table.entries[{0, 0}] = 1;  // W = empty set
    if (g.edge_count() == 0) return table;

    // Faces of the full independence complex, grouped by cardinality.
    std::vector<std::vector<Mask>> by_size(n + 1);
    for (Mask s : independent_sets(g))
        if (s) by_size[popcount(s)].push_back(s);

    std::vector<std::vector<Mask>> faces(n + 1);
    for (Mask w = 1; w <= g.vertex_mask(); ++w) {
        int j = popcount(w);
        for (int sz = 1; sz <= j; ++sz) {
            faces[sz].clear();
            for (Mask f : by_size[sz])
                if ((f & ~w) == 0) faces[sz].push_back(f);
        }
        int maxcard = j;
        while (maxcard > 1 && faces[maxcard].empty()) --maxcard;
        // rank[k] = rank of the boundary map C_k -> C_{k-1}, where C_k holds
        // the faces of cardinality k+1 and C_{-1} is spanned by the empty face.
        std::vector<int> rank(maxcard + 1, 0);
        rank[0] = faces[1].empty() ? 0 : 1;
        for (int k = 1; k < maxcard; ++k) rank[k] = boundary_rank(faces[k + 1], faces[k], field);
        long long euler = -1, homology_euler = 0;
        for (int k = 0; k < maxcard; ++k) {
            long long ck = static_cast<long long>(faces[k + 1].size());
            long long up = (k + 1 < maxcard) ? rank[k + 1] : 0;
            long long hk = ck - rank[k] - up;
            if (hk < 0) throw std::logic_error("negative homology rank");
            euler += (k % 2 ? -ck : ck);
            homology_euler += (k % 2 ? -hk : hk);
            if (hk) table.entries[{j - k - 1, j}] += hk;
        }
        if (euler != homology_euler)
            throw std::logic_error("Euler characteristic mismatch in Hochster sweep");
    }
    return table;
}

InvariantBundle oracle_invariants(const Graph& g, FieldDesc field) {
    InvariantBundle b;
    b.n = g.n();
    b.field = field;
    if (g.edge_count() == 0) {
        // I(G) = (0): the whole polynomial ring
        b.depth = b.dim = g.n();
        b.reg = 0;
        b.degh = 0;
        return b;
    }
    BettiTable table = betti_table(g, field);
    b.dim = independence_number(g);
    b.depth = g.n() - table.projective_dimension();
    b.reg = table.reg();
    b.degh = h_polynomial(independence_fvector(g)).degh();
    return b;
}

}  // namespace cwhom
