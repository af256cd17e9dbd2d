#ifndef CWHOM_ORACLE_HPP
#define CWHOM_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cwhom/graph.hpp"

namespace cwhom {

/// Coefficient field for the homology ranks.  p = 0 marks field-independent
/// data (formula-derived invariants).
struct FieldDesc {
    std::uint32_t p = 2;

    static FieldDesc gf2() { return {2}; }
    static FieldDesc gfp(std::uint32_t p);
    static FieldDesc any() { return {0}; }

    std::string name() const;
    bool operator==(const FieldDesc&) const = default;
};

FieldDesc parse_field(const std::string& text);  // "gf2" | "gfp:P"

/// f-vector of the independence complex: f[0] = f_{-1} = 1,
/// f[i+1] = number of independent sets of size i+1.
struct FVector {
    std::vector<long long> f;
    int d = 0;  // Krull dimension of R/I(G)
};

FVector independence_fvector(const Graph& g);

struct HPolynomial {
    int d = 0;                 // Krull dimension
    std::vector<long long> h;  // h_0 .. h_s, h_s != 0
    int degh() const { return static_cast<int>(h.size()) - 1; }
};

HPolynomial h_polynomial(const FVector& fv);

struct BettiTable {
    int n = 0;
    FieldDesc field;
    std::map<std::pair<int, int>, long long> entries;  // (i, j) -> beta_{i,j}

    long long beta(int i, int j) const;
    int reg() const;
    int projective_dimension() const;
};

/// Full graded Betti table via Hochster's formula (2^n subset sweep, n <= 26).
BettiTable betti_table(const Graph& g, FieldDesc field);

struct InvariantBundle {
    int n = 0;
    int depth = 0;
    int reg = 0;
    int dim = 0;
    int degh = 0;
    FieldDesc field;
    bool operator==(const InvariantBundle&) const = default;
};

InvariantBundle oracle_invariants(const Graph& g, FieldDesc field);

}  // namespace cwhom

#endif
