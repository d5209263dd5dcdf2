// The explicit integer basis of homology: every critical cell e factors into
// irreducible pieces (singleton / ascending pair / wheel = singleton followed
// by a descending block it dominates); z(e) concatenates the factors' cycles
// and reduce_to_basis writes any cycle in terms of the z(e), using gradient
// pairs to strip non-critical leading terms.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "striphom/chain.hpp"
#include "striphom/morse.hpp"
#include "striphom/symbol.hpp"

namespace striphom {

enum class FactorKind { singleton, pair, wheel };

struct Factor {
    FactorKind kind;
    std::vector<int> labels;  // ascending; wheel: min is the leading singleton
    int first_block = 0;      // position of the factor's first block in the symbol
    int block_span = 1;       // singleton/pair: 1, wheel: 2
};

struct BarrierFactorization {
    std::vector<Factor> factors;

    int barrier_count() const;
    // 1-based among the non-singleton factors
    const Factor& barrier(int k) const;
};

// Unique factorization of a critical cell. Throws for non-critical input.
BarrierFactorization factorize(const Symbol& e, const ComplexSpec& spec);

// The basis cycle of a critical cell e: concatenation over factors of
//   singleton u     ->  u
//   pair {a,b}      ->  a b + b a
//   wheel {u,...}   ->  boundary of the single descending block on all labels
// z(e) is a cycle, e is its greatest term, with coefficient ±1.
Chain z_cycle(const Symbol& e, const ComplexSpec& spec);

struct BasisCoordinates {
    ComplexSpec spec;
    int dim = -1;
    std::map<Symbol, coeff_t, SymbolLess> coords;

    bool operator==(const BasisCoordinates& o) const { return coords == o.coords; }
    bool is_zero() const { return coords.empty(); }
    // expansion sum coords[e] * z(e)
    Chain expand() const;
    std::string to_json() const;
};

// Writes a cycle as an integer combination of basis cycles: repeatedly cancel
// the greatest term, through z(m) when m is critical and through the boundary
// of m's partner when m is matched upward. A greatest term matched downward
// cannot occur for cycles and raises logic_error. Input must be a cycle
// supported on cells of spec.
BasisCoordinates reduce_to_basis(const Chain& c, const ComplexSpec& spec);

// True iff the two cycles represent the same homology class.
bool homologous(const Chain& a, const Chain& b, const ComplexSpec& spec);

}  // namespace striphom
