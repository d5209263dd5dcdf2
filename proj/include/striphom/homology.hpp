// Exact integer homology via Smith normal form. The SNF engine eliminates
// with ±1 pivots while any exist (sparse, fill-minimizing pivot choice) and
// finishes the residue with a classic dense SNF over arbitrary-precision
// integers, so ranks and torsion are exact at any intermediate size.

#pragma once

#include <vector>

#include "striphom/complex.hpp"
#include "striphom/report.hpp"

namespace striphom {

// Nonzero diagonal of the Smith normal form, each dividing the next.
std::vector<BigInt> smith_normal_form(const SparseIntMatrix& m);

// Exact rank (equals the rank over the rationals); skips divisor bookkeeping.
int matrix_rank(const SparseIntMatrix& m);

struct HomologySummary {
    // betti[j] and torsion[j] describe H_j for j = 0..max_dimension
    std::vector<long long> betti;
    std::vector<std::vector<BigInt>> torsion;
    std::vector<long long> cells;   // cells per dimension
    std::vector<long long> ranks;   // rank of boundary_j for j = 1..max_dimension+1
};

// want_torsion=false computes Betti numbers only (rank fast path).
HomologySummary homology(const ComplexSpec& spec, bool want_torsion = true);

// Cross-checks the Smith-normal-form homology against the discrete Morse
// data: betti_j == #critical j-cells, no torsion anywhere, and for the
// descending variant H_j = 0 whenever (w-1) does not divide j.
Report verify_morse_counts(const ComplexSpec& spec);

}  // namespace striphom
