// Cell enumeration and boundary matrices for cell(n,w) and desc(n,w).

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "striphom/morse.hpp"
#include "striphom/symbol.hpp"

namespace striphom {

using BigInt = boost::multiprecision::cpp_int;

// Largest cell dimension in the complex: n minus the least block count.
int max_dimension(const ComplexSpec& spec);

// Exact number of cells per dimension 0..max_dimension (closed-form DP,
// cross-checked against enumeration by tests).
std::vector<BigInt> cell_counts(const ComplexSpec& spec);
BigInt total_cell_count(const ComplexSpec& spec);

// Streams every cell of the given dimension (construction order, unsorted).
// Restartable: each call walks the full set again.
void for_each_cell(const ComplexSpec& spec, int dim,
                   const std::function<void(const Symbol&)>& fn);

// All cells of one dimension in canonical (total-order) sequence.
std::vector<Symbol> enumerate_cells(const ComplexSpec& spec, int dim);
// All cells, dimension-major then canonical.
std::vector<Symbol> enumerate_cells(const ComplexSpec& spec);

// Dense 0-based indexing of the cells of one dimension, canonical order.
class CellIndex {
public:
    CellIndex(const ComplexSpec& spec, int dim);

    int size() const { return static_cast<int>(cells_.size()); }
    int dim() const { return dim_; }
    const Symbol& symbol_at(int i) const { return cells_[static_cast<std::size_t>(i)]; }
    // -1 when absent
    int index_of(const Symbol& s) const;

private:
    int dim_;
    std::vector<Symbol> cells_;
    std::unordered_map<Symbol, int, SymbolHash> lookup_;
};

// Sparse integer matrix in coordinate form (0-based indices in memory;
// serialized 1-based).
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::tuple<int, int, std::int64_t>> entries;
};

// Matrix of the boundary map from j-cells to (j-1)-cells, columns indexed by
// j-cells and rows by (j-1)-cells in canonical order. For j above the top
// dimension the matrix has zero columns.
SparseIntMatrix boundary_matrix(const ComplexSpec& spec, int j);
SparseIntMatrix boundary_matrix(const ComplexSpec& spec, const CellIndex& rows,
                                const CellIndex& cols);

// "rows cols nnz" header then one "r c v" line per entry, 1-based, row-major.
std::string matrix_to_coo(const SparseIntMatrix& m);
// JSON variant: {"rows":..,"cols":..,"entries":[[r,c,v],..]} (1-based).
std::string matrix_to_json(const SparseIntMatrix& m);

}  // namespace striphom
