// Symbols: ordered set partitions of {1..n} with ordered block contents,
// written "1|9 6 4|7|5|8 3 2" (bars split blocks, spaces split labels).
// A symbol of level n with r blocks is a cell of dimension n - r.
//
// cell(n,w)  = symbols whose blocks have at most w labels ("full" variant);
// desc(n,w)  = additionally every block is strictly descending.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace striphom {

enum class Variant { full, descending };

struct ComplexSpec {
    int n = 0;
    int w = 0;
    Variant variant = Variant::full;

    void validate() const;  // throws std::invalid_argument
    std::string str() const;
};

class Symbol {
public:
    Symbol() = default;
    explicit Symbol(const std::vector<std::vector<int>>& blocks);

    // Structural parse: distinct positive labels, nonempty blocks.
    static Symbol parse(const std::string& text);
    // Full parse for level n: labels must be exactly {1..n}.
    static Symbol parse(const std::string& text, int n);

    int block_count() const { return static_cast<int>(ends_.size()); }
    int label_count() const { return static_cast<int>(labels_.size()); }
    std::span<const int> block(int i) const;
    int block_size(int i) const;
    // dimension = sum over blocks of (size - 1) = label_count - block_count
    int dimension() const { return label_count() - block_count(); }

    const std::vector<int>& labels() const { return labels_; }     // flattened
    const std::vector<int>& block_ends() const { return ends_; }   // cumulative

    bool block_is_descending(int i) const;
    int block_min(int i) const;

    std::string str() const;

    bool operator==(const Symbol&) const = default;

    // --- structure editing (used by boundary/coface/insertion machinery) ---

    // Replace block bi by two blocks: labels at positions selected by mask
    // (bit p = position p within the block), then the rest. Order preserved.
    Symbol split_block(int bi, unsigned mask) const;
    // Merge blocks bi and bi+1 into one block; mask selects which of the
    // merged positions are filled from block bi (in order), rest from bi+1.
    Symbol merge_blocks(int bi, unsigned mask) const;
    // Insert a new singleton block before block position pos (0..block_count).
    Symbol insert_singleton(int pos, int label) const;

private:
    std::vector<int> labels_;
    std::vector<int> ends_;

    void check() const;
};

std::size_t hash_value(const Symbol& s);

struct SymbolHash {
    std::size_t operator()(const Symbol& s) const { return hash_value(s); }
};

// True iff the labels of s are exactly {1..n}.
bool labels_are_full(const Symbol& s, int n);

// Membership in cell(n,w) / desc(n,w). Requires full label set {1..n}.
bool in_complex(const Symbol& s, const ComplexSpec& spec);

// All boundary faces with their ±1 coefficients under the pinned convention:
// splitting block B into B1|B2 contributes
// (-1)^{dim of the blocks left of B} * (-1)^{|B1|+1} * sign(sigma), sigma the
// position shuffle with B1.B2 = B∘sigma (graded Leibniz rule over the
// concatenation product). Faces of a cell in cell(n,w)/desc(n,w) stay inside.
std::vector<std::pair<Symbol, int>> signed_faces(const Symbol& s);

// Faces without coefficients (same order as signed_faces).
std::vector<Symbol> faces(const Symbol& s);

// Cofaces of s inside the subcomplex given by spec: merge two adjacent blocks
// by an order-preserving shuffle, keeping only results that lie in spec.
std::vector<Symbol> cofaces(const Symbol& s, const ComplexSpec& spec);

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

}  // namespace striphom
