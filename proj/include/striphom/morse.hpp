// Discrete Morse machinery: the key-based total order on symbols, the
// gradient pairing (pair [f,g] iff f is the greatest face of g AND g is the
// least coface of f, both inside the subcomplex), closed-form criticality
// predicates, and the acyclicity audit.

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "striphom/report.hpp"
#include "striphom/symbol.hpp"

namespace striphom {

// Block i (0-based, i >= 1) is a follower if block i-1 is a singleton whose
// label is less than every label of block i.
bool is_follower(const Symbol& s, int i);

// Key of a symbol at level n: per block the pair
//   (0 if follower else n+1 - first label, block size),
// concatenated; compared lexicographically with zero padding.
struct Key {
    std::vector<std::pair<int, int>> entries;
    std::string str() const;
    bool operator==(const Key&) const = default;
};
Key key(const Symbol& s, int n);

// Total order: key-lexicographic (the ambient n cancels out of comparisons),
// ties broken by flattened label sequence, then block count. Works for
// symbols on any common label set.
std::strong_ordering symbol_compare(const Symbol& a, const Symbol& b);

inline bool precedes(const Symbol& a, const Symbol& b) {
    return symbol_compare(a, b) < 0;
}

struct SymbolLess {
    bool operator()(const Symbol& a, const Symbol& b) const { return precedes(a, b); }
};

enum class MatchKind { critical, paired_up, paired_down };

struct MatchState {
    MatchKind kind = MatchKind::critical;
    std::optional<Symbol> partner;  // coface if paired_up, face if paired_down
};

// Local evaluation of the gradient field at s (s must lie in spec).
MatchState match_state(const Symbol& s, const ComplexSpec& spec);

// Closed-form criticality predicate:
//   full, w <= 2:  consecutive singleton blocks decrease, and every
//                  descending 2-block is a follower;
//   descending:    consecutive singleton blocks decrease, and every
//                  non-singleton block has exactly w labels and is a follower.
// Throws for the full variant with w > 2 (no closed form is provided).
bool is_critical(const Symbol& s, const ComplexSpec& spec);

// All critical cells of the given dimension, in canonical order.
std::vector<Symbol> critical_cells(const ComplexSpec& spec, int dim);
// Count per dimension 0..max_dimension(spec).
std::vector<long long> critical_counts(const ComplexSpec& spec);

// Audits the gradient field: pairing is an involution, no cell is matched
// twice, match states agree with is_critical (where defined), and there is
// no closed V-walk (f_1,g_1),...,(f_r,g_r),f_{r+1}=f_1 with f_{i+1} a face
// of g_i other than f_i.
Report verify_acyclic(const ComplexSpec& spec);

}  // namespace striphom
