// Integer chains: finite Z-linear combinations of symbols of one dimension
// on one common label set, stored in canonical (total-order) term order.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "striphom/morse.hpp"
#include "striphom/symbol.hpp"

namespace striphom {

using coeff_t = std::int64_t;

class Chain {
public:
    using Terms = std::map<Symbol, coeff_t, SymbolLess>;

    Chain() = default;
    static Chain unit(const Symbol& s, coeff_t c = 1);

    // Adds c * s, folding and dropping zeros. Enforces the invariants:
    // every term has the same dimension and the same label set.
    void add(const Symbol& s, coeff_t c);

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    coeff_t coeff(const Symbol& s) const;
    const Terms& terms() const { return terms_; }

    // Greatest term in the canonical total order. Chain must be nonempty.
    const Symbol& maximum() const;

    int dimension() const;                  // -1 for the zero chain
    std::vector<int> label_set() const;     // sorted; empty for the zero chain

    Chain& operator+=(const Chain& o);
    Chain& operator-=(const Chain& o);
    Chain& operator*=(coeff_t c);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(coeff_t c, Chain a) { return a *= c; }

    bool operator==(const Chain&) const = default;

    std::string str() const;

private:
    Terms terms_;
};

// Boundary under the pinned sign convention; empty for 0-dimensional input.
Chain boundary(const Symbol& s);
Chain boundary(const Chain& c);

// Relabel by an injective map given on (at least) the labels present.
Symbol relabel(const Symbol& s, const std::function<int(int)>& phi);
Chain relabel(const Chain& c, const std::function<int(int)>& phi);
// Permutation convenience: label v -> sigma[v-1], sigma a permutation of 1..n.
Chain relabel(const Chain& c, const std::vector<int>& sigma);

// Concatenation of symbols/chains on disjoint label sets (bilinear).
Symbol concat(const Symbol& a, const Symbol& b);
Chain concat(const Chain& a, const Chain& b);

// Projection onto descending blocks: sorts each block descending and
// multiplies the coefficient by the sign of each block's sorting permutation.
// Chain map from cell(n,w) chains onto desc(n,w) chains; identity on the
// latter.
std::pair<Symbol, int> desc_project(const Symbol& s);
Chain desc_project(const Chain& c);

// Structured-text (JSON) chain files: {"n": .., "dim": .., "terms":
// [{"symbol": "..", "coeff": ..}, ..]}.
std::string chain_to_json(const Chain& c, int n);
Chain chain_from_json(const std::string& text, int* n_out = nullptr);

}  // namespace striphom
