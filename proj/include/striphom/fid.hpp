// FI_d-module structure on homology: morphisms (injection + coloring of the
// missed targets), their unique factorization into high insertions followed
// by a permutation, the induced actions on basis coordinates, and the
// verification sweeps (naturality, insertion order, functoriality, finite
// generation, barrier behavior).

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "striphom/basis.hpp"
#include "striphom/report.hpp"
#include "striphom/symbol.hpp"

namespace striphom {

struct FIdMorphism {
    int n = 0;  // source level
    int m = 0;  // target level
    int d = 1;  // number of colors
    std::vector<int> phi;      // images of 1..n, injective into 1..m
    std::map<int, int> colors;  // on [m] \ phi([n]), values in 0..d-1

    void validate() const;
    std::string str() const;  // "n=..;m=..;phi=..;colors=k:v,..;d=.."
    static FIdMorphism parse(const std::string& text);

    bool operator==(const FIdMorphism&) const = default;
};

FIdMorphism identity_morphism(int n, int d);

// compose(second, first): first then second; color counts must agree.
FIdMorphism compose(const FIdMorphism& second, const FIdMorphism& first);

// phi = sigma ∘ i^(m-n) with sigma order-preserving off the image: sigma acts
// as phi on 1..n and sends n+1..m to the missed targets in increasing order;
// colors[i] is the color of the (i+1)-th inserted element.
struct Decomposition {
    std::vector<int> sigma;   // permutation of 1..m
    std::vector<int> colors;  // length m-n
};
Decomposition decompose(const FIdMorphism& mor);
FIdMorphism recompose(const Decomposition& dec, int n, int d);

// A homology class in basis coordinates, tagged with the color count of the
// FI_d-module it lives in (d = dim+1 for the full variant, dim/(w-1)+1 for
// the descending variant).
struct HomologyClass {
    ComplexSpec spec;
    int dim = 0;
    int d = 1;
    std::map<Symbol, coeff_t, SymbolLess> coords;

    bool same_coords(const HomologyClass& o) const { return coords == o.coords; }
};

int color_count(const ComplexSpec& spec, int dim);
HomologyClass unit_class(const Symbol& e, const ComplexSpec& spec);
HomologyClass from_coordinates(const BasisCoordinates& bc);

// Permutation action: relabel each basis cycle, project (descending variant),
// reduce back to coordinates. sigma is a permutation of 1..n as an image list.
HomologyClass act_perm(const HomologyClass& h, const std::vector<int>& sigma);

// High insertion i_k, 0 <= k < d: adds the new greatest label n+1 as a
// singleton block just after the k-th barrier (in front for k = 0), sending
// basis elements to basis elements.
HomologyClass act_insert(const HomologyClass& h, int k);

// Full action of a morphism: insertions for the decomposition's colors in
// order, then the permutation part.
HomologyClass act(const HomologyClass& h, const FIdMorphism& mor);

// [i_k][sigma] = [sigma~][i_k] for every critical cell, permutation, color
// (sigma~ fixes n+1). Exhaustive over S_n.
Report check_commute(const ComplexSpec& spec, int dim);

// [(n+1 n+2)][i_k][i_l] = [i_l][i_k] for every critical cell and color pair.
Report check_unordered(const ComplexSpec& spec, int dim);

// act(h, compose(m2, m1)) == act(act(h, m1), m2) on random composable pairs.
Report check_functoriality(const ComplexSpec& spec, int dim, int pairs, std::uint64_t seed);

// Images of the generator classes (levels <= 3*dim for the full variant; the
// all-barrier level b(w+1) for the descending variant) span the integer
// lattice of H_dim at every level up to max_level, with every elementary
// divisor 1.
Report check_generation(Variant variant, int w, int dim, int max_level);

// The three barrier properties: permutation actions preserve barrier counts,
// a free singleton passes around a barrier-free cycle, and critical cells
// concatenate after a trailing barrier.
Report check_barriers(const ComplexSpec& spec, int dim);

}  // namespace striphom
