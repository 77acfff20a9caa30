#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptg/field.hpp"
#include "ptg/geom.hpp"
#include "ptg/numeric.hpp"

namespace ptg {

/// An F_p-subspace of F_{q^2}, viewed as F_p^{2n} via the basis
/// {1, x, ..., x^{n-1}, v, xv, ..., x^{n-1}v}. Rows are the reduced
/// row-echelon basis, the unique canonical representative.
struct SubspaceBasis {
    std::vector<std::vector<int>> rows;  // each of length 2n, entries in [0, p)
    int dim() const { return static_cast<int>(rows.size()); }
};

/// Number of dim-n F_p-subspaces of F_p^{2n}: the Gaussian-binomial product
/// prod (p^{2n} - p^i) / prod (p^n - p^i), i = 0..n-1.
BigInt grassmannian_count(int p, int n);

/// All dim-r subspaces, each exactly once, in RREF-lex order.
std::vector<SubspaceBasis> enumerate_subspaces(const FieldTower& tw, int r,
                                               std::uint64_t budget = 1u << 22);

/// Coordinates of an element over F_p (a-digits then b-digits).
std::vector<int> elt_coords(const FieldTower& tw, Elt x);
Elt coords_elt(const FieldTower& tw, const std::vector<int>& coords);

/// All p^r elements spanned by the basis, sorted by element code.
std::vector<Elt> span_elements(const FieldTower& tw, const SubspaceBasis& v);

bool subspace_contains(const FieldTower& tw, const SubspaceBasis& v, Elt x);

/// Number of F_q*-cosets meeting V \ {0}: the minimum number of cosets
/// needed to cover it, since cosets partition F_{q^2}*.
int cover_number(const FieldTower& tw, const SubspaceBasis& v);

/// True iff V = cF_q for some c: size q and a single direction.
bool is_base_line(const FieldTower& tw, const SubspaceBasis& v);

/// RREF-lex-least size-q F_{p^t}-subspace that is not an F_q-line, for a
/// proper divisor t of n. Its cover number is at most (q-1)/(p^t-1).
SubspaceBasis subfield_witness(const FieldTower& tw, int t);

/// RREF row list in element digit encoding, ';'-joined.
std::string subspace_to_string(const FieldTower& tw, const SubspaceBasis& v);

/// All dim-n subspaces with their elements and direction bitmasks,
/// precomputed once per tower for the clique engine's subspace path.
/// Requires q + 1 <= 64.
struct SubspaceCatalog {
    std::vector<SubspaceBasis> bases;
    std::vector<std::vector<Elt>> elements;   // sorted, 0 included
    std::vector<std::uint64_t> dir_masks;     // bit d set iff direction d occurs
};

SubspaceCatalog build_subspace_catalog(const FieldTower& tw);

}  // namespace ptg
