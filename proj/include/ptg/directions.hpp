#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ptg/cliques.hpp"
#include "ptg/field.hpp"
#include "ptg/geom.hpp"

namespace ptg {

/// {(x, x^{(q+1)/2}) : x in F_q}: the extremal set determining exactly
/// (q+3)/2 directions.
PointSet megyesi_set(const FieldTower& tw);

struct DirectionCensus {
    std::map<int, std::uint64_t> histogram;  // |D(U)| -> number of sets
    std::uint64_t total = 0;
    int min_noncollinear = -1;               // min |D| over sets with |D| >= 2
    std::uint64_t extremal_count = 0;        // sets with |D| == (q+3)/2
    std::vector<PointSet> extremal_witnesses;
    bool sampled = false;
    std::uint64_t seed = 0;
};

/// Histogram of |D(U)| over all (exhaustive) or `samples` seeded random
/// s-point subsets of AG(2,q). Exhaustive mode refuses when C(q^2, s)
/// exceeds the budget.
DirectionCensus direction_census(const FieldTower& tw, int s, bool exhaustive,
                                 std::uint64_t budget = 200'000'000,
                                 std::uint64_t samples = 0, std::uint64_t seed = 0,
                                 std::size_t witness_cap = 1u << 20, int jobs = 1);

struct AffineMap {
    int m00, m01, m10, m11;  // GL_2(F_q) entries, F_q indices
    int wa, wb;              // translation
};

Elt apply_affine(const FieldTower& tw, const AffineMap& map, Elt pt);

/// A witness (M, w) with M*U1 + w = U2, or nullopt. Enumerates GL_2 and
/// solves the translation by anchoring the lex-least point of U1.
std::optional<AffineMap> affinely_equivalent(const FieldTower& tw, const PointSet& u1,
                                             const PointSet& u2,
                                             std::uint64_t budget = 1u << 28);

/// Conic X^2 + aY^2 + bZ^2 + cXY + dYZ + eZX = 0 (X^2 coefficient fixed at 1).
struct ConicCoeffs {
    int a, b, c, d, e;  // F_q indices
};

struct BadSetCandidate {
    DirectionSet dirs;  // size (q+1)/2
    ConicCoeffs source;
};

/// Points of the conic, as [X:Y:Z] triples of F_q indices (no
/// irreducibility check; conic_bad_candidate performs the rank test).
std::vector<std::array<int, 3>> conic_points(const FieldTower& tw, const ConicCoeffs& cc);

/// PG(1,q) minus the conic's projection onto the YZ line, when the conic is
/// irreducible and the complement has size exactly (q+1)/2.
std::optional<BadSetCandidate> conic_bad_candidate(const FieldTower& tw,
                                                   const ConicCoeffs& cc);

/// Deduplicated candidate superset of the bad direction sets, from the full
/// q^5 coefficient sweep; deterministic given the tower.
std::vector<BadSetCandidate> enumerate_bad_candidates(const FieldTower& tw,
                                                      std::uint64_t budget = 1u << 22);

/// Per-candidate search for an actual deficient maximal clique; returns one
/// flag per candidate.
std::vector<char> refine_bad_candidates(CliqueEngine& engine,
                                        const std::vector<BadSetCandidate>& cands);

}  // namespace ptg
