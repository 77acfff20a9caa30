#pragma once

#include <string>
#include <vector>

#include "ptg/field.hpp"

namespace ptg {

/// A direction is a point of PG(1,q): code t in [0, q) for the class [1:t],
/// code q for infinity = [0:1].
/// A direction set is a sorted duplicate-free vector of codes; the numeric
/// order puts infinity last, matching the canonical text order.
using DirectionSet = std::vector<int>;

/// Affine points of AG(2,q) share the element encoding a + b*q; pi is the
/// identity on codes.
using PointSet = std::vector<Elt>;

struct GeomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// pi(a + b*v) = (a, b); a bijection onto AG(2,q) by construction.
inline Elt pi(const FieldTower&, Elt x) { return x; }

/// sigma((a,b)) = [a:b], normalized to slope-or-infinity. Throws on origin.
int sigma(const FieldTower& tw, Elt pt);

/// Direction of the line through two distinct affine points.
int direction_of_pair(const FieldTower& tw, Elt p1, Elt p2);

/// D(U): all directions determined by pairs of distinct points, |U| >= 2.
DirectionSet direction_set(const FieldTower& tw, const PointSet& u);

/// True iff |D(U)| <= 1 (sets of at most one point are collinear).
bool collinear(const FieldTower& tw, const PointSet& u);

std::string direction_to_string(const FieldTower& tw, int d);
int direction_from_string(const FieldTower& tw, const std::string& s);
std::string direction_set_to_string(const FieldTower& tw, const DirectionSet& ds);
DirectionSet direction_set_from_string(const FieldTower& tw, const std::string& s);

inline bool dirset_contains(const DirectionSet& ds, int d) {
    for (int x : ds)
        if (x == d) return true;
    return false;
}

/// Subset test on sorted direction sets.
bool dirset_subset(const DirectionSet& a, const DirectionSet& b);

}  // namespace ptg
