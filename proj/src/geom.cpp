#include "ptg/geom.hpp"

#include <algorithm>
#include <sstream>

namespace ptg {

int sigma(const FieldTower& tw, Elt pt) {
    if (pt == 0) throw GeomError("sigma: the origin has no direction");
    return tw.dir_of(pt);
}

int direction_of_pair(const FieldTower& tw, Elt p1, Elt p2) {
    if (p1 == p2) throw GeomError("direction_of_pair: equal points");
    return sigma(tw, tw.sub2(p1, p2));
}

DirectionSet direction_set(const FieldTower& tw, const PointSet& u) {
    if (u.size() < 2) throw GeomError("direction_set: need at least two points");
    std::vector<char> seen(tw.q() + 1, 0);
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i + 1; j < u.size(); ++j)
            seen[direction_of_pair(tw, u[i], u[j])] = 1;
    DirectionSet ds;
    for (int d = 0; d <= tw.q(); ++d)
        if (seen[d]) ds.push_back(d);
    return ds;
}

bool collinear(const FieldTower& tw, const PointSet& u) {
    if (u.size() <= 1) return true;
    return direction_set(tw, u).size() == 1;
}

std::string direction_to_string(const FieldTower& tw, int d) {
    if (d == tw.q()) return "inf";
    // base-p digits of t, little-endian, n digits
    std::string s;
    int t = d;
    for (int i = 0; i < tw.n(); ++i) {
        s += static_cast<char>('0' + t % tw.p());
        t /= tw.p();
    }
    return s;
}

int direction_from_string(const FieldTower& tw, const std::string& s) {
    if (s == "inf") return tw.q();
    if (static_cast<int>(s.size()) != tw.n())
        throw GeomError("bad direction: " + s);
    int t = 0;
    for (int i = tw.n() - 1; i >= 0; --i) {
        int dgt = s[i] - '0';
        if (dgt < 0 || dgt >= tw.p()) throw GeomError("bad direction: " + s);
        t = t * tw.p() + dgt;
    }
    return t;
}

std::string direction_set_to_string(const FieldTower& tw, const DirectionSet& ds) {
    std::ostringstream os;
    for (size_t i = 0; i < ds.size(); ++i) {
        if (i) os << ',';
        os << direction_to_string(tw, ds[i]);
    }
    return os.str();
}

DirectionSet direction_set_from_string(const FieldTower& tw, const std::string& s) {
    DirectionSet ds;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, ','))
        ds.push_back(direction_from_string(tw, part));
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

bool dirset_subset(const DirectionSet& a, const DirectionSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace ptg
