#include "ptg/graph.hpp"

#include <algorithm>
#include <sstream>

namespace ptg {

PeisertGraph::PeisertGraph(const FieldTower& tower, DirectionSet dirs)
    : tower_(tower), dirs_(std::move(dirs)) {
    std::sort(dirs_.begin(), dirs_.end());
    dirs_.erase(std::unique(dirs_.begin(), dirs_.end()), dirs_.end());
    if (dirs_.empty()) throw GraphError("empty direction set");
    if (static_cast<int>(dirs_.size()) > tower_.q())
        throw GraphError("too many directions: m must be <= q");
    for (int d : dirs_)
        if (d < 0 || d > tower_.q())
            throw GraphError("direction code out of range");
    dir_mask_.assign(tower_.q() + 1, 0);
    for (int d : dirs_) dir_mask_[d] = 1;
    // Coset expansion: S = union of c_d * F_q* over the chosen directions.
    in_s_.assign(tower_.q2(), 0);
    for (int d : dirs_) {
        Elt c = coset_rep(d);
        for (int lam = 1; lam < tower_.q(); ++lam)
            in_s_[tower_.mul2(c, tower_.elem(lam, 0))] = 1;
    }
}

Elt PeisertGraph::coset_rep(int d) const {
    return d == tower_.q() ? tower_.v() : tower_.elem(1, d);
}

std::vector<Elt> PeisertGraph::connection_set() const {
    std::vector<Elt> s;
    for (Elt x = 1; x < tower_.q2(); ++x)
        if (in_s_[x]) s.push_back(x);
    return s;
}

std::vector<std::vector<Elt>> PeisertGraph::canonical_cliques_through(Elt x) const {
    std::vector<std::vector<Elt>> out;
    for (int d : dirs_) {
        Elt c = coset_rep(d);
        std::vector<Elt> line;
        for (int lam = 0; lam < tower_.q(); ++lam)
            line.push_back(tower_.add2(x, tower_.mul2(c, tower_.elem(lam, 0))));
        std::sort(line.begin(), line.end());
        out.push_back(std::move(line));
    }
    return out;
}

bool PeisertGraph::is_clique(const std::vector<Elt>& c) const {
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j)
            if (!in_s_[tower_.sub2(c[i], c[j])]) return false;
    return true;
}

bool PeisertGraph::is_canonical(const std::vector<Elt>& c) const {
    if (static_cast<int>(c.size()) != tower_.q())
        throw GraphError("is_canonical: clique must have size q");
    std::vector<Elt> line;
    Elt delta = tower_.sub2(c[1], c[0]);
    for (int lam = 0; lam < tower_.q(); ++lam)
        line.push_back(tower_.add2(c[0], tower_.mul2(delta, tower_.elem(lam, 0))));
    std::sort(line.begin(), line.end());
    std::vector<Elt> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    return sorted == line;
}

std::optional<PeisertGraph::SrgParams> PeisertGraph::srg_parameters() const {
    int nv = tower_.q2();
    int degree = -1, lambda = -1, mu = -1;
    for (Elt x = 0; x < nv; ++x) {
        int deg = 0;
        for (Elt y = 0; y < nv; ++y)
            if (y != x && adjacent(x, y)) ++deg;
        if (degree < 0)
            degree = deg;
        else if (deg != degree)
            return std::nullopt;
    }
    for (Elt x = 0; x < nv; ++x) {
        for (Elt y = x + 1; y < nv; ++y) {
            int common = 0;
            for (Elt z = 0; z < nv; ++z)
                if (z != x && z != y && adjacent(x, z) && adjacent(y, z)) ++common;
            if (adjacent(x, y)) {
                if (lambda < 0)
                    lambda = common;
                else if (common != lambda)
                    return std::nullopt;
            } else {
                if (mu < 0)
                    mu = common;
                else if (common != mu)
                    return std::nullopt;
            }
        }
    }
    return SrgParams{nv, degree, lambda, mu};
}

std::string PeisertGraph::key() const {
    std::ostringstream os;
    os << "q=" << tower_.q() << ";D=" << direction_set_to_string(tower_, dirs_);
    return os.str();
}

int PeisertGraph::key_q(const std::string& key) {
    if (key.rfind("q=", 0) != 0) throw GraphError("bad graph key: " + key);
    size_t semi = key.find(';');
    if (semi == std::string::npos) throw GraphError("bad graph key: " + key);
    return std::stoi(key.substr(2, semi - 2));
}

PeisertGraph PeisertGraph::from_key(const FieldTower& tower, const std::string& key) {
    if (key_q(key) != tower.q()) throw GraphError("graph key q mismatch: " + key);
    size_t dpos = key.find(";D=");
    if (dpos == std::string::npos) throw GraphError("bad graph key: " + key);
    return PeisertGraph(tower, direction_set_from_string(tower, key.substr(dpos + 3)));
}

}  // namespace ptg
