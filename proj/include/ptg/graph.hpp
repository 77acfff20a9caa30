#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptg/field.hpp"
#include "ptg/geom.hpp"

namespace ptg {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Peisert-type graph of type (m, q), represented projectively by its
/// direction set: Cay(F_{q^2}^+, S) where S is the union of the m
/// F_q*-cosets indexed by the directions. S = -S automatically.
class PeisertGraph {
public:
    PeisertGraph(const FieldTower& tower, DirectionSet dirs);

    const FieldTower& tower() const { return tower_; }
    const DirectionSet& dirs() const { return dirs_; }
    int m() const { return static_cast<int>(dirs_.size()); }
    bool has_dir(int d) const { return dir_mask_[d] != 0; }

    /// Membership in the connection set, materialized as an explicit coset
    /// expansion at construction (kept independent of the direction test).
    bool in_connection_set(Elt s) const { return s != 0 && in_s_[s] != 0; }

    bool adjacent(Elt x, Elt y) const {
        if (x == y) throw GraphError("adjacent: self-loop query");
        return in_s_[tower_.sub2(x, y)] != 0;
    }

    std::vector<Elt> connection_set() const;

    /// A representative c with sigma(pi(c)) = d: c = 1 + t*v, or v for infinity.
    Elt coset_rep(int d) const;

    /// The m canonical cliques x + cF_q through x, each of size q.
    std::vector<std::vector<Elt>> canonical_cliques_through(Elt x) const;

    /// C - C subset of S union {0}, checked via the materialized S.
    bool is_clique(const std::vector<Elt>& c) const;

    /// For |C| = q: true iff C is a full affine line (structural test:
    /// C equals the line through its first two elements).
    bool is_canonical(const std::vector<Elt>& c) const;

    struct SrgParams {
        int vertices, degree, lambda, mu;
    };
    /// Exact common-neighbor counting over all pairs; nullopt if the counts
    /// are not constant.
    std::optional<SrgParams> srg_parameters() const;

    /// Canonical census identifier "q=<q>;D=<dirs>".
    std::string key() const;

    static PeisertGraph from_key(const FieldTower& tower, const std::string& key);
    /// Parse the q of a key without a tower.
    static int key_q(const std::string& key);

private:
    const FieldTower& tower_;
    DirectionSet dirs_;
    std::vector<char> dir_mask_;
    std::vector<char> in_s_;
};

}  // namespace ptg
