#pragma once

#include <optional>
#include <vector>

#include "ptg/graph.hpp"
#include "ptg/subspace.hpp"

namespace ptg {

enum class SearchMethod { SubspacePath, GeneralSearch, CoveringShortcut };

struct EkrVerdict {
    bool holds = true;
    std::optional<std::vector<Elt>> witness;  // non-canonical maximum clique
    SearchMethod method = SearchMethod::GeneralSearch;
};

struct StVerdict {
    long k_num = 0, k_den = 1;
    int threshold = 0;  // ceil(q - k)
    bool holds = true;
    std::optional<std::vector<Elt>> witness;  // size >= threshold, non-collinear
};

/// Maximum-clique search and EKR / ST decisions for one tower. Caches the
/// dim-n subspace catalog, so reuse one engine across a census over the
/// same tower. Not thread-safe; use one engine per worker.
class CliqueEngine {
public:
    explicit CliqueEngine(const FieldTower& tower) : tower_(tower) {}

    const FieldTower& tower() const { return tower_; }

    /// All cliques of size q containing 0, sorted lexicographically.
    /// Uses the subspace path when m <= (q+1)/2 unless force_general is set;
    /// otherwise a bitset branch-and-bound over the neighborhood of 0.
    std::vector<std::vector<Elt>> max_cliques_through_zero(const PeisertGraph& g,
                                                           bool force_general = false);

    /// When verify is set, the covering shortcut and the subspace path are
    /// cross-checked against the general search.
    EkrVerdict strict_ekr(const PeisertGraph& g, bool verify = false);

    /// ST(k) for rational k = k_num / k_den >= 0: no clique of size
    /// >= ceil(q - k) determines two or more directions.
    StVerdict st_property(const PeisertGraph& g, long k_num, long k_den = 1);

    /// Extend a clique to size q by backtracking over common neighbors;
    /// nullopt when no size-q superset exists.
    std::optional<std::vector<Elt>> clique_extension_search(const PeisertGraph& g,
                                                            std::vector<Elt> c);

    /// Size of a maximum clique.
    int clique_number(const PeisertGraph& g);

    /// True iff some non-collinear clique of size q - j (1 <= j <= sqrt(q)/2)
    /// has no size-q extension: the search-side test behind bad-direction-set
    /// refinement.
    bool has_deficient_maximal_clique(const PeisertGraph& g);

    const SubspaceCatalog& catalog();

private:
    const FieldTower& tower_;
    std::optional<SubspaceCatalog> catalog_;
};

}  // namespace ptg
