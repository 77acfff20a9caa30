#include "ptg/cliques.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace ptg {

namespace {

// Fixed-width bitset over the vertex range of one induced subgraph.
struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(int words = 0) : w(words, 0) {}
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    int first() const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k]) return static_cast<int>(k * 64 + __builtin_ctzll(w[k]));
        return -1;
    }
    void and_with(const Bits& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] &= o.w[k];
    }
    void and_not(const Bits& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] &= ~o.w[k];
    }
};

// Branch-and-bound clique machinery on the subgraph induced by `verts`,
// with greedy-coloring bounds. Scratch buffers are preallocated per depth;
// the hot loops stay allocation-free.
class BitGraph {
public:
    // Emitted once per clique of the requested size; `extendable` reports
    // whether some further vertex is adjacent to the whole clique.
    using Visit = std::function<bool(const std::vector<int>&, bool extendable)>;

    BitGraph(const PeisertGraph& g, const std::vector<Elt>& verts)
        : n_(static_cast<int>(verts.size())),
          words_((n_ + 63) / 64),
          labels_(verts) {
        adj_.assign(n_, Bits(words_));
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (g.adjacent(verts[i], verts[j])) {
                    adj_[i].set(j);
                    adj_[j].set(i);
                }
    }

    int size() const { return n_; }
    Elt label(int i) const { return labels_[i]; }

    /// Visit every clique of exactly `target` vertices once; the callback
    /// returns false to abort the search. Returns false when aborted.
    bool enumerate_cliques(int target, const Visit& cb) {
        if (target <= 0) throw GraphError("enumerate_cliques: bad target");
        prepare(target);
        Bits p(words_);
        for (int i = 0; i < n_; ++i) p.set(i);
        std::vector<int> r;
        r.reserve(target);
        return expand(r, p, target, cb);
    }

    int max_clique_size() {
        prepare(n_);
        Bits p(words_);
        for (int i = 0; i < n_; ++i) p.set(i);
        std::vector<int> r;
        int best = 0;
        max_expand(r, p, best);
        return best;
    }

private:
    void prepare(int depth) {
        if (static_cast<int>(stack_p_.size()) < depth + 1) {
            stack_p_.assign(depth + 1, Bits(words_));
            stack_order_.assign(depth + 1, {});
            stack_colors_.assign(depth + 1, {});
        }
        color_q_ = Bits(words_);
        color_avail_ = Bits(words_);
    }

    // Greedy coloring of P in index order; vertices returned color-ascending.
    void color_sort(const Bits& p, std::vector<int>& order, std::vector<int>& colors) {
        order.clear();
        colors.clear();
        color_q_ = p;
        int color = 0;
        while (!color_q_.empty()) {
            ++color;
            color_avail_ = color_q_;
            while (!color_avail_.empty()) {
                int v = color_avail_.first();
                order.push_back(v);
                colors.push_back(color);
                color_avail_.clear(v);
                color_avail_.and_not(adj_[v]);
                color_q_.clear(v);
            }
        }
    }

    bool expand(std::vector<int>& r, Bits& p, int target, const Visit& cb) {
        int depth = static_cast<int>(r.size());
        if (depth == target) return cb(r, !p.empty());
        if (p.empty()) return true;
        auto& order = stack_order_[depth];
        auto& colors = stack_colors_[depth];
        color_sort(p, order, colors);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (depth + colors[i] < target) return true;
            int v = order[i];
            p.clear(v);
            Bits& p2 = stack_p_[depth];
            p2 = p;
            p2.and_with(adj_[v]);
            r.push_back(v);
            bool go = expand(r, p2, target, cb);
            r.pop_back();
            if (!go) return false;
        }
        return true;
    }

    void max_expand(std::vector<int>& r, Bits& p, int& best) {
        int depth = static_cast<int>(r.size());
        if (p.empty()) {
            best = std::max(best, depth);
            return;
        }
        std::vector<int> order, colors;
        color_sort(p, order, colors);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (depth + colors[i] <= best) return;
            int v = order[i];
            p.clear(v);
            Bits p2 = p;
            p2.and_with(adj_[v]);
            r.push_back(v);
            max_expand(r, p2, best);
            r.pop_back();
        }
    }

    int n_, words_;
    std::vector<Bits> adj_;
    std::vector<Elt> labels_;
    std::vector<Bits> stack_p_;
    std::vector<std::vector<int>> stack_order_, stack_colors_;
    Bits color_q_, color_avail_;
};

bool single_direction_from_zero(const FieldTower& tw, const std::vector<Elt>& nonzero) {
    int d0 = tw.dir_of(nonzero.front());
    for (Elt x : nonzero)
        if (tw.dir_of(x) != d0) return false;
    return true;
}

}  // namespace

const SubspaceCatalog& CliqueEngine::catalog() {
    if (!catalog_) catalog_ = build_subspace_catalog(tower_);
    return *catalog_;
}

std::vector<std::vector<Elt>> CliqueEngine::max_cliques_through_zero(const PeisertGraph& g,
                                                                     bool force_general) {
    const int q = tower_.q();
    std::vector<std::vector<Elt>> out;
    bool subspace_ok = 2 * g.m() <= q + 1;
    if (subspace_ok && !force_general) {
        // Complete for m <= (q+1)/2: every maximum clique through 0 is an
        // F_p-subspace, and a size-q subspace is a clique iff its direction
        // mask sits inside the graph's.
        const SubspaceCatalog& cat = catalog();
        std::uint64_t gmask = 0;
        for (int d : g.dirs()) gmask |= std::uint64_t{1} << d;
        for (size_t i = 0; i < cat.bases.size(); ++i)
            if ((cat.dir_masks[i] & ~gmask) == 0) out.push_back(cat.elements[i]);
    } else {
        std::vector<Elt> nbrs = g.connection_set();
        BitGraph bg(g, nbrs);
        bg.enumerate_cliques(q - 1, [&](const std::vector<int>& r, bool extendable) {
            if (extendable)
                throw GraphError("clique of size q+1 found: Delsarte bound violated");
            std::vector<Elt> c{0};
            for (int i : r) c.push_back(bg.label(i));
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
            return true;
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

EkrVerdict CliqueEngine::strict_ekr(const PeisertGraph& g, bool verify) {
    const int q = tower_.q();
    const int m = g.m();
    EkrVerdict v;
    if (q > (m - 1) * (m - 1)) {
        v.holds = true;
        v.method = SearchMethod::CoveringShortcut;
        if (!verify) return v;
    }
    bool subspace_ok = 2 * m <= q + 1;
    bool holds = true;
    std::optional<std::vector<Elt>> witness;
    if (subspace_ok) {
        auto cliques = max_cliques_through_zero(g);
        if (verify) {
            auto general = max_cliques_through_zero(g, /*force_general=*/true);
            if (general != cliques)
                throw GraphError("subspace path and general search disagree");
        }
        for (const auto& c : cliques) {
            if (!g.is_canonical(c)) {
                holds = false;
                witness = c;
                break;
            }
        }
    } else {
        // General path: stream the search and stop at the first
        // non-canonical maximum clique.
        std::vector<Elt> nbrs = g.connection_set();
        BitGraph bg(g, nbrs);
        bg.enumerate_cliques(q - 1, [&](const std::vector<int>& r, bool extendable) {
            if (extendable)
                throw GraphError("clique of size q+1 found: Delsarte bound violated");
            std::vector<Elt> c;
            for (int i : r) c.push_back(bg.label(i));
            if (single_direction_from_zero(tower_, c)) return true;
            c.push_back(0);
            std::sort(c.begin(), c.end());
            holds = false;
            witness = std::move(c);
            return false;
        });
    }
    if (v.method == SearchMethod::CoveringShortcut) {
        if (!holds) throw GraphError("covering shortcut contradicted by search");
        return v;
    }
    v.method = subspace_ok ? SearchMethod::SubspacePath : SearchMethod::GeneralSearch;
    v.holds = holds;
    v.witness = witness;
    return v;
}

StVerdict CliqueEngine::st_property(const PeisertGraph& g, long k_num, long k_den) {
    const int q = tower_.q();
    if (k_den <= 0 || k_num < 0) throw GraphError("st_property: k must be >= 0");
    // ceil(q - k) = ceil((q*den - num) / den)
    long num = static_cast<long>(q) * k_den - k_num;
    int threshold = static_cast<int>((num + k_den - 1) / k_den);
    StVerdict v;
    v.k_num = k_num;
    v.k_den = k_den;
    v.threshold = threshold;
    if (threshold < 2) throw GraphError("st_property: threshold below 2");

    // A clique is contained in a canonical clique iff it is collinear, so a
    // violation is a non-collinear clique of size >= threshold. WLOG it
    // contains 0 (translate), so search the neighborhood of 0.
    std::vector<Elt> nbrs = g.connection_set();
    BitGraph bg(g, nbrs);
    std::vector<Elt> found;
    bg.enumerate_cliques(threshold - 1, [&](const std::vector<int>& r, bool) {
        std::vector<Elt> c;
        for (int i : r) c.push_back(bg.label(i));
        if (single_direction_from_zero(tower_, c)) return true;
        c.push_back(0);
        std::sort(c.begin(), c.end());
        found = std::move(c);
        return false;
    });
    if (found.empty()) {
        v.holds = true;
        return v;
    }
    // Grow the witness to a maximal clique, smallest extension first.
    bool grew = true;
    while (grew) {
        grew = false;
        for (Elt x = 0; x < tower_.q2(); ++x) {
            if (std::binary_search(found.begin(), found.end(), x)) continue;
            bool ok = true;
            for (Elt y : found)
                if (!g.adjacent(x, y)) {
                    ok = false;
                    break;
                }
            if (ok) {
                found.insert(std::lower_bound(found.begin(), found.end(), x), x);
                grew = true;
                break;
            }
        }
    }
    v.holds = false;
    v.witness = std::move(found);
    return v;
}

std::optional<std::vector<Elt>> CliqueEngine::clique_extension_search(const PeisertGraph& g,
                                                                      std::vector<Elt> c) {
    const int q = tower_.q();
    std::sort(c.begin(), c.end());
    if (!g.is_clique(c)) throw GraphError("clique_extension_search: not a clique");
    if (static_cast<int>(c.size()) >= q)
        throw GraphError("clique_extension_search: |C| < q required");
    std::vector<Elt> cands;
    for (Elt x = 0; x < tower_.q2(); ++x) {
        if (std::binary_search(c.begin(), c.end(), x)) continue;
        bool ok = true;
        for (Elt y : c)
            if (!g.adjacent(x, y)) {
                ok = false;
                break;
            }
        if (ok) cands.push_back(x);
    }
    std::vector<Elt> chosen;
    std::function<bool(size_t)> dfs = [&](size_t start) -> bool {
        if (static_cast<int>(c.size() + chosen.size()) == q) return true;
        size_t need = q - c.size() - chosen.size();
        for (size_t i = start; i + need <= cands.size(); ++i) {
            Elt x = cands[i];
            bool ok = true;
            for (Elt y : chosen)
                if (!g.adjacent(x, y)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(x);
            if (dfs(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    std::vector<Elt> full = c;
    full.insert(full.end(), chosen.begin(), chosen.end());
    std::sort(full.begin(), full.end());
    return full;
}

int CliqueEngine::clique_number(const PeisertGraph& g) {
    std::vector<Elt> nbrs = g.connection_set();
    BitGraph bg(g, nbrs);
    return 1 + bg.max_clique_size();
}

bool CliqueEngine::has_deficient_maximal_clique(const PeisertGraph& g) {
    const int q = tower_.q();
    int max_deficit = static_cast<int>(std::sqrt(static_cast<double>(q)) / 2.0);
    std::vector<Elt> nbrs = g.connection_set();
    BitGraph bg(g, nbrs);
    for (int deficit = 1; deficit <= max_deficit; ++deficit) {
        int size = q - deficit;
        if (size < 2) break;
        bool bad = false;
        bg.enumerate_cliques(size - 1, [&](const std::vector<int>& r, bool) {
            std::vector<Elt> c;
            for (int i : r) c.push_back(bg.label(i));
            if (single_direction_from_zero(tower_, c)) return true;
            c.push_back(0);
            std::sort(c.begin(), c.end());
            if (!clique_extension_search(g, c)) {
                bad = true;
                return false;
            }
            return true;
        });
        if (bad) return true;
    }
    return false;
}

}  // namespace ptg
