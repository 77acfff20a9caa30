#include "ptg/directions.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <thread>

#include "ptg/numeric.hpp"

namespace ptg {

namespace {

int fq_pow(const FieldTower& tw, int x, int e) {
    int r = 1;
    while (e > 0) {
        if (e & 1) r = tw.mul(r, x);
        x = tw.mul(x, x);
        e >>= 1;
    }
    return r;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct CensusAccum {
    std::map<int, std::uint64_t> histogram;
    std::uint64_t extremal_count = 0;
    std::vector<PointSet> witnesses;
};

// DFS over s-subsets with first point fixed, direction mask carried down.
void census_dfs(const std::vector<std::uint8_t>& pairdir, int q2, int s, int extremal,
                std::size_t witness_cap, std::vector<int>& pts, std::uint64_t mask,
                CensusAccum& acc) {
    int depth = static_cast<int>(pts.size());
    if (depth == s) {
        int nd = __builtin_popcountll(mask);
        ++acc.histogram[nd];
        if (nd == extremal) {
            ++acc.extremal_count;
            if (acc.witnesses.size() < witness_cap) acc.witnesses.push_back(pts);
        }
        return;
    }
    for (int nxt = pts.back() + 1; nxt <= q2 - (s - depth); ++nxt) {
        std::uint64_t m2 = mask;
        for (int i = 0; i < depth; ++i)
            m2 |= std::uint64_t{1} << pairdir[static_cast<size_t>(pts[i]) * q2 + nxt];
        pts.push_back(nxt);
        census_dfs(pairdir, q2, s, extremal, witness_cap, pts, m2, acc);
        pts.pop_back();
    }
}

}  // namespace

PointSet megyesi_set(const FieldTower& tw) {
    PointSet u;
    for (int x = 0; x < tw.q(); ++x)
        u.push_back(tw.elem(x, fq_pow(tw, x, (tw.q() + 1) / 2)));
    std::sort(u.begin(), u.end());
    return u;
}

DirectionCensus direction_census(const FieldTower& tw, int s, bool exhaustive,
                                 std::uint64_t budget, std::uint64_t samples,
                                 std::uint64_t seed, std::size_t witness_cap, int jobs) {
    const int q2 = tw.q2();
    const int q = tw.q();
    if (s < 2 || s > q2) throw GeomError("direction_census: bad set size");
    if (q + 1 > 64) throw GeomError("direction_census: q too large for mask");

    std::vector<std::uint8_t> pairdir(static_cast<size_t>(q2) * q2, 0);
    for (int i = 0; i < q2; ++i)
        for (int j = 0; j < q2; ++j)
            if (i != j)
                pairdir[static_cast<size_t>(i) * q2 + j] =
                    static_cast<std::uint8_t>(tw.dir_of(tw.sub2(i, j)));

    const int extremal = (q + 3) / 2;
    DirectionCensus out;
    if (exhaustive) {
        if (binomial(q2, s) > BigInt(budget))
            throw BudgetExceeded("direction census: exhaustive sweep exceeds budget");
        // Data-parallel over the first point; merge in index order.
        int njobs = std::max(1, jobs);
        std::vector<CensusAccum> accs(q2);
        std::atomic<int> next_first{0};
        auto worker = [&] {
            for (;;) {
                int first = next_first.fetch_add(1);
                if (first > q2 - s) break;
                std::vector<int> pts{first};
                census_dfs(pairdir, q2, s, extremal, witness_cap, pts, 0, accs[first]);
            }
        };
        std::vector<std::thread> threads;
        for (int t = 0; t < njobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
        for (const auto& acc : accs) {
            for (auto [k, v] : acc.histogram) out.histogram[k] += v;
            out.extremal_count += acc.extremal_count;
            for (const auto& w : acc.witnesses)
                if (out.extremal_witnesses.size() < witness_cap)
                    out.extremal_witnesses.push_back(w);
        }
    } else {
        out.sampled = true;
        out.seed = seed;
        for (std::uint64_t i = 0; i < samples; ++i) {
            std::mt19937_64 rng(mix_seed(seed, i));
            // partial Fisher-Yates for an s-subset of [0, q2)
            std::vector<int> pool(q2);
            for (int j = 0; j < q2; ++j) pool[j] = j;
            PointSet u;
            for (int j = 0; j < s; ++j) {
                std::uniform_int_distribution<int> d(j, q2 - 1);
                std::swap(pool[j], pool[d(rng)]);
                u.push_back(pool[j]);
            }
            std::sort(u.begin(), u.end());
            std::uint64_t mask = 0;
            for (size_t a = 0; a < u.size(); ++a)
                for (size_t b = a + 1; b < u.size(); ++b)
                    mask |= std::uint64_t{1} << pairdir[static_cast<size_t>(u[a]) * q2 + u[b]];
            int nd = __builtin_popcountll(mask);
            ++out.histogram[nd];
            if (nd == extremal) {
                ++out.extremal_count;
                if (out.extremal_witnesses.size() < witness_cap)
                    out.extremal_witnesses.push_back(u);
            }
        }
    }
    for (auto [k, v] : out.histogram) out.total += v;
    for (auto [k, v] : out.histogram)
        if (k >= 2) {
            out.min_noncollinear = k;
            break;
        }
    return out;
}

Elt apply_affine(const FieldTower& tw, const AffineMap& map, Elt pt) {
    int a = tw.a_of(pt), b = tw.b_of(pt);
    int ra = tw.add(tw.add(tw.mul(map.m00, a), tw.mul(map.m01, b)), map.wa);
    int rb = tw.add(tw.add(tw.mul(map.m10, a), tw.mul(map.m11, b)), map.wb);
    return tw.elem(ra, rb);
}

std::optional<AffineMap> affinely_equivalent(const FieldTower& tw, const PointSet& u1,
                                             const PointSet& u2, std::uint64_t budget) {
    if (u1.size() != u2.size()) return std::nullopt;
    if (u1.empty()) return AffineMap{1, 0, 0, 1, 0, 0};
    const int q = tw.q();
    std::uint64_t work = static_cast<std::uint64_t>(q) * q * q * q * u2.size();
    if (work > budget) throw BudgetExceeded("affine equivalence search exceeds budget");

    PointSet s1 = u1, s2 = u2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    Elt anchor = s1.front();
    int aa = tw.a_of(anchor), ab = tw.b_of(anchor);
    for (int m00 = 0; m00 < q; ++m00)
        for (int m01 = 0; m01 < q; ++m01)
            for (int m10 = 0; m10 < q; ++m10)
                for (int m11 = 0; m11 < q; ++m11) {
                    if (tw.sub(tw.mul(m00, m11), tw.mul(m01, m10)) == 0) continue;
                    int ma = tw.add(tw.mul(m00, aa), tw.mul(m01, ab));
                    int mb = tw.add(tw.mul(m10, aa), tw.mul(m11, ab));
                    for (Elt target : s2) {
                        AffineMap map{m00, m01, m10, m11, tw.sub(tw.a_of(target), ma),
                                      tw.sub(tw.b_of(target), mb)};
                        PointSet image;
                        image.reserve(s1.size());
                        for (Elt pt : s1) image.push_back(apply_affine(tw, map, pt));
                        std::sort(image.begin(), image.end());
                        if (image == s2) return map;
                    }
                }
    return std::nullopt;
}

std::vector<std::array<int, 3>> conic_points(const FieldTower& tw, const ConicCoeffs& cc) {
    const int q = tw.q();
    auto eval = [&](int x, int y, int z) {
        int r = tw.mul(x, x);
        r = tw.add(r, tw.mul(cc.a, tw.mul(y, y)));
        r = tw.add(r, tw.mul(cc.b, tw.mul(z, z)));
        r = tw.add(r, tw.mul(cc.c, tw.mul(x, y)));
        r = tw.add(r, tw.mul(cc.d, tw.mul(y, z)));
        r = tw.add(r, tw.mul(cc.e, tw.mul(z, x)));
        return r;
    };
    std::vector<std::array<int, 3>> pts;
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z)
            if (eval(1, y, z) == 0) pts.push_back({1, y, z});
    for (int z = 0; z < q; ++z)
        if (eval(0, 1, z) == 0) pts.push_back({0, 1, z});
    if (eval(0, 0, 1) == 0) pts.push_back({0, 0, 1});
    return pts;
}

std::optional<BadSetCandidate> conic_bad_candidate(const FieldTower& tw,
                                                   const ConicCoeffs& cc) {
    const int q = tw.q();
    // Rank test on the symmetric matrix of the form; rank < 3 means the conic
    // degenerates into lines.
    int half = tw.inv(tw.add(1, 1));
    int m01 = tw.mul(cc.c, half), m02 = tw.mul(cc.e, half), m12 = tw.mul(cc.d, half);
    int det = tw.mul(1, tw.sub(tw.mul(cc.a, cc.b), tw.mul(m12, m12)));
    det = tw.sub(det, tw.mul(m01, tw.sub(tw.mul(m01, cc.b), tw.mul(m12, m02))));
    det = tw.add(det, tw.mul(m02, tw.sub(tw.mul(m01, m12), tw.mul(cc.a, m02))));
    if (det == 0) return std::nullopt;

    auto pts = conic_points(tw, cc);
    if (static_cast<int>(pts.size()) != q + 1)
        throw GeomError("nondegenerate conic without q+1 points (internal)");

    // Project [X:Y:Z] -> [Y:Z]; [1:0:0] is never on the conic since the X^2
    // coefficient is 1.
    std::vector<char> hit(q + 1, 0);
    for (const auto& pt : pts) {
        int y = pt[1], z = pt[2];
        if (y == 0 && z == 0) throw GeomError("conic passes through [1:0:0] (internal)");
        hit[y != 0 ? tw.mul(z, tw.inv(y)) : q] = 1;
    }
    DirectionSet complement;
    for (int d = 0; d <= q; ++d)
        if (!hit[d]) complement.push_back(d);
    if (static_cast<int>(complement.size()) != (q + 1) / 2) return std::nullopt;
    return BadSetCandidate{complement, cc};
}

std::vector<BadSetCandidate> enumerate_bad_candidates(const FieldTower& tw,
                                                      std::uint64_t budget) {
    const int q = tw.q();
    std::uint64_t sweeps = 1;
    for (int i = 0; i < 5; ++i) sweeps *= q;
    if (sweeps > budget) throw BudgetExceeded("bad candidate sweep exceeds budget");
    std::map<DirectionSet, ConicCoeffs> dedup;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d)
                    for (int e = 0; e < q; ++e) {
                        auto cand = conic_bad_candidate(tw, ConicCoeffs{a, b, c, d, e});
                        if (cand && !dedup.count(cand->dirs))
                            dedup.emplace(cand->dirs, cand->source);
                    }
    std::vector<BadSetCandidate> out;
    for (const auto& [dirs, src] : dedup) out.push_back(BadSetCandidate{dirs, src});
    return out;
}

std::vector<char> refine_bad_candidates(CliqueEngine& engine,
                                        const std::vector<BadSetCandidate>& cands) {
    std::vector<char> flags;
    flags.reserve(cands.size());
    for (const auto& cand : cands) {
        PeisertGraph g(engine.tower(), cand.dirs);
        flags.push_back(engine.has_deficient_maximal_clique(g) ? 1 : 0);
    }
    return flags;
}

}  // namespace ptg
