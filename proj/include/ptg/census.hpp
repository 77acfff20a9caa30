#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptg/cliques.hpp"
#include "ptg/directions.hpp"
#include "ptg/numeric.hpp"

namespace ptg {

/// Each m-subset of the q+1 directions exactly once, lexicographic order.
std::vector<DirectionSet> enumerate_graph_dirsets(const FieldTower& tw, int m,
                                                  std::uint64_t budget = 1u << 20);

struct DirOrbit {
    DirectionSet rep;       // lex-least member
    std::uint64_t size = 0;
};

/// Orbit representatives under the group generated by the F_{q^2}*/F_q*
/// multiplication action (cyclic of order q+1 on PG(1,q)) and Frobenius.
/// Report-only: raw censuses always run over the unreduced space.
std::vector<DirOrbit> enumerate_graph_orbits(const FieldTower& tw, int m,
                                             std::uint64_t budget = 1u << 20);

/// `count` independent uniform m-subsets; deterministic given the seed, with
/// per-index substreams so parallel consumption stays reproducible.
std::vector<DirectionSet> sample_graph_dirsets(const FieldTower& tw, int m,
                                               std::uint64_t count, std::uint64_t seed);

struct CensusOptions {
    bool verify = false;     // cross-check shortcuts against the general search
    bool with_st = false;
    long st_k_num = 0;
    long st_k_den = 1;
    const std::vector<BadSetCandidate>* bad_candidates = nullptr;
    int jobs = 1;
};

struct CensusRecord {
    std::string key;
    int m = 0;
    EkrVerdict ekr;
    std::optional<StVerdict> st;
    bool in_bad_candidates = false;
    std::int64_t micros = 0;
};

/// Classify each graph; embarrassingly parallel over graphs, output ordered
/// by input index regardless of worker count.
std::vector<CensusRecord> classify_graphs(const FieldTower& tw,
                                          const std::vector<DirectionSet>& dirsets,
                                          const CensusOptions& opts = {});

struct DensityReport {
    int q = 0, m = 0;
    bool sampled = false;
    std::uint64_t total = 0;
    std::uint64_t ekr_holds = 0;
    double estimate = 0.0;
    double wilson_low = 0.0, wilson_high = 0.0;  // 95%, sampled mode only
    Rational upper_bound_product;                // exact, for m = (q+1)/2
    double upper_bound_closed = 0.0;
    bool upper_bound_vacuous = true;
};

DensityReport ekr_density(const FieldTower& tw, int m, bool exhaustive,
                          std::uint64_t samples = 0, std::uint64_t seed = 0,
                          const CensusOptions& opts = {});

/// Wilson 95% score interval.
std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t total);

/// Exact product form of the EKR-failure density upper bound for type
/// ((q+1)/2, q): q^{2n} * prod_{j=0}^{s} ((q+1)/2 - j)/(q+1-j) with
/// s = ceil(sqrt(q)).
Rational density_upper_bound_product(int q);
/// Closed form exp(2 (log q)^2 - sqrt(q) log 2); vacuous when >= 1.
double density_upper_bound_closed(int q);

/// Lower bound on the non-EKR density of type (m, q=p^n) graphs from a
/// subfield witness over F_{p^t}: returns {bernoulli_form, product_form},
/// with product >= bernoulli asserted.
std::pair<Rational, Rational> noekr_lower_bound(int p, int n, int t, int m);

/// C(q+1-c, m-c) / C(q+1, m): probability that a uniform type-(m,q) graph
/// contains a fixed clique covered by c prescribed cosets.
Rational containment_fraction(int q, int c, int m);

/// |candidate bad sets| / C(q+1, (q+1)/2).
Rational bad_fraction(const FieldTower& tw, std::uint64_t budget = 1u << 22);

std::string rational_to_string(const Rational& r);

// CSV columns: q,m,graph_key,ekr_holds,witness,st_k,st_holds,in_bad_candidates.
// Timing stays in the in-memory record only, so files are rerun-identical.
std::string records_to_csv(const FieldTower& tw, const std::vector<CensusRecord>& recs);
std::string records_to_jsonl(const FieldTower& tw, const std::vector<CensusRecord>& recs);
std::string density_report_to_json(const DensityReport& rep);

}  // namespace ptg
