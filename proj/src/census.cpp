#include "ptg/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <thread>

#include <json.hpp>

namespace ptg {

namespace {

bool next_combination(std::vector<int>& c, int nmax) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < nmax - (k - i)) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int ceil_sqrt(int q) {
    int s = static_cast<int>(std::sqrt(static_cast<double>(q)));
    while (s * s < q) ++s;
    while (s > 0 && (s - 1) * (s - 1) >= q) --s;
    return s;
}

// Permutations of direction codes generating the symmetry group used for
// orbit reduction: multiplication by a generator of F_{q^2}*/F_q*, and the
// Frobenius x -> x^p.
std::vector<std::vector<int>> symmetry_group(const FieldTower& tw) {
    const int q = tw.q();
    auto rep = [&](int d) { return d == q ? tw.v() : tw.elem(1, d); };
    std::vector<int> mult_perm, frob_perm(q + 1);
    for (Elt mu = 1; mu < tw.q2(); ++mu) {
        std::vector<int> perm(q + 1);
        for (int d = 0; d <= q; ++d) perm[d] = tw.dir_of(tw.mul2(mu, rep(d)));
        // need a full (q+1)-cycle so the quotient action is generated
        int d = 0, steps = 0;
        do {
            d = perm[d];
            ++steps;
        } while (d != 0 && steps <= q + 1);
        if (steps == q + 1) {
            mult_perm = perm;
            break;
        }
    }
    if (mult_perm.empty()) throw GraphError("no generator of the coset action (internal)");
    for (int d = 0; d <= q; ++d) frob_perm[d] = tw.dir_of(tw.pow2(rep(d), tw.p()));

    std::set<std::vector<int>> group;
    std::vector<int> identity(q + 1);
    for (int d = 0; d <= q; ++d) identity[d] = d;
    group.insert(identity);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> current(group.begin(), group.end());
        for (const auto& g : current) {
            for (const auto* gen : {&mult_perm, &frob_perm}) {
                std::vector<int> comp(q + 1);
                for (int d = 0; d <= q; ++d) comp[d] = (*gen)[g[d]];
                if (group.insert(comp).second) grew = true;
            }
        }
    }
    return {group.begin(), group.end()};
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string witness_json(const FieldTower& tw, const std::vector<Elt>& w) {
    nlohmann::json arr = nlohmann::json::array();
    std::vector<Elt> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    for (Elt x : sorted) arr.push_back(tw.encode(x));
    return arr.dump();
}

}  // namespace

std::vector<DirectionSet> enumerate_graph_dirsets(const FieldTower& tw, int m,
                                                  std::uint64_t budget) {
    const int q = tw.q();
    if (m < 1 || m > q) throw GraphError("enumerate_graphs: need 1 <= m <= q");
    if (binomial(q + 1, m) > BigInt(budget))
        throw BudgetExceeded("graph enumeration exceeds budget");
    std::vector<DirectionSet> out;
    std::vector<int> c(m);
    for (int i = 0; i < m; ++i) c[i] = i;
    do {
        out.push_back(c);
    } while (next_combination(c, q + 1));
    return out;
}

std::vector<DirOrbit> enumerate_graph_orbits(const FieldTower& tw, int m,
                                             std::uint64_t budget) {
    auto all = enumerate_graph_dirsets(tw, m, budget);
    auto group = symmetry_group(tw);
    std::vector<DirOrbit> orbits;
    for (const auto& ds : all) {
        std::set<DirectionSet> images;
        for (const auto& g : group) {
            DirectionSet img;
            for (int d : ds) img.push_back(g[d]);
            std::sort(img.begin(), img.end());
            images.insert(img);
        }
        if (*images.begin() == ds)
            orbits.push_back(DirOrbit{ds, images.size()});
    }
    return orbits;
}

std::vector<DirectionSet> sample_graph_dirsets(const FieldTower& tw, int m,
                                               std::uint64_t count, std::uint64_t seed) {
    const int q = tw.q();
    if (m < 1 || m > q) throw GraphError("sample_graphs: need 1 <= m <= q");
    std::vector<DirectionSet> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::mt19937_64 rng(mix_seed(seed, i));
        std::vector<int> pool(q + 1);
        for (int j = 0; j <= q; ++j) pool[j] = j;
        DirectionSet ds;
        for (int j = 0; j < m; ++j) {
            std::uniform_int_distribution<int> d(j, q);
            std::swap(pool[j], pool[d(rng)]);
            ds.push_back(pool[j]);
        }
        std::sort(ds.begin(), ds.end());
        out.push_back(std::move(ds));
    }
    return out;
}

std::vector<CensusRecord> classify_graphs(const FieldTower& tw,
                                          const std::vector<DirectionSet>& dirsets,
                                          const CensusOptions& opts) {
    std::set<DirectionSet> bad;
    if (opts.bad_candidates)
        for (const auto& c : *opts.bad_candidates) bad.insert(c.dirs);

    std::vector<CensusRecord> records(dirsets.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        CliqueEngine engine(tw);
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= dirsets.size()) break;
            auto t0 = std::chrono::steady_clock::now();
            PeisertGraph g(tw, dirsets[i]);
            CensusRecord& rec = records[i];
            rec.key = g.key();
            rec.m = g.m();
            rec.ekr = engine.strict_ekr(g, opts.verify);
            if (opts.with_st)
                rec.st = engine.st_property(g, opts.st_k_num, opts.st_k_den);
            rec.in_bad_candidates = bad.count(g.dirs()) > 0;
            rec.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        }
    };
    int njobs = std::max(1, opts.jobs);
    std::vector<std::thread> threads;
    for (int t = 0; t < njobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return records;
}

std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t total) {
    if (total == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;
    double n = static_cast<double>(total);
    double phat = static_cast<double>(hits) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    double lo = hits == 0 ? 0.0 : std::max(0.0, center - half);
    double hi = hits == total ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

DensityReport ekr_density(const FieldTower& tw, int m, bool exhaustive,
                          std::uint64_t samples, std::uint64_t seed,
                          const CensusOptions& opts) {
    DensityReport rep;
    rep.q = tw.q();
    rep.m = m;
    rep.sampled = !exhaustive;
    auto dirsets = exhaustive ? enumerate_graph_dirsets(tw, m)
                              : sample_graph_dirsets(tw, m, samples, seed);
    auto records = classify_graphs(tw, dirsets, opts);
    rep.total = records.size();
    for (const auto& r : records)
        if (r.ekr.holds) ++rep.ekr_holds;
    rep.estimate = rep.total ? static_cast<double>(rep.ekr_holds) / rep.total : 0.0;
    if (rep.sampled)
        std::tie(rep.wilson_low, rep.wilson_high) = wilson_interval(rep.ekr_holds, rep.total);
    rep.upper_bound_product = density_upper_bound_product(tw.q());
    rep.upper_bound_closed = density_upper_bound_closed(tw.q());
    rep.upper_bound_vacuous = rep.upper_bound_closed >= 1.0;
    return rep;
}

Rational density_upper_bound_product(int q) {
    auto [p, n] = prime_power_split(q);
    (void)p;
    int s = ceil_sqrt(q);
    Rational r = big_pow(q, 2 * n);
    for (int j = 0; j <= s; ++j) {
        int num = (q + 1) / 2 - j;
        if (num <= 0) return Rational(0);
        r *= Rational(num, q + 1 - j);
    }
    return r;
}

double density_upper_bound_closed(int q) {
    double lq = std::log(static_cast<double>(q));
    return std::exp(2.0 * lq * lq - std::sqrt(static_cast<double>(q)) * std::log(2.0));
}

std::pair<Rational, Rational> noekr_lower_bound(int p, int n, int t, int m) {
    if (n < 2 || t < 1 || t >= n || n % t != 0)
        throw FieldError("noekr_lower_bound: t must be a proper divisor of n >= 2");
    long long q = 1, pt = 1;
    for (int i = 0; i < n; ++i) q *= p;
    for (int i = 0; i < t; ++i) pt *= p;
    if (m < 1 || m > q) throw FieldError("noekr_lower_bound: need 1 <= m <= q");
    long long c = (q - 1) / (pt - 1);
    Rational bernoulli = Rational(1) - Rational(c) * Rational(q + 1 - m, q + 2 - c);
    Rational product = 1;
    for (long long j = 0; j < c; ++j) {
        if (m - j <= 0) {
            product = 0;
            break;
        }
        product *= Rational(m - j, q + 1 - j);
    }
    if (product < bernoulli)
        throw FieldError("Bernoulli bound exceeds exact product (internal)");
    return {bernoulli, product};
}

Rational containment_fraction(int q, int c, int m) {
    if (c < 0 || c > m || m > q + 1)
        throw FieldError("containment_fraction: need 0 <= c <= m <= q+1");
    return Rational(binomial(q + 1 - c, m - c), binomial(q + 1, m));
}

Rational bad_fraction(const FieldTower& tw, std::uint64_t budget) {
    auto cands = enumerate_bad_candidates(tw, budget);
    int q = tw.q();
    return Rational(BigInt(cands.size()), binomial(q + 1, (q + 1) / 2));
}

std::string rational_to_string(const Rational& r) {
    return r.str();
}

std::string records_to_csv(const FieldTower& tw, const std::vector<CensusRecord>& recs) {
    // No timing column: output files must be byte-identical across reruns.
    std::string out = "q,m,graph_key,ekr_holds,witness,st_k,st_holds,in_bad_candidates\n";
    for (const auto& r : recs) {
        out += std::to_string(tw.q()) + "," + std::to_string(r.m) + ",";
        out += csv_quote(r.key) + ",";
        out += r.ekr.holds ? "true," : "false,";
        out += csv_quote(r.ekr.witness ? witness_json(tw, *r.ekr.witness) : "") + ",";
        if (r.st) {
            out += std::to_string(r.st->k_num) + "/" + std::to_string(r.st->k_den) + ",";
            out += r.st->holds ? "true," : "false,";
        } else {
            out += ",,";
        }
        out += r.in_bad_candidates ? "true\n" : "false\n";
    }
    return out;
}

std::string records_to_jsonl(const FieldTower& tw, const std::vector<CensusRecord>& recs) {
    std::string out;
    for (const auto& r : recs) {
        nlohmann::json j;
        j["q"] = tw.q();
        j["m"] = r.m;
        j["graph_key"] = r.key;
        j["ekr_holds"] = r.ekr.holds;
        if (r.ekr.witness)
            j["witness"] = nlohmann::json::parse(witness_json(tw, *r.ekr.witness));
        if (r.st) {
            j["st_k"] = std::to_string(r.st->k_num) + "/" + std::to_string(r.st->k_den);
            j["st_holds"] = r.st->holds;
            if (r.st->witness)
                j["st_witness"] = nlohmann::json::parse(witness_json(tw, *r.st->witness));
        }
        j["in_bad_candidates"] = r.in_bad_candidates;
        out += j.dump() + "\n";
    }
    return out;
}

std::string density_report_to_json(const DensityReport& rep) {
    nlohmann::json j;
    j["q"] = rep.q;
    j["m"] = rep.m;
    j["mode"] = rep.sampled ? "sampled" : "exhaustive";
    j["total"] = rep.total;
    j["ekr_holds"] = rep.ekr_holds;
    j["estimate"] = rep.estimate;
    if (rep.sampled) {
        j["wilson_low"] = rep.wilson_low;
        j["wilson_high"] = rep.wilson_high;
    }
    j["upper_bound_product"] = rational_to_string(rep.upper_bound_product);
    j["upper_bound_closed"] = rep.upper_bound_closed;
    j["upper_bound_vacuous"] = rep.upper_bound_vacuous;
    return j.dump(2);
}

}  // namespace ptg
