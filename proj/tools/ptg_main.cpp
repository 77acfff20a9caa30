// Command-line front door: build field towers, classify single graphs, run
// censuses, sweep direction theory, and emit CSV/JSON.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ptg/census.hpp"

namespace {

using namespace ptg;

std::uint64_t global_budget(std::uint64_t fallback) {
    if (const char* env = std::getenv("PTG_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("PTG_BUDGET", "not a valid integer");
        }
    }
    return fallback;
}

int isqrt_floor(int x) {
    int s = static_cast<int>(std::sqrt(static_cast<double>(x)));
    while ((s + 1) * (s + 1) <= x) ++s;
    while (s * s > x) --s;
    return s;
}

// "a/b", a decimal like "1.5", or the keywords auto-sqrt-half / auto-p-over-20.
// The auto-sqrt-half threshold ceil(q - sqrt(q)/2) is exact: for square q the
// rational sqrt(q)/2 is used directly, otherwise k is replaced by
// floor(sqrt(q)/2), which yields the identical threshold.
std::pair<long, long> parse_k(const std::string& s, int p, int q) {
    if (s == "auto-sqrt-half") {
        int r = isqrt_floor(q);
        if (r * r == q) return {r, 2};
        return {isqrt_floor(q) / 2, 1};
    }
    if (s == "auto-p-over-20") return {p, 20};
    auto slash = s.find('/');
    if (slash != std::string::npos)
        return {std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1))};
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string frac = s.substr(dot + 1);
        long den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        long num = std::stol(s.substr(0, dot)) * den + (frac.empty() ? 0 : std::stol(frac));
        return {num, den};
    }
    return {std::stol(s), 1};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::string histogram_csv(const DirectionCensus& c) {
    std::string out = "directions,count\n";
    for (auto [k, v] : c.histogram)
        out += std::to_string(k) + "," + std::to_string(v) + "\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic laboratory for Peisert-type graphs"};
    app.require_subcommand(1);

    int p = 3, n = 1, m = 0, s = 0, r = -1, t = 1, c = 0;
    std::string dirs_str, key_str, check = "ekr", k_str = "0", mode = "exhaustive";
    std::string out_path, format = "csv";
    std::uint64_t samples = 1000, seed = 0;
    bool verify = false, with_st = false, refine = false, megyesi = false, orbits = false;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    auto add_field_opts = [&](CLI::App* sub) {
        sub->add_option("--p", p, "characteristic")->required();
        sub->add_option("--n", n, "extension degree (q = p^n)");
    };

    auto* c_field = app.add_subcommand("field", "construct the tower and print its moduli");
    add_field_opts(c_field);

    auto* c_graph = app.add_subcommand("graph", "classify a single graph");
    add_field_opts(c_graph);
    c_graph->add_option("--dirs", dirs_str, "comma-joined direction codes, e.g. 0,1,inf");
    c_graph->add_option("--key", key_str, "graph key, e.g. q=9;D=0,1,inf");
    c_graph->add_option("--check", check, "ekr | st | cliques | srg")->capture_default_str();
    c_graph->add_option("--k", k_str, "ST parameter: a/b, decimal, auto-sqrt-half, auto-p-over-20");
    c_graph->add_flag("--verify", verify, "cross-check shortcuts against the general search");

    auto* c_census = app.add_subcommand("census", "classify a family of graphs");
    add_field_opts(c_census);
    c_census->add_option("--m", m, "number of directions")->required();
    c_census->add_option("--mode", mode, "exhaustive | sample")->capture_default_str();
    c_census->add_option("--samples", samples, "sample count")->capture_default_str();
    c_census->add_option("--seed", seed, "sampling seed")->capture_default_str();
    c_census->add_flag("--with-st", with_st, "also decide ST(k)");
    c_census->add_option("--k", k_str, "ST parameter (see graph --k)");
    c_census->add_flag("--verify", verify, "cross-check shortcuts against the general search");
    c_census->add_flag("--bad", refine, "flag graphs whose direction set is a bad-set candidate");
    c_census->add_flag("--orbits", orbits, "print symmetry-orbit representatives instead");
    c_census->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    c_census->add_option("--out", out_path, "output file (default stdout)");
    c_census->add_option("--format", format, "csv | jsonl | json")->capture_default_str();

    auto* c_sub = app.add_subcommand("subspaces", "subspace census and covering numbers");
    add_field_opts(c_sub);
    c_sub->add_option("--r", r, "dimension (default n)");
    c_sub->add_option("--witness", t, "subfield degree t for the witness subspace")
        ->expected(0, 1);

    auto* c_dirs = app.add_subcommand("directions", "direction census over point sets");
    add_field_opts(c_dirs);
    c_dirs->add_option("--s", s, "points per set")->required();
    c_dirs->add_option("--mode", mode, "exhaustive | sample")->capture_default_str();
    c_dirs->add_option("--samples", samples, "sample count")->capture_default_str();
    c_dirs->add_option("--seed", seed, "sampling seed")->capture_default_str();
    c_dirs->add_flag("--megyesi", megyesi, "print the extremal set and its directions");
    c_dirs->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    c_dirs->add_option("--out", out_path, "output file (default stdout)");

    auto* c_bad = app.add_subcommand("badsets", "conic-complement bad-set candidates");
    add_field_opts(c_bad);
    c_bad->add_flag("--refine", refine, "search each candidate for a deficient maximal clique");
    c_bad->add_option("--out", out_path, "output file (default stdout)");

    auto* c_bounds = app.add_subcommand("bounds", "density bound formulas");
    add_field_opts(c_bounds);
    c_bounds->add_option("--t", t, "subfield degree for the non-EKR lower bound");
    c_bounds->add_option("--m", m, "number of directions");
    c_bounds->add_option("--c", c, "prescribed cosets for the containment fraction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        FieldTower tw(p, n);
        std::uint64_t budget = global_budget(200'000'000ull);

        if (c_field->parsed()) {
            std::cout << tw.describe_json() << "\n";
        } else if (c_graph->parsed()) {
            DirectionSet ds;
            if (!key_str.empty()) {
                if (PeisertGraph::key_q(key_str) != tw.q())
                    throw GraphError("key q does not match --p/--n");
                ds = PeisertGraph::from_key(tw, key_str).dirs();
            } else if (!dirs_str.empty()) {
                ds = direction_set_from_string(tw, dirs_str);
            } else {
                throw CLI::ValidationError("graph", "need --dirs or --key");
            }
            PeisertGraph g(tw, ds);
            CliqueEngine engine(tw);
            std::cout << "graph_key: " << g.key() << "\n";
            if (check == "ekr") {
                auto v = engine.strict_ekr(g, verify);
                std::cout << "ekr_holds: " << (v.holds ? "true" : "false") << "\n";
                std::cout << "method: "
                          << (v.method == SearchMethod::SubspacePath      ? "subspace-path"
                              : v.method == SearchMethod::GeneralSearch   ? "general-search"
                                                                          : "covering-shortcut")
                          << "\n";
                if (v.witness) {
                    std::cout << "witness:";
                    for (Elt x : *v.witness) std::cout << " " << tw.encode(x);
                    std::cout << "\n";
                }
            } else if (check == "st") {
                auto [kn, kd] = parse_k(k_str, p, tw.q());
                auto v = engine.st_property(g, kn, kd);
                std::cout << "st_k: " << v.k_num << "/" << v.k_den << "\n";
                std::cout << "threshold: " << v.threshold << "\n";
                std::cout << "st_holds: " << (v.holds ? "true" : "false") << "\n";
                if (v.witness) {
                    std::cout << "witness:";
                    for (Elt x : *v.witness) std::cout << " " << tw.encode(x);
                    std::cout << "\n";
                }
            } else if (check == "cliques") {
                auto cliques = engine.max_cliques_through_zero(g, verify);
                std::cout << "max_cliques_through_zero: " << cliques.size() << "\n";
                for (const auto& cq : cliques) {
                    std::cout << (g.is_canonical(cq) ? "canonical:" : "non-canonical:");
                    for (Elt x : cq) std::cout << " " << tw.encode(x);
                    std::cout << "\n";
                }
            } else if (check == "srg") {
                auto params = g.srg_parameters();
                if (params)
                    std::cout << "srg: (" << params->vertices << "," << params->degree << ","
                              << params->lambda << "," << params->mu << ")\n";
                else
                    std::cout << "srg: none\n";
            } else {
                throw CLI::ValidationError("--check", "unknown check: " + check);
            }
        } else if (c_census->parsed()) {
            if (orbits) {
                auto reps = enumerate_graph_orbits(tw, m, budget);
                std::string text = "graph_key,orbit_size\n";
                std::uint64_t total = 0;
                for (const auto& orb : reps) {
                    PeisertGraph g(tw, orb.rep);
                    text += "\"" + g.key() + "\"," + std::to_string(orb.size) + "\n";
                    total += orb.size;
                }
                text += "# orbits=" + std::to_string(reps.size()) +
                        " total=" + std::to_string(total) + "\n";
                write_output(out_path, text);
            } else {
                CensusOptions opts;
                opts.verify = verify;
                opts.jobs = jobs;
                opts.with_st = with_st;
                if (with_st) std::tie(opts.st_k_num, opts.st_k_den) = parse_k(k_str, p, tw.q());
                std::vector<BadSetCandidate> cands;
                if (refine) {
                    cands = enumerate_bad_candidates(tw, budget);
                    opts.bad_candidates = &cands;
                }
                bool exhaustive = mode == "exhaustive";
                if (format == "json") {
                    auto rep = ekr_density(tw, m, exhaustive, samples, seed, opts);
                    write_output(out_path, density_report_to_json(rep) + "\n");
                } else {
                    auto dirsets = exhaustive ? enumerate_graph_dirsets(tw, m, budget)
                                              : sample_graph_dirsets(tw, m, samples, seed);
                    auto recs = classify_graphs(tw, dirsets, opts);
                    write_output(out_path, format == "jsonl" ? records_to_jsonl(tw, recs)
                                                             : records_to_csv(tw, recs));
                }
            }
        } else if (c_sub->parsed()) {
            if (c_sub->count("--witness")) {
                auto w = subfield_witness(tw, t);
                std::cout << "witness: " << subspace_to_string(tw, w) << "\n";
                std::cout << "cover_number: " << cover_number(tw, w) << "\n";
                std::cout << "directions: ";
                DirectionSet wd;
                for (Elt x : span_elements(tw, w))
                    if (x != 0 && !dirset_contains(wd, tw.dir_of(x))) wd.push_back(tw.dir_of(x));
                std::sort(wd.begin(), wd.end());
                std::cout << direction_set_to_string(tw, wd) << "\n";
            } else {
                int dim = r < 0 ? n : r;
                auto subs = enumerate_subspaces(tw, dim, budget);
                std::cout << "count: " << subs.size() << "\n";
                if (dim == n) {
                    std::cout << "grassmannian_count: " << grassmannian_count(p, n).str()
                              << "\n";
                    int lines = 0, min_nonline_cover = -1;
                    for (const auto& v : subs) {
                        if (is_base_line(tw, v)) {
                            ++lines;
                        } else {
                            int cv = cover_number(tw, v);
                            if (min_nonline_cover < 0 || cv < min_nonline_cover)
                                min_nonline_cover = cv;
                        }
                    }
                    std::cout << "lines: " << lines << "\n";
                    std::cout << "min_nonline_cover: " << min_nonline_cover << "\n";
                }
            }
        } else if (c_dirs->parsed()) {
            if (megyesi) {
                auto u = megyesi_set(tw);
                std::cout << "set:";
                for (Elt x : u) std::cout << " " << tw.encode(x);
                std::cout << "\n";
                auto d = direction_set(tw, u);
                std::cout << "directions: " << direction_set_to_string(tw, d) << "\n";
                std::cout << "count: " << d.size() << " (extremal " << (tw.q() + 3) / 2
                          << ")\n";
            } else {
                auto cen = direction_census(tw, s, mode == "exhaustive", budget, samples,
                                            seed, 16, jobs);
                std::string text = histogram_csv(cen);
                text += "# total=" + std::to_string(cen.total) +
                        " min_noncollinear=" + std::to_string(cen.min_noncollinear) +
                        " extremal=" + std::to_string(cen.extremal_count) + "\n";
                write_output(out_path, text);
            }
        } else if (c_bad->parsed()) {
            auto cands = enumerate_bad_candidates(tw, budget);
            std::vector<char> flags;
            if (refine) {
                CliqueEngine engine(tw);
                flags = refine_bad_candidates(engine, cands);
            }
            std::string text = refine ? "dirs,refined_bad\n" : "dirs\n";
            for (size_t i = 0; i < cands.size(); ++i) {
                text += "\"" + direction_set_to_string(tw, cands[i].dirs) + "\"";
                if (refine) text += flags[i] ? ",true" : ",false";
                text += "\n";
            }
            text += "# candidates=" + std::to_string(cands.size()) +
                    " fraction=" + rational_to_string(bad_fraction(tw, budget)) + "\n";
            write_output(out_path, text);
        } else if (c_bounds->parsed()) {
            std::cout << "density_upper_bound_product: "
                      << rational_to_string(density_upper_bound_product(tw.q())) << "\n";
            std::cout << "density_upper_bound_closed: " << density_upper_bound_closed(tw.q())
                      << "\n";
            if (m > 0 && c > 0)
                std::cout << "containment_fraction: "
                          << rational_to_string(containment_fraction(tw.q(), c, m)) << "\n";
            if (m > 0 && n > 1 && t >= 1 && t < n && n % t == 0) {
                auto [bern, prod] = noekr_lower_bound(p, n, t, m);
                std::cout << "noekr_lower_bound: " << rational_to_string(bern) << "\n";
                std::cout << "noekr_exact_product: " << rational_to_string(prod) << "\n";
            }
        }
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
