#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptg/census.hpp"

namespace py = pybind11;
using namespace ptg;

PYBIND11_MODULE(_ptgraph, m) {
    m.doc() = "exact-arithmetic laboratory for Peisert-type graphs";

    py::register_exception<FieldError>(m, "FieldError");
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
    py::register_exception<GeomError>(m, "GeomError");
    py::register_exception<GraphError>(m, "GraphError");

    py::class_<FieldTower>(m, "FieldTower")
        .def(py::init<int, int>(), py::arg("p"), py::arg("n") = 1)
        .def_property_readonly("p", &FieldTower::p)
        .def_property_readonly("n", &FieldTower::n)
        .def_property_readonly("q", &FieldTower::q)
        .def_property_readonly("q2", &FieldTower::q2)
        .def_property_readonly("v", &FieldTower::v)
        .def("elem", &FieldTower::elem)
        .def("a_of", &FieldTower::a_of)
        .def("b_of", &FieldTower::b_of)
        .def("add2", &FieldTower::add2)
        .def("sub2", &FieldTower::sub2)
        .def("neg2", &FieldTower::neg2)
        .def("mul2", &FieldTower::mul2)
        .def("inv2", &FieldTower::inv2)
        .def("pow2", &FieldTower::pow2)
        .def("frobenius", &FieldTower::frobenius)
        .def("in_base_field", &FieldTower::in_base_field)
        .def("dir_of", &FieldTower::dir_of)
        .def("encode", &FieldTower::encode)
        .def("decode", &FieldTower::decode)
        .def("describe_json", &FieldTower::describe_json);

    m.def("sigma", &sigma);
    m.def("direction_of_pair", &direction_of_pair);
    m.def("direction_set", &direction_set);
    m.def("collinear", &collinear);
    m.def("direction_to_string", &direction_to_string);
    m.def("direction_from_string", &direction_from_string);
    m.def("direction_set_to_string", &direction_set_to_string);
    m.def("direction_set_from_string", &direction_set_from_string);

    py::class_<PeisertGraph>(m, "PeisertGraph")
        .def(py::init<const FieldTower&, DirectionSet>(), py::keep_alive<1, 2>())
        .def_property_readonly("dirs", &PeisertGraph::dirs)
        .def_property_readonly("m", &PeisertGraph::m)
        .def("adjacent", &PeisertGraph::adjacent)
        .def("connection_set", &PeisertGraph::connection_set)
        .def("coset_rep", &PeisertGraph::coset_rep)
        .def("canonical_cliques_through", &PeisertGraph::canonical_cliques_through)
        .def("is_clique", &PeisertGraph::is_clique)
        .def("is_canonical", &PeisertGraph::is_canonical)
        .def("srg_parameters",
             [](const PeisertGraph& g) -> py::object {
                 auto p = g.srg_parameters();
                 if (!p) return py::none();
                 return py::make_tuple(p->vertices, p->degree, p->lambda, p->mu);
             })
        .def("key", &PeisertGraph::key)
        .def_static("from_key", &PeisertGraph::from_key, py::keep_alive<0, 1>())
        .def_static("key_q", &PeisertGraph::key_q);

    py::enum_<SearchMethod>(m, "SearchMethod")
        .value("SubspacePath", SearchMethod::SubspacePath)
        .value("GeneralSearch", SearchMethod::GeneralSearch)
        .value("CoveringShortcut", SearchMethod::CoveringShortcut);

    py::class_<EkrVerdict>(m, "EkrVerdict")
        .def_readonly("holds", &EkrVerdict::holds)
        .def_readonly("witness", &EkrVerdict::witness)
        .def_readonly("method", &EkrVerdict::method);

    py::class_<StVerdict>(m, "StVerdict")
        .def_readonly("k_num", &StVerdict::k_num)
        .def_readonly("k_den", &StVerdict::k_den)
        .def_readonly("threshold", &StVerdict::threshold)
        .def_readonly("holds", &StVerdict::holds)
        .def_readonly("witness", &StVerdict::witness);

    py::class_<CliqueEngine>(m, "CliqueEngine")
        .def(py::init<const FieldTower&>(), py::keep_alive<1, 2>())
        .def("max_cliques_through_zero", &CliqueEngine::max_cliques_through_zero,
             py::arg("graph"), py::arg("force_general") = false)
        .def("strict_ekr", &CliqueEngine::strict_ekr, py::arg("graph"),
             py::arg("verify") = false)
        .def("st_property", &CliqueEngine::st_property, py::arg("graph"),
             py::arg("k_num"), py::arg("k_den") = 1)
        .def("clique_extension_search", &CliqueEngine::clique_extension_search)
        .def("clique_number", &CliqueEngine::clique_number)
        .def("has_deficient_maximal_clique", &CliqueEngine::has_deficient_maximal_clique);

    m.def("grassmannian_count",
          [](int p, int n) { return grassmannian_count(p, n).str(); });
    m.def("cover_numbers", [](const FieldTower& tw) {
        std::vector<int> out;
        for (const auto& v : enumerate_subspaces(tw, tw.n()))
            out.push_back(cover_number(tw, v));
        return out;
    });

    m.def("megyesi_set", &megyesi_set);
    py::class_<DirectionCensus>(m, "DirectionCensus")
        .def_readonly("histogram", &DirectionCensus::histogram)
        .def_readonly("total", &DirectionCensus::total)
        .def_readonly("min_noncollinear", &DirectionCensus::min_noncollinear)
        .def_readonly("extremal_count", &DirectionCensus::extremal_count)
        .def_readonly("extremal_witnesses", &DirectionCensus::extremal_witnesses)
        .def_readonly("sampled", &DirectionCensus::sampled);
    m.def("direction_census", &direction_census, py::arg("tower"), py::arg("s"),
          py::arg("exhaustive"), py::arg("budget") = 200'000'000ull,
          py::arg("samples") = 0, py::arg("seed") = 0, py::arg("witness_cap") = 16,
          py::arg("jobs") = 1);
    m.def("affinely_equivalent",
          [](const FieldTower& tw, const PointSet& a, const PointSet& b) {
              return affinely_equivalent(tw, a, b).has_value();
          });
    m.def("enumerate_bad_candidates", [](const FieldTower& tw) {
        std::vector<DirectionSet> out;
        for (const auto& c : enumerate_bad_candidates(tw)) out.push_back(c.dirs);
        return out;
    });

    m.def("enumerate_graph_dirsets", &enumerate_graph_dirsets, py::arg("tower"),
          py::arg("m"), py::arg("budget") = std::uint64_t{1} << 20);
    m.def("sample_graph_dirsets", &sample_graph_dirsets);
    m.def("classify_csv",
          [](const FieldTower& tw, const std::vector<DirectionSet>& dirsets, bool with_st,
             long k_num, long k_den, int jobs) {
              CensusOptions opts;
              opts.with_st = with_st;
              opts.st_k_num = k_num;
              opts.st_k_den = k_den;
              opts.jobs = jobs;
              return records_to_csv(tw, classify_graphs(tw, dirsets, opts));
          },
          py::arg("tower"), py::arg("dirsets"), py::arg("with_st") = false,
          py::arg("k_num") = 0, py::arg("k_den") = 1, py::arg("jobs") = 1);
    m.def("ekr_density_json", [](const FieldTower& tw, int m, bool exhaustive,
                                 std::uint64_t samples, std::uint64_t seed) {
        return density_report_to_json(ekr_density(tw, m, exhaustive, samples, seed));
    });
    m.def("noekr_lower_bound", [](int p, int n, int t, int mm) {
        auto [bern, prod] = noekr_lower_bound(p, n, t, mm);
        return py::make_tuple(rational_to_string(bern), rational_to_string(prod));
    });
    m.def("containment_fraction", [](int q, int c, int mm) {
        return rational_to_string(containment_fraction(q, c, mm));
    });
    m.def("bad_fraction",
          [](const FieldTower& tw) { return rational_to_string(bad_fraction(tw)); });
}
