#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schalg/action.hpp"
#include "schalg/complexes.hpp"
#include "schalg/invariants.hpp"
#include "schalg/named_chains.hpp"
#include "schalg/series.hpp"
#include "schalg/verify.hpp"

namespace py = pybind11;
using namespace schalg;

namespace {

py::object fraction(const Rational& q) {
  static py::object F = py::module_::import("fractions").attr("Fraction");
  return F(q.get_num().get_str(), q.get_den().get_str());
}

Rational from_py(py::handle h) {
  py::object num = h.attr("numerator"), den = h.attr("denominator");
  Rational q(mpz_class(py::str(num).cast<std::string>()),
             mpz_class(py::str(den).cast<std::string>()));
  q.canonicalize();
  return q;
}

py::dict chain_terms(const Chain& c) {
  py::dict out;
  std::vector<int> tup;
  const ModuleSpace& s = c.space;
  for (const auto& [idx, v] : c.terms) {
    uint64_t r = idx;
    py::tuple key;
    if (s.kind() == SpaceKind::CoeffWedge) {
      int cp = static_cast<int>(r / s.wedge_count());
      r %= s.wedge_count();
      s.unrank_tuple(r, tup);
      py::list labels;
      for (int p : tup) labels.append(s.algebra().label(s.factors()[p]).str());
      key = py::make_tuple(s.algebra().label(s.coeff()[cp]).str(),
                           py::tuple(labels));
    } else {
      s.unrank_tuple(r, tup);
      py::list labels;
      for (int p : tup) labels.append(s.algebra().label(s.factors()[p]).str());
      key = py::tuple(labels);
    }
    out[key] = fraction(v);
  }
  return out;
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  static py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact homology computations for the Schrodinger and Galilei "
            "Lie algebras";

  py::class_<LieAlgebra, std::shared_ptr<LieAlgebra>>(m, "LieAlgebra")
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("n", &LieAlgebra::n)
      .def_property_readonly("name",
                             [](const LieAlgebra& L) {
                               return algebra_name_str(L.name());
                             })
      .def_property_readonly("basis",
                             [](const LieAlgebra& L) {
                               std::vector<std::string> out;
                               for (const auto& b : L.basis()) out.push_back(b.str());
                               return out;
                             })
      .def("bracket",
           [](std::shared_ptr<const LieAlgebra> L, int i, int j) {
             py::dict out;
             for (const auto& t : L->br(i, j))
               out[py::int_(t.k)] = fraction(t.c);
             return out;
           },
           py::arg("i"), py::arg("j"))
      .def_property_readonly("gradings", &LieAlgebra::gradings);

  py::class_<ModuleSpace>(m, "ModuleSpace")
      .def_property_readonly("dim", &ModuleSpace::dim)
      .def_property_readonly("k", &ModuleSpace::k)
      .def("describe", &ModuleSpace::describe);

  py::class_<Chain>(m, "Chain")
      .def_property_readonly("space", [](const Chain& c) { return c.space; })
      .def_property_readonly("terms", &chain_terms)
      .def("is_zero", &Chain::is_zero)
      .def("__str__", &Chain::str)
      .def("scaled", [](const Chain& c, py::object s) {
        Chain out = c;
        out *= from_py(s);
        return out;
      });

  m.def("build_algebra",
        [](const std::string& name, int n) {
          return std::const_pointer_cast<LieAlgebra>(
              LieAlgebra::build(parse_algebra_name(name), n));
        },
        py::arg("name"), py::arg("n"));

  m.def("check_tables", [](std::shared_ptr<const LieAlgebra> L) {
    TableReport rep = check_tables(*L);
    py::list out;
    for (const auto& r : rep.relations)
      out.append(py::make_tuple(r.text, r.pass));
    return out;
  });

  m.def("named_chain",
        [](std::shared_ptr<const LieAlgebra> L, const std::string& name) {
          return named_chain(L, parse_chain_name(name));
        },
        py::arg("algebra"), py::arg("name"));

  m.def("wedge_space",
        [](std::shared_ptr<const LieAlgebra> L, const std::string& over, int k) {
          const auto& factors = over == "ideal" ? L->ideal_part()
                                : over == "boosts" ? L->boosts()
                                : over == "momenta"
                                    ? L->momenta()
                                    : throw std::invalid_argument(
                                          "over must be ideal|boosts|momenta");
          return ModuleSpace::wedge(L, factors, k);
        },
        py::arg("algebra"), py::arg("over"), py::arg("k"));

  m.def("act",
        [](const Chain& w, int x) { return act(w, x); },
        py::arg("chain"), py::arg("generator"));
  m.def("antisymmetrize",
        [](const Chain& w) { return antisymmetrize(w); });
  m.def("loday_boundary_chain", &loday_boundary_chain);
  m.def("ce_boundary_chain",
        [](const Chain& w) { return ce_boundary_chain(w); });

  m.def("betti",
        [](std::shared_ptr<const LieAlgebra> L, const std::string& flavor,
           int max_degree, uint64_t seed, int primes) {
          ComplexSpec spec{L, parse_flavor(flavor), max_degree + 1};
          BettiOptions opt;
          opt.strategy.seed = seed;
          opt.strategy.prime_count = primes;
          return json_to_py(homology_report_json(betti(spec, 0, max_degree, opt)));
        },
        py::arg("algebra"), py::arg("flavor"), py::arg("max_degree"),
        py::arg("seed") = kDefaultSeed, py::arg("primes") = 2);

  m.def("invariant_subspace",
        [](std::shared_ptr<const LieAlgebra> L, const std::string& acting,
           const std::string& module, int k) {
          ModuleSpace space = lemma_module(L, parse_module_shape(module), k);
          InvariantReport rep =
              invariant_subspace(L, parse_acting(acting), space);
          return json_to_py(invariant_report_json(rep));
        },
        py::arg("algebra"), py::arg("acting"), py::arg("module"), py::arg("k"));

  m.def("lemma_suite", [](int n) { return json_to_py(lemma_suite_json(lemma_suite(n))); });
  m.def("claims_report",
        [](int n) { return json_to_py(claims_report_json(claims_report(n))); });

  m.def("tensor_series", [](std::vector<int64_t> a, std::vector<int64_t> b) {
    PoincareSeries A, B;
    A.c = std::move(a);
    B.c = std::move(b);
    return tensor(A, B).c;
  });
  m.def("free_product_series",
        [](std::vector<int64_t> a, std::vector<int64_t> b) {
          PoincareSeries A, B;
          A.c = std::move(a);
          B.c = std::move(b);
          return free_product(A, B).c;
        });
  m.def("predicted_series",
        [](const std::string& target, int n, int gamma_degree, bool beta_included,
           int truncation) {
          PredictOptions po;
          po.gamma_degree = gamma_degree;
          po.beta_included = beta_included;
          return predicted_series(parse_series_target(target), n, po, truncation).c;
        },
        py::arg("target"), py::arg("n"), py::arg("gamma_degree") = 0,
        py::arg("beta_included") = false, py::arg("truncation") = 8);
}
