#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bubblepat/basis.hpp"
#include "bubblepat/classification.hpp"
#include "bubblepat/errors.hpp"
#include "bubblepat/operators.hpp"
#include "bubblepat/oracle.hpp"
#include "bubblepat/permutation.hpp"
#include "bubblepat/verify.hpp"
#include "bubblepat/version.hpp"

namespace py = pybind11;
using namespace bubblepat;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  const py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

std::vector<Permutation> set_to_list(const PermutationSet& ps) {
  return {ps.begin(), ps.end()};
}

PermutationSet list_to_set(const std::vector<Permutation>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

PYBIND11_MODULE(_bubblepat, m) {
  m.doc() = "one-pass bubble sort and pattern class toolkit";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "Error");

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<Word>(), py::arg("values"))
      .def_static("parse", [](const std::string& text) { return parse_permutation(text); })
      .def_property_readonly("values", &Permutation::values)
      .def("__len__", &Permutation::size)
      .def("__getitem__",
           [](const Permutation& p, int i) {
             if (i < 0 || i >= p.size()) throw py::index_error();
             return p[i];
           })
      .def("__str__", &Permutation::str)
      .def("__repr__",
           [](const Permutation& p) { return "Permutation(" + p.display() + ")"; })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__lt__", [](const Permutation& a, const Permutation& b) { return a < b; })
      .def("__hash__",
           [](const Permutation& p) {
             std::size_t h = 1469598103934665603ull;
             for (int v : p.values()) {
               h ^= static_cast<std::size_t>(v);
               h *= 1099511628211ull;
             }
             return h;
           })
      .def("display", &Permutation::display)
      .def("is_identity", &Permutation::is_identity)
      .def("ends_with_max", &Permutation::ends_with_max);

  m.def("parse", [](const std::string& text) { return parse_permutation(text); });
  m.def("standardize", [](const Word& w) { return standardize(w); });
  m.def("contains", &contains, py::arg("haystack"), py::arg("pattern"));
  m.def("one_point_deletions",
        [](const Permutation& p) { return set_to_list(one_point_deletions(p)); });
  m.def("minimal_elements", [](const std::vector<Permutation>& v) {
    return set_to_list(minimal_elements(list_to_set(v)));
  });
  m.def("lr_decompose", [](const Permutation& p) {
    const LrDecomposition d = lr_decompose(p);
    return py::make_tuple(d.maxima, d.gaps, d.positions);
  });

  m.def("bubble", &bubble_splice);
  m.def("bubble_recursive", &bubble_recursive);
  m.def("bubble_k", &bubble_k, py::arg("p"), py::arg("k"));
  m.def("stack_pass", &stack_pass);
  m.def("apply_chain", [](const Permutation& p, const std::string& chain) {
    return OperatorChain::parse(chain).apply(p);
  });

  py::class_<Classification>(m, "Classification")
      .def_property_readonly("case",
                             [](const Classification& c) { return case_name(c.kind); })
      .def_property_readonly("good", &Classification::good)
      .def_property_readonly("lr_maxima_positions",
                             [](const Classification& c) { return c.lr_positions; })
      .def_property_readonly("reduced",
                             [](const Classification& c) { return c.reduced; })
      .def("json", [](const Classification& c) { return json_to_py(nlohmann::json(c)); })
      .def("__repr__", [](const Classification& c) {
        return "Classification(" + case_name(c.kind) + ")";
      });

  m.def("classify", &classify);
  m.def("append_max", &append_max);
  m.def("witness_pair", &witness_pair);

  py::enum_<CrossCheck>(m, "CrossCheck")
      .value("AUTO", CrossCheck::Auto)
      .value("ON", CrossCheck::On)
      .value("OFF", CrossCheck::Off);

  py::class_<BasisResult>(m, "BasisResult")
      .def_property_readonly("outcome",
                             [](const BasisResult& r) {
                               return r.outcome == BasisOutcome::Basis ? "Basis"
                                                                       : "NotAClass";
                             })
      .def_property_readonly("basis",
                             [](const BasisResult& r) { return set_to_list(r.basis); })
      .def_property_readonly("witness", [](const BasisResult& r) { return r.witness; })
      .def_property_readonly("cross_checked",
                             [](const BasisResult& r) { return r.cross_checked; })
      .def_property_readonly("case_used",
                             [](const BasisResult& r) -> std::optional<std::string> {
                               if (!r.case_used) return std::nullopt;
                               return case_name(r.case_used->kind);
                             })
      .def("json", [](const BasisResult& r) { return json_to_py(nlohmann::json(r)); })
      .def("__repr__", [](const BasisResult& r) {
        return std::string("BasisResult(") +
               (r.outcome == BasisOutcome::Basis ? "Basis" : "NotAClass") + ")";
      });

  m.def("basis_one_lr", [](const Permutation& p) { return set_to_list(basis_one_lr(p)); });
  m.def("basis_two_lr", [](const Permutation& p) { return set_to_list(basis_two_lr(p)); });
  m.def("basis_special_three",
        [](const Permutation& p) { return set_to_list(basis_special_three(p)); });
  m.def("generate_r", [](const Permutation& p) { return set_to_list(generate_r(p)); });
  m.def("inverse_basis", &inverse_basis, py::arg("p"),
        py::arg("check") = CrossCheck::Auto, py::arg("horizon") = 0,
        py::arg("workers") = 1);
  m.def(
      "inverse_basis_set",
      [](const std::vector<Permutation>& ps, CrossCheck check, int horizon, int workers) {
        return inverse_basis_set(list_to_set(ps), check, horizon, workers);
      },
      py::arg("ps"), py::arg("check") = CrossCheck::Auto, py::arg("horizon") = 0,
      py::arg("workers") = 1);

  py::class_<DownsetReport>(m, "DownsetReport")
      .def_property_readonly("is_downset",
                             [](const DownsetReport& r) { return r.is_downset; })
      .def_property_readonly("horizon", [](const DownsetReport& r) { return r.horizon; })
      .def_property_readonly("outside", [](const DownsetReport& r) { return r.outside; })
      .def_property_readonly("inside", [](const DownsetReport& r) { return r.inside; })
      .def("json", [](const DownsetReport& r) { return json_to_py(nlohmann::json(r)); });

  py::class_<CountSequence>(m, "CountSequence")
      .def_property_readonly("counts", [](const CountSequence& c) { return c.counts; })
      .def_property_readonly("growth_points",
                             [](const CountSequence& c) { return c.growth_points; })
      .def("csv", [](const CountSequence& c) { return to_csv(c); })
      .def("json", [](const CountSequence& c) { return json_to_py(nlohmann::json(c)); });

  m.def("practical_cap", &practical_cap);
  m.def("set_practical_cap", &set_practical_cap);
  m.def("in_inverse_class", &in_inverse_class, py::arg("sigma"), py::arg("p"));
  m.def("downset_check", &downset_check, py::arg("p"), py::arg("horizon"),
        py::arg("workers") = 1);
  m.def(
      "check_set_class",
      [](const std::vector<Permutation>& ps, int horizon, int workers) {
        return check_set_class(list_to_set(ps), horizon, workers);
      },
      py::arg("ps"), py::arg("horizon"), py::arg("workers") = 1);
  m.def(
      "empirical_basis",
      [](const Permutation& p, int horizon, int workers) {
        return set_to_list(empirical_basis(p, horizon, workers));
      },
      py::arg("p"), py::arg("horizon"), py::arg("workers") = 1);
  m.def(
      "count_av",
      [](const std::vector<Permutation>& basis, int horizon) {
        return count_av(ClassSpec(list_to_set(basis)), horizon);
      },
      py::arg("basis"), py::arg("horizon"));
  m.def(
      "count_av_naive",
      [](const std::vector<Permutation>& basis, int horizon) {
        return count_av_naive(ClassSpec(list_to_set(basis)), horizon);
      },
      py::arg("basis"), py::arg("horizon"));
  m.def("growth_estimate", &growth_estimate);
  m.def("gamma", [](int k) { return set_to_list(gamma(k)); });
  m.def("verify_gamma", &verify_gamma, py::arg("k"), py::arg("horizon"),
        py::arg("workers") = 1);

  m.def("enumerate_sn", [](int n) {
    std::vector<Permutation> out;
    SnStream stream(n);
    while (auto p = stream.next()) out.push_back(*p);
    return out;
  });

  m.def(
      "run_suite",
      [](const std::string& name, int horizon, int workers) {
        const SuiteReport report = run_suite(parse_suite(name), horizon, workers);
        return py::make_tuple(report.all_passed(), render_text(report),
                              json_to_py(nlohmann::json(report)));
      },
      py::arg("suite"), py::arg("horizon") = 0, py::arg("workers") = 1);
}
