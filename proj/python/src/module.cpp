#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "burnside/cli.hpp"
#include "burnside/error.hpp"
#include "burnside/io.hpp"
#include "burnside/spectra.hpp"

namespace py = pybind11;
using namespace burnside;

namespace {

// One ring Omega(G, M) with its mark maps.
class Ring {
 public:
  Ring(const std::string& group, const std::string& functor, int cap_order) {
    auto g = std::make_shared<const FiniteGroup>(load_group(group, cap_order));
    auto subgroups = std::make_shared<const SubgroupLattice>(g);
    green_ = std::make_shared<GreenFunctor>(load_functor(functor, subgroups));
    basis_ = green_->basis();
    maps_ = std::make_shared<GhostMaps>(basis_);
  }

  int rank() const { return basis_->rank(); }
  std::string signature() const { return basis_->signature(); }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (int i = 0; i < basis_->rank(); ++i) out.push_back(basis_->label(i));
    return out;
  }

  std::vector<int> weyl_orders() const {
    std::vector<int> out;
    for (int i = 0; i < basis_->rank(); ++i) out.push_back(basis_->weyl(i).order());
    return out;
  }

  IntMatrix marks() const { return maps_->marks(); }
  IntMatrix lattice_marks() const { return maps_->lattice_marks(); }

  std::map<int, std::string> multiply(int i, int j) const {
    check_index(i);
    check_index(j);
    return coeffs(RingElement::basis_element(basis_, i) * RingElement::basis_element(basis_, j));
  }

  py::dict verify(const std::string& p) const {
    const FundamentalReport r = verify_fundamental(*maps_, Prime::parse(p));
    py::dict d;
    d["prime"] = r.prime.str();
    d["ok"] = r.ok();
    d["det"] = r.det.get_str();
    d["obstruction_order"] = r.obstruction_order.get_str();
    d["failures"] = r.failures;
    return d;
  }

  py::dict axioms() const {
    const AxiomReport r = axiom_report(*green_, green_->subgroups().whole());
    py::dict d;
    d["ok"] = r.ok();
    d["exhaustive"] = r.exhaustive;
    d["checked"] = r.checked;
    d["counterexamples"] = r.counterexamples;
    return d;
  }

  std::vector<std::vector<int>> classes(const std::string& p) const {
    return equivalence_classes(*maps_, Prime::parse(p)).classes;
  }

  std::vector<std::map<int, std::string>> idempotents(const std::string& p) const {
    std::vector<std::map<int, std::string>> out;
    const Prime prime = Prime::parse(p);
    if (prime.is_infinite()) {
      for (const auto& e : idempotents_rational(*maps_)) out.push_back(coeffs(e));
    } else {
      for (const auto& e : idempotents_local(*maps_, prime)) out.push_back(coeffs(e.element));
    }
    return out;
  }

  py::dict units(int cap_rank) const {
    const UnitGroup u = unit_group(*maps_, cap_rank);
    py::dict d;
    d["order"] = u.order;
    d["rank"] = u.rank;
    std::vector<std::map<int, std::string>> gens;
    for (const auto& g : u.generators) gens.push_back(coeffs(g));
    d["generators"] = gens;
    return d;
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= basis_->rank()) throw py::index_error("basis index out of range");
  }
  static std::map<int, std::string> coeffs(const RingElement& x) {
    std::map<int, std::string> out;
    for (const auto& [i, c] : x.coeffs()) out[i] = to_string(c);
    return out;
  }

  std::shared_ptr<GreenFunctor> green_;
  std::shared_ptr<const BasisSystem> basis_;
  std::shared_ptr<GhostMaps> maps_;
};

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lattice Burnside rings: marks, idempotents and units";

  static py::exception<Error> error(m, "BurnsideError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Ring>(m, "Ring")
      .def(py::init<const std::string&, const std::string&, int>(), py::arg("group"),
           py::arg("functor") = "trivial", py::arg("cap_order") = kDefaultOrderCap)
      .def_property_readonly("rank", &Ring::rank)
      .def_property_readonly("signature", &Ring::signature)
      .def("labels", &Ring::labels)
      .def("weyl_orders", &Ring::weyl_orders)
      .def("marks", &Ring::marks)
      .def("lattice_marks", &Ring::lattice_marks)
      .def("multiply", &Ring::multiply, py::arg("i"), py::arg("j"))
      .def("verify", &Ring::verify, py::arg("p") = "inf")
      .def("axioms", &Ring::axioms)
      .def("classes", &Ring::classes, py::arg("p"))
      .def("idempotents", &Ring::idempotents, py::arg("p") = "inf")
      .def("units", &Ring::units, py::arg("cap_rank") = kUnitRankCap);

  m.def("run", &run_cli, py::arg("args"),
        "Runs the command-line interface; returns (exit code, stdout, stderr).");
}
