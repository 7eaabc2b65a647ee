#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "schubert/cli.hpp"
#include "schubert/problems.hpp"

namespace py = pybind11;
using namespace schubert;

namespace {

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

std::vector<int> from_partition(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

Frame frame_arg(const std::string& text) { return Frame::parse(text); }

Twist twist_arg(const std::string& text) { return parse_twist(text); }

py::tuple key(const Partition& p) { return py::tuple(py::cast(from_partition(p))); }

py::dict chow_dict(const ChowClass& x) {
  py::dict out;
  for (const auto& [p, c] : x.terms()) out[key(p)] = c;
  return out;
}

std::vector<std::vector<int>> ch2_list(const Ch2Class& x) {
  std::vector<std::vector<int>> out;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) out.push_back(from_partition(*it));
  return out;
}

py::dict w_dict(const WClass& x) {
  py::dict out;
  for (const auto& [k, c] : x.terms()) out[key(x.diagram(k))] = c;
  return out;
}

py::object degree_obj(const Degree& d) {
  if (const auto* gw = std::get_if<GWForm>(&d)) return py::make_tuple(gw->pos, gw->neg);
  return py::int_(std::get<Int>(d));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chow-Witt Schubert calculus on Grassmannians";

  py::register_exception<Error>(m, "SchubertError", PyExc_ValueError);

  m.def(
      "mult",
      [](const std::string& frame, const std::vector<std::vector<int>>& factors) {
        const Frame f = frame_arg(frame);
        ChowClass x = ChowClass::one(f);
        for (const auto& p : factors) x = mult(x, ChowClass::basis(f, to_partition(p)));
        return chow_dict(x);
      },
      py::arg("frame"), py::arg("factors"), "Product of Schubert classes as {partition: coefficient}.");

  m.def(
      "sq2",
      [](const std::string& frame, const std::vector<std::vector<int>>& terms, const std::string& twist,
         bool wu) {
        const Frame f = frame_arg(frame);
        Ch2Class x(f);
        for (const auto& p : terms) x.toggle(to_partition(p));
        return ch2_list(wu ? sq2_wu(x, twist_arg(twist)) : sq2(x, twist_arg(twist)));
      },
      py::arg("frame"), py::arg("terms"), py::arg("twist") = "o", py::arg("wu") = false);

  m.def(
      "wmult",
      [](const std::string& frame, const std::vector<std::vector<int>>& factors) {
        const Frame f = frame_arg(frame);
        WClass x = WClass::one(f);
        for (const auto& p : factors) x = wmult(x, WClass::from_diagram(f, to_partition(p)));
        return w_dict(x);
      },
      py::arg("frame"), py::arg("factors"), "Product in W-cohomology, keyed by even diagram.");

  m.def(
      "decompose_even",
      [](const std::string& frame, const std::vector<int>& p) {
        const EvenDecomposition d = decompose_even(to_partition(p), frame_arg(frame));
        return py::make_tuple(from_partition(d.core), to_string(d.extra));
      },
      py::arg("frame"), py::arg("partition"));

  m.def(
      "even_diagrams",
      [](const std::string& frame) {
        std::vector<std::vector<int>> out;
        for (const auto& p : even_diagrams(frame_arg(frame))) out.push_back(from_partition(p));
        return out;
      },
      py::arg("frame"));

  m.def(
      "schubert_problem",
      [](const std::string& frame, const std::vector<std::pair<std::vector<int>, std::string>>& factors) {
        std::vector<std::pair<Partition, Twist>> fs;
        for (const auto& [p, t] : factors) fs.emplace_back(to_partition(p), twist_arg(t));
        return degree_obj(schubert_problem(fs, frame_arg(frame)));
      },
      py::arg("frame"), py::arg("factors"),
      "Degree of a product of canonical lifts: (pos, neg) for a GW form, else an int.");

  m.def(
      "balanced", [](int i, int j) { return degree_obj(balanced(i, j)); }, py::arg("i"), py::arg("j"));
  m.def(
      "p1_power", [](int n, int max_n) { return degree_obj(p1_power(n, max_n)); }, py::arg("n"),
      py::arg("max_n") = 10);
  m.def(
      "plucker", [](int n) { return degree_obj(plucker(n).result); }, py::arg("n"));
  m.def("catalan", &catalan, py::arg("n"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line front end; returns (exit code, stdout, stderr).");
}
