#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "invbruhat/bruhat.hpp"
#include "invbruhat/chains.hpp"
#include "invbruhat/elshell.hpp"
#include "invbruhat/fpclasses.hpp"
#include "invbruhat/incitti.hpp"
#include "invbruhat/permutation.hpp"
#include "invbruhat/report.hpp"

namespace py = pybind11;
using namespace invbruhat;

namespace {

Permutation to_perm(const py::handle& obj) {
  if (py::isinstance<Permutation>(obj)) return obj.cast<Permutation>();
  if (py::isinstance<py::str>(obj)) return Permutation::parse(obj.cast<std::string>());
  return Permutation::from_window(obj.cast<std::vector<int>>());
}

RiseLabel to_label(const std::pair<int, int>& pair) { return RiseLabel{pair.first, pair.second}; }
std::pair<int, int> from_label(RiseLabel label) { return {label.i, label.j}; }

py::dict chain_dict(const Chain& chain) {
  py::list labels;
  for (auto l : chain.labels) labels.append(py::make_tuple(l.i, l.j));
  py::dict d;
  d["elements"] = chain.elements;
  d["labels"] = labels;
  return d;
}

py::dict witness_dict(const Witness& w) {
  auto chain = [](const WitnessChain& c) {
    py::list labels;
    for (const auto& l : c.labels) {
      if (l) labels.append(py::make_tuple(l->i, l->j));
      else labels.append(py::none());
    }
    py::dict d;
    d["elements"] = c.elements;
    d["labels"] = labels;
    return d;
  };
  py::dict d;
  d["classes"] = w.spec.counts();
  d["bottom"] = w.bottom;
  d["top"] = w.top;
  d["long_chain"] = chain(w.long_chain);
  d["short_chain"] = chain(w.short_chain);
  d["verified"] = w.verified;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bruhat order on involutions of the symmetric group and the classes F_n^A";

  py::register_exception<Error>(m, "InvBruhatError", PyExc_ValueError);
  py::register_exception<ChainLimitExceeded>(m, "ChainLimitExceeded", PyExc_RuntimeError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const py::object& obj) { return to_perm(obj); }), py::arg("window"))
      .def_static("identity", &Permutation::identity)
      .def_static("reversal", &Permutation::reversal)
      .def_property_readonly("n", &Permutation::size)
      .def_property_readonly("window", &Permutation::window)
      .def("word", &Permutation::word)
      .def("__call__", [](const Permutation& p, int i) {
        if (i < 1 || i > p.size()) throw py::index_error("index outside 1..n");
        return p(i);
      })
      .def("__len__", &Permutation::size)
      .def("__str__", &Permutation::to_string)
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + p.to_string() + "')"; })
      .def("__hash__", [](const Permutation& p) { return std::hash<Permutation>{}(p); })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self);
  py::implicitly_convertible<py::str, Permutation>();
  py::implicitly_convertible<py::list, Permutation>();
  py::implicitly_convertible<py::tuple, Permutation>();

  m.def("compose", &compose);
  m.def("is_involution", &is_involution);
  m.def("statistics", [](const Permutation& p) {
    auto s = statistics(p);
    return py::make_tuple(s.inv, s.exc, s.fixed);
  }, "Returns (inv, exc, fixed points)");
  m.def("enumerate_involutions", &enumerate_involutions);

  m.def("bruhat_leq", &bruhat_leq);
  m.def("dot_table", [](const Permutation& p) {
    DotTable t(p);
    std::vector<std::vector<int>> rows;
    for (int k = 1; k <= t.size(); ++k) {
      auto& row = rows.emplace_back();
      for (int l = 1; l <= t.size(); ++l) row.push_back(t(k, l));
    }
    return rows;
  });

  m.def("classify_rise", [](const Permutation& p, std::pair<int, int> label) {
    return std::string(to_string(classify_rise(p, to_label(label))));
  });
  m.def("ct", [](const Permutation& p, std::pair<int, int> label) { return ct(p, to_label(label)); });
  m.def("ict", [](const Permutation& q, std::pair<int, int> label) { return ict(q, to_label(label)); });
  m.def("covers", [](const Permutation& p) {
    std::vector<std::pair<std::pair<int, int>, Permutation>> out;
    for (auto& c : covers(p)) out.emplace_back(from_label(c.label), c.target);
    return out;
  });

  m.def("di", &di);
  m.def("increasing_chain", [](const Permutation& p, const Permutation& q) { return chain_dict(increasing_chain(p, q)); });
  m.def("decreasing_chain", [](const Permutation& p, const Permutation& q) { return chain_dict(decreasing_chain(p, q)); });
  m.def("all_saturated_chains", [](const Permutation& p, const Permutation& q, std::size_t limit) {
    py::list out;
    for (auto& c : all_saturated_chains(p, q, limit)) out.append(chain_dict(c));
    return out;
  }, py::arg("p"), py::arg("q"), py::arg("limit") = kDefaultChainLimit);

  m.def("enumerate_class", [](int n, std::vector<int> classes) {
    return enumerate_class(FixedPointSpec::make(n, std::move(classes)));
  });
  m.def("is_graded_theorem1", [](int n, std::vector<int> classes) {
    return is_graded_theorem1(FixedPointSpec::make(n, std::move(classes)));
  });
  m.def("is_graded_bruteforce", [](int n, std::vector<int> classes) {
    const auto spec = FixedPointSpec::make(n, std::move(classes));
    const PosetView view = class_view(spec);
    const Grading g = is_graded_bruteforce(view);
    py::dict ranks;
    if (g.ranks) {
      for (std::size_t x = 0; x < view.size(); ++x) ranks[py::cast(view.element(x))] = (*g.ranks)[x];
    }
    return py::make_tuple(g.graded, g.ranks ? py::object(ranks) : py::object(py::none()));
  }, "Returns (graded, {element: rank} or None)");
  m.def("rank_in_In", &rank_in_In);
  m.def("rank_value", [](const Permutation& p, int n, std::vector<int> classes) {
    return rank_value(p, FixedPointSpec::make(n, std::move(classes)));
  });
  m.def("class_rank", [](int n, std::vector<int> classes) {
    return class_rank(FixedPointSpec::make(n, std::move(classes)));
  });
  m.def("top_element", [](int n, std::vector<int> classes) {
    return top_element(FixedPointSpec::make(n, std::move(classes)));
  });
  m.def("minimal_elements", [](int n, std::vector<int> classes) {
    return minimal_elements(FixedPointSpec::make(n, std::move(classes)));
  });
  m.def("prop19_witness", [](int n, int i) { return witness_dict(prop19_witness(n, i)); });
  m.def("prop20_witness", [](int n, int i, int mm) { return witness_dict(prop20_witness(n, i, mm)); });

  m.def("lemma21_check", [](const Permutation& p, const Permutation& q) {
    auto r = lemma21_check(p, q);
    return py::make_tuple(r.holds, chain_dict(r.chain));
  });
  m.def("el_check", [](int n, std::vector<int> classes, bool reversed) {
    const PosetView view = labelled_class_view(FixedPointSpec::make(n, std::move(classes)));
    const ElReport r = el_check(view, reversed ? LabelOrder::reversed_lex : LabelOrder::standard_lex);
    py::list violations;
    for (const auto& v : r.violations) violations.append(py::make_tuple(v.bottom, v.top, v.reason));
    return py::make_tuple(to_string(r.status), violations);
  }, py::arg("n"), py::arg("classes"), py::arg("reversed") = false);
  m.def("find_escaping_interval", [](int n, std::vector<int> classes) -> py::object {
    auto found = find_escaping_interval(FixedPointSpec::make(n, std::move(classes)));
    if (!found) return py::none();
    return py::make_tuple(found->bottom, found->top, found->midpoint, to_string(found->kind));
  });

  m.def("hasse_dot", [](int n, std::vector<int> classes) {
    return cmd_hasse(FixedPointSpec::make(n, std::move(classes)), Format::dot).body;
  });
}
