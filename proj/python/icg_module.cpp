#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "icg/cli.hpp"
#include "icg/energy.hpp"
#include "icg/number_theory.hpp"
#include "icg/search.hpp"
#include "icg/transform.hpp"

namespace py = pybind11;
using namespace icg;

namespace {

Natural to_natural(const py::int_& x) {
  return Natural::parse(py::str(py::handle(x)).cast<std::string>());
}

py::int_ to_py(const Natural& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::object to_fraction(const Rational& q) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(boost::multiprecision::numerator(q)), to_py(boost::multiprecision::denominator(q)));
}

std::vector<Natural> naturals(const std::vector<py::int_>& xs) {
  std::vector<Natural> out;
  for (const auto& x : xs) out.push_back(to_natural(x));
  return out;
}

py::list set_to_py(const DivisorSet& d) {
  py::list out;
  for (const auto& e : d.elements()) out.append(to_py(e));
  return out;
}

PrimePowerOrder order_of(const py::int_& p, unsigned s) { return PrimePowerOrder(to_natural(p), s); }

py::dict step_to_py(const TransformStep& st) {
  py::dict d;
  d["label"] = to_string(st.site.label);
  d["u"] = st.site.u;
  d["v"] = st.site.v ? py::object(py::int_(*st.site.v)) : py::none();
  d["mirrored"] = st.site.mirrored;
  d["before"] = st.before.entries();
  d["after"] = st.after.entries();
  d["energy_before"] = to_py(st.energy_before);
  d["energy_after"] = to_py(st.energy_after);
  d["strict"] = st.strict;
  return d;
}

py::dict trace_to_py(const Trace& t) {
  py::dict d;
  d["initial"] = t.initial.entries();
  py::list steps;
  for (const auto& st : t.steps) steps.append(step_to_py(st));
  d["steps"] = steps;
  d["terminal"] = t.terminal.entries();
  return d;
}

py::tuple report_to_py(const MaximizerReport& r) {
  py::list sets;
  for (const auto& d : r.maximizers) sets.append(set_to_py(d));
  return py::make_tuple(to_py(r.emax), sets, r.examined);
}

}  // namespace

PYBIND11_MODULE(_icg, m) {
  m.doc() = "Exact energies of integral circulant graphs";
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.def("energy", [](const py::int_& p, unsigned s, std::vector<unsigned> exponents) {
    return to_py(energy_prime_power(order_of(p, s), ExponentTuple(std::move(exponents), s)));
  }, py::arg("p"), py::arg("s"), py::arg("exponents"));

  m.def("energy_general", [](const py::int_& n, const std::vector<py::int_>& divisors, unsigned jobs) {
    const Natural order = to_natural(n);
    const DivisorSet set(naturals(divisors), order);
    Natural e;
    {
      py::gil_scoped_release release;
      e = energy_general(order, set, jobs);
    }
    return to_py(e);
  }, py::arg("n"), py::arg("divisors"), py::arg("jobs") = 1);

  m.def("spectrum", [](const py::int_& n, const std::vector<py::int_>& divisors) {
    const Natural order = to_natural(n);
    py::list out;
    for (const auto& l : spectrum_gcd_graph(order, DivisorSet(naturals(divisors), order)).eigenvalues) {
      out.append(to_py(l));
    }
    return out;
  }, py::arg("n"), py::arg("divisors"));

  m.def("h_value", [](const py::int_& p, std::vector<unsigned> exponents) {
    const unsigned s = exponents.empty() ? 1 : exponents.back() + 1;
    return to_fraction(h_value(to_natural(p), ExponentTuple(std::move(exponents), s)));
  }, py::arg("p"), py::arg("exponents"));

  m.def("h_equidistant", [](const py::int_& p, unsigned s) { return to_fraction(h_equidistant(to_natural(p), s)); },
        py::arg("p"), py::arg("s"));

  m.def("emax", [](const py::int_& p, unsigned s) {
    const auto r = emax_closed(order_of(p, s));
    py::list tuples;
    for (const auto& t : r.maximizers) tuples.append(py::tuple(py::cast(t.entries())));
    return py::make_tuple(to_py(r.value), tuples);
  }, py::arg("p"), py::arg("s"));

  m.def("emax_alternative", [](const py::int_& p, unsigned s) {
    const auto r = emax_alternative(order_of(p, s));
    return py::make_tuple(to_py(r.factor), to_py(r.cofactor));
  }, py::arg("p"), py::arg("s"));

  m.def("emin", [](const py::int_& p, unsigned s) {
    const auto r = emin_closed(order_of(p, s));
    py::list sets;
    for (const auto& d : r.minimizers) sets.append(set_to_py(d));
    return py::make_tuple(to_py(r.value), sets);
  }, py::arg("p"), py::arg("s"));

  m.def("classify", [](const py::int_& n, const std::vector<py::int_>& divisors) {
    const Natural order = to_natural(n);
    return to_string(classify_energeticity(order, DivisorSet(naturals(divisors), order)));
  }, py::arg("n"), py::arg("divisors"));

  m.def("koolen_moulton_check", [](const py::int_& n, const py::int_& e) {
    return koolen_moulton_check(to_natural(n), to_natural(e));
  }, py::arg("n"), py::arg("energy"));

  m.def("brute_force_emax", [](const py::int_& p, unsigned s, unsigned jobs) {
    const auto order = order_of(p, s);
    MaximizerReport r;
    {
      py::gil_scoped_release release;
      r = brute_force_emax_prime_power(order, jobs);
    }
    return report_to_py(r);
  }, py::arg("p"), py::arg("s"), py::arg("jobs") = 1);

  m.def("brute_force_emax_general", [](const py::int_& n, unsigned jobs) {
    const Natural order = to_natural(n);
    MaximizerReport r;
    {
      py::gil_scoped_release release;
      r = brute_force_emax_general(order, jobs);
    }
    return report_to_py(r);
  }, py::arg("n"), py::arg("jobs") = 1);

  m.def("verify_theorem", [](const py::int_& p, unsigned s, unsigned jobs) {
    const auto c = verify_theorem(order_of(p, s), jobs);
    return py::make_tuple(c.ok, c.discrepancies);
  }, py::arg("p"), py::arg("s"), py::arg("jobs") = 1);

  m.def("canonical_maximizer", [](const py::int_& p, unsigned s) {
    py::list out;
    for (const auto& d : canonical_maximizer(order_of(p, s))) out.append(py::tuple(py::cast(d.entries())));
    return out;
  }, py::arg("p"), py::arg("s"));

  m.def("normalize", [](const py::int_& p, unsigned s, std::vector<unsigned> delta) {
    return trace_to_py(normalize(DeltaVector(std::move(delta), s), order_of(p, s)));
  }, py::arg("p"), py::arg("s"), py::arg("delta"));

  m.def("replay", [](const py::int_& p, unsigned s, std::vector<unsigned> delta, const py::list& sites) {
    std::vector<RuleSite> parsed;
    for (const auto& item : sites) {
      const auto t = item.cast<py::tuple>();
      RuleSite site{};
      site.label = parse_label(t[0].cast<std::string>());
      site.u = t[1].cast<std::size_t>();
      if (t.size() > 2 && !t[2].is_none()) site.v = t[2].cast<std::size_t>();
      if (t.size() > 3) site.mirrored = t[3].cast<bool>();
      parsed.push_back(site);
    }
    return trace_to_py(replay(DeltaVector(std::move(delta), s), order_of(p, s), parsed));
  }, py::arg("p"), py::arg("s"), py::arg("delta"), py::arg("sites"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
