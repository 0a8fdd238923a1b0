#include <sstream>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bclab/bar_complex.hpp"
#include "bclab/binate.hpp"
#include "bclab/circular_cochains.hpp"
#include "bclab/cli.hpp"
#include "bclab/errors.hpp"
#include "bclab/json_io.hpp"
#include "bclab/suites.hpp"
#include "bclab/thompson_actions.hpp"
#include "bclab/ubc_opt.hpp"

namespace py = pybind11;
using namespace bclab;

namespace {

py::object fraction(const mpq_class& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(rational_string(q));
}

mpq_class to_mpq(const py::handle& h) {
  mpq_class q(py::str(h).cast<std::string>());
  q.canonicalize();
  return q;
}

Dyadic to_dyadic(const py::handle& h) {
  if (py::isinstance<Dyadic>(h)) return h.cast<Dyadic>();
  if (py::isinstance<py::int_>(h)) return Dyadic(h.cast<long>());
  return Dyadic::parse(h.cast<std::string>());
}

std::vector<Dyadic> to_dyadics(const py::iterable& xs) {
  std::vector<Dyadic> out;
  for (const auto& x : xs) out.push_back(to_dyadic(x));
  return out;
}

CircTuple to_circ(const py::iterable& xs) {
  CircTuple out;
  for (const auto& x : to_dyadics(xs)) out.emplace_back(x);
  return out;
}

py::object json_to_py(const Json& j) {
  static py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

Chain to_chain(int degree, const py::dict& terms) {
  Chain z(degree);
  for (const auto& [k, v] : terms) z.add(k.cast<GroupTuple>(), to_mpq(v));
  return z;
}

py::dict from_chain(const Chain& z) {
  py::dict out;
  for (const auto& [t, c] : z.terms()) out[py::tuple(py::cast(t))] = fraction(c);
  return out;
}

py::dict estimate_dict(const Estimate& e) {
  py::dict d;
  d["samples"] = e.samples;
  d["nonzero_samples"] = e.nonzero_samples;
  d["bound"] = fraction(e.bound_exact);
  d["certified"] = e.certified;
  d["max_gap"] = e.max_gap;
  d["max_residual"] = e.max_residual;
  return d;
}

py::dict certificate_dict(const LPCertificate& c) {
  py::dict d;
  d["primal"] = c.primal_value;
  d["dual"] = c.dual_value;
  d["gap"] = c.gap;
  d["residual"] = c.feasibility_residual;
  d["exact"] = c.exact;
  d["certified"] = c.certified;
  return d;
}

SolveMode to_mode(const std::string& m) {
  if (m == "exact") return SolveMode::Exact;
  if (m == "float") return SolveMode::Float;
  throw ParseError("mode must be 'exact' or 'float'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact PL maps, bar complexes and LP certificates for bounded cohomology experiments";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<TruncationExceeded>(m, "TruncationExceeded", error.ptr());
  py::register_exception<SizeCapExceeded>(m, "SizeCapExceeded", error.ptr());

  py::class_<Dyadic>(m, "Dyadic")
      .def(py::init([](const py::object& v) { return to_dyadic(v); }))
      .def("__str__", &Dyadic::format)
      .def("__repr__", [](const Dyadic& d) { return "Dyadic('" + d.format() + "')"; })
      .def("__float__", &Dyadic::to_double)
      .def("to_fraction", [](const Dyadic& d) { return fraction(d.to_rational()); })
      .def("__eq__", [](const Dyadic& a, const py::object& b) { return a == to_dyadic(b); })
      .def("__lt__", [](const Dyadic& a, const py::object& b) { return a < to_dyadic(b); })
      .def("__hash__", [](const Dyadic& d) { return py::hash(py::str(d.format())); })
      .def("__add__", [](const Dyadic& a, const py::object& b) { return a + to_dyadic(b); })
      .def("__sub__", [](const Dyadic& a, const py::object& b) { return a - to_dyadic(b); })
      .def("__mul__", [](const Dyadic& a, const py::object& b) { return a * to_dyadic(b); })
      .def("__neg__", [](const Dyadic& a) { return -a; });

  py::class_<PLMap>(m, "PLMap")
      .def_static("identity", [](bool circle) { return PLMap::identity(circle ? Domain::Circle : Domain::Interval); },
                  py::arg("circle") = false)
      .def_static("rotation", [](const py::object& a) { return PLMap::rotation(to_dyadic(a)); })
      .def_static(
          "from_pieces",
          [](const py::list& pieces, bool circle) {
            std::vector<Piece> ps;
            for (const auto& p : pieces) {
              auto t = p.cast<py::tuple>();
              ps.push_back(Piece{to_dyadic(t[0]), t[1].cast<long>(), to_dyadic(t[2])});
            }
            return PLMap::from_pieces(circle ? Domain::Circle : Domain::Interval, std::move(ps));
          },
          py::arg("pieces"), py::arg("circle") = false,
          "Pieces are (left, slope exponent, offset): x -> 2^k x + offset on [left, next left).")
      .def_static("from_json", [](const std::string& s) { return pl_map_from_json(Json::parse(s)); })
      .def("__call__",
           [](const PLMap& f, const py::object& x) {
             const Dyadic d = to_dyadic(x);
             return f.domain() == Domain::Circle ? f(CirclePoint(d)).rep() : f(d);
           })
      .def("__eq__", [](const PLMap& a, const PLMap& b) { return a == b; })
      .def("__mul__", [](const PLMap& a, const PLMap& b) { return compose(a, b); })
      .def("inverse", [](const PLMap& f) { return invert(f); })
      .def("is_identity", &PLMap::is_identity)
      .def_property_readonly("is_circle", [](const PLMap& f) { return f.domain() == Domain::Circle; })
      .def_property_readonly("pieces",
                             [](const PLMap& f) {
                               py::list out;
                               for (const auto& p : f.pieces()) out.append(py::make_tuple(p.left, p.slope_exp, p.offset));
                               return out;
                             })
      .def("in_group",
           [](const PLMap& f, const std::string& g) {
             if (g != "F" && g != "T") throw ParseError("group must be 'F' or 'T'");
             return check_membership(f, g == "F" ? ThompsonGroup::F : ThompsonGroup::T).member;
           })
      .def("germ",
           [](const PLMap& f, int end) {
             if (end != 0 && end != 1) throw ParseError("end must be 0 or 1");
             return germ(f, end == 0 ? End::Zero : End::One);
           })
      .def("support",
           [](const PLMap& f) {
             py::list out;
             for (const auto& s : support(f)) out.append(py::make_tuple(fraction(s.lo), fraction(s.hi)));
             return out;
           })
      .def("to_json", [](const PLMap& f) { return to_json(f).dump(); });

  m.def("compose", [](const PLMap& f, const PLMap& g) { return compose(f, g); }, "x -> f(g(x))");
  m.def("commutator", [](const PLMap& f, const PLMap& g) { return commutator(f, g); }, "[f,g] = f^-1 g^-1 f g");
  m.def("circ_ordered", [](const py::iterable& t) { return circ_ordered(to_circ(t)); });
  m.def("interval_witness", [](const py::iterable& u, const py::iterable& v) {
    return interval_witness(to_dyadics(u), to_dyadics(v));
  });
  m.def("circle_witness", [](const py::iterable& u, const py::iterable& v) { return circle_witness(to_circ(u), to_circ(v)); });

  m.def("orient", [](int k, const py::iterable& t) { return orient_fk(k, to_circ(t)); });
  m.def("alt_cup_identity", [](int k) {
    const AltCupResult r = verify_alt_cup_identity(k);
    py::dict d;
    d["coefficient"] = fraction(r.coefficient);
    d["expected"] = fraction(r.expected);
    d["intermediate"] = fraction(r.intermediate);
    d["pass"] = r.pass;
    return d;
  });
  m.def("euler_cocycle", [](const py::object& x0, const PLMap& a, const PLMap& b, const PLMap& c) {
    return fraction(euler_cocycle(CirclePoint(to_dyadic(x0)), a, b, c));
  });

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def(py::init([](const std::string& name) { return FiniteGroup::parse(name); }))
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv);

  m.def("boundary", [](const FiniteGroup& G, int degree, const py::dict& z) {
    return from_chain(boundary(G, to_chain(degree, z)));
  });
  m.def("theta", [](const FiniteGroup& G, int g, int degree, const py::dict& z) {
    return from_chain(theta(G, g, to_chain(degree, z)));
  });
  m.def(
      "min_l1_primitive",
      [](const FiniteGroup& G, int degree, const py::dict& z, const std::string& mode) {
        const L1Primitive r = min_l1_primitive(G, to_chain(degree, z), to_mode(mode));
        py::dict d;
        d["primitive"] = from_chain(r.primitive);
        d["value"] = fraction(r.value);
        d["certificate"] = certificate_dict(r.certificate);
        return d;
      },
      py::arg("group"), py::arg("degree"), py::arg("z"), py::arg("mode") = "exact",
      "Minimal l1 chain c with boundary(c) = z; z maps tuples to rationals.");
  m.def(
      "ubc_estimate",
      [](const FiniteGroup& G, int degree, int samples, std::uint64_t seed, const std::string& mode) {
        return estimate_dict(ubc_estimate(G, degree, samples, seed, to_mode(mode)));
      },
      py::arg("group"), py::arg("degree"), py::arg("samples"), py::arg("seed"), py::arg("mode") = "exact");
  m.def(
      "modulus_estimate",
      [](const FiniteGroup& G, int degree, int samples, std::uint64_t seed, const std::string& mode) {
        return estimate_dict(modulus_estimate(G, degree, samples, seed, to_mode(mode)));
      },
      py::arg("group"), py::arg("degree"), py::arg("samples"), py::arg("seed"), py::arg("mode") = "exact");

  m.def(
      "dissipator",
      [](const py::object& a, const py::object& b, int depth) {
        const Dissipator d = build_dissipator(to_dyadic(a), to_dyadic(b), depth);
        py::dict out;
        out["x_minus1"] = d.spec.x_minus1;
        out["accumulation"] = d.spec.accumulation;
        out["t"] = d.spec.t;
        py::list ladder;
        const LadderReport lr = dissipation_ladder(d);
        for (const auto& [lo, hi] : lr.intervals) ladder.append(py::make_tuple(lo, hi));
        out["ladder"] = ladder;
        out["disjoint"] = lr.disjoint;
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("depth") = kDefaultDepth);
  m.def(
      "verify_witness",
      [](const py::object& a, const py::object& b, const std::vector<PLMap>& gens, int depth) {
        const PseudoMitosisWitness w = make_witness(gens, build_dissipator(to_dyadic(a), to_dyadic(b), depth));
        const WitnessReport r = verify_witness(w);
        py::dict out;
        out["pass"] = r.pass;
        out["window"] = r.window;
        py::list checks;
        for (const auto& c : r.checks) {
          py::dict cd;
          cd["name"] = c.name;
          cd["subject"] = c.subject;
          cd["pass"] = c.pass;
          checks.append(cd);
        }
        out["checks"] = checks;
        bool commutators = true;
        for (std::size_t i = 0; i < gens.size(); ++i)
          commutators = commutators && binate_commutator_check({{static_cast<int>(i), 1}}, w).psi0_form_matches;
        out["commutator_identity"] = commutators;
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("generators"), py::arg("depth") = kDefaultDepth,
      "Builds the pseudo-mitosis witness for generators supported in (a,b) and verifies it.");

  m.def("all_suite", [](std::uint64_t seed) { return json_to_py(to_json(all_suite(seed))); });
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs one command-line invocation; returns (exit code, stdout, stderr).");
}
