#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quasigrow/covering.hpp"
#include "quasigrow/deceptions.hpp"
#include "quasigrow/hyperlift.hpp"
#include "quasigrow/run_record.hpp"
#include "quasigrow/words.hpp"

namespace py = pybind11;
using namespace quasigrow;

namespace {

py::object fraction(const Rational& r) {
  static py::object frac = py::module_::import("fractions").attr("Fraction");
  return frac(py::int_(py::str(numerator(r).str())), py::int_(py::str(denominator(r).str())));
}

GoldenNumber to_golden(const py::handle& h) {
  if (py::isinstance<GoldenNumber>(h)) return h.cast<GoldenNumber>();
  if (py::isinstance<py::str>(h)) return GoldenNumber::parse(h.cast<std::string>());
  if (py::isinstance<py::int_>(h)) return GoldenNumber::parse(py::str(h).cast<std::string>());
  throw py::type_error("expected GoldenNumber, str or int");
}

PerpMode to_mode(const std::string& m) {
  if (m == "scaled") return PerpMode::scaled;
  if (m == "geometric") return PerpMode::geometric;
  throw py::value_error("mode must be 'scaled' or 'geometric'");
}

std::string letter_str(Letter l) { return std::string(1, to_char(l)); }

}  // namespace

PYBIND11_MODULE(_quasigrow, m) {
  m.doc() = "Fibonacci covering growth with locally adjusted string decorations";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<OutOfRange>(m, "OutOfRange", PyExc_ValueError);
  py::register_exception<ContainsBB>(m, "ContainsBB", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_ValueError);
  py::register_exception<DegenerateParameters>(m, "DegenerateParameters", PyExc_ValueError);
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", PyExc_RuntimeError);

  py::class_<GoldenNumber>(m, "GoldenNumber", "Exact p + q*tau with rational p, q")
      .def(py::init([](const py::object& x) { return to_golden(x); }), py::arg("value") = 0)
      .def_static("tau", &GoldenNumber::tau)
      .def_property_readonly("p", [](const GoldenNumber& g) { return fraction(g.p()); })
      .def_property_readonly("q", [](const GoldenNumber& g) { return fraction(g.q()); })
      .def("sign", [](const GoldenNumber& g) { return static_cast<int>(g.sign()); })
      .def("__float__", &GoldenNumber::to_double)
      .def("__str__", &GoldenNumber::to_string)
      .def("__repr__", [](const GoldenNumber& g) { return "GoldenNumber('" + g.to_string() + "')"; })
      .def("__hash__", [](const GoldenNumber& g) { return py::hash(py::str(g.to_string())); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self);
  py::implicitly_convertible<py::str, GoldenNumber>();
  py::implicitly_convertible<py::int_, GoldenNumber>();

  py::class_<GoldenInterval>(m, "GoldenInterval")
      .def_property_readonly("empty", &GoldenInterval::is_empty)
      .def_property_readonly("lo", &GoldenInterval::lo)
      .def_property_readonly("hi", &GoldenInterval::hi)
      .def_property_readonly("closed_lo", &GoldenInterval::closed_lo)
      .def_property_readonly("closed_hi", &GoldenInterval::closed_hi)
      .def("width", &GoldenInterval::width)
      .def("contains", &GoldenInterval::contains)
      .def("__str__", &GoldenInterval::to_string)
      .def("__repr__", [](const GoldenInterval& i) { return "GoldenInterval(" + i.to_string() + ")"; });

  m.def("mod_tau", &mod_tau);

  // Words travel as strings over {A, B}.
  m.def("substitute", [](const std::string& w) { return to_string(substitute(parse_word(w))); });
  m.def("fibonacci_word", [](std::size_t n) { return to_string(fibonacci_word(n)); });

  py::class_<ParseResult>(m, "ParseResult")
      .def_property_readonly("composed", [](const ParseResult& r) { return to_string(r.composed); })
      .def_readonly("leading_flag", &ParseResult::leading_flag)
      .def_readonly("trailing_flag", &ParseResult::trailing_flag);
  m.def("compose", [](const std::string& w) { return compose(parse_word(w)); });
  m.def(
      "deflation_illegality_depth",
      [](const std::string& w, std::size_t max_depth) {
        return deflation_illegality_depth(parse_word(w), max_depth);
      },
      py::arg("word"), py::arg("max_depth") = kReportDepthCap);
  m.def("is_factor", [](const std::string& w) { return is_factor(parse_word(w)); });
  m.def("factor_set", [](std::size_t n) {
    std::vector<std::string> out;
    for (const Word& w : factor_set(n)) out.push_back(to_string(w));
    return out;
  });
  m.def(
      "rotation_coding",
      [](double step_a, double step_b, double width, double y0, std::size_t n) {
        return to_string(rotation_coding(step_a, step_b, width, y0, n).word);
      },
      "Floating-point rotation coding (approximate).");

  py::class_<Covering>(m, "Covering")
      .def_property_readonly("letters", [](const Covering& c) { return to_string(c.letters()); })
      .def_property_readonly("heights", &Covering::left_heights)
      .def_property_readonly("origin_index", &Covering::origin_index)
      .def("__len__", &Covering::size)
      .def("to_json", [](const Covering& c) {
        return covering_json(c, c.empty() ? GoldenNumber() : c.tiles()[c.origin_index()].y_left(),
                             c.size() - c.origin_index() - 1, c.origin_index())
            .dump();
      });

  m.def(
      "grow",
      [](const GoldenNumber& seed, std::size_t n_right, std::size_t n_left) {
        return grow(seed, n_right, n_left);
      },
      py::arg("seed"), py::arg("n_right"), py::arg("n_left") = 0);
  m.def("classify", [](const GoldenNumber& y) { return letter_str(classify(y)); });
  m.def("step_right", [](const GoldenNumber& y) {
    auto [l, h] = step_right(y);
    return py::make_tuple(letter_str(l), h);
  });
  m.def("step_left", [](const GoldenNumber& y) {
    auto [l, h] = step_left(y);
    return py::make_tuple(letter_str(l), h);
  });
  m.def("can_attach", [](const GoldenNumber& y, const std::string& letter, const std::string& side) {
    const Word w = parse_word(letter);
    if (w.size() != 1) throw py::value_error("letter must be 'A' or 'B'");
    if (side != "left" && side != "right") throw py::value_error("side must be 'left' or 'right'");
    return can_attach(y, w[0], side == "left" ? Side::left : Side::right);
  });
  m.def("feasible_interval", [](const std::string& w) { return feasible_interval(parse_word(w)); });
  m.def("boundary_interval", [](const std::string& w) { return boundary_interval(parse_word(w)); });
  m.def("render_svg", &render_svg);

  m.def("lift", [](const std::string& w) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    for (const auto& p : lift(parse_word(w)).points) pts.emplace_back(p.x, p.y);
    return pts;
  });
  m.def(
      "perp_trace",
      [](const std::string& w, const GoldenNumber& offset, const std::string& mode) {
        return perp_trace(parse_word(w), offset, to_mode(mode)).coeffs;
      },
      py::arg("word"), py::arg("offset") = GoldenNumber(), py::arg("mode") = "scaled",
      "Exact trace coefficients; geometric ones are in units of 1/sqrt(tau + 2).");
  m.def(
      "strip_width",
      [](const std::string& w, const std::string& mode) {
        return strip_width(parse_word(w), to_mode(mode));
      },
      py::arg("word"), py::arg("mode") = "scaled");
  m.def("strip_consistency", [](const Covering& c) {
    const StripReport r = strip_consistency(c);
    return py::make_tuple(r.pass, r.first_violation);
  });

  py::class_<DeceptionReport>(m, "DeceptionReport")
      .def_property_readonly("word", [](const DeceptionReport& r) { return to_string(r.word); })
      .def_readonly("window", &DeceptionReport::window)
      .def_readonly("composition_depth_to_bb", &DeceptionReport::composition_depth_to_bb)
      .def_readonly("witness_windows", &DeceptionReport::witness_windows)
      .def("b_at_both_ends", &DeceptionReport::b_at_both_ends);
  m.def("is_deception",
        [](const std::string& w, std::size_t r) { return is_deception(parse_word(w), r); });
  m.def("enumerate_deceptions", &enumerate_deceptions, py::arg("length"), py::arg("window"),
        py::arg("budget") = kDefaultEnumerationBudget);
  m.def("min_deception_length", &min_deception_length, py::arg("window"),
        py::arg("budget") = kDefaultEnumerationBudget);

  py::class_<GrowthStatistics>(m, "GrowthStatistics")
      .def_readonly("trials", &GrowthStatistics::trials)
      .def_readonly("failures", &GrowthStatistics::failures)
      .def_readonly("stuck", &GrowthStatistics::stuck)
      .def_readonly("mean_failure_length", &GrowthStatistics::mean_failure_length)
      .def_property_readonly("failure_fraction", &GrowthStatistics::failure_fraction);
  m.def("greedy_growth_failure_demo", &greedy_growth_failure_demo, py::arg("window"),
        py::arg("trials"), py::arg("max_len"), py::arg("rng_seed"));
  m.def("covering_growth_failure_demo", &covering_growth_failure_demo, py::arg("trials"),
        py::arg("max_len"), py::arg("rng_seed"));

  m.attr("__version__") = tool_version();
}
