#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maxwelter/closed_form.hpp"
#include "maxwelter/errors.hpp"
#include "maxwelter/grundy.hpp"
#include "maxwelter/periodicity.hpp"
#include "maxwelter/reduce.hpp"
#include "maxwelter/verify.hpp"
#include "maxwelter/welter_fn.hpp"

namespace py = pybind11;
using namespace maxwelter;

namespace {

using MovePair = std::pair<Square, Square>;

std::vector<MovePair> as_pairs(const std::vector<Move>& moves) {
  std::vector<MovePair> out;
  out.reserve(moves.size());
  for (const auto& m : moves) out.emplace_back(m.from, m.to);
  return out;
}

py::dict report_dict(const PeriodReport& r) {
  py::dict d;
  d["preperiod_start"] = r.preperiod_start;
  d["period"] = r.period;
  d["additive_step"] = r.additive_step;
  d["horizon"] = r.horizon;
  d["verified_at_horizon"] = r.verified_at_horizon;
  d["counterexample"] = r.counterexample ? py::cast(*r.counterexample) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Max-Welter game engine: Grundy oracle, closed forms, reductions, checks";

  py::register_exception<InvalidPosition>(m, "InvalidPosition", PyExc_ValueError);
  py::register_exception<IllegalMove>(m, "IllegalMove", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_MemoryError);
  py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_AssertionError);

  py::enum_<Ruleset>(m, "Ruleset")
      .value("MAX_WELTER", Ruleset::MaxWelter)
      .value("WELTER", Ruleset::Welter);
  py::enum_<Convention>(m, "Convention")
      .value("NORMAL", Convention::Normal)
      .value("MISERE", Convention::Misere);
  py::enum_<Outcome>(m, "Outcome").value("P", Outcome::P).value("N", Outcome::N);

  py::class_<Position>(m, "Position")
      .def(py::init<std::vector<Square>>(), py::arg("squares"))
      .def_static("parse", [](const std::string& text) { return parse_position(text).position; })
      .def_property_readonly("squares",
                             [](const Position& p) {
                               return std::vector<Square>(p.squares().begin(), p.squares().end());
                             })
      .def("__len__", &Position::size)
      .def("__str__", &Position::to_string)
      .def("__repr__", [](const Position& p) { return "Position(" + p.to_string() + ")"; })
      .def("__eq__", [](const Position& a, const Position& b) { return a == b; })
      .def("__hash__", [](const Position& p) { return std::hash<Position>{}(p); });
  py::implicitly_convertible<py::list, Position>();
  py::implicitly_convertible<py::tuple, Position>();

  m.def("legal_moves", [](const Position& p, Ruleset r) { return as_pairs(legal_moves(p, r)); },
        py::arg("position"), py::arg("ruleset") = Ruleset::MaxWelter);
  m.def("apply_move",
        [](const Position& p, Square from, Square to, Ruleset r) {
          return apply_move(p, Move{from, to}, r);
        },
        py::arg("position"), py::arg("from_square"), py::arg("to_square"),
        py::arg("ruleset") = Ruleset::MaxWelter);
  m.def("is_terminal", [](const Position& p) { return is_terminal(p); });

  m.def("mex", [](std::vector<GrundyValue> v) { return mex(v); });
  m.def("grundy", py::overload_cast<const Position&, Ruleset, Convention>(&grundy),
        py::arg("position"), py::arg("ruleset") = Ruleset::MaxWelter,
        py::arg("convention") = Convention::Normal, py::call_guard<py::gil_scoped_release>());
  m.def("outcome", py::overload_cast<const Position&, Ruleset, Convention>(&outcome),
        py::arg("position"), py::arg("ruleset") = Ruleset::MaxWelter,
        py::arg("convention") = Convention::Normal);
  m.def("optimal_moves",
        [](const Position& p, Ruleset r, Convention c) { return as_pairs(optimal_moves(p, r, c)); },
        py::arg("position"), py::arg("ruleset") = Ruleset::MaxWelter,
        py::arg("convention") = Convention::Normal);

  m.def("is_p_position_normal", &is_p_position_normal);
  m.def("has_value_one_normal", &has_value_one_normal);
  m.def("corollary_value", &corollary_value);
  m.def("check_value_two_gap", &check_value_two_gap);
  m.def("winning_move_closed_form", [](const Position& p) {
    Move mv = winning_move_closed_form(p);
    return MovePair{mv.from, mv.to};
  });
  m.def("is_p_position_misere", &is_p_position_misere);
  m.def("has_value_one_misere", &has_value_one_misere);

  m.def("drop_small_coin", &drop_small_coin);
  m.def("replace_prefix", [](const Position& p, std::size_t i, std::vector<Square> prefix) {
    return replace_prefix(p, i, prefix);
  });
  m.def("canonicalize", [](const Position& p) { return maxwelter::canonicalize(p); });

  m.def("nim_add", &nim_add);
  m.def("pair_value", &pair_value);
  m.def("mate", [](const Position& p) {
    auto r = mate(p);
    py::dict d;
    d["pairs"] = r.pairs;
    d["spinster"] = r.spinster ? py::cast(*r.spinster) : py::none();
    d["value"] = r.value;
    return d;
  });
  m.def("welter_value", &welter_value);

  m.def("find_additive_shift",
        [](const Position& prefix, Square top, std::size_t horizon) {
          auto s = find_additive_shift(prefix, top, horizon);
          return py::make_tuple(s.shift, report_dict(s.report));
        },
        py::arg("prefix"), py::arg("top"), py::arg("horizon") = 50);
  m.def("check_translation_invariance",
        [](const Position& p) { return check_translation_invariance(p); });
  m.def("scan_translation_period",
        [](const Position& p, std::size_t horizon) {
          return report_dict(scan_translation_period(p, horizon));
        },
        py::arg("position"), py::arg("horizon") = 100);
  m.def("scan_arithmetic_progression",
        [](Square a, Square step, std::size_t k, std::size_t horizon) {
          return report_dict(scan_arithmetic_progression(a, step, k, horizon));
        },
        py::arg("a"), py::arg("m"), py::arg("k"), py::arg("horizon") = 100);

  m.def("suite_ids", [] {
    std::vector<std::string> out;
    for (auto id : suite_ids()) out.emplace_back(id);
    return out;
  });
  m.def("run_suite",
        [](const std::string& id, std::size_t k_min, std::size_t k_max, Square max_square,
           std::uint64_t seed) {
          SuiteOptions options;
          options.seed = seed;
          SuiteReport r;
          {
            py::gil_scoped_release release;
            r = run_suite(id, PositionSpace{k_min, k_max, max_square}, options);
          }
          py::list counterexamples;
          for (const auto& c : r.counterexamples) {
            counterexamples.append(py::make_tuple(c.position, c.expected, c.actual));
          }
          py::dict d;
          d["suite_id"] = r.suite_id;
          d["positions_checked"] = r.positions_checked;
          d["skipped"] = r.skipped;
          d["counterexamples"] = counterexamples;
          d["elapsed_ms"] = r.elapsed.count();
          d["report"] = format_report(r);
          return d;
        },
        py::arg("suite_id"), py::arg("k_min"), py::arg("k_max"), py::arg("max_square"),
        py::arg("seed") = kDefaultSeed);
}
