// Python bindings. Documents cross the boundary as JSON text; the package
// wrapper decodes them.
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tautilt/decide.hpp"
#include "tautilt/io.hpp"
#include "tautilt/repcheck.hpp"

namespace py = pybind11;
using namespace tautilt;

namespace {

GroupPresentation abelian(const std::string& spec) {
  auto parsed = io::parse_group_spec(spec, "abelian");
  auto pres = std::get<GroupPresentation>(parsed);
  require_valid(pres);
  return pres;
}

std::string decide(const std::string& spec, std::optional<std::string> mode, std::optional<std::size_t> max_len) {
  auto parsed = io::parse_group_spec(spec, mode);
  Verdict v;
  if (auto* pres = std::get_if<GroupPresentation>(&parsed)) {
    py::gil_scoped_release release;
    v = decide_abelian(*pres, DecideOptions{max_len});
  } else {
    v = decide_frattini(std::get<FrattiniInput>(parsed));
  }
  return io::dump(io::verdict_to_json(v));
}

std::string quiver(const std::string& spec, bool reduced) {
  auto pres = abelian(spec);
  if (reduced) pres = reduce_to_hyperfocal(pres);
  return io::dump(io::quiver_to_json(build_bound_quiver(eigencharacters(pres))));
}

std::string hyperfocal(const std::string& spec) { return io::dump(io::hyperfocal_to_json(hyperfocal_data(abelian(spec)))); }

std::string zigzag_cycles(const std::string& quiver_doc, std::optional<std::size_t> max_len) {
  auto q = io::quiver_from_json(io::parse_json(quiver_doc));
  io::Json out = io::Json::array();
  std::vector<ZigzagCycle> cycles;
  {
    py::gil_scoped_release release;
    cycles = find_qualifying_cycles(q, max_len.value_or(default_max_length(q)));
  }
  for (const auto& c : cycles) out.push_back(io::cycle_to_json(c));
  return io::dump(out);
}

py::dict check_certificate(const std::string& quiver_doc, const std::vector<std::size_t>& arrows) {
  auto q = io::quiver_from_json(io::parse_json(quiver_doc));
  auto check = validate_zigzag(q, arrows);
  py::dict out;
  out["valid"] = check.ok();
  if (!check.ok()) {
    out["clause"] = clause_name(check.violation->clause);
    out["message"] = check.violation->message;
    out["qualifies"] = false;
    return out;
  }
  auto qual = is_qualifying(q, *check.cycle);
  out["qualifies"] = qual.qualifies;
  out["reason"] = qual.reason_name();
  return out;
}

py::dict rep_report(const std::string& quiver_doc, const std::string& rep_doc) {
  auto q = io::quiver_from_json(io::parse_json(quiver_doc));
  auto rep = io::rep_from_json(q, io::parse_json(rep_doc));
  auto violated = eval_relations(q, rep);
  auto dim = endomorphism_dimension(q, rep);
  py::dict out;
  out["relations_ok"] = !violated.has_value();
  out["endomorphism_dimension"] = dim;
  out["brick"] = dim == 1;
  if (violated) out["violated_generator"] = *violated;
  return out;
}

std::size_t count_bricks(const std::string& quiver_doc, const std::vector<std::size_t>& dims, Int field_q) {
  auto q = io::quiver_from_json(io::parse_json(quiver_doc));
  auto field = field_of_order(field_q);
  py::gil_scoped_release release;
  return enumerate_bricks(q, dims, field).count;
}

std::vector<std::vector<Int>> table_counts(const std::string& table_doc) {
  auto counts = table_arrow_counts(io::table_from_json(io::parse_json(table_doc)));
  std::vector<std::vector<Int>> out(counts.rows());
  for (std::size_t r = 0; r < counts.rows(); ++r)
    for (std::size_t c = 0; c < counts.cols(); ++c) out[r].push_back(counts(r, c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "tau-tilting finiteness of P x| H with P abelian";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<SearchSpaceTooLarge>(m, "SearchSpaceTooLarge", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("decide", &decide, py::arg("spec"), py::arg("mode") = py::none(), py::arg("max_cycle_len") = py::none());
  m.def("quiver", &quiver, py::arg("spec"), py::arg("reduced") = false);
  m.def("hyperfocal", &hyperfocal, py::arg("spec"));
  m.def("zigzag_cycles", &zigzag_cycles, py::arg("quiver"), py::arg("max_cycle_len") = py::none());
  m.def("check_certificate", &check_certificate, py::arg("quiver"), py::arg("arrows"));
  m.def("check_rep", &rep_report, py::arg("quiver"), py::arg("rep"));
  m.def("count_bricks", &count_bricks, py::arg("quiver"), py::arg("dims"), py::arg("field_q") = 2);
  m.def("table_arrow_counts", &table_counts, py::arg("table"));
}
