// tautilt command-line front end.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tautilt/chartable.hpp"
#include "tautilt/decide.hpp"
#include "tautilt/errors.hpp"
#include "tautilt/io.hpp"
#include "tautilt/repcheck.hpp"
#include "tautilt/zigzag.hpp"

namespace {

using namespace tautilt;
using io::Json;

enum Exit { kOk = 0, kUsage = 2, kUnknown = 3, kInvalid = 4, kInternal = 5 };

struct Options {
  std::string spec;
  std::string second;
  std::string out;
  std::string dot;
  std::string mode;
  std::string check;
  std::string dims;
  std::size_t max_cycle_len = 0;
  std::size_t limit = 0;
  Int field_q = 2;
  bool reduced = false;
  bool table = false;
};

void emit(const Options& o, const Json& j) {
  if (o.out.empty())
    std::cout << io::dump(j);
  else
    io::write_file(o.out, io::dump(j));
}

std::optional<std::string> mode_of(const Options& o) {
  return o.mode.empty() ? std::nullopt : std::optional<std::string>(o.mode);
}

GroupPresentation abelian_spec(const Options& o) {
  auto spec = io::parse_group_spec(io::read_file(o.spec), mode_of(o));
  if (!std::holds_alternative<GroupPresentation>(spec))
    throw InvalidInput("this subcommand needs an abelian-mode group spec");
  return std::get<GroupPresentation>(spec);
}

int run_decide(const Options& o) {
  auto spec = io::parse_group_spec(io::read_file(o.spec), mode_of(o));
  Verdict v;
  if (auto* pres = std::get_if<GroupPresentation>(&spec)) {
    DecideOptions opts;
    if (o.max_cycle_len) opts.max_cycle_len = o.max_cycle_len;
    v = decide_abelian(*pres, opts);
  } else {
    v = decide_frattini(std::get<FrattiniInput>(spec));
  }
  emit(o, io::verdict_to_json(v));
  return v.outcome == Outcome::Unknown ? kUnknown : kOk;
}

int run_quiver(const Options& o) {
  BoundQuiver q;
  if (o.table) {
    auto table = io::table_from_json(io::parse_json(io::read_file(o.spec)));
    q = quiver_from_character_table(table);
  } else {
    auto pres = abelian_spec(o);
    require_valid(pres);
    if (o.reduced) pres = reduce_to_hyperfocal(pres);
    q = build_bound_quiver(eigencharacters(pres));
  }
  if (!o.dot.empty()) io::write_file(o.dot, to_dot(q));
  emit(o, io::quiver_to_json(q));
  return kOk;
}

int run_hyperfocal(const Options& o) {
  auto pres = abelian_spec(o);
  require_valid(pres);
  emit(o, io::hyperfocal_to_json(hyperfocal_data(pres)));
  return kOk;
}

int run_zigzag(const Options& o) {
  std::optional<BoundQuiver> q;
  if (!o.spec.empty()) q = io::quiver_from_json(io::parse_json(io::read_file(o.spec)));

  if (!o.check.empty()) {
    auto cert = io::certificate_from_json(io::parse_json(io::read_file(o.check)));
    if (!q) q = cert.quiver;
    if (!q) throw InvalidInput("no quiver given and the certificate embeds none");
    auto check = validate_zigzag(*q, cert.arrows);
    Json j = {{"valid", check.ok()}};
    if (!check.ok()) {
      j["violation"] = {{"clause", clause_name(check.violation->clause)},
                        {"index", check.violation->index},
                        {"message", check.violation->message}};
      emit(o, j);
      return kInvalid;
    }
    auto qual = is_qualifying(*q, *check.cycle);
    j["qualifies"] = qual.qualifies;
    j["reason"] = qual.reason_name();
    if (qual.generator) j["generator"] = *qual.generator;
    j["cycle"] = io::cycle_to_json(*check.cycle);
    emit(o, j);
    return qual.qualifies ? kOk : kInvalid;
  }

  if (!q) throw InvalidInput("zigzag needs a quiver file");
  std::size_t bound = o.max_cycle_len ? o.max_cycle_len : default_max_length(*q);
  auto cycles = find_qualifying_cycles(*q, bound);
  Json list = Json::array();
  for (const auto& c : cycles) {
    if (o.limit && list.size() >= o.limit) break;
    list.push_back(io::cycle_to_json(c));
  }
  emit(o, {{"max_cycle_len", bound}, {"total", cycles.size()}, {"cycles", std::move(list)}});
  return kOk;
}

int run_check_rep(const Options& o) {
  auto q = io::quiver_from_json(io::parse_json(io::read_file(o.spec)));
  auto rep = io::rep_from_json(q, io::parse_json(io::read_file(o.second)));
  auto violated = eval_relations(q, rep);
  auto dim = endomorphism_dimension(q, rep);
  Json j = {{"relations_ok", !violated.has_value()}, {"endomorphism_dimension", dim}, {"brick", dim == 1}};
  if (violated) j["violated_generator"] = *violated;
  emit(o, j);
  return kOk;
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      dims.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw InvalidInput("--dims expects comma-separated nonnegative integers");
    }
  }
  return dims;
}

int run_oracle_bricks(const Options& o) {
  auto q = io::quiver_from_json(io::parse_json(io::read_file(o.spec)));
  if (!o.check.empty()) {
    auto cert = io::certificate_from_json(io::parse_json(io::read_file(o.check)));
    auto check = validate_zigzag(q, cert.arrows);
    if (!check.ok()) throw InvalidInput("certificate is not a zigzag cycle: " + check.violation->message);
    q = cycle_subquiver(q, *check.cycle);
  }
  auto dims = o.dims.empty() ? std::vector<std::size_t>(q.vertex_count(), 1) : parse_dims(o.dims);
  auto result = enumerate_bricks(q, dims, field_of_order(o.field_q));
  Json reps = Json::array();
  for (const auto& r : result.representatives) reps.push_back(io::rep_to_json(q, r));
  emit(o, {{"q", o.field_q}, {"count", result.count}, {"representatives", std::move(reps)}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tau-tilting finiteness of P x| H with P abelian"};
  app.require_subcommand(1);
  Options o;

  auto out_flag = [&](CLI::App* c) { c->add_option("-o,--output", o.out, "write the JSON document here"); };

  auto* decide = app.add_subcommand("decide", "decide tau-tilting finiteness of a group spec");
  decide->add_option("spec", o.spec, ".group.json file")->required()->check(CLI::ExistingFile);
  decide->add_option("--mode", o.mode, "abelian | frattini")->check(CLI::IsMember({"abelian", "frattini"}));
  decide->add_option("--max-cycle-len", o.max_cycle_len, "zigzag search bound (default 2 |vertices|)");
  out_flag(decide);

  auto* quiver = app.add_subcommand("quiver", "bound quiver of kG");
  quiver->add_option("spec", o.spec, ".group.json file, or a character table with --table")
      ->required()
      ->check(CLI::ExistingFile);
  quiver->add_flag("--reduced", o.reduced, "quiver of the hyperfocal reduction");
  quiver->add_flag("--table", o.table, "input is a character table document");
  quiver->add_option("--dot", o.dot, "also write Graphviz DOT here");
  quiver->add_option("--mode", o.mode)->check(CLI::IsMember({"abelian"}));
  out_flag(quiver);

  auto* hyper = app.add_subcommand("hyperfocal", "hyperfocal subgroup [P,H] and centralizer C_P(H)");
  hyper->add_option("spec", o.spec, ".group.json file")->required()->check(CLI::ExistingFile);
  out_flag(hyper);

  auto* zigzag = app.add_subcommand("zigzag", "qualifying zigzag cycles of a quiver, or check a certificate");
  zigzag->add_option("quiver", o.spec, ".quiver.json file")->check(CLI::ExistingFile);
  zigzag->add_option("--check", o.check, "certificate or verdict document to validate")->check(CLI::ExistingFile);
  zigzag->add_option("--max-cycle-len", o.max_cycle_len, "search bound (default 2 |vertices|)");
  zigzag->add_option("--limit", o.limit, "list at most this many cycles");
  out_flag(zigzag);

  auto* check_rep = app.add_subcommand("check-rep", "relations and brick test for a representation");
  check_rep->add_option("quiver", o.spec, ".quiver.json file")->required()->check(CLI::ExistingFile);
  check_rep->add_option("rep", o.second, ".rep.json file")->required()->check(CLI::ExistingFile);
  out_flag(check_rep);

  auto* bricks = app.add_subcommand("oracle-bricks", "brute-force brick isoclasses at a dimension vector");
  bricks->add_option("quiver", o.spec, ".quiver.json file")->required()->check(CLI::ExistingFile);
  bricks->add_option("--dims", o.dims, "comma-separated dimension per vertex (default all 1)");
  bricks->add_option("--field-q", o.field_q, "field order q")->check(CLI::PositiveNumber);
  bricks->add_option("--cycle", o.check, "restrict to the subquiver of this certificate")->check(CLI::ExistingFile);
  out_flag(bricks);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*decide) return run_decide(o);
    if (*quiver) return run_quiver(o);
    if (*hyper) return run_hyperfocal(o);
    if (*zigzag) return run_zigzag(o);
    if (*check_rep) return run_check_rep(o);
    if (*bricks) return run_oracle_bricks(o);
  } catch (const InternalError& e) {
    std::cerr << "tautilt: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "tautilt: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "tautilt: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
