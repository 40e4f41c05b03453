#include "tautilt/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "tautilt/modular.hpp"

namespace tautilt::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError((where.empty() ? std::string("/") : where) + ": " + what);
}

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t index) { return where + "/" + std::to_string(index); }

void only_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; });
    if (!known) fail(where, "unknown field \"" + it.key() + "\"");
  }
}

const Json& need(const Json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

Int get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    fail(where, "integer out of range");
  return j.get<Int>();
}

std::size_t get_index(const Json& j, const std::string& where) {
  Int v = get_int(j, where);
  if (v < 0) fail(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

const Json& get_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::vector<Int> get_int_list(const Json& j, const std::string& where) {
  std::vector<Int> out;
  const auto& arr = get_array(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(get_int(arr[i], at(where, i)));
  return out;
}

// rows x cols integer matrix, entries reduced mod `modulus` when positive
IntMatrix get_matrix(const Json& j, const std::string& where, std::size_t rows, std::size_t cols, Int modulus) {
  const auto& arr = get_array(j, where);
  if (arr.size() != rows)
    fail(where, "matrix has " + std::to_string(arr.size()) + " rows, expected " + std::to_string(rows));
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string row_at = where + " row " + std::to_string(r);
    if (!arr[r].is_array()) fail(row_at, "expected an array");
    if (arr[r].size() != cols)
      fail(row_at, "has " + std::to_string(arr[r].size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) {
      Int v = get_int(arr[r][c], where + " row " + std::to_string(r) + " column " + std::to_string(c));
      m(r, c) = modulus > 0 ? modular::reduce(v, modulus) : v;
    }
  }
  return m;
}

template <class M>
Json matrix_to_json(const M& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json label_to_json(const ArrowLabel& l) { return Json::array({l.exponent, l.index}); }

ArrowLabel label_from_json(const Json& j, const std::string& where) {
  const auto& arr = get_array(j, where);
  if (arr.size() != 2) fail(where, "a label is [exponent, index]");
  return {static_cast<int>(get_int(arr[0], at(where, 0))), static_cast<int>(get_int(arr[1], at(where, 1)))};
}

Json ints(const std::vector<Int>& v) {
  Json out = Json::array();
  for (Int x : v) out.push_back(x);
  return out;
}

Json indices(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

// generator index -> entry, each generator exactly once
std::vector<const Json*> action_entries(const Json& action, std::size_t generators) {
  const auto& arr = get_array(action, "/action");
  std::vector<const Json*> by_gen(generators, nullptr);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string where = at("/action", i);
    if (!arr[i].is_object()) fail(where, "expected an object");
    std::size_t g = get_index(need(arr[i], where, "generator"), at(where, "generator"));
    if (g >= generators) fail(at(where, "generator"), "H has only " + std::to_string(generators) + " generators");
    if (by_gen[g]) fail(at(where, "generator"), "generator " + std::to_string(g) + " appears twice");
    by_gen[g] = &arr[i];
  }
  for (std::size_t g = 0; g < generators; ++g)
    if (!by_gen[g]) fail("/action", "no matrices for generator " + std::to_string(g));
  return by_gen;
}

std::string action_path(const Json& action, const Json* entry) {
  for (std::size_t i = 0; i < action.size(); ++i)
    if (&action[i] == entry) return at("/action", i);
  return "/action";
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.what() is "[json.exception.parse_error.101] parse error at line L, column C: ..."
    std::string msg = e.what();
    auto pos = msg.find("] ");
    throw ParseError(pos == std::string::npos ? msg : msg.substr(pos + 2));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

GroupSpec parse_group_spec(const std::string& text, std::optional<std::string> mode) {
  Json doc = parse_json(text);
  if (!doc.is_object()) fail("", "expected an object");
  std::string file_mode = "abelian";
  if (auto it = doc.find("mode"); it != doc.end()) {
    if (!it->is_string()) fail("/mode", "expected \"abelian\" or \"frattini\"");
    file_mode = it->get<std::string>();
    if (mode && *mode != file_mode) fail("/mode", "file says \"" + file_mode + "\" but \"" + *mode + "\" was requested");
  } else if (mode) {
    file_mode = *mode;
  }
  if (file_mode != "abelian" && file_mode != "frattini") fail("/mode", "unknown mode \"" + file_mode + "\"");

  if (file_mode == "frattini")
    only_keys(doc, "", {"p", "mode", "n", "H", "action"});
  else
    only_keys(doc, "", {"p", "mode", "P", "H", "action"});
  Int p = get_int(need(doc, "", "p"), "/p");
  if (!modular::is_prime(p)) fail("/p", std::to_string(p) + " is not prime");
  const Json& hdoc = need(doc, "", "H");
  only_keys(hdoc, "/H", {"orders"});
  auto orders = get_int_list(need(hdoc, "/H", "orders"), "/H/orders");
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] < 1) fail(at("/H/orders", i), "generator orders must be positive");
  AbelianGroupH H(orders);
  const Json& action = need(doc, "", "action");
  auto entries = action_entries(action, orders.size());

  if (file_mode == "frattini") {
    FrattiniInput inp;
    inp.p = p;
    inp.n = get_index(need(doc, "", "n"), "/n");
    inp.H = H;
    for (const Json* e : entries) {
      std::string where = action_path(action, e);
      only_keys(*e, where, {"generator", "matrix"});
      inp.matrices.push_back(get_matrix(need(*e, where, "matrix"), at(where, "matrix"), inp.n, inp.n, p));
    }
    return inp;
  }

  const Json& pdoc = need(doc, "", "P");
  only_keys(pdoc, "/P", {"blocks"});
  const auto& barr = get_array(need(pdoc, "/P", "blocks"), "/P/blocks");
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < barr.size(); ++i) {
    std::string where = at("/P/blocks", i);
    only_keys(barr[i], where, {"exponent", "multiplicity"});
    Int e = get_int(need(barr[i], where, "exponent"), at(where, "exponent"));
    Int t = get_int(need(barr[i], where, "multiplicity"), at(where, "multiplicity"));
    if (e < 1 || e > 62) fail(at(where, "exponent"), "exponent must lie in [1, 62]");
    if (t < 1 || t > 4096) fail(at(where, "multiplicity"), "multiplicity must lie in [1, 4096]");
    blocks.push_back({static_cast<int>(e), static_cast<int>(t)});
  }
  for (std::size_t i = 1; i < blocks.size(); ++i)
    if (blocks[i].exponent <= blocks[i - 1].exponent)
      fail(at(at("/P/blocks", i), "exponent"), "block exponents must strictly increase");
  GroupPresentation pres{AbelianPGroup(p, blocks), H, {}};
  for (const Json* e : entries) {
    std::string where = action_path(action, e);
    only_keys(*e, where, {"generator", "blocks"});
    const auto& mats = get_array(need(*e, where, "blocks"), at(where, "blocks"));
    if (mats.size() != blocks.size())
      fail(at(where, "blocks"), "expected " + std::to_string(blocks.size()) + " block matrices, got " +
                                    std::to_string(mats.size()));
    BlockMatrix bm;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      auto t = static_cast<std::size_t>(blocks[b].multiplicity);
      bm.blocks.push_back(get_matrix(mats[b], at(at(where, "blocks"), b), t, t, pres.P.modulus(b)));
    }
    pres.action.push_back(std::move(bm));
  }
  return pres;
}

Json group_spec_to_json(const GroupPresentation& pres) {
  Json blocks = Json::array();
  for (const auto& b : pres.P.blocks()) blocks.push_back({{"exponent", b.exponent}, {"multiplicity", b.multiplicity}});
  Json action = Json::array();
  for (std::size_t g = 0; g < pres.action.size(); ++g) {
    Json mats = Json::array();
    for (const auto& m : pres.action[g].blocks) mats.push_back(matrix_to_json(m));
    action.push_back({{"generator", g}, {"blocks", std::move(mats)}});
  }
  return {{"p", pres.P.p()},
          {"mode", "abelian"},
          {"P", {{"blocks", std::move(blocks)}}},
          {"H", {{"orders", ints(pres.H.orders())}}},
          {"action", std::move(action)}};
}

Json group_spec_to_json(const FrattiniInput& inp) {
  Json action = Json::array();
  for (std::size_t g = 0; g < inp.matrices.size(); ++g)
    action.push_back({{"generator", g}, {"matrix", matrix_to_json(inp.matrices[g])}});
  return {{"p", inp.p},
          {"mode", "frattini"},
          {"n", inp.n},
          {"H", {{"orders", ints(inp.H.orders())}}},
          {"action", std::move(action)}};
}

std::string serialize_group_spec(const GroupSpec& spec) {
  return std::visit([](const auto& s) { return dump(group_spec_to_json(s)); }, spec);
}

// ---------------------------------------------------------------------------

Json quiver_to_json(const BoundQuiver& q) {
  Json j;
  j["p"] = q.p;
  j["h_orders"] = ints(q.h_orders);
  Json verts = Json::array();
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    verts.push_back(q.characters.empty() ? Json(q.vertex_names[v]) : ints(q.characters[v].exps));
  j["vertices"] = std::move(verts);
  Json labels = Json::array();
  for (std::size_t l = 0; l < q.labels.size(); ++l) {
    Json entry = {{"label", label_to_json(q.labels[l])}};
    if (l < q.label_characters.size()) entry["character"] = ints(q.label_characters[l].exps);
    labels.push_back(std::move(entry));
  }
  j["labels"] = std::move(labels);
  Json arrows = Json::array();
  for (const auto& a : q.arrows)
    arrows.push_back({{"id", a.id}, {"src", a.source}, {"tgt", a.target}, {"label", label_to_json(a.label)}});
  j["arrows"] = std::move(arrows);
  if (q.relations) {
    Json coms = Json::array();
    for (const auto& c : q.relations->commutators)
      coms.push_back({{"id", c.id},
                      {"vertex", c.vertex},
                      {"labels", Json::array({label_to_json(c.first), label_to_json(c.second)})},
                      {"lhs", indices(c.lhs)},
                      {"rhs", indices(c.rhs)}});
    Json pows = Json::array();
    for (const auto& pw : q.relations->powers)
      pows.push_back({{"id", pw.id}, {"vertex", pw.vertex}, {"label", label_to_json(pw.label)}, {"length", pw.length}});
    j["relations"] = {{"commutators", std::move(coms)}, {"powers", std::move(pows)}};
  } else {
    j["relations"] = nullptr;
  }
  j["connected"] = is_connected(q);
  return j;
}

BoundQuiver quiver_from_json(const Json& j) {
  only_keys(j, "", {"p", "h_orders", "vertices", "labels", "arrows", "relations", "connected"});
  BoundQuiver q;
  if (j.contains("p")) q.p = get_int(j["p"], "/p");
  if (j.contains("h_orders")) q.h_orders = get_int_list(j["h_orders"], "/h_orders");
  const auto& verts = get_array(need(j, "", "vertices"), "/vertices");
  bool by_character = !verts.empty() && verts[0].is_array();
  if (by_character && q.h_orders.empty() && !verts[0].empty())
    fail("/h_orders", "character vertices need the H generator orders");
  for (std::size_t v = 0; v < verts.size(); ++v) {
    std::string where = at("/vertices", v);
    if (by_character) {
      Character chi{get_int_list(verts[v], where)};
      if (chi.exps.size() != q.h_orders.size()) fail(where, "character has the wrong length");
      for (std::size_t g = 0; g < chi.exps.size(); ++g)
        if (chi.exps[g] < 0 || chi.exps[g] >= q.h_orders[g]) fail(at(where, g), "exponent out of range");
      q.vertex_names.push_back(DualGroup(AbelianGroupH(q.h_orders)).label(chi));
      q.characters.push_back(std::move(chi));
    } else {
      if (!verts[v].is_string()) fail(where, "expected a vertex name or character tuple");
      q.vertex_names.push_back(verts[v].get<std::string>());
    }
  }
  if (j.contains("labels")) {
    const auto& labels = get_array(j["labels"], "/labels");
    for (std::size_t l = 0; l < labels.size(); ++l) {
      std::string where = at("/labels", l);
      only_keys(labels[l], where, {"label", "character"});
      q.labels.push_back(label_from_json(need(labels[l], where, "label"), at(where, "label")));
      if (labels[l].contains("character"))
        q.label_characters.push_back(Character{get_int_list(labels[l]["character"], at(where, "character"))});
    }
    if (!q.label_characters.empty() && q.label_characters.size() != q.labels.size())
      fail("/labels", "either every label carries a character or none does");
  }
  const auto& arrows = get_array(need(j, "", "arrows"), "/arrows");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    std::string where = at("/arrows", i);
    only_keys(arrows[i], where, {"id", "src", "tgt", "label"});
    Arrow a;
    a.id = get_index(need(arrows[i], where, "id"), at(where, "id"));
    if (a.id != i) fail(at(where, "id"), "arrow ids must be 0, 1, 2, ... in order");
    a.source = get_index(need(arrows[i], where, "src"), at(where, "src"));
    a.target = get_index(need(arrows[i], where, "tgt"), at(where, "tgt"));
    if (a.source >= verts.size()) fail(at(where, "src"), "no such vertex");
    if (a.target >= verts.size()) fail(at(where, "tgt"), "no such vertex");
    a.label = label_from_json(need(arrows[i], where, "label"), at(where, "label"));
    q.arrows.push_back(a);
  }
  auto path = [&](const Json& pj, const std::string& where) {
    Path p;
    const auto& arr = get_array(pj, where);
    for (std::size_t k = 0; k < arr.size(); ++k) {
      std::size_t id = get_index(arr[k], at(where, k));
      if (id >= q.arrows.size()) fail(at(where, k), "no such arrow");
      p.push_back(id);
    }
    return p;
  };
  if (j.contains("relations") && !j["relations"].is_null()) {
    const auto& rj = j["relations"];
    only_keys(rj, "/relations", {"commutators", "powers"});
    RelationSet rels;
    const auto& coms = get_array(need(rj, "/relations", "commutators"), "/relations/commutators");
    for (std::size_t i = 0; i < coms.size(); ++i) {
      std::string where = at("/relations/commutators", i);
      only_keys(coms[i], where, {"id", "vertex", "labels", "lhs", "rhs"});
      Commutator c;
      c.id = get_index(need(coms[i], where, "id"), at(where, "id"));
      c.vertex = get_index(need(coms[i], where, "vertex"), at(where, "vertex"));
      const auto& ls = get_array(need(coms[i], where, "labels"), at(where, "labels"));
      if (ls.size() != 2) fail(at(where, "labels"), "a commutator names two labels");
      c.first = label_from_json(ls[0], at(at(where, "labels"), 0));
      c.second = label_from_json(ls[1], at(at(where, "labels"), 1));
      c.lhs = path(need(coms[i], where, "lhs"), at(where, "lhs"));
      c.rhs = path(need(coms[i], where, "rhs"), at(where, "rhs"));
      rels.commutators.push_back(std::move(c));
    }
    const auto& pows = get_array(need(rj, "/relations", "powers"), "/relations/powers");
    for (std::size_t i = 0; i < pows.size(); ++i) {
      std::string where = at("/relations/powers", i);
      only_keys(pows[i], where, {"id", "vertex", "label", "length"});
      PowerRelation pw;
      pw.id = get_index(need(pows[i], where, "id"), at(where, "id"));
      pw.vertex = get_index(need(pows[i], where, "vertex"), at(where, "vertex"));
      pw.label = label_from_json(need(pows[i], where, "label"), at(where, "label"));
      pw.length = get_int(need(pows[i], where, "length"), at(where, "length"));
      if (pw.length < 1) fail(at(where, "length"), "power length must be positive");
      rels.powers.push_back(pw);
    }
    q.relations = std::move(rels);
  }
  return q;
}

Json cycle_to_json(const ZigzagCycle& c) {
  return {{"length", c.length()}, {"parity", c.odd() ? "odd" : "even"}, {"arrows", indices(c.arrows)},
          {"vertices", indices(c.vertices)}};
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["outcome"] = outcome_name(v.outcome);
  j["reason"] = v.reason;
  j["p"] = v.p;
  j["hyperfocal"] = ints(v.hyperfocal);
  j["classification_only"] = v.classification_only;
  if (v.certificate) {
    Json cert = cycle_to_json(v.certificate->cycle);
    cert["quiver"] = quiver_to_json(v.certificate->quiver);
    j["certificate"] = std::move(cert);
  }
  return j;
}

Json hyperfocal_to_json(const HyperfocalData& hd) {
  return {{"p", hd.hyperfocal.ambient.p()},
          {"order_P", hd.hyperfocal.ambient.order()},
          {"hyperfocal", ints(hd.hyperfocal.invariant_factors)},
          {"hyperfocal_order", hd.hyperfocal.order()},
          {"centralizer", ints(hd.centralizer.invariant_factors)},
          {"centralizer_order", hd.centralizer.order()},
          {"direct_product", hd.direct_product},
          {"reduced", group_spec_to_json(hd.reduced)}};
}

CertificateDoc certificate_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected an object");
  const Json* cert = &j;
  std::string base;
  if (j.contains("outcome")) {
    if (!j.contains("certificate")) fail("", "verdict carries no certificate");
    cert = &j["certificate"];
    base = "/certificate";
  }
  only_keys(*cert, base, {"length", "parity", "arrows", "vertices", "quiver"});
  CertificateDoc doc;
  const auto& arr = get_array(need(*cert, base, "arrows"), at(base, "arrows"));
  for (std::size_t i = 0; i < arr.size(); ++i) doc.arrows.push_back(get_index(arr[i], at(at(base, "arrows"), i)));
  if (cert->contains("quiver")) doc.quiver = quiver_from_json((*cert)["quiver"]);
  return doc;
}

Json rep_to_json(const BoundQuiver& q, const QuiverRep& rep) {
  Json dims = Json::object();
  for (std::size_t v = 0; v < rep.dims.size(); ++v) dims[std::to_string(v)] = rep.dims[v];
  Json mats = Json::object();
  for (const auto& a : q.arrows) mats[std::to_string(a.id)] = matrix_to_json(rep.matrices[a.id]);
  return {{"q", rep.field->size()}, {"dims", std::move(dims)}, {"matrices", std::move(mats)}};
}

QuiverRep rep_from_json(const BoundQuiver& q, const Json& j) {
  only_keys(j, "", {"q", "dims", "matrices"});
  Int qf = get_int(need(j, "", "q"), "/q");
  if (!modular::prime_power(qf)) fail("/q", std::to_string(qf) + " is not a prime power");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  const auto& dj = need(j, "", "dims");
  if (!dj.is_object()) fail("/dims", "expected an object keyed by vertex index");
  for (auto it = dj.begin(); it != dj.end(); ++it) {
    std::string where = at("/dims", it.key());
    std::size_t v;
    try {
      v = std::stoul(it.key());
    } catch (const std::exception&) {
      fail(where, "vertex keys are indices");
    }
    if (v >= dims.size()) fail(where, "no such vertex");
    dims[v] = get_index(it.value(), where);
  }
  auto rep = QuiverRep::zero(q, field_of_order(qf), dims);
  if (j.contains("matrices")) {
    const auto& mj = j["matrices"];
    if (!mj.is_object()) fail("/matrices", "expected an object keyed by arrow id");
    for (auto it = mj.begin(); it != mj.end(); ++it) {
      std::string where = at("/matrices", it.key());
      std::size_t id;
      try {
        id = std::stoul(it.key());
      } catch (const std::exception&) {
        fail(where, "arrow keys are ids");
      }
      if (id >= q.arrows.size()) fail(where, "no such arrow");
      const auto& a = q.arrows[id];
      auto m = get_matrix(it.value(), where, dims[a.target], dims[a.source], 0);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (m(r, c) < 0 || m(r, c) >= qf)
            fail(where + " row " + std::to_string(r) + " column " + std::to_string(c),
                 "field elements are codes in [0, q)");
          rep.matrices[id](r, c) = static_cast<FField::Elem>(m(r, c));
        }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

Rational rational_from(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(get_int(j, where));
  if (!j.is_string()) fail(where, "expected an integer or \"a/b\"");
  std::string s = j.get<std::string>();
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    Int den = std::stoll(s.substr(slash + 1));
    if (den == 0) fail(where, "zero denominator");
    return Rational(std::stoll(s.substr(0, slash)), den);
  } catch (const std::logic_error&) {
    fail(where, "malformed rational \"" + s + "\"");
  }
}

Cyclotomic cyclotomic_from(const Json& j, int order, const std::string& where) {
  if (!j.is_array()) return Cyclotomic::from_powers(order, {rational_from(j, where)});
  std::vector<Rational> coeffs(static_cast<std::size_t>(order), Rational(0));
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string term = at(where, i);
    if (!j[i].is_array() || j[i].size() != 2) fail(term, "a term is [coefficient, k]");
    Int k = modular::reduce(get_int(j[i][1], at(term, 1)), order);
    coeffs[static_cast<std::size_t>(k)] += rational_from(j[i][0], at(term, 0));
  }
  return Cyclotomic::from_powers(order, coeffs);
}

std::vector<Cyclotomic> class_function(const Json& j, int order, std::size_t classes, const std::string& where) {
  const auto& arr = get_array(j, where);
  if (arr.size() != classes)
    fail(where, "expected " + std::to_string(classes) + " values, got " + std::to_string(arr.size()));
  std::vector<Cyclotomic> out;
  for (std::size_t c = 0; c < classes; ++c) out.push_back(cyclotomic_from(arr[c], order, at(where, c)));
  return out;
}

}  // namespace

CharacterTable table_from_json(const Json& j) {
  only_keys(j, "", {"order", "root_order", "classes", "characters", "module"});
  CharacterTable t;
  t.group_order = get_int(need(j, "", "order"), "/order");
  Int m = get_int(need(j, "", "root_order"), "/root_order");
  if (m < 1 || m > 1000) fail("/root_order", "root order must lie in [1, 1000]");
  t.exponent = static_cast<int>(m);
  const auto& classes = get_array(need(j, "", "classes"), "/classes");
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::string where = at("/classes", c);
    only_keys(classes[c], where, {"name", "size"});
    const auto& name = need(classes[c], where, "name");
    if (!name.is_string()) fail(at(where, "name"), "expected a string");
    t.class_names.push_back(name.get<std::string>());
    t.class_sizes.push_back(get_int(need(classes[c], where, "size"), at(where, "size")));
  }
  const auto& chars = get_array(need(j, "", "characters"), "/characters");
  for (std::size_t i = 0; i < chars.size(); ++i) {
    std::string where = at("/characters", i);
    only_keys(chars[i], where, {"name", "values"});
    const auto& name = need(chars[i], where, "name");
    if (!name.is_string()) fail(at(where, "name"), "expected a string");
    t.names.push_back(name.get<std::string>());
    t.rows.push_back(class_function(need(chars[i], where, "values"), t.exponent, classes.size(), at(where, "values")));
  }
  t.module_character = class_function(need(j, "", "module"), t.exponent, classes.size(), "/module");
  return t;
}

}  // namespace tautilt::io
