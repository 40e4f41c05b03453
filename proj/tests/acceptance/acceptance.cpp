// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "../oracles/oracles.hpp"
#include "../support/family.hpp"
#include "tautilt/decide.hpp"
#include "tautilt/io.hpp"
#include "tautilt/repcheck.hpp"

using namespace tautilt;
using namespace tautilt::testing;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string fixture(const std::string& name) { return io::read_file(std::string(TAUTILT_SOURCE_DIR) + "/tests/" + name); }

FamilyLimits sweep_limits() { return FamilyLimits{{2, 3, 5}, 81, 8, false}; }

// Criterion 1
std::string worked_example_quiver() {
  auto pres = std::get<GroupPresentation>(io::parse_group_spec(fixture("fixtures/worked_example.group.json")));
  auto eig = eigencharacters(pres);
  expect(eig.entries.size() == 3, "expected three eigencharacters");
  expect(eig.entries[0].block == 0 && eig.entries[0].chi.exps == std::vector<Int>{1}, "block 1 first character");
  expect(eig.entries[1].block == 0 && eig.entries[1].chi.exps == std::vector<Int>{3}, "block 1 second character");
  expect(eig.entries[2].block == 1 && eig.entries[2].chi.exps == std::vector<Int>{2}, "block 2 character");

  auto q = build_bound_quiver(eig);
  expect(q.vertex_count() == 4 && q.arrows.size() == 12, "4 vertices and 12 arrows");
  const auto& rels = *q.relations;
  std::size_t pairs = q.labels.size() * (q.labels.size() - 1) / 2;
  expect(rels.commutators.size() == pairs * q.vertex_count(), "every commutator present");
  for (const auto& pw : rels.powers)
    expect(pw.length == (pw.label.exponent == 1 ? 3 : 9), "power relation lengths 3, 3, 9");
  expect(rels.powers.size() == q.labels.size() * q.vertex_count(), "one power per label and vertex");

  auto golden = fixture("golden/worked_example.quiver.json");
  expect(io::quiver_from_json(io::parse_json(golden)) == q, "structural equality with the golden quiver");
  expect(io::dump(io::quiver_to_json(q)) == golden, "byte equality with the golden quiver");
  return "eigencharacters [1],[3] | [2]; 4 vertices, 12 arrows, 12 commutators, powers 3,3,9";
}

// Criterion 2
std::string p2_rank2() {
  auto g1v = decide_abelian(g1());
  expect(g1v.outcome == Outcome::Finite, "G1 finite");
  expect(classify_hyperfocal(g1v.hyperfocal, 2).kind == HyperfocalClass::Kind::KleinFour, "G1 reason KleinFour");
  expect(g1v.hyperfocal == std::vector<Int>{2, 2}, "G1 hyperfocal {2,2}");
  auto g2v = decide_abelian(g2());
  expect(g2v.outcome == Outcome::Infinite, "G2 infinite");
  expect(g2v.hyperfocal == std::vector<Int>{4, 4}, "G2 hyperfocal {4,4}");
  expect(g2v.certificate.has_value(), "G2 certificate present");
  const auto& c = *g2v.certificate;
  expect(validate_zigzag(c.quiver, c.cycle.arrows).ok(), "certificate validates");
  expect(is_qualifying(c.quiver, c.cycle).qualifies, "certificate qualifies");
  std::ostringstream out;
  out << "G1 finite (klein_four, {2,2}); G2 infinite ({4,4}), certificate of length " << c.cycle.length();
  return out.str();
}

// Criterion 3
std::string s3_table() {
  auto t = io::table_from_json(io::parse_json(fixture("fixtures/s3.table.json")));
  auto counts = table_arrow_counts(t);
  expect(counts == IntMatrix{{1, 1, 0}, {1, 2, 1}, {0, 1, 1}}, "arrow counts [[1,1,0],[1,2,1],[0,1,1]]");
  return "arrow counts [[1,1,0],[1,2,1],[0,1,1]]";
}

// Criterion 4
std::string dimension_law() {
  auto fam = family(60, sweep_limits());
  std::size_t checked = 0;
  for (const auto& [name, pres] : fam) {
    if (pres.P.order() > 81 || pres.H.order() > 8) continue;
    auto q = build_bound_quiver(eigencharacters(pres));
    Int total = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      Int n = path_normal_form_count(q, v);
      expect(n == pres.P.order(), name + ": path count at vertex " + std::to_string(v));
      expect(oracle::path_classes(q, v) == n, name + ": path oracle at vertex " + std::to_string(v));
      total += n;
    }
    expect(total == pres.P.order() * pres.H.order(), name + ": total is |G|");
    ++checked;
  }
  expect(checked >= 50, "at least 50 presentations");
  return std::to_string(checked) + " presentations, every vertex has |P| path classes";
}

// Criterion 5; the emitted cycles feed criterion 7
std::vector<Certificate> emitted;

std::string consistency() {
  std::size_t infinite = 0, finite = 0;
  for (const auto& [name, pres] : family(60, sweep_limits())) {
    if (pres.P.order() > 81 || pres.H.order() > 8) continue;
    auto v = decide_abelian(pres);
    expect(v.outcome != Outcome::Unknown, name + ": abelian verdicts are decided");
    expect(!v.classification_only, name + ": classification-only verdict");
    auto q = build_bound_quiver(eigencharacters(reduce_to_hyperfocal(pres)));
    auto cycles = find_qualifying_cycles(q, 2 * static_cast<std::size_t>(pres.H.order()));
    if (v.outcome == Outcome::Infinite) {
      expect(!cycles.empty(), name + ": infinite without a qualifying cycle");
      expect(v.certificate.has_value(), name + ": infinite without a certificate");
      ++infinite;
      for (const auto& c : cycles) emitted.push_back({c, q});
    } else {
      expect(cycles.empty(), name + ": finite but a qualifying cycle exists");
      ++finite;
    }
  }
  return std::to_string(infinite) + " infinite, " + std::to_string(finite) + " finite, all consistent";
}

// Criterion 6
std::string hyperfocal_oracle() {
  FamilyLimits limits{{2, 3, 5}, 256, 12, false};
  std::size_t checked = 0;
  for (const auto& [name, pres] : family(60, limits, 99)) {
    if (pres.P.order() > 256 || pres.H.order() > 12) continue;
    auto hd = hyperfocal_data(pres);
    auto brute = oracle::hyperfocal(pres);
    expect(static_cast<Int>(brute.size()) == hd.hyperfocal.order(), name + ": |[P,H]| against brute force");
    for (const auto& x : brute) expect(hd.hyperfocal.contains(x), name + ": brute-force element missing");
    auto cent = oracle::centralizer(pres);
    expect(static_cast<Int>(cent.size()) == hd.centralizer.order(), name + ": |C_P(H)| against brute force");
    expect(hd.hyperfocal.order() * hd.centralizer.order() == pres.P.order(), name + ": |R||C| = |P|");
    expect(intersection_order(hd.hyperfocal, hd.centralizer) == 1, name + ": R and C meet trivially");
    for (const auto& x : cent)
      expect(!hd.hyperfocal.contains(x) || x == Element(x.size(), 0), name + ": brute-force intersection");
    expect(hd.direct_product, name + ": direct product flag");
    ++checked;
  }
  return std::to_string(checked) + " presentations, [P,H] and C_P(H) match brute force";
}

// Criterion 7
std::string bricks() {
  BoundQuiver k;
  k.vertex_names = {"1", "2"};
  k.arrows = {{0, 0, 1, {0, 1}}, {1, 0, 1, {0, 2}}};
  k.relations = RelationSet{};
  for (Int fq : {2, 3, 4}) {
    auto n = enumerate_bricks(k, {1, 1}, field_of_order(fq)).count;
    expect(n == static_cast<std::size_t>(fq + 1), "Kronecker bricks over F_" + std::to_string(fq));
  }
  expect(!emitted.empty(), "criterion 5 emitted no cycles");
  auto f4 = field_of_order(4);
  for (const auto& [cycle, q] : emitted) {
    std::vector<QuiverRep> reps;
    for (FField::Elem h = 1; h < 4; ++h) {
      auto r = pull_back_cycle_rep(q, cycle, h, f4);
      expect(!eval_relations(q, r), "holonomy representation violates a relation");
      expect(is_brick(q, r), "holonomy representation is not a brick");
      reps.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        expect(!is_isomorphic(q, reps[i], reps[j]), "holonomy representations are isomorphic");
  }
  return "Kronecker 3, 4, 5; " + std::to_string(emitted.size()) + " cycles give 3 distinct bricks over F_4";
}

// Criterion 8
std::string frattini() {
  auto fr = std::get<FrattiniInput>(io::parse_group_spec(fixture("fixtures/frattini_p2_n2.group.json")));
  expect(decide_frattini(fr).outcome == Outcome::Unknown, "p = 2, n = 2 is unknown");
  FrattiniInput p3{3, 2, AbelianGroupH({2}), {IntMatrix{{2, 0}, {0, 2}}}};
  expect(decide_frattini(p3).outcome == Outcome::Infinite, "p = 3, n = 2 is infinite");
  FrattiniInput p5{5, 3, AbelianGroupH({4}), {IntMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}}};
  expect(decide_frattini(p5).outcome == Outcome::Infinite, "p = 5, n = 3 is infinite");
  FrattiniInput fixed{3, 2, AbelianGroupH({2}), {IntMatrix{{1, 0}, {0, 2}}}};
  bool rejected = false;
  try {
    decide_frattini(fixed);
  } catch (const NontrivialFixedSpace&) {
    rejected = true;
  }
  expect(rejected, "nontrivial fixed space is rejected");
  return "p=2 n=2 unknown; p=3 n=2 and p=5 n=3 infinite; fixed space rejected";
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    double limit_s;
    std::function<std::string()> run;
  };
  const Criterion criteria[] = {
      {1, 1, worked_example_quiver}, {2, 1, p2_rank2},          {3, 1, s3_table},  {4, 10, dimension_law},
      {5, 120, consistency},  {6, 30, hyperfocal_oracle}, {7, 120, bricks}, {8, 1, frattini},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit_s) {
      ok = false;
      detail += " (over the " + std::to_string(static_cast<int>(c.limit_s)) + " s budget)";
    }
    failed += !ok;
    std::printf("criterion %d: %s [%.3f s] %s\n", c.number, ok ? "PASS" : "FAIL", secs, detail.c_str());
  }
  return failed ? 1 : 0;
}
