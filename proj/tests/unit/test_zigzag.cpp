#include <doctest.h>

#include <cmath>

#include "../oracles/oracles.hpp"
#include "../support/family.hpp"
#include "tautilt/zigzag.hpp"

using namespace tautilt;
using namespace tautilt::testing;

namespace {

BoundQuiver reduced_quiver(const GroupPresentation& pres) {
  return build_bound_quiver(eigencharacters(reduce_to_hyperfocal(pres)));
}

// largest length whose naive enumeration stays around two million sequences
std::size_t naive_bound(const BoundQuiver& q) {
  std::size_t len = 1;
  double work = 1;
  while (len < q.vertex_count()) {
    work *= static_cast<double>(q.arrows.size());
    if (work * static_cast<double>(q.arrows.size()) > 2e6) break;
    ++len;
  }
  return len;
}

}  // namespace

TEST_CASE("validate_zigzag clauses") {
  auto q = reduced_quiver(g2());
  using C = ZigzagViolation::Clause;
  auto clause = [&](std::vector<std::size_t> arrows) { return validate_zigzag(q, arrows).violation->clause; };
  CHECK(clause({0}) == C::Length);
  CHECK(clause({0, 99}) == C::UnknownArrow);
  CHECK(clause({0, 0}) == C::DistinctArrows);

  auto ok = validate_zigzag(q, {0, 5, 4});
  REQUIRE(ok.ok());
  CHECK(ok.cycle->vertices.size() == 3);
  CHECK(ok.cycle->vertices[0] == q.arrows[0].source);
  CHECK(ok.cycle->vertices[1] == q.arrows[0].target);

  // 0 and 1 both leave vertex 0, so t(a_1) = t(a_2) fails
  auto alt = validate_zigzag(q, {0, 1});
  REQUIRE_FALSE(alt.ok());
  CHECK(alt.violation->clause == C::Alternation);
  CHECK(alt.violation->index == 1);
  CHECK(clause_name(C::Closure) == "closure");
}

TEST_CASE("G2 has a qualifying triangle") {
  auto q = reduced_quiver(g2());
  auto c = first_qualifying_cycle(q, default_max_length(q));
  REQUIRE(c);
  CHECK(c->arrows == std::vector<std::size_t>{0, 5, 4});
  CHECK(c->odd());
  auto rep = is_qualifying(q, *c);
  CHECK(rep.qualifies);
  CHECK(rep.reason_name() == "odd_closing_path_absent");
}

TEST_CASE("finite cases have no qualifying cycles") {
  for (const auto& pres : {g1(), identity_action(3, {{1, 1}}, {})}) {
    auto q = reduced_quiver(pres);
    CHECK(find_qualifying_cycles(q, default_max_length(q)).empty());
  }
  for (const auto& np : curated())
    if (np.name == "C3_inversion" || np.name == "C9_inversion") {
      auto q = reduced_quiver(np.pres);
      CHECK(find_qualifying_cycles(q, default_max_length(q)).empty());
    }
}

TEST_CASE("G1 triangles fail on the square relation") {
  auto q = reduced_quiver(g1());
  // walk with one label: 0 -> 1, back along the other label, close with the first
  auto c = validate_zigzag(q, {0, 5, 4});
  if (c.ok()) {
    auto rep = is_qualifying(q, *c.cycle);
    CHECK_FALSE(rep.qualifies);
    CHECK(rep.reason == QualificationReport::Reason::OddButClosingPathAppears);
    REQUIRE(rep.generator);
  }
  CHECK(oracle::naive_qualifying_cycles(q, 3).empty());
}

TEST_CASE("odd cycles are not qualifying without relations") {
  auto q = reduced_quiver(g2());
  q.relations.reset();
  auto c = validate_zigzag(q, {0, 5, 4});
  REQUIRE(c.ok());
  auto rep = is_qualifying(q, *c.cycle);
  CHECK_FALSE(rep.qualifies);
  CHECK(rep.reason == QualificationReport::Reason::RelationsUnknown);
}

TEST_CASE("canonical form is invariant under the symmetry group") {
  auto q = reduced_quiver(curated()[2].pres);
  for (const auto& c : find_qualifying_cycles(q, 4)) {
    CHECK(canonical_form(q, c) == c);
    const auto n = c.length();
    std::vector<std::size_t> rev(c.arrows.rbegin(), c.arrows.rend());
    for (const auto& base : {c.arrows, rev})
      for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> rot(n);
        for (std::size_t i = 0; i < n; ++i) rot[i] = base[(i + s) % n];
        auto check = validate_zigzag(q, rot);
        if (check.ok()) CHECK(canonical_form(q, *check.cycle) == c);
      }
  }
}

TEST_CASE("exhaustive search agrees with the naive oracle") {
  FamilyLimits limits;
  limits.max_h_order = 8;
  std::size_t compared = 0;
  for (const auto& [name, pres] : family(50, limits, 3)) {
    CAPTURE(name);
    auto q = reduced_quiver(pres);
    if (q.vertex_count() > 8 || q.arrows.empty()) continue;
    auto bound = naive_bound(q);
    if (bound < 2) continue;
    auto fast = find_qualifying_cycles(q, bound);
    auto naive = oracle::naive_qualifying_cycles(q, bound);
    std::set<std::vector<std::size_t>> got;
    for (const auto& c : fast) {
      got.insert(c.arrows);
      CHECK(c.length() <= bound);
    }
    CHECK(got == naive);
    ++compared;
  }
  CHECK(compared >= 20);
}

TEST_CASE("search invariants over the family") {
  FamilyLimits limits;
  for (const auto& [name, pres] : family(40, limits, 17)) {
    CAPTURE(name);
    auto eig = eigencharacters(reduce_to_hyperfocal(pres));
    auto q = build_bound_quiver(eig);
    auto bound = default_max_length(q);
    auto all = find_qualifying_cycles(q, bound);
    CHECK(find_qualifying_cycles(q, bound) == all);

    auto first = first_qualifying_cycle(q, bound);
    CHECK(first.has_value() == !all.empty());
    if (first) CHECK(*first == all.front());

    for (const auto& c : all) {
      auto check = validate_zigzag(q, c.arrows);
      REQUIRE(check.ok());
      CHECK(check.cycle->vertices == c.vertices);
      CHECK(is_qualifying(q, c).qualifies);
      CHECK(canonical_form(q, c) == c);
      CHECK(c.length() <= q.vertex_count());
    }

    // every template is a genuine qualifying cycle found by the search
    std::set<ZigzagCycle> found(all.begin(), all.end());
    for (const auto& t : template_certificates(q, eig)) {
      CHECK(validate_zigzag(q, t.arrows).ok());
      CHECK(is_qualifying(q, t).qualifies);
      CHECK(found.count(t) == 1);
    }
  }
}

TEST_CASE("templates") {
  SUBCASE("G2 walks produce the triangle") {
    auto eig = eigencharacters(reduce_to_hyperfocal(g2()));
    auto q = build_bound_quiver(eig);
    auto t = template_certificates(q, eig);
    REQUIRE_FALSE(t.empty());
    CHECK(t.front().length() == 3);
  }
  SUBCASE("G1 has none") {
    auto eig = eigencharacters(reduce_to_hyperfocal(g1()));
    CHECK(template_certificates(build_bound_quiver(eig), eig).empty());
  }
  SUBCASE("C2^3 by C7 uses the Frobenius orbit") {
    for (const auto& np : curated())
      if (np.name == "C2^3_by_C7") {
        auto eig = eigencharacters(reduce_to_hyperfocal(np.pres));
        auto q = build_bound_quiver(eig);
        CHECK_FALSE(template_certificates(q, eig).empty());
      }
  }
}
