#include <doctest.h>

#include "../oracles/oracles.hpp"
#include "../support/family.hpp"
#include "tautilt/action.hpp"

using namespace tautilt;
using namespace tautilt::testing;

namespace {

oracle::ElementSet members(const SubgroupData& s) {
  oracle::ElementSet out;
  for (const auto& x : oracle::all_elements(s.ambient))
    if (s.contains(x)) out.insert(x);
  return out;
}

bool has_violation(const GroupPresentation& pres, Violation::Kind kind) {
  for (const auto& v : validate_presentation(pres))
    if (v.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("G1 presentation is valid") { CHECK(validate_presentation(g1()).empty()); }

TEST_CASE("identity action is valid") {
  CHECK(validate_presentation(identity_action(3, {{1, 2}}, {2, 4})).empty());
}

TEST_CASE("p dividing |H| is reported") {
  auto pres = identity_action(3, {{1, 1}}, {3});
  CHECK(has_violation(pres, Violation::Kind::PDividesOrder));
  CHECK_THROWS_AS(require_valid(pres), InvalidInput);
}

TEST_CASE("the literal G2 relation matrix has order 6 mod 4") {
  // c b c^-1 = ab read as [[0,1],[1,1]] over Z/4
  GroupPresentation pres{AbelianPGroup(2, {{2, 2}}), AbelianGroupH({3}), {BlockMatrix{{IntMatrix{{0, 1}, {1, 1}}}}}};
  CHECK(has_violation(pres, Violation::Kind::OrderMismatch));
  CHECK(validate_presentation(g2()).empty());
}

TEST_CASE("every violation is listed") {
  AbelianPGroup P(3, {{1, 2}});
  GroupPresentation pres{P, AbelianGroupH({3, 2}),
                         {BlockMatrix{{IntMatrix{{0, 0}, {0, 1}}}}, BlockMatrix{{IntMatrix{{0, 1}, {1, 0}}}}}};
  auto vs = validate_presentation(pres);
  CHECK(has_violation(pres, Violation::Kind::PDividesOrder));
  CHECK(has_violation(pres, Violation::Kind::NotInvertible));
  CHECK(vs.size() >= 3);
}

TEST_CASE("non-commuting generators are reported") {
  AbelianPGroup P(3, {{1, 2}});
  GroupPresentation pres{P, AbelianGroupH({2, 2}),
                         {BlockMatrix{{IntMatrix{{2, 0}, {0, 1}}}}, BlockMatrix{{IntMatrix{{0, 1}, {1, 0}}}}}};
  CHECK(has_violation(pres, Violation::Kind::NotCommuting));
}

TEST_CASE("shape errors are reported") {
  AbelianPGroup P(3, {{1, 2}});
  GroupPresentation pres{P, AbelianGroupH({2}), {BlockMatrix{{IntMatrix{{2}}}}}};
  CHECK(has_violation(pres, Violation::Kind::Shape));
}

TEST_CASE("hyperfocal subgroups of G1, G2 and the worked example") {
  CHECK(hyperfocal_subgroup(g1()).invariant_factors == std::vector<Int>{2, 2});
  CHECK(hyperfocal_subgroup(g2()).invariant_factors == std::vector<Int>{4, 4});
  CHECK(hyperfocal_subgroup(worked_example()).invariant_factors == std::vector<Int>{3, 3, 9});
  CHECK(hyperfocal_subgroup(identity_action(2, {{1, 3}}, {3})).trivial());
}

TEST_CASE("worked example hyperfocal subgroup matches brute force over all 324 elements") {
  auto pres = worked_example();
  CHECK(pres.P.order() * pres.H.order() == 324);
  CHECK(members(hyperfocal_subgroup(pres)) == oracle::hyperfocal(pres));
}

TEST_CASE("centralizers") {
  CHECK(centralizer(g1()).trivial());
  auto id = identity_action(5, {{1, 1}}, {2});
  CHECK(centralizer(id).order() == 5);
  GroupPresentation diag{AbelianPGroup(3, {{1, 2}}), AbelianGroupH({2}), {BlockMatrix{{IntMatrix{{1, 0}, {0, 2}}}}}};
  auto c = centralizer(diag);
  CHECK(c.invariant_factors == std::vector<Int>{3});
  CHECK(c.contains({1, 0}));
}

TEST_CASE("reduction of diag(1,2) on (C3)^2") {
  GroupPresentation diag{AbelianPGroup(3, {{1, 2}}), AbelianGroupH({2}), {BlockMatrix{{IntMatrix{{1, 0}, {0, 2}}}}}};
  auto red = reduce_to_hyperfocal(diag);
  CHECK(red.P.blocks() == std::vector<Block>{{1, 1}});
  REQUIRE(red.action.size() == 1);
  CHECK(red.action[0].blocks[0] == IntMatrix{{2}});
}

TEST_CASE("reduction of the identity action is trivial") {
  auto red = reduce_to_hyperfocal(identity_action(2, {{1, 2}, {2, 1}}, {3}));
  CHECK(red.P.trivial());
  CHECK(red.H.orders() == std::vector<Int>{3});
}

TEST_CASE("G2 reduces to itself up to basis") {
  auto red = reduce_to_hyperfocal(g2());
  CHECK(red.P == g2().P);
  CHECK(hyperfocal_subgroup(red).invariant_factors == std::vector<Int>{4, 4});
}

TEST_CASE("hyperfocal invariants over the family") {
  FamilyLimits limits;
  limits.max_p_order = 256;
  limits.max_h_order = 12;
  for (const auto& [name, pres] : family(40, limits, 99)) {
    CAPTURE(name);
    auto hd = hyperfocal_data(pres);
    // generator-based [P,H] equals the all-of-H definition
    CHECK(members(hd.hyperfocal) == oracle::hyperfocal(pres));
    CHECK(members(hd.centralizer) == oracle::centralizer(pres));
    // P = C x R
    CHECK(hd.hyperfocal.order() * hd.centralizer.order() == pres.P.order());
    CHECK(intersection_order(hd.hyperfocal, hd.centralizer) == 1);
    CHECK(hd.direct_product);
    // R and C are invariant under every generator
    for (const auto& a : pres.action)
      for (const auto* s : {&hd.hyperfocal, &hd.centralizer})
        for (std::size_t b = 0; b < s->blocks.size(); ++b)
          for (const auto& col : s->blocks[b].columns) {
            Element x(static_cast<std::size_t>(pres.P.rank()), 0);
            std::copy(col.begin(), col.end(), x.begin() + static_cast<std::ptrdiff_t>(pres.P.offset(b)));
            CHECK(s->contains(apply(a, x, pres.P)));
          }
    // the reduced presentation is valid, centerless, and reduces to itself
    CHECK(validate_presentation(hd.reduced).empty());
    CHECK(centralizer(hd.reduced).trivial());
    CHECK(hyperfocal_subgroup(hd.reduced).invariant_factors == hd.hyperfocal.invariant_factors);
    auto twice = reduce_to_hyperfocal(hd.reduced);
    CHECK(twice.P == hd.reduced.P);
  }
}

TEST_CASE("reduction when the Howell pivot of [P,H] is not a unit") {
  // C9^2 with an involution negating the line through (3, 1)
  AbelianPGroup P(3, {{2, 2}});
  GroupPresentation pres{P, AbelianGroupH({2}), {BlockMatrix{{IntMatrix{{1, 3}, {0, 8}}}}}};
  REQUIRE(validate_presentation(pres).empty());
  auto r = hyperfocal_subgroup(pres);
  CHECK(r.invariant_factors == std::vector<Int>{9});
  CHECK(r.blocks[0].pivot_valuations.front() != 0);
  auto red = reduce_to_hyperfocal(pres);
  CHECK(red.P.blocks() == std::vector<Block>{{2, 1}});
  CHECK(red.action[0].blocks[0] == IntMatrix{{8}});
}
