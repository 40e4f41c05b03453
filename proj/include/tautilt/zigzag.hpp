#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautilt/quiver.hpp"

namespace tautilt {

/// Arrows a_1..a_n and the cycle vertices v_0..v_{n-1}: a_i joins v_{i-1}
/// and v_i (indices mod n), pointing forward for odd i and backward for even i.
struct ZigzagCycle {
  std::vector<std::size_t> arrows;
  std::vector<std::size_t> vertices;

  std::size_t length() const { return arrows.size(); }
  bool odd() const { return arrows.size() % 2 == 1; }

  auto operator<=>(const ZigzagCycle&) const = default;
  bool operator==(const ZigzagCycle&) const = default;
};

struct ZigzagViolation {
  enum class Clause { Length, UnknownArrow, DistinctArrows, Alternation, Closure, DistinctVertices };
  Clause clause;
  std::size_t index = 0;  // 1-based arrow position where the clause fails
  std::string message;
};

std::string clause_name(ZigzagViolation::Clause c);

/// Checks n >= 2, alternation, closure, and distinctness of arrows and
/// vertices. Returns the cycle on success, the first failed clause otherwise.
struct ZigzagCheck {
  std::optional<ZigzagCycle> cycle;
  std::optional<ZigzagViolation> violation;
  bool ok() const { return cycle.has_value(); }
};

ZigzagCheck validate_zigzag(const BoundQuiver& q, const std::vector<std::size_t>& arrows);

struct QualificationReport {
  enum class Reason { EvenLength, OddAndClosingPathAbsent, OddButClosingPathAppears, RelationsUnknown };
  bool qualifies = false;
  Reason reason = Reason::EvenLength;
  std::optional<std::size_t> generator;  // set for OddButClosingPathAppears

  std::string reason_name() const;
};

/// Even cycles qualify. Odd cycles qualify iff the closing path (a_n, then
/// a_1) is not a whole monomial of any relation generator.
QualificationReport is_qualifying(const BoundQuiver& q, const ZigzagCycle& c);

/// Lexicographically least arrow sequence among the valid representations
/// reached by even rotations and reflections.
ZigzagCycle canonical_form(const BoundQuiver& q, const ZigzagCycle& c);

/// Default search bound 2 |Q_0|.
std::size_t default_max_length(const BoundQuiver& q);

/// Every qualifying cycle of length <= max_len, one per symmetry class in
/// canonical form, ordered by length then arrow ids.
std::vector<ZigzagCycle> find_qualifying_cycles(const BoundQuiver& q, std::size_t max_len);

/// The first element of find_qualifying_cycles, searched by increasing length.
std::optional<ZigzagCycle> first_qualifying_cycle(const BoundQuiver& q, std::size_t max_len);

/// Candidate cycles from the classification argument: alternating forward /
/// backward walks for pairs of labels, and for p = 2 the Frobenius-orbit
/// 4- and 6-cycles. Candidates failing validation or qualification are
/// dropped; the survivors are canonical and deduplicated.
std::vector<ZigzagCycle> template_certificates(const BoundQuiver& q, const EigenDecomposition& eig);

}  // namespace tautilt
