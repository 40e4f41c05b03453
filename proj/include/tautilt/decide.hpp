#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautilt/action.hpp"
#include "tautilt/quiver.hpp"
#include "tautilt/zigzag.hpp"

namespace tautilt {

struct HyperfocalClass {
  enum class Kind { Trivial, Cyclic, KleinFour, Other };
  Kind kind = Kind::Trivial;
  Int p = 2;
  std::vector<Int> factors;  // ascending

  Int cyclic_order() const { return kind == Kind::Cyclic ? factors.front() : 1; }
  std::string name() const;
};

/// Trivial for no factors, Cyclic for one, KleinFour for {2,2}, Other otherwise.
/// Throws InvalidInput when a factor is not a power of p.
HyperfocalClass classify_hyperfocal(std::vector<Int> factors, Int p);

enum class Outcome { Finite, Infinite, Unknown };
std::string outcome_name(Outcome o);

struct Certificate {
  ZigzagCycle cycle;
  BoundQuiver quiver;  // the reduced quiver the cycle lives in
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::string reason;
  Int p = 0;
  std::vector<Int> hyperfocal;
  std::optional<Certificate> certificate;
  bool classification_only = false;
};

struct DecideOptions {
  std::optional<std::size_t> max_cycle_len;  // default 2 |Q_0|
};

Verdict decide_abelian(const GroupPresentation& pres, const DecideOptions& opts = {});

/// Action of H on the Frattini quotient P / Phi(P) = F_p^n.
struct FrattiniInput {
  Int p = 2;
  std::size_t n = 0;
  AbelianGroupH H;
  std::vector<IntMatrix> matrices;  // one n x n matrix over F_p per generator

  bool operator==(const FrattiniInput&) const = default;
};

/// Shape, invertibility, commutation and order checks; throws InvalidInput.
void require_valid(const FrattiniInput& inp);

/// Dimension of the common fixed space of the generators on F_p^n.
std::size_t frattini_fixed_dimension(const FrattiniInput& inp);

Verdict decide_frattini(const FrattiniInput& inp);

enum class Sufficiency { Yes, No, Unknown };
enum class NonabelianKind { Cyclic, Dihedral, Semidihedral, Quaternion, Other };
std::string sufficiency_name(Sufficiency s);

/// Sufficient conditions only: never answers No.
Sufficiency finiteness_sufficient(const HyperfocalClass& cls);
Sufficiency finiteness_sufficient(NonabelianKind kind, Int p);

}  // namespace tautilt
