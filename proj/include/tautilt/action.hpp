#pragma once

#include <string>
#include <vector>

#include "tautilt/abgroup.hpp"

namespace tautilt {

/// Finite abelian group H = C_{d_1} x ... x C_{d_s}; elements are exponent tuples.
class AbelianGroupH {
 public:
  AbelianGroupH() = default;
  /// Throws InvalidInput on an order < 1.
  explicit AbelianGroupH(std::vector<Int> orders);

  const std::vector<Int>& orders() const { return orders_; }
  std::size_t generator_count() const { return orders_.size(); }
  Int order() const;
  /// Least common multiple of the generator orders (1 for the trivial group).
  Int exponent() const;
  /// Element with mixed-radix index in [0, order()); first coordinate most significant.
  std::vector<Int> element(Int index) const;

  bool operator==(const AbelianGroupH&) const = default;

 private:
  std::vector<Int> orders_;
};

/// G = P x| H, with one block-preserving action matrix per H-generator.
struct GroupPresentation {
  AbelianPGroup P;
  AbelianGroupH H;
  std::vector<BlockMatrix> action;

  bool operator==(const GroupPresentation&) const = default;
};

struct Violation {
  enum class Kind { Shape, PDividesOrder, NotInvertible, OrderMismatch, NotCommuting };
  Kind kind;
  std::size_t generator = 0;
  std::size_t other = 0;
  std::size_t block = 0;
  std::string message;
};

/// Empty result means the presentation is valid.
std::vector<Violation> validate_presentation(const GroupPresentation& pres);

/// Throws InvalidInput listing every violation.
void require_valid(const GroupPresentation& pres);

/// The matrix of an arbitrary H-element, prod_g A_g^{c_g}.
BlockMatrix action_of(const GroupPresentation& pres, const std::vector<Int>& h);

/// [P,H], generated by Im(A_g - I) over the H-generators.
SubgroupData hyperfocal_subgroup(const GroupPresentation& pres);

/// C_P(H), the common kernel of A_g - I.
SubgroupData centralizer(const GroupPresentation& pres);

/// Presentation of [P,H] x| H in a unit-pivot Howell basis of [P,H].
GroupPresentation reduce_to_hyperfocal(const GroupPresentation& pres);

struct HyperfocalData {
  SubgroupData hyperfocal;
  SubgroupData centralizer;
  GroupPresentation reduced;
  /// |R| |C| = |P| and R ∩ C = 1.
  bool direct_product = false;
};

HyperfocalData hyperfocal_data(const GroupPresentation& pres);

}  // namespace tautilt
