#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tautilt/action.hpp"
#include "tautilt/ffield.hpp"

namespace tautilt {

/// A linear character of H = prod C_{d_g}, as its exponent tuple: chi sends
/// generator g to zeta_{d_g}^{c_g}. Tuple addition is the tensor product.
struct Character {
  std::vector<Int> exps;

  auto operator<=>(const Character&) const = default;
  bool operator==(const Character&) const = default;
};

/// The dual group Irr H; all character algebra is integer arithmetic on tuples.
class DualGroup {
 public:
  explicit DualGroup(AbelianGroupH h) : h_(std::move(h)) {}

  const AbelianGroupH& group() const { return h_; }
  std::size_t size() const { return static_cast<std::size_t>(h_.order()); }

  /// Characters in lexicographic tuple order; `at` and `index` are inverse.
  Character at(std::size_t index) const;
  std::size_t index(const Character& chi) const;
  std::vector<Character> all() const;

  Character trivial() const;
  Character tensor(const Character& a, const Character& b) const;
  Character inverse(const Character& a) const;
  Character power(const Character& a, Int k) const;
  bool is_trivial(const Character& a) const;
  Int order(const Character& a) const;

  /// chi(h) in F; requires every generator order to divide F.root_order().
  FField::Elem value(const FField& f, const Character& chi, const std::vector<Int>& h) const;

  std::string label(const Character& chi) const;

 private:
  AbelianGroupH h_;
};

/// One diagonal entry of the simultaneously diagonalized mod-p action.
struct EigenCharacter {
  std::size_t block = 0;
  int exponent = 1;
  Character chi;
  std::vector<FField::Elem> eigenvector;  // in F^{t_block}
};

struct EigenDecomposition {
  Int p = 2;
  AbelianGroupH H;
  std::vector<Block> blocks;
  /// Sorted by block, then character; t_i entries for block i.
  std::vector<EigenCharacter> entries;

  std::vector<std::pair<std::size_t, Character>> labels() const;
};

/// Splits F^{t_i} into common eigenspaces of the reduced action matrices one
/// generator at a time. Throws InternalError if some subspace fails to split.
EigenDecomposition eigencharacters(const GroupPresentation& pres, const FField& f);

/// Convenience overload building the splitting field for exp(H).
EigenDecomposition eigencharacters(const GroupPresentation& pres);

/// Reduced-case sanity: no trivial eigencharacter, and for p = 2 no block of
/// multiplicity one. Throws InternalError on violation.
void check_reduced_sanity(const EigenDecomposition& eig);

/// Orbits of the distinct input characters under chi -> chi^p. Each orbit is
/// the full cycle starting at its least member; orbits sorted by that member.
std::vector<std::vector<Character>> frobenius_orbits(const std::vector<Character>& chars,
                                                     const DualGroup& dual, Int p);

}  // namespace tautilt
