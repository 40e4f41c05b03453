#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "tautilt/quiver.hpp"

namespace tautilt {

using Rational = boost::rational<Int>;

/// Exact element of Q(zeta_m): rational coefficients of 1, zeta, ...,
/// zeta^{phi(m)-1}, always reduced modulo the m-th cyclotomic polynomial.
class Cyclotomic {
 public:
  explicit Cyclotomic(int order = 1);

  static Cyclotomic integer(int order, Int n);
  static Cyclotomic root(int order, Int k);
  /// sum_k coeffs[k] zeta^k, any length.
  static Cyclotomic from_powers(int order, const std::vector<Rational>& coeffs);

  int order() const { return m_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic scaled(Rational r) const;
  /// Complex conjugation zeta -> zeta^{-1}.
  Cyclotomic conj() const;

  bool is_rational() const;
  /// Constant term; meaningful when is_rational().
  Rational rational_value() const;

  std::string to_string() const;
  bool operator==(const Cyclotomic&) const = default;

 private:
  int m_;
  std::vector<Rational> c_;
};

/// Integer coefficients of the m-th cyclotomic polynomial, ascending.
const std::vector<Int>& cyclotomic_polynomial(int m);

/// Ordinary character table of H with the character of M = J/J^2 as an extra row.
struct CharacterTable {
  Int group_order = 1;
  int exponent = 1;
  std::vector<std::string> class_names;
  std::vector<Int> class_sizes;
  std::vector<std::string> names;
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<Cyclotomic> module_character;

  /// Checks class sizes, orthonormality, and the identity column.
  /// Throws InvalidInput or NonIntegerResult on a malformed table.
  void validate() const;
};

/// (1/|H|) sum_C |C| conj(chi(C)) psi(C); throws NonIntegerResult unless a
/// nonnegative rational integer.
Int cyclotomic_inner_product(const CharacterTable& table, const std::vector<Cyclotomic>& chi,
                             const std::vector<Cyclotomic>& psi);

std::vector<Cyclotomic> pointwise_product(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b);

/// counts(l, m) = <chi_m, chi_M chi_l>, the number of arrows l -> m.
IntMatrix table_arrow_counts(const CharacterTable& table);

/// Quiver without relations from the arrow counts; `relations` stays empty.
BoundQuiver quiver_from_character_table(const CharacterTable& table);

/// Character table of an abelian H synthesized from its dual group, with chi_M
/// the sum of the given characters.
CharacterTable abelian_character_table(const AbelianGroupH& h, const std::vector<Character>& module_characters);

}  // namespace tautilt
