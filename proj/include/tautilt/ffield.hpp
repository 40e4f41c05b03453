#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tautilt/matrix.hpp"

namespace tautilt {

/// The finite field F_{p^m} = F_p[x]/(f) with f the least monic irreducible of
/// degree m, where polynomials are ordered by the integer code sum c_i p^i of
/// their lower coefficients. Elements are stored as such codes.
///
/// Multiplication uses log/exp tables built from the least primitive element,
/// so fields are capped at q <= 2^20.
class FField {
 public:
  using Elem = std::uint32_t;

  /// F_{p^degree}, with its distinguished root of unity of order q - 1.
  FField(Int p, int degree);

  /// Least extension of F_p containing a primitive N-th root of unity; the
  /// distinguished root is g^{(q-1)/N} for the least primitive element g.
  /// Throws NotCoprime if p divides N.
  static FField splitting_field(Int p, Int root_order);

  /// F_q for a prime power q; throws InvalidModulus otherwise.
  static FField of_order(Int q);

  Int characteristic() const { return p_; }
  int degree() const { return m_; }
  Int size() const { return q_; }
  /// Lower coefficients c_0..c_{m-1} of the monic modulus.
  const std::vector<Int>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(Int a) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws InvalidInput on zero.
  Elem inv(Elem a) const;
  Elem pow(Elem a, Int k) const;

  Elem primitive_element() const { return generator_; }
  Int root_order() const { return root_order_; }
  Elem zeta() const { return zeta_; }
  /// zeta^k, k taken modulo root_order().
  Elem zeta_power(Int k) const;

  std::string to_string(Elem a) const;

  bool operator==(const FField& other) const {
    return p_ == other.p_ && m_ == other.m_ && root_order_ == other.root_order_;
  }

 private:
  FField(Int p, int degree, Int root_order);

  Elem slow_mul(Elem a, Elem b) const;

  Int p_;
  int m_;
  Int q_;
  std::vector<Int> modulus_;
  Elem generator_ = 1;
  Int root_order_ = 1;
  Elem zeta_ = 1;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

using FqMatrix = Matrix<FField::Elem>;

namespace fq {

FqMatrix multiply(const FField& f, const FqMatrix& a, const FqMatrix& b);
FqMatrix subtract(const FField& f, const FqMatrix& a, const FqMatrix& b);
FqMatrix scalar_identity(const FField& f, std::size_t n, FField::Elem s);
std::size_t rank(const FField& f, FqMatrix a);
/// Basis of {x : a x = 0} as the columns of the result.
FqMatrix nullspace(const FField& f, const FqMatrix& a);
FField::Elem determinant(const FField& f, FqMatrix a);
bool is_zero(const FqMatrix& a);

}  // namespace fq

}  // namespace tautilt
