#pragma once

#include <vector>

#include "tautilt/matrix.hpp"

/**
 * @file abgroup.hpp
 * @brief Finite abelian p-groups given as products of homocyclic blocks,
 * block-preserving endomorphisms, and subgroups in Howell normal form.
 *
 * Elements of a block (C_{p^e})^t are exponent columns in (Z/p^e)^t; an
 * endomorphism acts by left multiplication on those columns. All subgroup
 * arithmetic happens blockwise over Z/p^e, so everything stays word-sized.
 */

namespace tautilt {

/// One homocyclic factor (C_{p^exponent})^multiplicity.
struct Block {
  int exponent = 1;
  int multiplicity = 1;

  bool operator==(const Block&) const = default;
};

/// Flattened exponent tuple, block after block.
using Element = std::vector<Int>;

class AbelianPGroup {
 public:
  /// Throws InvalidInput unless p is prime, exponents strictly increase,
  /// multiplicities are positive and the order fits below 2^63.
  AbelianPGroup(Int p, std::vector<Block> blocks);

  Int p() const { return p_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  Int modulus(std::size_t block) const { return moduli_[block]; }

  Int order() const { return order_; }
  /// Number of cyclic factors, i.e. the rank n = sum of multiplicities.
  int rank() const;
  /// Offset of a block inside a flattened Element.
  std::size_t offset(std::size_t block) const;

  bool trivial() const { return blocks_.empty(); }

  /// Element with the given mixed-radix index in [0, order()).
  Element element(Int index) const;

  bool operator==(const AbelianPGroup&) const = default;

 private:
  Int p_;
  std::vector<Block> blocks_;
  std::vector<Int> moduli_;
  Int order_ = 1;
};

/// Per-block matrices of an endomorphism that preserves every block. A block
/// matrix may be rectangular (m x t) when used as a stacked linear system.
struct BlockMatrix {
  std::vector<IntMatrix> blocks;

  bool operator==(const BlockMatrix&) const = default;

  static BlockMatrix identity(const AbelianPGroup& g);
  static BlockMatrix zero(const AbelianPGroup& g);
};

/// Checks that every block matrix is t x t with entries in [0, p^e).
void check_endomorphism(const BlockMatrix& m, const AbelianPGroup& g);

BlockMatrix multiply(const BlockMatrix& a, const BlockMatrix& b, const AbelianPGroup& g);
BlockMatrix subtract(const BlockMatrix& a, const BlockMatrix& b, const AbelianPGroup& g);
BlockMatrix power(const BlockMatrix& a, Int exponent, const AbelianPGroup& g);
Element apply(const BlockMatrix& m, const Element& x, const AbelianPGroup& g);

/// Column Howell form of a generating set over Z/p^e.
///
/// Columns are in echelon order with strictly increasing pivot rows (the
/// topmost nonzero entry). Each pivot is a power p^k, entries of earlier
/// columns in a pivot row are reduced into [0, p^k), and the span of the
/// columns whose pivot lies at or below any row r contains every element of
/// the span that vanishes above r. These conditions make the form unique.
struct HowellForm {
  Int p = 2;
  int exponent = 1;
  Int modulus = 2;
  std::size_t dimension = 0;  // ambient rows
  std::vector<std::vector<Int>> columns;
  std::vector<std::size_t> pivot_rows;
  std::vector<int> pivot_valuations;

  std::size_t rank() const { return columns.size(); }
  IntMatrix matrix() const { return IntMatrix::from_columns(dimension, columns); }
  /// Cardinality of the span, as a power of p (exponent only).
  int log_order() const;
  Int order() const;
  /// Reduces v against the form; zero iff v lies in the span.
  std::vector<Int> reduce(std::vector<Int> v) const;
  bool contains(const std::vector<Int>& v) const;
  /// Coefficients of v in terms of the columns. Requires every pivot to be a
  /// unit (a free direct summand) and v in the span; throws InternalError otherwise.
  std::vector<Int> coordinates(const std::vector<Int>& v) const;
  /// Isomorphism type of the span as ascending prime powers.
  std::vector<Int> invariant_factors() const;

  bool operator==(const HowellForm&) const = default;
};

/// Howell form of the column span of `generators` over Z/modulus.
/// Throws InvalidModulus unless modulus is a prime power.
HowellForm howell_form(const IntMatrix& generators, Int modulus);

/// A subgroup of an AbelianPGroup that is the direct product of its block components.
struct SubgroupData {
  AbelianPGroup ambient;
  std::vector<HowellForm> blocks;
  std::vector<Int> invariant_factors;

  Int order() const;
  std::vector<std::size_t> block_ranks() const;
  bool contains(const Element& x) const;
  bool trivial() const { return invariant_factors.empty(); }
};

SubgroupData make_subgroup(const AbelianPGroup& g, std::vector<HowellForm> blocks);

/// Subgroup generated by the columns of every map.
SubgroupData image_subgroup(const std::vector<BlockMatrix>& maps, const AbelianPGroup& g);
/// Kernel of a single endomorphism.
SubgroupData kernel_subgroup(const BlockMatrix& map, const AbelianPGroup& g);
/// Common kernel of several endomorphisms.
SubgroupData common_kernel(const std::vector<BlockMatrix>& maps, const AbelianPGroup& g);
/// S + T.
SubgroupData subgroup_sum(const SubgroupData& s, const SubgroupData& t);
/// |S ∩ T|, via |S||T| = |S + T||S ∩ T|.
Int intersection_order(const SubgroupData& s, const SubgroupData& t);

std::vector<Int> invariant_factors(const SubgroupData& s);

}  // namespace tautilt
