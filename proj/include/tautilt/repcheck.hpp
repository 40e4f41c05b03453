#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tautilt/ffield.hpp"
#include "tautilt/quiver.hpp"
#include "tautilt/zigzag.hpp"

namespace tautilt {

/// Shared, cached field of order q.
std::shared_ptr<const FField> field_of_order(Int q);

/// One matrix per arrow, indexed by arrow id, of shape dims[target] x dims[source].
struct QuiverRep {
  std::shared_ptr<const FField> field;
  std::vector<std::size_t> dims;
  std::vector<FqMatrix> matrices;

  static QuiverRep zero(const BoundQuiver& q, std::shared_ptr<const FField> field, std::vector<std::size_t> dims);
  std::size_t total_dimension() const;
  bool operator==(const QuiverRep& o) const {
    return field->size() == o.field->size() && dims == o.dims && matrices == o.matrices;
  }
};

/// Throws ShapeError on dimension mismatch, InvalidInput on entries outside the field.
void check_rep(const BoundQuiver& q, const QuiverRep& rep);

/// Matrix of a path given in traversal order.
FqMatrix path_matrix(const BoundQuiver& q, const QuiverRep& rep, const Path& path, std::size_t start);

/// Id of the first relation generator not killed by rep, or nullopt. A quiver
/// without relations imposes none.
std::optional<std::size_t> eval_relations(const BoundQuiver& q, const QuiverRep& rep);

/// Basis of the intertwiner space {(E_v) : E_t(a) M_a = M_a E_s(a)}.
std::vector<std::vector<FqMatrix>> endomorphism_basis(const BoundQuiver& q, const QuiverRep& rep);
std::size_t endomorphism_dimension(const BoundQuiver& q, const QuiverRep& rep);
bool is_brick(const BoundQuiver& q, const QuiverRep& rep);

/// Exhaustive search for an invertible intertwiner a -> b. Throws
/// SearchSpaceTooLarge when the Hom space has more than 2^20 elements.
bool is_isomorphic(const BoundQuiver& q, const QuiverRep& a, const QuiverRep& b);

/// Dimension 1 on the cycle vertices, holonomy on a_1, 1 on the other cycle
/// arrows, zero elsewhere.
QuiverRep pull_back_cycle_rep(const BoundQuiver& q, const ZigzagCycle& c, FField::Elem holonomy,
                              std::shared_ptr<const FField> field);

/// The cycle as a quiver of its own: vertices v_0..v_{n-1}, arrows a_1..a_n
/// renumbered 0..n-1, no relations.
BoundQuiver cycle_subquiver(const BoundQuiver& q, const ZigzagCycle& c);

struct BrickEnumeration {
  std::size_t count = 0;
  std::vector<QuiverRep> representatives;  // lexicographically least in each class
};

/// Brute force over all matrix assignments (at most 2^24), keeping those that
/// satisfy the relations and are bricks, grouped up to isomorphism.
BrickEnumeration enumerate_bricks(const BoundQuiver& q, const std::vector<std::size_t>& dims,
                                  std::shared_ptr<const FField> field);

}  // namespace tautilt
