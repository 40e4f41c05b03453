#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "tautilt/charfield.hpp"

namespace tautilt {

/// Layer label (i, j): the j-th (1-based) eigencharacter of the block of
/// exponent i. Quivers built from a character table use exponent 0 and j
/// numbering the parallel arrows.
struct ArrowLabel {
  int exponent = 0;
  int index = 0;

  auto operator<=>(const ArrowLabel&) const = default;
  bool operator==(const ArrowLabel&) const = default;
};

struct Arrow {
  std::size_t id = 0;
  std::size_t source = 0;
  std::size_t target = 0;
  ArrowLabel label;

  bool operator==(const Arrow&) const = default;
};

/// A path as arrow ids in traversal order: path[0] is followed first. A
/// composite written right-to-left as "b a" is stored as {a, b}.
using Path = std::vector<std::size_t>;

/// alpha_second alpha_first - alpha_first alpha_second at `vertex`.
struct Commutator {
  std::size_t id = 0;
  std::size_t vertex = 0;
  ArrowLabel first;
  ArrowLabel second;
  Path lhs;  // first, then second
  Path rhs;  // second, then first

  bool operator==(const Commutator&) const = default;
};

/// alpha_label^length starting at `vertex`, with length = p^exponent.
struct PowerRelation {
  std::size_t id = 0;
  std::size_t vertex = 0;
  ArrowLabel label;
  Int length = 0;

  bool operator==(const PowerRelation&) const = default;
};

struct RelationSet {
  std::vector<Commutator> commutators;
  std::vector<PowerRelation> powers;

  std::size_t size() const { return commutators.size() + powers.size(); }
  bool operator==(const RelationSet&) const = default;
};

/// Quiver plus (optionally) its relations. `relations` is empty for
/// quivers derived from a character table, where relations are unknown.
struct BoundQuiver {
  Int p = 0;
  std::vector<Int> h_orders;
  std::vector<std::string> vertex_names;
  std::vector<Character> characters;  // vertex characters; empty in table mode
  std::vector<ArrowLabel> labels;
  std::vector<Character> label_characters;  // chi_{ij} per label; empty in table mode
  std::vector<Arrow> arrows;
  std::optional<RelationSet> relations;

  std::size_t vertex_count() const { return vertex_names.size(); }
  bool relations_known() const { return relations.has_value(); }

  std::vector<std::size_t> out_arrows(std::size_t v) const;
  std::vector<std::size_t> in_arrows(std::size_t v) const;
  /// The arrow with the given label leaving v; throws InvalidInput if absent.
  std::size_t arrow_from(std::size_t v, const ArrowLabel& label) const;
  /// Arrow ids of alpha_label^length starting at v.
  Path power_path(const PowerRelation& rel) const;

  bool operator==(const BoundQuiver&) const = default;
};

/// Builds the quiver with vertices Irr H, arrows lambda -> chi_{ij} lambda,
/// and the commutator and p^i-th power relations.
BoundQuiver build_bound_quiver(const EigenDecomposition& eig);

/// Number of nonzero path classes from v modulo the relations. Requires the
/// commutator and power structure produced by build_bound_quiver.
Int path_normal_form_count(const BoundQuiver& q, std::size_t v);

/// #{labels with chi_{ij} = mu lambda^{-1}}.
Int arrow_count_general(const EigenDecomposition& eig, const Character& lambda, const Character& mu);

bool is_connected(const BoundQuiver& q);

/// True iff the eigencharacters generate the dual group.
bool characters_generate(const EigenDecomposition& eig);

std::string to_dot(const BoundQuiver& q);

}  // namespace tautilt
