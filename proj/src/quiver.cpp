#include "tautilt/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tautilt/modular.hpp"

namespace tautilt {

std::vector<std::size_t> BoundQuiver::out_arrows(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& a : arrows)
    if (a.source == v) out.push_back(a.id);
  return out;
}

std::vector<std::size_t> BoundQuiver::in_arrows(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& a : arrows)
    if (a.target == v) out.push_back(a.id);
  return out;
}

std::size_t BoundQuiver::arrow_from(std::size_t v, const ArrowLabel& label) const {
  // arrows are grouped by source with labels in order when built here
  if (!labels.empty() && arrows.size() == vertex_count() * labels.size()) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it != labels.end()) {
      std::size_t id = v * labels.size() + static_cast<std::size_t>(it - labels.begin());
      if (arrows[id].source == v && arrows[id].label == label) return id;
    }
  }
  for (const auto& a : arrows)
    if (a.source == v && a.label == label) return a.id;
  throw InvalidInput("no arrow with label (" + std::to_string(label.exponent) + "," +
                     std::to_string(label.index) + ") at vertex " + std::to_string(v));
}

Path BoundQuiver::power_path(const PowerRelation& rel) const {
  Path path;
  path.reserve(static_cast<std::size_t>(rel.length));
  std::size_t v = rel.vertex;
  for (Int k = 0; k < rel.length; ++k) {
    std::size_t a = arrow_from(v, rel.label);
    path.push_back(a);
    v = arrows[a].target;
  }
  return path;
}

BoundQuiver build_bound_quiver(const EigenDecomposition& eig) {
  DualGroup dual(eig.H);
  BoundQuiver q;
  q.p = eig.p;
  q.h_orders = eig.H.orders();
  q.characters = dual.all();
  for (const auto& chi : q.characters) q.vertex_names.push_back(dual.label(chi));

  std::size_t current_block = static_cast<std::size_t>(-1);
  int j = 0;
  for (const auto& e : eig.entries) {
    if (e.block != current_block) {
      current_block = e.block;
      j = 0;
    }
    q.labels.push_back({e.exponent, ++j});
    q.label_characters.push_back(e.chi);
  }

  const std::size_t n = q.labels.size();
  for (std::size_t v = 0; v < q.characters.size(); ++v)
    for (std::size_t l = 0; l < n; ++l) {
      std::size_t target = dual.index(dual.tensor(q.label_characters[l], q.characters[v]));
      q.arrows.push_back({v * n + l, v, target, q.labels[l]});
    }

  RelationSet rels;
  std::size_t id = 0;
  for (std::size_t v = 0; v < q.characters.size(); ++v)
    for (std::size_t l1 = 0; l1 < n; ++l1)
      for (std::size_t l2 = l1 + 1; l2 < n; ++l2) {
        std::size_t a1 = v * n + l1, a2 = v * n + l2;
        Path lhs{a1, q.arrows[a1].target * n + l2};
        Path rhs{a2, q.arrows[a2].target * n + l1};
        rels.commutators.push_back({id++, v, q.labels[l1], q.labels[l2], std::move(lhs), std::move(rhs)});
      }
  for (std::size_t v = 0; v < q.characters.size(); ++v)
    for (std::size_t l = 0; l < n; ++l) {
      auto len = modular::checked_pow(eig.p, q.labels[l].exponent);
      if (!len) throw InvalidInput("nilpotency length overflows");
      rels.powers.push_back({id++, v, q.labels[l], *len});
    }
  q.relations = std::move(rels);
  return q;
}

Int path_normal_form_count(const BoundQuiver& q, std::size_t v) {
  if (!q.relations) throw InvalidInput("path count needs relations; this quiver has none");
  if (v >= q.vertex_count()) throw InvalidInput("vertex out of range");
  const auto& rels = *q.relations;

  std::set<std::pair<ArrowLabel, ArrowLabel>> commuting;
  for (const auto& c : rels.commutators)
    if (c.vertex == v) commuting.insert({std::min(c.first, c.second), std::max(c.first, c.second)});

  __int128 count = 1;
  for (std::size_t i = 0; i < q.labels.size(); ++i) {
    for (std::size_t k = i + 1; k < q.labels.size(); ++k)
      if (!commuting.count({std::min(q.labels[i], q.labels[k]), std::max(q.labels[i], q.labels[k])}))
        throw InvalidInput("relations are not of commutator form at this vertex");
    auto it = std::find_if(rels.powers.begin(), rels.powers.end(),
                           [&](const PowerRelation& r) { return r.vertex == v && r.label == q.labels[i]; });
    if (it == rels.powers.end()) throw InvalidInput("label without a nilpotency relation");
    // each label contributes exponents 0 .. length-1
    count *= it->length;
    if (count > static_cast<__int128>(INT64_MAX)) throw InvalidInput("path count overflows");
  }
  return static_cast<Int>(count);
}

Int arrow_count_general(const EigenDecomposition& eig, const Character& lambda, const Character& mu) {
  DualGroup dual(eig.H);
  Character wanted = dual.tensor(mu, dual.inverse(lambda));
  return static_cast<Int>(std::count_if(eig.entries.begin(), eig.entries.end(),
                                        [&](const EigenCharacter& e) { return e.chi == wanted; }));
}

bool is_connected(const BoundQuiver& q) {
  std::size_t n = q.vertex_count();
  if (n == 0) return true;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& a : q.arrows) {
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

bool characters_generate(const EigenDecomposition& eig) {
  DualGroup dual(eig.H);
  std::set<Character> span{dual.trivial()};
  std::vector<Character> frontier{dual.trivial()};
  while (!frontier.empty()) {
    auto chi = frontier.back();
    frontier.pop_back();
    for (const auto& e : eig.entries) {
      auto next = dual.tensor(chi, e.chi);
      if (span.insert(next).second) frontier.push_back(next);
    }
  }
  return span.size() == dual.size();
}

std::string to_dot(const BoundQuiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    out << "  v" << v << " [label=\"" << q.vertex_names[v] << "\"];\n";
  for (const auto& a : q.arrows)
    out << "  v" << a.source << " -> v" << a.target << " [label=\"(" << a.label.exponent << ","
        << a.label.index << ")\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace tautilt
