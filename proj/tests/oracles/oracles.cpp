#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace tautilt::oracle {

namespace {

Element add(const AbelianPGroup& g, const Element& a, const Element& b) {
  Element c(a.size());
  std::size_t k = 0;
  for (std::size_t blk = 0; blk < g.block_count(); ++blk)
    for (int j = 0; j < g.blocks()[blk].multiplicity; ++j, ++k) c[k] = (a[k] + b[k]) % g.modulus(blk);
  return c;
}

Element neg(const AbelianPGroup& g, const Element& a) {
  Element c(a.size());
  std::size_t k = 0;
  for (std::size_t blk = 0; blk < g.block_count(); ++blk)
    for (int j = 0; j < g.blocks()[blk].multiplicity; ++j, ++k) c[k] = (g.modulus(blk) - a[k]) % g.modulus(blk);
  return c;
}

bool is_zero(const Element& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

// h acting on x through the generators, one generator application at a time
Element act(const GroupPresentation& pres, const std::vector<Int>& h, Element x) {
  for (std::size_t g = 0; g < h.size(); ++g)
    for (Int k = 0; k < h[g]; ++k) x = apply(pres.action[g], x, pres.P);
  return x;
}

}  // namespace

ElementSet all_elements(const AbelianPGroup& g) {
  ElementSet out;
  for (Int i = 0; i < g.order(); ++i) out.insert(g.element(i));
  return out;
}

ElementSet span(const AbelianPGroup& g, const std::vector<Element>& gens) {
  Element zero(static_cast<std::size_t>(g.rank()), 0);
  ElementSet out{zero};
  std::deque<Element> frontier{zero};
  while (!frontier.empty()) {
    auto x = frontier.front();
    frontier.pop_front();
    for (const auto& s : gens) {
      auto y = add(g, x, s);
      if (out.insert(y).second) frontier.push_back(y);
    }
  }
  return out;
}

ElementSet image(const BlockMatrix& m, const AbelianPGroup& g) {
  ElementSet out;
  for (const auto& x : all_elements(g)) out.insert(apply(m, x, g));
  return out;
}

ElementSet kernel(const BlockMatrix& m, const AbelianPGroup& g) {
  ElementSet out;
  for (const auto& x : all_elements(g))
    if (is_zero(apply(m, x, g))) out.insert(x);
  return out;
}

std::vector<Int> invariant_factors(const AbelianPGroup& g, const ElementSet& s) {
  // log_p #{x : p^k x = 0} = sum_j min(k, f_j)
  const Int p = g.p();
  if (s.size() <= 1) return {};
  std::vector<Int> logs{0};
  std::vector<Element> multiples(s.begin(), s.end());
  while (true) {
    Int count = 0;
    for (auto& x : multiples) {
      Element acc(x.size(), 0);
      for (Int t = 0; t < p; ++t) acc = add(g, acc, x);
      x = acc;
      if (is_zero(x)) ++count;
    }
    Int lg = 0;
    for (Int c = count; c > 1; c /= p) ++lg;
    logs.push_back(lg);
    if (count == static_cast<Int>(s.size())) break;
  }
  // factors with f_j >= k: logs[k] - logs[k-1]
  std::vector<Int> factors;
  Int pk = 1;
  for (std::size_t k = 1; k < logs.size(); ++k) {
    pk *= p;
    Int at_least_k = logs[k] - logs[k - 1];
    Int at_least_next = k + 1 < logs.size() ? logs[k + 1] - logs[k] : 0;
    for (Int c = 0; c < at_least_k - at_least_next; ++c) factors.push_back(pk);
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

ElementSet hyperfocal(const GroupPresentation& pres) {
  std::vector<Element> gens;
  auto elements = all_elements(pres.P);
  for (Int i = 0; i < pres.H.order(); ++i) {
    auto h = pres.H.element(i);
    for (const auto& x : elements) gens.push_back(add(pres.P, act(pres, h, x), neg(pres.P, x)));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return span(pres.P, gens);
}

ElementSet centralizer(const GroupPresentation& pres) {
  ElementSet out;
  for (const auto& x : all_elements(pres.P)) {
    bool fixed = true;
    for (Int i = 0; i < pres.H.order() && fixed; ++i) fixed = act(pres, pres.H.element(i), x) == x;
    if (fixed) out.insert(x);
  }
  return out;
}

Int eigenspace_size(const FField& f, const FqMatrix& a, FField::Elem lambda) {
  const std::size_t t = a.cols();
  std::vector<FField::Elem> v(t, 0);
  Int count = 0;
  while (true) {
    bool eigen = true;
    for (std::size_t r = 0; r < t && eigen; ++r) {
      FField::Elem s = 0;
      for (std::size_t c = 0; c < t; ++c) s = f.add(s, f.mul(a(r, c), v[c]));
      eigen = s == f.mul(lambda, v[r]);
    }
    if (eigen) ++count;
    std::size_t i = 0;
    while (i < t && ++v[i] == static_cast<FField::Elem>(f.size())) v[i++] = 0;
    if (i == t) break;
  }
  return count;
}

Int path_classes(const BoundQuiver& q, std::size_t v) {
  const auto& rels = *q.relations;
  auto commutes = [&](std::size_t at, const ArrowLabel& a, const ArrowLabel& b) {
    for (const auto& c : rels.commutators)
      if (c.vertex == at && ((c.first == a && c.second == b) || (c.first == b && c.second == a))) return true;
    return false;
  };
  auto limit = [&](std::size_t at, const ArrowLabel& a) -> Int {
    for (const auto& pw : rels.powers)
      if (pw.vertex == at && pw.label == a) return pw.length;
    return 0;
  };
  const std::size_t n = q.labels.size();
  // every label pair must commute at every vertex for the count to be a product
  for (std::size_t w = 0; w < q.vertex_count(); ++w)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (!commutes(w, q.labels[a], q.labels[b])) return -1;

  // a class is the multiset of labels used; grow it one arrow at a time
  std::set<std::vector<Int>> seen;
  std::deque<std::pair<std::vector<Int>, std::size_t>> frontier;
  seen.insert(std::vector<Int>(n, 0));
  frontier.push_back({std::vector<Int>(n, 0), v});
  while (!frontier.empty()) {
    auto [uses, at] = frontier.front();
    frontier.pop_front();
    for (std::size_t l = 0; l < n; ++l) {
      auto next = uses;
      if (++next[l] >= limit(v, q.labels[l])) continue;
      if (seen.insert(next).second) frontier.push_back({next, q.arrows[q.arrow_from(at, q.labels[l])].target});
    }
  }
  return static_cast<Int>(seen.size());
}

namespace {

bool literal_zigzag(const BoundQuiver& q, const std::vector<std::size_t>& c) {
  const std::size_t n = c.size();
  std::set<std::size_t> arrows(c.begin(), c.end());
  if (arrows.size() != n) return false;
  std::vector<std::size_t> verts;
  std::size_t v = q.arrows[c[0]].source;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = q.arrows[c[i]];
    verts.push_back(v);
    if (i % 2 == 0) {  // a_{i+1} with i+1 odd points forward
      if (a.source != v) return false;
      v = a.target;
    } else {
      if (a.target != v) return false;
      v = a.source;
    }
  }
  if (v != verts[0]) return false;
  std::set<std::size_t> distinct(verts.begin(), verts.end());
  return distinct.size() == n;
}

bool literal_qualifies(const BoundQuiver& q, const std::vector<std::size_t>& c) {
  if (c.size() % 2 == 0) return true;
  if (!q.relations) return false;
  std::vector<std::size_t> closing{c.back(), c.front()};
  for (const auto& com : q.relations->commutators)
    if (com.lhs == closing || com.rhs == closing) return false;
  for (const auto& pw : q.relations->powers) {
    if (pw.length != 2) continue;
    std::vector<std::size_t> path;
    std::size_t at = pw.vertex;
    for (int k = 0; k < 2; ++k) {
      for (const auto& a : q.arrows)
        if (a.source == at && a.label == pw.label) {
          path.push_back(a.id);
          at = a.target;
          break;
        }
    }
    if (path == closing) return false;
  }
  return true;
}

}  // namespace

std::set<std::vector<std::size_t>> naive_qualifying_cycles(const BoundQuiver& q, std::size_t max_len) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t m = q.arrows.size();
  for (std::size_t n = 2; n <= max_len; ++n) {
    std::vector<std::size_t> seq(n, 0);
    while (true) {
      if (literal_zigzag(q, seq) && literal_qualifies(q, seq)) {
        std::vector<std::size_t> best = seq;
        std::vector<std::size_t> rev(seq.rbegin(), seq.rend());
        for (const auto& base : {seq, rev})
          for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::size_t> rot(n);
            for (std::size_t i = 0; i < n; ++i) rot[i] = base[(i + s) % n];
            if (literal_zigzag(q, rot) && rot < best) best = rot;
          }
        out.insert(best);
      }
      std::size_t i = 0;
      while (i < n && ++seq[i] == m) seq[i++] = 0;
      if (i == n) break;
    }
  }
  return out;
}

}  // namespace tautilt::oracle
