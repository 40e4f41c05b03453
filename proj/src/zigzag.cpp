#include "tautilt/zigzag.hpp"

#include <algorithm>
#include <set>

namespace tautilt {

namespace {

struct ByLengthThenArrows {
  bool operator()(const ZigzagCycle& a, const ZigzagCycle& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.arrows < b.arrows;
  }
};

using CycleSet = std::set<ZigzagCycle, ByLengthThenArrows>;

}  // namespace

std::string clause_name(ZigzagViolation::Clause c) {
  using C = ZigzagViolation::Clause;
  switch (c) {
    case C::Length: return "length";
    case C::UnknownArrow: return "unknown_arrow";
    case C::DistinctArrows: return "distinct_arrows";
    case C::Alternation: return "alternation";
    case C::Closure: return "closure";
    case C::DistinctVertices: return "distinct_vertices";
  }
  return "unknown";
}

ZigzagCheck validate_zigzag(const BoundQuiver& q, const std::vector<std::size_t>& arrows) {
  using C = ZigzagViolation::Clause;
  auto fail = [](C clause, std::size_t index, std::string msg) {
    return ZigzagCheck{std::nullopt, ZigzagViolation{clause, index, std::move(msg)}};
  };
  const std::size_t n = arrows.size();
  if (n < 2) return fail(C::Length, n, "a zigzag cycle needs n >= 2 arrows");
  for (std::size_t i = 0; i < n; ++i)
    if (arrows[i] >= q.arrows.size())
      return fail(C::UnknownArrow, i + 1, "arrow id " + std::to_string(arrows[i]) + " does not exist");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (arrows[i] == arrows[j])
        return fail(C::DistinctArrows, j + 1, "arrow " + std::to_string(arrows[i]) + " is repeated");

  auto src = [&](std::size_t i) { return q.arrows[arrows[i - 1]].source; };  // 1-based
  auto tgt = [&](std::size_t i) { return q.arrows[arrows[i - 1]].target; };
  for (std::size_t i = 1; i < n; ++i) {
    bool ok = (i % 2 == 1) ? tgt(i) == tgt(i + 1) : src(i) == src(i + 1);
    if (!ok)
      return fail(C::Alternation, i,
                   (i % 2 == 1 ? "t(a_" : "s(a_") + std::to_string(i) + ") differs from the same end of a_" +
                       std::to_string(i + 1));
  }
  bool closed = (n % 2 == 1) ? src(1) == tgt(n) : src(1) == src(n);
  if (!closed) return fail(C::Closure, n, n % 2 ? "s(a_1) != t(a_n) for odd n" : "s(a_1) != s(a_n) for even n");

  ZigzagCycle c;
  c.arrows = arrows;
  c.vertices.push_back(src(1));
  for (std::size_t i = 1; i < n; ++i) c.vertices.push_back(i % 2 == 1 ? tgt(i) : src(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (c.vertices[i] == c.vertices[j])
        return fail(C::DistinctVertices, j, "vertex " + std::to_string(c.vertices[j]) + " repeats");
  return {std::move(c), std::nullopt};
}

std::string QualificationReport::reason_name() const {
  switch (reason) {
    case Reason::EvenLength: return "even_length";
    case Reason::OddAndClosingPathAbsent: return "odd_closing_path_absent";
    case Reason::OddButClosingPathAppears: return "odd_closing_path_appears";
    case Reason::RelationsUnknown: return "relations_unknown";
  }
  return "unknown";
}

QualificationReport is_qualifying(const BoundQuiver& q, const ZigzagCycle& c) {
  using R = QualificationReport::Reason;
  if (!c.odd()) return {true, R::EvenLength, std::nullopt};
  if (!q.relations) return {false, R::RelationsUnknown, std::nullopt};
  Path closing{c.arrows.back(), c.arrows.front()};
  for (const auto& com : q.relations->commutators)
    if (com.lhs == closing || com.rhs == closing) return {false, R::OddButClosingPathAppears, com.id};
  for (const auto& pw : q.relations->powers)
    if (pw.length == 2 && q.power_path(pw) == closing) return {false, R::OddButClosingPathAppears, pw.id};
  return {true, R::OddAndClosingPathAbsent, std::nullopt};
}

ZigzagCycle canonical_form(const BoundQuiver& q, const ZigzagCycle& c) {
  const std::size_t n = c.length();
  ZigzagCycle best = c;
  const std::vector<std::size_t> reversed(c.arrows.rbegin(), c.arrows.rend());
  for (const std::vector<std::size_t>* seq : {&c.arrows, &reversed})
    for (std::size_t shift = 0; shift < n; shift += 2) {
      std::vector<std::size_t> rotated(n);
      for (std::size_t i = 0; i < n; ++i) rotated[i] = (*seq)[(i + shift) % n];
      if (rotated >= best.arrows) continue;
      auto check = validate_zigzag(q, rotated);
      if (check.ok()) best = *check.cycle;
    }
  return best;
}

std::size_t default_max_length(const BoundQuiver& q) { return 2 * q.vertex_count(); }

namespace {

// Depth-first enumeration of zigzag cycles with distinct vertices whose
// length lies in [min_len, max_len]; qualifying ones go into `out`.
class CycleSearch {
 public:
  CycleSearch(const BoundQuiver& q, std::size_t min_len, std::size_t max_len)
      : q_(q), min_len_(std::max<std::size_t>(2, min_len)),
        max_len_(std::min(max_len, q.vertex_count())), out_adj_(q.vertex_count()),
        in_adj_(q.vertex_count()), visited_(q.vertex_count(), false) {
    for (const auto& a : q.arrows) {
      out_adj_[a.source].push_back(a.id);
      in_adj_[a.target].push_back(a.id);
    }
  }

  CycleSet run() {
    if (max_len_ < min_len_) return {};
    for (const auto& a1 : q_.arrows) {
      if (a1.source == a1.target) continue;
      start_ = a1.source;
      arrows_ = {a1.id};
      verts_ = {a1.source, a1.target};
      visited_[a1.source] = visited_[a1.target] = true;
      extend();
      visited_[a1.source] = visited_[a1.target] = false;
    }
    return std::move(found_);
  }

 private:
  void extend() {
    const std::size_t i = arrows_.size() + 1;  // 1-based index of the next arrow
    const std::size_t cur = verts_.back();
    const bool forward = i % 2 == 1;
    for (std::size_t id : forward ? out_adj_[cur] : in_adj_[cur]) {
      const auto& a = q_.arrows[id];
      std::size_t w = forward ? a.target : a.source;
      if (w == start_) {
        if (i >= min_len_ && i <= max_len_ && id != arrows_.front()) record(id);
        continue;
      }
      if (visited_[w] || i >= max_len_) continue;
      arrows_.push_back(id);
      verts_.push_back(w);
      visited_[w] = true;
      extend();
      visited_[w] = false;
      verts_.pop_back();
      arrows_.pop_back();
    }
  }

  void record(std::size_t closing) {
    ZigzagCycle c;
    c.arrows = arrows_;
    c.arrows.push_back(closing);
    c.vertices = verts_;
    if (!is_qualifying(q_, c).qualifies) return;
    found_.insert(canonical_form(q_, c));
  }

  const BoundQuiver& q_;
  std::size_t min_len_;
  std::size_t max_len_;
  std::vector<std::vector<std::size_t>> out_adj_;
  std::vector<std::vector<std::size_t>> in_adj_;
  std::vector<bool> visited_;
  std::size_t start_ = 0;
  std::vector<std::size_t> arrows_;
  std::vector<std::size_t> verts_;
  CycleSet found_;
};

}  // namespace

std::vector<ZigzagCycle> find_qualifying_cycles(const BoundQuiver& q, std::size_t max_len) {
  auto found = CycleSearch(q, 2, max_len).run();
  return {found.begin(), found.end()};
}

std::optional<ZigzagCycle> first_qualifying_cycle(const BoundQuiver& q, std::size_t max_len) {
  std::size_t limit = std::min(max_len, q.vertex_count());
  for (std::size_t len = 2; len <= limit; ++len) {
    auto found = CycleSearch(q, len, len).run();
    if (!found.empty()) return *found.begin();
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Templates

namespace {

class TemplateBuilder {
 public:
  TemplateBuilder(const BoundQuiver& q, const EigenDecomposition& eig)
      : q_(q), eig_(eig), dual_(AbelianGroupH(q.h_orders)) {}

  std::vector<ZigzagCycle> build() {
    if (!q_.relations || q_.label_characters.empty()) return {};
    walks();
    if (eig_.p == 2) frobenius_templates();
    return {found_.begin(), found_.end()};
  }

 private:
  std::size_t vertex_of(const Character& chi) const { return dual_.index(chi); }

  void offer(const std::vector<std::size_t>& arrows) {
    auto check = validate_zigzag(q_, arrows);
    if (!check.ok()) return;
    if (!is_qualifying(q_, *check.cycle).qualifies) return;
    found_.insert(canonical_form(q_, *check.cycle));
  }

  // lambda -> chi lambda <- chi'^{-1} chi lambda -> ... until a vertex repeats
  void walks() {
    const auto& labels = q_.labels;
    for (std::size_t l = 0; l < labels.size(); ++l)
      for (std::size_t m = 0; m < labels.size(); ++m) {
        if (l == m) continue;
        Character back = dual_.inverse(q_.label_characters[m]);
        for (std::size_t v0 = 0; v0 < q_.vertex_count(); ++v0) {
          std::vector<std::size_t> arrows;
          std::vector<std::size_t> verts{v0};
          std::size_t cur = v0;
          for (std::size_t step = 1; step <= 2 * q_.vertex_count() + 1; ++step) {
            std::size_t a, w;
            if (step % 2 == 1) {
              a = q_.arrow_from(cur, labels[l]);
              w = q_.arrows[a].target;
            } else {
              w = vertex_of(dual_.tensor(back, q_.characters[cur]));
              a = q_.arrow_from(w, labels[m]);
            }
            arrows.push_back(a);
            if (std::find(verts.begin(), verts.end(), w) != verts.end()) break;
            verts.push_back(w);
            cur = w;
          }
          offer(arrows);
        }
      }
  }

  std::optional<std::size_t> label_for(const Character& chi) const {
    for (std::size_t l = 0; l < q_.labels.size(); ++l)
      if (q_.labels[l].exponent == 1 && q_.label_characters[l] == chi) return l;
    return std::nullopt;
  }

  void frobenius_templates() {
    std::vector<Character> layer_one;
    for (std::size_t l = 0; l < q_.labels.size(); ++l)
      if (q_.labels[l].exponent == 1) layer_one.push_back(q_.label_characters[l]);
    auto orbits = frobenius_orbits(layer_one, dual_, 2);

    auto arrow = [&](const Character& at, const Character& label_chi, std::size_t v0) -> std::optional<std::size_t> {
      auto l = label_for(label_chi);
      if (!l) return std::nullopt;
      std::size_t v = vertex_of(dual_.tensor(at, q_.characters[v0]));
      return q_.arrow_from(v, q_.labels[*l]);
    };
    auto offer_all = [&](std::initializer_list<std::optional<std::size_t>> parts) {
      std::vector<std::size_t> arrows;
      for (const auto& a : parts) {
        if (!a) return;
        arrows.push_back(*a);
      }
      offer(arrows);
    };

    const Character one = dual_.trivial();
    for (std::size_t v0 = 0; v0 < q_.vertex_count(); ++v0) {
      for (const auto& orbit : orbits) {
        if (orbit.size() < 3) continue;
        for (const auto& chi : orbit) {
          auto c2 = dual_.power(chi, 2), c3 = dual_.power(chi, 3), c4 = dual_.power(chi, 4);
          // lambda, chi^2, chi, chi^5, chi^3, chi^4 around the hexagon
          offer_all({arrow(one, c2, v0), arrow(chi, chi, v0), arrow(chi, c4, v0), arrow(c3, c2, v0),
                     arrow(c3, chi, v0), arrow(one, c4, v0)});
          // square used when chi^5 is trivial
          offer_all({arrow(one, chi, v0), arrow(c2, c4, v0), arrow(c2, c2, v0), arrow(one, c4, v0)});
        }
      }
      for (std::size_t i = 0; i < orbits.size(); ++i)
        for (std::size_t j = 0; j < orbits.size(); ++j) {
          if (i == j || orbits[i].size() != 2 || orbits[j].size() != 2) continue;
          const auto& chi = orbits[i][0];
          const auto& psi = orbits[j][0];
          auto both = dual_.tensor(chi, psi);
          offer_all({arrow(one, chi, v0), arrow(both, dual_.power(psi, 2), v0),
                     arrow(both, dual_.power(chi, 2), v0), arrow(one, psi, v0)});
        }
    }
  }

  const BoundQuiver& q_;
  const EigenDecomposition& eig_;
  DualGroup dual_;
  CycleSet found_;
};

}  // namespace

std::vector<ZigzagCycle> template_certificates(const BoundQuiver& q, const EigenDecomposition& eig) {
  return TemplateBuilder(q, eig).build();
}

}  // namespace tautilt
