#include "tautilt/repcheck.hpp"

#include <map>
#include <mutex>

#include "tautilt/modular.hpp"

namespace tautilt {

std::shared_ptr<const FField> field_of_order(Int q) {
  static std::mutex mu;
  static std::map<Int, std::shared_ptr<const FField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[q];
  if (!slot) slot = std::make_shared<const FField>(FField::of_order(q));
  return slot;
}

QuiverRep QuiverRep::zero(const BoundQuiver& q, std::shared_ptr<const FField> field, std::vector<std::size_t> dims) {
  if (dims.size() != q.vertex_count()) throw ShapeError("one dimension per vertex expected");
  QuiverRep r{std::move(field), std::move(dims), {}};
  for (const auto& a : q.arrows) r.matrices.emplace_back(r.dims[a.target], r.dims[a.source]);
  return r;
}

std::size_t QuiverRep::total_dimension() const {
  std::size_t t = 0;
  for (auto d : dims) t += d;
  return t;
}

void check_rep(const BoundQuiver& q, const QuiverRep& rep) {
  if (!rep.field) throw InvalidInput("representation has no field");
  if (rep.dims.size() != q.vertex_count())
    throw ShapeError("representation has " + std::to_string(rep.dims.size()) + " vertex dimensions, quiver has " +
                     std::to_string(q.vertex_count()) + " vertices");
  if (rep.matrices.size() != q.arrows.size())
    throw ShapeError("representation has " + std::to_string(rep.matrices.size()) + " matrices, quiver has " +
                     std::to_string(q.arrows.size()) + " arrows");
  for (const auto& a : q.arrows) {
    const auto& m = rep.matrices[a.id];
    if (m.rows() != rep.dims[a.target] || m.cols() != rep.dims[a.source])
      throw ShapeError("matrix of arrow " + std::to_string(a.id) + " must be " + std::to_string(rep.dims[a.target]) +
                       "x" + std::to_string(rep.dims[a.source]));
    for (auto x : m.data())
      if (static_cast<Int>(x) >= rep.field->size())
        throw InvalidInput("entry " + std::to_string(x) + " of arrow " + std::to_string(a.id) + " is not in F_" +
                           std::to_string(rep.field->size()));
  }
}

FqMatrix path_matrix(const BoundQuiver& q, const QuiverRep& rep, const Path& path, std::size_t start) {
  const FField& f = *rep.field;
  FqMatrix acc = fq::scalar_identity(f, rep.dims[start], f.one());
  std::size_t v = start;
  for (std::size_t id : path) {
    const auto& a = q.arrows.at(id);
    if (a.source != v) throw InvalidInput("path is not composable at arrow " + std::to_string(id));
    acc = fq::multiply(f, rep.matrices[id], acc);
    v = a.target;
  }
  return acc;
}

std::optional<std::size_t> eval_relations(const BoundQuiver& q, const QuiverRep& rep) {
  check_rep(q, rep);
  if (!q.relations) return std::nullopt;
  const FField& f = *rep.field;
  for (const auto& c : q.relations->commutators) {
    auto l = path_matrix(q, rep, c.lhs, c.vertex);
    auto r = path_matrix(q, rep, c.rhs, c.vertex);
    if (!fq::is_zero(fq::subtract(f, l, r))) return c.id;
  }
  for (const auto& pw : q.relations->powers)
    if (!fq::is_zero(path_matrix(q, rep, q.power_path(pw), pw.vertex))) return pw.id;
  return std::nullopt;
}

namespace {

// Linear system for intertwiners X: a -> b, unknowns X_v (dims_b[v] x dims_a[v])
// row-major and concatenated in vertex order.
struct HomSystem {
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  FqMatrix basis;  // columns span Hom(a, b)
};

HomSystem hom_system(const BoundQuiver& q, const QuiverRep& a, const QuiverRep& b) {
  const FField& f = *a.field;
  HomSystem h;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    h.offset.push_back(h.unknowns);
    h.unknowns += a.dims[v] * b.dims[v];
  }
  std::size_t equations = 0;
  for (const auto& ar : q.arrows) equations += b.dims[ar.target] * a.dims[ar.source];
  FqMatrix sys(equations, h.unknowns);
  std::size_t row = 0;
  for (const auto& ar : q.arrows) {
    const std::size_t s = ar.source, t = ar.target;
    const auto& ma = a.matrices[ar.id];  // a_t x a_s
    const auto& mb = b.matrices[ar.id];  // b_t x b_s
    // (X_t M^a)(i, j) - (M^b X_s)(i, j) = 0
    for (std::size_t i = 0; i < b.dims[t]; ++i)
      for (std::size_t j = 0; j < a.dims[s]; ++j, ++row) {
        for (std::size_t k = 0; k < a.dims[t]; ++k) {
          auto& cell = sys(row, h.offset[t] + i * a.dims[t] + k);
          cell = f.add(cell, ma(k, j));
        }
        for (std::size_t k = 0; k < b.dims[s]; ++k) {
          auto& cell = sys(row, h.offset[s] + k * a.dims[s] + j);
          cell = f.sub(cell, mb(i, k));
        }
      }
  }
  h.basis = fq::nullspace(f, sys);
  return h;
}

std::vector<FqMatrix> unpack(const HomSystem& h, const std::vector<FField::Elem>& x, const QuiverRep& a,
                             const QuiverRep& b) {
  std::vector<FqMatrix> out;
  for (std::size_t v = 0; v < a.dims.size(); ++v) {
    FqMatrix m(b.dims[v], a.dims[v]);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = x[h.offset[v] + i * m.cols() + j];
    out.push_back(std::move(m));
  }
  return out;
}

void require_same_field(const QuiverRep& a, const QuiverRep& b) {
  if (a.field->size() != b.field->size()) throw InvalidInput("representations live over different fields");
}

}  // namespace

std::vector<std::vector<FqMatrix>> endomorphism_basis(const BoundQuiver& q, const QuiverRep& rep) {
  check_rep(q, rep);
  auto h = hom_system(q, rep, rep);
  std::vector<std::vector<FqMatrix>> out;
  for (std::size_t c = 0; c < h.basis.cols(); ++c) out.push_back(unpack(h, h.basis.column(c), rep, rep));
  return out;
}

std::size_t endomorphism_dimension(const BoundQuiver& q, const QuiverRep& rep) {
  check_rep(q, rep);
  return hom_system(q, rep, rep).basis.cols();
}

bool is_brick(const BoundQuiver& q, const QuiverRep& rep) { return endomorphism_dimension(q, rep) == 1; }

bool is_isomorphic(const BoundQuiver& q, const QuiverRep& a, const QuiverRep& b) {
  check_rep(q, a);
  check_rep(q, b);
  require_same_field(a, b);
  if (a.dims != b.dims) return false;
  const FField& f = *a.field;
  auto h = hom_system(q, a, b);
  const std::size_t k = h.basis.cols();
  double space = 1;
  for (std::size_t i = 0; i < k; ++i) space *= static_cast<double>(f.size());
  if (space > static_cast<double>(1 << 20))
    throw SearchSpaceTooLarge("Hom space has " + std::to_string(f.size()) + "^" + std::to_string(k) +
                              " elements; exhaustive isomorphism search refused");
  if (k == 0) return a.total_dimension() == 0;

  std::vector<FField::Elem> coeff(k, 0);
  std::vector<FField::Elem> x(h.unknowns);
  while (true) {
    std::fill(x.begin(), x.end(), 0);
    for (std::size_t c = 0; c < k; ++c)
      if (coeff[c])
        for (std::size_t r = 0; r < h.unknowns; ++r) x[r] = f.add(x[r], f.mul(coeff[c], h.basis(r, c)));
    auto maps = unpack(h, x, a, b);
    bool invertible = true;
    for (const auto& m : maps)
      if (m.rows() > 0 && fq::determinant(f, m) == 0) {
        invertible = false;
        break;
      }
    if (invertible) return true;
    std::size_t i = 0;
    while (i < k && ++coeff[i] == static_cast<FField::Elem>(f.size())) coeff[i++] = 0;
    if (i == k) return false;
  }
}

QuiverRep pull_back_cycle_rep(const BoundQuiver& q, const ZigzagCycle& c, FField::Elem holonomy,
                              std::shared_ptr<const FField> field) {
  if (holonomy == 0) throw HolonomyZero("holonomy must be a nonzero field element");
  if (static_cast<Int>(holonomy) >= field->size()) throw InvalidInput("holonomy is not in the field");
  auto check = validate_zigzag(q, c.arrows);
  if (!check.ok()) throw NotQualifying("not a zigzag cycle: " + check.violation->message);
  auto qual = is_qualifying(q, *check.cycle);
  if (!qual.qualifies) throw NotQualifying("zigzag cycle does not qualify: " + qual.reason_name());

  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (auto v : check.cycle->vertices) dims[v] = 1;
  auto rep = QuiverRep::zero(q, std::move(field), std::move(dims));
  for (std::size_t i = 0; i < c.arrows.size(); ++i) rep.matrices[c.arrows[i]](0, 0) = i == 0 ? holonomy : 1;
  return rep;
}

BoundQuiver cycle_subquiver(const BoundQuiver& q, const ZigzagCycle& c) {
  auto check = validate_zigzag(q, c.arrows);
  if (!check.ok()) throw InvalidInput("not a zigzag cycle: " + check.violation->message);
  const auto& verts = check.cycle->vertices;
  auto local = [&](std::size_t v) {
    return static_cast<std::size_t>(std::find(verts.begin(), verts.end(), v) - verts.begin());
  };
  BoundQuiver sub;
  sub.p = q.p;
  for (auto v : verts) sub.vertex_names.push_back(q.vertex_names[v]);
  for (std::size_t i = 0; i < c.arrows.size(); ++i) {
    const auto& a = q.arrows[c.arrows[i]];
    sub.arrows.push_back({i, local(a.source), local(a.target), a.label});
  }
  sub.relations = RelationSet{};
  return sub;
}

BrickEnumeration enumerate_bricks(const BoundQuiver& q, const std::vector<std::size_t>& dims,
                                  std::shared_ptr<const FField> field) {
  auto rep = QuiverRep::zero(q, field, dims);
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (arrow, flat index)
  for (const auto& a : q.arrows)
    for (std::size_t k = 0; k < rep.matrices[a.id].data().size(); ++k) slots.push_back({a.id, k});
  const Int qf = field->size();
  double space = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) space *= static_cast<double>(qf);
  if (space > static_cast<double>(1 << 24))
    throw SearchSpaceTooLarge("brick enumeration would visit " + std::to_string(qf) + "^" +
                              std::to_string(slots.size()) + " assignments (cap 2^24)");

  BrickEnumeration out;
  if (rep.total_dimension() == 0) return out;
  // odometer with the last slot fastest, so the first hit in a class is lex-least
  std::vector<FField::Elem> digits(slots.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < slots.size(); ++i)
      rep.matrices[slots[i].first].data()[slots[i].second] = digits[i];
    if (!eval_relations(q, rep) && is_brick(q, rep)) {
      bool seen = false;
      for (const auto& r : out.representatives)
        if (is_isomorphic(q, r, rep)) {
          seen = true;
          break;
        }
      if (!seen) out.representatives.push_back(rep);
    }
    std::size_t i = slots.size();
    while (i > 0 && ++digits[i - 1] == static_cast<FField::Elem>(qf)) digits[--i] = 0;
    if (i == 0) break;
  }
  out.count = out.representatives.size();
  return out;
}

}  // namespace tautilt
