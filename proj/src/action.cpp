#include "tautilt/action.hpp"

#include <sstream>

#include "tautilt/modular.hpp"

namespace tautilt {

AbelianGroupH::AbelianGroupH(std::vector<Int> orders) : orders_(std::move(orders)) {
  for (Int d : orders_)
    if (d < 1) throw InvalidInput("H generator orders must be >= 1");
}

Int AbelianGroupH::order() const {
  Int n = 1;
  for (Int d : orders_) n *= d;
  return n;
}

Int AbelianGroupH::exponent() const {
  Int n = 1;
  for (Int d : orders_) n = modular::lcm(n, d);
  return n;
}

std::vector<Int> AbelianGroupH::element(Int index) const {
  std::vector<Int> h(orders_.size());
  for (std::size_t g = orders_.size(); g-- > 0;) {
    h[g] = index % orders_[g];
    index /= orders_[g];
  }
  return h;
}

namespace {

std::string block_label(std::size_t g, std::size_t b) {
  return "generator " + std::to_string(g) + ", block " + std::to_string(b);
}

}  // namespace

std::vector<Violation> validate_presentation(const GroupPresentation& pres) {
  using Kind = Violation::Kind;
  std::vector<Violation> out;
  const auto& P = pres.P;
  const auto& H = pres.H;

  if (H.order() % P.p() == 0)
    out.push_back({Kind::PDividesOrder, 0, 0, 0,
                   "p divides |H| (p = " + std::to_string(P.p()) + ", |H| = " +
                       std::to_string(H.order()) + ")"});

  if (pres.action.size() != H.generator_count()) {
    out.push_back({Kind::Shape, 0, 0, 0,
                   "expected " + std::to_string(H.generator_count()) + " action matrices, got " +
                       std::to_string(pres.action.size())});
    return out;
  }

  bool shapes_ok = true;
  for (std::size_t g = 0; g < pres.action.size(); ++g) {
    try {
      check_endomorphism(pres.action[g], P);
    } catch (const ShapeError& e) {
      out.push_back({Kind::Shape, g, 0, 0, "generator " + std::to_string(g) + ": " + e.what()});
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return out;

  for (std::size_t g = 0; g < pres.action.size(); ++g) {
    const auto& a = pres.action[g];
    for (std::size_t b = 0; b < P.block_count(); ++b) {
      IntMatrix mod_p = a.blocks[b];
      for (std::size_t r = 0; r < mod_p.rows(); ++r)
        for (std::size_t c = 0; c < mod_p.cols(); ++c) mod_p(r, c) %= P.p();
      if (howell_form(mod_p, P.p()).rank() != mod_p.rows())
        out.push_back({Kind::NotInvertible, g, 0, b, block_label(g, b) + ": not invertible mod p"});
    }
    auto pw = power(a, H.orders()[g], P);
    auto id = BlockMatrix::identity(P);
    for (std::size_t b = 0; b < P.block_count(); ++b)
      if (!(pw.blocks[b] == id.blocks[b]))
        out.push_back({Kind::OrderMismatch, g, 0, b,
                       block_label(g, b) + ": A^" + std::to_string(H.orders()[g]) +
                           " is not the identity"});
  }

  for (std::size_t g = 0; g < pres.action.size(); ++g)
    for (std::size_t h = g + 1; h < pres.action.size(); ++h) {
      auto gh = multiply(pres.action[g], pres.action[h], P);
      auto hg = multiply(pres.action[h], pres.action[g], P);
      for (std::size_t b = 0; b < P.block_count(); ++b)
        if (!(gh.blocks[b] == hg.blocks[b]))
          out.push_back({Kind::NotCommuting, g, h, b,
                         "generators " + std::to_string(g) + " and " + std::to_string(h) +
                             " do not commute on block " + std::to_string(b)});
    }
  return out;
}

void require_valid(const GroupPresentation& pres) {
  auto violations = validate_presentation(pres);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid presentation:";
  for (const auto& v : violations) msg << "\n  - " << v.message;
  throw InvalidInput(msg.str());
}

BlockMatrix action_of(const GroupPresentation& pres, const std::vector<Int>& h) {
  if (h.size() != pres.action.size()) throw ShapeError("H element has wrong length");
  BlockMatrix m = BlockMatrix::identity(pres.P);
  for (std::size_t g = 0; g < h.size(); ++g)
    m = multiply(m, power(pres.action[g], h[g], pres.P), pres.P);
  return m;
}

namespace {

std::vector<BlockMatrix> differences_from_identity(const GroupPresentation& pres) {
  std::vector<BlockMatrix> maps;
  auto id = BlockMatrix::identity(pres.P);
  for (const auto& a : pres.action) maps.push_back(subtract(a, id, pres.P));
  return maps;
}

}  // namespace

SubgroupData hyperfocal_subgroup(const GroupPresentation& pres) {
  return image_subgroup(differences_from_identity(pres), pres.P);
}

SubgroupData centralizer(const GroupPresentation& pres) {
  return common_kernel(differences_from_identity(pres), pres.P);
}

namespace {

// Basis of a free summand of (Z/p^e)^t with a unit at each pivot row; later
// vectors vanish on earlier pivot rows. Reduces to the Howell columns
// whenever those already have unit pivots.
struct FreeBasis {
  Int modulus = 1;
  Int p = 2;
  std::vector<std::vector<Int>> columns;
  std::vector<std::size_t> pivot_rows;

  std::vector<Int> coordinates(std::vector<Int> v) const {
    std::vector<Int> coeff(columns.size(), 0);
    for (std::size_t k = 0; k < columns.size(); ++k) {
      coeff[k] = modular::reduce(v[pivot_rows[k]], modulus);
      for (std::size_t r = 0; r < v.size(); ++r)
        v[r] = modular::reduce(v[r] - modular::mul(coeff[k], columns[k][r], modulus), modulus);
    }
    for (Int x : v)
      if (x) throw InternalError("vector does not lie in the hyperfocal subgroup");
    return coeff;
  }
};

FreeBasis free_basis(const HowellForm& form) {
  FreeBasis out{form.modulus, form.p, {}, {}};
  auto gens = form.columns;
  auto unit = [&](Int x) { return x % form.p != 0; };
  while (true) {
    std::size_t best_row = form.dimension, best_col = 0;
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t r = 0; r < best_row; ++r)
        if (unit(gens[j][r])) {
          best_row = r;
          best_col = j;
          break;
        }
    if (best_row == form.dimension) break;
    auto g = gens[best_col];
    Int inv = modular::inverse(g[best_row], form.modulus);
    for (auto& x : g) x = modular::mul(x, inv, form.modulus);
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(best_col));
    for (auto& h : gens) {
      Int c = h[best_row];
      if (!c) continue;
      for (std::size_t r = 0; r < h.size(); ++r)
        h[r] = modular::reduce(h[r] - modular::mul(c, g[r], form.modulus), form.modulus);
    }
    out.columns.push_back(std::move(g));
    out.pivot_rows.push_back(best_row);
  }
  for (const auto& h : gens)
    for (Int x : h)
      if (x) throw InternalError("hyperfocal block component is not a free summand");
  return out;
}

GroupPresentation restrict_to(const GroupPresentation& pres, const SubgroupData& r) {
  const auto& P = pres.P;
  std::vector<Block> blocks;
  std::vector<std::size_t> kept;
  std::vector<FreeBasis> bases;
  for (std::size_t b = 0; b < P.block_count(); ++b) {
    auto basis = free_basis(r.blocks[b]);
    if (basis.columns.empty()) continue;
    blocks.push_back({P.blocks()[b].exponent, static_cast<int>(basis.columns.size())});
    kept.push_back(b);
    bases.push_back(std::move(basis));
  }
  AbelianPGroup reduced_p(P.p(), blocks);

  std::vector<BlockMatrix> action;
  for (const auto& a : pres.action) {
    BlockMatrix x;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      const auto& basis = bases[k];
      const auto& ab = a.blocks[kept[k]];
      Int mod = P.modulus(kept[k]);
      const std::size_t rank = basis.columns.size(), dim = ab.rows();
      IntMatrix xb(rank, rank);
      for (std::size_t j = 0; j < rank; ++j) {
        std::vector<Int> image(dim, 0);
        for (std::size_t row = 0; row < dim; ++row)
          for (std::size_t c = 0; c < dim; ++c)
            image[row] = modular::reduce(image[row] + modular::mul(ab(row, c), basis.columns[j][c], mod), mod);
        auto coeff = basis.coordinates(image);
        for (std::size_t i = 0; i < rank; ++i) xb(i, j) = coeff[i];
      }
      x.blocks.push_back(std::move(xb));
    }
    action.push_back(std::move(x));
  }
  return {std::move(reduced_p), pres.H, std::move(action)};
}

}  // namespace

GroupPresentation reduce_to_hyperfocal(const GroupPresentation& pres) {
  require_valid(pres);
  return restrict_to(pres, hyperfocal_subgroup(pres));
}

HyperfocalData hyperfocal_data(const GroupPresentation& pres) {
  require_valid(pres);
  auto r = hyperfocal_subgroup(pres);
  auto c = centralizer(pres);
  bool direct = static_cast<__int128>(r.order()) * c.order() == pres.P.order() &&
                intersection_order(r, c) == 1;
  auto reduced = restrict_to(pres, r);
  return {std::move(r), std::move(c), std::move(reduced), direct};
}

}  // namespace tautilt
