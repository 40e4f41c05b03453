#include "tautilt/abgroup.hpp"

#include <algorithm>
#include <string>

#include "tautilt/modular.hpp"

namespace tautilt {

namespace {

bool is_zero(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

void axpy(std::vector<Int>& y, Int a, const std::vector<Int>& x, Int m) {
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] = modular::reduce(y[i] - modular::mul(a, x[i], m), m);
}

void scale(std::vector<Int>& v, Int a, Int m) {
  for (auto& x : v) x = modular::mul(x, a, m);
}

IntMatrix multiply_mod(const IntMatrix& a, const IntMatrix& b, Int m) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = modular::reduce(c(i, j) + modular::mul(aik, b(k, j), m), m);
    }
  return c;
}

void check_block_count(const BlockMatrix& m, const AbelianPGroup& g) {
  if (m.blocks.size() != g.block_count())
    throw ShapeError("expected " + std::to_string(g.block_count()) + " block matrices, got " +
                     std::to_string(m.blocks.size()));
}

}  // namespace

AbelianPGroup::AbelianPGroup(Int p, std::vector<Block> blocks) : p_(p), blocks_(std::move(blocks)) {
  if (!modular::is_prime(p_)) throw InvalidInput("p = " + std::to_string(p_) + " is not prime");
  __int128 order = 1;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& b = blocks_[i];
    if (b.exponent < 1 || b.multiplicity < 1)
      throw InvalidInput("block exponents and multiplicities must be positive");
    if (i > 0 && blocks_[i - 1].exponent >= b.exponent)
      throw InvalidInput("block exponents must be strictly increasing");
    auto m = modular::checked_pow(p_, b.exponent);
    if (!m) throw InvalidInput("block modulus exceeds 2^63");
    moduli_.push_back(*m);
    for (int j = 0; j < b.multiplicity; ++j) {
      order *= *m;
      if (order > static_cast<__int128>(INT64_MAX)) throw InvalidInput("group order exceeds 2^63");
    }
  }
  order_ = static_cast<Int>(order);
}

int AbelianPGroup::rank() const {
  int n = 0;
  for (const auto& b : blocks_) n += b.multiplicity;
  return n;
}

std::size_t AbelianPGroup::offset(std::size_t block) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < block; ++i) off += static_cast<std::size_t>(blocks_[i].multiplicity);
  return off;
}

Element AbelianPGroup::element(Int index) const {
  Element x(static_cast<std::size_t>(rank()));
  std::size_t pos = x.size();
  for (std::size_t b = blocks_.size(); b-- > 0;) {
    for (int j = 0; j < blocks_[b].multiplicity; ++j) {
      x[--pos] = index % moduli_[b];
      index /= moduli_[b];
    }
  }
  return x;
}

BlockMatrix BlockMatrix::identity(const AbelianPGroup& g) {
  BlockMatrix m;
  for (const auto& b : g.blocks())
    m.blocks.push_back(IntMatrix::identity(static_cast<std::size_t>(b.multiplicity)));
  return m;
}

BlockMatrix BlockMatrix::zero(const AbelianPGroup& g) {
  BlockMatrix m;
  for (const auto& b : g.blocks()) {
    auto t = static_cast<std::size_t>(b.multiplicity);
    m.blocks.emplace_back(t, t);
  }
  return m;
}

void check_endomorphism(const BlockMatrix& m, const AbelianPGroup& g) {
  check_block_count(m, g);
  for (std::size_t b = 0; b < g.block_count(); ++b) {
    auto t = static_cast<std::size_t>(g.blocks()[b].multiplicity);
    const auto& a = m.blocks[b];
    if (a.rows() != t || a.cols() != t)
      throw ShapeError("block " + std::to_string(b) + " matrix must be " + std::to_string(t) + "x" +
                       std::to_string(t));
    for (Int x : a.data())
      if (x < 0 || x >= g.modulus(b))
        throw ShapeError("block " + std::to_string(b) + " entry out of range [0, p^e)");
  }
}

BlockMatrix multiply(const BlockMatrix& a, const BlockMatrix& b, const AbelianPGroup& g) {
  check_block_count(a, g);
  check_block_count(b, g);
  BlockMatrix c;
  for (std::size_t i = 0; i < g.block_count(); ++i)
    c.blocks.push_back(multiply_mod(a.blocks[i], b.blocks[i], g.modulus(i)));
  return c;
}

BlockMatrix subtract(const BlockMatrix& a, const BlockMatrix& b, const AbelianPGroup& g) {
  check_block_count(a, g);
  check_block_count(b, g);
  BlockMatrix c = a;
  for (std::size_t i = 0; i < g.block_count(); ++i) {
    const auto& bi = b.blocks[i];
    auto& ci = c.blocks[i];
    if (ci.rows() != bi.rows() || ci.cols() != bi.cols()) throw ShapeError("block shape mismatch");
    for (std::size_t r = 0; r < ci.rows(); ++r)
      for (std::size_t s = 0; s < ci.cols(); ++s)
        ci(r, s) = modular::reduce(ci(r, s) - bi(r, s), g.modulus(i));
  }
  return c;
}

BlockMatrix power(const BlockMatrix& a, Int exponent, const AbelianPGroup& g) {
  BlockMatrix result = BlockMatrix::identity(g);
  BlockMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1) result = multiply(result, base, g);
    base = multiply(base, base, g);
    exponent >>= 1;
  }
  return result;
}

Element apply(const BlockMatrix& m, const Element& x, const AbelianPGroup& g) {
  check_block_count(m, g);
  Element y(x.size(), 0);
  for (std::size_t b = 0; b < g.block_count(); ++b) {
    std::size_t off = g.offset(b);
    const auto& a = m.blocks[b];
    Int mod = g.modulus(b);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Int acc = 0;
      for (std::size_t c = 0; c < a.cols(); ++c)
        acc = modular::reduce(acc + modular::mul(a(r, c), x[off + c], mod), mod);
      y[off + r] = acc;
    }
  }
  return y;
}

// ---------------------------------------------------------------------------
// Howell form

int HowellForm::log_order() const {
  int total = 0;
  for (int k : pivot_valuations) total += exponent - k;
  return total;
}

Int HowellForm::order() const { return *modular::checked_pow(p, log_order()); }

std::vector<Int> HowellForm::reduce(std::vector<Int> v) const {
  if (v.size() != dimension) throw ShapeError("vector length does not match Howell form");
  for (auto& x : v) x = modular::reduce(x, modulus);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    Int pivot = *modular::checked_pow(p, pivot_valuations[j]);
    Int entry = v[pivot_rows[j]];
    if (entry % pivot != 0) continue;
    axpy(v, entry / pivot, columns[j], modulus);
  }
  return v;
}

bool HowellForm::contains(const std::vector<Int>& v) const { return is_zero(reduce(v)); }

std::vector<Int> HowellForm::coordinates(const std::vector<Int>& v) const {
  std::vector<Int> rest = v;
  for (auto& x : rest) x = modular::reduce(x, modulus);
  std::vector<Int> coeff(columns.size(), 0);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (pivot_valuations[j] != 0) throw InternalError("coordinates requested on a non-free span");
    coeff[j] = rest[pivot_rows[j]];
    axpy(rest, coeff[j], columns[j], modulus);
  }
  if (!is_zero(rest)) throw InternalError("vector does not lie in the span");
  return coeff;
}

std::vector<Int> HowellForm::invariant_factors() const {
  // Smith form over the chain ring Z/p^e: pivot on an entry of least valuation.
  IntMatrix a = matrix();
  std::size_t rows = a.rows(), cols = a.cols();
  std::vector<Int> factors;
  for (std::size_t d = 0; d < std::min(rows, cols); ++d) {
    int best = exponent;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = d; r < rows; ++r)
      for (std::size_t c = d; c < cols; ++c) {
        int v = modular::valuation(a(r, c), p, exponent);
        if (v < best) {
          best = v;
          br = r;
          bc = c;
        }
      }
    if (best == exponent) break;
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(d, c), a(br, c));
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, d), a(r, bc));
    Int pk = *modular::checked_pow(p, best);
    Int unit_inv = modular::inverse(a(d, d) / pk, modulus);
    for (std::size_t c = 0; c < cols; ++c) a(d, c) = modular::mul(a(d, c), unit_inv, modulus);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == d || a(r, d) == 0) continue;
      Int q = a(r, d) / pk;
      for (std::size_t c = 0; c < cols; ++c)
        a(r, c) = modular::reduce(a(r, c) - modular::mul(q, a(d, c), modulus), modulus);
    }
    for (std::size_t c = d + 1; c < cols; ++c) {
      if (a(d, c) == 0) continue;
      Int q = a(d, c) / pk;
      for (std::size_t r = 0; r < rows; ++r)
        a(r, c) = modular::reduce(a(r, c) - modular::mul(q, a(r, d), modulus), modulus);
    }
    factors.push_back(*modular::checked_pow(p, exponent - best));
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

HowellForm howell_form(const IntMatrix& generators, Int modulus) {
  auto pe = modular::prime_power(modulus);
  if (!pe) throw InvalidModulus("modulus " + std::to_string(modulus) + " is not a prime power");
  HowellForm h;
  h.p = pe->first;
  h.exponent = pe->second;
  h.modulus = modulus;
  h.dimension = generators.rows();

  std::vector<std::vector<Int>> pool;
  for (std::size_t c = 0; c < generators.cols(); ++c) {
    auto col = generators.column(c);
    for (auto& x : col) x = modular::reduce(x, modulus);
    if (!is_zero(col)) pool.push_back(std::move(col));
  }

  for (std::size_t r = 0; r < h.dimension && !pool.empty(); ++r) {
    int best = h.exponent;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      int v = modular::valuation(pool[i][r], h.p, h.exponent);
      if (v < best) {
        best = v;
        best_idx = i;
      }
    }
    if (best == h.exponent) continue;
    std::vector<Int> pivot_col = std::move(pool[best_idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_idx));
    Int pk = *modular::checked_pow(h.p, best);
    scale(pivot_col, modular::inverse(pivot_col[r] / pk, modulus), modulus);
    for (auto& g : pool)
      if (g[r] != 0) axpy(g, g[r] / pk, pivot_col, modulus);
    if (best > 0) {
      // the annihilated multiple vanishes in row r but may survive below it
      std::vector<Int> extra = pivot_col;
      scale(extra, *modular::checked_pow(h.p, h.exponent - best), modulus);
      pool.push_back(std::move(extra));
    }
    std::erase_if(pool, is_zero);
    h.columns.push_back(std::move(pivot_col));
    h.pivot_rows.push_back(r);
    h.pivot_valuations.push_back(best);
  }

  for (std::size_t j = 0; j < h.columns.size(); ++j) {
    Int pk = *modular::checked_pow(h.p, h.pivot_valuations[j]);
    std::size_t r = h.pivot_rows[j];
    for (std::size_t i = 0; i < j; ++i) {
      Int q = h.columns[i][r] / pk;
      if (q != 0) axpy(h.columns[i], q, h.columns[j], modulus);
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Subgroups

Int SubgroupData::order() const {
  Int n = 1;
  for (const auto& b : blocks) n *= b.order();
  return n;
}

std::vector<std::size_t> SubgroupData::block_ranks() const {
  std::vector<std::size_t> ranks;
  for (const auto& b : blocks) ranks.push_back(b.rank());
  return ranks;
}

bool SubgroupData::contains(const Element& x) const {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::size_t off = ambient.offset(b);
    std::vector<Int> part(x.begin() + static_cast<std::ptrdiff_t>(off),
                          x.begin() + static_cast<std::ptrdiff_t>(off + blocks[b].dimension));
    if (!blocks[b].contains(part)) return false;
  }
  return true;
}

SubgroupData make_subgroup(const AbelianPGroup& g, std::vector<HowellForm> blocks) {
  SubgroupData s{g, std::move(blocks), {}};
  for (const auto& b : s.blocks) {
    auto f = b.invariant_factors();
    s.invariant_factors.insert(s.invariant_factors.end(), f.begin(), f.end());
  }
  std::sort(s.invariant_factors.begin(), s.invariant_factors.end());
  return s;
}

SubgroupData image_subgroup(const std::vector<BlockMatrix>& maps, const AbelianPGroup& g) {
  std::vector<HowellForm> forms;
  for (const auto& m : maps) check_block_count(m, g);
  for (std::size_t b = 0; b < g.block_count(); ++b) {
    auto t = static_cast<std::size_t>(g.blocks()[b].multiplicity);
    std::vector<std::vector<Int>> cols;
    for (const auto& m : maps) {
      if (m.blocks[b].rows() != t) throw ShapeError("map block has wrong row count");
      for (std::size_t c = 0; c < m.blocks[b].cols(); ++c) cols.push_back(m.blocks[b].column(c));
    }
    forms.push_back(howell_form(IntMatrix::from_columns(t, cols), g.modulus(b)));
  }
  return make_subgroup(g, std::move(forms));
}

SubgroupData common_kernel(const std::vector<BlockMatrix>& maps, const AbelianPGroup& g) {
  for (const auto& m : maps) check_block_count(m, g);
  std::vector<HowellForm> forms;
  for (std::size_t b = 0; b < g.block_count(); ++b) {
    auto t = static_cast<std::size_t>(g.blocks()[b].multiplicity);
    std::size_t stacked_rows = 0;
    for (const auto& m : maps) {
      if (m.blocks[b].cols() != t) throw ShapeError("map block has wrong column count");
      stacked_rows += m.blocks[b].rows();
    }
    // The graph {(Mx, x)}: Howell columns with zero top part span the kernel.
    IntMatrix graph(stacked_rows + t, t);
    std::size_t row = 0;
    for (const auto& m : maps)
      for (std::size_t r = 0; r < m.blocks[b].rows(); ++r, ++row)
        for (std::size_t c = 0; c < t; ++c) graph(row, c) = m.blocks[b](r, c);
    for (std::size_t i = 0; i < t; ++i) graph(stacked_rows + i, i) = 1;
    HowellForm h = howell_form(graph, g.modulus(b));
    std::vector<std::vector<Int>> kernel_cols;
    for (std::size_t j = 0; j < h.rank(); ++j) {
      if (h.pivot_rows[j] < stacked_rows) continue;
      kernel_cols.emplace_back(h.columns[j].begin() + static_cast<std::ptrdiff_t>(stacked_rows),
                               h.columns[j].end());
    }
    forms.push_back(howell_form(IntMatrix::from_columns(t, kernel_cols), g.modulus(b)));
  }
  return make_subgroup(g, std::move(forms));
}

SubgroupData kernel_subgroup(const BlockMatrix& map, const AbelianPGroup& g) {
  return common_kernel({map}, g);
}

SubgroupData subgroup_sum(const SubgroupData& s, const SubgroupData& t) {
  if (!(s.ambient == t.ambient)) throw ShapeError("subgroups of different groups");
  std::vector<HowellForm> forms;
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    auto cols = s.blocks[b].columns;
    cols.insert(cols.end(), t.blocks[b].columns.begin(), t.blocks[b].columns.end());
    forms.push_back(howell_form(IntMatrix::from_columns(s.blocks[b].dimension, cols),
                                s.blocks[b].modulus));
  }
  return make_subgroup(s.ambient, std::move(forms));
}

Int intersection_order(const SubgroupData& s, const SubgroupData& t) {
  return t.order() / (subgroup_sum(s, t).order() / s.order());
}

std::vector<Int> invariant_factors(const SubgroupData& s) { return s.invariant_factors; }

}  // namespace tautilt
