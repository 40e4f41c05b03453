#include "tautilt/ffield.hpp"

#include <algorithm>
#include <sstream>

#include "tautilt/modular.hpp"

namespace tautilt {

namespace {

using Poly = std::vector<Int>;  // ascending coefficients over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo a monic b
Poly poly_mod(Poly a, const Poly& b, Int p) {
  trim(a);
  std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    Int lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = modular::reduce(a[shift + i] - lead * b[i], p);
    trim(a);
  }
  return a;
}

Poly decode(Int code, Int p, int len) {
  Poly a(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    a[static_cast<std::size_t>(i)] = code % p;
    code /= p;
  }
  return a;
}

bool irreducible(const Poly& f, Int p) {
  int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d) {
    Int count = *modular::checked_pow(p, d);
    for (Int code = 0; code < count; ++code) {
      Poly g = decode(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FField::FField(Int p, int degree) : FField(p, degree, 0) {}

FField::FField(Int p, int degree, Int root_order) : p_(p), m_(degree) {
  if (!modular::is_prime(p)) throw InvalidInput("field characteristic must be prime");
  if (degree < 1) throw InvalidInput("field degree must be >= 1");
  auto q = modular::checked_pow(p, degree);
  if (!q || *q > (Int{1} << 20)) throw InvalidInput("field too large (q > 2^20)");
  q_ = *q;

  Int count = *modular::checked_pow(p, degree);
  for (Int code = 0; code < count; ++code) {
    Poly f = decode(code, p, degree);
    f.push_back(1);
    if (irreducible(f, p)) {
      f.pop_back();
      modulus_ = std::move(f);
      break;
    }
  }

  Int group_order = q_ - 1;
  auto primes = modular::prime_factors(group_order);
  for (Elem g = 1; g < static_cast<Elem>(q_); ++g) {
    bool primitive = true;
    for (Int r : primes) {
      Elem x = 1;
      Int e = group_order / r;
      Elem base = g;
      while (e > 0) {
        if (e & 1) x = slow_mul(x, base);
        base = slow_mul(base, base);
        e >>= 1;
      }
      if (x == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = g;
      break;
    }
  }

  exp_.resize(static_cast<std::size_t>(group_order));
  log_.assign(static_cast<std::size_t>(q_), 0);
  Elem x = 1;
  for (Int i = 0; i < group_order; ++i) {
    exp_[static_cast<std::size_t>(i)] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, generator_);
  }

  root_order_ = root_order == 0 ? group_order : root_order;
  if (group_order % root_order_ != 0) throw InternalError("root order does not divide q - 1");
  zeta_ = exp_[static_cast<std::size_t>((group_order / root_order_) % group_order)];
}

FField FField::splitting_field(Int p, Int root_order) {
  if (root_order < 1) throw InvalidInput("root order must be >= 1");
  if (root_order % p == 0) throw NotCoprime("p divides the requested root order");
  int m = 1;
  if (root_order > 1) m = static_cast<int>(modular::multiplicative_order(p, root_order));
  return FField(p, m, root_order);
}

FField FField::of_order(Int q) {
  auto pe = modular::prime_power(q);
  if (!pe) throw InvalidModulus("field order " + std::to_string(q) + " is not a prime power");
  return FField(pe->first, pe->second);
}

FField::Elem FField::from_int(Int a) const { return static_cast<Elem>(modular::reduce(a, p_)); }

FField::Elem FField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem out = 0, place = 1;
  for (int i = 0; i < m_; ++i) {
    Elem s = (a % p_ + b % p_) % p_;
    out += s * place;
    place *= static_cast<Elem>(p_);
    a /= p_;
    b /= p_;
  }
  return out;
}

FField::Elem FField::neg(Elem a) const {
  if (p_ == 2) return a;
  Elem out = 0, place = 1;
  for (int i = 0; i < m_; ++i) {
    Elem d = a % p_;
    out += ((static_cast<Elem>(p_) - d) % p_) * place;
    place *= static_cast<Elem>(p_);
    a /= p_;
  }
  return out;
}

FField::Elem FField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FField::Elem FField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  std::size_t e = (static_cast<std::size_t>(log_[a]) + log_[b]) % exp_.size();
  return exp_[e];
}

FField::Elem FField::inv(Elem a) const {
  if (a == 0) throw InvalidInput("division by zero in finite field");
  std::size_t n = exp_.size();
  return exp_[(n - log_[a]) % n];
}

FField::Elem FField::pow(Elem a, Int k) const {
  if (a == 0) return k == 0 ? 1 : 0;
  auto n = static_cast<Int>(exp_.size());
  Int e = modular::reduce(static_cast<Int>(log_[a]) * modular::reduce(k, n), n);
  return exp_[static_cast<std::size_t>(e)];
}

FField::Elem FField::zeta_power(Int k) const { return pow(zeta_, modular::reduce(k, root_order_)); }

FField::Elem FField::slow_mul(Elem a, Elem b) const {
  Poly x = decode(a, p_, m_), y = decode(b, p_, m_);
  Poly prod(static_cast<std::size_t>(2 * m_), 0);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      prod[static_cast<std::size_t>(i + j)] =
          (prod[static_cast<std::size_t>(i + j)] + x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) % p_;
  Poly f = modulus_;
  f.push_back(1);
  Poly r = poly_mod(prod, f, p_);
  Elem code = 0, place = 1;
  for (Int c : r) {
    code += static_cast<Elem>(c) * place;
    place *= static_cast<Elem>(p_);
  }
  return code;
}

std::string FField::to_string(Elem a) const {
  if (m_ == 1) return std::to_string(a);
  std::ostringstream out;
  Poly c = decode(a, p_, m_);
  bool first = true;
  for (int i = m_ - 1; i >= 0; --i) {
    Int ci = c[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0 || ci != 1) out << ci;
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

// ---------------------------------------------------------------------------

namespace fq {

FqMatrix multiply(const FField& f, const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  FqMatrix c(a.rows(), b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  return c;
}

FqMatrix subtract(const FField& f, const FqMatrix& a, const FqMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix shape mismatch");
  FqMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
  return c;
}

FqMatrix scalar_identity(const FField& f, std::size_t n, FField::Elem s) {
  (void)f;
  FqMatrix m(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const FField& f, FqMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(sel, c));
    auto inv = f.inv(a(row, col));
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      auto factor = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const FField& f, FqMatrix a) { return rref(f, a).size(); }

FqMatrix nullspace(const FField& f, const FqMatrix& a) {
  FqMatrix r = a;
  auto pivots = rref(f, r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FField::Elem>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FField::Elem> v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    basis.push_back(std::move(v));
  }
  return FqMatrix::from_columns(a.cols(), basis);
}

FField::Elem determinant(const FField& f, FqMatrix a) {
  if (!a.square()) throw ShapeError("determinant of a non-square matrix");
  FField::Elem det = 1;
  std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a(sel, col) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(sel, c));
      det = f.neg(det);
    }
    det = f.mul(det, a(col, col));
    auto inv = f.inv(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      auto factor = f.mul(a(r, col), inv);
      for (std::size_t c = col; c < n; ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(col, c)));
    }
  }
  return det;
}

bool is_zero(const FqMatrix& a) {
  return std::all_of(a.data().begin(), a.data().end(), [](FField::Elem x) { return x == 0; });
}

}  // namespace fq

}  // namespace tautilt
