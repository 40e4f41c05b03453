#include "tautilt/chartable.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "tautilt/modular.hpp"

namespace tautilt {

namespace {

using IntPoly = std::vector<Int>;

IntPoly exact_divide(IntPoly num, const IntPoly& den) {
  // den monic
  IntPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    Int c = num[i + den.size() - 1];
    quot[i] = c;
    for (std::size_t k = 0; k < den.size(); ++k) num[i + k] -= c * den[k];
  }
  for (Int x : num)
    if (x != 0) throw InternalError("cyclotomic polynomial division left a remainder");
  return quot;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(int m) {
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (m < 1) throw InvalidInput("cyclotomic order must be >= 1");
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  IntPoly poly(static_cast<std::size_t>(m) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    auto it = cache.find(d);
    if (it == cache.end()) {
      // compute divisors bottom-up without recursion under the lock
      IntPoly pd(static_cast<std::size_t>(d) + 1, 0);
      pd[0] = -1;
      pd[static_cast<std::size_t>(d)] = 1;
      for (int e = 1; e < d; ++e)
        if (d % e == 0) pd = exact_divide(pd, cache.at(e));
      it = cache.emplace(d, pd).first;
    }
    poly = exact_divide(poly, it->second);
  }
  return cache.emplace(m, poly).first->second;
}

namespace {

std::vector<Rational> reduce_mod_cyclotomic(std::vector<Rational> a, int m) {
  const auto& phi = cyclotomic_polynomial(m);
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > deg;) {
    Rational c = a[i];
    if (c == Rational(0)) continue;
    for (std::size_t k = 0; k <= deg; ++k) a[i - deg + k] -= c * phi[k];
  }
  a.resize(deg, Rational(0));
  return a;
}

}  // namespace

Cyclotomic::Cyclotomic(int order) : m_(order) {
  c_.assign(cyclotomic_polynomial(order).size() - 1, Rational(0));
}

Cyclotomic Cyclotomic::integer(int order, Int n) { return from_powers(order, {Rational(n)}); }

Cyclotomic Cyclotomic::root(int order, Int k) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(modular::reduce(k, order)) + 1, Rational(0));
  coeffs.back() = 1;
  return from_powers(order, coeffs);
}

Cyclotomic Cyclotomic::from_powers(int order, const std::vector<Rational>& coeffs) {
  Cyclotomic z(order);
  z.c_ = reduce_mod_cyclotomic(coeffs, order);
  return z;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (m_ != o.m_) throw InvalidInput("cyclotomic fields differ");
  Cyclotomic z = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] += o.c_[i];
  return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + o.scaled(Rational(-1)); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (m_ != o.m_) throw InvalidInput("cyclotomic fields differ");
  std::vector<Rational> prod(c_.size() + o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  return from_powers(m_, prod);
}

Cyclotomic Cyclotomic::scaled(Rational r) const {
  Cyclotomic z = *this;
  for (auto& c : z.c_) c *= r;
  return z;
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> out(static_cast<std::size_t>(m_), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    out[static_cast<std::size_t>((m_ - static_cast<int>(i)) % m_)] += c_[i];
  return from_powers(m_, out);
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != Rational(0)) return false;
  return true;
}

Rational Cyclotomic::rational_value() const { return c_.empty() ? Rational(0) : c_[0]; }

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == Rational(0)) continue;
    if (!first) out << " + ";
    first = false;
    out << c_[i];
    if (i) out << "*z^" << i;
  }
  if (first) out << "0";
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

Rational raw_inner_product(const CharacterTable& t, const std::vector<Cyclotomic>& chi,
                           const std::vector<Cyclotomic>& psi) {
  if (chi.size() != t.class_sizes.size() || psi.size() != t.class_sizes.size())
    throw InvalidInput("class function has the wrong number of entries");
  Cyclotomic acc(t.exponent);
  for (std::size_t c = 0; c < t.class_sizes.size(); ++c)
    acc = acc + (chi[c].conj() * psi[c]).scaled(Rational(t.class_sizes[c]));
  acc = acc.scaled(Rational(1, t.group_order));
  if (!acc.is_rational()) throw NonIntegerResult("inner product is not rational: " + acc.to_string());
  return acc.rational_value();
}

}  // namespace

void CharacterTable::validate() const {
  if (class_sizes.empty()) throw InvalidInput("character table has no classes");
  Int total = 0;
  for (Int s : class_sizes) total += s;
  if (total != group_order) throw InvalidInput("class sizes do not sum to |H|");
  if (class_sizes[0] != 1) throw InvalidInput("first class must be the identity class");
  if (rows.size() != class_sizes.size()) throw InvalidInput("table is not square");
  for (const auto& row : rows) {
    if (row.size() != class_sizes.size()) throw InvalidInput("row length mismatch");
    if (!row[0].is_rational() || row[0].rational_value().denominator() != 1 || row[0].rational_value() <= Rational(0))
      throw InvalidInput("identity column must hold positive integer degrees");
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) {
      Rational ip = raw_inner_product(*this, rows[i], rows[j]);
      if (ip != Rational(i == j ? 1 : 0))
        throw InvalidInput("rows " + names[i] + " and " + names[j] + " violate orthonormality");
    }
  if (module_character.size() != class_sizes.size()) throw InvalidInput("module character has wrong length");
}

Int cyclotomic_inner_product(const CharacterTable& table, const std::vector<Cyclotomic>& chi,
                             const std::vector<Cyclotomic>& psi) {
  Rational ip = raw_inner_product(table, chi, psi);
  if (ip.denominator() != 1 || ip < Rational(0))
    throw NonIntegerResult("inner product is not a nonnegative integer");
  return ip.numerator();
}

std::vector<Cyclotomic> pointwise_product(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  if (a.size() != b.size()) throw InvalidInput("class function length mismatch");
  std::vector<Cyclotomic> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
  return out;
}

IntMatrix table_arrow_counts(const CharacterTable& table) {
  table.validate();
  std::size_t n = table.rows.size();
  IntMatrix counts(n, n);
  for (std::size_t l = 0; l < n; ++l) {
    auto tensored = pointwise_product(table.module_character, table.rows[l]);
    for (std::size_t m = 0; m < n; ++m) counts(l, m) = cyclotomic_inner_product(table, table.rows[m], tensored);
  }
  return counts;
}

BoundQuiver quiver_from_character_table(const CharacterTable& table) {
  auto counts = table_arrow_counts(table);
  BoundQuiver q;
  q.vertex_names = table.names;
  std::size_t id = 0;
  for (std::size_t l = 0; l < counts.rows(); ++l)
    for (std::size_t m = 0; m < counts.cols(); ++m)
      for (Int k = 1; k <= counts(l, m); ++k) q.arrows.push_back({id++, l, m, {0, static_cast<int>(k)}});
  return q;
}

CharacterTable abelian_character_table(const AbelianGroupH& h, const std::vector<Character>& module_characters) {
  DualGroup dual(h);
  CharacterTable t;
  t.group_order = h.order();
  t.exponent = static_cast<int>(h.exponent());
  auto n = static_cast<std::size_t>(h.order());
  auto value = [&](const Character& chi, const std::vector<Int>& x) {
    Int k = 0;
    for (std::size_t g = 0; g < x.size(); ++g) {
      Int d = h.orders()[g];
      k += (t.exponent / d) * modular::reduce(chi.exps[g] * x[g], d);
    }
    return Cyclotomic::root(t.exponent, k);
  };
  for (std::size_t c = 0; c < n; ++c) {
    t.class_sizes.push_back(1);
    t.class_names.push_back(dual.label(Character{h.element(static_cast<Int>(c))}));
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto chi = dual.at(i);
    t.names.push_back(dual.label(chi));
    std::vector<Cyclotomic> row;
    for (std::size_t c = 0; c < n; ++c) row.push_back(value(chi, h.element(static_cast<Int>(c))));
    t.rows.push_back(std::move(row));
  }
  t.module_character.assign(n, Cyclotomic(t.exponent));
  for (const auto& chi : module_characters)
    for (std::size_t c = 0; c < n; ++c)
      t.module_character[c] = t.module_character[c] + value(chi, h.element(static_cast<Int>(c)));
  return t;
}

}  // namespace tautilt
