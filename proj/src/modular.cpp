#include "tautilt/modular.hpp"

#include <numeric>

namespace tautilt::modular {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  for (Int d = 2; d <= n / d; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<Int, int>> prime_power(Int n) {
  if (n < 2) return std::nullopt;
  auto factors = prime_factors(n);
  if (factors.size() != 1) return std::nullopt;
  Int p = factors.front();
  int e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return std::make_pair(p, e);
}

std::optional<Int> checked_pow(Int base, int exp) {
  __int128 acc = 1;
  for (int i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > static_cast<__int128>(INT64_MAX)) return std::nullopt;
  }
  return static_cast<Int>(acc);
}

Int pow(Int base, Int exp, Int m) {
  Int result = 1 % m;
  base = reduce(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul(result, base, m);
    base = mul(base, base, m);
    exp >>= 1;
  }
  return result;
}

Int inverse(Int a, Int m) {
  // extended Euclid on (a, m)
  __int128 old_r = reduce(a, m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) throw InvalidInput("element is not a unit");
  return reduce(static_cast<Int>(old_s % m), m);
}

int valuation(Int a, Int p, int e) {
  if (a == 0) return e;
  int v = 0;
  while (a % p == 0 && v < e) {
    a /= p;
    ++v;
  }
  return v;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }
Int lcm(Int a, Int b) { return std::lcm(a, b); }

Int multiplicative_order(Int base, Int m) {
  if (m == 1) return 1;
  if (gcd(base, m) != 1) throw NotCoprime("base is not a unit modulo m");
  Int k = 1;
  Int x = reduce(base, m);
  while (x != 1) {
    x = mul(x, base, m);
    ++k;
  }
  return k;
}

}  // namespace tautilt::modular
