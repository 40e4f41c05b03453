#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tautilt/matrix.hpp"

namespace tautilt::modular {

bool is_prime(Int n);

/// Distinct prime factors, ascending.
std::vector<Int> prime_factors(Int n);

/// Writes n = p^e with p prime; nullopt if n is not a prime power (n < 2 included).
std::optional<std::pair<Int, int>> prime_power(Int n);

/// Checked power; nullopt when the result exceeds 2^63 - 1.
std::optional<Int> checked_pow(Int base, int exp);

inline Int reduce(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Int mul(Int a, Int b, Int m) {
  return static_cast<Int>((static_cast<__int128>(a) * b) % m);
}

Int pow(Int base, Int exp, Int m);

/// Inverse of a unit modulo m. Throws InvalidInput if a is not a unit.
Int inverse(Int a, Int m);

/// p-adic valuation of a residue modulo p^e; returns e for zero.
int valuation(Int a, Int p, int e);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

/// Smallest k >= 1 with base^k == 1 (mod m); requires gcd(base, m) = 1.
Int multiplicative_order(Int base, Int m);

}  // namespace tautilt::modular
