#include "family.hpp"

#include <random>

#include "tautilt/modular.hpp"

namespace tautilt::testing {

namespace {

IntMatrix mat(std::size_t n, std::vector<Int> entries) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = entries[i];
  return m;
}

GroupPresentation one_generator(Int p, std::vector<Block> blocks, Int d, std::vector<IntMatrix> mats) {
  return {AbelianPGroup(p, std::move(blocks)), AbelianGroupH({d}), {BlockMatrix{std::move(mats)}}};
}

// all block lists with |P| <= limit
void block_lists(Int p, Int limit, int min_exp, Int order, std::vector<Block>& cur,
                 std::vector<std::vector<Block>>& out) {
  out.push_back(cur);
  for (int e = min_exp; e <= 8; ++e) {
    Int m = *modular::checked_pow(p, e);
    Int o = order;
    for (int t = 1; o * m <= limit; ++t) {
      o *= m;
      cur.push_back({e, t});
      block_lists(p, limit, e + 1, o, cur, out);
      cur.pop_back();
    }
    if (order * m > limit) break;
  }
}

IntMatrix identity(std::size_t n) { return IntMatrix::identity(n, 1); }

IntMatrix mul_mod(const IntMatrix& a, const IntMatrix& b, Int mod) {
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = (c(i, j) + a(i, k) * b(k, j)) % mod;
  return c;
}

IntMatrix pow_mod(IntMatrix a, Int k, Int mod) {
  IntMatrix r = identity(a.rows());
  while (k > 0) {
    if (k & 1) r = mul_mod(r, a, mod);
    a = mul_mod(a, a, mod);
    k >>= 1;
  }
  return r;
}

Int matrix_order(const IntMatrix& a, Int mod, Int cap) {
  IntMatrix x = a;
  for (Int k = 1; k <= cap; ++k) {
    if (x == identity(a.rows())) return k;
    x = mul_mod(x, a, mod);
  }
  return 0;
}

}  // namespace

GroupPresentation g1() { return one_generator(2, {{1, 2}}, 3, {mat(2, {0, 1, 1, 1})}); }

GroupPresentation g2() { return one_generator(2, {{2, 2}}, 3, {mat(2, {0, 3, 1, 3})}); }

GroupPresentation worked_example() {
  return one_generator(3, {{1, 2}, {2, 1}}, 4, {mat(2, {1, 1, 1, 2}), mat(1, {8})});
}

GroupPresentation identity_action(Int p, std::vector<Block> blocks, std::vector<Int> h_orders) {
  AbelianPGroup P(p, std::move(blocks));
  AbelianGroupH H(std::move(h_orders));
  std::vector<BlockMatrix> action(H.generator_count(), BlockMatrix::identity(P));
  return {P, H, action};
}

std::vector<NamedPresentation> curated() {
  std::vector<NamedPresentation> out;
  out.push_back({"G1", g1()});
  out.push_back({"G2", g2()});
  out.push_back({"worked_example", worked_example()});
  out.push_back({"identity_p3", identity_action(3, {{1, 2}}, {2})});
  out.push_back({"identity_trivial_H", identity_action(5, {{1, 1}}, {})});
  out.push_back({"C3_inversion", one_generator(3, {{1, 1}}, 2, {mat(1, {2})})});
  out.push_back({"C9_inversion", one_generator(3, {{2, 1}}, 2, {mat(1, {8})})});
  out.push_back({"C3xC3_diag_1_2", one_generator(3, {{1, 2}}, 2, {mat(2, {1, 0, 0, 2})})});
  out.push_back({"C3xC3_inversion", one_generator(3, {{1, 2}}, 2, {mat(2, {2, 0, 0, 2})})});
  out.push_back({"C3xC3_order4", one_generator(3, {{1, 2}}, 4, {mat(2, {0, 2, 1, 0})})});
  out.push_back({"C5_by_C4", one_generator(5, {{1, 1}}, 4, {mat(1, {2})})});
  out.push_back({"C5xC5_by_C4", one_generator(5, {{1, 2}}, 4, {mat(2, {2, 0, 0, 3})})});
  out.push_back({"C2^3_by_C7", one_generator(2, {{1, 3}}, 7, {mat(3, {0, 0, 1, 1, 0, 1, 0, 1, 0})})});
  out.push_back({"C2^4_by_C3", one_generator(2, {{1, 4}}, 3, {mat(4, {0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1})})});
  out.push_back({"C2^4_by_C5", one_generator(2, {{1, 4}}, 5, {mat(4, {0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1})})});
  out.push_back({"C3xC9_mixed", one_generator(3, {{1, 1}, {2, 1}}, 2, {mat(1, {2}), mat(1, {1})})});
  {
    // H = C2 x C2 acting on (C3)^2 by independent sign changes
    AbelianPGroup P(3, {{1, 2}});
    out.push_back({"C3xC3_by_V4",
                   {P, AbelianGroupH({2, 2}), {BlockMatrix{{mat(2, {2, 0, 0, 1})}}, BlockMatrix{{mat(2, {1, 0, 0, 2})}}}}});
  }
  return out;
}

GroupPresentation random_presentation(std::uint64_t seed, const FamilyLimits& limits) {
  std::mt19937_64 rng(seed);
  auto pick = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
  while (true) {
    Int p = limits.primes[static_cast<std::size_t>(pick(0, static_cast<Int>(limits.primes.size()) - 1))];
    std::vector<std::vector<Block>> lists;
    std::vector<Block> cur;
    block_lists(p, limits.max_p_order, 1, 1, cur, lists);
    auto blocks = lists[static_cast<std::size_t>(pick(1, static_cast<Int>(lists.size()) - 1))];
    AbelianPGroup P(p, blocks);

    // random invertible block matrices, pushed to p'-order
    std::vector<IntMatrix> mats;
    Int order = 1;
    bool ok = true;
    for (std::size_t b = 0; b < blocks.size() && ok; ++b) {
      auto t = static_cast<std::size_t>(blocks[b].multiplicity);
      Int mod = P.modulus(b);
      IntMatrix a(t, t);
      for (int attempt = 0;; ++attempt) {
        for (std::size_t i = 0; i < t; ++i)
          for (std::size_t j = 0; j < t; ++j) a(i, j) = pick(0, mod - 1);
        // sparse-ish draws keep small orders common
        if (pick(0, 2) == 0)
          for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j)
              if (i != j && pick(0, 1)) a(i, j) = 0;
        Int o = matrix_order(a, mod, 4096);
        if (o > 0) {
          Int pp = 1;
          while (o % p == 0) {
            o /= p;
            pp *= p;
          }
          a = pow_mod(a, pp, mod);
          if (o <= limits.max_h_order) {
            order = modular::lcm(order, o);
            break;
          }
        }
        if (attempt > 200) {
          ok = false;
          break;
        }
      }
      mats.push_back(a);
    }
    if (!ok || order > limits.max_h_order) continue;

    // H = C_{d1} (x C_{d2}); generator 1 acts by A, generator 2 by a power of A
    std::vector<Int> d1s;
    for (Int d = order; d <= limits.max_h_order; d += order)
      if (d % p) d1s.push_back(d);
    if (d1s.empty()) continue;
    Int d1 = d1s[static_cast<std::size_t>(pick(0, static_cast<Int>(d1s.size()) - 1))];
    BlockMatrix A{mats};
    std::vector<Int> orders{d1};
    std::vector<BlockMatrix> action{A};
    if (!limits.cyclic_h && pick(0, 2) == 0) {
      std::vector<Int> d2s;
      for (Int d = 2; d1 * d <= limits.max_h_order; ++d)
        if (d % p) d2s.push_back(d);
      if (!d2s.empty()) {
        Int d2 = d2s[static_cast<std::size_t>(pick(0, static_cast<Int>(d2s.size()) - 1))];
        Int j = order / modular::gcd(order, d2) * pick(0, d2);
        orders.push_back(d2);
        action.push_back(power(A, j, P));
      }
    }
    GroupPresentation pres{P, AbelianGroupH(orders), action};
    if (validate_presentation(pres).empty()) return pres;
  }
}

std::vector<NamedPresentation> family(std::size_t count, const FamilyLimits& limits, std::uint64_t seed) {
  auto out = curated();
  std::erase_if(out, [&](const NamedPresentation& n) {
    if (n.pres.P.order() > limits.max_p_order || n.pres.H.order() > limits.max_h_order) return true;
    return limits.cyclic_h && n.pres.H.generator_count() > 1;
  });
  std::mt19937_64 seeds(seed);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back({"random_" + std::to_string(i), random_presentation(seeds(), limits)});
  return out;
}

}  // namespace tautilt::testing
