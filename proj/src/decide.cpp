#include "tautilt/decide.hpp"

#include <algorithm>
#include <iostream>

#include "tautilt/ffield.hpp"
#include "tautilt/modular.hpp"

namespace tautilt {

std::string HyperfocalClass::name() const {
  switch (kind) {
    case Kind::Trivial: return "trivial";
    case Kind::Cyclic: return "cyclic";
    case Kind::KleinFour: return "klein_four";
    case Kind::Other: return "other";
  }
  return "other";
}

HyperfocalClass classify_hyperfocal(std::vector<Int> factors, Int p) {
  if (!modular::is_prime(p)) throw InvalidInput("p = " + std::to_string(p) + " is not prime");
  for (Int f : factors) {
    auto pp = modular::prime_power(f);
    if (!pp || pp->first != p)
      throw InvalidInput("invariant factor " + std::to_string(f) + " is not a power of " + std::to_string(p));
  }
  std::sort(factors.begin(), factors.end());
  HyperfocalClass c;
  c.p = p;
  c.factors = factors;
  if (factors.empty())
    c.kind = HyperfocalClass::Kind::Trivial;
  else if (factors.size() == 1)
    c.kind = HyperfocalClass::Kind::Cyclic;
  else if (factors == std::vector<Int>{2, 2})
    c.kind = HyperfocalClass::Kind::KleinFour;
  else
    c.kind = HyperfocalClass::Kind::Other;
  return c;
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Finite: return "finite";
    case Outcome::Infinite: return "infinite";
    case Outcome::Unknown: return "unknown";
  }
  return "unknown";
}

std::string sufficiency_name(Sufficiency s) {
  switch (s) {
    case Sufficiency::Yes: return "yes";
    case Sufficiency::No: return "no";
    case Sufficiency::Unknown: return "unknown";
  }
  return "unknown";
}

Verdict decide_abelian(const GroupPresentation& pres, const DecideOptions& opts) {
  require_valid(pres);
  const Int p = pres.P.p();
  auto hd = hyperfocal_data(pres);
  auto cls = classify_hyperfocal(hd.hyperfocal.invariant_factors, p);

  Verdict v;
  v.p = p;
  v.hyperfocal = cls.factors;

  auto eig = eigencharacters(hd.reduced);
  check_reduced_sanity(eig);

  using K = HyperfocalClass::Kind;
  if (cls.kind == K::Trivial) {
    v.outcome = Outcome::Finite;
    v.reason = "hyperfocal subgroup is trivial";
    return v;
  }
  if (cls.kind == K::Cyclic) {
    v.outcome = Outcome::Finite;
    v.reason = "hyperfocal subgroup is cyclic of order " + std::to_string(cls.cyclic_order());
    return v;
  }
  if (p == 2 && cls.kind == K::KleinFour) {
    v.outcome = Outcome::Finite;
    v.reason = "hyperfocal subgroup is a Klein four group (dihedral of order 4)";
    return v;
  }

  v.outcome = Outcome::Infinite;
  v.reason = p == 2 ? "p = 2 and the hyperfocal subgroup is neither trivial nor a Klein four group"
                    : "p >= 3 and the hyperfocal subgroup is not cyclic";

  auto q = build_bound_quiver(eig);
  std::size_t bound = opts.max_cycle_len.value_or(default_max_length(q));
  // a template hit bounds the length of the first qualifying cycle
  auto seeds = template_certificates(q, eig);
  if (!seeds.empty()) bound = std::min(bound, seeds.front().length());
  if (auto cycle = first_qualifying_cycle(q, bound)) {
    v.certificate = Certificate{*cycle, std::move(q)};
  } else {
    v.classification_only = true;
    std::cerr << "tautilt: no qualifying zigzag cycle of length <= " << bound
              << " found; verdict rests on the classification alone\n";
  }
  return v;
}

// ---------------------------------------------------------------------------

namespace {

FqMatrix to_fq(const FField& f, const IntMatrix& m) {
  FqMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = f.from_int(m(r, c));
  return out;
}

FqMatrix fq_power(const FField& f, const FqMatrix& a, Int k) {
  FqMatrix result = fq::scalar_identity(f, a.rows(), f.one());
  FqMatrix base = a;
  while (k > 0) {
    if (k & 1) result = fq::multiply(f, result, base);
    base = fq::multiply(f, base, base);
    k >>= 1;
  }
  return result;
}

}  // namespace

void require_valid(const FrattiniInput& inp) {
  if (!modular::is_prime(inp.p)) throw InvalidInput("p = " + std::to_string(inp.p) + " is not prime");
  if (inp.matrices.size() != inp.H.generator_count())
    throw ShapeError("expected " + std::to_string(inp.H.generator_count()) + " matrices, got " +
                     std::to_string(inp.matrices.size()));
  for (Int d : inp.H.orders())
    if (d % inp.p == 0) throw NotCoprime("p divides the H-generator order " + std::to_string(d));
  FField f(inp.p, 1);
  std::vector<FqMatrix> ms;
  for (std::size_t g = 0; g < inp.matrices.size(); ++g) {
    const auto& m = inp.matrices[g];
    if (m.rows() != inp.n || m.cols() != inp.n)
      throw ShapeError("matrix for generator " + std::to_string(g) + " is not " + std::to_string(inp.n) + "x" +
                       std::to_string(inp.n));
    ms.push_back(to_fq(f, m));
    if (inp.n > 0 && fq::determinant(f, ms.back()) == f.zero())
      throw InvalidInput("matrix for generator " + std::to_string(g) + " is not invertible mod p");
    if (fq_power(f, ms.back(), inp.H.orders()[g]) != fq::scalar_identity(f, inp.n, f.one()))
      throw InvalidInput("matrix for generator " + std::to_string(g) + " has order not dividing " +
                         std::to_string(inp.H.orders()[g]));
  }
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = a + 1; b < ms.size(); ++b)
      if (fq::multiply(f, ms[a], ms[b]) != fq::multiply(f, ms[b], ms[a]))
        throw InvalidInput("matrices for generators " + std::to_string(a) + " and " + std::to_string(b) +
                           " do not commute");
}

std::size_t frattini_fixed_dimension(const FrattiniInput& inp) {
  if (inp.n == 0) return 0;
  FField f(inp.p, 1);
  FqMatrix stacked(inp.n * inp.matrices.size(), inp.n);
  for (std::size_t g = 0; g < inp.matrices.size(); ++g) {
    auto d = fq::subtract(f, to_fq(f, inp.matrices[g]), fq::scalar_identity(f, inp.n, f.one()));
    for (std::size_t r = 0; r < inp.n; ++r)
      for (std::size_t c = 0; c < inp.n; ++c) stacked(g * inp.n + r, c) = d(r, c);
  }
  return inp.n - fq::rank(f, stacked);
}

Verdict decide_frattini(const FrattiniInput& inp) {
  require_valid(inp);
  if (std::size_t fixed = frattini_fixed_dimension(inp); fixed > 0)
    throw NontrivialFixedSpace("H fixes a subspace of dimension " + std::to_string(fixed) +
                               " of the Frattini quotient, so C_P(H) is not contained in Phi(P)");
  Verdict v;
  v.p = inp.p;
  v.hyperfocal.assign(inp.n, inp.p);
  if (inp.n == 0) {
    v.outcome = Outcome::Finite;
    v.reason = "P is trivial";
    return v;
  }
  if (inp.p >= 3) {
    v.outcome = inp.n == 1 ? Outcome::Finite : Outcome::Infinite;
    v.reason = inp.n == 1 ? "p >= 3 and the hyperfocal subgroup has rank 1"
                          : "p >= 3 and the hyperfocal subgroup has rank " + std::to_string(inp.n) + " >= 2";
    return v;
  }
  if (inp.n == 1)
    throw InconsistentRankOne("a p'-group has no fixed-point-free action on C_2; the input is inconsistent");
  if (inp.n == 2) {
    v.outcome = Outcome::Unknown;
    v.reason = "p = 2 and P has rank 2: rank alone does not decide (compare G1 = (C_2)^2 x| C_3, finite, with "
               "G2 = (C_4)^2 x| C_3, infinite)";
    return v;
  }
  v.outcome = Outcome::Infinite;
  v.reason = "p = 2, P has rank " + std::to_string(inp.n) + " != 2 and the hyperfocal subgroup is nontrivial";
  return v;
}

Sufficiency finiteness_sufficient(const HyperfocalClass& cls) {
  using K = HyperfocalClass::Kind;
  switch (cls.kind) {
    case K::Trivial:
    case K::Cyclic: return finiteness_sufficient(NonabelianKind::Cyclic, cls.p);
    case K::KleinFour: return finiteness_sufficient(NonabelianKind::Dihedral, cls.p);
    case K::Other: return finiteness_sufficient(NonabelianKind::Other, cls.p);
  }
  return Sufficiency::Unknown;
}

Sufficiency finiteness_sufficient(NonabelianKind kind, Int p) {
  switch (kind) {
    case NonabelianKind::Cyclic: return Sufficiency::Yes;
    case NonabelianKind::Dihedral:
    case NonabelianKind::Semidihedral:
    case NonabelianKind::Quaternion: return p == 2 ? Sufficiency::Yes : Sufficiency::Unknown;
    case NonabelianKind::Other: return Sufficiency::Unknown;
  }
  return Sufficiency::Unknown;
}

}  // namespace tautilt
