#include "tautilt/charfield.hpp"

#include <algorithm>
#include <set>

#include "tautilt/modular.hpp"

namespace tautilt {

Character DualGroup::at(std::size_t index) const {
  return Character{h_.element(static_cast<Int>(index))};
}

std::size_t DualGroup::index(const Character& chi) const {
  if (chi.exps.size() != h_.generator_count()) throw ShapeError("character has wrong length");
  Int idx = 0;
  for (std::size_t g = 0; g < chi.exps.size(); ++g)
    idx = idx * h_.orders()[g] + modular::reduce(chi.exps[g], h_.orders()[g]);
  return static_cast<std::size_t>(idx);
}

std::vector<Character> DualGroup::all() const {
  std::vector<Character> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
  return out;
}

Character DualGroup::trivial() const { return Character{std::vector<Int>(h_.generator_count(), 0)}; }

Character DualGroup::tensor(const Character& a, const Character& b) const {
  Character c = a;
  for (std::size_t g = 0; g < c.exps.size(); ++g)
    c.exps[g] = modular::reduce(a.exps[g] + b.exps[g], h_.orders()[g]);
  return c;
}

Character DualGroup::inverse(const Character& a) const { return power(a, -1); }

Character DualGroup::power(const Character& a, Int k) const {
  Character c = a;
  for (std::size_t g = 0; g < c.exps.size(); ++g) {
    Int d = h_.orders()[g];
    c.exps[g] = modular::reduce(modular::mul(modular::reduce(a.exps[g], d), modular::reduce(k, d), d), d);
  }
  return c;
}

bool DualGroup::is_trivial(const Character& a) const {
  return std::all_of(a.exps.begin(), a.exps.end(), [](Int x) { return x == 0; });
}

Int DualGroup::order(const Character& a) const {
  Int n = 1;
  for (std::size_t g = 0; g < a.exps.size(); ++g) {
    Int d = h_.orders()[g];
    n = modular::lcm(n, d / modular::gcd(d, modular::reduce(a.exps[g], d)));
  }
  return n;
}

FField::Elem DualGroup::value(const FField& f, const Character& chi, const std::vector<Int>& h) const {
  FField::Elem v = f.one();
  for (std::size_t g = 0; g < chi.exps.size(); ++g) {
    Int d = h_.orders()[g];
    if (f.root_order() % d != 0) throw InvalidInput("field lacks the required roots of unity");
    v = f.mul(v, f.zeta_power((f.root_order() / d) * modular::reduce(chi.exps[g] * h[g], d)));
  }
  return v;
}

std::string DualGroup::label(const Character& chi) const {
  std::string s = "(";
  for (std::size_t g = 0; g < chi.exps.size(); ++g) {
    if (g) s += ',';
    s += std::to_string(chi.exps[g]);
  }
  return s + ")";
}

std::vector<std::pair<std::size_t, Character>> EigenDecomposition::labels() const {
  std::vector<std::pair<std::size_t, Character>> out;
  for (const auto& e : entries) out.emplace_back(e.block, e.chi);
  return out;
}

namespace {

struct Piece {
  FqMatrix basis;  // columns span the piece
  std::vector<Int> exps;
};

}  // namespace

EigenDecomposition eigencharacters(const GroupPresentation& pres, const FField& f) {
  const auto& P = pres.P;
  const auto& H = pres.H;
  if (f.characteristic() != P.p()) throw InvalidInput("field characteristic differs from p");
  if (pres.action.size() != H.generator_count()) throw ShapeError("one action matrix per generator");
  for (Int d : H.orders())
    if (f.root_order() % d != 0) throw InvalidInput("field lacks the required roots of unity");

  EigenDecomposition out{P.p(), H, P.blocks(), {}};
  for (std::size_t b = 0; b < P.block_count(); ++b) {
    auto t = static_cast<std::size_t>(P.blocks()[b].multiplicity);
    std::vector<Piece> pieces{{FqMatrix::identity(t, f.one()), {}}};
    for (std::size_t g = 0; g < H.generator_count(); ++g) {
      const auto& a = pres.action[g].blocks[b];
      FqMatrix reduced(t, t);
      for (std::size_t r = 0; r < t; ++r)
        for (std::size_t c = 0; c < t; ++c) reduced(r, c) = f.from_int(a(r, c));
      Int d = H.orders()[g];
      Int step = f.root_order() / d;
      std::vector<Piece> next;
      for (const auto& piece : pieces) {
        std::size_t found = 0;
        FqMatrix image = fq::multiply(f, reduced, piece.basis);
        for (Int j = 0; j < d; ++j) {
          auto lambda = f.zeta_power(step * j);
          auto shifted = fq::subtract(f, image, fq::multiply(f, fq::scalar_identity(f, t, lambda), piece.basis));
          FqMatrix kernel = fq::nullspace(f, shifted);
          if (kernel.cols() == 0) continue;
          found += kernel.cols();
          auto exps = piece.exps;
          exps.push_back(j);
          next.push_back({fq::multiply(f, piece.basis, kernel), std::move(exps)});
        }
        if (found != piece.basis.cols())
          throw InternalError("eigenspace of block " + std::to_string(b) + " failed to split under generator " +
                              std::to_string(g));
      }
      pieces = std::move(next);
    }
    std::vector<EigenCharacter> block_entries;
    for (const auto& piece : pieces)
      for (std::size_t c = 0; c < piece.basis.cols(); ++c)
        block_entries.push_back({b, P.blocks()[b].exponent, Character{piece.exps}, piece.basis.column(c)});
    std::stable_sort(block_entries.begin(), block_entries.end(),
                     [](const EigenCharacter& x, const EigenCharacter& y) { return x.chi < y.chi; });
    out.entries.insert(out.entries.end(), block_entries.begin(), block_entries.end());
  }
  return out;
}

EigenDecomposition eigencharacters(const GroupPresentation& pres) {
  return eigencharacters(pres, FField::splitting_field(pres.P.p(), pres.H.exponent()));
}

void check_reduced_sanity(const EigenDecomposition& eig) {
  DualGroup dual(eig.H);
  for (const auto& e : eig.entries)
    if (dual.is_trivial(e.chi))
      throw InternalError("trivial eigencharacter after reduction: the quiver would have loops");
  if (eig.p == 2)
    for (const auto& b : eig.blocks)
      if (b.multiplicity == 1)
        throw InternalError("p = 2 reduced block of multiplicity one (exponent " + std::to_string(b.exponent) + ")");
}

std::vector<std::vector<Character>> frobenius_orbits(const std::vector<Character>& chars,
                                                     const DualGroup& dual, Int p) {
  std::set<Character> distinct(chars.begin(), chars.end());
  std::set<Character> seen;
  std::vector<std::vector<Character>> orbits;
  for (const auto& chi : distinct) {
    if (seen.count(chi)) continue;
    std::vector<Character> orbit;
    Character cur = chi;
    // stops at the first repeat even when p is not coprime to the order of chi
    while (std::find(orbit.begin(), orbit.end(), cur) == orbit.end()) {
      orbit.push_back(cur);
      seen.insert(cur);
      cur = dual.power(cur, p);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace tautilt
