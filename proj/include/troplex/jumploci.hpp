#ifndef TROPLEX_JUMPLOCI_HPP
#define TROPLEX_JUMPLOCI_HPP

// Determinantal ideals of the twisted chain complex: jump ideals, twisted
// Alexander polynomials, the Kaehler obstruction and Novikov admissibility.

#include "troplex/fpgroup.hpp"

#include <algorithm>
#include <set>
#include <optional>
#include <string>
#include <vector>

namespace troplex {

/// Generators of an ideal of the Laurent ring, as canonical associates.
struct IdealGens {
  CoefficientRing ring;
  std::size_t nvars = 0;
  std::vector<LaurentPoly> gens;  // empty means the zero ideal
  std::string provenance;

  bool is_zero() const { return gens.empty(); }
  /// gcd of the generators: the codimension-one part of V(I).
  std::optional<LaurentPoly> gcd() const { return gcd_of(gens); }
};

inline IdealGens minors_ideal(const PolyMatrix& m, std::size_t k, std::string provenance) {
  IdealGens I{m.ring(), m.nvars(), {}, std::move(provenance)};
  if (k <= std::min(m.rows(), m.cols())) I.gens = minors(m, k);
  return I;
}

namespace detail {

inline void dedupe_push(std::vector<LaurentPoly>& v, std::set<std::string>& seen, LaurentPoly f) {
  if (f.is_zero()) return;
  f = canonical_associate(f);
  if (seen.insert(f.str()).second) v.push_back(std::move(f));
}

}  // namespace detail

/// Minors of size r*c_i of diag(d_{i+1}, d_i) for the presentation complex
/// (c_0 = 1, c_1 = n).  A minor of a block diagonal matrix is a product of
/// minors of the blocks, which is how the generators are produced.
inline IdealGens jump_ideal(const AlexanderMatrices& mats, std::size_t rank, int i) {
  const PolyMatrix& d2 = mats.d2;
  const PolyMatrix& d1 = mats.d1;
  if (i == 0) return minors_ideal(d1, rank, "J0: minors of size r of d1");
  if (i != 1) throw AlgebraError("unsupported degree: only J0 and J1 exist for a presentation complex");
  const std::size_t n = d1.rows() / rank, k = rank * n;
  IdealGens I{d2.ring(), d2.nvars(), {}, "J1: minors of size r*n of diag(d2, d1)"};
  std::set<std::string> seen;
  for (std::size_t k1 = 0; k1 <= k; ++k1) {
    std::size_t k2 = k - k1;
    if (k1 > std::min(d2.rows(), d2.cols()) || k2 > std::min(d1.rows(), d1.cols())) continue;
    auto a = minors(d2, k1), b = minors(d1, k2);
    for (const auto& x : a)
      for (const auto& y : b) detail::dedupe_push(I.gens, seen, x * y);
  }
  return I;
}

/// gcd of the jump ideal J_i without listing every product of minors:
/// gcd over splits k1 + k2 = k of gcd(k1-minors of d2) * gcd(k2-minors of d1).
inline std::optional<LaurentPoly> jump_ideal_gcd(const AlexanderMatrices& mats, std::size_t rank, int i) {
  const PolyMatrix& d2 = mats.d2;
  const PolyMatrix& d1 = mats.d1;
  if (i == 0) return minors_gcd(d1, rank);
  if (i != 1) throw AlgebraError("unsupported degree: only J0 and J1 exist for a presentation complex");
  const std::size_t k = rank * (d1.rows() / rank);
  std::optional<LaurentPoly> acc;
  for (std::size_t k1 = 0; k1 <= k; ++k1) {
    auto a = minors_gcd(d2, k1);
    if (!a) continue;
    auto b = minors_gcd(d1, k - k1);
    if (!b) continue;
    LaurentPoly prod = *a * *b;
    acc = acc ? laurent_gcd(*acc, prod) : canonical_associate(prod);
  }
  return acc;
}

inline IdealGens jump_ideal(const Presentation& p, const Representation& s, const EpimorphismToFreeAbelian& phi,
                            int i) {
  return jump_ideal(alexander_matrices(p, s, phi), s.rank(), i);
}

/// Delta together with the data that qualifies it.
struct AlexVerdict {
  enum class Kind { Zero, One, Poly };
  Kind kind = Kind::Zero;
  std::optional<LaurentPoly> delta;  // set unless Zero; One keeps the unit 1
  CoefficientRing ring;
  std::optional<std::size_t> free_rank;  // only when the target rank is 1
  IdealGens discrepancy;                 // r-minors of d1

  bool is_zero() const { return kind == Kind::Zero; }
  bool is_one() const { return kind == Kind::One; }
  std::string str() const {
    if (kind == Kind::Zero) return "0";
    if (kind == Kind::One) return "1";
    return delta->str();
  }
};

/// Delta^{phi,sigma} as the gcd of the (n-1) r minors of d2; the ring is the
/// representation's ring.
inline AlexVerdict twisted_alexander(const Presentation& p, const Representation& s,
                                     const EpimorphismToFreeAbelian& phi) {
  auto mats = alexander_matrices(p, s, phi);
  const std::size_t r = s.rank(), n = p.ngens();
  AlexVerdict v;
  v.ring = s.ring();
  v.discrepancy = minors_ideal(mats.d1, r, "discrepancy: minors of size r of d1");
  const std::size_t k = n == 0 ? 0 : (n - 1) * r;
  auto g = minors_gcd(mats.d2, k);
  if (!g) {
    v.kind = AlexVerdict::Kind::Zero;
  } else if (is_unit(*g)) {
    v.kind = AlexVerdict::Kind::One;
    v.delta = LaurentPoly::one(s.ring(), phi.target_rank);
  } else {
    v.kind = AlexVerdict::Kind::Poly;
    v.delta = g;
  }
  if (phi.target_rank == 1) {
    std::size_t rk = generic_rank(mats.d1) + generic_rank(mats.d2);
    v.free_rank = n * r - rk;
  }
  return v;
}

inline AlexVerdict twisted_alexander(const Presentation& p, const Representation& s,
                                     const EpimorphismToFreeAbelian& phi, CoefficientRing ring) {
  return twisted_alexander(p, s.ring() == ring ? s : change_ring(s, ring), phi);
}

struct KahlerVerdict {
  bool not_kahler = false;
  std::optional<std::size_t> witness;  // index into the verdict list
};

/// One-sided test: Delta over a field must be 0 or a unit for a Kaehler
/// group.  Verdicts over Z are rejected (content is not a field unit).
inline KahlerVerdict kahler_obstruction(const std::vector<AlexVerdict>& verdicts) {
  if (verdicts.empty()) throw AlgebraError("kahler_obstruction needs at least one verdict");
  KahlerVerdict k;
  auto order = [](const CoefficientRing& r) { return r.is_rationals() ? std::uint64_t{0} : r.p; };
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const auto& v = verdicts[i];
    if (!v.ring.is_field()) throw AlgebraError("kahler_obstruction expects verdicts over fields");
    if (v.is_zero() || is_unit(*v.delta)) continue;
    // deterministic witness: the smallest characteristic wins
    if (!k.witness || order(v.ring) < order(verdicts[*k.witness].ring)) k.witness = i;
    k.not_kahler = true;
  }
  return k;
}

struct Admissibility {
  bool admissible = false;
  char condition = 0;  // 'a', 'b' or 'c' when admissible
  std::string reason;
};

/// Sufficient conditions for the Novikov module structure: trivial
/// valuation (a), finite image (b, only with a closure bound), or all
/// generator matrices and inverses in GL_r of the valuation ring (c).
inline Admissibility novikov_admissible(const Representation& s, const Valuation& v,
                                        std::optional<std::size_t> closure_bound = std::nullopt) {
  if (v.is_trivial()) return {true, 'a', "trivial valuation"};
  if (s.ring().is_prime_field()) return {false, 0, "p-adic valuation on a prime field"};
  std::string failure;
  auto check = [&](const RatMatrix& m) {
    for (const auto& x : m.a) {
      if (x == 0) continue;
      Rational val = v.of(s.ring(), x).value();
      if (val < 0) {
        failure = "entry valuation " + to_string(val) + " < 0";
        return false;
      }
    }
    Rational dv = v.of(s.ring(), mat_det(s.ring(), m)).value();
    if (dv != 0) {
      failure = "determinant valuation " + to_string(dv) + " != 0";
      return false;
    }
    return true;
  };
  bool ok = true;
  for (std::size_t i = 0; i < s.ngens() && ok; ++i) ok = check(s.images()[i]) && check(s.inverses()[i]);
  if (ok) return {true, 'c', "generators and inverses lie in GL_r of the valuation ring"};
  if (closure_bound) {
    std::set<std::vector<Rational>> seen{RatMatrix::identity(s.rank()).a};
    std::vector<RatMatrix> frontier{RatMatrix::identity(s.rank())};
    bool finite = true;
    while (!frontier.empty() && finite) {
      std::vector<RatMatrix> next;
      for (const auto& m : frontier)
        for (const auto& g : s.images()) {
          RatMatrix h = mat_mul(s.ring(), g, m);
          if (seen.insert(h.a).second) {
            if (seen.size() > *closure_bound) {
              finite = false;
              break;
            }
            next.push_back(std::move(h));
          }
        }
      frontier = std::move(next);
    }
    if (finite) return {true, 'b', "finite image of order " + std::to_string(seen.size())};
    failure += "; image closure exceeded " + std::to_string(*closure_bound);
  }
  return {false, 0, failure};
}

}  // namespace troplex

#endif  // TROPLEX_JUMPLOCI_HPP
