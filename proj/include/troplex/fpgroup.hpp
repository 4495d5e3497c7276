#ifndef TROPLEX_FPGROUP_HPP
#define TROPLEX_FPGROUP_HPP

// Finitely presented groups: words, Fox calculus, abelianization, matrix
// representations, twisted Alexander matrices and presentation builders.

#include "troplex/polymatrix.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace troplex {

/// Signed 1-based generator indices: 2 is x2, -2 is x2^-1.
using Word = std::vector<int>;

inline Word free_reduce(const Word& w) {
  Word r;
  for (int x : w) {
    if (!r.empty() && r.back() == -x)
      r.pop_back();
    else
      r.push_back(x);
  }
  return r;
}

inline Word word_inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& x : r) x = -x;
  return r;
}

inline Word word_concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Word word_power(const Word& w, long k) {
  Word base = k < 0 ? word_inverse(w) : w, r;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) r = word_concat(r, base);
  return r;
}

/// [a, b] = a b a^-1 b^-1.
inline Word commutator(const Word& a, const Word& b) {
  return word_concat(word_concat(a, b), word_concat(word_inverse(a), word_inverse(b)));
}

class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> names, std::vector<Word> relators)
      : names_(std::move(names)), relators_(std::move(relators)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
      if (n.empty()) throw AlgebraError("empty generator name");
      if (!seen.insert(n).second) throw AlgebraError("duplicate generator name '" + n + "'");
    }
    for (const auto& r : relators_)
      for (int x : r)
        if (x == 0 || static_cast<std::size_t>(std::abs(x)) > names_.size())
          throw AlgebraError("relator letter out of range");
  }

  /// Generators x1..xn.
  static Presentation with_default_names(std::size_t n, std::vector<Word> relators) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return {std::move(names), std::move(relators)};
  }

  std::size_t ngens() const { return names_.size(); }
  std::size_t nrels() const { return relators_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i) + 1;
    throw AlgebraError("unknown generator '" + name + "'");
  }

  /// Whitespace separated atoms "name" or "name^k"; "1" or "" is the empty word.
  Word parse_word(const std::string& text) const {
    std::istringstream in(text);
    std::string tok;
    Word w;
    while (in >> tok) {
      if (tok == "1") continue;
      auto caret = tok.find('^');
      std::string name = tok.substr(0, caret);
      long k = 1;
      if (caret != std::string::npos) {
        std::string e = tok.substr(caret + 1);
        std::size_t used = 0;
        try {
          k = std::stol(e, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != e.size()) throw AlgebraError("bad exponent in word atom '" + tok + "'");
      }
      w = word_concat(w, word_power(Word{index_of(name)}, k));
    }
    return w;
  }

  /// Run-length form, e.g. "x1^-1 x2^2".
  std::string word_string(const Word& w) const {
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      long k = static_cast<long>(j - i) * (w[i] > 0 ? 1 : -1);
      if (!s.empty()) s += " ";
      s += names_[static_cast<std::size_t>(std::abs(w[i])) - 1];
      if (k != 1) s += "^" + std::to_string(k);
      i = j;
    }
    return s.empty() ? "1" : s;
  }

  bool operator==(const Presentation& o) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

// ---------------------------------------------------------------------------
// Abelianization

struct AbelianizationData {
  IntMatrix exponent_matrix;                 // m x n
  std::vector<Integer> smith;                // nonzero Smith invariants
  std::size_t free_rank = 0;                 // b
  std::vector<std::vector<long>> projection;  // per generator, a vector in Z^b
  std::vector<Integer> torsion;              // invariants > 1
};

inline std::vector<long> exponent_sums(const Word& w, std::size_t n) {
  std::vector<long> e(n, 0);
  for (int x : w) e[static_cast<std::size_t>(std::abs(x)) - 1] += x > 0 ? 1 : -1;
  return e;
}

inline AbelianizationData abelianize(const Presentation& p) {
  AbelianizationData a;
  const std::size_t n = p.ngens();
  for (const auto& r : p.relators()) {
    auto e = exponent_sums(r, n);
    a.exponent_matrix.emplace_back(e.begin(), e.end());
  }
  a.smith = smith_invariants(a.exponent_matrix, n);
  a.free_rank = n - a.smith.size();
  for (const auto& d : a.smith)
    if (d > 1) a.torsion.push_back(d);
  // Hom(G, Z) is the integer kernel of E; a basis of it gives coordinates on
  // the free part of G_ab.
  IntMatrix kernel = integer_kernel(a.exponent_matrix, n);
  a.projection.assign(n, std::vector<long>(kernel.size(), 0));
  for (std::size_t c = 0; c < kernel.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) {
      if (!kernel[c][i].fits_slong_p()) throw AlgebraError("abelianization coordinates too large");
      a.projection[i][c] = kernel[c][i].get_si();
    }
  return a;
}

/// Per-generator images in Z^m of a homomorphism to a free abelian group.
struct EpimorphismToFreeAbelian {
  std::size_t target_rank = 0;
  std::vector<std::vector<long>> images;

  static EpimorphismToFreeAbelian from_abelianization(const Presentation& p) {
    auto ab = abelianize(p);
    return {ab.free_rank, ab.projection};
  }

  /// Throws unless relators are killed and the image lattice is all of Z^m.
  void check(const Presentation& p) const {
    if (images.size() != p.ngens()) throw AlgebraError("phi must give one vector per generator");
    for (const auto& v : images)
      if (v.size() != target_rank) throw AlgebraError("phi image has wrong length");
    for (const auto& r : p.relators()) {
      std::vector<long> s(target_rank, 0);
      for (int x : r)
        for (std::size_t c = 0; c < target_rank; ++c)
          s[c] += (x > 0 ? 1 : -1) * images[static_cast<std::size_t>(std::abs(x)) - 1][c];
      for (long v : s)
        if (v != 0) throw AlgebraError("phi does not kill every relator");
    }
    IntMatrix m;
    for (const auto& v : images) m.emplace_back(v.begin(), v.end());
    auto inv = smith_invariants(m, target_rank);
    bool onto = inv.size() == target_rank;
    for (const auto& d : inv) onto = onto && d == 1;
    if (!onto) throw AlgebraError("phi is not surjective onto Z^" + std::to_string(target_rank));
  }
};

// ---------------------------------------------------------------------------
// Matrices over a coefficient ring and representations

struct RatMatrix {
  std::size_t n = 0;
  std::vector<Rational> a;

  static RatMatrix identity(std::size_t n) {
    RatMatrix m{n, std::vector<Rational>(n * n, Rational(0))};
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  Rational& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  bool operator==(const RatMatrix& o) const = default;
};

inline RatMatrix mat_mul(const CoefficientRing& ring, const RatMatrix& x, const RatMatrix& y) {
  RatMatrix r{x.n, std::vector<Rational>(x.n * x.n, Rational(0))};
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < x.n; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  for (auto& v : r.a) v = ring.normalize(v);
  return r;
}

/// Inverse by Gauss-Jordan over Q or F_p; nullopt if singular (or, over Z,
/// if the inverse is not integral).
inline std::optional<RatMatrix> mat_inverse(const CoefficientRing& ring, const RatMatrix& m) {
  const std::size_t n = m.n;
  CoefficientRing field = ring.is_integers() ? CoefficientRing::rationals() : ring;
  RatMatrix a = m, inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    Rational s = field.inverse(a(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = field.mul(a(c, j), s);
      inv(c, j) = field.mul(inv(c, j), s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = field.sub(a(i, j), field.mul(f, a(c, j)));
        inv(i, j) = field.sub(inv(i, j), field.mul(f, inv(c, j)));
      }
    }
  }
  if (ring.is_integers())
    for (const auto& v : inv.a)
      if (v.get_den() != 1) return std::nullopt;
  return inv;
}

inline Rational mat_det(const CoefficientRing& ring, const RatMatrix& m) {
  CoefficientRing field = ring.is_integers() ? CoefficientRing::rationals() : ring;
  RatMatrix a = m;
  Rational det(1);
  for (std::size_t c = 0; c < a.n; ++c) {
    std::size_t p = c;
    while (p < a.n && a(p, c) == 0) ++p;
    if (p == a.n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < a.n; ++j) std::swap(a(p, j), a(c, j));
      det = field.neg(det);
    }
    det = field.mul(det, a(c, c));
    Rational s = field.inverse(a(c, c));
    for (std::size_t i = c + 1; i < a.n; ++i) {
      Rational f = field.mul(a(i, c), s);
      for (std::size_t j = c; j < a.n; ++j) a(i, j) = field.sub(a(i, j), field.mul(f, a(c, j)));
    }
  }
  return det;
}

/// sigma: G -> GL_r(R), given on generators.  Inverses are verified exactly
/// at construction.
class Representation {
 public:
  Representation(CoefficientRing ring, std::size_t rank, std::vector<RatMatrix> images)
      : ring_(ring), rank_(rank), images_(std::move(images)) {
    for (auto& m : images_) {
      if (m.n != rank_ || m.a.size() != rank_ * rank_) throw AlgebraError("representation matrix has wrong size");
      for (auto& v : m.a) v = ring_.normalize(v);
      auto inv = mat_inverse(ring_, m);
      if (!inv)
        throw AlgebraError(ring_.is_integers() ? "singular matrix: not invertible over Z" : "singular matrix");
      inverses_.push_back(std::move(*inv));
    }
  }

  static Representation trivial(CoefficientRing ring, std::size_t ngens, std::size_t rank = 1) {
    return {ring, rank, std::vector<RatMatrix>(ngens, RatMatrix::identity(rank))};
  }

  const CoefficientRing& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  std::size_t ngens() const { return images_.size(); }
  const std::vector<RatMatrix>& images() const { return images_; }
  const std::vector<RatMatrix>& inverses() const { return inverses_; }

  const RatMatrix& letter(int x) const {
    auto i = static_cast<std::size_t>(std::abs(x)) - 1;
    if (i >= images_.size()) throw AlgebraError("generator index outside the representation");
    return x > 0 ? images_[i] : inverses_[i];
  }

 private:
  CoefficientRing ring_;
  std::size_t rank_;
  std::vector<RatMatrix> images_, inverses_;
};

/// Moves a representation to another ring (Z -> Q, Z or Q -> F_p).
inline Representation change_ring(const Representation& s, CoefficientRing target) {
  std::vector<RatMatrix> imgs = s.images();
  for (auto& m : imgs)
    for (auto& v : m.a) v = target.normalize(v);
  return {target, s.rank(), std::move(imgs)};
}

inline RatMatrix evaluate_word(const Representation& s, const Word& w) {
  RatMatrix m = RatMatrix::identity(s.rank());
  for (int x : free_reduce(w)) m = mat_mul(s.ring(), m, s.letter(x));
  return m;
}

inline bool verify_representation(const Presentation& p, const Representation& s) {
  if (s.ngens() != p.ngens()) return false;
  RatMatrix id = RatMatrix::identity(s.rank());
  for (const auto& r : p.relators())
    if (!(evaluate_word(s, r) == id)) return false;
  return true;
}

/// t^phi(w) * sigma(w) as a matrix of Laurent monomials.
inline PolyMatrix evaluate_word(const Representation& s, const EpimorphismToFreeAbelian& phi, const Word& w) {
  std::vector<long> e(phi.target_rank, 0);
  for (int x : w)
    for (std::size_t c = 0; c < phi.target_rank; ++c)
      e[c] += (x > 0 ? 1 : -1) * phi.images[static_cast<std::size_t>(std::abs(x)) - 1][c];
  RatMatrix m = evaluate_word(s, w);
  PolyMatrix r(s.ring(), phi.target_rank, s.rank(), s.rank());
  Monomial mono(e.begin(), e.end());
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = 0; j < s.rank(); ++j)
      if (m(i, j) != 0) r(i, j) = LaurentPoly::monomial(s.ring(), phi.target_rank, mono, m(i, j));
  return r;
}

// ---------------------------------------------------------------------------
// Fox calculus

/// Finite Z-linear combination of freely reduced words.
using GroupRingElement = std::map<Word, Integer>;

inline GroupRingElement fox_derivative(const Word& w, int i) {
  if (i <= 0) throw AlgebraError("Fox derivative index must be positive");
  Word r = free_reduce(w);
  GroupRingElement d;
  auto add = [&](const Word& u, int c) {
    auto& v = d[u];
    v += c;
    if (v == 0) d.erase(u);
  };
  Word prefix;
  for (int x : r) {
    if (x == i) add(prefix, 1);
    prefix.push_back(x);
    if (x == -i) add(prefix, -1);
  }
  return d;
}

/// Image of a group ring element under t^phi * sigma.
inline PolyMatrix specialize(const GroupRingElement& e, const Representation& s, const EpimorphismToFreeAbelian& phi) {
  PolyMatrix r(s.ring(), phi.target_rank, s.rank(), s.rank());
  for (const auto& [w, c] : e) {
    PolyMatrix m = evaluate_word(s, phi, w);
    for (std::size_t i = 0; i < s.rank(); ++i)
      for (std::size_t j = 0; j < s.rank(); ++j) r(i, j) += m(i, j).scaled(Rational(c));
  }
  return r;
}

struct AlexanderMatrices {
  PolyMatrix d2;  // (m r) x (n r): block (j, i) is the image of dR_j/dx_i
  PolyMatrix d1;  // (n r) x r:     block i is the image of x_i minus I
};

inline AlexanderMatrices alexander_matrices(const Presentation& p, const Representation& s,
                                            const EpimorphismToFreeAbelian& phi) {
  if (!verify_representation(p, s)) throw AlgebraError("representation does not satisfy the relators");
  phi.check(p);
  const std::size_t r = s.rank(), n = p.ngens(), m = p.nrels(), b = phi.target_rank;
  const auto& ring = s.ring();
  PolyMatrix d2(ring, b, m * r, n * r), d1(ring, b, n * r, r);

  auto accumulate = [&](std::size_t row0, std::size_t col0, const Monomial& e, const RatMatrix& mat, int sign) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (mat(i, j) != 0) d2(row0 + i, col0 + j).add_term(e, ring.mul(mat(i, j), Rational(sign)));
  };
  for (std::size_t j = 0; j < m; ++j) {
    Monomial e(b, 0);
    RatMatrix prefix = RatMatrix::identity(r);
    for (int x : free_reduce(p.relators()[j])) {
      auto g = static_cast<std::size_t>(std::abs(x)) - 1;
      int sign = x > 0 ? 1 : -1;
      if (x > 0) accumulate(j * r, g * r, e, prefix, 1);
      prefix = mat_mul(ring, prefix, s.letter(x));
      for (std::size_t c = 0; c < b; ++c) e[c] = checked_add(e[c], sign * phi.images[g][c]);
      if (x < 0) accumulate(j * r, g * r, e, prefix, -1);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    PolyMatrix block = evaluate_word(s, phi, Word{static_cast<int>(i) + 1}) - PolyMatrix::identity(ring, b, r);
    d1.set_block(i * r, 0, block);
  }
  return {std::move(d2), std::move(d1)};
}

/// (dim H_0, dim H_1) of the presentation complex with coefficients twisted
/// by sigma and the rank-one character t -> point (optionally times a
/// per-generator torsion character).
inline std::pair<std::size_t, std::size_t> homology_dims_at_character(
    const Presentation& p, const Representation& s, const EpimorphismToFreeAbelian& phi,
    const std::vector<Rational>& point, const std::vector<Rational>& torsion = {}) {
  if (!s.ring().is_field()) throw AlgebraError("homology dimensions need field coefficients");
  for (const auto& v : point)
    if (s.ring().normalize(v) == 0) throw AlgebraError("character coordinate is zero");
  Representation sigma = s;
  if (!torsion.empty()) {
    if (torsion.size() != p.ngens()) throw AlgebraError("torsion character needs one value per generator");
    std::vector<RatMatrix> imgs = s.images();
    for (std::size_t i = 0; i < imgs.size(); ++i)
      for (auto& v : imgs[i].a) v = s.ring().mul(v, torsion[i]);
    sigma = Representation(s.ring(), s.rank(), std::move(imgs));
    if (!verify_representation(p, sigma)) throw AlgebraError("torsion character does not kill the relators");
  }
  auto mats = alexander_matrices(p, sigma, phi);
  std::size_t r1 = evaluate(mats.d1, point).rank();
  std::size_t r2 = evaluate(mats.d2, point).rank();
  return {s.rank() - r1, p.ngens() * s.rank() - r1 - r2};
}

// ---------------------------------------------------------------------------
// Builders

/// Orbifold group of genus g with cone points of orders mu:
/// generators x1,y1,..,xg,yg,z1,..,zs; relators prod [x_i,y_i] prod z_j and z_j^mu_j.
inline Presentation build_orbifold_presentation(std::size_t g, const std::vector<long>& mu) {
  if (g < 1) throw AlgebraError("orbifold genus must be at least 1");
  for (long m : mu)
    if (m < 2) throw AlgebraError("cone point orders must be at least 2");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= g; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  for (std::size_t j = 1; j <= mu.size(); ++j) names.push_back("z" + std::to_string(j));
  Word big;
  for (std::size_t i = 0; i < g; ++i)
    big = word_concat(big, commutator(Word{static_cast<int>(2 * i + 1)}, Word{static_cast<int>(2 * i + 2)}));
  std::vector<Word> rels;
  for (std::size_t j = 0; j < mu.size(); ++j) big.push_back(static_cast<int>(2 * g + j + 1));
  rels.push_back(big);
  for (std::size_t j = 0; j < mu.size(); ++j) rels.push_back(word_power(Word{static_cast<int>(2 * g + j + 1)}, mu[j]));
  return {std::move(names), std::move(rels)};
}

struct WeightedEdge {
  std::size_t u, v;  // 1-based vertices
  long weight;
};

/// Weighted right-angled Artin group: one relator [a_u, a_v]^weight per edge.
inline Presentation build_weighted_raag(std::size_t nverts, const std::vector<WeightedEdge>& edges) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= nverts; ++i) names.push_back("a" + std::to_string(i));
  std::vector<Word> rels;
  for (const auto& e : edges) {
    if (e.u < 1 || e.v < 1 || e.u > nverts || e.v > nverts || e.u == e.v) throw AlgebraError("bad edge in graph");
    if (e.weight < 1) throw AlgebraError("edge weights must be positive");
    rels.push_back(word_power(commutator(Word{static_cast<int>(e.u)}, Word{static_cast<int>(e.v)}), e.weight));
  }
  return {std::move(names), std::move(rels)};
}

/// Direct product: disjoint generators, both relator sets, all cross commutators.
inline Presentation build_product_presentation(const Presentation& a, const Presentation& b) {
  std::vector<std::string> names = a.names();
  std::set<std::string> used(names.begin(), names.end());
  for (const auto& n : b.names()) {
    std::string cand = n;
    for (int k = 2; used.count(cand); ++k) cand = n + "_" + std::to_string(k);
    used.insert(cand);
    names.push_back(cand);
  }
  const int off = static_cast<int>(a.ngens());
  std::vector<Word> rels = a.relators();
  for (Word w : b.relators()) {
    for (auto& x : w) x += x > 0 ? off : -off;
    rels.push_back(std::move(w));
  }
  for (int i = 1; i <= off; ++i)
    for (int j = 1; j <= static_cast<int>(b.ngens()); ++j) rels.push_back(commutator(Word{i}, Word{off + j}));
  return {std::move(names), std::move(rels)};
}

/// Permutation of {0..d-1}; products compose right to left: (p*q)(k) = p(q(k)).
using Permutation = std::vector<std::size_t>;

inline Permutation perm_compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[k] = p[q[k]];
  return r;
}

inline Permutation perm_inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[p[k]] = k;
  return r;
}

inline std::size_t default_quotient_bound() {
  if (const char* env = std::getenv("TROPLEX_MAX_QUOTIENT")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw AlgebraError("TROPLEX_MAX_QUOTIENT is not a number");
    }
  }
  return 5040;
}

/// Regular representation of the finite quotient generated by the given
/// permutations (one per generator).  Elements of the quotient are found by
/// breadth-first closure; sigma(g) is left multiplication on Z[Q].
inline Representation regular_representation(const Presentation& p, const std::vector<Permutation>& perms,
                                             std::size_t bound = default_quotient_bound()) {
  if (perms.size() != p.ngens()) throw AlgebraError("need one permutation per generator");
  const std::size_t d = perms.empty() ? 1 : perms[0].size();
  for (const auto& q : perms) {
    std::vector<bool> hit(d, false);
    if (q.size() != d) throw AlgebraError("permutations act on different sets");
    for (auto k : q) {
      if (k >= d || hit[k]) throw AlgebraError("not a permutation");
      hit[k] = true;
    }
  }
  Permutation id(d);
  std::iota(id.begin(), id.end(), 0);
  for (const auto& r : p.relators()) {
    Permutation acc = id;
    for (int x : r) {
      const auto& g = perms[static_cast<std::size_t>(std::abs(x)) - 1];
      acc = perm_compose(acc, x > 0 ? g : perm_inverse(g));
    }
    if (acc != id) throw AlgebraError("permutation images do not satisfy the relators");
  }
  std::map<Permutation, std::size_t> index{{id, 0}};
  std::vector<Permutation> elems{id};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : perms) {
      Permutation h = perm_compose(g, elems[head]);
      if (!index.count(h)) {
        if (elems.size() >= bound) throw AlgebraError("quotient too large");
        index.emplace(h, elems.size());
        elems.push_back(std::move(h));
      }
    }
  }
  const std::size_t order = elems.size();
  std::vector<RatMatrix> imgs;
  for (const auto& g : perms) {
    RatMatrix m{order, std::vector<Rational>(order * order, Rational(0))};
    for (std::size_t q = 0; q < order; ++q) m(index.at(perm_compose(g, elems[q])), q) = 1;
    imgs.push_back(std::move(m));
  }
  return {CoefficientRing::integers(), order, std::move(imgs)};
}

}  // namespace troplex

#endif  // TROPLEX_FPGROUP_HPP
