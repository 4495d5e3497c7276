#ifndef TROPLEX_LAURENT_HPP
#define TROPLEX_LAURENT_HPP

// Multivariate Laurent polynomials over Z, Q or F_p.

#include "troplex/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace troplex {

using Exponent = std::int64_t;
using Monomial = std::vector<Exponent>;
/// A rational point of R^n, read as a weight vector or as a character.
using Covector = std::vector<Rational>;

/// Term order: compare exponents starting from the last variable.  This is
/// the order used for printing, equality and leading terms.
struct ColexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw AlgebraError("exponent overflow");
  return r;
}

inline Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) throw AlgebraError("exponent overflow");
  return r;
}

inline Monomial mono_add(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

inline Monomial mono_neg(const Monomial& a) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], -1);
  return r;
}

/// u . w for an integer exponent vector and a rational covector.
inline Rational pairing(const Monomial& u, const Covector& w) {
  Rational s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s += Rational(static_cast<long>(u[i])) * w[i];
  return s;
}

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational, ColexLess>;

  LaurentPoly(CoefficientRing ring, std::size_t nvars) : ring_(ring), nvars_(nvars) {}

  static LaurentPoly zero(CoefficientRing ring, std::size_t n) { return {ring, n}; }
  static LaurentPoly constant(CoefficientRing ring, std::size_t n, const Rational& c) {
    return monomial(ring, n, Monomial(n, 0), c);
  }
  static LaurentPoly one(CoefficientRing ring, std::size_t n) { return constant(ring, n, Rational(1)); }
  static LaurentPoly monomial(CoefficientRing ring, std::size_t n, Monomial exps, const Rational& c = Rational(1)) {
    if (exps.size() != n) throw AlgebraError("monomial length does not match variable count");
    LaurentPoly f(ring, n);
    f.add_term(std::move(exps), c);
    return f;
  }
  /// The variable t_{i+1} (0-based index i).
  static LaurentPoly variable(CoefficientRing ring, std::size_t n, std::size_t i) {
    Monomial e(n, 0);
    e.at(i) = 1;
    return monomial(ring, n, std::move(e));
  }

  const CoefficientRing& ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                                                 terms_.begin()->first.end(),
                                                                 [](Exponent e) { return e == 0; }));
  }
  /// Constant coefficient (0 if absent).
  Rational constant_term() const {
    auto it = terms_.find(Monomial(nvars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(Monomial m, const Rational& c) {
    if (m.size() != nvars_) throw AlgebraError("monomial length does not match variable count");
    Rational v = ring_.normalize(c);
    if (v == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), v);
    if (!inserted) {
      it->second = ring_.add(it->second, v);
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Largest term in the colex order.
  std::pair<Monomial, Rational> leading_term() const {
    if (is_zero()) throw AlgebraError("leading term of zero");
    return *terms_.rbegin();
  }
  /// Smallest term in the colex order.
  std::pair<Monomial, Rational> trailing_term() const {
    if (is_zero()) throw AlgebraError("trailing term of zero");
    return *terms_.begin();
  }

  Monomial min_exponents() const {
    if (is_zero()) throw AlgebraError("exponent bounds of zero");
    Monomial m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
  }
  Monomial max_exponents() const {
    if (is_zero()) throw AlgebraError("exponent bounds of zero");
    Monomial m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
    return m;
  }
  bool involves(std::size_t i) const {
    for (const auto& [e, c] : terms_)
      if (e[i] != 0) return true;
    return false;
  }

  LaurentPoly shifted(const Monomial& by) const {
    LaurentPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(mono_add(e, by), c);
    return r;
  }
  LaurentPoly scaled(const Rational& s) const {
    LaurentPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, ring_.mul(c, s));
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, ring_.neg(c));
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const { return scaled(Rational(-1)); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check(b);
    LaurentPoly r(a.ring_, a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(mono_add(ea, eb), a.ring_.mul(ca, cb));
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly pow(unsigned long k) const {
    LaurentPoly r = one(ring_, nvars_), base = *this;
    while (k) {
      if (k & 1) r *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return r;
  }

  bool operator==(const LaurentPoly& o) const {
    return ring_ == o.ring_ && nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  /// Partial derivative in variable i.
  LaurentPoly derivative(std::size_t i) const {
    LaurentPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Monomial m = e;
      m[i] -= 1;
      r.add_term(std::move(m), ring_.mul(c, Rational(static_cast<long>(e[i]))));
    }
    return r;
  }

  /// Value at a point with nonzero coordinates, computed in the coefficient ring.
  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw AlgebraError("evaluation point has wrong length");
    std::vector<Rational> pt(point.size()), inv(point.size());
    for (std::size_t i = 0; i < nvars_; ++i) {
      pt[i] = ring_.is_integers() ? point[i] : ring_.normalize(point[i]);
    }
    Rational s(0);
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (pt[i] == 0) throw AlgebraError("evaluation at a zero coordinate");
        Rational b = e[i] > 0 ? pt[i] : (ring_.is_prime_field() ? ring_.inverse(pt[i]) : Rational(1) / pt[i]);
        Exponent k = e[i] > 0 ? e[i] : -e[i];
        Rational pw(1);
        for (Exponent j = 0; j < k; ++j) pw = ring_.is_prime_field() ? ring_.mul(pw, b) : Rational(pw * b);
        term = ring_.is_prime_field() ? ring_.mul(term, pw) : Rational(term * pw);
      }
      s += term;
    }
    s.canonicalize();
    // Over Z a negative exponent may leave Z; report the rational value.
    return ring_.is_prime_field() ? ring_.normalize(s) : s;
  }

  /// Text form, e.g. "1 - 2*t1 + t1^2 - 3*t2^2".
  std::string str(const std::vector<std::string>& names = {}) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += i < names.size() ? names[i] : "t" + std::to_string(i + 1);
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        os << to_string(a);
      else if (a == 1)
        os << mono;
      else
        os << to_string(a) << "*" << mono;
    }
    return os.str();
  }

 private:
  void check(const LaurentPoly& o) const {
    if (!(ring_ == o.ring_)) throw AlgebraError("ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
    if (nvars_ != o.nvars_) throw AlgebraError("variable count mismatch");
  }

  CoefficientRing ring_;
  std::size_t nvars_;
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.str(); }

/// Moves every coefficient into another ring (Z -> Q, Z or Q -> F_p, ...).
inline LaurentPoly change_ring(const LaurentPoly& f, CoefficientRing target) {
  LaurentPoly r(target, f.nvars());
  for (const auto& [e, c] : f.terms()) r.add_term(e, target.normalize(c));
  return r;
}

/// Termwise reduction of an integral (or p-integral rational) polynomial mod p.
inline LaurentPoly reduce_mod_p(const LaurentPoly& f, std::uint64_t p) {
  if (f.ring().is_prime_field()) throw AlgebraError("reduce_mod_p expects coefficients in Z or Q");
  return change_ring(f, CoefficientRing::prime_field(p));
}

/// Single term with a unit coefficient.
inline bool is_unit(const LaurentPoly& f) {
  return f.num_terms() == 1 && f.ring().is_unit(f.terms().begin()->second);
}

/// f times the monomial that makes every minimal exponent zero.
inline LaurentPoly clear_monomial(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  return f.shifted(mono_neg(f.min_exponents()));
}

/// Fixed representative of f's class modulo units: minimal exponents zero,
/// colex-least coefficient 1 over a field and positive over Z.
inline LaurentPoly canonical_associate(const LaurentPoly& f) {
  if (f.is_zero()) throw AlgebraError("zero has no canonical associate");
  LaurentPoly g = clear_monomial(f);
  const Rational& c = g.trailing_term().second;
  if (f.ring().is_integers()) return c < 0 ? -g : g;
  return g.scaled(f.ring().inverse(c));
}

inline bool are_associates(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return canonical_associate(f) == canonical_associate(g);
}

namespace detail {

// Exact division of polynomials (no negative exponents) by leading terms.
inline std::optional<LaurentPoly> poly_divide(LaurentPoly r, const LaurentPoly& g) {
  if (g.is_zero()) throw AlgebraError("division by zero polynomial");
  const auto& ring = g.ring();
  LaurentPoly q(ring, g.nvars());
  auto [mg, cg] = g.leading_term();
  while (!r.is_zero()) {
    auto [mr, cr] = r.leading_term();
    Monomial d(mr.size());
    for (std::size_t i = 0; i < mr.size(); ++i) {
      d[i] = mr[i] - mg[i];
      if (d[i] < 0) return std::nullopt;
    }
    if (!ring.divides(cg, cr)) return std::nullopt;
    Rational c = ring.divexact(cr, cg);
    LaurentPoly t = LaurentPoly::monomial(ring, g.nvars(), d, c);
    q += t;
    r -= t * g;
  }
  return q;
}

// Polynomials in x_k with coefficients free of x_k, dense by degree.
using UPoly = std::vector<LaurentPoly>;

inline UPoly to_univariate(const LaurentPoly& f, std::size_t k) {
  UPoly u;
  for (const auto& [e, c] : f.terms()) {
    auto d = static_cast<std::size_t>(e[k]);
    while (u.size() <= d) u.push_back(LaurentPoly::zero(f.ring(), f.nvars()));
    Monomial m = e;
    m[k] = 0;
    u[d].add_term(std::move(m), c);
  }
  return u;
}

inline LaurentPoly from_univariate(const UPoly& u, std::size_t k, CoefficientRing ring, std::size_t n) {
  LaurentPoly f(ring, n);
  for (std::size_t d = 0; d < u.size(); ++d) {
    for (const auto& [e, c] : u[d].terms()) {
      Monomial m = e;
      m[k] = static_cast<Exponent>(d);
      f.add_term(std::move(m), c);
    }
  }
  return f;
}

inline void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

inline LaurentPoly divexact_or_throw(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = poly_divide(a, b);
  if (!q) throw AlgebraError("inexact polynomial division");
  return *q;
}

// lc(B)^(deg A - deg B + 1) * A mod B.
inline UPoly pseudo_remainder(UPoly r, const UPoly& b) {
  std::size_t da = r.size() - 1, db = b.size() - 1;
  const LaurentPoly& lb = b.back();
  for (std::size_t i = 0; i + db <= da; ++i) {
    std::size_t target = da - i;
    LaurentPoly c = target < r.size() ? r[target] : LaurentPoly::zero(lb.ring(), lb.nvars());
    for (auto& x : r) x = x * lb;
    if (!c.is_zero()) {
      std::size_t shift = target - db;
      for (std::size_t j = 0; j <= db; ++j) r[j + shift] -= c * b[j];
    }
  }
  trim(r);
  return r;
}

inline LaurentPoly poly_gcd(const LaurentPoly& f, const LaurentPoly& g, int k);

inline LaurentPoly content_of(const UPoly& u, int k) {
  LaurentPoly acc = LaurentPoly::zero(u.front().ring(), u.front().nvars());
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    acc = poly_gcd(acc, c, k);
    // Monomials are not units in the polynomial ring, only constants are.
    if (acc.is_constant() && acc.ring().is_unit(acc.constant_term())) break;
  }
  return acc;
}

// gcd of polynomials in the variables x_0..x_k (k = -1: constants).
inline LaurentPoly poly_gcd(const LaurentPoly& f, const LaurentPoly& g, int k) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  const auto& ring = f.ring();
  std::size_t n = f.nvars();
  if (k < 0) return LaurentPoly::constant(ring, n, ring.gcd(f.constant_term(), g.constant_term()));
  auto K = static_cast<std::size_t>(k);
  if (!f.involves(K) && !g.involves(K)) return poly_gcd(f, g, k - 1);

  UPoly a = to_univariate(f, K), b = to_univariate(g, K);
  LaurentPoly ca = content_of(a, k - 1), cb = content_of(b, k - 1);
  LaurentPoly d = poly_gcd(ca, cb, k - 1);
  for (auto& x : a) x = divexact_or_throw(x, ca);
  for (auto& x : b) x = divexact_or_throw(x, cb);
  if (a.size() < b.size()) std::swap(a, b);

  // Subresultant remainder sequence over the coefficient domain.
  LaurentPoly one = LaurentPoly::one(ring, n);
  LaurentPoly gg = one, h = one;
  while (true) {
    if (b.size() == 1) {
      b = UPoly{one};
      break;
    }
    std::size_t delta = a.size() - b.size();
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (r.size() == 1) {
      b = UPoly{one};
      break;
    }
    a = b;
    LaurentPoly den = gg * h.pow(delta);
    for (auto& x : r) x = divexact_or_throw(x, den);
    b = std::move(r);
    gg = a.back();
    if (delta > 0) h = divexact_or_throw(gg.pow(delta), h.pow(delta - 1));
  }
  LaurentPoly cbb = content_of(b, k - 1);
  for (auto& x : b) x = divexact_or_throw(x, cbb);
  return d * from_univariate(b, K, ring, n);
}

}  // namespace detail

/// Exact quotient f / g in the Laurent ring; throws when g does not divide f.
inline LaurentPoly divexact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw AlgebraError("division by zero polynomial");
  if (f.is_zero()) return f;
  Monomial mf = f.min_exponents(), mg = g.min_exponents();
  auto q = detail::poly_divide(f.shifted(mono_neg(mf)), g.shifted(mono_neg(mg)));
  if (!q) throw AlgebraError("inexact division: (" + g.str() + ") does not divide (" + f.str() + ")");
  Monomial s(f.nvars());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = mf[i] - mg[i];
  return q->shifted(s);
}

/// Whether g divides f in the Laurent ring.
inline bool divides(const LaurentPoly& g, const LaurentPoly& f) {
  if (g.is_zero()) return f.is_zero();
  if (f.is_zero()) return true;
  return detail::poly_divide(clear_monomial(f), clear_monomial(g)).has_value();
}

/// gcd in the Laurent ring, as a canonical associate.
inline LaurentPoly laurent_gcd(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() && g.is_zero()) throw AlgebraError("gcd(0, 0) is undefined");
  if (!(f.ring() == g.ring()) || f.nvars() != g.nvars()) throw AlgebraError("gcd operands differ in ring or variables");
  if (f.is_zero()) return canonical_associate(g);
  if (g.is_zero()) return canonical_associate(f);
  return canonical_associate(
      detail::poly_gcd(clear_monomial(f), clear_monomial(g), static_cast<int>(f.nvars()) - 1));
}

/// Running gcd of a list, stopping early once a unit is reached.  Returns
/// std::nullopt when every element is zero.
inline std::optional<LaurentPoly> gcd_of(const std::vector<LaurentPoly>& fs) {
  std::optional<LaurentPoly> acc;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    acc = acc ? laurent_gcd(*acc, f) : canonical_associate(f);
    if (is_unit(*acc)) break;
  }
  return acc;
}

/// Integer content (gcd of coefficients) of a polynomial over Z.
inline Integer content(const LaurentPoly& f) {
  if (!f.ring().is_integers()) throw AlgebraError("content is defined over Z only");
  Integer g(0);
  for (const auto& [e, c] : f.terms()) g = gcd_int(g, c.get_num());
  return g;
}

namespace detail {

inline LaurentPoly radical_poly(const LaurentPoly& f);

inline LaurentPoly pth_root(const LaurentPoly& f, std::uint64_t p) {
  LaurentPoly r(f.ring(), f.nvars());
  auto pp = static_cast<Exponent>(p);
  for (const auto& [e, c] : f.terms()) {
    Monomial m = e;
    for (auto& x : m) x /= pp;
    r.add_term(std::move(m), c);  // a^p = a in F_p
  }
  return r;
}

// Radical of a polynomial over a field or of a primitive polynomial over Z.
inline LaurentPoly radical_poly(const LaurentPoly& f) {
  if (f.is_constant()) return LaurentPoly::one(f.ring(), f.nvars());
  const int k = static_cast<int>(f.nvars()) - 1;
  LaurentPoly c = f;
  bool all_zero = true;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    LaurentPoly d = f.derivative(i);
    if (d.is_zero()) continue;
    all_zero = false;
    c = poly_gcd(c, d, k);
  }
  if (all_zero) return radical_poly(pth_root(f, f.ring().characteristic()));
  LaurentPoly s = divexact_or_throw(f, c);
  if (f.ring().characteristic() == 0) return s;
  LaurentPoly rc = radical_poly(c);
  return divexact_or_throw(s * rc, poly_gcd(s, rc, k));
}

}  // namespace detail

/// Squarefree part (radical of the principal ideal), as a canonical associate.
/// Over Z the content is replaced by the product of its distinct primes.
inline LaurentPoly squarefree_part(const LaurentPoly& f) {
  if (f.is_zero()) throw AlgebraError("squarefree part of zero");
  LaurentPoly g = canonical_associate(f);
  if (g.ring().is_integers()) {
    Integer c = content(g);
    LaurentPoly prim = g.scaled(Rational(1) / Rational(c));
    Integer rad(1);
    for (auto p : prime_divisors(c)) rad *= static_cast<unsigned long>(p);
    return canonical_associate(detail::radical_poly(prim).scaled(Rational(rad)));
  }
  return canonical_associate(detail::radical_poly(g));
}

/// Terms minimizing v(a_u) + u.w.
inline LaurentPoly initial_form_valued(const LaurentPoly& f, const Covector& w, const Valuation& v) {
  if (f.is_zero()) throw AlgebraError("initial form of zero");
  if (w.size() != f.nvars()) throw AlgebraError("weight vector has wrong length");
  std::optional<Rational> best;
  std::vector<std::pair<Monomial, Rational>> keep;
  for (const auto& [e, c] : f.terms()) {
    Rational val = v.of(f.ring(), c).value() + pairing(e, w);
    if (!best || val < *best) {
      best = val;
      keep.clear();
    }
    if (val == *best) keep.emplace_back(e, c);
  }
  LaurentPoly r(f.ring(), f.nvars());
  for (auto& [e, c] : keep) r.add_term(e, c);
  return r;
}

/// Terms of minimal chi-degree; coefficients play no role in the minimum.
inline LaurentPoly initial_form_chi(const LaurentPoly& f, const Covector& chi) {
  if (f.is_zero()) throw AlgebraError("initial form of zero");
  return initial_form_valued(f, chi, Valuation::trivial());
}

/// Parses expressions such as "(1 - t1)^2 - 3*t2^2" or "t1^-1*t2 + 2/3".
/// Variables are t1..tn unless names are given.  Negative powers are allowed
/// on monomials with unit coefficient only.
class LaurentParser {
 public:
  LaurentParser(CoefficientRing ring, std::size_t nvars, std::vector<std::string> names = {})
      : ring_(ring), n_(nvars), names_(std::move(names)) {}

  LaurentPoly parse(std::string_view text) {
    s_ = text;
    pos_ = 0;
    LaurentPoly f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw AlgebraError("polynomial parse error at " + std::to_string(pos_) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Integer number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }
  LaurentPoly expr() {
    LaurentPoly f = term();
    while (true) {
      if (eat('+'))
        f += term();
      else if (eat('-'))
        f -= term();
      else
        return f;
    }
  }
  LaurentPoly term() {
    LaurentPoly f = unary();
    while (eat('*')) f *= unary();
    return f;
  }
  LaurentPoly unary() {
    if (eat('-')) return -unary();
    return power();
  }
  LaurentPoly power() {
    LaurentPoly base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    Integer k = number();
    if (!k.fits_slong_p()) fail("exponent too large");
    long e = k.get_si();
    if (!neg) return base.pow(static_cast<unsigned long>(e));
    if (!is_unit(base) && !(ring_.is_field() && base.num_terms() == 1)) fail("negative power of a non-monomial");
    auto [m, c] = base.leading_term();
    LaurentPoly inv = LaurentPoly::monomial(ring_, n_, mono_neg(m), ring_.inverse(c));
    return inv.pow(static_cast<unsigned long>(e));
  }
  LaurentPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      LaurentPoly f = expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = number();
      if (eat('/')) return LaurentPoly::constant(ring_, n_, make_rational(num, number()));
      return LaurentPoly::constant(ring_, n_, Rational(num));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    if (name.empty()) fail("expected a term");
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return LaurentPoly::variable(ring_, n_, i);
    if (names_.empty() && name.size() > 1 && name[0] == 't' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
      std::size_t i = std::stoul(name.substr(1));
      if (i >= 1 && i <= n_) return LaurentPoly::variable(ring_, n_, i - 1);
    }
    fail("unknown variable '" + name + "'");
  }

  CoefficientRing ring_;
  std::size_t n_;
  std::vector<std::string> names_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline LaurentPoly parse_laurent(std::string_view text, CoefficientRing ring, std::size_t nvars) {
  return LaurentParser(ring, nvars).parse(text);
}

}  // namespace troplex

#endif  // TROPLEX_LAURENT_HPP
