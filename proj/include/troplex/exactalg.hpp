#ifndef TROPLEX_EXACTALG_HPP
#define TROPLEX_EXACTALG_HPP

// Exact coefficient arithmetic: big integers and rationals (GMP), prime
// fields of word size, and the trivial / p-adic valuations on them.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace troplex {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for violated algebraic preconditions (ring mismatch, inexact
/// division, singular matrices, ...).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw AlgebraError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "7", "-3", "2/9".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw AlgebraError("malformed rational '" + s + "'");
  }
}

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Multiplicity of the prime p in a nonzero integer.
inline long multiplicity(Integer a, std::uint64_t p) {
  if (a == 0) throw AlgebraError("multiplicity of zero");
  long k = 0;
  Integer pp(static_cast<unsigned long>(p));
  while (mpz_divisible_p(a.get_mpz_t(), pp.get_mpz_t())) {
    a /= pp;
    ++k;
  }
  return k;
}

/// Distinct prime divisors of a nonzero integer, by trial division.
inline std::vector<std::uint64_t> prime_divisors(Integer a) {
  std::vector<std::uint64_t> out;
  a = abs_int(a);
  if (a == 0) throw AlgebraError("prime divisors of zero");
  for (unsigned long d = 2; Integer(d) * d <= a; ++d) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), d)) {
      out.push_back(d);
      while (mpz_divisible_ui_p(a.get_mpz_t(), d)) a /= d;
    }
  }
  if (a > 1) {
    if (!a.fits_ulong_p()) throw AlgebraError("prime factor exceeds word size");
    out.push_back(a.get_ui());
  }
  return out;
}

/// The ring of coefficients: Z, Q, or F_p for a word-sized prime p.
///
/// Elements of every ring are carried as GMP rationals: integers have
/// denominator 1 and F_p elements are canonical residues in [0, p).
struct CoefficientRing {
  enum class Kind { Integers, Rationals, PrimeField };

  Kind kind = Kind::Integers;
  std::uint64_t p = 0;

  static CoefficientRing integers() { return {Kind::Integers, 0}; }
  static CoefficientRing rationals() { return {Kind::Rationals, 0}; }
  static CoefficientRing prime_field(std::uint64_t prime) {
    if (!is_prime_u64(prime))
      throw AlgebraError("F_p requires a prime, got " + std::to_string(prime));
    return {Kind::PrimeField, prime};
  }

  /// Accepts "Z", "Q", "fp:<p>" (and "q" / "z" lower case).
  static CoefficientRing parse(std::string_view tag) {
    if (tag == "Z" || tag == "z") return integers();
    if (tag == "Q" || tag == "q") return rationals();
    if (tag.substr(0, 3) == "fp:") {
      std::string digits(tag.substr(3));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw AlgebraError("malformed ring tag '" + std::string(tag) + "'");
      return prime_field(std::stoull(digits));
    }
    throw AlgebraError("unknown ring tag '" + std::string(tag) + "'");
  }

  bool operator==(const CoefficientRing&) const = default;

  bool is_field() const { return kind != Kind::Integers; }
  bool is_integers() const { return kind == Kind::Integers; }
  bool is_rationals() const { return kind == Kind::Rationals; }
  bool is_prime_field() const { return kind == Kind::PrimeField; }
  /// Characteristic (0 for Z and Q).
  std::uint64_t characteristic() const { return is_prime_field() ? p : 0; }

  /// Display name: "Z", "Q", "F_p".
  std::string name() const {
    switch (kind) {
      case Kind::Integers: return "Z";
      case Kind::Rationals: return "Q";
      case Kind::PrimeField: return "F_" + std::to_string(p);
    }
    return "?";
  }
  /// Round-trippable tag: "Z", "Q", "fp:p".
  std::string tag() const {
    return is_prime_field() ? "fp:" + std::to_string(p) : name();
  }

  /// Brings an arbitrary rational into this ring's canonical representation.
  Rational normalize(const Rational& a) const {
    switch (kind) {
      case Kind::Integers:
        if (a.get_den() != 1) throw AlgebraError("non-integer " + to_string(a) + " in Z");
        return a;
      case Kind::Rationals: return a;
      case Kind::PrimeField: {
        Integer m(static_cast<unsigned long>(p));
        Integer num = a.get_num() % m;
        if (num < 0) num += m;
        Integer den = a.get_den() % m;
        if (den == 0) throw AlgebraError("not p-integral: " + to_string(a) + " mod " + std::to_string(p));
        Integer inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
        Integer r = (num * inv) % m;
        return Rational(r);
      }
    }
    return a;
  }

  Rational add(const Rational& a, const Rational& b) const { return reduce(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
  Rational neg(const Rational& a) const { return reduce(-a); }

  bool is_unit(const Rational& a) const {
    if (a == 0) return false;
    if (is_integers()) return a == 1 || a == -1;
    return true;
  }

  Rational inverse(const Rational& a) const {
    if (!is_unit(a)) throw AlgebraError(to_string(a) + " is not a unit in " + name());
    if (is_prime_field()) return normalize(Rational(1) / a);
    return Rational(1) / a;
  }

  /// a / b, required to be exact in this ring.
  Rational divexact(const Rational& a, const Rational& b) const {
    if (b == 0) throw AlgebraError("division by zero");
    if (is_integers()) {
      if (!mpz_divisible_p(a.get_num_mpz_t(), b.get_num_mpz_t()))
        throw AlgebraError("inexact division " + to_string(a) + " / " + to_string(b) + " in Z");
      return Rational(Integer(a.get_num() / b.get_num()));
    }
    return mul(a, inverse(b));
  }

  bool divides(const Rational& b, const Rational& a) const {
    if (b == 0) return a == 0;
    if (is_integers()) return mpz_divisible_p(a.get_num_mpz_t(), b.get_num_mpz_t()) != 0;
    return true;
  }

  /// gcd of two scalars: nonnegative integer gcd over Z, 0 or 1 over a field.
  Rational gcd(const Rational& a, const Rational& b) const {
    if (is_integers()) return Rational(gcd_int(a.get_num(), b.get_num()));
    return (a == 0 && b == 0) ? Rational(0) : Rational(1);
  }

  /// The image of an integer n (e.g. a derivative's exponent factor).
  Rational from_integer(long n) const { return normalize(Rational(n)); }

 private:
  Rational reduce(Rational a) const {
    if (is_prime_field()) {
      a.canonicalize();
      return normalize(a);
    }
    a.canonicalize();
    return a;
  }
};

inline std::ostream& operator<<(std::ostream& os, const CoefficientRing& r) { return os << r.name(); }

/// A single coefficient together with the ring it lives in.
class Scalar {
 public:
  Scalar(CoefficientRing ring, const Rational& value) : ring_(ring), value_(ring.normalize(value)) {}
  Scalar(CoefficientRing ring, long value) : Scalar(ring, Rational(value)) {}

  const CoefficientRing& ring() const { return ring_; }
  const Rational& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return {common(a, b), a.value_ + b.value_}; }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return {common(a, b), a.value_ - b.value_}; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return {common(a, b), a.value_ * b.value_}; }
  Scalar operator-() const { return {ring_, -value_}; }
  bool operator==(const Scalar& o) const { return ring_ == o.ring_ && value_ == o.value_; }

 private:
  static CoefficientRing common(const Scalar& a, const Scalar& b) {
    if (!(a.ring_ == b.ring_)) throw AlgebraError("ring mismatch: " + a.ring_.name() + " vs " + b.ring_.name());
    return a.ring_;
  }

  CoefficientRing ring_;
  Rational value_;
};

/// A valuation value: an exact rational or +infinity (the valuation of 0).
class ValuationValue {
 public:
  static ValuationValue infinity() { return ValuationValue(true, Rational(0)); }
  static ValuationValue finite(const Rational& v) { return ValuationValue(false, v); }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const {
    if (infinite_) throw AlgebraError("infinite valuation has no finite value");
    return value_;
  }

  friend ValuationValue operator+(const ValuationValue& a, const ValuationValue& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return finite(a.value_ + b.value_);
  }
  bool operator==(const ValuationValue& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }
  std::strong_ordering operator<=>(const ValuationValue& o) const {
    if (infinite_ || o.infinite_) return infinite_ <=> o.infinite_;
    int c = cmp(value_, o.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  std::string str() const { return infinite_ ? "inf" : to_string(value_); }

 private:
  ValuationValue(bool inf, Rational v) : infinite_(inf), value_(std::move(v)) {}
  bool infinite_;
  Rational value_;
};

/// Trivial or p-adic valuation.
struct Valuation {
  enum class Kind { Trivial, PAdic };
  Kind kind = Kind::Trivial;
  std::uint64_t p = 0;

  static Valuation trivial() { return {Kind::Trivial, 0}; }
  static Valuation p_adic(std::uint64_t prime) {
    if (!is_prime_u64(prime)) throw AlgebraError("p-adic valuation requires a prime");
    return {Kind::PAdic, prime};
  }
  bool is_trivial() const { return kind == Kind::Trivial; }
  bool operator==(const Valuation&) const = default;
  std::string name() const { return is_trivial() ? "trivial" : std::to_string(p) + "-adic"; }

  /// Whether this valuation makes sense on the given coefficient ring.
  bool compatible_with(const CoefficientRing& ring) const { return is_trivial() || !ring.is_prime_field(); }

  /// Valuation of a ring element given in its canonical rational form.
  ValuationValue of(const CoefficientRing& ring, const Rational& a) const {
    if (!compatible_with(ring)) throw AlgebraError("valuation/ring mismatch");
    if (a == 0) return ValuationValue::infinity();
    if (is_trivial()) return ValuationValue::finite(Rational(0));
    return ValuationValue::finite(Rational(multiplicity(a.get_num(), p) - multiplicity(a.get_den(), p)));
  }
};

inline ValuationValue valuate(const Valuation& v, const Scalar& a) { return v.of(a.ring(), a.value()); }

/// Reduction Z -> F_p or (p-integral) Q -> F_p.
inline Scalar reduce_scalar(const Scalar& a, std::uint64_t p) {
  if (a.ring().is_prime_field()) throw AlgebraError("reduce_scalar expects an element of Z or Q");
  auto fp = CoefficientRing::prime_field(p);
  if (mpz_divisible_ui_p(a.value().get_den_mpz_t(), p)) throw AlgebraError("not p-integral");
  return Scalar(fp, a.value());
}

}  // namespace troplex

#endif  // TROPLEX_EXACTALG_HPP
