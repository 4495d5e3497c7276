#ifndef TROPLEX_BNSREPORT_HPP
#define TROPLEX_BNSREPORT_HPP

// Upper bounds for the BNS invariant from tropicalized jump loci, and
// comparison with known Sigma^1 data.

#include "troplex/tropical.hpp"

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace troplex {

/// Where the jump ideals are tropicalized.
struct CoefficientSetting {
  enum class Kind { Z, Trivial, PAdic, Fp };
  Kind kind = Kind::Z;
  std::uint64_t p = 0;

  static CoefficientSetting parse(const std::string& s) {
    if (s == "Z") return {Kind::Z, 0};
    if (s == "trivial") return {Kind::Trivial, 0};
    auto prime_after = [&](std::size_t at) {
      std::uint64_t p = 0;
      try {
        std::size_t used = 0;
        p = std::stoull(s.substr(at), &used);
        if (used != s.size() - at) p = 0;
      } catch (const std::exception&) {
        p = 0;
      }
      if (!is_prime_u64(p)) throw AlgebraError("bad valuation '" + s + "': expected a prime");
      return p;
    };
    if (s.rfind("p-adic:", 0) == 0) return {Kind::PAdic, prime_after(7)};
    if (s.rfind("fp:", 0) == 0) return {Kind::Fp, prime_after(3)};
    throw AlgebraError("unknown valuation '" + s + "' (expected trivial, p-adic:<p>, fp:<p> or Z)");
  }
  std::string str() const {
    switch (kind) {
      case Kind::Z: return "Z";
      case Kind::Trivial: return "trivial";
      case Kind::PAdic: return "p-adic:" + std::to_string(p);
      case Kind::Fp: return "fp:" + std::to_string(p);
    }
    return "?";
  }
  CoefficientRing ring() const {
    switch (kind) {
      case Kind::Z: return CoefficientRing::integers();
      case Kind::Fp: return CoefficientRing::prime_field(p);
      default: return CoefficientRing::rationals();
    }
  }
  Valuation valuation() const { return kind == Kind::PAdic ? Valuation::p_adic(p) : Valuation::trivial(); }
  bool operator==(const CoefficientSetting&) const = default;
};

struct BoundInput {
  std::string name;
  Representation sigma;
  CoefficientSetting setting;
};

/// Tropicalization of one jump ideal through its codimension-one part.
struct DegreeResult {
  int degree = 0;
  std::optional<LaurentPoly> gcd;  // nullopt: the ideal is zero
  std::optional<TropicalComplex> trop;
  SphereArcSet sphere = SphereArcSet::empty(2);
  std::vector<std::string> notes;
};

struct BoundEntry {
  std::string name;
  CoefficientSetting setting;
  Admissibility admissibility;
  std::vector<DegreeResult> degrees;
  SphereArcSet sphere = SphereArcSet::empty(2);
  bool exact = true;
  bool essential = false;  // dropping it enlarges the complement
};

struct BoundReport {
  std::string presentation_id;
  std::size_t nvars = 0;
  std::vector<BoundEntry> entries;  // admissible ones contribute
  std::vector<BoundEntry> excluded;
  SphereArcSet combined = SphereArcSet::empty(2);
  SphereArcSet complement = SphereArcSet::full(2);
  bool vacuous = false;
  bool exact = true;
};

namespace detail {

inline DegreeResult tropicalize_degree(int degree, std::optional<LaurentPoly> g, const CoefficientSetting& s,
                                       std::size_t n) {
  DegreeResult d;
  d.degree = degree;
  d.gcd = g;
  d.sphere = SphereArcSet::empty(n);
  if (!g) {
    d.notes.push_back("zero ideal: every character jumps");
    d.sphere = SphereArcSet::full(n);
    TropicalComplex all;
    all.nvars = n;
    all.setting = s.str();
    all.everything = true;
    d.trop = all;
    return d;
  }
  if (is_unit(*g)) {
    d.notes.push_back("no codimension-one part; zero-dimensional components omitted");
    return d;
  }
  if (n >= 3) {
    d.notes.push_back("not materialized: exact arcs need two variables");
    return d;
  }
  if (s.kind == CoefficientSetting::Kind::Z) {
    d.trop = trop_Z_principal(*g);
  } else {
    d.trop = trop_hypersurface(*g, s.valuation());
    d.trop->setting = s.str();
  }
  d.sphere = sphere_projection(*d.trop);
  d.notes.push_back("codimension-one part only; zero-dimensional components omitted");
  return d;
}

}  // namespace detail

/// Jump ideals J0, J1 of every admissible entry, tropicalized and projected;
/// the bound is the complement of the union.
inline BoundReport assemble_bound(const std::string& id, const Presentation& p, const EpimorphismToFreeAbelian& phi,
                                  const std::vector<BoundInput>& inputs) {
  BoundReport r;
  r.presentation_id = id;
  r.nvars = phi.target_rank;
  const std::size_t n = r.nvars;
  if (n == 0) throw AlgebraError("first Betti number is zero: the character sphere is empty");
  r.combined = SphereArcSet::empty(n);
  for (const auto& in : inputs) {
    BoundEntry e;
    e.name = in.name;
    e.setting = in.setting;
    e.sphere = SphereArcSet::empty(n);
    CoefficientRing ring = in.setting.ring();
    Representation sigma = in.sigma;
    if (in.setting.kind == CoefficientSetting::Kind::Z) {
      if (!sigma.ring().is_integers()) {
        try {
          sigma = change_ring(sigma, ring);
        } catch (const AlgebraError& err) {
          e.admissibility = {false, 0, std::string("needs an integral representation: ") + err.what()};
          r.excluded.push_back(std::move(e));
          continue;
        }
      }
      e.admissibility = {true, 'c', "integral representation: image in GL_r(Z)"};
    } else {
      Representation over = sigma.ring() == ring ? sigma : change_ring(sigma, ring);
      Representation rational = sigma.ring().is_prime_field() ? sigma : change_ring(sigma, CoefficientRing::rationals());
      e.admissibility = in.setting.kind == CoefficientSetting::Kind::PAdic
                            ? novikov_admissible(rational, in.setting.valuation(), default_quotient_bound())
                            : novikov_admissible(over, Valuation::trivial());
      sigma = over;
    }
    if (!e.admissibility.admissible) {
      r.excluded.push_back(std::move(e));
      continue;
    }
    auto mats = alexander_matrices(p, sigma, phi);
    for (int i = 0; i <= 1; ++i) {
      auto d = detail::tropicalize_degree(i, jump_ideal_gcd(mats, sigma.rank(), i), in.setting, n);
      if (!d.gcd || !is_unit(*d.gcd)) {
        if (n >= 3 && d.gcd) e.exact = false;
      }
      e.sphere = e.sphere.unite(d.sphere);
      e.degrees.push_back(std::move(d));
    }
    r.exact = r.exact && e.exact;
    r.combined = r.combined.unite(e.sphere);
    r.entries.push_back(std::move(e));
  }
  r.vacuous = r.entries.empty();
  r.complement = r.combined.complement();
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    SphereArcSet others = SphereArcSet::empty(n);
    for (std::size_t j = 0; j < r.entries.size(); ++j)
      if (j != i) others = others.unite(r.entries[j].sphere);
    r.entries[i].essential = !(others == r.combined);
  }
  return r;
}

/// Known -Sigma^1 for a specific group, used only for comparison.
struct SigmaFixture {
  std::string name;
  std::string citation;
  SphereArcSet minus_sigma = SphereArcSet::empty(2);
};

inline std::vector<SigmaFixture> builtin_fixtures() {
  auto d = [](long x, long y) { return Direction::of(Rational(x), Rational(y)); };
  SigmaFixture brown{"brown_ex54",
                     "K. S. Brown, Trees, valuations, and the Bieri-Neumann-Strebel invariant, Invent. Math. 90 "
                     "(1987); one-relator algorithm applied to the bundled example54 presentation",
                     SphereArcSet::arc(d(1, 0), d(0, 1), false, false)
                         .unite(SphereArcSet::arc(d(0, 1), d(-1, -1), false, false))};
  SigmaFixture z2{"z2", "finitely generated abelian groups have Sigma^1 equal to the whole sphere",
                  SphereArcSet::full(2)};
  SigmaFixture surface{"surface_g2", "closed hyperbolic surface groups have empty Sigma^1",
                       SphereArcSet::empty(4)};
  return {brown, z2, surface};
}

inline SigmaFixture fixture_by_name(const std::string& name) {
  for (auto& f : builtin_fixtures())
    if (f.name == name) return f;
  throw AlgebraError("unknown fixture '" + name + "'");
}

struct Comparison {
  enum class Kind { Equal, BoundWeaker, Violation };
  Kind kind = Kind::Equal;
  SphereArcSet difference = SphereArcSet::empty(2);
  std::string str() const {
    switch (kind) {
      case Kind::Equal: return "Equal";
      case Kind::BoundWeaker: return "BoundWeaker";
      case Kind::Violation: return "Violation";
    }
    return "?";
  }
};

inline Comparison compare_fixture(const SphereArcSet& complement, const SphereArcSet& fixture) {
  if (complement.dim() != fixture.dim()) throw AlgebraError("fixture lives on a sphere of another dimension");
  Comparison c;
  if (complement == fixture) {
    c.difference = SphereArcSet::empty(fixture.dim());
    return c;
  }
  if (fixture.subset_of(complement)) {
    c.kind = Comparison::Kind::BoundWeaker;
    c.difference = complement.minus(fixture);
  } else {
    c.kind = Comparison::Kind::Violation;
    c.difference = fixture.minus(complement);
  }
  return c;
}

inline Comparison compare_fixture(const BoundReport& report, const SigmaFixture& fixture) {
  return compare_fixture(report.complement, fixture.minus_sigma);
}

namespace detail {

inline std::string with_degrees(const SphereArcSet& s) {
  std::ostringstream os;
  os << s.str();
  if (s.dim() != 2 || s.breakpoints().empty()) return os.str();
  os << "  [";
  bool first = true;
  for (const auto& d : s.breakpoints()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", d.degrees());
    os << (first ? "" : ", ") << d.str() << "~" << buf << "deg";
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace detail

inline std::string summary(const BoundReport& r) {
  std::ostringstream os;
  os << "presentation: " << r.presentation_id << "\n";
  for (const auto& e : r.entries) {
    os << "entry " << e.name << " (" << e.setting.str() << "): admissible (" << e.admissibility.condition << ")"
       << (e.essential ? ", essential" : "") << "\n";
    for (const auto& d : e.degrees) {
      os << "  J" << d.degree << ": ";
      if (!d.gcd) {
        os << "0";
      } else {
        os << "gcd " << d.gcd->str();
      }
      os << " -> " << d.sphere.str() << "\n";
    }
  }
  for (const auto& e : r.excluded) os << "excluded " << e.name << " (" << e.setting.str() << "): " << e.admissibility.reason << "\n";
  os << "S(Trop): " << detail::with_degrees(r.combined) << "\n";
  os << "bound: " << (r.vacuous ? "vacuous" : detail::with_degrees(r.complement)) << "\n";
  if (!r.exact) os << "note: some contributions were not materialized; the bound is weaker than computed data allows\n";
  return os.str();
}

}  // namespace troplex

#endif  // TROPLEX_BNSREPORT_HPP
