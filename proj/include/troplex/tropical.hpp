#ifndef TROPLEX_TROPICAL_HPP
#define TROPLEX_TROPICAL_HPP

// Tropical hypersurfaces in one or two variables, Trop over Z for principal
// ideals, the prime-union assembly and projection to the character sphere.

#include "troplex/jumploci.hpp"
#include "troplex/sphere.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace troplex {

struct TropCell {
  enum class Kind { Vertex, Segment, Ray, Line, Cone2 };
  Kind kind = Kind::Vertex;
  Covector base;
  // Segment: {end - base}; Ray: {dir}; Line: {dir}; Cone2: {d1, d2}, the
  // counterclockwise sweep from d1 to d2.
  std::vector<Covector> dirs;
  Integer weight = 1;
  std::string label;
};

inline std::string kind_name(TropCell::Kind k) {
  switch (k) {
    case TropCell::Kind::Vertex: return "vertex";
    case TropCell::Kind::Segment: return "segment";
    case TropCell::Kind::Ray: return "ray";
    case TropCell::Kind::Line: return "line";
    case TropCell::Kind::Cone2: return "cone2";
  }
  return "?";
}

struct TropicalComplex {
  std::size_t nvars = 0;
  std::string setting;  // "trivial", "p-adic:3", "fp:3", "Z"
  std::vector<TropCell> cells;
  bool everything = false;  // the zero polynomial: all of R^n
};

namespace detail {

inline Rational dotq(const Covector& a, const Covector& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline Covector axpy(const Covector& base, const Rational& s, const Covector& d) {
  Covector r = base;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * d[i];
  return r;
}
inline Covector neg(Covector v) {
  for (auto& x : v) x = -x;
  return v;
}
inline Covector primitive(const Covector& v) {
  if (v.size() == 1) return {Rational(sgn(v[0]))};
  Direction d = Direction::of(v);
  return d.vec();
}
inline Rational cross2(const Covector& a, const Covector& b) { return a[0] * b[1] - a[1] * b[0]; }
inline bool is_zero_vec(const Covector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

struct Term {
  Monomial u;
  Rational h;
};

inline std::vector<Term> lifted_terms(const LaurentPoly& f, const Valuation& v) {
  std::vector<Term> ts;
  for (const auto& [e, c] : f.terms()) ts.push_back({e, v.of(f.ring(), c).value()});
  return ts;
}

inline Covector to_q(const Monomial& u) {
  Covector r;
  for (auto x : u) r.emplace_back(static_cast<long>(x));
  return r;
}

// Interval on a line, open ends as nullopt.
struct Piece {
  Covector normal;  // primitive
  Rational offset;  // normal . w = offset
  Covector base, dir;
  std::optional<Rational> lo, hi;
  Integer weight;
};

inline bool less_lo(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return bool(b);
  if (!b) return false;
  return *a < *b;
}

}  // namespace detail

/// w lies on the tropical hypersurface iff the initial form has two or more terms.
inline bool trop_contains(const LaurentPoly& f, const Valuation& v, const Covector& w) {
  return initial_form_valued(f, w, v).num_terms() >= 2;
}

/// Membership in Trop over Z of the principal ideal (f): the initial form
/// is not a unit of the group ring.
inline bool trop_Z_contains(const LaurentPoly& f, const Covector& chi) {
  if (!f.ring().is_integers()) throw AlgebraError("Trop over Z needs integer coefficients");
  return !is_unit(initial_form_chi(f, chi));
}

inline bool cell_contains(const TropCell& c, const Covector& w) {
  using namespace detail;
  const std::size_t n = w.size();
  Covector x = w;
  for (std::size_t i = 0; i < n; ++i) x[i] -= c.base[i];
  auto on_line = [&](const Covector& d, std::optional<Rational>& s) {
    // x = s d for some s
    if (n == 1) {
      s = d[0] == 0 ? Rational(0) : x[0] / d[0];
      return d[0] != 0 || x[0] == 0;
    }
    if (cross2(d, x) != 0) return false;
    s = dotq(x, d) / dotq(d, d);
    return true;
  };
  std::optional<Rational> s;
  switch (c.kind) {
    case TropCell::Kind::Vertex: return is_zero_vec(x);
    case TropCell::Kind::Segment: return on_line(c.dirs[0], s) && *s >= 0 && *s <= 1;
    case TropCell::Kind::Ray: return on_line(c.dirs[0], s) && *s >= 0;
    case TropCell::Kind::Line: return on_line(c.dirs[0], s);
    case TropCell::Kind::Cone2: {
      const Covector &a = c.dirs[0], &b = c.dirs[1];
      if (cross2(a, b) == 0) return cross2(a, x) >= 0;  // half-plane
      return cross2(a, x) >= 0 && cross2(x, b) >= 0;
    }
  }
  return false;
}

inline bool complex_contains(const TropicalComplex& t, const Covector& w) {
  if (t.everything) return true;
  for (const auto& c : t.cells)
    if (cell_contains(c, w)) return true;
  return false;
}

/// A point in the relative interior of a cell.
inline Covector interior_point(const TropCell& c) {
  using namespace detail;
  switch (c.kind) {
    case TropCell::Kind::Vertex: return c.base;
    case TropCell::Kind::Segment: return axpy(c.base, Rational(1, 2), c.dirs[0]);
    case TropCell::Kind::Ray:
    case TropCell::Kind::Line: return axpy(c.base, Rational(1), c.dirs[0]);
    case TropCell::Kind::Cone2: {
      Covector m = c.dirs[0];
      if (cross2(c.dirs[0], c.dirs[1]) == 0) {
        m = {-c.dirs[0][1], c.dirs[0][0]};
      } else {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += c.dirs[1][i];
      }
      return axpy(c.base, Rational(1), m);
    }
  }
  return c.base;
}

/// Corner locus of f under v, as closed cells (exact for one or two variables).
inline TropicalComplex trop_hypersurface(const LaurentPoly& f, const Valuation& v) {
  using namespace detail;
  if (f.is_zero()) throw AlgebraError("tropical hypersurface of the zero polynomial");
  const std::size_t n = f.nvars();
  if (n >= 3) throw AlgebraError("exact tropicalization needs at most two variables; use trop_contains oracle");
  TropicalComplex t;
  t.nvars = n;
  t.setting = v.is_trivial() ? (f.ring().is_prime_field() ? "fp:" + std::to_string(f.ring().p) : "trivial")
                             : "p-adic:" + std::to_string(v.p);
  auto ts = lifted_terms(f, v);
  if (ts.size() < 2 || n == 0) return t;
  auto label_of = [&](const Covector& w) { return "init: " + initial_form_valued(f, w, v).str(); };

  if (n == 1) {
    std::vector<Rational> pts;
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        Rational w = (ts[j].h - ts[i].h) / Rational(static_cast<long>(ts[i].u[0] - ts[j].u[0]));
        if (trop_contains(f, v, {w}) && std::find(pts.begin(), pts.end(), w) == pts.end()) pts.push_back(w);
      }
    std::sort(pts.begin(), pts.end());
    for (const auto& w : pts) {
      // weight: length of the lower edge dual to w
      auto in = initial_form_valued(f, {w}, v);
      Integer len(static_cast<long>(in.max_exponents()[0] - in.min_exponents()[0]));
      t.cells.push_back({TropCell::Kind::Vertex, {w}, {}, len, label_of({w})});
    }
    return t;
  }

  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      Covector d = to_q(ts[i].u);
      for (std::size_t k = 0; k < 2; ++k) d[k] -= Rational(static_cast<long>(ts[j].u[k]));
      Integer len = gcd_int(d[0].get_num(), d[1].get_num());
      // normal . w = h_j - h_i, normalized so the normal is primitive with a positive leading entry
      Rational c = (ts[j].h - ts[i].h) / Rational(len);
      Covector nrm{d[0] / Rational(len), d[1] / Rational(len)};
      if (nrm[0] < 0 || (nrm[0] == 0 && nrm[1] < 0)) {
        nrm = neg(nrm);
        c = -c;
      }
      Covector dir{-nrm[1], nrm[0]};
      Covector base = nrm[0] != 0 ? Covector{c / nrm[0], Rational(0)} : Covector{Rational(0), c / nrm[1]};
      std::optional<Rational> lo, hi;
      bool empty = false;
      for (std::size_t k = 0; k < ts.size() && !empty; ++k) {
        if (k == i || k == j) continue;
        Covector dv = to_q(ts[k].u);
        for (std::size_t q = 0; q < 2; ++q) dv[q] -= Rational(static_cast<long>(ts[i].u[q]));
        Rational alpha = ts[k].h - ts[i].h + dotq(dv, base), beta = dotq(dv, dir);
        if (beta == 0) {
          empty = alpha < 0;
        } else if (beta > 0) {
          Rational s = -alpha / beta;
          if (!lo || s > *lo) lo = s;
        } else {
          Rational s = -alpha / beta;
          if (!hi || s < *hi) hi = s;
        }
      }
      if (empty || (lo && hi && *lo > *hi)) continue;
      pieces.push_back({nrm, c, base, dir, lo, hi, len});
    }

  // identical pieces keep the largest weight (collinear terms on one edge)
  std::vector<Piece> uniq;
  for (auto& p : pieces) {
    bool found = false;
    for (auto& q : uniq)
      if (q.normal == p.normal && q.offset == p.offset && q.lo == p.lo && q.hi == p.hi) {
        if (p.weight > q.weight) q.weight = p.weight;
        found = true;
      }
    if (!found) uniq.push_back(p);
  }
  // merge touching intervals on one line with equal weights
  std::sort(uniq.begin(), uniq.end(), [](const Piece& a, const Piece& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    if (a.offset != b.offset) return a.offset < b.offset;
    if (a.weight != b.weight) return a.weight < b.weight;
    return less_lo(a.lo, b.lo);
  });
  std::vector<Piece> merged;
  for (auto& p : uniq) {
    if (!merged.empty()) {
      Piece& q = merged.back();
      bool same = q.normal == p.normal && q.offset == p.offset && q.weight == p.weight;
      bool touch = !q.hi || !p.lo || *p.lo <= *q.hi;
      bool is_point = p.lo && p.hi && *p.lo == *p.hi;
      bool q_point = q.lo && q.hi && *q.lo == *q.hi;
      if (same && touch && !is_point && !q_point) {
        if (!p.hi || (q.hi && *p.hi > *q.hi)) q.hi = p.hi;
        continue;
      }
    }
    merged.push_back(p);
  }
  // emit; isolated points survive only if no other piece covers them
  std::vector<TropCell> edges, points;
  for (const auto& p : merged) {
    TropCell cell;
    cell.weight = p.weight;
    if (p.lo && p.hi && *p.lo == *p.hi) {
      cell.kind = TropCell::Kind::Vertex;
      cell.base = axpy(p.base, *p.lo, p.dir);
      points.push_back(cell);
      continue;
    }
    if (p.lo && p.hi) {
      cell.kind = TropCell::Kind::Segment;
      cell.base = axpy(p.base, *p.lo, p.dir);
      cell.dirs = {axpy(Covector{Rational(0), Rational(0)}, *p.hi - *p.lo, p.dir)};
    } else if (p.lo) {
      cell.kind = TropCell::Kind::Ray;
      cell.base = axpy(p.base, *p.lo, p.dir);
      cell.dirs = {p.dir};
    } else if (p.hi) {
      cell.kind = TropCell::Kind::Ray;
      cell.base = axpy(p.base, *p.hi, p.dir);
      cell.dirs = {neg(p.dir)};
    } else {
      cell.kind = TropCell::Kind::Line;
      cell.base = p.base;
      cell.dirs = {p.dir};
    }
    edges.push_back(cell);
  }
  for (auto& pt : points) {
    bool covered = false;
    for (const auto& e : edges) covered = covered || cell_contains(e, pt.base);
    if (!covered) edges.push_back(pt);
  }
  for (auto& c : edges) c.label = label_of(interior_point(c));
  t.cells = std::move(edges);
  return t;
}

/// Every vertex of a planar tropical curve has at least three incident
/// edges and the weighted primitive directions sum to zero.
inline bool check_balancing(const TropicalComplex& t) {
  using namespace detail;
  if (t.nvars != 2) return true;
  std::vector<Covector> verts;
  for (const auto& c : t.cells) {
    if (c.kind == TropCell::Kind::Ray || c.kind == TropCell::Kind::Segment) {
      verts.push_back(c.base);
      if (c.kind == TropCell::Kind::Segment) verts.push_back(axpy(c.base, Rational(1), c.dirs[0]));
    }
  }
  for (const auto& v : verts) {
    Covector sum{Rational(0), Rational(0)};
    int count = 0;
    auto add = [&](const Covector& d, const Integer& w) {
      Covector p = primitive(d);
      sum[0] += p[0] * Rational(w);
      sum[1] += p[1] * Rational(w);
      ++count;
    };
    for (const auto& c : t.cells) {
      if (c.kind == TropCell::Kind::Vertex || c.kind == TropCell::Kind::Cone2 || !cell_contains(c, v)) continue;
      Covector end = c.kind == TropCell::Kind::Segment ? axpy(c.base, Rational(1), c.dirs[0]) : Covector{};
      bool at_base = c.base == v, at_end = !end.empty() && end == v;
      if (at_base) {
        add(c.dirs[0], c.weight);
      } else if (at_end) {
        add(neg(c.dirs[0]), c.weight);
      } else {
        add(c.dirs[0], c.weight);
        add(neg(c.dirs[0]), c.weight);
      }
    }
    if (count < 3 || !is_zero_vec(sum)) return false;
  }
  return true;
}

namespace detail {

// Vertices of the Newton polygon, counterclockwise, collinear points dropped.
inline std::vector<Monomial> newton_polygon(const LaurentPoly& f) {
  std::vector<Monomial> pts;
  for (const auto& [e, c] : f.terms()) pts.push_back(e);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() > 1 && f.nvars() == 1) return {pts.front(), pts.back()};
  if (pts.size() < 3) return pts;
  auto turn = [](const Monomial& o, const Monomial& a, const Monomial& b) -> Integer {
    return Integer(static_cast<long>(a[0] - o[0])) * Integer(static_cast<long>(b[1] - o[1])) -
           Integer(static_cast<long>(a[1] - o[1])) * Integer(static_cast<long>(b[0] - o[0]));
  };
  std::vector<Monomial> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const auto& p = pts[i];
    while (k >= lower && turn(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace detail

/// Trop over Z of the principal ideal (f): the trivial tropical curve plus
/// the closed normal cones of Newton vertices whose coefficient is not +-1.
inline TropicalComplex trop_Z_principal(const LaurentPoly& f) {
  using namespace detail;
  if (!f.ring().is_integers()) throw AlgebraError("Trop over Z needs integer coefficients");
  if (f.is_zero()) throw AlgebraError("tropical hypersurface of the zero polynomial");
  const std::size_t n = f.nvars();
  if (n >= 3) throw AlgebraError("exact tropicalization needs at most two variables; use trop_contains oracle");
  TropicalComplex t = trop_hypersurface(change_ring(f, CoefficientRing::rationals()), Valuation::trivial());
  t.setting = "Z";
  Covector origin(n, Rational(0));
  auto nonunit_label = [&](const Monomial& u) {
    LaurentPoly m(f.ring(), n);
    m.add_term(u, f.coefficient(u));
    return "init: " + m.str() + " (not a unit)";
  };
  auto nonunit = [&](const Monomial& u) { return !f.ring().is_unit(f.coefficient(u)); };
  if (n == 0) {
    t.everything = nonunit(Monomial{});
    return t;
  }
  auto hull = newton_polygon(f);
  if (n == 1) {
    const Monomial& a = hull.front();
    const Monomial& b = hull.back();
    if (hull.size() == 1 && nonunit(a)) t.cells.push_back({TropCell::Kind::Line, origin, {{Rational(1)}}, 1, nonunit_label(a)});
    if (hull.size() == 2) {
      if (nonunit(a)) t.cells.push_back({TropCell::Kind::Ray, origin, {{Rational(1)}}, 1, nonunit_label(a)});
      if (nonunit(b)) t.cells.push_back({TropCell::Kind::Ray, origin, {{Rational(-1)}}, 1, nonunit_label(b)});
    }
    return t;
  }
  auto half_plane = [&](const Monomial& a, const Monomial& b) {
    // {w : w.(b - a) >= 0}
    Covector d{Rational(static_cast<long>(b[0] - a[0])), Rational(static_cast<long>(b[1] - a[1]))};
    Covector d1 = primitive(Covector{d[1], -d[0]});
    return TropCell{TropCell::Kind::Cone2, origin, {d1, neg(d1)}, 1, nonunit_label(a)};
  };
  if (hull.size() == 1) {
    if (nonunit(hull[0])) {
      t.cells.push_back({TropCell::Kind::Cone2, origin, {{1, 0}, {-1, 0}}, 1, nonunit_label(hull[0])});
      t.cells.push_back({TropCell::Kind::Cone2, origin, {{-1, 0}, {1, 0}}, 1, nonunit_label(hull[0])});
    }
    return t;
  }
  if (hull.size() == 2) {
    if (nonunit(hull[0])) t.cells.push_back(half_plane(hull[0], hull[1]));
    if (nonunit(hull[1])) t.cells.push_back(half_plane(hull[1], hull[0]));
    return t;
  }
  const std::size_t k = hull.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (!nonunit(hull[i])) continue;
    const Monomial& prev = hull[(i + k - 1) % k];
    const Monomial& u = hull[i];
    const Monomial& next = hull[(i + 1) % k];
    // inward normals of the incoming and outgoing edges
    auto inward = [](const Monomial& a, const Monomial& b) {
      return primitive(Covector{Rational(static_cast<long>(a[1] - b[1])), Rational(static_cast<long>(b[0] - a[0]))});
    };
    t.cells.push_back({TropCell::Kind::Cone2, origin, {inward(prev, u), inward(u, next)}, 1, nonunit_label(u)});
  }
  return t;
}

/// Directions of all nonzero points of the complex (closure included).
inline SphereArcSet sphere_projection(const TropicalComplex& t) {
  using namespace detail;
  const std::size_t n = t.nvars;
  if (n == 0) throw AlgebraError("no character sphere without variables");
  if (n >= 3) throw AlgebraError("exact arcs need two variables; this is a sampled report only");
  if (t.everything) return SphereArcSet::full(n);
  SphereArcSet s = SphereArcSet::empty(n);
  for (const auto& c : t.cells) {
    std::vector<Covector> gens{c.base};
    switch (c.kind) {
      case TropCell::Kind::Vertex: break;
      case TropCell::Kind::Segment: gens.push_back(axpy(c.base, Rational(1), c.dirs[0])); break;
      case TropCell::Kind::Ray: gens.push_back(c.dirs[0]); break;
      case TropCell::Kind::Line:
        gens.push_back(c.dirs[0]);
        gens.push_back(neg(c.dirs[0]));
        break;
      case TropCell::Kind::Cone2:
        gens.push_back(c.dirs[0]);
        gens.push_back(c.dirs[1]);
        if (cross2(c.dirs[0], c.dirs[1]) == 0) gens.push_back({-c.dirs[0][1], c.dirs[0][0]});
        break;
    }
    s = s.unite(SphereArcSet::of_cone(n, gens));
  }
  return s;
}

/// One field-level tropicalization inside the prime-union assembly.
struct TropPart {
  std::string setting;
  std::vector<TropicalComplex> per_generator;
  SphereArcSet sphere = SphereArcSet::empty(2);
};

struct PrimeUnionResult {
  std::vector<std::uint64_t> primes;
  std::vector<TropPart> parts;
  SphereArcSet combined = SphereArcSet::empty(2);
  bool prevariety = false;  // more than one generator: each part over-approximates
};

/// Candidate primes: those dividing a coefficient of some generator.  For a
/// principal ideal (f) this suffices: when p divides no coefficient, f mod p
/// has the same support, every coefficient has p-adic valuation 0, and so the
/// p-adic, mod p and trivial tropicalizations all coincide.
inline std::vector<std::uint64_t> candidate_primes(const std::vector<LaurentPoly>& gens) {
  std::set<std::uint64_t> ps;
  for (const auto& g : gens)
    for (const auto& [e, c] : g.terms())
      for (auto p : prime_divisors(c.get_num())) ps.insert(p);
  return {ps.begin(), ps.end()};
}

/// Union over the trivial, p-adic and mod p tropicalizations projected to the sphere.
inline PrimeUnionResult prime_union(const IdealGens& ideal, const std::vector<std::uint64_t>& extra_primes = {}) {
  if (!ideal.ring.is_integers()) throw AlgebraError("prime-union assembly needs an ideal over Z");
  const std::size_t n = ideal.nvars;
  PrimeUnionResult r;
  r.combined = SphereArcSet::empty(n);
  if (ideal.is_zero()) {
    r.combined = SphereArcSet::full(n);
    return r;
  }
  r.prevariety = ideal.gens.size() > 1;
  std::set<std::uint64_t> ps;
  for (auto p : candidate_primes(ideal.gens)) ps.insert(p);
  for (auto p : extra_primes) {
    if (!is_prime_u64(p)) throw AlgebraError(std::to_string(p) + " is not prime");
    ps.insert(p);
  }
  r.primes.assign(ps.begin(), ps.end());
  const auto QQ = CoefficientRing::rationals();
  auto part = [&](const std::string& name, CoefficientRing ring, const Valuation& v) {
    TropPart tp;
    tp.setting = name;
    tp.sphere = SphereArcSet::full(n);
    for (const auto& g : ideal.gens) {
      LaurentPoly h = ring.is_prime_field() ? reduce_mod_p(g, ring.p) : change_ring(g, ring);
      TropicalComplex t;
      t.nvars = n;
      t.setting = name;
      if (h.is_zero()) {
        t.everything = true;
      } else {
        t = trop_hypersurface(h, v);
        t.setting = name;
      }
      tp.sphere = tp.sphere.intersect(sphere_projection(t));
      tp.per_generator.push_back(std::move(t));
    }
    r.combined = r.combined.unite(tp.sphere);
    r.parts.push_back(std::move(tp));
  };
  part("trivial", QQ, Valuation::trivial());
  for (auto p : r.primes) {
    part("p-adic:" + std::to_string(p), QQ, Valuation::p_adic(p));
    part("fp:" + std::to_string(p), CoefficientRing::prime_field(p), Valuation::trivial());
  }
  return r;
}

/// TSV rows: kind base_x base_y dir1_x dir1_y dir2_x dir2_y label.  A line is
/// written as two opposite rays; absent fields are "-".
inline std::string cells_tsv(const TropicalComplex& t) {
  std::ostringstream os;
  auto coords = [&](const Covector& v) {
    std::string a = v.size() > 0 ? to_string(v[0]) : "-";
    std::string b = v.size() > 1 ? to_string(v[1]) : "-";
    return a + "\t" + b;
  };
  auto row = [&](const std::string& kind, const Covector& base, const Covector* d1, const Covector* d2,
                 const std::string& label) {
    os << kind << '\t' << coords(base) << '\t' << (d1 ? coords(*d1) : "-\t-") << '\t' << (d2 ? coords(*d2) : "-\t-")
       << '\t' << label << '\n';
  };
  if (t.everything) row("all", Covector(t.nvars, Rational(0)), nullptr, nullptr, "zero polynomial");
  for (const auto& c : t.cells) {
    switch (c.kind) {
      case TropCell::Kind::Vertex: row("vertex", c.base, nullptr, nullptr, c.label); break;
      case TropCell::Kind::Segment: row("segment", c.base, &c.dirs[0], nullptr, c.label); break;
      case TropCell::Kind::Ray: row("ray", c.base, &c.dirs[0], nullptr, c.label); break;
      case TropCell::Kind::Line: {
        Covector back = detail::neg(c.dirs[0]);
        row("ray", c.base, &c.dirs[0], nullptr, c.label);
        row("ray", c.base, &back, nullptr, c.label);
        break;
      }
      case TropCell::Kind::Cone2: row("cone2", c.base, &c.dirs[0], &c.dirs[1], c.label); break;
    }
  }
  return os.str();
}

}  // namespace troplex

#endif  // TROPLEX_TROPICAL_HPP
