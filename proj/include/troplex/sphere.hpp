#ifndef TROPLEX_SPHERE_HPP
#define TROPLEX_SPHERE_HPP

// Subsets of the character sphere.  In dimension 2 a set is a finite union
// of arcs and points on S^1, stored by exact direction vectors.  Dimension 1
// is the two-point sphere; dimension >= 3 only knows empty and full.

#include "troplex/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace troplex {

/// A primitive integer vector standing for a point of S^1 (or S^0 with y = 0).
struct Direction {
  Integer x, y;

  static Direction of(const Rational& a, const Rational& b) {
    if (a == 0 && b == 0) throw AlgebraError("zero vector has no direction");
    Integer l = lcm_int(a.get_den(), b.get_den());
    Integer xi = a.get_num() * (l / a.get_den()), yi = b.get_num() * (l / b.get_den());
    Integer g = gcd_int(xi, yi);
    return {xi / g, yi / g};
  }
  static Direction of(const Covector& w) {
    if (w.size() == 1) return of(w[0], Rational(0));
    if (w.size() != 2) throw AlgebraError("directions are planar");
    return of(w[0], w[1]);
  }
  Covector vec() const { return {Rational(x), Rational(y)}; }
  Direction operator-() const { return {-x, -y}; }
  bool operator==(const Direction&) const = default;
  double degrees() const {
    double d = std::atan2(y.get_d(), x.get_d()) * 180.0 / std::numbers::pi;
    return d < 0 ? d + 360.0 : d;
  }
  std::string str() const { return "(" + x.get_str() + "," + y.get_str() + ")"; }
};

inline Integer cross(const Direction& a, const Direction& b) { return a.x * b.y - a.y * b.x; }
inline Integer dot(const Direction& a, const Direction& b) { return a.x * b.x + a.y * b.y; }

/// Angle order starting at (1,0) and turning counterclockwise.
inline bool angle_less(const Direction& a, const Direction& b) {
  auto half = [](const Direction& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

/// A direction strictly inside the counterclockwise open arc from a to b.
inline Direction inside_arc(const Direction& a, const Direction& b) {
  Integer c = cross(a, b);
  if (c > 0) return Direction::of(Rational(a.x + b.x), Rational(a.y + b.y));
  if (c < 0) return Direction::of(Rational(-(a.x + b.x)), Rational(-(a.y + b.y)));
  return {-a.y, a.x};
}

struct Arc {
  Direction from, to;  // counterclockwise from -> to
  bool from_closed = true, to_closed = true;
};

class SphereArcSet {
 public:
  static SphereArcSet empty(std::size_t dim) {
    SphereArcSet s(dim);
    if (dim == 1) s.init_s0();
    return s;
  }
  static SphereArcSet full(std::size_t dim) {
    SphereArcSet s = empty(dim);
    if (dim == 1) {
      s.point_in_ = {true, true};
    } else {
      s.all_ = true;
    }
    return s;
  }
  static SphereArcSet point(std::size_t dim, const Direction& d) {
    SphereArcSet s = empty(dim);
    if (dim == 1) {
      if (d.y != 0) throw AlgebraError("not a point of S^0");
      s.point_in_[d.x > 0 ? 0 : 1] = true;
      return s;
    }
    require_planar(dim);
    s.breaks_ = {d};
    s.point_in_ = {true};
    s.gap_in_ = {false};
    return s;
  }
  /// Counterclockwise arc from a to b with the given endpoint flags.
  static SphereArcSet arc(const Direction& a, const Direction& b, bool a_closed = true, bool b_closed = true) {
    if (a == b) return a_closed || b_closed ? point(2, a) : empty(2);
    SphereArcSet s(2);
    bool swap = angle_less(b, a);
    s.breaks_ = swap ? std::vector<Direction>{b, a} : std::vector<Direction>{a, b};
    s.point_in_ = swap ? std::vector<bool>{b_closed, a_closed} : std::vector<bool>{a_closed, b_closed};
    // gap i runs from breaks_[i] to breaks_[i+1]
    s.gap_in_ = swap ? std::vector<bool>{false, true} : std::vector<bool>{true, false};
    s.normalize();
    return s;
  }

  /// Directions of the closed cone spanned by the vectors (zero vectors ignored).
  static SphereArcSet of_cone(std::size_t dim, const std::vector<Covector>& gens) {
    std::vector<Direction> ds;
    for (const auto& g : gens) {
      bool zero = std::all_of(g.begin(), g.end(), [](const Rational& r) { return r == 0; });
      if (zero) continue;
      Direction d = Direction::of(g);
      if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
    }
    if (ds.empty()) return empty(dim);
    if (dim == 1) {
      SphereArcSet s = empty(1);
      for (const auto& d : ds) s = s.unite(point(1, d));
      return s;
    }
    require_planar(dim);
    std::sort(ds.begin(), ds.end(), angle_less);
    if (ds.size() == 1) return point(2, ds[0]);
    // the largest counterclockwise gap decides the shape
    std::size_t k = ds.size(), widest = 0;
    int widest_kind = -1;  // 0: < pi, 1: == pi, 2: > pi
    for (std::size_t i = 0; i < k; ++i) {
      const auto& a = ds[i];
      const auto& b = ds[(i + 1) % k];
      Integer c = cross(a, b);
      int kind = c > 0 ? 0 : (c == 0 ? 1 : 2);
      if (kind > widest_kind) widest_kind = kind, widest = i;
    }
    if (widest_kind == 0) return full(2);
    const Direction& after = ds[(widest + 1) % k];
    const Direction& before = ds[widest];
    if (widest_kind == 1 && k == 2) return point(2, ds[0]).unite(point(2, ds[1]));
    return arc(after, before);
  }

  std::size_t dim() const { return dim_; }
  bool is_empty() const { return *this == empty(dim_); }
  bool is_full() const { return *this == full(dim_); }
  const std::vector<Direction>& breakpoints() const { return breaks_; }

  bool contains(const Direction& d) const {
    if (dim_ == 1) return d.y == 0 && point_in_[d.x > 0 ? 0 : 1];
    require_planar(dim_);
    if (breaks_.empty()) return all_;
    for (std::size_t i = 0; i < breaks_.size(); ++i)
      if (breaks_[i] == d) return point_in_[i];
    // gap containing d: last breakpoint before it, cyclically
    std::size_t k = breaks_.size(), g = k - 1;
    for (std::size_t i = 0; i < k; ++i)
      if (angle_less(breaks_[i], d)) g = i;
    return gap_in_[g];
  }

  SphereArcSet unite(const SphereArcSet& o) const { return combine(o, [](bool a, bool b) { return a || b; }); }
  SphereArcSet intersect(const SphereArcSet& o) const { return combine(o, [](bool a, bool b) { return a && b; }); }
  SphereArcSet minus(const SphereArcSet& o) const { return combine(o, [](bool a, bool b) { return a && !b; }); }
  SphereArcSet complement() const {
    SphereArcSet s = *this;
    if (breaks_.empty()) s.all_ = !all_;
    s.point_in_.flip();
    if (dim_ == 2) s.gap_in_.flip();
    return s;
  }
  bool subset_of(const SphereArcSet& o) const { return minus(o).is_empty(); }

  bool operator==(const SphereArcSet& o) const {
    return dim_ == o.dim_ && all_ == o.all_ && breaks_ == o.breaks_ && point_in_ == o.point_in_ &&
           gap_in_ == o.gap_in_;
  }

  /// Maximal arcs; a full circle comes out as no arcs with is_full().
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    if (dim_ != 2 || breaks_.empty()) return out;
    std::size_t k = breaks_.size();
    // start at a breakpoint whose preceding gap is out
    std::size_t start = k;
    for (std::size_t i = 0; i < k; ++i)
      if (!gap_in_[(i + k - 1) % k]) {
        start = i;
        break;
      }
    if (start == k) return out;  // every gap is in: the circle minus finitely many points
    for (std::size_t s = 0; s < k; ++s) {
      std::size_t i = (start + s) % k;
      if (!gap_in_[i]) continue;
      if (gap_in_[(i + k - 1) % k]) continue;  // continuation of an earlier arc
      std::size_t j = (i + 1) % k;
      while (gap_in_[j]) j = (j + 1) % k;
      out.push_back({breaks_[i], breaks_[j], bool(point_in_[i]), bool(point_in_[j])});
    }
    return out;
  }
  /// Points of the set not lying on any arc.
  std::vector<Direction> isolated_points() const {
    std::vector<Direction> out;
    if (dim_ == 1) {
      if (point_in_[0]) out.push_back({1, 0});
      if (point_in_[1]) out.push_back({-1, 0});
      return out;
    }
    std::size_t k = breaks_.size();
    for (std::size_t i = 0; i < k; ++i)
      if (point_in_[i] && !gap_in_[i] && !gap_in_[(i + k - 1) % k]) out.push_back(breaks_[i]);
    return out;
  }
  /// Points missing from an otherwise full neighbourhood (punctures).
  std::vector<Direction> punctures() const {
    std::vector<Direction> out;
    std::size_t k = breaks_.size();
    for (std::size_t i = 0; dim_ == 2 && i < k; ++i)
      if (!point_in_[i] && gap_in_[i] && gap_in_[(i + k - 1) % k]) out.push_back(breaks_[i]);
    return out;
  }

  std::string str() const {
    if (dim_ >= 3) return all_ ? "full sphere" : "empty";
    if (is_full()) return dim_ == 2 ? "full circle" : "full sphere";
    if (is_empty()) return "empty";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
      if (!first) os << " u ";
      first = false;
    };
    if (dim_ == 2 && arcs().empty() && !breaks_.empty() && gap_in_[0]) {
      sep();
      os << "circle";
      for (const auto& d : punctures()) os << " \\ " << d.str();
      return os.str();
    }
    for (const auto& a : arcs()) {
      sep();
      os << (a.from_closed ? "[" : "(") << a.from.str() << "," << a.to.str() << (a.to_closed ? "]" : ")");
      // interior punctures
      for (std::size_t i = 0; i < breaks_.size(); ++i) {
        const auto& d = breaks_[i];
        if (!point_in_[i] && d != a.from && d != a.to && in_open_arc(a.from, a.to, d)) os << " \\ " << d.str();
      }
    }
    for (const auto& d : isolated_points()) {
      sep();
      os << "{" << d.str() << "}";
    }
    return os.str();
  }

  static bool in_open_arc(const Direction& a, const Direction& b, const Direction& d) {
    if (d == a || d == b) return false;
    if (a == b) return true;
    // rotate so that a is the origin of the angle order
    bool ab = angle_less(a, b), ad = angle_less(a, d), db = angle_less(d, b);
    return ab ? (ad && db) : (ad || db);
  }

 private:
  explicit SphereArcSet(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw AlgebraError("sphere of dimension 0");
  }
  static void require_planar(std::size_t dim) {
    if (dim != 2) throw AlgebraError("exact arcs need two variables; this is a sampled report only");
  }
  void init_s0() {
    breaks_ = {{1, 0}, {-1, 0}};
    point_in_ = {false, false};
    gap_in_ = {false, false};
  }

  template <class Op>
  SphereArcSet combine(const SphereArcSet& o, Op op) const {
    if (dim_ != o.dim_) throw AlgebraError("sphere dimension mismatch");
    SphereArcSet s(dim_);
    if (dim_ >= 3) {
      s.all_ = op(all_, o.all_);
      return s;
    }
    if (dim_ == 1) {
      s.init_s0();
      for (int i = 0; i < 2; ++i) s.point_in_[i] = op(point_in_[i], o.point_in_[i]);
      return s;
    }
    std::vector<Direction> bs = breaks_;
    for (const auto& d : o.breaks_)
      if (std::find(bs.begin(), bs.end(), d) == bs.end()) bs.push_back(d);
    std::sort(bs.begin(), bs.end(), angle_less);
    if (bs.empty()) {
      s.all_ = op(all_, o.all_);
      return s;
    }
    s.breaks_ = bs;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      s.point_in_.push_back(op(contains(bs[i]), o.contains(bs[i])));
      Direction mid = inside_arc(bs[i], bs[(i + 1) % bs.size()]);
      s.gap_in_.push_back(op(contains(mid), o.contains(mid)));
    }
    s.normalize();
    return s;
  }

  void normalize() {
    if (dim_ != 2) return;
    bool changed = true;
    while (changed && !breaks_.empty()) {
      changed = false;
      std::size_t k = breaks_.size();
      for (std::size_t i = 0; i < k; ++i) {
        bool before = gap_in_[(i + k - 1) % k];
        if (point_in_[i] == before && gap_in_[i] == before) {
          if (k == 1) all_ = before;
          breaks_.erase(breaks_.begin() + static_cast<long>(i));
          point_in_.erase(point_in_.begin() + static_cast<long>(i));
          gap_in_.erase(gap_in_.begin() + static_cast<long>(i));
          changed = true;
          break;
        }
      }
    }
    if (!breaks_.empty()) all_ = false;
  }

  std::size_t dim_;
  bool all_ = false;  // meaning when there are no breakpoints
  std::vector<Direction> breaks_;
  std::vector<bool> point_in_, gap_in_;
};

inline std::ostream& operator<<(std::ostream& os, const SphereArcSet& s) { return os << s.str(); }

}  // namespace troplex

#endif  // TROPLEX_SPHERE_HPP
