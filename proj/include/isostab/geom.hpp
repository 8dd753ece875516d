#pragma once

// Exact planar primitives for isothetic segment stabbing.
//
// Every geometric type is templated on its scalar so that the same code
// runs in exact rational arithmetic (the type of record) and in double
// precision (used only to screen candidates cheaply).

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isostab {

using Rational = mpq_class;

inline int sign(const Rational& v) { return sgn(v); }
inline int sign(double v) { return (v > 0) - (v < 0); }
inline double to_double(const Rational& v) { return v.get_d(); }
inline double to_double(double v) { return v; }

template <class T>
struct Point {
  T x{};
  T y{};

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  /// Lexicographic (x, then y).
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

using RPoint = Point<Rational>;
using DPoint = Point<double>;

template <class T>
Point<double> to_double(const Point<T>& p) {
  return {to_double(p.x), to_double(p.y)};
}

/// (b - a) x (c - a); positive for a left turn.
template <class T>
T cross(const Point<T>& a, const Point<T>& b, const Point<T>& c) {
  return T((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

Orientation orient2d(const RPoint& a, const RPoint& b, const RPoint& c);

enum class Axis { Horizontal, Vertical };

/// Axis-parallel segment. `fixed` is the y of a horizontal segment or the x
/// of a vertical one; [lo, hi] is the range of the other coordinate.
template <class T>
struct SegmentT {
  Axis axis = Axis::Horizontal;
  T fixed{};
  T lo{};
  T hi{};

  bool horizontal() const { return axis == Axis::Horizontal; }
  bool vertical() const { return axis == Axis::Vertical; }

  /// Point at varying-coordinate value u.
  Point<T> at(const T& u) const {
    return horizontal() ? Point<T>{u, fixed} : Point<T>{fixed, u};
  }
  Point<T> low_end() const { return at(lo); }
  Point<T> high_end() const { return at(hi); }

  Point<T> top() const { require(Axis::Vertical, "top"); return at(hi); }
  Point<T> bot() const { require(Axis::Vertical, "bot"); return at(lo); }
  Point<T> left() const { require(Axis::Horizontal, "left"); return at(lo); }
  Point<T> right() const { require(Axis::Horizontal, "right"); return at(hi); }

  /// Varying coordinate of p (no check that p lies on the segment).
  T param_of(const Point<T>& p) const { return horizontal() ? p.x : p.y; }

  bool contains(const Point<T>& p) const {
    if (horizontal()) return p.y == fixed && lo <= p.x && p.x <= hi;
    return p.x == fixed && lo <= p.y && p.y <= hi;
  }

  friend bool operator==(const SegmentT& a, const SegmentT& b) {
    return a.axis == b.axis && a.fixed == b.fixed && a.lo == b.lo && a.hi == b.hi;
  }

 private:
  void require(Axis a, const char* what) const {
    if (axis != a) throw std::logic_error(std::string(what) + "() undefined for this orientation");
  }
};

using Segment = SegmentT<Rational>;
using DSegment = SegmentT<double>;

/// Throws std::invalid_argument unless lo < hi.
Segment make_horizontal(Rational y, Rational x1, Rational x2);
Segment make_vertical(Rational x, Rational y1, Rational y2);

DSegment to_double(const Segment& s);

using Instance = std::vector<Segment>;

/// Counterclockwise vertex list. `degenerate` marks hulls with fewer than
/// three vertices (a point or a segment).
struct Polygon {
  std::vector<RPoint> vertices;
  bool degenerate = false;
};

struct Area {
  Rational value;
  bool degenerate = false;
};

template <class T>
T twice_signed_area(const std::vector<Point<T>>& v) {
  T acc = 0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point<T>& a = v[i];
    const Point<T>& b = v[(i + 1) % n];
    acc += a.x * b.y - a.y * b.x;
  }
  return acc;
}

Area polygon_area(const Polygon& p);

/// Result of intersecting an infinite line with a closed segment.
struct LineHit {
  enum class Kind { Point, Miss, CollinearOverlap };
  Kind kind = Kind::Miss;
  RPoint point;
};

LineHit line_extension_intersect(const RPoint& p1, const RPoint& p2, const Segment& s);

/// Monotone-chain hull, counterclockwise, starting from the lexicographically
/// smallest point; duplicates merged and collinear boundary points dropped.
template <class T>
std::vector<Point<T>> hull_points(std::vector<Point<T>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point<T>> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && sign(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && sign(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

Polygon convex_hull(std::vector<RPoint> pts);

/// Range [min, max] of y over the convex polygon's vertical slice at x, or
/// nothing when the line misses it. Accepts 1- and 2-vertex hulls.
template <class T>
std::optional<std::pair<T, T>> slice_at_x(const std::vector<Point<T>>& poly, const T& x) {
  std::optional<std::pair<T, T>> out;
  auto take = [&](const T& y) {
    if (!out) out.emplace(y, y);
    else {
      if (y < out->first) out->first = y;
      if (y > out->second) out->second = y;
    }
  };
  const std::size_t n = poly.size();
  if (n == 1) {
    if (poly[0].x == x) take(poly[0].y);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point<T>& a = poly[i];
    const Point<T>& b = poly[(i + 1) % n];
    if (a.x == b.x) {
      if (a.x == x) { take(a.y); take(b.y); }
    } else if ((a.x <= x && x <= b.x) || (b.x <= x && x <= a.x)) {
      take(T(a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x)));
    }
  }
  return out;
}

/// Horizontal slice at y: range [min, max] of x.
template <class T>
std::optional<std::pair<T, T>> slice_at_y(const std::vector<Point<T>>& poly, const T& y) {
  std::vector<Point<T>> swapped;
  swapped.reserve(poly.size());
  for (const auto& p : poly) swapped.push_back({p.y, p.x});
  return slice_at_x(swapped, y);
}

/// Closed-set intersection test of a segment with a convex polygon.
template <class T>
bool segment_meets_convex(const SegmentT<T>& s, const std::vector<Point<T>>& poly) {
  auto sl = s.horizontal() ? slice_at_y(poly, s.fixed) : slice_at_x(poly, s.fixed);
  return sl && !(sl->second < s.lo) && !(s.hi < sl->first);
}

bool segment_intersects_polygon(const Segment& s, const Polygon& p);

/// Closed point-in-convex-polygon test (polygon CCW, any vertex count).
template <class T>
bool point_in_convex(const Point<T>& q, const std::vector<Point<T>>& poly) {
  auto sl = slice_at_x(poly, q.x);
  return sl && !(q.y < sl->first) && !(sl->second < q.y);
}

/// Closed segment-segment intersection test between pq and rs.
bool segments_touch(const RPoint& p, const RPoint& q, const RPoint& r, const RPoint& s);

/// Does point q lie on closed segment ab?
bool on_segment(const RPoint& q, const RPoint& a, const RPoint& b);

std::string to_string(const Rational& q);
std::string to_string(const RPoint& p);

}  // namespace isostab
