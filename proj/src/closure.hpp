#pragma once

// Smallest convex stabber containing given points.
//
// A convex set meets a horizontal segment iff it meets the leftward ray from
// the right endpoint and the rightward ray from the left endpoint (and
// likewise upward/downward rays for vertical segments), provided it spans the
// segment's height (width). Adding the endpoint of every ray that misses the
// hull of the given points yields the inclusion-minimal stabber in one pass.
// Only hull vertices of each endpoint class can matter.

#include <array>
#include <vector>

#include "isostab/geom.hpp"

namespace isostab::detail {

enum class RayDir { Left, Right, Up, Down };

template <class T>
struct Closure {
  // Hull vertices of right(), left(), bot() and top() endpoints, with the
  // direction of the ray each one must meet.
  std::array<std::vector<Point<T>>, 4> pts;
  static constexpr std::array<RayDir, 4> kDirs{RayDir::Left, RayDir::Right, RayDir::Up, RayDir::Down};

  /// True when the ray from e in direction d misses the convex polygon h.
  static bool misses(const std::vector<Point<T>>& h, const Point<T>& e, RayDir d) {
    if (d == RayDir::Left || d == RayDir::Right) {
      auto sl = slice_at_y(h, e.y);
      if (!sl) return true;
      return d == RayDir::Left ? e.x < sl->first : sl->second < e.x;
    }
    auto sl = slice_at_x(h, e.x);
    if (!sl) return true;
    return d == RayDir::Down ? e.y < sl->first : sl->second < e.y;
  }

  std::vector<Point<T>> hull(const std::vector<Point<T>>& v) const {
    const auto base = hull_points(v);
    std::vector<Point<T>> all = v;
    for (int t = 0; t < 4; ++t)
      for (const auto& e : pts[t])
        if (misses(base, e, kDirs[t])) all.push_back(e);
    return all.size() == v.size() ? base : hull_points(std::move(all));
  }

  T area2(const std::vector<Point<T>>& v) const {
    const auto h = hull(v);
    return h.size() < 3 ? T(0) : twice_signed_area(h);
  }
};

inline Closure<Rational> make_closure(const Instance& s) {
  std::array<std::vector<RPoint>, 4> raw;
  for (const auto& seg : s) {
    if (seg.horizontal()) {
      raw[0].push_back(seg.right());
      raw[1].push_back(seg.left());
    } else {
      raw[2].push_back(seg.bot());
      raw[3].push_back(seg.top());
    }
  }
  Closure<Rational> c;
  for (int t = 0; t < 4; ++t) c.pts[t] = hull_points(std::move(raw[t]));
  return c;
}

/// Double-precision copy of an exact closure (same points).
inline Closure<double> to_double(const Closure<Rational>& c) {
  Closure<double> d;
  for (int t = 0; t < 4; ++t)
    for (const auto& p : c.pts[t]) d.pts[t].push_back(isostab::to_double(p));
  return d;
}

}  // namespace isostab::detail
