#pragma once

#include "isostab/geom.hpp"

namespace isostab {

/// Axis-preserving symmetry of the plane: optional mirror in the y-axis
/// (x -> -x) followed by `rot` counterclockwise quarter turns.
struct Dihedral {
  int rot = 0;
  bool mirror = false;

  static Dihedral identity() { return {}; }
  static Dihedral all(int i) { return {i % 4, i >= 4}; }  // i in [0, 8)

  template <class T>
  Point<T> apply(const Point<T>& p) const {
    Point<T> q{mirror ? T(-p.x) : p.x, p.y};
    for (int i = 0; i < ((rot % 4) + 4) % 4; ++i) q = Point<T>{T(-q.y), q.x};
    return q;
  }

  Dihedral inverse() const {
    // (R^k M)^-1 = M R^-k = R^k M when mirrored; R^-k otherwise.
    if (mirror) return {rot, true};
    return {(4 - rot % 4) % 4, false};
  }

  template <class T>
  SegmentT<T> apply(const SegmentT<T>& s) const {
    Point<T> a = apply(s.low_end());
    Point<T> b = apply(s.high_end());
    SegmentT<T> out;
    const bool swapped = (((rot % 4) + 4) % 4) % 2 == 1;
    out.axis = (s.horizontal() != swapped) ? Axis::Horizontal : Axis::Vertical;
    if (out.horizontal()) {
      out.fixed = a.y;
      out.lo = a.x < b.x ? a.x : b.x;
      out.hi = a.x < b.x ? b.x : a.x;
    } else {
      out.fixed = a.x;
      out.lo = a.y < b.y ? a.y : b.y;
      out.hi = a.y < b.y ? b.y : a.y;
    }
    return out;
  }

  friend bool operator==(const Dihedral& a, const Dihedral& b) {
    return a.rot % 4 == b.rot % 4 && a.mirror == b.mirror;
  }
};

inline Instance apply(const Dihedral& d, const Instance& in) {
  Instance out;
  out.reserve(in.size());
  for (const auto& s : in) out.push_back(d.apply(s));
  return out;
}

}  // namespace isostab
