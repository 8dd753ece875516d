#include "isostab/geom.hpp"

namespace isostab {

Orientation orient2d(const RPoint& a, const RPoint& b, const RPoint& c) {
  return static_cast<Orientation>(sign(cross(a, b, c)));
}

Segment make_horizontal(Rational y, Rational x1, Rational x2) {
  if (!(x1 < x2)) throw std::invalid_argument("horizontal segment needs left < right");
  return Segment{Axis::Horizontal, std::move(y), std::move(x1), std::move(x2)};
}

Segment make_vertical(Rational x, Rational y1, Rational y2) {
  if (!(y1 < y2)) throw std::invalid_argument("vertical segment needs bottom < top");
  return Segment{Axis::Vertical, std::move(x), std::move(y1), std::move(y2)};
}

DSegment to_double(const Segment& s) {
  return DSegment{s.axis, s.fixed.get_d(), s.lo.get_d(), s.hi.get_d()};
}

Area polygon_area(const Polygon& p) {
  if (p.vertices.size() < 3) return {Rational(0), true};
  Rational a = twice_signed_area(p.vertices) / 2;
  return {a, a == 0};
}

LineHit line_extension_intersect(const RPoint& p1, const RPoint& p2, const Segment& s) {
  if (p1 == p2) throw std::invalid_argument("line_extension_intersect: p1 == p2");
  const RPoint a = s.low_end();
  const RPoint b = s.high_end();
  const Rational ca = cross(p1, p2, a);
  const Rational cb = cross(p1, p2, b);
  if (ca == 0 && cb == 0) return {LineHit::Kind::CollinearOverlap, {}};
  if (sgn(ca) * sgn(cb) > 0) return {LineHit::Kind::Miss, {}};
  // a + (b - a) * ca / (ca - cb)
  const Rational t = ca / (ca - cb);
  const Rational u = s.lo + (s.hi - s.lo) * t;
  return {LineHit::Kind::Point, s.at(u)};
}

Polygon convex_hull(std::vector<RPoint> pts) {
  if (pts.empty()) throw std::invalid_argument("convex_hull of no points");
  Polygon out;
  out.vertices = hull_points(std::move(pts));
  out.degenerate = out.vertices.size() < 3;
  return out;
}

bool segment_intersects_polygon(const Segment& s, const Polygon& p) {
  return segment_meets_convex(s, p.vertices);
}

bool on_segment(const RPoint& q, const RPoint& a, const RPoint& b) {
  if (sgn(cross(a, b, q)) != 0) return false;
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

bool segments_touch(const RPoint& p, const RPoint& q, const RPoint& r, const RPoint& s) {
  const int d1 = sgn(cross(p, q, r));
  const int d2 = sgn(cross(p, q, s));
  const int d3 = sgn(cross(r, s, p));
  const int d4 = sgn(cross(r, s, q));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return (d1 == 0 && on_segment(r, p, q)) || (d2 == 0 && on_segment(s, p, q)) ||
         (d3 == 0 && on_segment(p, r, s)) || (d4 == 0 && on_segment(q, r, s));
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RPoint& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

}  // namespace isostab
