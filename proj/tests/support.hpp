#pragma once

// Oracles shared by the unit tests and the acceptance binary. Nothing here
// calls into the library's own predicates, so agreement is evidence.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "isostab/chains.hpp"
#include "isostab/geom.hpp"

namespace oracle {

using isostab::Instance;
using isostab::Polygon;
using isostab::Rational;
using isostab::RPoint;
using isostab::Segment;

inline int turn(const RPoint& a, const RPoint& b, const RPoint& c) {
  const Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(v);
}

inline bool between(const Rational& v, const Rational& a, const Rational& b) {
  return (a <= v && v <= b) || (b <= v && v <= a);
}

inline bool on_closed_segment(const RPoint& q, const RPoint& a, const RPoint& b) {
  return turn(a, b, q) == 0 && between(q.x, a.x, b.x) && between(q.y, a.y, b.y);
}

inline bool segments_cross(const RPoint& p, const RPoint& q, const RPoint& r, const RPoint& s) {
  const int d1 = turn(p, q, r), d2 = turn(p, q, s), d3 = turn(r, s, p), d4 = turn(r, s, q);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return on_closed_segment(r, p, q) || on_closed_segment(s, p, q) || on_closed_segment(p, r, s) ||
         on_closed_segment(q, r, s);
}

/// Closed containment in a counterclockwise convex polygon of any size.
inline bool inside(const RPoint& q, const std::vector<RPoint>& v) {
  const std::size_t n = v.size();
  if (n == 0) return false;
  if (n == 1) return q == v[0];
  if (n == 2) return on_closed_segment(q, v[0], v[1]);
  for (std::size_t i = 0; i < n; ++i)
    if (turn(v[i], v[(i + 1) % n], q) < 0) return false;
  return true;
}

inline bool meets(const RPoint& a, const RPoint& b, const std::vector<RPoint>& v) {
  if (inside(a, v) || inside(b, v)) return true;
  const std::size_t n = v.size();
  if (n == 1) return on_closed_segment(v[0], a, b);
  for (std::size_t i = 0; i < n; ++i)
    if (segments_cross(a, b, v[i], v[(i + 1) % n])) return true;
  return false;
}

inline bool stabs_all(const Polygon& p, const Instance& s) {
  return std::all_of(s.begin(), s.end(),
                     [&](const Segment& g) { return meets(g.low_end(), g.high_end(), p.vertices); });
}

/// At least three vertices, every turn strictly left.
inline bool strictly_convex_ccw(const Polygon& p) {
  const auto& v = p.vertices;
  const std::size_t n = v.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (turn(v[i], v[(i + 1) % n], v[(i + 2) % n]) <= 0) return false;
  return true;
}

inline Rational area(const std::vector<RPoint>& v) {
  Rational acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RPoint& a = v[i];
    const RPoint& b = v[(i + 1) % v.size()];
    acc += a.x * b.y - a.y * b.x;
  }
  return acc / 2;
}

// Quadrant each critical chain's vertices force the stabber into:
// RB up-left, RT down-left, LT down-right, LB up-right.
inline std::pair<int, int> quadrant_of(isostab::ChainId id) {
  switch (id) {
    case isostab::ChainId::RB: return {-1, 1};
    case isostab::ChainId::RT: return {-1, -1};
    case isostab::ChainId::LT: return {1, -1};
    case isostab::ChainId::LB: return {1, 1};
  }
  return {0, 0};
}

inline bool in_quadrant(const RPoint& q, const RPoint& c, int sx, int sy) {
  return sgn(q.x - c.x) * sx >= 0 && sgn(q.y - c.y) * sy >= 0;
}

/// Does the convex polygon meet the closed quadrant at c?
inline bool meets_quadrant(const std::vector<RPoint>& v, const RPoint& c, int sx, int sy) {
  for (const auto& q : v)
    if (in_quadrant(q, c, sx, sy)) return true;
  if (inside(c, v)) return true;
  Rational reach = 1;
  for (const auto& q : v) reach += abs(q.x - c.x) + abs(q.y - c.y);
  const RPoint ex{c.x + reach * sx, c.y};
  const RPoint ey{c.x, c.y + reach * sy};
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RPoint& a = v[i];
    const RPoint& b = v[(i + 1) % n];
    if (segments_cross(a, b, c, ex) || segments_cross(a, b, c, ey)) return true;
  }
  return false;
}

/// The stabber lies on the outer side of every critical chain: each chain
/// edge has a polygon vertex on or beyond its supporting line, and each chain
/// vertex's quadrant is reached.
inline bool outside_chains(const Polygon& p, const std::array<isostab::CriticalChain, 4>& chains) {
  for (const auto& ch : chains) {
    const auto [sx, sy] = quadrant_of(ch.id);
    for (const auto& c : ch.vertices)
      if (!meets_quadrant(p.vertices, c, sx, sy)) return false;
    for (std::size_t i = 0; i + 1 < ch.vertices.size(); ++i) {
      const bool ok = std::any_of(p.vertices.begin(), p.vertices.end(), [&](const RPoint& q) {
        return turn(ch.vertices[i], ch.vertices[i + 1], q) <= 0;
      });
      if (!ok) return false;
    }
  }
  return true;
}

// ---- Line transversal by Fourier-Motzkin elimination ----------------------

/// alpha * a + beta * b <= gamma
struct Halfplane {
  Rational alpha, beta, gamma;
};

/// Feasibility of a system in (a, b) by eliminating b.
inline bool feasible(const std::vector<Halfplane>& hs) {
  std::vector<Halfplane> lower, upper, rest;  // beta < 0, beta > 0, beta == 0
  for (const auto& h : hs) (sgn(h.beta) < 0 ? lower : sgn(h.beta) > 0 ? upper : rest).push_back(h);
  // b <= (gamma - alpha a) / beta for upper; b >= (gamma - alpha a) / beta for lower.
  std::vector<Halfplane> in_a = rest;
  for (const auto& u : upper)
    for (const auto& l : lower) {
      // (gl - al a)/bl <= (gu - au a)/bu ; bl < 0 < bu
      // multiply by bu * (-bl) > 0: -(gl - al a) bu <= (gu - au a)(-bl)
      Halfplane h;
      h.alpha = l.alpha * u.beta - u.alpha * l.beta;
      h.beta = 0;
      h.gamma = l.gamma * u.beta - u.gamma * l.beta;
      in_a.push_back(h);
    }
  std::optional<Rational> lo, hi;
  for (const auto& h : in_a) {
    const int s = sgn(h.alpha);
    if (s == 0) {
      if (sgn(h.gamma) < 0) return false;
      continue;
    }
    const Rational bound = h.gamma / h.alpha;
    if (s > 0) { if (!hi || bound < *hi) hi = bound; }
    else { if (!lo || bound > *lo) lo = bound; }
  }
  return !lo || !hi || *lo <= *hi;
}

/// Does some line (of any slope, vertical included) meet every segment?
inline bool has_transversal(const Instance& s) {
  if (s.empty()) return true;
  // vertical: common x
  Rational xl = s[0].horizontal() ? s[0].lo : s[0].fixed, xh = s[0].horizontal() ? s[0].hi : s[0].fixed;
  for (const auto& g : s) {
    xl = std::max(xl, g.horizontal() ? g.lo : g.fixed);
    xh = std::min(xh, g.horizontal() ? g.hi : g.fixed);
  }
  if (xl <= xh) return true;
  for (int slope_sign : {1, -1}) {
    std::vector<Halfplane> hs;
    hs.push_back({Rational(-slope_sign), 0, 0});  // slope_sign * a >= 0
    for (const auto& g : s) {
      if (g.vertical()) {
        // lo <= a x + b <= hi
        hs.push_back({g.fixed, 1, g.hi});
        hs.push_back({-g.fixed, -1, -g.lo});
      } else {
        // a >= 0: a lo + b <= y <= a hi + b ; a <= 0: the ends swap
        const Rational& below = slope_sign > 0 ? g.lo : g.hi;
        const Rational& above = slope_sign > 0 ? g.hi : g.lo;
        hs.push_back({below, 1, g.fixed});
        hs.push_back({-above, -1, -g.fixed});
      }
    }
    if (feasible(hs)) return true;
  }
  return false;
}

// ---- Generators --------------------------------------------------------------

inline Rational rat(std::int64_t p, std::int64_t q = 1) {
  Rational r(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q)));
  r.canonicalize();
  return r;
}

/// Segments grown across a random line (slanted, horizontal or vertical).
inline Instance planted_instance(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int kind = pick(0, 5);  // 0: vertical line, 1: horizontal line, else slanted
  const Rational a = rat(pick(-5, 5), pick(1, 4));
  const Rational b = pick(-20, 20);
  const Rational c = pick(-20, 20);
  Instance s;
  for (std::size_t i = 0; i < n; ++i) {
    const bool horizontal = pick(0, 1) == 1;
    const Rational l1 = pick(0, 10) + rat(pick(0, 3), 4), l2 = pick(1, 10);
    const Rational t = pick(-40, 40);
    RPoint on;
    if (kind == 0) on = {c, t};
    else if (kind == 1) on = {t, b};
    else on = {t, a * t + b};
    if (horizontal) {
      s.push_back(isostab::make_horizontal(on.y, on.x - l1, on.x + l2));
    } else {
      s.push_back(isostab::make_vertical(on.x, on.y - l1, on.y + l2));
    }
  }
  return s;
}

/// Small integer instances; short segments make transversals rare, long
/// ones make them common.
inline Instance small_instance(std::size_t n, std::uint64_t seed, int span = 20, int maxlen = 12) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Instance s;
  for (std::size_t i = 0; i < n; ++i) {
    const int f = pick(0, span), u = pick(0, span), len = pick(1, maxlen);
    if (pick(0, 1)) s.push_back(isostab::make_horizontal(f, u, u + len));
    else s.push_back(isostab::make_vertical(f, u, u + len));
  }
  return s;
}

}  // namespace oracle
