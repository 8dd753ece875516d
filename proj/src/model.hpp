#pragma once

// Link-sum form of the stabber area for fixed extreme vertices.
//
// With every extreme vertex restricted to the box spanned by the four
// extreme reaches, the minimal stabber through v_T, v_L, v_B, v_R is the
// convex polygon obtained by joining consecutive vertices and wrapping each
// chord around the part of its critical chain lying strictly outside it.
// Its area is the sum over the four links of the shoelace contribution of
// that path, which the model evaluates exactly or in double precision.

#include <array>
#include <optional>
#include <vector>

#include "isostab/chains.hpp"
#include "isostab/intervals.hpp"

namespace isostab::detail {

template <class T>
T cross0(const Point<T>& a, const Point<T>& b) {
  return T(a.x * b.y - a.y * b.x);
}

template <class T>
struct Host {
  bool horizontal = true;
  T fixed{};
  T lo{};
  T hi{};

  Point<T> at(const T& u) const { return horizontal ? Point<T>{u, fixed} : Point<T>{fixed, u}; }
  T param(const Point<T>& p) const { return horizontal ? p.x : p.y; }
};

template <class T>
struct Chain {
  std::vector<Point<T>> v;
  std::vector<T> prefix;  // prefix[i] = sum_{j < i} cross0(v[j], v[j+1])
};

/// Result of wrapping one chord around its chain.
struct LinkPath {
  bool cut = false;      // some chain vertex strictly outside the chord
  bool touch = false;    // some chain vertex on the closed chord
  std::size_t first = 0;  // via = v[first..last] when cut
  std::size_t last = 0;
};

template <class T>
struct Model {
  std::array<Host<T>, 4> hosts;
  std::array<Chain<T>, 4> chains;

  Point<T> point(int k, const T& u) const { return hosts[k].at(u); }

  LinkPath path(int k, const Point<T>& a, const Point<T>& b) const {
    LinkPath lp;
    const auto& v = chains[k].v;
    if (v.empty() || a == b) return lp;
    for (const auto& c : v) {
      const int s = sign(cross(a, b, c));
      if (s < 0) lp.cut = true;
    }
    if (!lp.cut) return lp;
    lp.first = tangent_from(a, v);
    lp.last = tangent_to(b, v);
    return lp;
  }

  /// Shoelace contribution of link k from a to b (twice the area).
  T link2(int k, const Point<T>& a, const Point<T>& b) const {
    if (a == b) return T(0);
    const auto& c = chains[k];
    if (c.v.empty()) return cross0(a, b);
    bool cut = false;
    for (const auto& p : c.v)
      if (sign(cross(a, b, p)) < 0) { cut = true; break; }
    if (!cut) return cross0(a, b);
    const std::size_t i = tangent_from(a, c.v);
    const std::size_t j = tangent_to(b, c.v);
    if (i <= j) return T(cross0(a, c.v[i]) + (c.prefix[j] - c.prefix[i]) + cross0(c.v[j], b));
    return slow_link2(k, a, b);
  }

  T slow_link2(int k, const Point<T>& a, const Point<T>& b) const {
    std::vector<Point<T>> pts{a, b};
    for (const auto& p : chains[k].v)
      if (sign(cross(a, b, p)) < 0) pts.push_back(p);
    auto h = hull_points(pts);
    T cap = h.size() < 3 ? T(0) : twice_signed_area(h);
    return T(cross0(a, b) + cap);
  }

  /// Twice the area of the minimal stabber through v.
  T area2(const std::array<Point<T>, 4>& v) const {
    T s = 0;
    for (int k = 0; k < 4; ++k) s += link2(k, v[k], v[(k + 1) % 4]);
    return s;
  }

  T area2_params(const std::array<T, 4>& u) const {
    return area2({point(0, u[0]), point(1, u[1]), point(2, u[2]), point(3, u[3])});
  }

  /// Where the line through a and its tangent on chain k meets host k+1.
  std::optional<T> forward(int k, const Point<T>& a) const {
    const auto& v = chains[k].v;
    if (v.empty()) return std::nullopt;
    const Point<T>& p = v[tangent_from(a, v)];
    return meet(hosts[(k + 1) % 4], a, p);
  }

  /// Where the line through b and its tangent on chain k-1 meets host k-1.
  std::optional<T> backward(int k, const Point<T>& b) const {
    const int j = (k + 3) % 4;
    const auto& v = chains[j].v;
    if (v.empty()) return std::nullopt;
    const Point<T>& p = v[tangent_to(b, v)];
    return meet(hosts[j], b, p);
  }

  /// Host parameter of the crossing of line pq with the host's line, if it
  /// lies within the host.
  static std::optional<T> meet(const Host<T>& h, const Point<T>& p, const Point<T>& q) {
    if (p == q) return std::nullopt;
    const T pf = h.horizontal ? p.y : p.x;
    const T qf = h.horizontal ? q.y : q.x;
    if (pf == qf) return std::nullopt;
    const T pv = h.horizontal ? p.x : p.y;
    const T qv = h.horizontal ? q.x : q.y;
    T u = T(pv + (h.fixed - pf) * (qv - pv) / (qf - pf));
    if (u < h.lo || u > h.hi) return std::nullopt;
    return u;
  }
};

template <class T>
Chain<T> make_chain(const std::vector<Point<T>>& v) {
  Chain<T> c{v, {}};
  c.prefix.assign(v.size(), T(0));
  for (std::size_t i = 1; i < v.size(); ++i) c.prefix[i] = T(c.prefix[i - 1] + cross0(v[i - 1], v[i]));
  return c;
}

inline Model<double> to_double(const Model<Rational>& m) {
  Model<double> d;
  for (int k = 0; k < 4; ++k) {
    const auto& h = m.hosts[k];
    d.hosts[k] = {h.horizontal, h.fixed.get_d(), h.lo.get_d(), h.hi.get_d()};
    std::vector<DPoint> pts;
    for (const auto& p : m.chains[k].v) pts.push_back(isostab::to_double(p));
    d.chains[k] = make_chain(pts);
  }
  return d;
}

}  // namespace isostab::detail
