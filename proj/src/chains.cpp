#include "isostab/chains.hpp"

namespace isostab {

const char* chain_name(ChainId c) {
  switch (c) {
    case ChainId::RB: return "RB";
    case ChainId::RT: return "RT";
    case ChainId::LT: return "LT";
    case ChainId::LB: return "LB";
  }
  return "?";
}

std::vector<RPoint> chain_source_points(const Instance& s, ChainId id) {
  const bool use_right = id == ChainId::RB || id == ChainId::RT;
  const bool use_top = id == ChainId::RT || id == ChainId::LT;
  std::vector<RPoint> pts;
  pts.reserve(s.size());
  for (const auto& seg : s) {
    if (seg.horizontal()) pts.push_back(use_right ? seg.right() : seg.left());
    else pts.push_back(use_top ? seg.top() : seg.bot());
  }
  return pts;
}

namespace {

// Outward axis normal a chain starts at (index 0) and ends at (index 1).
// Directions: 0 up, 1 left, 2 down, 3 right.
int start_dir(ChainId id) { return static_cast<int>(id); }

Rational along(const RPoint& p, int dir) {
  switch (dir % 4) {
    case 0: return p.y;
    case 1: return -p.x;
    case 2: return -p.y;
    default: return p.x;
  }
}

}  // namespace

CriticalChain build_chain(const Instance& s, ChainId id) {
  CriticalChain out{id, {}};
  if (s.empty()) return out;
  std::vector<RPoint> h = hull_points(chain_source_points(s, id));
  const std::size_t m = h.size();
  if (m == 1) {
    out.vertices = h;
    return out;
  }
  const int d0 = start_dir(id);
  const int d1 = d0 + 1;
  auto best = [&](int dir) {
    Rational v = along(h[0], dir);
    for (const auto& p : h) if (along(p, dir) > v) v = along(p, dir);
    return v;
  };
  const Rational b0 = best(d0);
  const Rational b1 = best(d1);
  // First maximiser of d0 in CCW order, last maximiser of d1.
  std::size_t start = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (along(h[i], d0) == b0 && along(h[(i + m - 1) % m], d0) != b0) { start = i; break; }
  }
  std::size_t end = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (along(h[i], d1) == b1 && along(h[(i + 1) % m], d1) != b1) { end = i; break; }
  }
  for (std::size_t i = start;; i = (i + 1) % m) {
    out.vertices.push_back(h[i]);
    if (i == end) break;
  }
  return out;
}

std::array<CriticalChain, 4> build_chains(const Instance& s) {
  return {build_chain(s, ChainId::RB), build_chain(s, ChainId::RT), build_chain(s, ChainId::LT),
          build_chain(s, ChainId::LB)};
}

bool line_stabs(const StabLine& l, const Segment& s) {
  if (l.vertical) {
    if (s.vertical()) return s.fixed == l.c;
    return s.lo <= l.c && l.c <= s.hi;
  }
  if (s.vertical()) {
    Rational y = l.a * s.fixed + l.b;
    return s.lo <= y && y <= s.hi;
  }
  // a x + b = fixed for some x in [lo, hi]
  Rational ylo = l.a * s.lo + l.b;
  Rational yhi = l.a * s.hi + l.b;
  return std::min(ylo, yhi) <= s.fixed && s.fixed <= std::max(ylo, yhi);
}

namespace {

// b >= py - a px for all lower points, b <= qy - a qx for all upper points.
struct Sandwich {
  const std::vector<RPoint>& lower;
  const std::vector<RPoint>& upper;

  Rational lo_env(const Rational& a) const {
    Rational v = lower[0].y - a * lower[0].x;
    for (const auto& p : lower) {
      Rational t = p.y - a * p.x;
      if (t > v) v = t;
    }
    return v;
  }
  Rational up_env(const Rational& a) const {
    Rational v = upper[0].y - a * upper[0].x;
    for (const auto& q : upper) {
      Rational t = q.y - a * q.x;
      if (t < v) v = t;
    }
    return v;
  }
  Rational gap(const Rational& a) const { return lo_env(a) - up_env(a); }
};

std::vector<Rational> hull_edge_slopes(const std::vector<RPoint>& pts) {
  std::vector<RPoint> h = hull_points(pts);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const RPoint& p = h[i];
    const RPoint& q = h[(i + 1) % h.size()];
    if (p.x != q.x) out.push_back((q.y - p.y) / (q.x - p.x));
  }
  return out;
}

std::optional<StabLine> sandwich_line(const std::vector<RPoint>& lower, const std::vector<RPoint>& upper) {
  Sandwich sw{lower, upper};
  std::vector<Rational> cands = hull_edge_slopes(lower);
  for (auto& a : hull_edge_slopes(upper)) cands.push_back(a);
  cands.push_back(Rational(0));
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const auto& a : cands) {
    if (sgn(sw.gap(a)) <= 0) return StabLine{false, a, sw.lo_env(a), Rational(0)};
  }
  // Beyond the last breakpoint the gap is affine; follow it if it decreases.
  auto extend = [&](const Rational& a0, int dir) -> std::optional<StabLine> {
    Rational a1 = a0 + dir;
    Rational slope = sw.gap(a1) - sw.gap(a0);  // change per unit step outward
    if (sgn(slope) >= 0) return std::nullopt;
    Rational steps = sw.gap(a0) / (-slope) + 1;
    Rational a = a0 + steps * dir;
    if (sgn(sw.gap(a)) > 0) return std::nullopt;
    return StabLine{false, a, sw.lo_env(a), Rational(0)};
  };
  if (auto l = extend(cands.back(), +1)) return l;
  return extend(cands.front(), -1);
}

std::optional<StabLine> vertical_line(const Instance& s) {
  std::optional<Rational> x;
  Rational lo, hi;
  bool have_range = false;
  for (const auto& seg : s) {
    if (seg.vertical()) {
      if (x && *x != seg.fixed) return std::nullopt;
      x = seg.fixed;
    } else {
      if (!have_range) { lo = seg.lo; hi = seg.hi; have_range = true; }
      else { if (seg.lo > lo) lo = seg.lo; if (seg.hi < hi) hi = seg.hi; }
    }
  }
  if (have_range && lo > hi) return std::nullopt;
  Rational c = x ? *x : lo;
  if (have_range && (c < lo || c > hi)) return std::nullopt;
  return StabLine{true, 0, 0, c};
}

}  // namespace

std::optional<StabLine> detect_line_stabber(const Instance& s) {
  if (s.empty()) return std::nullopt;
  if (auto v = vertical_line(s)) return v;
  if (auto l = sandwich_line(chain_source_points(s, ChainId::RB), chain_source_points(s, ChainId::LT))) return l;
  return sandwich_line(chain_source_points(s, ChainId::LB), chain_source_points(s, ChainId::RT));
}

namespace {

std::vector<RPoint> insert_on_edges(const std::vector<RPoint>& chain, const std::vector<RPoint>& other) {
  std::vector<RPoint> out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    out.push_back(chain[i]);
    if (i + 1 == chain.size()) break;
    const RPoint& a = chain[i];
    const RPoint& b = chain[i + 1];
    std::vector<RPoint> mid;
    for (const auto& p : other) {
      if (p != a && p != b && on_segment(p, a, b)) mid.push_back(p);
    }
    // order by distance from a along the edge
    std::sort(mid.begin(), mid.end(), [&](const RPoint& p, const RPoint& q) {
      Rational dp = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
      Rational dq = (q.x - a.x) * (b.x - a.x) + (q.y - a.y) * (b.y - a.y);
      return dp < dq;
    });
    mid.erase(std::unique(mid.begin(), mid.end()), mid.end());
    for (auto& p : mid) out.push_back(p);
  }
  return out;
}

}  // namespace

std::pair<CriticalChain, CriticalChain> augment_chains_ti(const CriticalChain& a, const CriticalChain& b) {
  CriticalChain na{a.id, insert_on_edges(a.vertices, b.vertices)};
  CriticalChain nb{b.id, insert_on_edges(b.vertices, a.vertices)};
  return {na, nb};
}

}  // namespace isostab
