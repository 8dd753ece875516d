#include "isostab/solver.hpp"

#include <algorithm>
#include <optional>

#include "closure.hpp"
#include "model.hpp"

namespace isostab {

const char* reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::EmptyInput: return "EmptyInput";
    case RejectReason::TooFewExtremes: return "TooFewExtremes";
  }
  return "?";
}

namespace {

// Reach of each extreme towards the inside: the coordinate of the extreme
// line (y for top/bottom, x for left/right).
Rational reach(Role r, const Segment& s) {
  switch (r) {
    case Role::Top: return s.horizontal() ? s.fixed : s.lo;
    case Role::Bottom: return s.horizontal() ? s.fixed : s.hi;
    case Role::Left: return s.vertical() ? s.fixed : s.hi;
    case Role::Right: return s.vertical() ? s.fixed : s.lo;
  }
  return 0;
}

Segment clip(Role r, const Segment& s, const Rational& x0, const Rational& x1, const Rational& y0,
             const Rational& y1) {
  const bool want_horizontal = r == Role::Top || r == Role::Bottom;
  const Rational line = reach(r, s);
  Segment h;
  h.axis = want_horizontal ? Axis::Horizontal : Axis::Vertical;
  h.fixed = line;
  if (s.axis == h.axis) {
    const Rational& lo = want_horizontal ? x0 : y0;
    const Rational& hi = want_horizontal ? x1 : y1;
    h.lo = std::max(s.lo, lo);
    h.hi = std::min(s.hi, hi);
  } else {
    // The extreme touches the box only at its inner endpoint.
    h.lo = h.hi = s.fixed;
  }
  if (h.lo > h.hi) throw InternalError("extreme segment misses the reach box");
  return h;
}

}  // namespace

Prepared prepare(const Instance& s) {
  Prepared p;
  p.extremes = find_extremes(s);
  for (Role r : kRoles)
    if (!p.extremes[r]) throw std::invalid_argument("prepare: missing extreme");
  p.chains = build_chains(s);
  auto [rb, lt] = augment_chains_ti(p.chains[0], p.chains[2]);
  auto [rt, lb] = augment_chains_ti(p.chains[1], p.chains[3]);
  p.chains = {rb, rt, lt, lb};
  const Rational yt = reach(Role::Top, p.extremes[Role::Top]->segment);
  const Rational yb = reach(Role::Bottom, p.extremes[Role::Bottom]->segment);
  const Rational xl = reach(Role::Left, p.extremes[Role::Left]->segment);
  const Rational xr = reach(Role::Right, p.extremes[Role::Right]->segment);
  for (Role r : kRoles) {
    p.hosts[static_cast<int>(r)] = p.extremes[r]->segment;
    p.box[static_cast<int>(r)] = clip(r, p.extremes[r]->segment, xl, xr, yb, yt);
  }
  p.partitions = build_partitions(p.hosts, p.chains, p.extremes);
  p.segments = s;
  return p;
}

namespace detail {

Model<Rational> make_model(const Prepared& p) {
  Model<Rational> m;
  for (int k = 0; k < 4; ++k) {
    const Segment& h = p.box[k];
    m.hosts[k] = {h.horizontal(), h.fixed, h.lo, h.hi};
    m.chains[k] = make_chain(p.chains[k].vertices);
  }
  return m;
}

}  // namespace detail

namespace {

std::vector<RPoint> as_vector(const std::array<RPoint, 4>& v) { return {v.begin(), v.end()}; }

}  // namespace

Rational stabber_area2(const Prepared& p, const std::array<RPoint, 4>& v) {
  return detail::make_closure(p.segments).area2(as_vector(v));
}

Polygon assemble_polygon(const Prepared& p, const std::array<RPoint, 4>& v) {
  return convex_hull(detail::make_closure(p.segments).hull(as_vector(v)));
}

std::pair<Rational, Rational> case1_midpoint_chord(const RPoint& pivot, const Rational& c, const Rational& d,
                                                   std::pair<Rational, Rational> y_range,
                                                   std::pair<Rational, Rational> x_range) {
  Rational y = 2 * pivot.y - d;
  Rational x = 2 * pivot.x - c;
  auto clamp = [](const Rational& t, const std::pair<Rational, Rational>& r) {
    return std::min(std::max(t, r.first), r.second);
  };
  const Rational yc = clamp(y, y_range);
  if (yc != y) {
    // Keep the chord through the pivot: re-derive x from the clamped y.
    y = yc;
    if (pivot.y != y) x = c + (d - y) * (pivot.x - c) / (pivot.y - y);
    return {y, clamp(x, x_range)};
  }
  const Rational xc = clamp(x, x_range);
  if (xc != x) {
    x = xc;
    if (pivot.x != x) y = d + (c - x) * (pivot.y - d) / (pivot.x - x);
    return {clamp(y, y_range), x};
  }
  return {y, x};
}

std::vector<std::array<std::size_t, 4>> enumerate_tuples(const Prepared& p, bool exhaustive) {
  std::array<std::vector<std::size_t>, 4> pick;
  for (int k = 0; k < 4; ++k) {
    const auto& iv = p.partitions[k].intervals;
    for (std::size_t i = 0; i < iv.size(); ++i) {
      // Pruned mode merges pieces split only by an extreme-segment cut.
      if (!exhaustive && i > 0 && iv[i].origin == IntervalOrigin::ExtremeSegmentCut) continue;
      pick[k].push_back(i);
    }
  }
  std::vector<std::array<std::size_t, 4>> out;
  for (auto a : pick[0])
    for (auto b : pick[1])
      for (auto c : pick[2])
        for (auto d : pick[3]) out.push_back({a, b, c, d});
  return out;
}

std::pair<VertexAssignment, Rational> optimize_tuple(const Prepared& p, const std::array<std::size_t, 4>& tuple) {
  const auto c = detail::make_closure(p.segments);
  std::optional<std::pair<VertexAssignment, Rational>> best;
  for (int mask = 0; mask < 16; ++mask) {
    VertexAssignment va;
    for (int k = 0; k < 4; ++k) {
      const Interval& iv = p.partitions[k].intervals.at(tuple[k]);
      va.vertex[k] = (mask >> k & 1) ? iv.hi : iv.lo;
      va.interval[k] = tuple[k];
    }
    Rational a = c.area2(as_vector(va.vertex));
    if (!best || a < best->second) best = {va, a};
  }
  best->second /= 2;
  return *best;
}

}  // namespace isostab

namespace isostab {

std::pair<ConfigurationLabel, std::vector<ConnectionSpec>> classify(const Prepared& p,
                                                                    const std::array<RPoint, 4>& v) {
  const Polygon poly = assemble_polygon(p, v);
  const auto& pv = poly.vertices;
  const std::size_t n = pv.size();

  // Polygon vertices on each host, as (first, last) in boundary order. A
  // host that cuts through the interior has no run.
  struct Run {
    std::size_t first, last;
  };
  std::array<std::optional<Run>, 4> run;
  for (int k = 0; k < 4; ++k) {
    const Segment& h = p.hosts[k];
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < n; ++i)
      if (on_segment(pv[i], h.low_end(), h.high_end())) on.push_back(i);
    if (on.size() == 1) run[k] = Run{on[0], on[0]};
    else if (on.size() == 2 && (on[0] + 1) % n == on[1]) run[k] = Run{on[0], on[1]};
    else if (on.size() == 2 && (on[1] + 1) % n == on[0]) run[k] = Run{on[1], on[0]};
  }
  auto touching = [&](int a, int b) {
    return run[a]->last == run[b]->first || run[a]->first == run[b]->first || run[a]->last == run[b]->last;
  };

  // Roles with a run, grouped when consecutive runs share a vertex.
  std::vector<int> present;
  for (int k = 0; k < 4; ++k)
    if (run[k]) present.push_back(k);
  std::vector<std::vector<int>> groups;
  if (!present.empty()) {
    const std::size_t m = present.size();
    std::size_t s0 = 0;
    while (s0 < m && touching(present[(s0 + m - 1) % m], present[s0])) ++s0;
    if (s0 == m) {
      groups.push_back(present);
    } else {
      for (std::size_t t = 0; t < m; ++t) {
        const int k = present[(s0 + t) % m];
        if (t == 0 || !touching(groups.back().back(), k)) groups.emplace_back();
        groups.back().push_back(k);
      }
    }
  }

  std::vector<RPoint> contacts;
  for (const auto& c : p.chains) contacts.insert(contacts.end(), c.vertices.begin(), c.vertices.end());

  std::vector<ConnectionSpec> links;
  std::vector<int> bypass_count;
  const std::size_t np = groups.size();
  for (std::size_t i = 0; i < np && np >= 2; ++i) {
    const int a = groups[i].back();
    const int b = groups[(i + 1) % np].front();
    const std::size_t ia = run[a]->last, ib = run[b]->first;
    std::vector<RPoint> via;
    for (std::size_t t = (ia + 1) % n; t != ib; t = (t + 1) % n) via.push_back(pv[t]);
    std::vector<Role> by;
    for (int k = (a + 1) % 4; k != b; k = (k + 1) % 4) by.push_back(static_cast<Role>(k));
    ConnectionType t = ConnectionType::Case0;
    if (!via.empty()) {
      t = ConnectionType::Case2;
    } else {
      for (const auto& q : contacts)
        if (q != pv[ia] && q != pv[ib] && on_segment(q, pv[ia], pv[ib])) {
          t = ConnectionType::Case1;
          via.push_back(q);
          break;
        }
    }
    bypass_count.push_back(static_cast<int>(by.size()));
    if (by.size() > 2) by.resize(2);
    links.emplace_back(t, pv[ia], pv[ib], via, by);
  }

  ConfigurationLabel label;
  auto digit = [&](std::size_t i) { return char('0' + static_cast<int>(links[i].ctype)); };
  if (np == 4) {
    label.family = Family::Four;
    for (std::size_t i = 0; i < 4; ++i) label.code += digit(i);
  } else if (np == 3) {
    label.family = Family::Three;
    // The bypassing connection goes in the middle. Without one, two roles
    // share a vertex and the connection away from that vertex takes its place.
    std::size_t bi = 0;
    while (bi < 3 && bypass_count[bi] == 0) ++bi;
    if (bi == 3) {
      std::size_t g = 0;
      while (g < 3 && groups[g].size() < 2) ++g;
      bi = (g + 1) % 3;
    }
    for (std::size_t t = 0; t < 3; ++t) label.code += digit((bi + 2 + t) % 3);
  } else if (np == 2) {
    if (bypass_count[0] == 1 && bypass_count[1] == 1) {
      label.family = Family::TwoBothBypass;
      label.code = {digit(0), digit(1)};
    } else {
      label.family = Family::TwoOneRegular;
      const std::size_t reg = bypass_count[0] == 0 ? 0 : 1;
      label.code = {digit(reg), digit(1 - reg)};
    }
  }
  if (!label.code.empty()) {
    try {
      label.canonical = canonical_code(label.code, label.family);
    } catch (const std::invalid_argument&) {
      label.canonical.reset();
    }
  }
  return {label, links};
}

}  // namespace isostab
