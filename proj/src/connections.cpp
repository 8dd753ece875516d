#include "isostab/connections.hpp"

#include <algorithm>

namespace isostab {

namespace {

// Does closed segment ab meet closed segment pq anywhere other than at `shared`?
bool contact_besides(const RPoint& a, const RPoint& b, const RPoint& p, const RPoint& q,
                     const RPoint* shared) {
  if (!segments_touch(a, b, p, q)) return false;
  if (!shared) return true;
  const int o1 = sgn(cross(a, b, p));
  const int o2 = sgn(cross(a, b, q));
  if (o1 != 0 || o2 != 0 || a == b) {
    // Proper or endpoint crossing: a single common point.
    if (a == b) return a != *shared;
    if (p == q) return p != *shared;
    const Rational d = cross(p, q, a) - cross(p, q, b);
    if (d == 0) return true;
    const Rational t = cross(p, q, a) / d;
    RPoint x{Rational(a.x + t * (b.x - a.x)), Rational(a.y + t * (b.y - a.y))};
    return x != *shared;
  }
  // Collinear overlap: only acceptable if it degenerates to `shared`.
  auto key = [&](const RPoint& r) { return a.x != b.x ? r.x : r.y; };
  Rational lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
  Rational lo2 = std::min(key(p), key(q)), hi2 = std::max(key(p), key(q));
  Rational lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
  if (lo != hi) return true;
  const RPoint& at = key(a) == lo ? a : key(b) == lo ? b : key(p) == lo ? p : q;
  return at != *shared;
}

bool chain_contact(const RPoint& a, const RPoint& b, const CriticalChain& c, const RPoint* shared,
                   bool skip_first, bool skip_last) {
  const auto& v = c.vertices;
  if (v.size() == 1) {
    if (!on_segment(v[0], a, b)) return false;
    return !shared || v[0] != *shared;
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (skip_first && i == 0) continue;
    if (skip_last && i + 2 == v.size()) continue;
    if (contact_besides(a, b, v[i], v[i + 1], shared)) return true;
  }
  return false;
}

bool bypass_body(const RPoint& a, const RPoint& b, const Segment& bypassed, std::span<const CriticalChain> chains,
                 const RPoint* shared) {
  if (!bypass_contained(a, b, bypassed)) return false;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const bool nearest_end = i == 0;                     // first chain ends at the bypassed side
    const bool nearest_start = i + 1 == chains.size();  // last chain starts there
    if (chain_contact(a, b, chains[i], shared, nearest_start && chains.size() > 1, nearest_end && chains.size() > 1))
      return false;
  }
  return true;
}

}  // namespace

bool bypass_contained(const RPoint& a, const RPoint& b, const Segment& s) {
  const RPoint p = s.low_end();
  const RPoint q = s.high_end();
  if (segments_touch(a, b, p, q)) return true;
  return sgn(cross(a, b, p)) >= 0 && sgn(cross(a, b, q)) >= 0;
}

bool is_case0(const RPoint& a, const RPoint& b, const CriticalChain& chain) {
  return !chain_contact(a, b, chain, nullptr, false, false);
}

bool is_case0_comm_endpoint(const RPoint& a, const RPoint& b, const CriticalChain& chain, const RPoint& shared) {
  return !chain_contact(a, b, chain, &shared, false, false);
}

bool is_case0_bypass(const RPoint& a, const RPoint& b, const Segment& bypassed,
                     std::span<const CriticalChain> chains) {
  return bypass_body(a, b, bypassed, chains, nullptr);
}

bool is_case0_bypass_comm_endpoint(const RPoint& a, const RPoint& b, const Segment& bypassed,
                                   std::span<const CriticalChain> chains, const RPoint& shared) {
  return bypass_body(a, b, bypassed, chains, &shared);
}

bool is_case1_bypass(const RPoint& a, const RPoint& b, const RPoint& pivot, const Segment& bypassed,
                     std::span<const CriticalChain> chains) {
  if (sgn(cross(a, pivot, b)) != 0) throw PreconditionError("is_case1_bypass: a, pivot, b not collinear");
  for (const auto& c : chains) {
    const auto& v = c.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != pivot) continue;
      if (i > 0 && sgn(cross(a, b, v[i - 1])) < 0) return false;
      if (i + 1 < v.size() && sgn(cross(a, b, v[i + 1])) < 0) return false;
      return bypass_contained(a, b, bypassed);
    }
  }
  throw PreconditionError("is_case1_bypass: pivot is not a chain vertex");
}

bool is_case2_bypass(const ConnectionSpec& spec, const Segment& bypassed, std::span<const CriticalChain> chains) {
  if (spec.via.empty()) throw PreconditionError("is_case2_bypass: empty via list");
  std::vector<RPoint> all;
  for (const auto& c : chains)
    for (const auto& p : c.vertices)
      if (all.empty() || all.back() != p) all.push_back(p);
  auto contiguous = [&](const std::vector<RPoint>& via) {
    for (std::size_t i = 0; i + via.size() <= all.size(); ++i)
      if (std::equal(via.begin(), via.end(), all.begin() + static_cast<std::ptrdiff_t>(i))) return true;
    return false;
  };
  if (!contiguous(spec.via)) {
    // A subchain walked backwards is a well-formed query that fails.
    if (contiguous(std::vector<RPoint>(spec.via.rbegin(), spec.via.rend()))) return false;
    throw PreconditionError("is_case2_bypass: via is not a contiguous subchain");
  }

  std::vector<RPoint> path{spec.from};
  for (const auto& p : spec.via) path.push_back(p);
  path.push_back(spec.to);
  for (std::size_t i = 0; i + 2 < path.size(); ++i)
    if (sgn(cross(path[i], path[i + 1], path[i + 2])) < 0) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    for (const auto& p : all)
      if (sgn(cross(path[i], path[i + 1], p)) < 0) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (segments_touch(path[i], path[i + 1], bypassed.low_end(), bypassed.high_end())) return true;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (sgn(cross(path[i], path[i + 1], bypassed.low_end())) < 0 ||
        sgn(cross(path[i], path[i + 1], bypassed.high_end())) < 0)
      return false;
  return true;
}

}  // namespace isostab
