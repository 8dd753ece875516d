#include "isostab/intervals.hpp"

#include <algorithm>

namespace isostab {

const char* origin_name(IntervalOrigin o) {
  switch (o) {
    case IntervalOrigin::Initial: return "initial";
    case IntervalOrigin::ChainEdgeExtension: return "chain-edge";
    case IntervalOrigin::ExtremeSegmentCut: return "extreme-cut";
  }
  return "?";
}

std::vector<Rational> HostPartition::cuts() const {
  std::vector<Rational> out;
  for (const auto& iv : intervals) out.push_back(segment.param_of(iv.lo));
  if (!intervals.empty()) out.push_back(segment.param_of(intervals.back().hi));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Crossing parameter of the line through p, q with the host's supporting
// line, if it lies strictly inside the host.
std::optional<Rational> interior_cut(const Segment& host, const RPoint& p, const RPoint& q) {
  const Rational pf = host.horizontal() ? p.y : p.x;
  const Rational qf = host.horizontal() ? q.y : q.x;
  if (pf == qf) return std::nullopt;
  const Rational pv = host.horizontal() ? p.x : p.y;
  const Rational qv = host.horizontal() ? q.x : q.y;
  Rational u = pv + (host.fixed - pf) * (qv - pv) / (qf - pf);
  if (host.lo < u && u < host.hi) return u;
  return std::nullopt;
}

void split_at(HostPartition& part, const Rational& u, IntervalOrigin origin) {
  for (std::size_t i = 0; i < part.intervals.size(); ++i) {
    Interval& iv = part.intervals[i];
    const Rational a = part.segment.param_of(iv.lo);
    const Rational b = part.segment.param_of(iv.hi);
    if (u <= a || u >= b) continue;
    Interval right = iv;
    right.lo = part.segment.at(u);
    right.origin = origin;
    iv.hi = right.lo;
    part.intervals.insert(part.intervals.begin() + static_cast<std::ptrdiff_t>(i) + 1, right);
    return;
  }
}

RPoint midpoint(const RPoint& a, const RPoint& b) {
  return {Rational((a.x + b.x) / 2), Rational((a.y + b.y) / 2)};
}

}  // namespace

void merge_chain(HostPartition& part, const CriticalChain& chain, ChainEnd end) {
  const auto& v = chain.vertices;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (auto u = interior_cut(part.segment, v[i], v[i + 1])) split_at(part, *u, IntervalOrigin::ChainEdgeExtension);
  }
  if (v.empty()) return;
  for (auto& iv : part.intervals) {
    const RPoint m = midpoint(iv.lo, iv.hi);
    const std::size_t k = end == ChainEnd::Start ? tangent_from(m, v) : tangent_to(m, v);
    iv.tangent[chain.id] = v[k];
  }
}

HostPartition set_intervals_by_chain(Role role, const Segment& host, const CriticalChain& chain, ChainEnd end) {
  HostPartition part;
  part.host = role;
  part.segment = host;
  Interval whole;
  whole.host = role;
  whole.lo = host.low_end();
  whole.hi = host.high_end();
  part.intervals.push_back(whole);
  merge_chain(part, chain, end);
  return part;
}

void set_intervals_by_extreme(HostPartition& part, const Segment& other) {
  const Segment& h = part.segment;
  if (other.axis == h.axis) return;  // parallel supporting lines never cut
  const Rational& u = other.fixed;
  if (h.lo < u && u < h.hi) split_at(part, u, IntervalOrigin::ExtremeSegmentCut);
}

std::array<HostPartition, 4> build_partitions(const std::array<Segment, 4>& hosts,
                                              const std::array<CriticalChain, 4>& chains,
                                              const ExtremeSet& extremes) {
  std::array<HostPartition, 4> out;
  for (int k = 0; k < 4; ++k) {
    const Role role = static_cast<Role>(k);
    // Chain k leaves slot k; chain k-1 arrives at it.
    out[k] = set_intervals_by_chain(role, hosts[k], chains[k], ChainEnd::Start);
    merge_chain(out[k], chains[(k + 3) % 4], ChainEnd::End);
    for (int j = 0; j < 4; ++j) {
      if (j == k || !extremes.slots[j]) continue;
      set_intervals_by_extreme(out[k], extremes.slots[j]->segment);
    }
  }
  return out;
}

}  // namespace isostab
