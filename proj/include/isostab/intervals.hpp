#pragma once

#include <map>
#include <optional>

#include "isostab/chains.hpp"
#include "isostab/extremes.hpp"

namespace isostab {

enum class IntervalOrigin { Initial, ChainEdgeExtension, ExtremeSegmentCut };

const char* origin_name(IntervalOrigin o);

/// Which end of a chain touches the host. A chain leaves the host at its
/// start (tangents from host points) and arrives at its end (tangents to them).
enum class ChainEnd { Start, End };

/// Tangent point from `a` to a convex chain: every chain vertex lies on or
/// to the left of a -> p. Among collinear candidates the one furthest along
/// the chain is returned. Index into chain.vertices.
template <class T>
std::size_t tangent_from(const Point<T>& a, const std::vector<Point<T>>& chain) {
  std::size_t best = chain.size();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] == a) continue;
    if (best == chain.size() || sign(cross(a, chain[best], chain[i])) <= 0) best = i;
  }
  return best == chain.size() ? 0 : best;
}

/// Tangent point to `b`: every chain vertex lies on or to the left of p -> b.
/// Among collinear candidates the earliest along the chain is returned.
template <class T>
std::size_t tangent_to(const Point<T>& b, const std::vector<Point<T>>& chain) {
  std::size_t best = chain.size();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] == b) continue;
    if (best == chain.size() || sign(cross(b, chain[best], chain[i])) > 0) best = i;
  }
  return best == chain.size() ? 0 : best;
}

struct Interval {
  Role host = Role::Top;
  RPoint lo;  // ordered by the host's varying coordinate
  RPoint hi;
  std::map<ChainId, RPoint> tangent;
  IntervalOrigin origin = IntervalOrigin::Initial;  // how the lower boundary arose
};

/// Ordered intervals covering one host segment.
struct HostPartition {
  Role host = Role::Top;
  Segment segment;
  std::vector<Interval> intervals;

  /// Boundary parameters (varying coordinate), both host endpoints included.
  std::vector<Rational> cuts() const;
};

/// Splits `host` at every interior point where the extension of a chain
/// edge crosses it, and records the chain's tangent vertex for each piece.
HostPartition set_intervals_by_chain(Role role, const Segment& host, const CriticalChain& chain, ChainEnd end);

/// Adds a tangent-free split where the supporting line of `other` crosses
/// the interior of the host. Idempotent.
void set_intervals_by_extreme(HostPartition& part, const Segment& other);

/// Tangent entries of `chain` are (re)computed for every interval and any
/// missing chain-edge splits are added. Used to merge the two chains
/// adjacent to one host into one partition.
void merge_chain(HostPartition& part, const CriticalChain& chain, ChainEnd end);

/// Per-role partitions of the given hosts by their two adjacent chains and
/// the other extreme segments.
std::array<HostPartition, 4> build_partitions(const std::array<Segment, 4>& hosts,
                                              const std::array<CriticalChain, 4>& chains,
                                              const ExtremeSet& extremes);

}  // namespace isostab
