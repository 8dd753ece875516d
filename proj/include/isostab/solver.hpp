#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "isostab/chains.hpp"
#include "isostab/configurations.hpp"
#include "isostab/connections.hpp"
#include "isostab/extremes.hpp"
#include "isostab/intervals.hpp"

namespace isostab {

struct SolveOptions {
  /// Skip candidate pruning: every interval boundary, extra host samples and
  /// refinement from every discrete optimum. Must agree with the default.
  bool exhaustive = false;
};

/// Extreme vertex per role, with the index of its hosting interval.
struct VertexAssignment {
  std::array<RPoint, 4> vertex;
  std::array<std::size_t, 4> interval{};
};

struct ConfigurationLabel {
  Family family = Family::Four;
  std::string code;                    // as read on the instance
  std::optional<Canonical> canonical;  // absent if the code is unregistered
};

struct CandidatePolygon {
  Polygon polygon;
  Rational area;
  ConfigurationLabel config;
  VertexAssignment assignment;
  std::vector<ConnectionSpec> connections;
};

enum class RejectReason { EmptyInput, TooFewExtremes };

const char* reason_name(RejectReason r);

struct Rejected {
  RejectReason reason;
};

struct SolveResult {
  std::variant<StabLine, Rejected, CandidatePolygon> value;

  bool is_polygon() const { return std::holds_alternative<CandidatePolygon>(value); }
  const CandidatePolygon& polygon() const { return std::get<CandidatePolygon>(value); }
};

/// Thrown when an internal invariant (validity, convexity) is violated.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SolveResult solve(const Instance& s, const SolveOptions& opts = {});

/// Everything the optimisation works on, exposed for inspection and tests.
struct Prepared {
  ExtremeSet extremes;
  std::array<CriticalChain, 4> chains;
  /// The extreme segments in role order; extreme vertices live here.
  std::array<Segment, 4> hosts;
  /// Hosts clipped to the box of the four extreme reaches; T and B are
  /// horizontal, L and R vertical, possibly single points. Only used to
  /// seed the search; the optimum may lie outside it.
  std::array<Segment, 4> box;
  std::array<HostPartition, 4> partitions;
  Instance segments;
};

/// Requires at least three distinct extremes and no stabbing line.
Prepared prepare(const Instance& s);

/// Twice the exact area of the smallest convex stabber containing the
/// given vertices (one per host, in role order).
Rational stabber_area2(const Prepared& p, const std::array<RPoint, 4>& v);

/// The smallest convex stabber containing the given vertices: counter-
/// clockwise from the lexicographically smallest vertex, no collinear
/// vertices.
Polygon assemble_polygon(const Prepared& p, const std::array<RPoint, 4>& v);

/// Minimum over the corners of a box of host intervals (one interval index
/// per role). This is the box optimum only where the area is affine in each
/// coordinate over the whole box.
std::pair<VertexAssignment, Rational> optimize_tuple(const Prepared& p, const std::array<std::size_t, 4>& tuple);

/// Interval tuples in lexicographic order; pruned mode drops boundaries that
/// come only from extreme-segment cuts.
std::vector<std::array<std::size_t, 4>> enumerate_tuples(const Prepared& p, bool exhaustive);

/// Chord through `pivot` between the vertical line x = c and the horizontal
/// line y = d minimising the cut-off triangle: pivot is its midpoint.
/// Returns the (y on x = c, x on y = d) pair, clamped to the given ranges.
std::pair<Rational, Rational> case1_midpoint_chord(const RPoint& pivot, const Rational& c, const Rational& d,
                                                   std::pair<Rational, Rational> y_range,
                                                   std::pair<Rational, Rational> x_range);

/// Labels a final polygon: which extreme vertices are corners, the case of
/// each connection and the resulting configuration.
std::pair<ConfigurationLabel, std::vector<ConnectionSpec>> classify(const Prepared& p,
                                                                    const std::array<RPoint, 4>& v);

}  // namespace isostab
