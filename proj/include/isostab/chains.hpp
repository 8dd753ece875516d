#pragma once

#include <array>
#include <optional>
#include <utility>

#include "isostab/extremes.hpp"
#include "isostab/geom.hpp"

namespace isostab {

/// Critical chains, indexed by the connection they underlie:
/// RB under top->left, RT under left->bottom, LT under bottom->right,
/// LB under right->top.
enum class ChainId { RB = 0, RT = 1, LT = 2, LB = 3 };

inline constexpr std::array<ChainId, 4> kChains{ChainId::RB, ChainId::RT, ChainId::LT, ChainId::LB};

const char* chain_name(ChainId c);

struct CriticalChain {
  ChainId id = ChainId::RB;
  /// Counterclockwise along the would-be polygon boundary, i.e. from the
  /// chain's start role (top for RB) to its end role (left for RB).
  std::vector<RPoint> vertices;
};

/// The endpoint set a chain is built from, e.g. right() and bot() for RB.
std::vector<RPoint> chain_source_points(const Instance& s, ChainId id);

/// The arc of the hull of the source points whose outward normals lie in
/// the chain's quadrant (both axis-aligned edges included).
CriticalChain build_chain(const Instance& s, ChainId id);

std::array<CriticalChain, 4> build_chains(const Instance& s);

/// Non-vertical line y = a x + b, or the vertical line x = c.
struct StabLine {
  bool vertical = false;
  Rational a, b, c;
};

bool line_stabs(const StabLine& l, const Segment& s);

/// A line meeting every segment, or nothing. Slanted lines come from the
/// two hull-sandwich conditions solved as exact 2-variable feasibility.
std::optional<StabLine> detect_line_stabber(const Instance& s);

/// Inserts into each chain the vertices of the other that lie in the
/// relative interior of one of its edges. Shape-preserving and idempotent.
std::pair<CriticalChain, CriticalChain> augment_chains_ti(const CriticalChain& a, const CriticalChain& b);

}  // namespace isostab
