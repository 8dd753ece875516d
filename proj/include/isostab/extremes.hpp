#pragma once

#include <array>
#include <optional>
#include <span>

#include "isostab/geom.hpp"

namespace isostab {

/// Extreme roles in counterclockwise polygon order.
enum class Role { Top = 0, Left = 1, Bottom = 2, Right = 3 };

inline constexpr std::array<Role, 4> kRoles{Role::Top, Role::Left, Role::Bottom, Role::Right};

const char* role_name(Role r);

enum class Provenance { UniqueVertical, UniqueHorizontal, MergedMultiple, Synthetic };

const char* provenance_name(Provenance p);

struct ExtremeSlot {
  Segment segment;
  Provenance provenance = Provenance::UniqueHorizontal;
  std::vector<std::size_t> sources;  // indices into the instance
};

struct ExtremeSet {
  std::array<std::optional<ExtremeSlot>, 4> slots;

  const std::optional<ExtremeSlot>& operator[](Role r) const { return slots[static_cast<int>(r)]; }
  std::optional<ExtremeSlot>& operator[](Role r) { return slots[static_cast<int>(r)]; }
};

/// Two-candidate rule for each role: the vertical segment whose inner
/// endpoint reaches furthest against the highest (furthest) horizontal.
/// A tie goes to the horizontal side.
ExtremeSet find_extremes(const Instance& s);

struct Resolved {
  Segment segment;
  bool synthetic = false;
};

/// Collapses collinear segments tied for a role. If the rightmost left end
/// (RED) is not past the leftmost right end (BLUE) the result is their common
/// intersection; otherwise it is the synthetic span [BLUE, RED].
/// The result may be a single point (lo == hi).
Resolved resolve_multiplicity(std::span<const Segment> candidates, Role role);

int count_distinct_extremes(const ExtremeSet& e);

}  // namespace isostab
