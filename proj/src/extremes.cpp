#include "isostab/extremes.hpp"

#include "isostab/transform.hpp"

namespace isostab {

const char* role_name(Role r) {
  switch (r) {
    case Role::Top: return "top";
    case Role::Left: return "left";
    case Role::Bottom: return "bottom";
    case Role::Right: return "right";
  }
  return "?";
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::UniqueVertical: return "unique-vertical";
    case Provenance::UniqueHorizontal: return "unique-horizontal";
    case Provenance::MergedMultiple: return "merged";
    case Provenance::Synthetic: return "synthetic";
  }
  return "?";
}

namespace {

// Rotation carrying each role onto the top role.
Dihedral to_top(Role r) {
  switch (r) {
    case Role::Top: return {0, false};
    case Role::Left: return {3, false};
    case Role::Bottom: return {2, false};
    case Role::Right: return {1, false};
  }
  return {};
}

// Resolves collinear candidates on one supporting line.
Resolved merge_collinear(std::span<const Segment> c) {
  Rational red = c.front().lo;
  Rational blue = c.front().hi;
  for (const auto& s : c) {
    if (s.lo > red) red = s.lo;
    if (s.hi < blue) blue = s.hi;
  }
  Segment out = c.front();
  if (red <= blue) {
    out.lo = red;
    out.hi = blue;
    return {out, false};
  }
  out.lo = blue;
  out.hi = red;
  return {out, true};
}

// Top-most extreme of an already rotated instance.
std::optional<ExtremeSlot> top_of(const Instance& s) {
  std::vector<std::size_t> tv, th;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].vertical()) {
      if (tv.empty() || s[i].lo > s[tv[0]].lo) tv = {i};
      else if (s[i].lo == s[tv[0]].lo) tv.push_back(i);
    } else {
      if (th.empty() || s[i].fixed > s[th[0]].fixed) th = {i};
      else if (s[i].fixed == s[th[0]].fixed) th.push_back(i);
    }
  }
  const bool vertical_wins = !tv.empty() && (th.empty() || s[tv[0]].lo > s[th[0]].fixed);
  const auto& group = vertical_wins ? tv : th;
  if (group.empty()) return std::nullopt;

  ExtremeSlot slot;
  if (group.size() == 1) {
    slot.segment = s[group[0]];
    slot.provenance = vertical_wins ? Provenance::UniqueVertical : Provenance::UniqueHorizontal;
    slot.sources = group;
    return slot;
  }
  if (vertical_wins) {
    // Tied verticals: only those sharing the smallest supporting x are merged
    // (transposed RED/BLUE rule); ties at distinct x keep that leftmost line.
    Rational x = s[group[0]].fixed;
    for (auto i : group) if (s[i].fixed < x) x = s[i].fixed;
    std::vector<Segment> same;
    for (auto i : group) {
      if (s[i].fixed == x) {
        same.push_back(s[i]);
        slot.sources.push_back(i);
      }
    }
    if (same.size() == 1) {
      slot.segment = same[0];
      slot.provenance = Provenance::UniqueVertical;
      return slot;
    }
    Resolved r = resolve_multiplicity(same, Role::Top);
    slot.segment = r.segment;
    slot.provenance = r.synthetic ? Provenance::Synthetic : Provenance::MergedMultiple;
    return slot;
  }
  std::vector<Segment> cands;
  for (auto i : group) cands.push_back(s[i]);
  Resolved r = resolve_multiplicity(cands, Role::Top);
  slot.segment = r.segment;
  slot.provenance = r.synthetic ? Provenance::Synthetic : Provenance::MergedMultiple;
  slot.sources = group;
  return slot;
}

}  // namespace

Resolved resolve_multiplicity(std::span<const Segment> candidates, Role /*role*/) {
  if (candidates.empty()) throw std::invalid_argument("resolve_multiplicity: no candidates");
  if (candidates.size() == 1) return {candidates.front(), false};
  for (const auto& s : candidates) {
    if (s.axis != candidates.front().axis || s.fixed != candidates.front().fixed)
      throw std::invalid_argument("resolve_multiplicity: candidates are not collinear");
  }
  return merge_collinear(candidates);
}

ExtremeSet find_extremes(const Instance& s) {
  ExtremeSet out;
  for (Role r : kRoles) {
    const Dihedral d = to_top(r);
    auto slot = top_of(apply(d, s));
    if (!slot) continue;
    slot->segment = d.inverse().apply(slot->segment);
    if (slot->provenance == Provenance::UniqueVertical || slot->provenance == Provenance::UniqueHorizontal)
      slot->provenance = slot->segment.vertical() ? Provenance::UniqueVertical : Provenance::UniqueHorizontal;
    out[r] = std::move(slot);
  }
  return out;
}

int count_distinct_extremes(const ExtremeSet& e) {
  std::vector<Segment> seen;
  for (const auto& slot : e.slots) {
    if (!slot) continue;
    bool dup = false;
    for (const auto& s : seen) dup = dup || s == slot->segment;
    if (!dup) seen.push_back(slot->segment);
  }
  return static_cast<int>(seen.size());
}

}  // namespace isostab
