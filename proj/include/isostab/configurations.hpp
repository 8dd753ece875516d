#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "isostab/chains.hpp"

namespace isostab {

enum class Family { Four, Three, TwoOneRegular, TwoBothBypass };

const char* family_name(Family f);

/// How a code reaches its canonical form: optional reversal (mirror in the
/// y-axis) followed by `rotation` right-rotations of the code string.
struct Transform {
  int rotation = 0;
  bool mirror = false;
  friend bool operator==(const Transform&, const Transform&) = default;
};

std::string image(std::string_view code, Transform t);

struct Configuration {
  Family family = Family::Four;
  std::string code;
  std::vector<std::string> orbit;  // every code this one stands for, sorted
};

struct Canonical {
  std::string code;
  Transform transform;
};

/// Throws std::invalid_argument for a bad character, a wrong length, or a
/// code outside every registered orbit of the family.
Canonical canonical_code(std::string_view code, Family family);

/// The 47 canonical configurations: 21 four-, 18 three-, 5 + 3 two-connection.
const std::vector<Configuration>& enumerate_canonical();

/// Assignment of the four extreme slots and chains to solver parameters.
/// Parameter i receives slot (offset + i) mod 4 of the (optionally mirrored)
/// instance; the code seen through the frame is the original rotated left
/// by `offset`.
struct InstanceFrame {
  int offset = 0;
  bool mirror = false;
};

/// The frame under which a code is read as its canonical form.
InstanceFrame frame_for(Transform t);

struct SolverInputs {
  std::array<Segment, 4> extremes;         // tT, lL, bB, rR order
  std::array<CriticalChain, 4> chains;     // RB, RT, LT, LB order
};

/// Permutes (and for a mirrored frame reflects) the inputs; chains take the
/// id of the slot they land in. Chain vertex lists stay counterclockwise
/// along the polygon boundary.
SolverInputs apply_frame(const InstanceFrame& frame, const SolverInputs& in);

/// Maps a point produced in frame coordinates back to the instance.
RPoint unframe(const InstanceFrame& frame, const RPoint& p);

}  // namespace isostab
