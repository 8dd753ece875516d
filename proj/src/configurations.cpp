#include "isostab/configurations.hpp"

#include <algorithm>
#include <stdexcept>

#include "isostab/transform.hpp"

namespace isostab {

const char* family_name(Family f) {
  switch (f) {
    case Family::Four: return "four";
    case Family::Three: return "three";
    case Family::TwoOneRegular: return "two-one-regular";
    case Family::TwoBothBypass: return "two-both-bypass";
  }
  return "?";
}

std::string image(std::string_view code, Transform t) {
  std::string s(code);
  if (t.mirror) std::reverse(s.begin(), s.end());
  if (!s.empty()) {
    const int r = ((t.rotation % static_cast<int>(s.size())) + static_cast<int>(s.size())) % static_cast<int>(s.size());
    std::rotate(s.begin(), s.end() - r, s.end());
  }
  return s;
}

namespace {

// Representatives as tabulated for the four-connection family, with the
// three mirror-merged entries (0021, 1102, 0221) removed.
constexpr std::array<std::string_view, 21> kFour{
    "0000", "1111", "2222", "0111", "0222", "1222", "1100", "2200", "1122", "0101", "0202",
    "1212", "0001", "0002", "1112", "0012", "1012", "0122", "1020", "1120", "1202"};
constexpr std::array<std::string_view, 5> kTwoOne{"02", "12", "20", "21", "22"};
constexpr std::array<std::string_view, 3> kTwoBoth{"02", "12", "22"};

std::size_t arity(Family f) {
  switch (f) {
    case Family::Four: return 4;
    case Family::Three: return 3;
    default: return 2;
  }
}

std::vector<Transform> group(Family f) {
  switch (f) {
    case Family::Four: {
      std::vector<Transform> g;
      for (int m = 0; m < 2; ++m)
        for (int r = 0; r < 4; ++r) g.push_back({r, m == 1});
      return g;
    }
    case Family::Three:
    case Family::TwoBothBypass: return {{0, false}, {0, true}};
    case Family::TwoOneRegular: return {{0, false}};
  }
  return {};
}

std::vector<std::string_view> reps(Family f) {
  switch (f) {
    case Family::Four: return {kFour.begin(), kFour.end()};
    case Family::TwoOneRegular: return {kTwoOne.begin(), kTwoOne.end()};
    case Family::TwoBothBypass: return {kTwoBoth.begin(), kTwoBoth.end()};
    case Family::Three: {
      static const std::vector<std::string> three = [] {
        std::vector<std::string> out;
        for (int i = 0; i < 27; ++i) {
          std::string s{char('0' + i / 9), char('0' + i / 3 % 3), char('0' + i % 3)};
          std::string r(s.rbegin(), s.rend());
          if (s <= r) out.push_back(s);
        }
        return out;
      }();
      return {three.begin(), three.end()};
    }
  }
  return {};
}

}  // namespace

Canonical canonical_code(std::string_view code, Family family) {
  if (code.size() != arity(family)) throw std::invalid_argument("configuration code has the wrong length");
  for (char c : code)
    if (c < '0' || c > '2') throw std::invalid_argument("configuration code characters must be 0, 1 or 2");
  const auto rs = reps(family);
  for (const Transform& t : group(family)) {
    const std::string img = image(code, t);
    if (std::find(rs.begin(), rs.end(), img) != rs.end()) return {img, t};
  }
  throw std::invalid_argument("code " + std::string(code) + " is not a registered configuration");
}

const std::vector<Configuration>& enumerate_canonical() {
  static const std::vector<Configuration> registry = [] {
    std::vector<Configuration> out;
    for (Family f : {Family::Four, Family::Three, Family::TwoOneRegular, Family::TwoBothBypass}) {
      for (auto r : reps(f)) {
        Configuration c{f, std::string(r), {}};
        for (const Transform& u : group(f)) {
          std::string cand = image(r, u);
          if (std::find(c.orbit.begin(), c.orbit.end(), cand) == c.orbit.end()) c.orbit.push_back(cand);
        }
        std::sort(c.orbit.begin(), c.orbit.end());
        out.push_back(std::move(c));
      }
    }
    return out;
  }();
  return registry;
}

InstanceFrame frame_for(Transform t) { return {(4 - t.rotation % 4) % 4, t.mirror}; }

namespace {

RPoint reflect(const RPoint& p) { return {Rational(-p.x), p.y}; }

CriticalChain reflect_chain(const CriticalChain& c, ChainId id) {
  CriticalChain out{id, {}};
  for (auto it = c.vertices.rbegin(); it != c.vertices.rend(); ++it) out.vertices.push_back(reflect(*it));
  return out;
}

}  // namespace

SolverInputs apply_frame(const InstanceFrame& frame, const SolverInputs& in) {
  SolverInputs base = in;
  if (frame.mirror) {
    const Dihedral m{0, true};
    // Slots T, L, B, R of the mirror image are the reflections of T, R, B, L.
    base.extremes = {m.apply(in.extremes[0]), m.apply(in.extremes[3]), m.apply(in.extremes[2]),
                     m.apply(in.extremes[1])};
    base.chains = {reflect_chain(in.chains[3], ChainId::RB), reflect_chain(in.chains[2], ChainId::RT),
                   reflect_chain(in.chains[1], ChainId::LT), reflect_chain(in.chains[0], ChainId::LB)};
  }
  SolverInputs out;
  for (int i = 0; i < 4; ++i) {
    const int j = (frame.offset + i) % 4;
    out.extremes[i] = base.extremes[j];
    out.chains[i] = base.chains[j];
    out.chains[i].id = static_cast<ChainId>(i);
  }
  return out;
}

RPoint unframe(const InstanceFrame& frame, const RPoint& p) { return frame.mirror ? reflect(p) : p; }

}  // namespace isostab
