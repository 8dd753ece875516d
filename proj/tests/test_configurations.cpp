#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "isostab/configurations.hpp"
#include "isostab/heuristic.hpp"
#include "isostab/transform.hpp"
#include "support.hpp"

using namespace isostab;

namespace {

const std::vector<std::string> kFourCodes{"0000", "1111", "2222", "0111", "0222", "1222", "1100", "2200",
                                       "1122", "0101", "0202", "1212", "0001", "0002", "1112", "0012",
                                       "1012", "0122", "1020", "1120", "1202", "0021", "1102", "0221"};
const std::vector<std::string> kThreeCodes{"000", "010", "020", "001", "011", "021", "002", "012", "022",
                                       "101", "111", "121", "102", "112", "122", "202", "212", "222"};

std::vector<std::string> all_codes(std::size_t len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : {'0', '1', '2'}) next.push_back(s + c);
    out = next;
  }
  return out;
}

// Orbits counted by Burnside: average number of fixed strings per group element.
std::size_t burnside(std::size_t len, const std::vector<Transform>& group) {
  std::size_t fixed = 0;
  for (const auto& t : group)
    for (const auto& s : all_codes(len)) fixed += image(s, t) == s;
  return fixed / group.size();
}

std::vector<Transform> dihedral4() {
  std::vector<Transform> g;
  for (int m = 0; m < 2; ++m)
    for (int r = 0; r < 4; ++r) g.push_back({r, m == 1});
  return g;
}

std::vector<const Configuration*> of_family(Family f) {
  std::vector<const Configuration*> out;
  for (const auto& c : enumerate_canonical())
    if (c.family == f) out.push_back(&c);
  return out;
}

SolverInputs inputs_of(const Instance& s) {
  const ExtremeSet e = find_extremes(s);
  SolverInputs in;
  for (int k = 0; k < 4; ++k) in.extremes[k] = e.slots[k]->segment;
  in.chains = build_chains(s);
  return in;
}

SolverInputs transformed(const Dihedral& d, const SolverInputs& in) {
  SolverInputs out = in;
  for (auto& g : out.extremes) g = d.apply(g);
  for (auto& c : out.chains)
    for (auto& p : c.vertices) p = d.apply(p);
  return out;
}

// How far the stabber is forced towards slot k (T, L, B, R). Tied
// candidates are interchangeable, so frames are compared on this.
Rational reach(int k, const Segment& g) {
  switch (k) {
    case 0: return g.low_end().y;
    case 1: return g.high_end().x;
    case 2: return g.high_end().y;
    default: return g.low_end().x;
  }
}

void check_same(const SolverInputs& a, const SolverInputs& b) {
  for (int k = 0; k < 4; ++k) {
    CHECK(reach(k, a.extremes[k]) == reach(k, b.extremes[k]));
    CHECK(a.chains[k].id == b.chains[k].id);
    CHECK(a.chains[k].vertices == b.chains[k].vertices);
  }
}

}  // namespace

TEST_CASE("registry sizes") {
  const auto& reg = enumerate_canonical();
  CHECK(reg.size() == 47);
  CHECK(of_family(Family::Four).size() == 21);
  CHECK(of_family(Family::Three).size() == 18);
  CHECK(of_family(Family::TwoOneRegular).size() == 5);
  CHECK(of_family(Family::TwoBothBypass).size() == 3);
}

TEST_CASE("every tabulated four-connection code lies in exactly one orbit") {
  const auto four = of_family(Family::Four);
  for (const auto& code : kFourCodes) {
    int hits = 0;
    for (const auto* c : four) hits += std::count(c->orbit.begin(), c->orbit.end(), code) > 0;
    CHECK_MESSAGE(hits == 1, code);
  }
  // The 24 tabulated codes are pairwise non-isomorphic under rotation alone.
  std::set<std::string> rot_classes;
  for (const auto& code : kFourCodes) {
    std::string m = code;
    for (int r = 0; r < 4; ++r) m = std::min(m, image(code, {r, false}));
    rot_classes.insert(m);
  }
  CHECK(rot_classes.size() == 24);
  // The three merged pairs share an orbit.
  for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{{"0012", "0021"}, {"0122", "0221"}, {"1120", "1102"}})
    CHECK(canonical_code(a, Family::Four).code == canonical_code(b, Family::Four).code);
}

TEST_CASE("three-connection registry matches the listed classes exactly") {
  std::vector<std::string> got;
  for (const auto* c : of_family(Family::Three)) got.push_back(c->code);
  auto want = kThreeCodes;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("two-connection registries") {
  std::vector<std::string> one, both;
  for (const auto* c : of_family(Family::TwoOneRegular)) one.push_back(c->code);
  for (const auto* c : of_family(Family::TwoBothBypass)) both.push_back(c->code);
  CHECK(one == std::vector<std::string>{"02", "12", "20", "21", "22"});
  CHECK(both == std::vector<std::string>{"02", "12", "22"});
}

TEST_CASE("burnside counts") {
  CHECK(burnside(4, dihedral4()) == 21);
  CHECK(burnside(3, {{0, false}, {0, true}}) == 18);
  std::vector<Transform> rotations;
  for (int r = 0; r < 4; ++r) rotations.push_back({r, false});
  CHECK(burnside(4, rotations) == 24);
}

TEST_CASE("canonical code examples") {
  const Canonical a = canonical_code("0121", Family::Four);
  CHECK(a.code == "1012");
  CHECK(a.transform == Transform{1, false});
  const Canonical b = canonical_code("2100", Family::Four);
  CHECK(b.code == "0012");
  CHECK(b.transform.mirror);
  const Canonical c = canonical_code("0000", Family::Four);
  CHECK(c.code == "0000");
  CHECK(c.transform == Transform{});
  CHECK(canonical_code("120", Family::Three).code == "021");
  CHECK(canonical_code("102", Family::Three).code == "102");
}

TEST_CASE("canonical code rejects bad input") {
  CHECK_THROWS_AS(canonical_code("0130", Family::Four), std::invalid_argument);
  CHECK_THROWS_AS(canonical_code("012", Family::Four), std::invalid_argument);
  CHECK_THROWS_AS(canonical_code("01", Family::Three), std::invalid_argument);
  CHECK_THROWS_AS(canonical_code("x2", Family::TwoBothBypass), std::invalid_argument);
}

TEST_CASE("canonical code is idempotent and constant on orbits") {
  for (const auto& [len, fam] : std::vector<std::pair<std::size_t, Family>>{{4, Family::Four}, {3, Family::Three}}) {
    for (const auto& s : all_codes(len)) {
      const Canonical c = canonical_code(s, fam);
      CHECK(image(s, c.transform) == c.code);
      CHECK(canonical_code(c.code, fam).code == c.code);
      CHECK(canonical_code(c.code, fam).transform == Transform{});
      const auto group = fam == Family::Four ? dihedral4() : std::vector<Transform>{{0, false}, {0, true}};
      for (const auto& t : group) CHECK(canonical_code(image(s, t), fam).code == c.code);
    }
  }
}

TEST_CASE("registry orbits partition the code space") {
  std::set<std::string> seen4, seen3;
  for (const auto* c : of_family(Family::Four))
    for (const auto& o : c->orbit) CHECK(seen4.insert(o).second);
  for (const auto* c : of_family(Family::Three))
    for (const auto& o : c->orbit) CHECK(seen3.insert(o).second);
  CHECK(seen4.size() == 81);
  CHECK(seen3.size() == 27);
}

TEST_CASE("frame offset one shifts every parameter by one slot") {
  SolverInputs in;
  for (int k = 0; k < 4; ++k) {
    in.extremes[k] = make_horizontal(k, 0, 1);
    in.chains[k] = CriticalChain{static_cast<ChainId>(k), {{Rational(k), Rational(k)}}};
  }
  const SolverInputs out = apply_frame({1, false}, in);
  // (tT, lL, bB, rR, RB, RT, LT, LB) -> (lL, bB, rR, tT, RT, LT, LB, RB)
  for (int i = 0; i < 4; ++i) {
    CHECK(out.extremes[i] == in.extremes[(i + 1) % 4]);
    CHECK(out.chains[i].vertices == in.chains[(i + 1) % 4].vertices);
  }
}

TEST_CASE("mirror frame is an involution") {
  for (int i = 0; i < 50; ++i) {
    const SolverInputs in = inputs_of(random_instance(5 + i % 15, 9100 + i));
    check_same(apply_frame({0, true}, apply_frame({0, true}, in)), in);
  }
}

TEST_CASE("frames agree with transforming the instance") {
  const Dihedral quarter{1, false}, mirror{0, true};
  for (int i = 0; i < 80; ++i) {
    const Instance s = random_instance(5 + i % 20, 9300 + i);
    const SolverInputs in = inputs_of(s);
    // A quarter turn brings rR to the top slot: offset 3.
    check_same(transformed(quarter, apply_frame({3, false}, in)), inputs_of(apply(quarter, s)));
    const SolverInputs m = apply_frame({0, true}, in);
    check_same(m, inputs_of(apply(mirror, s)));
    // Mirror points back with unframe.
    for (const auto& c : m.chains)
      for (const auto& p : c.vertices) CHECK(mirror.apply(unframe({0, true}, p)) == p);
  }
}

TEST_CASE("frame_for reads the code in canonical form") {
  // The instance code seen through a frame: reversed when mirrored, then
  // rotated left by the offset.
  auto seen = [](std::string code, const InstanceFrame& f) {
    if (f.mirror) std::reverse(code.begin(), code.end());
    std::rotate(code.begin(), code.begin() + f.offset, code.end());
    return code;
  };
  for (const auto& s : all_codes(4)) {
    const Canonical c = canonical_code(s, Family::Four);
    CHECK(seen(s, frame_for(c.transform)) == c.code);
  }
}
