#include "isostab/heuristic.hpp"

#include <random>
#include <stdexcept>

#include "isostab/solver.hpp"

namespace isostab {

namespace {

constexpr int kGranularityBits = 20;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t run) { return splitmix(splitmix(seed) ^ run); }

Polygon random_stabber_hull(const Instance& s, std::uint64_t seed) {
  if (s.empty()) throw std::invalid_argument("random_stabber_hull: empty instance");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned long> pick(0, 1UL << kGranularityBits);
  const Rational step(1, 1UL << kGranularityBits);
  std::vector<RPoint> pts;
  pts.reserve(s.size());
  for (const auto& seg : s) {
    const Rational t = step * Rational(pick(rng));
    pts.push_back(seg.at(seg.lo + (seg.hi - seg.lo) * t));
  }
  return convex_hull(std::move(pts));
}

HeuristicReport heuristic_stats(const Instance& s, std::size_t runs, std::uint64_t seed) {
  if (runs == 0) throw std::invalid_argument("heuristic_stats: runs must be at least 1");
  HeuristicReport r;
  r.runs = runs;
  Rational sum = 0;
  for (std::size_t i = 0; i < runs; ++i) {
    const Rational a = polygon_area(random_stabber_hull(s, derive_seed(seed, i))).value;
    if (i == 0 || a < r.min) r.min = a;
    if (i == 0 || a > r.max) r.max = a;
    sum += a;
    r.areas.push_back(a);
  }
  r.mean = sum / static_cast<unsigned long>(runs);
  const SolveResult res = solve(s);
  if (res.is_polygon()) {
    r.optimal = res.polygon().area;
    if (sgn(r.mean) > 0) r.ratio_to_optimal = Rational(*r.optimal / r.mean).get_d();
  }
  return r;
}

Instance random_instance(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const long grid = static_cast<long>(10 * n);
  std::uniform_int_distribution<long> pos(0, grid);
  std::uniform_int_distribution<long> len(1, static_cast<long>(2 * n));
  std::bernoulli_distribution coin(0.5);
  Instance out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool horizontal = coin(rng);
    const long f = pos(rng);
    const long a = pos(rng);
    const long l = len(rng);
    out.push_back(horizontal ? make_horizontal(f, a, a + l) : make_vertical(f, a, a + l));
  }
  return out;
}

}  // namespace isostab
