#include <optional>
#include <algorithm>
#include <cmath>
#include <limits>

#include "isostab/solver.hpp"
#include "isostab/transform.hpp"
#include "closure.hpp"
#include "model.hpp"

namespace isostab {

namespace detail {
Model<Rational> make_model(const Prepared& p);
}

namespace {

using detail::Model;
using Params = std::array<Rational, 4>;
using DParams = std::array<double, 4>;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kGridBits = 30;

void add_unique(std::vector<Rational>& v, const Rational& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

DParams to_d(const Params& u) { return {u[0].get_d(), u[1].get_d(), u[2].get_d(), u[3].get_d()}; }

struct Start {
  double value;
  Params u;
};

class BoxSeeds {
 public:
  BoxSeeds(const Prepared& p, bool exhaustive) : m_(detail::make_model(p)), md_(detail::to_double(m_)),
                                               exhaustive_(exhaustive) {
    for (int k = 0; k < 4; ++k) {
      const auto& iv = p.partitions[k].intervals;
      const Segment& box = p.box[k];
      add_unique(all_cuts_[k], m_.hosts[k].lo);
      add_unique(cand_[k], m_.hosts[k].lo);
      for (std::size_t i = 0; i < iv.size(); ++i) {
        if (!box.contains(iv[i].lo)) continue;
        const Rational u = box.param_of(iv[i].lo);
        add_unique(all_cuts_[k], u);
        if (exhaustive_ || iv[i].origin != IntervalOrigin::ExtremeSegmentCut) add_unique(cand_[k], u);
      }
      add_unique(all_cuts_[k], m_.hosts[k].hi);
      add_unique(cand_[k], m_.hosts[k].hi);
      if (exhaustive_ && m_.hosts[k].lo < m_.hosts[k].hi) {
        for (int i = 1; i < 8; ++i) {
          Rational t(i, 8);
          t.canonicalize();
          add_unique(cand_[k], m_.hosts[k].lo + (m_.hosts[k].hi - m_.hosts[k].lo) * t);
        }
      }
    }
    add_midpoint_chords();
    propagate();
  }

  // Distinct exact optima of the box model, best first.
  std::vector<std::array<RPoint, 4>> seeds(std::size_t count) {
    std::vector<Start> starts;
    const int roots = exhaustive_ ? 4 : 1;
    prepare_matrices();
    for (int r = 0; r < roots; ++r) cyclic_dp(r, starts);
    std::sort(starts.begin(), starts.end(), [](const Start& a, const Start& b) { return a.value < b.value; });

    std::vector<Start> pool;
    const std::size_t refined = exhaustive_ ? 32 : 8;
    for (std::size_t i = 0; i < starts.size(); ++i) {
      pool.push_back(starts[i]);
      if (i < refined) pool.push_back(refine(starts[i]));
    }
    std::stable_sort(pool.begin(), pool.end(), [](const Start& a, const Start& b) { return a.value < b.value; });

    std::vector<std::array<RPoint, 4>> out;
    for (const auto& s : pool) {
      if (out.size() >= count) break;
      const auto pts = points(polish(s.u));
      if (std::find(out.begin(), out.end(), pts) == out.end()) out.push_back(pts);
    }
    return out;
  }

 private:
  Model<Rational> m_;
  Model<double> md_;
  bool exhaustive_;
  std::array<std::vector<Rational>, 4> all_cuts_;
  std::array<std::vector<Rational>, 4> cand_;
  std::array<std::vector<double>, 4> dcand_;
  std::array<std::vector<std::vector<double>>, 4> mat_;

  std::array<RPoint, 4> points(const Params& u) const {
    return {m_.point(0, u[0]), m_.point(1, u[1]), m_.point(2, u[2]), m_.point(3, u[3])};
  }

  // Chords through a chain vertex with the vertex at their midpoint.
  void add_midpoint_chords() {
    for (int k = 0; k < 4; ++k) {
      const int h = k % 2 == 0 ? k : (k + 1) % 4;  // horizontal host of link k
      const int v = k % 2 == 0 ? (k + 1) % 4 : k;  // vertical host
      const auto& hh = m_.hosts[h];
      const auto& vh = m_.hosts[v];
      for (const auto& p : m_.chains[k].v) {
        auto [y, x] = case1_midpoint_chord(p, vh.fixed, hh.fixed, {vh.lo, vh.hi}, {hh.lo, hh.hi});
        add_unique(cand_[v], y);
        add_unique(cand_[h], x);
      }
    }
  }

  // Closes the candidate sets under tangent propagation along up to three links.
  void propagate() {
    std::array<std::vector<Rational>, 4> frontier = cand_;
    for (int step = 0; step < 3; ++step) {
      std::array<std::vector<Rational>, 4> next;
      for (int k = 0; k < 4; ++k) {
        for (const auto& u : frontier[k]) {
          const RPoint a = m_.point(k, u);
          if (auto f = m_.forward(k, a)) next[(k + 1) % 4].push_back(*f);
          if (auto b = m_.backward(k, a)) next[(k + 3) % 4].push_back(*b);
        }
      }
      for (int k = 0; k < 4; ++k) {
        frontier[k].clear();
        for (auto& u : next[k]) {
          if (std::find(cand_[k].begin(), cand_[k].end(), u) != cand_[k].end()) continue;
          cand_[k].push_back(u);
          frontier[k].push_back(u);
        }
      }
    }
    for (int k = 0; k < 4; ++k) std::sort(cand_[k].begin(), cand_[k].end());
  }

  void prepare_matrices() {
    for (int k = 0; k < 4; ++k) {
      dcand_[k].clear();
      for (const auto& u : cand_[k]) dcand_[k].push_back(u.get_d());
    }
    for (int k = 0; k < 4; ++k) {
      const int j = (k + 1) % 4;
      mat_[k].assign(dcand_[k].size(), std::vector<double>(dcand_[j].size()));
      for (std::size_t a = 0; a < dcand_[k].size(); ++a) {
        const DPoint pa = md_.point(k, dcand_[k][a]);
        for (std::size_t b = 0; b < dcand_[j].size(); ++b)
          mat_[k][a][b] = md_.link2(k, pa, md_.point(j, dcand_[j][b]));
      }
    }
  }

  // Best completion around the cycle for every candidate of slot r.
  void cyclic_dp(int r, std::vector<Start>& out) const {
    const int s1 = (r + 1) % 4, s2 = (r + 2) % 4, s3 = (r + 3) % 4;
    const auto& M0 = mat_[r];
    const auto& M1 = mat_[s1];
    const auto& M2 = mat_[s2];
    const auto& M3 = mat_[s3];
    const std::size_t n1 = cand_[s1].size(), n2 = cand_[s2].size(), n3 = cand_[s3].size();
    std::vector<double> d2(n2), d3(n3);
    std::vector<std::size_t> a2(n2), a3(n3);
    for (std::size_t i0 = 0; i0 < cand_[r].size(); ++i0) {
      for (std::size_t j = 0; j < n2; ++j) {
        d2[j] = kInf;
        for (std::size_t i = 0; i < n1; ++i) {
          const double v = M0[i0][i] + M1[i][j];
          if (v < d2[j]) { d2[j] = v; a2[j] = i; }
        }
      }
      for (std::size_t j = 0; j < n3; ++j) {
        d3[j] = kInf;
        for (std::size_t i = 0; i < n2; ++i) {
          const double v = d2[i] + M2[i][j];
          if (v < d3[j]) { d3[j] = v; a3[j] = i; }
        }
      }
      double best = kInf;
      std::size_t b3 = 0;
      for (std::size_t j = 0; j < n3; ++j) {
        const double v = d3[j] + M3[j][i0];
        if (v < best) { best = v; b3 = j; }
      }
      if (best == kInf) continue;
      const std::size_t b2 = a3[b3];
      const std::size_t b1 = a2[b2];
      Params u;
      u[r] = cand_[r][i0];
      u[s1] = cand_[s1][b1];
      u[s2] = cand_[s2][b2];
      u[s3] = cand_[s3][b3];
      out.push_back({best, u});
    }
  }

  // Slots s..s+len follow slot s through tangent lines.
  double along(const DParams& base, int s, int len, double x, DParams& out) const {
    out = base;
    out[s] = x;
    for (int t = 0; t < len; ++t) {
      const int k = (s + t) % 4;
      auto f = md_.forward(k, md_.point(k, out[k]));
      if (!f) return kInf;
      out[(k + 1) % 4] = *f;
    }
    return md_.area2_params(out);
  }

  std::optional<Params> exact_along(const Params& base, int s, int len, const Rational& x) const {
    Params out = base;
    out[s] = x;
    for (int t = 0; t < len; ++t) {
      const int k = (s + t) % 4;
      auto f = m_.forward(k, m_.point(k, out[k]));
      if (!f) return std::nullopt;
      out[(k + 1) % 4] = *f;
    }
    return out;
  }

  // One-dimensional search along a coupled path, snapped to a dyadic grid.
  std::optional<Start> free_search(const Params& base, int s, int len) const {
    const auto& h = m_.hosts[s];
    if (h.lo == h.hi) return std::nullopt;
    const DParams db = to_d(base);
    const double lo = h.lo.get_d(), hi = h.hi.get_d();
    constexpr int kSamples = 64;
    DParams tmp;
    int bi = -1;
    double bv = kInf;
    for (int i = 0; i <= kSamples; ++i) {
      const double v = along(db, s, len, lo + (hi - lo) * i / kSamples, tmp);
      if (v < bv) { bv = v; bi = i; }
    }
    if (bi < 0) return std::nullopt;
    double a = lo + (hi - lo) * std::max(0, bi - 1) / kSamples;
    double b = lo + (hi - lo) * std::min(kSamples, bi + 1) / kSamples;
    for (int it = 0; it < 80 && b - a > 0; ++it) {
      const double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
      const double v1 = along(db, s, len, m1, tmp), v2 = along(db, s, len, m2, tmp);
      if (v1 <= v2) b = m2; else a = m1;
    }
    const double x = (a + b) / 2;
    const double frac = std::clamp((x - lo) / (hi - lo), 0.0, 1.0);
    mpz_class num(static_cast<long>(std::lround(std::ldexp(frac, kGridBits))));
    mpz_class den(1);
    den <<= kGridBits;
    Rational t(num, den);
    t.canonicalize();
    const Rational xe = h.lo + (h.hi - h.lo) * t;
    auto u = exact_along(base, s, len, xe);
    if (!u) return std::nullopt;
    return Start{md_.area2_params(to_d(*u)), *u};
  }

  Start refine(Start s) const {
    for (int round = 0; round < 4; ++round) {
      bool improved = false;
      for (int len = 1; len <= 3; ++len) {
        for (int start = 0; start < 4; ++start) {
          auto r = free_search(s.u, start, len);
          if (r && r->value < s.value - 1e-12 * std::max(1.0, std::fabs(s.value))) {
            s = *r;
            improved = true;
          }
        }
      }
      if (!improved) break;
    }
    return s;
  }

  // Exact coordinate descent over every breakpoint of each one-dimensional
  // restriction of the area.
  Params polish(Params u) const {
    auto pts = points(u);
    for (int round = 0; round < 64; ++round) {
      bool improved = false;
      for (int k = 0; k < 4; ++k) {
        const int pk = (k + 3) % 4, nk = (k + 1) % 4;
        std::vector<Rational> c = all_cuts_[k];
        for (const auto& x : cand_[k]) c.push_back(x);
        if (auto f = m_.forward(pk, pts[pk])) c.push_back(*f);
        if (auto b = m_.backward(nk, pts[nk])) c.push_back(*b);
        if (auto l = Model<Rational>::meet(m_.hosts[k], pts[pk], pts[nk])) c.push_back(*l);
        const auto& h = m_.hosts[k];
        for (const RPoint* q : {&pts[pk], &pts[nk]}) {
          const Rational qf = h.horizontal ? q->y : q->x;
          const Rational qv = h.horizontal ? q->x : q->y;
          if (qf == h.fixed && h.lo <= qv && qv <= h.hi) c.push_back(qv);
        }
        Rational cur = m_.link2(pk, pts[pk], pts[k]) + m_.link2(k, pts[k], pts[nk]);
        for (const auto& x : c) {
          const RPoint q = m_.point(k, x);
          Rational v = m_.link2(pk, pts[pk], q) + m_.link2(k, q, pts[nk]);
          if (v < cur) {
            cur = v;
            u[k] = x;
            pts[k] = q;
            improved = true;
          }
        }
      }
      if (!improved) break;
    }
    return u;
  }
};

// Local search over the full extreme segments on the exact stabber area.
class FullPolish {
 public:
  explicit FullPolish(const Prepared& p) : cx_(detail::make_closure(p.segments)), cd_(detail::to_double(cx_)) {
    for (int k = 0; k < 4; ++k) {
      const Segment& h = p.hosts[k];
      hf_[k] = {h.horizontal(), h.fixed, h.lo, h.hi};
      hd_[k] = {h.horizontal(), h.fixed.get_d(), h.lo.get_d(), h.hi.get_d()};
    }
    for (const auto& group : cx_.pts)
      for (const auto& q : group)
        if (std::find(gen_.begin(), gen_.end(), q) == gen_.end()) gen_.push_back(q);
    for (const auto& q : gen_) dgen_.push_back(isostab::to_double(q));
  }

  Rational area2(const std::array<RPoint, 4>& v) const { return cx_.area2({v.begin(), v.end()}); }

  std::array<RPoint, 4> run(std::array<RPoint, 4> v) const {
    Rational cur = area2(v);
    for (int round = 0; round < 50; ++round) {
      bool improved = false;
      for (int k = 0; k < 4; ++k) improved = coordinate_move(v, cur, k) || improved;
      if (!improved) improved = coupled_move(v, cur);
      if (!improved) improved = slide_move(v, cur);
      if (!improved) improved = jump_move(v, cur);
      if (!improved) break;
    }
    return v;
  }

 private:
  detail::Closure<Rational> cx_;
  detail::Closure<double> cd_;
  std::array<detail::Host<Rational>, 4> hf_;
  std::array<detail::Host<double>, 4> hd_;
  std::vector<RPoint> gen_;
  std::vector<DPoint> dgen_;

  double area2d(const std::array<DPoint, 4>& v) const { return cd_.area2({v.begin(), v.end()}); }

  static std::array<DPoint, 4> to_d4(const std::array<RPoint, 4>& v) {
    return {isostab::to_double(v[0]), isostab::to_double(v[1]), isostab::to_double(v[2]), isostab::to_double(v[3])};
  }

  // The restriction to one coordinate is continuous and piecewise linear;
  // its breakpoints are where the host meets a line through two of the
  // other vertices and endpoint-hull vertices.
  bool coordinate_move(std::array<RPoint, 4>& v, Rational& cur, int k) const {
    const auto& h = hf_[k];
    const auto& hd = hd_[k];
    if (h.lo == h.hi) return false;
    std::vector<RPoint> g = gen_;
    std::vector<DPoint> dg = dgen_;
    for (int j = 0; j < 4; ++j)
      if (j != k) {
        g.push_back(v[j]);
        dg.push_back(isostab::to_double(v[j]));
      }
    struct Cand {
      double value;
      std::size_t i, j;  // generator pair; i == j marks a host endpoint
    };
    std::vector<Cand> cands;
    auto dv = to_d4(v);
    auto eval_at = [&](double t) {
      dv[k] = hd.at(t);
      return area2d(dv);
    };
    cands.push_back({eval_at(hd.lo), 0, 0});
    cands.push_back({eval_at(hd.hi), 1, 1});
    for (std::size_t i = 0; i < dg.size(); ++i)
      for (std::size_t j = i + 1; j < dg.size(); ++j)
        if (auto t = Model<double>::meet(hd, dg[i], dg[j])) cands.push_back({eval_at(*t), i, j});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.value < b.value; });
    const double tol = 1e-9 * std::max(1.0, std::fabs(cands.front().value));
    // Skip the exact pass unless some candidate clearly beats the current area.
    const double now = cur.get_d();
    if (cands.front().value >= now - 1e-11 * std::max(1.0, std::fabs(now))) return false;
    std::optional<std::pair<Rational, RPoint>> best;
    std::size_t tried = 0;
    for (const auto& c : cands) {
      if (tried >= 12 || (tried > 0 && c.value > cands.front().value + tol)) break;
      std::optional<Rational> t;
      if (c.i == c.j) t = c.i == 0 ? h.lo : h.hi;
      else t = Model<Rational>::meet(h, g[c.i], g[c.j]);
      if (!t) continue;
      ++tried;
      auto w = v;
      w[k] = h.at(*t);
      Rational a = area2(w);
      if (!best || a < best->first) best = {a, w[k]};
    }
    if (!best || !(best->first < cur)) return false;
    cur = best->first;
    v[k] = best->second;
    return true;
  }

  // Sliding a vertex within the part of its host covered by the current
  // stabber never increases the area; retry the other coordinates from there.
  bool slide_move(std::array<RPoint, 4>& v, Rational& cur) const {
    const auto poly = cx_.hull({v.begin(), v.end()});
    for (int k = 0; k < 4; ++k) {
      const auto& h = hf_[k];
      const auto sl = h.horizontal ? slice_at_y(poly, h.fixed) : slice_at_x(poly, h.fixed);
      if (!sl) continue;
      const Rational a = std::max(sl->first, h.lo), b = std::min(sl->second, h.hi);
      if (!(a < b)) continue;
      for (const Rational& u : {a, b, Rational((a + b) / 2)}) {
        if (h.at(u) == v[k]) continue;
        auto w = v;
        w[k] = h.at(u);
        Rational val = area2(w);
        bool moved = false;
        for (int j = 0; j < 4; ++j)
          if (j != k) moved = coordinate_move(w, val, j) || moved;
        if (moved && val < cur) {
          v = w;
          cur = val;
          return true;
        }
      }
    }
    return false;
  }

  // Puts one vertex at an end of its host and re-optimizes the others; the
  // area is bilinear in pairs of vertices, so single moves can stall.
  bool jump_move(std::array<RPoint, 4>& v, Rational& cur) const {
    for (int k = 0; k < 4; ++k) {
      const auto& h = hf_[k];
      for (const Rational& u : {h.lo, h.hi}) {
        if (h.at(u) == v[k]) continue;
        auto w = v;
        w[k] = h.at(u);
        Rational val = area2(w);
        for (int pass = 0; pass < 2; ++pass) {
          bool moved = false;
          for (int j = 0; j < 4; ++j)
            if (j != k) moved = coordinate_move(w, val, j) || moved;
          if (!moved) break;
        }
        if (val < cur) {
          v = w;
          cur = val;
          return true;
        }
      }
    }
    return false;
  }

  // Vertex j follows vertex k along the line through k and a pivot.
  std::optional<DPoint> follow_d(int k, int j, const DPoint& pk, const std::optional<DPoint>& pivot) const {
    if (!pivot) {
      const auto& h = hd_[j];
      const double f = h.horizontal ? pk.y : pk.x, u = h.horizontal ? pk.x : pk.y;
      if (f != h.fixed || u < h.lo || u > h.hi) return std::nullopt;
      return pk;
    }
    (void)k;
    auto t = Model<double>::meet(hd_[j], pk, *pivot);
    if (!t) return std::nullopt;
    return hd_[j].at(*t);
  }

  std::optional<RPoint> follow(int j, const RPoint& pk, const std::optional<RPoint>& pivot) const {
    const auto& h = hf_[j];
    if (!pivot) {
      if (h.param(pk) < h.lo || h.param(pk) > h.hi || (h.horizontal ? pk.y : pk.x) != h.fixed) return std::nullopt;
      return pk;
    }
    auto t = Model<Rational>::meet(h, pk, *pivot);
    if (!t) return std::nullopt;
    return h.at(*t);
  }

  // Moves two vertices together, keeping the edge between them on a pivot
  // (or keeping them coincident), by a one-dimensional search snapped to a
  // dyadic grid.
  bool coupled_move(std::array<RPoint, 4>& v, Rational& cur) const {
    bool improved = false;
    for (int k = 0; k < 4; ++k) {
      for (int j = 0; j < 4; ++j) {
        if (j == k || hf_[k].lo == hf_[k].hi) continue;
        std::vector<std::optional<RPoint>> pivots;
        if (v[k] == v[j]) pivots.push_back(std::nullopt);
        else {
          for (const auto& q : gen_)
            if (q != v[k] && q != v[j] && on_segment(q, v[k], v[j])) pivots.push_back(q);
        }
        for (const auto& pv : pivots) improved = path_search(v, cur, k, j, pv) || improved;
      }
    }
    return improved;
  }

  bool path_search(std::array<RPoint, 4>& v, Rational& cur, int k, int j, const std::optional<RPoint>& pivot) const {
    const auto& hd = hd_[k];
    const std::optional<DPoint> dp = pivot ? std::optional<DPoint>(isostab::to_double(*pivot)) : std::nullopt;
    auto dv = to_d4(v);
    auto eval = [&](double t) {
      dv[k] = hd.at(t);
      auto f = follow_d(k, j, dv[k], dp);
      if (!f) return kInf;
      dv[j] = *f;
      return area2d(dv);
    };
    constexpr int kSamples = 64;
    const double lo = hd.lo, hi = hd.hi;
    int bi = -1;
    double bv = kInf;
    for (int i = 0; i <= kSamples; ++i) {
      const double val = eval(lo + (hi - lo) * i / kSamples);
      if (val < bv) { bv = val; bi = i; }
    }
    if (bi < 0) return false;
    double a = lo + (hi - lo) * std::max(0, bi - 1) / kSamples;
    double b = lo + (hi - lo) * std::min(kSamples, bi + 1) / kSamples;
    for (int it = 0; it < 100 && b - a > 0; ++it) {
      const double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
      if (eval(m1) <= eval(m2)) b = m2; else a = m1;
    }
    const auto& h = hf_[k];
    const double frac = std::clamp(((a + b) / 2 - lo) / (hi - lo), 0.0, 1.0);
    const long cell = std::lround(std::ldexp(frac, kGridBits));
    mpz_class den(1);
    den <<= kGridBits;
    bool improved = false;
    // Exact descent on the grid around the snapped point.
    long at = cell;
    for (int step = 0; step < 16; ++step) {
      std::optional<std::pair<Rational, std::array<RPoint, 4>>> best;
      for (long c : {at - 1, at, at + 1}) {
        if (c < 0 || c > (1L << kGridBits)) continue;
        Rational t(mpz_class(c), den);
        t.canonicalize();
        auto w = v;
        w[k] = h.at(h.lo + (h.hi - h.lo) * t);
        auto f = follow(j, w[k], pivot);
        if (!f) continue;
        w[j] = *f;
        Rational val = area2(w);
        if (!best || val < best->first) best = {val, w};
        if (c == at && step > 0) break;
      }
      if (!best || !(best->first < cur)) break;
      cur = best->first;
      v = best->second;
      improved = true;
      at = static_cast<long>(std::lround(std::ldexp(Rational(hf_[k].param(v[k]) - h.lo).get_d() / Rational(h.hi - h.lo).get_d(), kGridBits)));
    }
    return improved;
  }
};

bool tie_less(const Prepared& p, const std::array<RPoint, 4>& a, const std::array<RPoint, 4>& b) {
  const Polygon pa = assemble_polygon(p, a);
  const Polygon pb = assemble_polygon(p, b);
  if (pa.vertices.size() != pb.vertices.size()) return pa.vertices.size() < pb.vertices.size();
  return pa.vertices < pb.vertices;
}

std::vector<Segment> sorted(Instance s) {
  std::sort(s.begin(), s.end(), [](const Segment& a, const Segment& b) {
    if (a.axis != b.axis) return a.axis < b.axis;
    if (a.fixed != b.fixed) return a.fixed < b.fixed;
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  return s;
}

bool less_instance(const Instance& a, const Instance& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const Segment& x = a[i];
    const Segment& y = b[i];
    if (x.axis != y.axis) return x.axis < y.axis;
    if (x.fixed != y.fixed) return x.fixed < y.fixed;
    if (x.lo != y.lo) return x.lo < y.lo;
    if (x.hi != y.hi) return x.hi < y.hi;
  }
  return a.size() < b.size();
}

Role role_of_direction(const RPoint& d) {
  if (d.y > 0) return Role::Top;
  if (d.x < 0) return Role::Left;
  if (d.y < 0) return Role::Bottom;
  return Role::Right;
}

const std::array<RPoint, 4> kDirections{RPoint{0, 1}, RPoint{-1, 0}, RPoint{0, -1}, RPoint{1, 0}};

std::array<RPoint, 4> solve_vertices(const Instance& s, bool exhaustive) {
  const Prepared p = prepare(s);
  BoxSeeds box(p, exhaustive);
  auto seeds = box.seeds(exhaustive ? 16 : 4);
  for (int mask = 0; mask < 16; ++mask) {
    std::array<RPoint, 4> v;
    for (int k = 0; k < 4; ++k) v[k] = (mask >> k & 1) ? p.hosts[k].high_end() : p.hosts[k].low_end();
    if (std::find(seeds.begin(), seeds.end(), v) == seeds.end()) seeds.push_back(v);
  }
  const FullPolish polish(p);
  std::optional<std::pair<Rational, std::array<RPoint, 4>>> best;
  for (const auto& seed : seeds) {
    const auto v = polish.run(seed);
    Rational a = polish.area2(v);
    if (!best || a < best->first || (a == best->first && tie_less(p, v, best->second))) best = {a, v};
  }
  if (!best) throw InternalError("no candidate polygon");
  return best->second;
}

// A point of g inside the convex polygon, smallest parameter first.
std::optional<RPoint> clip_point(const Segment& g, const Polygon& poly) {
  Rational lo = g.lo, hi = g.hi;
  const auto& v = poly.vertices;
  for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
    const RPoint& a = v[i];
    const RPoint& b = v[(i + 1) % v.size()];
    // cross(a, b, g(t)) = c0 + c1 t must stay non-negative.
    const Rational c0 = cross(a, b, g.at(Rational(0)));
    const Rational c1 = cross(a, b, g.at(Rational(1))) - c0;
    if (c1 == 0) {
      if (c0 < 0) return std::nullopt;
    } else if (c1 > 0) {
      lo = std::max(lo, Rational(-c0 / c1));
    } else {
      hi = std::min(hi, Rational(-c0 / c1));
    }
  }
  if (lo > hi) return std::nullopt;
  return g.at(lo);
}

std::size_t interval_of(const HostPartition& part, const RPoint& q) {
  const Rational x = part.segment.param_of(q);
  for (std::size_t i = 0; i < part.intervals.size(); ++i)
    if (x <= part.segment.param_of(part.intervals[i].hi)) return i;
  return part.intervals.empty() ? 0 : part.intervals.size() - 1;
}

}  // namespace

SolveResult solve(const Instance& s, const SolveOptions& opts) {
  if (s.empty()) return {Rejected{RejectReason::EmptyInput}};
  // Fewer than three segments cannot supply three extremes.
  if (s.size() < 3) return {Rejected{RejectReason::TooFewExtremes}};
  if (auto line = detect_line_stabber(s)) return {*line};
  if (count_distinct_extremes(find_extremes(s)) < 3) return {Rejected{RejectReason::TooFewExtremes}};

  // Work on the smallest of the eight axis-preserving images so that
  // symmetric inputs get symmetric answers.
  Dihedral best = Dihedral::identity();
  Instance canon = sorted(s);
  for (int i = 1; i < 8; ++i) {
    const Dihedral d = Dihedral::all(i);
    Instance img = sorted(apply(d, s));
    if (less_instance(img, canon)) {
      canon = std::move(img);
      best = d;
    }
  }
  const auto vi = solve_vertices(canon, opts.exhaustive);
  const Dihedral inv = best.inverse();
  std::array<RPoint, 4> v;
  for (int r = 0; r < 4; ++r) {
    const Role ir = role_of_direction(best.apply(kDirections[r]));
    v[r] = inv.apply(vi[static_cast<int>(ir)]);
  }

  const Prepared p = prepare(s);
  // Tied extremes need not map onto each other; move such a vertex onto
  // its own host inside the polygon, which keeps the area.
  for (int k = 0; k < 4; ++k) {
    if (p.hosts[k].contains(v[k])) continue;
    const auto q = clip_point(p.hosts[k], assemble_polygon(p, v));
    if (!q) throw InternalError("result misses an extreme segment");
    v[k] = *q;
  }
  CandidatePolygon out;
  out.polygon = assemble_polygon(p, v);
  out.area = stabber_area2(p, v) / 2;
  if (out.area != polygon_area(out.polygon).value) throw InternalError("area does not match the assembled polygon");
  for (const auto& seg : s)
    if (!segment_intersects_polygon(seg, out.polygon)) throw InternalError("result misses an input segment");
  out.assignment.vertex = v;
  for (int k = 0; k < 4; ++k) out.assignment.interval[k] = interval_of(p.partitions[k], v[k]);
  auto [label, links] = classify(p, v);
  out.config = std::move(label);
  out.connections = std::move(links);
  return {out};
}

}  // namespace isostab
