#include "isostab/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace isostab {

ParseError::ParseError(const std::string& what, std::size_t l)
    : std::runtime_error(l ? "line " + std::to_string(l) + ": " + what : what), line(l) {}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_decimal(std::string_view t) {
  if (t.empty()) throw ParseError("empty number");
  const std::string text(t);
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    std::string_view num = t.substr(0, slash), den = t.substr(slash + 1);
    std::string_view digits = num.substr(!num.empty() && (num[0] == '-' || num[0] == '+'));
    if (!all_digits(digits) || !all_digits(den)) throw ParseError("malformed rational '" + text + "'");
    const mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    Rational q(mpz_class(std::string(digits), 10), d);
    q.canonicalize();
    return num[0] == '-' ? Rational(-q) : q;
  }
  std::size_t i = 0;
  bool neg = false;
  if (t[i] == '-' || t[i] == '+') neg = t[i++] == '-';
  std::size_t e = t.find_first_of("eE", i);
  std::string_view mant = t.substr(i, e == std::string_view::npos ? std::string_view::npos : e - i);
  long exp10 = 0;
  if (e != std::string_view::npos) {
    std::string_view ex = t.substr(e + 1);
    std::string_view ed = ex.substr(!ex.empty() && (ex[0] == '-' || ex[0] == '+'));
    if (!all_digits(ed) || ed.size() > 6) throw ParseError("malformed exponent in '" + text + "'");
    exp10 = std::stol(std::string(ed));
    if (ex[0] == '-') exp10 = -exp10;
  }
  const std::size_t dot = mant.find('.');
  std::string_view ip = mant.substr(0, dot);
  std::string_view fp = dot == std::string_view::npos ? std::string_view{} : mant.substr(dot + 1);
  if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
    throw ParseError("malformed number '" + text + "'");
  mpz_class n(std::string(ip) + std::string(fp), 10);
  exp10 -= static_cast<long>(fp.size());
  Rational q = exp10 >= 0 ? Rational(n * pow10(static_cast<unsigned long>(exp10)))
                          : Rational(n, pow10(static_cast<unsigned long>(-exp10)));
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) {
  mpz_class den = q.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  if (den != 1) return q.get_str();
  const unsigned long places = std::max(twos, fives);
  if (places == 0) return q.get_num().get_str();
  const mpz_class scaled = q.get_num() * pow10(places) / q.get_den();
  mpz_class mag = abs(scaled);
  std::string digits = mag.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return (sgn(scaled) < 0 ? "-" : "") + digits;
}

namespace {

Segment build_segment(char orient, const Rational& f, const Rational& lo, const Rational& hi, std::size_t line) {
  if (!(lo < hi)) throw ParseError("segment needs lo < hi", line);
  if (orient == 'h') return make_horizontal(f, lo, hi);
  if (orient == 'v') return make_vertical(f, lo, hi);
  throw ParseError("orientation must be 'h' or 'v'", line);
}

Instance parse_lines(std::string_view text) {
  Instance out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok.size() != 4 || tok[0].size() != 1) throw ParseError("expected '<h|v> <fixed> <lo> <hi>'", no);
    try {
      out.push_back(build_segment(tok[0][0], parse_decimal(tok[1]), parse_decimal(tok[2]), parse_decimal(tok[3]), no));
    } catch (const ParseError& e) {
      if (e.line) throw;
      throw ParseError(e.what(), no);
    }
  }
  if (out.empty()) throw ParseError("instance has no segments");
  return out;
}

Rational json_number(const Json& v, const char* field, std::size_t index) {
  const std::string where = "segment " + std::to_string(index) + " field '" + field + "'";
  if (v.is_string()) return parse_decimal(v.get<std::string>());
  if (v.is_number_integer()) return parse_decimal(v.dump());
  throw ParseError(where + " must be a decimal string");
}

Json point_json(const RPoint& p) { return Json::array({format_rational(p.x), format_rational(p.y)}); }

Json points_json(const std::vector<RPoint>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(point_json(p));
  return a;
}

Json segment_json(const Segment& s) {
  return Json{{"orient", s.horizontal() ? "h" : "v"},
              {"fixed", format_rational(s.fixed)},
              {"lo", format_rational(s.lo)},
              {"hi", format_rational(s.hi)}};
}

const char* connection_name(ConnectionType t) {
  switch (t) {
    case ConnectionType::Case0: return "case0";
    case ConnectionType::Case1: return "case1";
    case ConnectionType::Case2: return "case2";
  }
  return "?";
}

}  // namespace

Instance instance_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("segments") || !doc["segments"].is_array())
    throw ParseError("instance document needs a 'segments' array");
  Instance out;
  std::size_t i = 0;
  for (const auto& s : doc["segments"]) {
    if (!s.is_object()) throw ParseError("segment " + std::to_string(i) + " must be an object");
    for (const char* f : {"orient", "fixed", "lo", "hi"})
      if (!s.contains(f)) throw ParseError("segment " + std::to_string(i) + " lacks '" + f + "'");
    const std::string o = s["orient"].is_string() ? s["orient"].get<std::string>() : "";
    if (o != "h" && o != "v") throw ParseError("segment " + std::to_string(i) + " orient must be 'h' or 'v'");
    const Rational f = json_number(s["fixed"], "fixed", i), lo = json_number(s["lo"], "lo", i),
                   hi = json_number(s["hi"], "hi", i);
    if (!(lo < hi)) throw ParseError("segment " + std::to_string(i) + " needs lo < hi");
    out.push_back(build_segment(o[0], f, lo, hi, 0));
    ++i;
  }
  if (out.empty()) throw ParseError("instance has no segments");
  return out;
}

Instance parse_instance(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return instance_from_json(doc);
  }
  return parse_lines(text);
}

Json instance_to_json(const Instance& s) {
  Json segs = Json::array();
  for (const auto& seg : s) segs.push_back(segment_json(seg));
  return Json{{"segments", segs}};
}

Json result_doc(const Instance& s, const SolveResult& r) {
  if (const auto* line = std::get_if<StabLine>(&r.value)) {
    Json l = line->vertical ? Json{{"x", format_rational(line->c)}}
                            : Json{{"a", format_rational(line->a)}, {"b", format_rational(line->b)}};
    return Json{{"status", "line"}, {"line", l}};
  }
  if (const auto* rej = std::get_if<Rejected>(&r.value)) return Json{{"status", "rejected"}, {"reason", reason_name(rej->reason)}};
  const CandidatePolygon& c = r.polygon();
  const Prepared p = prepare(s);
  Json config{{"family", family_name(c.config.family)}, {"code", c.config.code}};
  if (c.config.canonical) {
    config["canonical"] = c.config.canonical->code;
    config["rotation"] = c.config.canonical->transform.rotation;
    config["mirror"] = c.config.canonical->transform.mirror;
  } else {
    config["canonical"] = nullptr;
  }
  Json extremes = Json::object(), hosts = Json::object(), chains = Json::object(), parts = Json::object();
  for (Role role : kRoles) {
    const int k = static_cast<int>(role);
    extremes[role_name(role)] = point_json(c.assignment.vertex[k]);
    hosts[role_name(role)] = segment_json(p.hosts[k]);
    Json cuts = Json::array();
    for (const auto& q : p.partitions[k].cuts()) cuts.push_back(format_rational(q));
    parts[role_name(role)] = cuts;
  }
  for (const auto& ch : p.chains) chains[chain_name(ch.id)] = points_json(ch.vertices);
  Json links = Json::array();
  for (const auto& l : c.connections) {
    Json by = Json::array();
    for (Role b : l.bypassed) by.push_back(role_name(b));
    links.push_back(Json{{"type", connection_name(l.ctype)},
                         {"from", point_json(l.from)},
                         {"to", point_json(l.to)},
                         {"via", points_json(l.via)},
                         {"bypassed", by}});
  }
  return Json{{"status", "polygon"},
              {"polygon", points_json(c.polygon.vertices)},
              {"area", format_rational(c.area)},
              {"config", config},
              {"extremes", extremes},
              {"connections", links},
              {"hosts", hosts},
              {"chains", chains},
              {"partitions", parts}};
}

ReshapeResult reshape(const Instance& s, const std::array<RPoint, 4>& v) {
  const Prepared p = prepare(s);
  for (Role role : kRoles) {
    const int k = static_cast<int>(role);
    if (!p.hosts[k].contains(v[k]))
      throw ParseError(std::string("vertex for ") + role_name(role) + " must lie on its host segment");
  }
  ReshapeResult out;
  out.polygon = assemble_polygon(p, v);
  out.area = polygon_area(out.polygon).value;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!segment_intersects_polygon(s[i], out.polygon)) out.violated.push_back(i);
  out.valid = out.violated.empty();
  return out;
}

Json reshape_doc(const ReshapeResult& r) {
  Json violated = Json::array();
  for (auto i : r.violated) violated.push_back(i);
  return Json{{"polygon", points_json(r.polygon.vertices)},
              {"area", format_rational(r.area)},
              {"valid", r.valid},
              {"violated", violated}};
}

std::string registry_text() {
  std::ostringstream out;
  for (const auto& c : enumerate_canonical()) {
    out << family_name(c.family) << ' ' << c.code << ':';
    for (const auto& o : c.orbit) out << ' ' << o;
    out << '\n';
  }
  return out.str();
}

Json registry_json() {
  Json a = Json::array();
  for (const auto& c : enumerate_canonical()) a.push_back(Json{{"family", family_name(c.family)}, {"code", c.code}, {"orbit", c.orbit}});
  return a;
}

namespace {

struct Frame {
  double x0, y0, x1, y1;
  double sx(double x) const { return x; }
  double sy(double y) const { return y0 + y1 - y; }  // flip so y grows upwards
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double as_double(const Json& s) { return parse_decimal(s.get<std::string>()).get_d(); }

}  // namespace

std::string render_svg(const Json& result, const Instance& s) {
  const std::string status = result.at("status").get<std::string>();
  if (status == "rejected") throw std::invalid_argument("render_svg: nothing to draw for a rejected instance");
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool first = true;
  for (const auto& seg : s) {
    const DSegment d = to_double(seg);
    for (const DPoint& q : {d.low_end(), d.high_end()}) {
      if (first || q.x < x0) x0 = q.x;
      if (first || q.x > x1) x1 = q.x;
      if (first || q.y < y0) y0 = q.y;
      if (first || q.y > y1) y1 = q.y;
      first = false;
    }
  }
  const double span = std::max({x1 - x0, y1 - y0, 1.0});
  const double m = 0.05 * span;
  const Frame f{x0 - m, y0 - m, x1 + m, y1 + m};
  const double stroke = span / 400;
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(f.x0) << ' ' << num(f.y0) << ' '
    << num(f.x1 - f.x0) << ' ' << num(f.y1 - f.y0) << "\">\n";
  for (const auto& seg : s) {
    const DSegment d = to_double(seg);
    o << "<line x1=\"" << num(d.low_end().x) << "\" y1=\"" << num(f.sy(d.low_end().y)) << "\" x2=\""
      << num(d.high_end().x) << "\" y2=\"" << num(f.sy(d.high_end().y)) << "\" stroke=\"black\" stroke-width=\""
      << num(stroke) << "\"/>\n";
  }
  if (status == "line") {
    const Json& l = result.at("line");
    double ax, ay, bx, by;
    if (l.contains("x")) {
      ax = bx = as_double(l["x"]);
      ay = f.y0;
      by = f.y1;
    } else {
      const double a = as_double(l["a"]), b = as_double(l["b"]);
      ax = f.x0;
      bx = f.x1;
      ay = a * ax + b;
      by = a * bx + b;
    }
    o << "<line x1=\"" << num(ax) << "\" y1=\"" << num(f.sy(ay)) << "\" x2=\"" << num(bx) << "\" y2=\"" << num(f.sy(by))
      << "\" stroke=\"red\" stroke-width=\"" << num(2 * stroke) << "\"/>\n";
  } else {
    for (const auto& [name, pts] : result.at("chains").items()) {
      if (pts.empty()) continue;
      o << "<polyline data-chain=\"" << name << "\" fill=\"none\" stroke=\"blue\" stroke-width=\"" << num(stroke)
        << "\" points=\"";
      bool sep = false;
      for (const auto& q : pts) {
        o << (sep ? " " : "") << num(as_double(q[0])) << ',' << num(f.sy(as_double(q[1])));
        sep = true;
      }
      o << "\"/>\n";
    }
    for (const auto& [role, cuts] : result.at("partitions").items()) {
      const Json& h = result.at("hosts").at(role);
      const bool horizontal = h.at("orient") == "h";
      const double fixed = as_double(h.at("fixed"));
      for (const auto& c : cuts) {
        const double u = as_double(c);
        const double cx = horizontal ? u : fixed, cy = horizontal ? fixed : u;
        o << "<circle class=\"tick\" cx=\"" << num(cx) << "\" cy=\"" << num(f.sy(cy)) << "\" r=\"" << num(2 * stroke)
          << "\" fill=\"gray\"/>\n";
      }
    }
    o << "<path d=\"";
    bool head = true;
    for (const auto& q : result.at("polygon")) {
      o << (head ? "M" : " L") << num(as_double(q[0])) << ' ' << num(f.sy(as_double(q[1])));
      head = false;
    }
    o << " Z\" fill=\"none\" stroke=\"red\" stroke-width=\"" << num(2 * stroke) << "\"/>\n";
    o << "<text x=\"" << num(f.x0 + m / 4) << "\" y=\"" << num(f.y0 + m * 0.75) << "\" font-size=\"" << num(m / 2)
      << "\">area " << result.at("area").get<std::string>() << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace isostab
