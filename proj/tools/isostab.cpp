#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "isostab/heuristic.hpp"
#include "isostab/io.hpp"
#include "isostab/service.hpp"

namespace {

constexpr int kParseError = 1;
constexpr int kInternalError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw isostab::ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

int run_solve(const std::string& file, const std::string& svg, const std::string& json, bool exhaustive) {
  const isostab::Instance s = isostab::parse_instance(read_file(file));
  const auto result = isostab::solve(s, {exhaustive});
  const isostab::Json doc = isostab::result_doc(s, result);
  if (!json.empty()) write_file(json, doc.dump(2) + "\n");
  if (!svg.empty() && doc["status"] != "rejected") write_file(svg, isostab::render_svg(doc, s));
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_heuristic(const std::string& file, std::size_t runs, std::uint64_t seed, bool csv) {
  const isostab::Instance s = isostab::parse_instance(read_file(file));
  const auto r = isostab::heuristic_stats(s, runs, seed);
  using isostab::format_rational;
  if (csv) {
    std::cout << "run,area\n";
    for (std::size_t i = 0; i < r.areas.size(); ++i) std::cout << i << ',' << r.areas[i].get_d() << "\n";
    return 0;
  }
  isostab::Json areas = isostab::Json::array();
  for (const auto& a : r.areas) areas.push_back(a.get_d());
  isostab::Json doc{{"runs", r.runs},
                    {"seed", seed},
                    {"mean", r.mean.get_d()},
                    {"min", r.min.get_d()},
                    {"max", r.max.get_d()},
                    {"optimal", r.optimal ? isostab::Json(format_rational(*r.optimal)) : isostab::Json(nullptr)},
                    {"ratio_to_optimal", r.ratio_to_optimal ? isostab::Json(*r.ratio_to_optimal) : isostab::Json(nullptr)},
                    {"areas", areas}};
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_serve(const std::string& bind) {
  const auto colon = bind.rfind(':');
  if (colon == std::string::npos) throw isostab::ParseError("--bind expects HOST:PORT");
  const std::string host = bind.substr(0, colon);
  const int port = std::stoi(bind.substr(colon + 1));
  const bool ok = isostab::serve(host, port, [&](int p) { std::cerr << "listening on " << host << ':' << p << "\n"; });
  if (!ok) {
    std::cerr << "cannot bind " << bind << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-area convex stabbers of isothetic segments"};
  app.require_subcommand(0, 1);
  bool list_configs = false;
  app.add_flag("--list-configs", list_configs, "Print the configuration registry");

  std::string file, svg, json;
  bool exhaustive = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("file", file, "Instance (JSON or line format)")->required();
  solve->add_option("--svg", svg, "Write an SVG drawing");
  solve->add_option("--json", json, "Write the result document");
  solve->add_flag("--exhaustive", exhaustive, "Disable candidate pruning");

  std::size_t runs = 50;
  std::uint64_t seed = 1;
  bool csv = false;
  auto* heur = app.add_subcommand("heuristic", "Random-hull stabber statistics");
  heur->add_option("file", file, "Instance (JSON or line format)")->required();
  heur->add_option("--runs", runs, "Number of samples")->check(CLI::PositiveNumber);
  heur->add_option("--seed", seed, "Base seed");
  heur->add_flag("--csv", csv, "Emit per-run areas as CSV");

  std::string bind = "127.0.0.1:8080";
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--bind", bind, "HOST:PORT");

  CLI11_PARSE(app, argc, argv);
  try {
    if (list_configs) {
      std::cout << isostab::registry_text();
      return 0;
    }
    if (*solve) return run_solve(file, svg, json, exhaustive);
    if (*heur) return run_heuristic(file, runs, seed, csv);
    if (*serve) return run_serve(bind);
    std::cout << app.help();
    return 0;
  } catch (const isostab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const isostab::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
