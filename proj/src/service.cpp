#include "isostab/service.hpp"

#include <mutex>
#include <vector>

#include "httplib.h"
#include "isostab/io.hpp"

namespace isostab {

namespace {

Response json_response(int status, const Json& j) { return {status, j.dump(), "application/json"}; }

Response error(int status, const std::string& msg) { return json_response(status, Json{{"error", msg}}); }

RPoint json_point(const Json& v) {
  if (!v.is_array() || v.size() != 2) throw ParseError("vertex must be a [x, y] pair");
  auto coord = [](const Json& c) {
    if (c.is_string()) return parse_decimal(c.get<std::string>());
    if (c.is_number_integer()) return parse_decimal(c.dump());
    throw ParseError("vertex coordinates must be decimal strings");
  };
  return {coord(v[0]), coord(v[1])};
}

Response solve_endpoint(const std::string& body) {
  const Instance s = instance_from_json(Json::parse(body));
  return json_response(200, result_doc(s, solve(s)));
}

Response reshape_endpoint(const std::string& body) {
  const Json doc = Json::parse(body);
  const Instance s = instance_from_json(doc);
  const SolveResult r = solve(s);
  if (!r.is_polygon()) return json_response(200, result_doc(s, r));
  if (!doc.contains("vertices") || !doc["vertices"].is_object()) throw ParseError("reshape needs a 'vertices' object");
  std::array<RPoint, 4> v;
  for (Role role : kRoles) {
    const char* name = role_name(role);
    if (!doc["vertices"].contains(name)) throw ParseError(std::string("missing vertex for ") + name);
    v[static_cast<int>(role)] = json_point(doc["vertices"][name]);
  }
  return json_response(200, reshape_doc(reshape(s, v)));
}

std::mutex g_servers_mutex;
std::vector<httplib::Server*> g_servers;

}  // namespace

Response handle_request(const std::string& method, const std::string& path, const std::string& body) {
  try {
    if (method == "GET" && path == "/health") return {200, "ok", "text/plain"};
    if (method == "GET" && path == "/configs") return json_response(200, registry_json());
    if (method == "POST" && path == "/solve") return solve_endpoint(body);
    if (method == "POST" && path == "/reshape") return reshape_endpoint(body);
    return error(404, "no such endpoint: " + method + " " + path);
  } catch (const nlohmann::json::exception& e) {
    return error(400, std::string("invalid JSON: ") + e.what());
  } catch (const ParseError& e) {
    return error(400, e.what());
  } catch (const InternalError& e) {
    return error(500, std::string("internal error: ") + e.what());
  }
}

bool serve(const std::string& host, int port, const std::function<void(int)>& on_ready) {
  httplib::Server server;
  auto bridge = [](const httplib::Request& req, httplib::Response& res) {
    const Response r = handle_request(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  server.Get("/health", bridge);
  server.Get("/configs", bridge);
  server.Post("/solve", bridge);
  server.Post("/reshape", bridge);
  const int bound = port == 0 ? server.bind_to_any_port(host) : (server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) return false;
  {
    std::lock_guard lock(g_servers_mutex);
    g_servers.push_back(&server);
  }
  if (on_ready) on_ready(bound);
  const bool ok = server.listen_after_bind();
  std::lock_guard lock(g_servers_mutex);
  g_servers.erase(std::find(g_servers.begin(), g_servers.end(), &server));
  return ok;
}

void stop_serving() {
  std::lock_guard lock(g_servers_mutex);
  for (auto* s : g_servers) s->stop();
}

}  // namespace isostab
