#pragma once

#include <atomic>
#include <functional>
#include <string>

namespace isostab {

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// Stateless dispatch of one request; safe to call concurrently.
Response handle_request(const std::string& method, const std::string& path, const std::string& body);

/// Blocks serving HTTP on host:port. `on_ready` receives the bound port
/// (useful with port 0). Returns false if binding failed.
bool serve(const std::string& host, int port, const std::function<void(int)>& on_ready = {});

/// Stops every running serve() call.
void stop_serving();

}  // namespace isostab
