#include <cstdlib>
#include <regex>

#include <httplib.h>
#include <json.hpp>

#include "kdrift/error.hpp"
#include "kdrift/looporch.hpp"

namespace kdrift::loop {

HttpChatGenerator::HttpChatGenerator(Options options) : options_(std::move(options)) {
  if (options_.endpoint.empty()) throw Error(Errc::generator_failure, "endpoint", "no endpoint configured");
}

std::string HttpChatGenerator::generate(const GenerationRequest& request) {
  static const std::regex url_re(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(options_.endpoint, m, url_re))
    throw Error(Errc::generator_failure, options_.endpoint, "unsupported endpoint URL");
  const std::string origin = m[1].str();
  const std::string path = m[2].matched ? m[2].str() : "/";

  httplib::Client client(origin);
  client.set_connection_timeout(std::chrono::seconds(10));
  client.set_read_timeout(options_.timeout);
  client.set_write_timeout(options_.timeout);

  httplib::Headers headers;
  if (const char* key = std::getenv(options_.api_key_env.c_str()); key && *key)
    headers.emplace("Authorization", std::string("Bearer ") + key);

  nlohmann::json body = {
      {"model", options_.model},
      {"temperature", options_.temperature},
      {"messages",
       {{{"role", "system"},
         {"content", "You maintain Linux kernel drivers. Answer with a unified diff and nothing else."}},
        {{"role", "user"}, {"content", request.prompt}}}}};

  auto res = client.Post(path, headers, body.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace),
                         "application/json");
  if (!res) throw Error(Errc::generator_failure, options_.endpoint, httplib::to_string(res.error()));
  if (res->status != 200)
    throw Error(Errc::generator_failure, options_.endpoint,
                "HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 200));
  try {
    auto j = nlohmann::json::parse(res->body);
    return strip_code_fence(j.at("choices").at(0).at("message").at("content").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::generator_failure, options_.endpoint, std::string("bad response: ") + e.what());
  }
}

}  // namespace kdrift::loop
