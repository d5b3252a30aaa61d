// Copyright 2026 The Rubriq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>

#include <nlohmann/json.hpp>

#include "rubriq/error.h"
#include "rubriq/llm_backend.h"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

namespace rubriq {
namespace {

class HttplibTransport : public HttpTransport {
 public:
  HttpResponse Post(const HttpRequest& request) const override {
    const auto scheme_end = request.url.find("://");
    if (scheme_end == std::string::npos) {
      throw Error(ErrorCode::kConfig, "endpoint '" + request.url +
                                          "' needs an http:// or https:// "
                                          "scheme");
    }
    const auto path_start = request.url.find('/', scheme_end + 3);
    const std::string origin = request.url.substr(0, path_start);
    const std::string path = path_start == std::string::npos
                                 ? "/"
                                 : request.url.substr(path_start);

    httplib::Client client(origin);
    const auto seconds =
        std::chrono::duration_cast<std::chrono::seconds>(request.timeout);
    client.set_connection_timeout(seconds);
    client.set_read_timeout(seconds);
    client.set_write_timeout(seconds);

    httplib::Headers headers;
    std::string content_type = "application/json";
    for (const auto& [name, value] : request.headers) {
      if (name == "Content-Type") {
        content_type = value;
      } else {
        headers.emplace(name, value);
      }
    }
    auto result = client.Post(path, headers, request.body, content_type);
    if (!result) {
      throw Error(ErrorCode::kTransport,
                  "POST " + request.url + " failed: " +
                      httplib::to_string(result.error()));
    }
    return {result->status, result->body};
  }
};

std::string GetEnv(std::string_view name) {
  const char* value = std::getenv(std::string(name).c_str());
  return value == nullptr ? std::string() : std::string(value);
}

std::string Snippet(const std::string& body) {
  constexpr std::size_t kMax = 200;
  return body.size() <= kMax ? body : body.substr(0, kMax) + "...";
}

}  // namespace

std::shared_ptr<const HttpTransport> MakeHttpTransport() {
  return std::make_shared<HttplibTransport>();
}

RemoteOptions RemoteOptions::FromEnvironment() {
  RemoteOptions options;
  options.endpoint = GetEnv(kApiUrlEnv);
  options.api_key = GetEnv(kApiKeyEnv);
  return options;
}

RemoteBackend::RemoteBackend(RemoteOptions options,
                             std::shared_ptr<const HttpTransport> transport,
                             Sleeper sleeper)
    : options_(std::move(options)),
      transport_(std::move(transport)),
      sleeper_(std::move(sleeper)) {
  if (options_.endpoint.empty()) {
    throw Error(ErrorCode::kConfig, "remote backend needs an endpoint (set " +
                                        std::string(kApiUrlEnv) + ")");
  }
  if (options_.api_key.empty()) {
    throw Error(ErrorCode::kConfig, "remote backend needs an API key (set " +
                                        std::string(kApiKeyEnv) + ")");
  }
  if (!transport_) {
    throw Error(ErrorCode::kConfig, "remote backend needs a transport");
  }
  options_.retry.Validate();
}

std::string RemoteBackend::EncodeRequest(const CompletionRequest& request) {
  nlohmann::ordered_json body;
  body["model"] = request.model_id;
  body["prompt"] = request.prompt;
  body["max_tokens"] = request.max_output_tokens;
  body["temperature"] = request.temperature;
  if (request.seed) body["seed"] = *request.seed;
  return body.dump();
}

CompletionResult RemoteBackend::Complete(
    const CompletionRequest& request) const {
  ValidateRequest(request);
  options_.budgets.Check(request);
  const std::string body = EncodeRequest(request);
  return RunWithRetry(options_.retry, sleeper_,
                      [&] { return Attempt(request, body); });
}

CompletionResult RemoteBackend::Attempt(const CompletionRequest& request,
                                        const std::string& body) const {
  HttpRequest http;
  http.url = options_.endpoint;
  http.body = body;
  http.timeout = options_.timeout;
  http.headers = {{"Authorization", "Bearer " + options_.api_key},
                  {"Content-Type", "application/json"}};

  const HttpResponse response = transport_->Post(http);
  const int status = response.status;
  if (status == 401 || status == 403) {
    throw Error(ErrorCode::kAuth, "credential rejected (HTTP " +
                                      std::to_string(status) + ")");
  }
  if (status == 429) {
    throw Error(ErrorCode::kRateLimited, "rate limited (HTTP 429)");
  }
  if (status == 408 || status >= 500) {
    throw Error(ErrorCode::kTransport,
                "server error (HTTP " + std::to_string(status) + "): " +
                    Snippet(response.body));
  }
  if (status >= 400) {
    throw Error(ErrorCode::kRequestRejected,
                "request rejected (HTTP " + std::to_string(status) + "): " +
                    Snippet(response.body));
  }
  if (status < 200 || status >= 300) {
    throw Error(ErrorCode::kMalformedResponse,
                "unexpected HTTP status " + std::to_string(status));
  }

  CompletionResult result;
  if (options_.text_path.empty()) {
    result.text = response.body;
  } else {
    try {
      const auto doc = nlohmann::json::parse(response.body);
      const auto& field = doc.at(nlohmann::json::json_pointer(options_.text_path));
      if (!field.is_string()) {
        throw Error(ErrorCode::kMalformedResponse,
                    "field " + options_.text_path + " is not a string");
      }
      result.text = field.get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kMalformedResponse,
                  std::string("cannot read ") + options_.text_path + ": " +
                      e.what());
    }
  }
  result.prompt_token_estimate = EstimateTokens(request.prompt);
  result.output_token_estimate = EstimateTokens(result.text);
  return result;
}

}  // namespace rubriq
