// Copyright 2026 The Ecdither Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// HTTP front end for the processing, preset and sweep API.

#include <csignal>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ecdither/service.h"
#include "httplib.h"

namespace {

httplib::Server* g_server = nullptr;

void Stop(int) {
  if (g_server != nullptr) g_server->stop();
}

std::string EnvOr(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v != nullptr && *v != '\0' ? std::string(v) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ecdither HTTP service"};
  std::string host = EnvOr("ECDITHER_HOST", "127.0.0.1");
  int port = std::atoi(EnvOr("ECDITHER_PORT", "8080").c_str());
  ecdither::ServiceOptions options;
  std::string presets = EnvOr("ECDITHER_PRESETS", "presets.json");
  app.add_option("--host", host, "Listen address")->capture_default_str();
  app.add_option("--port", port, "Listen port")
      ->check(CLI::Range(1, 65535))
      ->capture_default_str();
  app.add_option("--presets", presets, "Preset store file")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);
  options.preset_file = presets;

  auto service = ecdither::Service::Create(options);
  if (!service.ok()) {
    std::cerr << "ecditherd: " << service.status().message() << "\n";
    return 3;
  }
  httplib::Server server;
  (*service)->Register(server);
  g_server = &server;
  std::signal(SIGINT, Stop);
  std::signal(SIGTERM, Stop);
  if (!server.bind_to_port(host, port)) {
    std::cerr << "ecditherd: cannot listen on " << host << ":" << port << "\n";
    return 3;
  }
  std::cerr << "ecditherd: listening on " << host << ":" << port << "\n";
  server.listen_after_bind();
  return 0;
}
