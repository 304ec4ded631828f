// Copyright 2026 The CoSet Authors
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

// Scripted classifier process for protocol tests. Answers every request
// with --label unless one of the fault options fires for that request
// (requests are counted from 1 per process).

#include <chrono>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

int main(int argc, char** argv) {
  CLI::App app{"stub classifier"};
  std::string label = "Bubblesort";
  int malformed_every = 0, unknown_every = 0, wrong_id_every = 0;
  int sleep_on = 0, sleep_ms = 0, exit_after = 0;
  app.add_option("--label", label);
  app.add_option("--malformed-every", malformed_every);
  app.add_option("--unknown-every", unknown_every);
  app.add_option("--wrong-id-every", wrong_id_every);
  app.add_option("--sleep-on", sleep_on);
  app.add_option("--sleep-ms", sleep_ms);
  app.add_option("--exit-after", exit_after);
  CLI11_PARSE(app, argc, argv);

  std::string line;
  for (int n = 1; std::getline(std::cin, line); ++n) {
    if (exit_after > 0 && n > exit_after) return 3;
    auto request = nlohmann::json::parse(line, nullptr, false);
    std::string id = request.is_object() ? request.value("id", "") : "";
    if (sleep_on == n) std::this_thread::sleep_for(std::chrono::milliseconds(sleep_ms));
    if (malformed_every > 0 && n % malformed_every == 0) {
      std::cout << "{not json" << std::endl;
      continue;
    }
    nlohmann::json response{{"id", id}, {"label", label}};
    if (unknown_every > 0 && n % unknown_every == 0) response["label"] = "NoSuchLabel";
    if (wrong_id_every > 0 && n % wrong_id_every == 0) response["id"] = id + "-other";
    std::cout << response.dump() << std::endl;
  }
  return 0;
}
