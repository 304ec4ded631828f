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

/// \file
/// External classifiers speak line-delimited JSON over stdin and stdout.
///
/// One process serves many requests. Each request is one line
///
///     {"schema":"coset-classify/1","id":"...","source":"...","trace":"..."}
///
/// where `trace` (the serialized trace of the first suite input) is sent
/// only when enabled. The process answers with one line
///
///     {"id":"...","label":"..."}
///
/// A response that is not JSON, names another id, or gives a label outside
/// the allowed set is an error prediction. When the deadline passes or the
/// process exits, the request is an error prediction and the process is
/// restarted; after `max_restarts` consecutive failures the handle gives up
/// and answers every further request with an error prediction.

#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <sys/types.h>

#include "coset/harness/classifier.hpp"

namespace coset::harness {

inline constexpr const char* kClassifySchema = "coset-classify/1";

struct ExternalOptions {
  std::chrono::milliseconds deadline{30'000};
  int max_restarts = 3;
  bool send_trace = false;
  /// Accepted labels; empty accepts any.
  std::set<std::string> labels;
};

class ExternalClassifier final : public Classifier {
 public:
  /// `command` runs under /bin/sh -c. The process starts lazily.
  explicit ExternalClassifier(std::string command, ExternalOptions options = {});
  ~ExternalClassifier() override;
  ExternalClassifier(const ExternalClassifier&) = delete;
  ExternalClassifier& operator=(const ExternalClassifier&) = delete;

  std::string name() const override { return "cmd:" + command_; }
  Prediction classify(const corpus::CorpusEntry& entry) override;
  std::unique_ptr<Classifier> clone() const override;

  /// Processes started so far, the first one included.
  int launches() const { return launches_; }
  bool dead() const { return dead_; }

 private:
  bool start();
  void stop();
  Prediction fail(const std::string& why, bool restart);
  bool write_line(const std::string& line);
  /// Empty optional on deadline or end of stream.
  std::optional<std::string> read_line(std::chrono::steady_clock::time_point until,
                                       bool& timed_out);

  std::string command_;
  ExternalOptions options_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  int launches_ = 0;
  int failures_ = 0;
  bool dead_ = false;
};

}  // namespace coset::harness
