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

#include "coset/harness/external.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>

#include "coset/interp/trace.hpp"
#include "json.hpp"

namespace coset::harness {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

int remaining_ms(Clock::time_point until) {
  auto left = std::chrono::duration_cast<std::chrono::milliseconds>(until - Clock::now());
  return left.count() < 0 ? 0 : static_cast<int>(left.count());
}

}  // namespace

ExternalClassifier::ExternalClassifier(std::string command, ExternalOptions options)
    : command_(std::move(command)), options_(std::move(options)) {}

ExternalClassifier::~ExternalClassifier() { stop(); }

std::unique_ptr<Classifier> ExternalClassifier::clone() const {
  return std::make_unique<ExternalClassifier>(command_, options_);
}

bool ExternalClassifier::start() {
  int fds[2];
  if (socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) return false;
  const pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    return false;
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(fds[1], STDIN_FILENO);
    dup2(fds[1], STDOUT_FILENO);
    execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(fds[1]);
  pid_ = pid;
  to_child_ = from_child_ = fds[0];
  buffer_.clear();
  ++launches_;
  return true;
}

void ExternalClassifier::stop() {
  if (to_child_ >= 0) close(to_child_);
  to_child_ = from_child_ = -1;
  if (pid_ > 0) {
    kill(-pid_, SIGKILL);
    kill(pid_, SIGKILL);
    waitpid(pid_, nullptr, 0);
  }
  pid_ = -1;
  buffer_.clear();
}

Prediction ExternalClassifier::fail(const std::string& why, bool restart) {
  if (restart) {
    stop();
    if (++failures_ > options_.max_restarts) dead_ = true;
  }
  return Prediction::failure(why);
}

bool ExternalClassifier::write_line(const std::string& line) {
  std::size_t done = 0;
  const auto until = Clock::now() + options_.deadline;
  while (done < line.size()) {
    pollfd p{to_child_, POLLOUT, 0};
    if (poll(&p, 1, remaining_ms(until)) <= 0) return false;
    const ssize_t n = send(to_child_, line.data() + done, line.size() - done, MSG_NOSIGNAL);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) return false;
    done += static_cast<std::size_t>(n);
  }
  return true;
}

std::optional<std::string> ExternalClassifier::read_line(Clock::time_point until,
                                                         bool& timed_out) {
  timed_out = false;
  for (;;) {
    const auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return line;
    }
    pollfd p{from_child_, POLLIN, 0};
    const int r = poll(&p, 1, remaining_ms(until));
    if (r < 0 && errno == EINTR) continue;
    if (r == 0) {
      timed_out = true;
      return std::nullopt;
    }
    if (r < 0) return std::nullopt;
    char chunk[4096];
    const ssize_t n = read(from_child_, chunk, sizeof chunk);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) return std::nullopt;
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

Prediction ExternalClassifier::classify(const corpus::CorpusEntry& entry) {
  if (dead_) return Prediction::failure("classifier process abandoned after repeated failures");
  if (pid_ < 0 && !start()) return fail("cannot start classifier process", true);

  json request{{"schema", kClassifySchema}, {"id", entry.id}, {"source", entry.source}};
  if (options_.send_trace && !entry.inputs.empty()) {
    try {
      request["trace"] = interp::serialize(interp::trace(entry.program(), entry.inputs[0]).trace);
    } catch (const std::exception& e) {
      return Prediction::failure(e.what());
    }
  }
  const auto until = Clock::now() + options_.deadline;
  if (!write_line(request.dump() + "\n")) return fail("classifier process closed its input", true);

  bool timed_out = false;
  auto line = read_line(until, timed_out);
  if (!line) return fail(timed_out ? "deadline expired" : "classifier process exited", true);
  failures_ = 0;

  json response = json::parse(*line, nullptr, false);
  if (response.is_discarded() || !response.is_object() || !response.contains("id") ||
      !response.contains("label") || !response["id"].is_string() ||
      !response["label"].is_string())
    return Prediction::failure("malformed response: " + line->substr(0, 200));
  if (response["id"] != entry.id)
    return Prediction::failure("response for another id: " + response["id"].get<std::string>());
  auto label = response["label"].get<std::string>();
  if (!options_.labels.empty() && !options_.labels.count(label))
    return Prediction::failure("unknown label: " + label);
  return Prediction::of(std::move(label));
}

}  // namespace coset::harness
