// Copyright 2026 The OKB Authors.
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

#ifndef OKB_SERVICE_H_
#define OKB_SERVICE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "okb/error.h"
#include "okb/workbench.h"

namespace okb {

struct ApiRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

int http_status(ErrorCode code);

// In-memory project store behind the HTTP routes. Requests on one project
// are serialized; stages run on a worker thread and mutations during a
// running stage are refused with CONFLICT.
class Service {
 public:
  Service();
  ~Service();
  Service(const Service &) = delete;
  Service &operator=(const Service &) = delete;

  ApiResponse handle(const ApiRequest &request);

  // Serves an existing project file; every successful mutation is saved
  // back to it. Returns the project id.
  std::string open(const std::filesystem::path &path);

  // Blocks until no stage is running.
  void wait_idle();

  std::optional<ProjectState> snapshot(const std::string &id) const;

 private:
  struct Slot {
    std::mutex mutex;
    ProjectState state;
    bool running = false;
    std::optional<std::filesystem::path> file;
  };

  std::shared_ptr<Slot> slot(const std::string &id) const;
  std::shared_ptr<Slot> add(ProjectState state, std::optional<std::filesystem::path> file);
  void run_stage_async(std::shared_ptr<Slot> slot, Stage stage, StageOptions options, bool wait);

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Slot>> projects_;
  std::vector<std::thread> workers_;
};

// Runs an HTTP server on host:port until the process is interrupted.
// Returns false when the socket cannot be bound.
bool serve_http(Service &service, const std::string &host, int port);

}  // namespace okb

#endif  // OKB_SERVICE_H_
