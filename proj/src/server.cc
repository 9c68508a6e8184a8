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

#include "httplib.h"
#include "okb/service.h"

namespace okb {

bool serve_http(Service &service, const std::string &host, int port) {
  httplib::Server server;
  auto forward = [&service](const httplib::Request &req, httplib::Response &res) {
    ApiRequest api{req.method, req.path, {}, req.body};
    for (const auto &[key, value] : req.params) api.query.emplace(key, value);
    const ApiResponse out = service.handle(api);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  server.Get(".*", forward);
  server.Post(".*", forward);
  server.Put(".*", forward);
  server.Delete(".*", forward);
  return server.listen(host, port);
}

}  // namespace okb
