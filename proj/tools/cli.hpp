// Copyright 2026 The radiolabel Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radiolabel::cli {

/// Exit codes: 0 success, 1 validation failure, 2 usage error.
enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2 };

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  /// Selects the default output format: table when true, JSON otherwise.
  bool interactive = false;
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, Streams streams);

}  // namespace radiolabel::cli
