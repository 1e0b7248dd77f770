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

#include <stdexcept>
#include <string>
#include <string_view>

namespace radiolabel {

enum class Errc {
  index_out_of_range,
  self_loop,
  disconnected,
  size_limit_exceeded,
  arity_mismatch,
  invalid_parameter,
  parameter_out_of_range,
  k_out_of_range,
  incomplete_labeling,
  too_large,
  parse_error,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::self_loop: return "SelfLoop";
    case Errc::disconnected: return "Disconnected";
    case Errc::size_limit_exceeded: return "SizeLimitExceeded";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::invalid_parameter: return "InvalidParameter";
    case Errc::parameter_out_of_range: return "ParameterOutOfRange";
    case Errc::k_out_of_range: return "KOutOfRange";
    case Errc::incomplete_labeling: return "IncompleteLabeling";
    case Errc::too_large: return "TooLarge";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace radiolabel
