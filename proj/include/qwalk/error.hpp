// Copyright 2026 The qwalk Authors
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

namespace qwalk {

enum class ErrorKind {
  invalid_dimension,
  invalid_parameter,
  degenerate_graph,
  size_limit,
  contract_violation,
  dimension_mismatch,
  tolerance_unmet,
  degenerate_chain,
  invalid_window,
  invalid_vertex,
  parse_error,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_dimension: return "invalid-dimension";
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::degenerate_graph: return "degenerate-graph";
    case ErrorKind::size_limit: return "size-limit";
    case ErrorKind::contract_violation: return "contract-violation";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::tolerance_unmet: return "tolerance-unmet";
    case ErrorKind::degenerate_chain: return "degenerate-chain";
    case ErrorKind::invalid_window: return "invalid-window";
    case ErrorKind::invalid_vertex: return "invalid-vertex";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

/// Exception thrown for every precondition or contract failure in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) throw Error(kind, message);
}

}  // namespace detail
}  // namespace qwalk
