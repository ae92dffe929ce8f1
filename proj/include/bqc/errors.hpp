// Copyright 2026 The bqc-workbench Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace bqc {

/// Requested simulation exceeds a configured size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wire or coordinate outside the valid range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Gate kind not supported by the requested transformation.
class UnsupportedGateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cat-state verification kept failing; the ancilla factory is too noisy.
class FaultEscalationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classical channel lost a message more times than the retry budget.
class ProtocolAbortError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace bqc
