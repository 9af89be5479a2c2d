// Copyright 2026 The prescheck Authors
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

#ifndef PRESCHECK_ERROR_H_
#define PRESCHECK_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prescheck {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input to an operation (dimension mismatch, out-of-range vertex,
// bad document).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An instance exceeds a configured size bound (order cap, isomorphism bound,
// EF-game guard).
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

// check_minimal was asked about a graph that does not satisfy the sentence.
class NotAModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace prescheck

#endif  // PRESCHECK_ERROR_H_
