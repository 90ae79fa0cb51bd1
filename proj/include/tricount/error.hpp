// Copyright 2026 The tricount Authors.
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

#ifndef TRICOUNT_ERROR_HPP_
#define TRICOUNT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tricount {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An argument lies outside its documented domain (probabilities, epsilons...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Vertex id not in [0, n).
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

// A caller broke an input contract, e.g. passed an unsorted query batch.
class ContractError : public Error {
 public:
  using Error::Error;
};

// An oracle or desk-scale routine refused a graph above its size cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace tricount

#endif  // TRICOUNT_ERROR_HPP_
