// Copyright 2026 The spreadlab Authors
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

#ifndef SPREADLAB_ERROR_HPP_
#define SPREADLAB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spreadlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph6 / edge-list text. `offset` is the byte (or line) position
// where decoding failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Inconsistent family or bound parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a hard size cap (exhaustive searches, sweep ranges).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid input: asymmetric matrix, non-finite entry, bad
// partition, edge not present, ...
class InputError : public Error {
 public:
  using Error::Error;
};

// Eigensolver did not converge within its iteration cap.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double offdiag_norm)
      : Error(what), offdiag_norm_(offdiag_norm) {}

  double offdiag_norm() const noexcept { return offdiag_norm_; }

 private:
  double offdiag_norm_;
};

// An operation whose closed form only holds under a structural hypothesis
// (e.g. regularity) was called on a graph outside it.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace spreadlab

#endif  // SPREADLAB_ERROR_HPP_
