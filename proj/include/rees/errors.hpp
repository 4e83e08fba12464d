// Copyright 2026 The rees-lab Authors
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

#ifndef REES_ERRORS_HPP_
#define REES_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rees {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: out-of-range parameters, malformed exponent data.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two values built over different ambients (n ground, m Rees variables).
class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// An exponent left the supported range [0, kMaxExponent].
class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

// A binomial whose two sides have different images under the Rees map.
class NotAKernelElement : public Error {
 public:
  using Error::Error;
};

// A congruence search hit its state cap before reaching a verdict.
class SearchCapExceeded : public Error {
 public:
  SearchCapExceeded(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

// A mathematical statement the library relies on was refuted by a
// computation. Carries the counterexample in the message.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace rees

#endif  // REES_ERRORS_HPP_
