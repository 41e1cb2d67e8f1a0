// Copyright 2026 The netform Authors
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

#ifndef NETFORM_ERRORS_HPP
#define NETFORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace netform {

// Base of every error raised by the library. The C API maps each subclass to
// a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the inputs does not hold (wrong regime, mismatched node
// counts, malformed schedule, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured search cap was exceeded. The answer is unknown, not "no".
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Input text could not be parsed into a valid object.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure while reading or writing.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace netform

#endif  // NETFORM_ERRORS_HPP
