// Copyright 2026 The nevsm Authors.
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

#ifndef NEVSM_ERROR_HPP_
#define NEVSM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace nevsm {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (JSON syntax, wrong field types, missing fields).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a data invariant (cycle, unknown id, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied argument is outside its documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A file could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace nevsm

#endif  // NEVSM_ERROR_HPP_
