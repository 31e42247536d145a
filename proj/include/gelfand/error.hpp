// Copyright 2026 The gelfand Authors
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

namespace gelfand {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// malformed input: bad vertex, overlapping blocks, parse failures
class ValidationError : public Error {
 public:
  using Error::Error;
};

// k or family mismatch between operands
class DimensionError : public Error {
 public:
  using Error::Error;
};

// sign of a rank-dropping conjugation was requested
class UndefinedSignError : public Error {
 public:
  using Error::Error;
};

class NoConjugatorError : public Error {
 public:
  using Error::Error;
};

// something that should be impossible happened
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gelfand
