// Copyright 2026 The lppgame Authors
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

#ifndef LPPGAME_ERRORS_H_
#define LPPGAME_ERRORS_H_

#include <stdexcept>
#include <string>

namespace lppgame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed documents and specs (bad JSON, bad partition syntax, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Matrix/vector shapes that contradict each other or the declared sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A well-formed argument outside the domain of an operation, e.g. a negative
// pool amount or a strategy outside its box.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Combinatorial caps and scan budgets. These are hard errors so that results
// are never silently truncated.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Generator configurations whose ranges cannot produce a valid instance.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Two independent routes to the same answer disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace lppgame

#endif  // LPPGAME_ERRORS_H_
