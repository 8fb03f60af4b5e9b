// Copyright 2026 The monfg Authors
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

#ifndef MONFG_ERRORS_H_
#define MONFG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace monfg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A game, strategy or configuration violates one of its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Vector or table shapes do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An action index or player index is out of range.
class BoundsError : public Error {
 public:
  using Error::Error;
};

// Unknown game id in the built-in catalog.
class CatalogError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace monfg

#endif  // MONFG_ERRORS_H_
