// Copyright 2026 The coreabacus Authors
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
#include <utility>
#include <vector>

namespace coreabacus {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition (runner mismatch, non-coprime
// moduli, out-of-range block index, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Request exceeds a published desk-scale limit.
class GuardRailError : public Error {
 public:
  GuardRailError(const std::string& what, std::string suggestion)
      : Error(what + " (suggested: " + suggestion + ")"),
        suggestion_(std::move(suggestion)) {}

  const std::string& suggestion() const { return suggestion_; }

 private:
  std::string suggestion_;
};

// A result that should be unique was not; `tied` holds the rendered members.
class AmbiguityError : public Error {
 public:
  AmbiguityError(const std::string& what, std::vector<std::string> tied)
      : Error(what), tied_(std::move(tied)) {}

  const std::vector<std::string>& tied() const { return tied_; }

 private:
  std::vector<std::string> tied_;
};

// An internal mathematical invariant failed (e.g. a closed form produced a
// non-integer). Always a bug, never a user error.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace coreabacus
