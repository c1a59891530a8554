// Copyright 2026 The Noether Authors
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

namespace noether {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown handle, mixed fibers, violated operation precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed input data (group tables, lattices, series).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The instance fails to behave like a noetherian form.
class InstanceIntegrityError : public Error {
 public:
  using Error::Error;
};

// The conormality proviso of the refinement construction failed.
class ProvisoError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace noether
