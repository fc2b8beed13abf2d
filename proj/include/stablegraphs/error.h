// Copyright 2026 The Stablegraphs Authors
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

#ifndef STABLEGRAPHS_ERROR_H_
#define STABLEGRAPHS_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stablegraphs {

// Malformed input: bad permutation text, broken graph structure, unparsable
// documents. The CLI maps every subclass of Error to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

// A request exceeds the configured desk-scale bounds.
class SizeError : public Error {
 public:
  using Error::Error;
};

// An operation was called on data that does not satisfy its precondition,
// e.g. the class function of a marking that fails the compatibility check.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two objects that must live over the same data (base sets, fibers, degrees)
// do not.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Desk-scale limits shared by enumeration and group closure.
struct Bounds {
  int max_degree = 10;                    // m
  int max_dimension = 6;                  // 3g - 3 + m
  std::size_t max_group_order = 3628800;  // 10!

  // Default bounds with max_dimension taken from GS_MAX_SIZE when set.
  static Bounds FromEnvironment();
};

}  // namespace stablegraphs

#endif  // STABLEGRAPHS_ERROR_H_
