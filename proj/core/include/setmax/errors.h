// Copyright 2026 The setmax Authors.
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

#ifndef SETMAX_ERRORS_H_
#define SETMAX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace setmax {

// Precondition violated by a caller-supplied argument (width mismatch, element
// out of range, non-positive scale, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine was asked to run above its documented size cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// f = theta / alpha + cut failed the submodularity check.
class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An algorithm input broke a documented contract (negative value handed to
// local search, infeasible singleton, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace setmax

#endif  // SETMAX_ERRORS_H_
