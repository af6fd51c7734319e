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

#ifndef SETMAX_VERIFY_H_
#define SETMAX_VERIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setmax/instance.h"

namespace setmax {

// Randomized property suites, each checked against brute force.
struct SuiteOptions {
  uint64_t seed = 1;
  int trials = 0;  // 0 selects the suite default
  int n = 0;       // 0 selects the suite default
  double epsilon = 0.5;
  // When set, suites that can use a fixed instance run one trial on it.
  const Instance* instance = nullptr;
};

struct SuiteReport {
  std::string name;
  int trials = 0;
  int failures = 0;
  // Largest amount by which a checked inequality failed (0 if none did).
  double max_violation = 0.0;
};

const std::vector<std::string>& SuiteNames();

bool IsSuiteName(const std::string& name);

// Throws ArgumentError for an unknown suite or a size above its cap.
SuiteReport RunSuite(const std::string& name, const SuiteOptions& options);

// "suite=<name> trials=<t> failures=<f> max_violation=<v>"
std::string FormatSuiteReport(const SuiteReport& report);

}  // namespace setmax

#endif  // SETMAX_VERIFY_H_
