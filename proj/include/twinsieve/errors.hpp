// Copyright 2026 The twinsieve Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace twinsieve {

// Raised when a prime table is too small for the requested query. Callers
// are expected to rebuild a larger table; nothing extends a table silently.
class InsufficientTable : public std::runtime_error {
 public:
  explicit InsufficientTable(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a full-period scan exceeds the feasibility bound and the
// caller did not pass the override.
class FeasibilityRefused : public std::runtime_error {
 public:
  explicit FeasibilityRefused(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace twinsieve
