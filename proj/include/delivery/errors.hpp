// Copyright 2026 The Delivery Mechanisms Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace delivery {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad JSON, disconnected graph, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A solution references agents, packages or nodes that do not exist.
/// Distinct from infeasibility, which is reported, not thrown.
class StructuralError : public InputError {
 public:
  using InputError::InputError;
};

/// An operation's precondition does not hold (e.g. a mechanism with k = 1).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or state space would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Default caps. DELIVERY_MECH_CAP overrides all of them when set.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;
inline constexpr std::uint64_t kDefaultOracleStateCap = 10'000'000;
inline constexpr std::size_t kDefaultExactScpArcCap = 9;

/// Returns DELIVERY_MECH_CAP when set to a positive integer, else `fallback`.
std::uint64_t cap_from_env(std::uint64_t fallback);

}  // namespace delivery
