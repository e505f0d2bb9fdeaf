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

// JSON (de)serialization of instances, solutions, weight vectors and cost
// breakdowns. Rationals are always written as "p/q" or integer strings.

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "delivery/model.hpp"

namespace delivery::io {

using Json = nlohmann::ordered_json;

/// Accepts a JSON string ("3/4", "2") or a JSON integer.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);

Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& instance);

Solution solution_from_json(const Json& j, const Instance& instance);
Json solution_to_json(const Solution& solution, const Instance& instance);

/// Accepts {"weights": {"1": "2", ...}} or a bare {"1": "2", ...} object.
WeightVector weights_from_json(const Json& j);
Json weights_to_json(const WeightVector& w);

Json cost_to_json(const CostBreakdown& cost, int decimal_digits = -1);

Json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with two-space indent and a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const Instance& instance);

}  // namespace delivery::io
