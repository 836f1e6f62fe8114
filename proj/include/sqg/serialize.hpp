// Copyright 2026 the sqgsim authors
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

#include <string>

#include <json.hpp>

#include "sqg/operator.hpp"

namespace sqg {

/// Structured text form: {"kind", "dims", "labels", "rows", "cols",
/// "entries": [[re, im], ...]} with entries row-major. Values are rounded to
/// `sig_digits` significant digits on output.
nlohmann::json to_json(const Operator& op, int sig_digits = 12);
nlohmann::json to_json(const StateVector& psi, int sig_digits = 12);

Operator operator_from_json(const nlohmann::json& j);
StateVector state_from_json(const nlohmann::json& j);

double round_sig(double x, int digits);

}  // namespace sqg
