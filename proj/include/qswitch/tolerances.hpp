// Copyright 2026 The qswitch Authors
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

// Single source of truth for numeric tolerances. Library checks and the test
// suites use these same constants; statistical test thresholds are stated
// per test instead.

namespace qsw::tol {

// Comparisons against closed-form predictions.
inline constexpr double analytic = 1e-9;

// Invariant checks at value construction (Hermiticity, unit trace,
// completeness, unitarity, PSD slack).
inline constexpr double validation = 1e-10;

// Identities expected to hold at machine precision for matrices this small.
inline constexpr double exact = 1e-12;

// State-vector normalization.
inline constexpr double state_norm = 1e-12;

// Post-selection probabilities below this are treated as "outcome never
// occurs" and yield no normalized state.
inline constexpr double zero_probability = 1e-12;

}  // namespace qsw::tol
