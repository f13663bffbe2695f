/* Copyright 2026 The glcodec Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef GLC_VALIDATION_H_
#define GLC_VALIDATION_H_

#include <string>
#include <vector>

#include "glc/factorized.h"
#include "glc/gllmm.h"

namespace glc {

// Rule identifiers used in validation reports.
namespace rules {
inline constexpr const char* kFamilyWeightSum = "family-weight-sum";
inline constexpr const char* kComponentWeightSum = "component-weight-sum";
inline constexpr const char* kNonNegative = "non-negative";
inline constexpr const char* kPositivity = "positivity";
inline constexpr const char* kMinScale = "min-scale";
inline constexpr const char* kFinite = "finite";
inline constexpr const char* kComponentCount = "component-count";
inline constexpr const char* kLayerShape = "layer-shape";
inline constexpr const char* kMonotone = "monotone";
inline constexpr const char* kTails = "tails";
}  // namespace rules

inline constexpr double kWeightSumTolerance = 1e-9;
// Spreads below this are near-deterministic and rejected.
inline constexpr double kMinSpread = 1e-6;

struct Violation {
  std::string location;
  std::string rule;
  std::string detail;

  std::string to_string() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  // One line per violation.
  std::string to_string() const;
};

// `location` prefixes every reported location (e.g. "channel 3").
ValidationReport validate_params(const GllmmParams& params,
                                 const std::string& location = "gllmm");
ValidationReport validate_params(const FactorizedDensityParams& params,
                                 const std::string& location = "factorized");

}  // namespace glc

#endif  // GLC_VALIDATION_H_
