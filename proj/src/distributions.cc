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

#include "glc/distributions.h"

#include <cmath>
#include <numbers>
#include <string>

#include "glc/error.h"

namespace glc {
namespace {

void check_args(const char* family, double x, double mean, double spread) {
  if (!std::isfinite(x) || !std::isfinite(mean) || !std::isfinite(spread)) {
    fail(ErrorKind::kParameterDomain, std::string(family) + " cdf: non-finite argument");
  }
  if (spread <= 0.0) {
    fail(ErrorKind::kParameterDomain,
         std::string(family) + " cdf: spread must be positive, got " + std::to_string(spread));
  }
}

}  // namespace

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double gaussian_cdf(double x, double mean, double variance) {
  check_args("gaussian", x, mean, variance);
  // erfc keeps the lower tail accurate.
  return 0.5 * std::erfc(-(x - mean) / std::sqrt(2.0 * variance));
}

double laplace_cdf(double x, double mean, double scale) {
  check_args("laplace", x, mean, scale);
  const double z = (x - mean) / scale;
  if (z < 0.0) return 0.5 * std::exp(z);
  return 1.0 - 0.5 * std::exp(-z);
}

double logistic_cdf(double x, double mean, double scale) {
  check_args("logistic", x, mean, scale);
  return sigmoid((x - mean) / scale);
}

}  // namespace glc
