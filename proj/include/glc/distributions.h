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

// Closed-form cumulative distribution functions of the three mixture
// families. All throw kParameterDomain on non-finite arguments or a
// non-positive spread.

#ifndef GLC_DISTRIBUTIONS_H_
#define GLC_DISTRIBUTIONS_H_

namespace glc {

// Normal CDF parameterized by variance.
double gaussian_cdf(double x, double mean, double variance);

// Laplace CDF with diversity `scale`.
double laplace_cdf(double x, double mean, double scale);

// Logistic CDF with scale `scale`; saturates without overflow.
double logistic_cdf(double x, double mean, double scale);

// 1 / (1 + exp(-z)) evaluated without overflow for large |z|.
double sigmoid(double z);

}  // namespace glc

#endif  // GLC_DISTRIBUTIONS_H_
