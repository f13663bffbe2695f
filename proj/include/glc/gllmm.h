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

// Gaussian-Laplacian-Logistic mixture model for the main latent.
//
// The mixture cumulative is
//
//   c(x) = p0 * sum_k w_k Phi(x; mu_k, var_k)
//        + p1 * sum_m w_m Laplace(x; mu_m, b_m)
//        + p2 * sum_n w_n Logistic(x; mu_n, s_n)
//
// and an integer symbol k gets the mass c(k + 1/2) - c(k - 1/2). The two end
// bins of an alphabet absorb the tails so the alphabet is exhaustive.
//
// Component weights are normalized per family. The Gaussian spread is a
// variance; Laplace and Logistic store their natural scale directly.

#ifndef GLC_GLLMM_H_
#define GLC_GLLMM_H_

#include <array>
#include <cstddef>
#include <vector>

#include "glc/alphabet.h"

namespace glc {

struct MixtureComponent {
  double weight = 0.0;
  double mean = 0.0;
  // Variance for Gaussian components, scale for Laplace and Logistic.
  double spread = 1.0;

  friend bool operator==(const MixtureComponent&, const MixtureComponent&) = default;
};

enum class Family { kGaussian = 0, kLaplace = 1, kLogistic = 2 };

const char* family_name(Family family);

struct GllmmParams {
  static constexpr size_t kDefaultComponents = 3;

  // p0 (Gaussian), p1 (Laplace), p2 (Logistic).
  std::array<double, 3> family_weights{1.0 / 3, 1.0 / 3, 1.0 / 3};
  std::array<std::vector<MixtureComponent>, 3> components;

  std::vector<MixtureComponent>& family(Family f) {
    return components[static_cast<size_t>(f)];
  }
  const std::vector<MixtureComponent>& family(Family f) const {
    return components[static_cast<size_t>(f)];
  }

  // Three zero-mean unit-spread components per family, uniform weights.
  static GllmmParams standard();

  friend bool operator==(const GllmmParams&, const GllmmParams&) = default;
};

double gllmm_cdf(const GllmmParams& params, double x);

// Mass of integer bin `k`; the end bins of `alphabet` absorb the tails.
// Throws kOutOfAlphabet when k lies outside the alphabet.
double discretized_prob(const GllmmParams& params, int k,
                        const SymbolAlphabet& alphabet);

// discretized_prob for every symbol, evaluating each bin edge once.
std::vector<double> discretized_masses(const GllmmParams& params,
                                       const SymbolAlphabet& alphabet);

// Floored, renormalized distribution used for coding and rate estimates.
DiscreteDistribution discretize(const GllmmParams& params,
                                const SymbolAlphabet& alphabet);

}  // namespace glc

#endif  // GLC_GLLMM_H_
