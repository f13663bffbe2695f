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

#include "glc/gllmm.h"

#include <string>

#include "glc/distributions.h"
#include "glc/error.h"

namespace glc {
namespace {

using FamilyCdf = double (*)(double, double, double);

constexpr FamilyCdf kFamilyCdfs[3] = {gaussian_cdf, laplace_cdf, logistic_cdf};

void check_symbol(int k, const SymbolAlphabet& alphabet) {
  if (!alphabet.contains(k)) {
    fail(ErrorKind::kOutOfAlphabet,
         "symbol " + std::to_string(k) + " outside alphabet [" +
             std::to_string(alphabet.min_symbol()) + ", " +
             std::to_string(alphabet.max_symbol()) + "]");
  }
}

}  // namespace

const char* family_name(Family family) {
  switch (family) {
    case Family::kGaussian: return "gaussian";
    case Family::kLaplace: return "laplace";
    case Family::kLogistic: return "logistic";
  }
  return "unknown";
}

GllmmParams GllmmParams::standard() {
  GllmmParams params;
  for (auto& comps : params.components) {
    comps.assign(kDefaultComponents,
                 MixtureComponent{1.0 / kDefaultComponents, 0.0, 1.0});
  }
  return params;
}

double gllmm_cdf(const GllmmParams& params, double x) {
  double c = 0.0;
  for (size_t f = 0; f < 3; ++f) {
    const double family_weight = params.family_weights[f];
    if (family_weight == 0.0) continue;
    double family_sum = 0.0;
    for (const MixtureComponent& comp : params.components[f]) {
      if (comp.weight == 0.0) continue;
      family_sum += comp.weight * kFamilyCdfs[f](x, comp.mean, comp.spread);
    }
    c += family_weight * family_sum;
  }
  return c;
}

double discretized_prob(const GllmmParams& params, int k,
                        const SymbolAlphabet& alphabet) {
  check_symbol(k, alphabet);
  const double upper = k == alphabet.max_symbol() ? 1.0 : gllmm_cdf(params, k + 0.5);
  const double lower = k == alphabet.min_symbol() ? 0.0 : gllmm_cdf(params, k - 0.5);
  const double p = upper - lower;
  return p > 0.0 ? p : 0.0;
}

std::vector<double> discretized_masses(const GllmmParams& params,
                                       const SymbolAlphabet& alphabet) {
  const size_t n = alphabet.span();
  std::vector<double> masses(n);
  double lower = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double upper =
        i + 1 == n ? 1.0 : gllmm_cdf(params, alphabet.symbol_at(i) + 0.5);
    const double p = upper - lower;
    masses[i] = p > 0.0 ? p : 0.0;
    lower = upper;
  }
  return masses;
}

DiscreteDistribution discretize(const GllmmParams& params,
                                const SymbolAlphabet& alphabet) {
  return DiscreteDistribution::from_masses(alphabet, discretized_masses(params, alphabet));
}

}  // namespace glc
