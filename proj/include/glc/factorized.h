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

// Fully factorized density for the hyper latent: one learned univariate
// cumulative per channel, shared by every spatial position of that channel.
//
// The cumulative broadcasts x into `width` lanes and applies `layers` monotone
// elementwise stages
//
//   u <- softplus(H) * u + b
//   u <- u + tanh(a) * tanh(u)
//
// then squashes the lane mean through a logistic. softplus keeps every slope
// positive and |tanh(a)| < 1 keeps each gate stage strictly increasing, so
// the result is a valid CDF for any finite raw parameters.

#ifndef GLC_FACTORIZED_H_
#define GLC_FACTORIZED_H_

#include <cstddef>
#include <vector>

#include "glc/alphabet.h"

namespace glc {

struct FactorizedLayer {
  // Raw (pre-reparameterization) values, one per lane.
  std::vector<double> weight;
  std::vector<double> bias;
  std::vector<double> gate;

  friend bool operator==(const FactorizedLayer&, const FactorizedLayer&) = default;
};

struct FactorizedChannel {
  std::vector<FactorizedLayer> layers;

  friend bool operator==(const FactorizedChannel&, const FactorizedChannel&) = default;
};

struct FactorizedDensityParams {
  static constexpr size_t kDefaultLayers = 4;
  static constexpr size_t kDefaultWidth = 3;

  std::vector<FactorizedChannel> channels;

  // Raw parameters that make every stage the identity, reducing the
  // cumulative to the standard logistic.
  static FactorizedDensityParams identity(size_t channels,
                                          size_t layers = kDefaultLayers,
                                          size_t width = kDefaultWidth);

  friend bool operator==(const FactorizedDensityParams&,
                         const FactorizedDensityParams&) = default;
};

// softplus^-1(1): the raw weight giving an effective slope of one.
double unit_raw_weight();

// Throws kLookup for an unknown channel.
double factorized_cdf(const FactorizedDensityParams& params, size_t channel,
                      double x);

// Same tail absorption as discretized_prob. Throws kLookup for an unknown
// channel and kOutOfAlphabet for k outside the alphabet.
double factorized_prob(const FactorizedDensityParams& params, size_t channel,
                       int k, const SymbolAlphabet& alphabet);

std::vector<double> factorized_masses(const FactorizedDensityParams& params,
                                      size_t channel,
                                      const SymbolAlphabet& alphabet);

DiscreteDistribution discretize_factorized(const FactorizedDensityParams& params,
                                           size_t channel,
                                           const SymbolAlphabet& alphabet);

}  // namespace glc

#endif  // GLC_FACTORIZED_H_
