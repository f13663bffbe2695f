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

#include "glc/factorized.h"

#include <cmath>
#include <string>

#include "glc/distributions.h"
#include "glc/error.h"

namespace glc {
namespace {

double softplus(double v) {
  // log1p(exp(v)) without overflow.
  return v > 0.0 ? v + std::log1p(std::exp(-v)) : std::log1p(std::exp(v));
}

const FactorizedChannel& lookup(const FactorizedDensityParams& params, size_t channel) {
  if (channel >= params.channels.size()) {
    fail(ErrorKind::kLookup, "factorized density has no channel " + std::to_string(channel) +
                                 " (" + std::to_string(params.channels.size()) + " channels)");
  }
  return params.channels[channel];
}

double channel_cdf(const FactorizedChannel& channel, double x) {
  if (!std::isfinite(x)) fail(ErrorKind::kParameterDomain, "factorized cdf: non-finite argument");
  if (channel.layers.empty()) return sigmoid(x);
  const size_t width = channel.layers.front().weight.size();
  std::vector<double> u(width, x);
  for (const FactorizedLayer& layer : channel.layers) {
    if (layer.weight.size() != width || layer.bias.size() != width ||
        layer.gate.size() != width) {
      fail(ErrorKind::kParameterDomain, "factorized layer widths disagree");
    }
    for (size_t j = 0; j < width; ++j) {
      double v = softplus(layer.weight[j]) * u[j] + layer.bias[j];
      v += std::tanh(layer.gate[j]) * std::tanh(v);
      u[j] = v;
    }
  }
  double logit = 0.0;
  for (double v : u) logit += v;
  return sigmoid(logit / static_cast<double>(width));
}

}  // namespace

double unit_raw_weight() { return std::log(std::expm1(1.0)); }

FactorizedDensityParams FactorizedDensityParams::identity(size_t channels, size_t layers,
                                                          size_t width) {
  FactorizedLayer layer{std::vector<double>(width, unit_raw_weight()),
                        std::vector<double>(width, 0.0), std::vector<double>(width, 0.0)};
  FactorizedDensityParams params;
  params.channels.assign(channels, FactorizedChannel{std::vector<FactorizedLayer>(layers, layer)});
  return params;
}

double factorized_cdf(const FactorizedDensityParams& params, size_t channel, double x) {
  return channel_cdf(lookup(params, channel), x);
}

double factorized_prob(const FactorizedDensityParams& params, size_t channel, int k,
                       const SymbolAlphabet& alphabet) {
  const FactorizedChannel& ch = lookup(params, channel);
  if (!alphabet.contains(k)) {
    fail(ErrorKind::kOutOfAlphabet, "symbol " + std::to_string(k) + " outside alphabet");
  }
  const double upper = k == alphabet.max_symbol() ? 1.0 : channel_cdf(ch, k + 0.5);
  const double lower = k == alphabet.min_symbol() ? 0.0 : channel_cdf(ch, k - 0.5);
  const double p = upper - lower;
  return p > 0.0 ? p : 0.0;
}

std::vector<double> factorized_masses(const FactorizedDensityParams& params, size_t channel,
                                      const SymbolAlphabet& alphabet) {
  const FactorizedChannel& ch = lookup(params, channel);
  const size_t n = alphabet.span();
  std::vector<double> masses(n);
  double lower = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double upper = i + 1 == n ? 1.0 : channel_cdf(ch, alphabet.symbol_at(i) + 0.5);
    const double p = upper - lower;
    masses[i] = p > 0.0 ? p : 0.0;
    lower = upper;
  }
  return masses;
}

DiscreteDistribution discretize_factorized(const FactorizedDensityParams& params,
                                           size_t channel, const SymbolAlphabet& alphabet) {
  return DiscreteDistribution::from_masses(alphabet,
                                           factorized_masses(params, channel, alphabet));
}

}  // namespace glc
