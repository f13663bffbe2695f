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

#include "glc/synth.h"

#include <algorithm>

#include "glc/error.h"
#include "glc/rng.h"
#include "glc/validation.h"

namespace glc {

LatentTensor sample_latents(const EntryMap<std::vector<double>>& masses, TensorShape shape,
                            SymbolAlphabet alphabet, uint64_t seed) {
  const auto cumulative = masses.transform([&](const std::vector<double>& m) {
    if (m.size() != alphabet.span()) {
      fail(ErrorKind::kInput, "mass vector length does not match the alphabet");
    }
    std::vector<double> cum(m.size());
    double acc = 0.0;
    for (size_t i = 0; i < m.size(); ++i) cum[i] = (acc += std::max(m[i], 0.0));
    if (!(acc > 0.0)) fail(ErrorKind::kParameterDomain, "distribution has no mass");
    return cum;
  });

  Rng rng(seed);
  std::vector<int32_t> values;
  values.reserve(shape.count());
  for (size_t c = 0; c < shape.channels; ++c) {
    for (size_t h = 0; h < shape.height; ++h) {
      for (size_t w = 0; w < shape.width; ++w) {
        const std::vector<double>& cum = cumulative.at(c, h, w);
        const double u = uniform01(rng) * cum.back();
        auto it = std::upper_bound(cum.begin(), cum.end(), u);
        if (it == cum.end()) --it;
        values.push_back(alphabet.symbol_at(static_cast<size_t>(it - cum.begin())));
      }
    }
  }
  return LatentTensor(shape, alphabet, std::move(values));
}

LatentTensor synth_latents(const EntryMap<GllmmParams>& params, TensorShape shape,
                           SymbolAlphabet alphabet, uint64_t seed) {
  const auto masses = params.transform([&](const GllmmParams& p) {
    const ValidationReport report = validate_params(p);
    if (!report.ok()) fail(ErrorKind::kValidation, report.violations.front().to_string());
    return discretized_masses(p, alphabet);
  });
  return sample_latents(masses, shape, alphabet, seed);
}

LatentTensor synth_hyper_latents(const FactorizedDensityParams& params, TensorShape shape,
                                 SymbolAlphabet alphabet, uint64_t seed) {
  const ValidationReport report = validate_params(params);
  if (!report.ok()) fail(ErrorKind::kValidation, report.violations.front().to_string());
  if (shape.channels > params.channels.size()) {
    fail(ErrorKind::kLookup, "hyper shape has more channels than the factorized density");
  }
  std::vector<std::vector<double>> masses;
  for (size_t ch = 0; ch < shape.channels; ++ch) {
    masses.push_back(factorized_masses(params, ch, alphabet));
  }
  return sample_latents(EntryMap<std::vector<double>>::per_channel(std::move(masses)), shape,
                        alphabet, seed);
}

SyntheticLatents synth_model_latents(const EntropyModel& model, TensorShape shape,
                                     uint64_t seed) {
  if (shape.channels != model.latent_channels.size()) {
    fail(ErrorKind::kInput, "synthetic shape has " + std::to_string(shape.channels) +
                                " channels but the model has " +
                                std::to_string(model.latent_channels.size()));
  }
  const TensorShape hyper_shape{model.hyper.channels.size(), (shape.height + 3) / 4,
                                (shape.width + 3) / 4};
  return {synth_latents(EntryMap<GllmmParams>::per_channel(model.latent_channels), shape,
                        model.latent_alphabet, seed),
          synth_hyper_latents(model.hyper, hyper_shape, model.hyper_alphabet,
                              seed ^ 0x9e3779b97f4a7c15ULL)};
}

}  // namespace glc
