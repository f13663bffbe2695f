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

// Synthetic latents standing in for an encoder network.

#ifndef GLC_SYNTH_H_
#define GLC_SYNTH_H_

#include <cstdint>
#include <vector>

#include "glc/entry_map.h"
#include "glc/factorized.h"
#include "glc/gllmm.h"
#include "glc/latent.h"
#include "glc/model.h"

namespace glc {

// Draws each entry independently by inverse-CDF sampling of its discretized
// bin masses (before the coding floor is applied). `masses` holds one
// non-negative mass vector per item, each of length alphabet.span().
LatentTensor sample_latents(const EntryMap<std::vector<double>>& masses, TensorShape shape,
                            SymbolAlphabet alphabet, uint64_t seed);

// Throws kValidation when any parameter set is invalid.
LatentTensor synth_latents(const EntryMap<GllmmParams>& params, TensorShape shape,
                           SymbolAlphabet alphabet, uint64_t seed);

LatentTensor synth_hyper_latents(const FactorizedDensityParams& params, TensorShape shape,
                                 SymbolAlphabet alphabet, uint64_t seed);

// Main and hyper latents for a model. The hyper grid is the main grid
// downsampled by four (rounded up), with the model's hyper channel count.
struct SyntheticLatents {
  LatentTensor latent;
  LatentTensor hyper;
};

SyntheticLatents synth_model_latents(const EntropyModel& model, TensorShape shape, uint64_t seed);

}  // namespace glc

#endif  // GLC_SYNTH_H_
