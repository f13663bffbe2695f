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

// Complete entropy model: per-channel GLLMM parameters for the main latent
// plus the factorized hyper-latent density, each with its own alphabet.
//
// Binary layout ("GLMP", little-endian):
//
//   magic "GLMP" | version u16 | channels u16
//   per channel: K u16 | M u16 | N u16
//   latent alphabet min i16 | max i16
//   per channel, f64: p0 p1 p2, K x (w, mean, variance),
//                     M x (w, mean, scale), N x (w, mean, scale)
//   hyper alphabet min i16 | max i16
//   hyper channels u16 | layers u16 | width u16
//   per hyper channel, per layer, f64: H[width] b[width] a[width]

#ifndef GLC_MODEL_H_
#define GLC_MODEL_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "glc/entry_map.h"
#include "glc/factorized.h"
#include "glc/gllmm.h"
#include "glc/validation.h"

namespace glc {

inline constexpr uint16_t kModelFormatVersion = 1;

struct EntropyModel {
  SymbolAlphabet latent_alphabet{-128, 127};
  std::vector<GllmmParams> latent_channels;
  SymbolAlphabet hyper_alphabet{-64, 63};
  FactorizedDensityParams hyper;

  friend bool operator==(const EntropyModel&, const EntropyModel&) = default;
};

std::vector<uint8_t> serialize_model(const EntropyModel& model);
// Throws kInput on malformed data.
EntropyModel parse_model(std::span<const uint8_t> data);

EntropyModel load_model(const std::filesystem::path& path);
void save_model(const std::filesystem::path& path, const EntropyModel& model);

// JSON rendering of the same content, for debugging.
std::string model_to_text(const EntropyModel& model);
EntropyModel model_from_text(const std::string& text);

// FNV-1a of the binary serialization.
uint64_t model_id(const EntropyModel& model);

// Validates every channel of both densities.
ValidationReport validate_model(const EntropyModel& model);

// Per-channel discretized distributions (channel-shared mode).
DistributionMap latent_distributions(const EntropyModel& model);
DistributionMap hyper_distributions(const EntropyModel& model);

struct ModelGenOptions {
  size_t channels = 8;
  size_t gaussian_components = GllmmParams::kDefaultComponents;
  size_t laplace_components = GllmmParams::kDefaultComponents;
  size_t logistic_components = GllmmParams::kDefaultComponents;
  size_t hyper_channels = 4;
  uint64_t seed = 0;
};

// Random valid model; identical options give an identical model.
EntropyModel generate_model(const ModelGenOptions& options);

}  // namespace glc

#endif  // GLC_MODEL_H_
