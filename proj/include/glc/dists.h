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

// Texture/structure similarity aggregated over externally supplied deep
// feature maps:
//
//   score = 1 - sum_{stage, channel} (alpha * l + beta * s)
//   l = (2 mu_x mu_y + c1) / (mu_x^2 + mu_y^2 + c1)
//   s = (2 cov_xy + c2) / (var_x + var_y + c2)
//
// with statistics taken over each channel's spatial grid (population
// moments). Scores lie in [0, 2]; ReLU-style non-negative features keep them
// in [0, 1].

#ifndef GLC_DISTS_H_
#define GLC_DISTS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

namespace glc {

struct FeatureMap {
  size_t channels = 0;
  size_t height = 0;
  size_t width = 0;
  // Channel-major, row-major within a channel.
  std::vector<float> values;

  friend bool operator==(const FeatureMap&, const FeatureMap&) = default;
};

struct FeatureStack {
  std::vector<FeatureMap> stages;

  friend bool operator==(const FeatureStack&, const FeatureStack&) = default;
};

struct DistsWeights {
  // Per stage, one weight per channel.
  std::vector<std::vector<double>> alpha;
  std::vector<std::vector<double>> beta;

  // alpha = beta = 1 / (2 * total channels).
  static DistsWeights uniform(const FeatureStack& stack);

  friend bool operator==(const DistsWeights&, const DistsWeights&) = default;
};

struct DistsOptions {
  double c1 = 1e-6;
  double c2 = 1e-6;
};

inline constexpr double kDistsWeightTolerance = 1e-9;

// Throws kInput on shape disagreement or invalid weights.
double dists_score(const FeatureStack& fx, const FeatureStack& fy, const DistsWeights& w,
                   const DistsOptions& options = {});

// Throws kInput unless the weights match `stack` and are valid.
void check_dists_weights(const FeatureStack& stack, const DistsWeights& w);

// "DFTR" file: magic | version u16 | flags u16 (bit 0: weights present) |
// stages u16 | per stage channels u32, height u32, width u32 |
// per stage f32 values | if weights: per stage f64 alpha[c], f64 beta[c].
struct FeatureFile {
  FeatureStack stack;
  std::optional<DistsWeights> weights;
};

std::vector<uint8_t> serialize_features(const FeatureFile& file);
FeatureFile parse_features(std::span<const uint8_t> data);
FeatureFile load_features(const std::filesystem::path& path);
void save_features(const std::filesystem::path& path, const FeatureFile& file);

}  // namespace glc

#endif  // GLC_DISTS_H_
