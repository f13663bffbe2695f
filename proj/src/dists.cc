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

#include "glc/dists.h"

#include <cmath>
#include <string>

#include "glc/byte_io.h"
#include "glc/error.h"

namespace glc {
namespace {

constexpr std::string_view kMagic = "DFTR";
constexpr uint16_t kVersion = 1;
constexpr uint16_t kWeightsFlag = 1;

void check_map(const FeatureMap& m, size_t stage) {
  if (m.values.size() != m.channels * m.height * m.width) {
    fail(ErrorKind::kInput, "feature stage " + std::to_string(stage) +
                                " value count does not match its shape");
  }
  if (m.height * m.width == 0) {
    fail(ErrorKind::kInput, "feature stage " + std::to_string(stage) + " has an empty grid");
  }
}

}  // namespace

DistsWeights DistsWeights::uniform(const FeatureStack& stack) {
  size_t total = 0;
  for (const FeatureMap& m : stack.stages) total += m.channels;
  DistsWeights w;
  const double each = total == 0 ? 0.0 : 1.0 / (2.0 * static_cast<double>(total));
  for (const FeatureMap& m : stack.stages) {
    w.alpha.emplace_back(m.channels, each);
    w.beta.emplace_back(m.channels, each);
  }
  return w;
}

void check_dists_weights(const FeatureStack& stack, const DistsWeights& w) {
  if (w.alpha.size() != stack.stages.size() || w.beta.size() != stack.stages.size()) {
    fail(ErrorKind::kInput, "DISTS weights do not match the stage count");
  }
  double sum = 0.0;
  for (size_t s = 0; s < stack.stages.size(); ++s) {
    const size_t c = stack.stages[s].channels;
    if (w.alpha[s].size() != c || w.beta[s].size() != c) {
      fail(ErrorKind::kInput, "DISTS weights do not match stage " + std::to_string(s) +
                                  " channel count");
    }
    for (size_t i = 0; i < c; ++i) {
      const double a = w.alpha[s][i];
      const double b = w.beta[s][i];
      if (!std::isfinite(a) || !std::isfinite(b) || a < 0.0 || b < 0.0) {
        fail(ErrorKind::kInput, "DISTS weights must be finite and >= 0");
      }
      sum += a + b;
    }
  }
  if (!(std::abs(sum - 1.0) <= kDistsWeightTolerance)) {
    fail(ErrorKind::kInput, "DISTS weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

double dists_score(const FeatureStack& fx, const FeatureStack& fy, const DistsWeights& w,
                   const DistsOptions& options) {
  if (fx.stages.size() != fy.stages.size()) {
    fail(ErrorKind::kInput, "feature stacks differ in stage count");
  }
  for (size_t s = 0; s < fx.stages.size(); ++s) {
    const FeatureMap& a = fx.stages[s];
    const FeatureMap& b = fy.stages[s];
    check_map(a, s);
    check_map(b, s);
    if (a.channels != b.channels || a.height != b.height || a.width != b.width) {
      fail(ErrorKind::kInput, "feature stacks differ in shape at stage " + std::to_string(s));
    }
  }
  check_dists_weights(fx, w);

  double similarity = 0.0;
  for (size_t s = 0; s < fx.stages.size(); ++s) {
    const FeatureMap& a = fx.stages[s];
    const FeatureMap& b = fy.stages[s];
    const size_t grid = a.height * a.width;
    const double n = static_cast<double>(grid);
    for (size_t c = 0; c < a.channels; ++c) {
      const float* xa = &a.values[c * grid];
      const float* xb = &b.values[c * grid];
      double mx = 0.0, my = 0.0;
      for (size_t i = 0; i < grid; ++i) {
        mx += xa[i];
        my += xb[i];
      }
      mx /= n;
      my /= n;
      double vx = 0.0, vy = 0.0, cov = 0.0;
      for (size_t i = 0; i < grid; ++i) {
        const double dx = xa[i] - mx;
        const double dy = xb[i] - my;
        vx += dx * dx;
        vy += dy * dy;
        cov += dx * dy;
      }
      vx /= n;
      vy /= n;
      cov /= n;
      const double texture = (2.0 * mx * my + options.c1) / (mx * mx + my * my + options.c1);
      const double structure = (2.0 * cov + options.c2) / (vx + vy + options.c2);
      similarity += w.alpha[s][c] * texture + w.beta[s][c] * structure;
    }
  }
  return 1.0 - similarity;
}

std::vector<uint8_t> serialize_features(const FeatureFile& file) {
  const auto& stages = file.stack.stages;
  if (stages.size() > 0xFFFF) fail(ErrorKind::kCapacity, "too many feature stages");
  if (file.weights) check_dists_weights(file.stack, *file.weights);
  ByteWriter w;
  w.put_tag(kMagic);
  w.put_u16(kVersion);
  w.put_u16(file.weights ? kWeightsFlag : 0);
  w.put_u16(static_cast<uint16_t>(stages.size()));
  for (size_t s = 0; s < stages.size(); ++s) {
    check_map(stages[s], s);
    w.put_u32(static_cast<uint32_t>(stages[s].channels));
    w.put_u32(static_cast<uint32_t>(stages[s].height));
    w.put_u32(static_cast<uint32_t>(stages[s].width));
  }
  for (const FeatureMap& m : stages) {
    for (float v : m.values) w.put_f32(v);
  }
  if (file.weights) {
    for (size_t s = 0; s < stages.size(); ++s) {
      for (double a : file.weights->alpha[s]) w.put_f64(a);
      for (double b : file.weights->beta[s]) w.put_f64(b);
    }
  }
  return w.take();
}

FeatureFile parse_features(std::span<const uint8_t> data) {
  ByteReader r(data, ErrorKind::kInput);
  if (!r.tag_matches(kMagic)) fail(ErrorKind::kInput, "not a feature file (bad magic)");
  if (r.get_u16() != kVersion) fail(ErrorKind::kInput, "unsupported feature file version");
  const uint16_t flags = r.get_u16();
  if ((flags & ~kWeightsFlag) != 0) fail(ErrorKind::kInput, "unknown feature file flags");
  FeatureFile file;
  auto& stages = file.stack.stages;
  stages.resize(r.get_u16());
  for (FeatureMap& m : stages) {
    m.channels = r.get_u32();
    m.height = r.get_u32();
    m.width = r.get_u32();
  }
  for (FeatureMap& m : stages) {
    const size_t count = m.channels * m.height * m.width;
    if (count > r.remaining() / 4) fail(ErrorKind::kInput, "feature data truncated");
    m.values.resize(count);
    for (float& v : m.values) v = r.get_f32();
  }
  if (flags & kWeightsFlag) {
    DistsWeights w;
    for (const FeatureMap& m : stages) {
      auto& alpha = w.alpha.emplace_back(m.channels);
      for (double& a : alpha) a = r.get_f64();
      auto& beta = w.beta.emplace_back(m.channels);
      for (double& b : beta) b = r.get_f64();
    }
    check_dists_weights(file.stack, w);
    file.weights = std::move(w);
  }
  if (r.remaining() != 0) fail(ErrorKind::kInput, "trailing bytes in feature file");
  return file;
}

FeatureFile load_features(const std::filesystem::path& path) {
  return parse_features(read_file(path));
}

void save_features(const std::filesystem::path& path, const FeatureFile& file) {
  write_file(path, serialize_features(file));
}

}  // namespace glc
