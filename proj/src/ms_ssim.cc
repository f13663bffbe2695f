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

#include "glc/ms_ssim.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "glc/error.h"

namespace glc {
namespace {

constexpr double kC1 = (0.01 * kSsimDynamicRange) * (0.01 * kSsimDynamicRange);
constexpr double kC2 = (0.03 * kSsimDynamicRange) * (0.03 * kSsimDynamicRange);

std::array<double, kSsimWindow> gaussian_taps() {
  std::array<double, kSsimWindow> taps{};
  double sum = 0.0;
  const int half = kSsimWindow / 2;
  for (int i = 0; i < kSsimWindow; ++i) {
    const double d = i - half;
    taps[i] = std::exp(-d * d / (2.0 * kSsimWindowSigma * kSsimWindowSigma));
    sum += taps[i];
  }
  for (double& t : taps) t /= sum;
  return taps;
}

struct Plane {
  size_t width;
  size_t height;
  std::vector<double> v;
};

// Separable 'valid' filtering: output is (h - 10) x (w - 10).
Plane filter_valid(const Plane& in) {
  static const auto taps = gaussian_taps();
  const size_t ow = in.width - kSsimWindow + 1;
  const size_t oh = in.height - kSsimWindow + 1;
  std::vector<double> tmp(in.height * ow);
  for (size_t y = 0; y < in.height; ++y) {
    const double* row = &in.v[y * in.width];
    for (size_t x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int k = 0; k < kSsimWindow; ++k) acc += taps[k] * row[x + k];
      tmp[y * ow + x] = acc;
    }
  }
  Plane out{ow, oh, std::vector<double>(oh * ow)};
  for (size_t y = 0; y < oh; ++y) {
    for (size_t x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int k = 0; k < kSsimWindow; ++k) acc += taps[k] * tmp[(y + k) * ow + x];
      out.v[y * ow + x] = acc;
    }
  }
  return out;
}

Plane product(const Plane& a, const Plane& b) {
  Plane out{a.width, a.height, std::vector<double>(a.v.size())};
  for (size_t i = 0; i < a.v.size(); ++i) out.v[i] = a.v[i] * b.v[i];
  return out;
}

Plane downsample(const Plane& in) {
  Plane out{in.width / 2, in.height / 2, {}};
  out.v.resize(out.width * out.height);
  for (size_t y = 0; y < out.height; ++y) {
    for (size_t x = 0; x < out.width; ++x) {
      const size_t i = 2 * y * in.width + 2 * x;
      out.v[y * out.width + x] =
          0.25 * (in.v[i] + in.v[i + 1] + in.v[i + in.width] + in.v[i + in.width + 1]);
    }
  }
  return out;
}

// Mean contrast-structure and mean full SSIM at one scale.
std::pair<double, double> scale_terms(const Plane& x, const Plane& y) {
  const Plane mu_x = filter_valid(x);
  const Plane mu_y = filter_valid(y);
  const Plane xx = filter_valid(product(x, x));
  const Plane yy = filter_valid(product(y, y));
  const Plane xy = filter_valid(product(x, y));
  double cs_sum = 0.0;
  double ssim_sum = 0.0;
  for (size_t i = 0; i < mu_x.v.size(); ++i) {
    const double mx = mu_x.v[i];
    const double my = mu_y.v[i];
    const double vx = xx.v[i] - mx * mx;
    const double vy = yy.v[i] - my * my;
    const double cov = xy.v[i] - mx * my;
    const double cs = (2.0 * cov + kC2) / (vx + vy + kC2);
    const double l = (2.0 * mx * my + kC1) / (mx * mx + my * my + kC1);
    cs_sum += cs;
    ssim_sum += l * cs;
  }
  const double n = static_cast<double>(mu_x.v.size());
  return {cs_sum / n, ssim_sum / n};
}

}  // namespace

int effective_scales(size_t width, size_t height, const MsSsimOptions& options) {
  if (options.scales < 1 || options.scales > static_cast<int>(kMsSsimWeights.size())) {
    fail(ErrorKind::kInput, "MS-SSIM scale count must be in [1, 5]");
  }
  const size_t side = std::min(width, height);
  auto fits = [side](int s) { return side >= static_cast<size_t>(kSsimWindow) << (s - 1); };
  if (fits(options.scales)) return options.scales;
  if (options.allow_scale_reduction) {
    for (int s = options.scales - 1; s >= 1; --s) {
      if (fits(s)) return s;
    }
  }
  fail(ErrorKind::kInput, "image " + std::to_string(width) + "x" + std::to_string(height) +
                              " is too small for " + std::to_string(options.scales) +
                              "-scale MS-SSIM (needs min side >= " +
                              std::to_string(static_cast<size_t>(kSsimWindow)
                                             << (options.scales - 1)) +
                              ")");
}

MsSsimChannelTerms ms_ssim_plane(const std::vector<double>& x, const std::vector<double>& y,
                                 size_t width, size_t height, int scales) {
  double weight_sum = 0.0;
  for (int s = 0; s < scales; ++s) weight_sum += kMsSsimWeights[s];

  MsSsimChannelTerms terms;
  Plane px{width, height, x};
  Plane py{width, height, y};
  double score = 1.0;
  for (int s = 0; s < scales; ++s) {
    const auto [cs, ssim] = scale_terms(px, py);
    terms.contrast_structure.push_back(cs);
    const double weight = kMsSsimWeights[s] / weight_sum;
    if (s + 1 < scales) {
      score *= std::pow(std::max(cs, 0.0), weight);
      px = downsample(px);
      py = downsample(py);
    } else {
      terms.luminance_ssim = ssim;
      score *= std::pow(std::max(ssim, 0.0), weight);
    }
  }
  terms.score = score;
  return terms;
}

double ms_ssim(const ImageRaster& x, const ImageRaster& y, const MsSsimOptions& options) {
  if (x.width() != y.width() || x.height() != y.height()) {
    fail(ErrorKind::kInput, "MS-SSIM inputs differ in size");
  }
  const int scales = effective_scales(x.width(), x.height(), options);
  const size_t n = x.width() * x.height();
  double total = 0.0;
  for (size_t c = 0; c < ImageRaster::kChannels; ++c) {
    std::vector<double> px(n), py(n);
    for (size_t i = 0; i < n; ++i) {
      px[i] = x.samples()[i * ImageRaster::kChannels + c];
      py[i] = y.samples()[i * ImageRaster::kChannels + c];
    }
    total += ms_ssim_plane(px, py, x.width(), x.height(), scales).score;
  }
  return total / static_cast<double>(ImageRaster::kChannels);
}

double ms_ssim_loss(const ImageRaster& x, const ImageRaster& y, const MsSsimOptions& options) {
  return 1.0 - ms_ssim(x, y, options);
}

}  // namespace glc
