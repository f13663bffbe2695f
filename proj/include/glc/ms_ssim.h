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

// Multi-scale structural similarity on 8-bit RGB images.
//
// Five dyadic scales with exponents (0.0448, 0.2856, 0.3001, 0.2363, 0.1333),
// an 11x11 Gaussian window of spread 1.5 applied without padding,
// C1 = (0.01 * 255)^2 and C2 = (0.03 * 255)^2. Scales are linked by 2x2 mean
// pooling (odd trailing rows/columns dropped). Contrast-structure means enter
// at every scale, luminance only at the coarsest. Negative per-scale terms
// are clamped to zero before exponentiation. Channels are scored separately
// and averaged.

#ifndef GLC_MS_SSIM_H_
#define GLC_MS_SSIM_H_

#include <array>
#include <vector>

#include "glc/image.h"

namespace glc {

inline constexpr std::array<double, 5> kMsSsimWeights = {0.0448, 0.2856, 0.3001, 0.2363,
                                                         0.1333};
inline constexpr int kSsimWindow = 11;
inline constexpr double kSsimWindowSigma = 1.5;
inline constexpr double kSsimDynamicRange = 255.0;

struct MsSsimOptions {
  int scales = 5;
  // Lets undersized images run with fewer scales (weights renormalized)
  // instead of failing.
  bool allow_scale_reduction = false;
};

// Per-scale intermediate values for one channel.
struct MsSsimChannelTerms {
  std::vector<double> contrast_structure;  // one per scale
  double luminance_ssim = 0.0;             // mean SSIM at the coarsest scale
  double score = 0.0;
};

// Throws kInput on shape mismatch or when min(width, height) < 11 * 2^(S-1)
// and scale reduction is not allowed.
double ms_ssim(const ImageRaster& x, const ImageRaster& y, const MsSsimOptions& options = {});

// 1 - ms_ssim(x, y).
double ms_ssim_loss(const ImageRaster& x, const ImageRaster& y,
                    const MsSsimOptions& options = {});

// Scale count actually used for an image of the given size.
int effective_scales(size_t width, size_t height, const MsSsimOptions& options);

// Single-channel MS-SSIM over row-major planes of equal size, with the first
// `scales` weights renormalized to sum to one.
MsSsimChannelTerms ms_ssim_plane(const std::vector<double>& x, const std::vector<double>& y,
                                 size_t width, size_t height, int scales);

}  // namespace glc

#endif  // GLC_MS_SSIM_H_
