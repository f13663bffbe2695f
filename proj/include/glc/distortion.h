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

#ifndef GLC_DISTORTION_H_
#define GLC_DISTORTION_H_

namespace glc {

// MS-SSIM loss weight, 765 * 2^-5.
inline constexpr double kDefaultKms = 765.0 / 32.0;
inline constexpr double kDefaultKdi = 1.0;

// k_ms * msssim_loss + k_di * dists. Throws kInput for non-finite inputs or
// negative weights.
double combined_distortion(double msssim_loss, double dists, double k_ms = kDefaultKms,
                           double k_di = kDefaultKdi);

}  // namespace glc

#endif  // GLC_DISTORTION_H_
