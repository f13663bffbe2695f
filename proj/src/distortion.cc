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

#include "glc/distortion.h"

#include <cmath>

#include "glc/error.h"

namespace glc {

double combined_distortion(double msssim_loss, double dists, double k_ms, double k_di) {
  if (!std::isfinite(msssim_loss) || !std::isfinite(dists) || !std::isfinite(k_ms) ||
      !std::isfinite(k_di)) {
    fail(ErrorKind::kInput, "combined distortion: non-finite input");
  }
  if (k_ms < 0.0 || k_di < 0.0) fail(ErrorKind::kInput, "combined distortion: negative weight");
  return k_ms * msssim_loss + k_di * dists;
}

}  // namespace glc
