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

// Rate-distortion objective: distortion + lambda * (R(y) + R(z)), with rate
// measured in bits under the real-valued model probabilities.

#ifndef GLC_RDO_H_
#define GLC_RDO_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "glc/cdf_table.h"
#include "glc/dists.h"
#include "glc/distortion.h"
#include "glc/image.h"
#include "glc/latent.h"
#include "glc/model.h"
#include "glc/ms_ssim.h"

namespace glc {

inline const std::vector<double> kDefaultLambdas = {2.0, 1.0, 0.5};

struct RdoConfig {
  std::vector<double> lambdas = kDefaultLambdas;
  double k_ms = kDefaultKms;
  double k_di = kDefaultKdi;
  int precision_bits = kDefaultPrecisionBits;
  MsSsimOptions ms_ssim;

  // Throws kInput when a field is outside its domain.
  void check() const;
};

// Sum of -log2 P(symbol). Throws kOutOfAlphabet for symbols the
// distributions cannot represent.
double rate_bits(const LatentTensor& tensor, const DistributionMap& dists);

// Throws kInput for zero dimensions.
double bpp(double total_bits, size_t width, size_t height);

// Throws kInput for non-finite inputs or lambda <= 0.
double rd_cost(double distortion, double rate_bits_total, double lambda);

struct RdInput {
  ImageRaster reference;
  ImageRaster distorted;
  LatentTensor latent;
  std::optional<LatentTensor> hyper;
  std::optional<FeatureStack> reference_features;
  std::optional<FeatureStack> distorted_features;
  std::optional<DistsWeights> dists_weights;
};

// Inputs are loaded lazily so that load failures become failed rows.
struct RdCase {
  std::string id;
  std::function<RdInput()> load;
};

inline constexpr const char* kStatusOk = "ok";
inline constexpr const char* kStatusNoDists = "ok-no-dists";

struct RdRow {
  std::string input_id;
  double lambda = 0.0;
  double bits = 0.0;
  double bpp = 0.0;
  double ms_ssim = 0.0;
  std::optional<double> dists;
  double combined = 0.0;
  double rd_cost = 0.0;
  // kStatusOk, kStatusNoDists, or "error:<kind>".
  std::string status;
  std::string error_detail;

  bool failed() const { return status.starts_with("error"); }
};

struct RdReport {
  uint64_t model_id = 0;
  std::vector<RdRow> rows;

  // Header: input,model_id,lambda,bits,bpp,ms_ssim,dists,combined,rd_cost,status
  // Numbers use 9 significant digits; absent values are written as "NA".
  std::string to_csv() const;
};

inline constexpr const char* kRdCsvHeader =
    "input,model_id,lambda,bits,bpp,ms_ssim,dists,combined,rd_cost,status";

// One row per (case, lambda), sorted by case id with lambdas in the given
// order. A failing case yields error rows instead of aborting the sweep.
RdReport rd_sweep(const std::vector<RdCase>& cases, const EntropyModel& model,
                  const RdoConfig& config);

}  // namespace glc

#endif  // GLC_RDO_H_
