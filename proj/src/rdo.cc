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

#include "glc/rdo.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "glc/error.h"

namespace glc {
namespace {

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string hex_id(uint64_t id) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(id));
  return buf;
}

}  // namespace

void RdoConfig::check() const {
  if (lambdas.empty()) fail(ErrorKind::kInput, "lambda list is empty");
  for (double l : lambdas) {
    if (!std::isfinite(l) || l <= 0.0) fail(ErrorKind::kInput, "lambda must be > 0");
  }
  if (!std::isfinite(k_ms) || k_ms < 0.0) fail(ErrorKind::kInput, "k_ms must be >= 0");
  if (!std::isfinite(k_di) || k_di < 0.0) fail(ErrorKind::kInput, "k_di must be >= 0");
  if (precision_bits < kMinPrecisionBits || precision_bits > kMaxPrecisionBits) {
    fail(ErrorKind::kInput, "precision bits must be in [8, 16]");
  }
}

double rate_bits(const LatentTensor& tensor, const DistributionMap& dists) {
  const TensorShape& s = tensor.shape();
  double bits = 0.0;
  for (size_t c = 0; c < s.channels; ++c) {
    for (size_t h = 0; h < s.height; ++h) {
      for (size_t w = 0; w < s.width; ++w) {
        bits -= std::log2(dists.at(c, h, w).probability(tensor.at(c, h, w)));
      }
    }
  }
  return bits;
}

double bpp(double total_bits, size_t width, size_t height) {
  if (width == 0 || height == 0) fail(ErrorKind::kInput, "bpp needs width, height >= 1");
  return total_bits / (static_cast<double>(width) * static_cast<double>(height));
}

double rd_cost(double distortion, double rate_bits_total, double lambda) {
  if (!std::isfinite(distortion) || !std::isfinite(rate_bits_total) || !std::isfinite(lambda)) {
    fail(ErrorKind::kInput, "rd cost: non-finite input");
  }
  if (lambda <= 0.0) fail(ErrorKind::kInput, "rd cost: lambda must be > 0");
  return distortion + lambda * rate_bits_total;
}

std::string RdReport::to_csv() const {
  std::string out = kRdCsvHeader;
  out += '\n';
  const std::string id = hex_id(model_id);
  for (const RdRow& r : rows) {
    const bool failed = r.failed();
    auto num = [failed](double v) { return failed ? std::string("NA") : fmt9(v); };
    out += r.input_id + ',' + id + ',' + fmt9(r.lambda) + ',' + num(r.bits) + ',' + num(r.bpp) +
           ',' + num(r.ms_ssim) + ',' + (r.dists && !failed ? fmt9(*r.dists) : "NA") + ',' +
           num(r.combined) + ',' + num(r.rd_cost) + ',' + r.status + '\n';
  }
  return out;
}

RdReport rd_sweep(const std::vector<RdCase>& cases, const EntropyModel& model,
                  const RdoConfig& config) {
  config.check();
  RdReport report;
  report.model_id = model_id(model);
  const DistributionMap latent_dists = latent_distributions(model);
  const DistributionMap hyper_dists = hyper_distributions(model);

  std::vector<const RdCase*> order;
  for (const RdCase& c : cases) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(),
                   [](const RdCase* a, const RdCase* b) { return a->id < b->id; });

  for (const RdCase* rc : order) {
    std::vector<RdRow> rows;
    try {
      const RdInput in = rc->load();
      double bits = rate_bits(in.latent, latent_dists);
      if (in.hyper) bits += rate_bits(*in.hyper, hyper_dists);
      const double score = ms_ssim(in.reference, in.distorted, config.ms_ssim);
      std::optional<double> dists;
      if (in.reference_features && in.distorted_features) {
        const DistsWeights weights = in.dists_weights
                                         ? *in.dists_weights
                                         : DistsWeights::uniform(*in.reference_features);
        dists = dists_score(*in.reference_features, *in.distorted_features, weights);
      }
      // Without DISTS the k_di term is omitted and the row is flagged.
      const double combined =
          combined_distortion(1.0 - score, dists.value_or(0.0), config.k_ms,
                              dists ? config.k_di : 0.0);
      const double rate_bpp = bpp(bits, in.reference.width(), in.reference.height());
      for (double lambda : config.lambdas) {
        RdRow row;
        row.input_id = rc->id;
        row.lambda = lambda;
        row.bits = bits;
        row.bpp = rate_bpp;
        row.ms_ssim = score;
        row.dists = dists;
        row.combined = combined;
        row.rd_cost = rd_cost(combined, bits, lambda);
        row.status = dists ? kStatusOk : kStatusNoDists;
        rows.push_back(std::move(row));
      }
    } catch (const Error& e) {
      rows.clear();
      for (double lambda : config.lambdas) {
        RdRow row;
        row.input_id = rc->id;
        row.lambda = lambda;
        row.status = std::string("error:") + error_kind_name(e.kind());
        row.error_detail = e.what();
        rows.push_back(std::move(row));
      }
    } catch (const std::exception& e) {
      rows.clear();
      for (double lambda : config.lambdas) {
        RdRow row;
        row.input_id = rc->id;
        row.lambda = lambda;
        row.status = "error:internal";
        row.error_detail = e.what();
        rows.push_back(std::move(row));
      }
    }
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

}  // namespace glc
