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

#include "glc/validation.h"

#include <cmath>
#include <sstream>

namespace glc {
namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

class Collector {
 public:
  explicit Collector(ValidationReport& report) : report_(report) {}

  void add(std::string location, const char* rule, std::string detail) {
    report_.violations.push_back({std::move(location), rule, std::move(detail)});
  }

  // Records at most one violation for a spread value.
  void check_spread(const std::string& location, double spread) {
    if (!std::isfinite(spread)) {
      add(location, rules::kFinite, "spread is not finite");
    } else if (spread <= 0.0) {
      add(location, rules::kPositivity, "spread must be > 0, got " + fmt(spread));
    } else if (spread < kMinSpread) {
      add(location, rules::kMinScale,
          "spread " + fmt(spread) + " below minimum " + fmt(kMinSpread));
    }
  }

  void check_weight(const std::string& location, double w) {
    if (!std::isfinite(w)) {
      add(location, rules::kFinite, "weight is not finite");
    } else if (w < 0.0) {
      add(location, rules::kNonNegative, "weight must be >= 0, got " + fmt(w));
    }
  }

 private:
  ValidationReport& report_;
};

}  // namespace

std::string Violation::to_string() const { return location + ": " + rule + ": " + detail; }

std::string ValidationReport::to_string() const {
  std::string out;
  for (const Violation& v : violations) {
    out += v.to_string();
    out += '\n';
  }
  return out;
}

ValidationReport validate_params(const GllmmParams& params, const std::string& location) {
  ValidationReport report;
  Collector c(report);

  double family_sum = 0.0;
  for (size_t f = 0; f < 3; ++f) {
    const double p = params.family_weights[f];
    c.check_weight(location + " p" + std::to_string(f), p);
    family_sum += p;
  }
  if (!(std::abs(family_sum - 1.0) <= kWeightSumTolerance)) {
    c.add(location + " family weights", rules::kFamilyWeightSum,
          "p0 + p1 + p2 = " + fmt(family_sum) + ", expected 1");
  }

  for (size_t f = 0; f < 3; ++f) {
    const auto family = static_cast<Family>(f);
    const std::string where = location + " " + family_name(family);
    const auto& comps = params.family(family);
    if (comps.empty()) {
      c.add(where, rules::kComponentCount, "family has no components");
      continue;
    }
    double weight_sum = 0.0;
    for (size_t i = 0; i < comps.size(); ++i) {
      const std::string at = where + "[" + std::to_string(i) + "]";
      c.check_weight(at + " weight", comps[i].weight);
      if (!std::isfinite(comps[i].mean)) c.add(at + " mean", rules::kFinite, "mean is not finite");
      c.check_spread(at + (f == 0 ? " variance" : " scale"), comps[i].spread);
      weight_sum += comps[i].weight;
    }
    if (!(std::abs(weight_sum - 1.0) <= kWeightSumTolerance)) {
      c.add(where + " weights", rules::kComponentWeightSum,
            "component weights sum to " + fmt(weight_sum) + ", expected 1");
    }
  }
  return report;
}

ValidationReport validate_params(const FactorizedDensityParams& params,
                                 const std::string& location) {
  ValidationReport report;
  Collector c(report);

  for (size_t ch = 0; ch < params.channels.size(); ++ch) {
    const std::string where = location + " channel " + std::to_string(ch);
    const auto& layers = params.channels[ch].layers;
    if (layers.empty()) {
      c.add(where, rules::kLayerShape, "channel has no layers");
      continue;
    }
    const size_t width = layers.front().weight.size();
    bool shape_ok = width > 0;
    if (!shape_ok) c.add(where, rules::kLayerShape, "layer width is zero");
    bool finite = true;
    for (size_t l = 0; l < layers.size(); ++l) {
      const FactorizedLayer& layer = layers[l];
      const std::string at = where + " layer " + std::to_string(l);
      if (layer.weight.size() != width || layer.bias.size() != width ||
          layer.gate.size() != width) {
        c.add(at, rules::kLayerShape, "weight/bias/gate widths must all equal " +
                                          std::to_string(width));
        shape_ok = false;
        continue;
      }
      for (size_t j = 0; j < width; ++j) {
        if (!std::isfinite(layer.weight[j]) || !std::isfinite(layer.bias[j]) ||
            !std::isfinite(layer.gate[j])) {
          c.add(at + " lane " + std::to_string(j), rules::kFinite, "parameter is not finite");
          finite = false;
        }
      }
    }
    if (!shape_ok || !finite) continue;

    // Sampled property checks on the evaluated cumulative.
    double prev = factorized_cdf(params, ch, -64.0);
    for (double x = -63.875; x <= 64.0; x += 0.125) {
      const double v = factorized_cdf(params, ch, x);
      if (v < prev) {
        c.add(where, rules::kMonotone, "cumulative decreases near x = " + fmt(x));
        break;
      }
      prev = v;
    }
    const double lo = factorized_cdf(params, ch, -1e4);
    const double hi = factorized_cdf(params, ch, 1e4);
    if (!(lo < 1e-9) || !(hi > 1.0 - 1e-9)) {
      c.add(where, rules::kTails,
            "cumulative at -1e4/+1e4 is " + fmt(lo) + "/" + fmt(hi) + ", expected 0/1");
    }
  }
  return report;
}

}  // namespace glc
