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

#include "glc/cdf_table.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "glc/error.h"

namespace glc {

CdfTable::CdfTable(SymbolAlphabet alphabet, std::vector<uint32_t> cumulative,
                   int precision_bits)
    : alphabet_(alphabet), cumulative_(std::move(cumulative)), precision_bits_(precision_bits) {
  if (precision_bits < kMinPrecisionBits || precision_bits > kMaxPrecisionBits) {
    fail(ErrorKind::kInput, "precision bits must be in [8, 16], got " +
                                std::to_string(precision_bits));
  }
  if (cumulative_.size() != alphabet_.span() + 1) {
    fail(ErrorKind::kInput, "cdf table length must be span + 1");
  }
  if (cumulative_.front() != 0 || cumulative_.back() != total()) {
    fail(ErrorKind::kInput, "cdf table must run from 0 to 2^precision");
  }
  for (size_t i = 0; i + 1 < cumulative_.size(); ++i) {
    if (cumulative_[i + 1] <= cumulative_[i]) {
      fail(ErrorKind::kInput, "cdf table is not strictly increasing at " + std::to_string(i));
    }
  }
}

size_t CdfTable::find(uint32_t target) const {
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  return static_cast<size_t>(it - cumulative_.begin()) - 1;
}

CdfTable build_cdf_table(const DiscreteDistribution& dist, int precision_bits) {
  if (precision_bits < kMinPrecisionBits || precision_bits > kMaxPrecisionBits) {
    fail(ErrorKind::kInput, "precision bits must be in [8, 16], got " +
                                std::to_string(precision_bits));
  }
  const auto& probs = dist.probabilities();
  const size_t n = probs.size();
  const uint64_t total = uint64_t{1} << precision_bits;
  if (n >= total) {
    fail(ErrorKind::kCapacity, "alphabet of " + std::to_string(n) +
                                   " symbols does not fit " + std::to_string(precision_bits) +
                                   "-bit frequencies");
  }

  // Every symbol starts at frequency 1; the remaining budget is apportioned
  // by largest remainder.
  const uint64_t budget = total - n;
  const double mass = std::accumulate(probs.begin(), probs.end(), 0.0);
  std::vector<uint64_t> freq(n, 1);
  std::vector<double> remainder(n);
  uint64_t assigned = 0;
  for (size_t i = 0; i < n; ++i) {
    const double quota = probs[i] / mass * static_cast<double>(budget);
    const double whole = std::floor(quota);
    freq[i] += static_cast<uint64_t>(whole);
    remainder[i] = quota - whole;
    assigned += static_cast<uint64_t>(whole);
  }
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return remainder[a] > remainder[b]; });
  // Rounding in the quotas can overshoot by a unit; take it back from the
  // smallest remainders among symbols that can spare it.
  for (auto it = order.rbegin(); assigned > budget && it != order.rend(); ++it) {
    if (freq[*it] > 1) {
      --freq[*it];
      --assigned;
    }
  }
  for (size_t k = 0; assigned < budget; k = (k + 1) % n) {
    ++freq[order[k]];
    ++assigned;
  }

  std::vector<uint32_t> cumulative(n + 1, 0);
  for (size_t i = 0; i < n; ++i) {
    cumulative[i + 1] = cumulative[i] + static_cast<uint32_t>(freq[i]);
  }
  return CdfTable(dist.alphabet(), std::move(cumulative), precision_bits);
}

CdfTableMap build_cdf_tables(const DistributionMap& dists, int precision_bits) {
  return dists.transform(
      [precision_bits](const DiscreteDistribution& d) { return build_cdf_table(d, precision_bits); });
}

}  // namespace glc
