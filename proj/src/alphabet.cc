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

#include "glc/alphabet.h"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "glc/error.h"

namespace glc {

SymbolAlphabet::SymbolAlphabet(int min_symbol, int max_symbol)
    : min_(min_symbol), max_(max_symbol) {
  if (min_symbol >= max_symbol) {
    fail(ErrorKind::kInput, "alphabet requires min < max, got [" +
                                std::to_string(min_symbol) + ", " +
                                std::to_string(max_symbol) + "]");
  }
  if (min_symbol < std::numeric_limits<int16_t>::min() ||
      max_symbol > std::numeric_limits<int16_t>::max()) {
    fail(ErrorKind::kInput, "alphabet bounds must fit in int16");
  }
  if (static_cast<int64_t>(max_symbol) - min_symbol + 1 > kMaxSpan) {
    fail(ErrorKind::kInput, "alphabet span exceeds 2^16 symbols");
  }
}

DiscreteDistribution DiscreteDistribution::from_masses(SymbolAlphabet alphabet,
                                                       std::vector<double> raw) {
  const size_t n = alphabet.span();
  if (raw.size() != n) {
    fail(ErrorKind::kInput, "mass vector length " + std::to_string(raw.size()) +
                                " does not match alphabet span " + std::to_string(n));
  }
  double total = 0.0;
  for (double& m : raw) {
    if (!std::isfinite(m)) fail(ErrorKind::kInput, "non-finite probability mass");
    // Cancellation in CDF differences can leave tiny negatives.
    if (m < 0.0) m = 0.0;
    total += m;
  }
  if (total <= 0.0) return uniform(alphabet);
  for (double& m : raw) m /= total;

  // Water-filling: pin every bin that would land below the floor, then scale
  // the rest into the remaining mass. Terminates because the largest bin
  // always stays above the floor (n * floor <= 1).
  std::vector<bool> pinned(n, false);
  size_t pinned_count = 0;
  for (;;) {
    const double free_mass = 1.0 - static_cast<double>(pinned_count) * kProbabilityFloor;
    double free_sum = 0.0;
    for (size_t i = 0; i < n; ++i) {
      if (!pinned[i]) free_sum += raw[i];
    }
    const double scale = free_mass / free_sum;
    bool changed = false;
    for (size_t i = 0; i < n; ++i) {
      if (!pinned[i] && raw[i] * scale < kProbabilityFloor) {
        pinned[i] = true;
        ++pinned_count;
        changed = true;
      }
    }
    if (!changed) {
      for (size_t i = 0; i < n; ++i) {
        raw[i] = pinned[i] ? kProbabilityFloor : raw[i] * scale;
      }
      break;
    }
  }
  return DiscreteDistribution(alphabet, std::move(raw));
}

DiscreteDistribution DiscreteDistribution::uniform(SymbolAlphabet alphabet) {
  const size_t n = alphabet.span();
  return DiscreteDistribution(alphabet,
                              std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double DiscreteDistribution::probability(int k) const {
  if (!alphabet_.contains(k)) {
    fail(ErrorKind::kOutOfAlphabet, "symbol " + std::to_string(k) + " outside alphabet");
  }
  return probs_[alphabet_.index_of(k)];
}

}  // namespace glc
