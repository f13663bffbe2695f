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

#ifndef GLC_ALPHABET_H_
#define GLC_ALPHABET_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace glc {

// Inclusive integer support [min_symbol, max_symbol] of a quantized latent.
class SymbolAlphabet {
 public:
  static constexpr int64_t kMaxSpan = int64_t{1} << 16;

  // Throws kInput unless min < max and the symbol count fits in kMaxSpan and
  // both ends fit in int16 (the on-disk symbol type).
  SymbolAlphabet(int min_symbol, int max_symbol);

  int min_symbol() const { return min_; }
  int max_symbol() const { return max_; }
  // Number of symbols, max - min + 1.
  size_t span() const { return static_cast<size_t>(max_ - min_) + 1; }

  bool contains(int64_t k) const { return k >= min_ && k <= max_; }
  size_t index_of(int k) const { return static_cast<size_t>(k - min_); }
  int symbol_at(size_t index) const { return min_ + static_cast<int>(index); }

  friend bool operator==(const SymbolAlphabet&, const SymbolAlphabet&) = default;

 private:
  int min_;
  int max_;
};

// Per-symbol probabilities over an alphabet after flooring. Every bin holds
// at least kProbabilityFloor and the total is 1.
class DiscreteDistribution {
 public:
  static constexpr double kProbabilityFloor = 1.0 / 65536.0;

  // Floors `raw` (one entry per alphabet symbol, any non-negative masses) and
  // renormalizes so the result satisfies the class invariants.
  static DiscreteDistribution from_masses(SymbolAlphabet alphabet,
                                          std::vector<double> raw);

  static DiscreteDistribution uniform(SymbolAlphabet alphabet);

  const SymbolAlphabet& alphabet() const { return alphabet_; }
  const std::vector<double>& probabilities() const { return probs_; }
  // Throws kOutOfAlphabet for symbols outside the alphabet.
  double probability(int k) const;

 private:
  DiscreteDistribution(SymbolAlphabet alphabet, std::vector<double> probs)
      : alphabet_(alphabet), probs_(std::move(probs)) {}

  SymbolAlphabet alphabet_;
  std::vector<double> probs_;
};

}  // namespace glc

#endif  // GLC_ALPHABET_H_
