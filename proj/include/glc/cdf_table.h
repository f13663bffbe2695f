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

#ifndef GLC_CDF_TABLE_H_
#define GLC_CDF_TABLE_H_

#include <cstdint>
#include <vector>

#include "glc/alphabet.h"
#include "glc/entry_map.h"

namespace glc {

inline constexpr int kMinPrecisionBits = 8;
inline constexpr int kMaxPrecisionBits = 16;
inline constexpr int kDefaultPrecisionBits = 16;

// Fixed-point cumulative frequencies: cumulative[i] is the total frequency of
// the symbols below alphabet.symbol_at(i). Strictly increasing from 0 to
// 2^precision_bits, so every symbol has frequency >= 1.
class CdfTable {
 public:
  // Throws kInput if the invariants do not hold.
  CdfTable(SymbolAlphabet alphabet, std::vector<uint32_t> cumulative, int precision_bits);

  const SymbolAlphabet& alphabet() const { return alphabet_; }
  const std::vector<uint32_t>& cumulative() const { return cumulative_; }
  int precision_bits() const { return precision_bits_; }
  uint32_t total() const { return uint32_t{1} << precision_bits_; }

  uint32_t cum(size_t index) const { return cumulative_[index]; }
  uint32_t freq(size_t index) const { return cumulative_[index + 1] - cumulative_[index]; }
  // Index of the symbol whose interval [cum, cum + freq) holds `target`.
  size_t find(uint32_t target) const;

  friend bool operator==(const CdfTable&, const CdfTable&) = default;

 private:
  SymbolAlphabet alphabet_;
  std::vector<uint32_t> cumulative_;
  int precision_bits_;
};

using CdfTableMap = EntryMap<CdfTable>;

// Largest-remainder apportionment of 2^precision_bits with a minimum frequency
// of one; remainder ties go to the lower symbol index. Throws kInput for a
// precision outside [8, 16] and kCapacity when span >= 2^precision_bits.
CdfTable build_cdf_table(const DiscreteDistribution& dist,
                         int precision_bits = kDefaultPrecisionBits);

CdfTableMap build_cdf_tables(const DistributionMap& dists,
                             int precision_bits = kDefaultPrecisionBits);

}  // namespace glc

#endif  // GLC_CDF_TABLE_H_
