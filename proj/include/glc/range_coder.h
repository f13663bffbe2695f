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

// Byte-oriented range coder with 64-bit state and carry propagation.
//
// The range is kept in [2^56, 2^64) by shifting out the top byte of `low`.
// A carry out of `low` is added into the bytes already emitted, so the
// interval is never clipped and the per-symbol loss is only the truncation
// of range / 2^precision. Both sides perform identical integer arithmetic,
// which makes streams bit-exact.
//
// The final flush writes the fewest bytes that pin down a value inside the
// last interval; the decoder reads zeros past the end of its input.

#ifndef GLC_RANGE_CODER_H_
#define GLC_RANGE_CODER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "glc/cdf_table.h"

namespace glc {

class RangeEncoder {
 public:
  // Encodes the interval [cum, cum + freq) out of 2^precision_bits.
  void encode(uint32_t cum, uint32_t freq, int precision_bits);
  void encode(const CdfTable& table, size_t index) {
    encode(table.cum(index), table.freq(index), table.precision_bits());
  }

  // Flushes and returns the payload. The encoder is spent afterwards.
  std::vector<uint8_t> finish();

 private:
  void normalize();
  void propagate_carry();

  uint64_t low_ = 0;
  uint64_t range_ = ~uint64_t{0};
  std::vector<uint8_t> out_;
};

class RangeDecoder {
 public:
  explicit RangeDecoder(std::span<const uint8_t> payload);

  // Decodes one symbol index from `table`. Throws kCorruption when the code
  // value falls outside the table's total or the current interval.
  size_t decode(const CdfTable& table);

  // Payload bytes consumed by renormalization so far (the decoder primes
  // itself with 8 bytes beyond this count).
  size_t renormalized_bytes() const { return pos_ - 8; }

 private:
  uint8_t next_byte() { return pos_ < payload_.size() ? payload_[pos_++] : (++pos_, 0); }
  void normalize();

  std::span<const uint8_t> payload_;
  size_t pos_ = 0;
  uint64_t range_ = ~uint64_t{0};
  // Offset of the code value from the bottom of the current interval.
  uint64_t code_ = 0;
};

}  // namespace glc

#endif  // GLC_RANGE_CODER_H_
