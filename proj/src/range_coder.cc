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

#include "glc/range_coder.h"

#include <string>

#include "glc/error.h"

namespace glc {
namespace {

constexpr uint64_t kBottom = uint64_t{1} << 56;

}  // namespace

void RangeEncoder::encode(uint32_t cum, uint32_t freq, int precision_bits) {
  const uint64_t r = range_ >> precision_bits;
  const uint64_t before = low_;
  low_ += r * cum;
  if (low_ < before) propagate_carry();
  range_ = r * freq;
  normalize();
}

void RangeEncoder::propagate_carry() {
  // The interval always lies below the first emitted byte's limit, so a
  // carry stops before running off the front.
  for (auto it = out_.rbegin(); it != out_.rend(); ++it) {
    if (++*it != 0) return;
  }
}

void RangeEncoder::normalize() {
  while (range_ < kBottom) {
    out_.push_back(static_cast<uint8_t>(low_ >> 56));
    low_ <<= 8;
    range_ <<= 8;
  }
}

std::vector<uint8_t> RangeEncoder::finish() {
  using u128 = unsigned __int128;
  const u128 high = u128{low_} + range_ - 1;
  for (int n = 0; n <= 8; ++n) {
    const int shift = 64 - 8 * n;
    const u128 mask = (u128{1} << shift) - 1;
    const u128 v = (u128{low_} + mask) & ~mask;
    if (v <= high) {
      if (v >> 64) propagate_carry();
      for (int i = 0; i < n; ++i) {
        out_.push_back(static_cast<uint8_t>(static_cast<uint64_t>(v) >> (56 - 8 * i)));
      }
      break;
    }
  }
  return std::move(out_);
}

RangeDecoder::RangeDecoder(std::span<const uint8_t> payload) : payload_(payload) {
  for (int i = 0; i < 8; ++i) code_ = (code_ << 8) | next_byte();
}

size_t RangeDecoder::decode(const CdfTable& table) {
  const uint64_t r = range_ >> table.precision_bits();
  const uint64_t target = code_ / r;
  if (target >= table.total()) {
    fail(ErrorKind::kCorruption, "range decoder state outside the frequency table");
  }
  const size_t index = table.find(static_cast<uint32_t>(target));
  code_ -= r * table.cum(index);
  range_ = r * table.freq(index);
  normalize();
  return index;
}

void RangeDecoder::normalize() {
  while (range_ < kBottom) {
    if (code_ >= range_) {
      fail(ErrorKind::kCorruption, "range decoder state outside the coding interval");
    }
    code_ = (code_ << 8) | next_byte();
    range_ <<= 8;
  }
}

}  // namespace glc
