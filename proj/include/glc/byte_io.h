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

// Little-endian serialization helpers shared by the file formats.

#ifndef GLC_BYTE_IO_H_
#define GLC_BYTE_IO_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glc/error.h"

namespace glc {

class ByteWriter {
 public:
  void put_u8(uint8_t v) { bytes_.push_back(v); }
  void put_u16(uint16_t v) { put_le(v, 2); }
  void put_u32(uint32_t v) { put_le(v, 4); }
  void put_u64(uint64_t v) { put_le(v, 8); }
  void put_i16(int16_t v) { put_u16(static_cast<uint16_t>(v)); }
  void put_f32(float v) { put_u32(std::bit_cast<uint32_t>(v)); }
  void put_f64(double v) { put_u64(std::bit_cast<uint64_t>(v)); }
  void put_tag(std::string_view tag) {
    bytes_.insert(bytes_.end(), tag.begin(), tag.end());
  }
  void put_bytes(std::span<const uint8_t> data) {
    bytes_.insert(bytes_.end(), data.begin(), data.end());
  }

  size_t size() const { return bytes_.size(); }
  const std::vector<uint8_t>& bytes() const { return bytes_; }
  std::vector<uint8_t> take() { return std::move(bytes_); }

 private:
  void put_le(uint64_t v, int n) {
    for (int i = 0; i < n; ++i) bytes_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }

  std::vector<uint8_t> bytes_;
};

// Reads from a borrowed buffer. Running past the end raises `on_short`
// (corruption for containers, input errors for parameter files).
class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> data,
                      ErrorKind on_short = ErrorKind::kCorruption)
      : data_(data), on_short_(on_short) {}

  uint8_t get_u8() { return static_cast<uint8_t>(get_le(1)); }
  uint16_t get_u16() { return static_cast<uint16_t>(get_le(2)); }
  uint32_t get_u32() { return static_cast<uint32_t>(get_le(4)); }
  uint64_t get_u64() { return get_le(8); }
  int16_t get_i16() { return static_cast<int16_t>(get_u16()); }
  float get_f32() { return std::bit_cast<float>(get_u32()); }
  double get_f64() { return std::bit_cast<double>(get_u64()); }

  bool tag_matches(std::string_view tag) {
    require(tag.size());
    bool ok = std::memcmp(data_.data() + pos_, tag.data(), tag.size()) == 0;
    pos_ += tag.size();
    return ok;
  }

  std::span<const uint8_t> get_bytes(size_t n) {
    require(n);
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  size_t position() const { return pos_; }
  size_t remaining() const { return data_.size() - pos_; }

 private:
  void require(size_t n) {
    if (data_.size() - pos_ < n) {
      fail(on_short_, "unexpected end of data at offset " + std::to_string(pos_));
    }
  }

  uint64_t get_le(int n) {
    require(static_cast<size_t>(n));
    uint64_t v = 0;
    for (int i = 0; i < n; ++i) v |= uint64_t{data_[pos_ + i]} << (8 * i);
    pos_ += n;
    return v;
  }

  std::span<const uint8_t> data_;
  size_t pos_ = 0;
  ErrorKind on_short_;
};

std::vector<uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const uint8_t> data);

// 64-bit FNV-1a, used for model identifiers.
uint64_t fnv1a64(std::span<const uint8_t> data);

}  // namespace glc

#endif  // GLC_BYTE_IO_H_
