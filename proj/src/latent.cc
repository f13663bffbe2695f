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

#include "glc/latent.h"

#include <cmath>
#include <string>

#include "glc/byte_io.h"
#include "glc/error.h"

namespace glc {
namespace {

constexpr std::string_view kMagic = "GLTN";

}  // namespace

LatentTensor::LatentTensor(TensorShape shape, SymbolAlphabet alphabet,
                           std::vector<int32_t> values)
    : shape_(shape), alphabet_(alphabet), values_(std::move(values)) {
  if (values_.size() != shape_.count()) {
    fail(ErrorKind::kInput, "latent has " + std::to_string(values_.size()) +
                                " values but shape " + shape_.to_string() + " needs " +
                                std::to_string(shape_.count()));
  }
  for (int32_t v : values_) {
    if (!alphabet_.contains(v)) {
      fail(ErrorKind::kOutOfAlphabet, "latent value " + std::to_string(v) + " outside alphabet");
    }
  }
}

LatentTensor quantize(std::span<const double> values, TensorShape shape,
                      SymbolAlphabet alphabet) {
  if (values.size() != shape.count()) {
    fail(ErrorKind::kInput, "quantize: value count does not match shape " + shape.to_string());
  }
  std::vector<int32_t> out;
  out.reserve(values.size());
  for (double v : values) {
    if (!std::isfinite(v)) fail(ErrorKind::kInput, "quantize: non-finite value");
    // std::round rounds halfway cases away from zero.
    const double r = std::round(v);
    const double clamped = std::min<double>(std::max<double>(r, alphabet.min_symbol()),
                                            alphabet.max_symbol());
    out.push_back(static_cast<int32_t>(clamped));
  }
  return LatentTensor(shape, alphabet, std::move(out));
}

std::vector<uint8_t> serialize_latent(const LatentTensor& tensor) {
  const TensorShape& s = tensor.shape();
  if (s.channels > 0xFFFF || s.height > 0xFFFFFFFFu || s.width > 0xFFFFFFFFu) {
    fail(ErrorKind::kCapacity, "latent shape does not fit the file format");
  }
  ByteWriter w;
  w.put_tag(kMagic);
  w.put_u16(static_cast<uint16_t>(s.channels));
  w.put_u32(static_cast<uint32_t>(s.height));
  w.put_u32(static_cast<uint32_t>(s.width));
  w.put_i16(static_cast<int16_t>(tensor.alphabet().min_symbol()));
  w.put_i16(static_cast<int16_t>(tensor.alphabet().max_symbol()));
  for (int32_t v : tensor.values()) w.put_i16(static_cast<int16_t>(v));
  return w.take();
}

LatentTensor parse_latent(std::span<const uint8_t> data) {
  ByteReader r(data, ErrorKind::kInput);
  if (!r.tag_matches(kMagic)) fail(ErrorKind::kInput, "not a latent file (bad magic)");
  TensorShape shape;
  shape.channels = r.get_u16();
  shape.height = r.get_u32();
  shape.width = r.get_u32();
  const int lo = r.get_i16();
  const int hi = r.get_i16();
  SymbolAlphabet alphabet(lo, hi);
  if (r.remaining() != shape.count() * 2) {
    fail(ErrorKind::kInput, "latent file holds " + std::to_string(r.remaining()) +
                                " symbol bytes, shape " + shape.to_string() + " needs " +
                                std::to_string(shape.count() * 2));
  }
  std::vector<int32_t> values(shape.count());
  for (int32_t& v : values) v = r.get_i16();
  return LatentTensor(shape, alphabet, std::move(values));
}

LatentTensor load_latent(const std::filesystem::path& path) {
  return parse_latent(read_file(path));
}

void save_latent(const std::filesystem::path& path, const LatentTensor& tensor) {
  write_file(path, serialize_latent(tensor));
}

}  // namespace glc
