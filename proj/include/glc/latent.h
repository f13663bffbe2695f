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

#ifndef GLC_LATENT_H_
#define GLC_LATENT_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "glc/alphabet.h"
#include "glc/entry_map.h"

namespace glc {

// Integer-quantized latent grid in channel-major raster order.
class LatentTensor {
 public:
  // Throws kInput when the value count does not match the shape, and
  // kOutOfAlphabet when a value lies outside the alphabet.
  LatentTensor(TensorShape shape, SymbolAlphabet alphabet, std::vector<int32_t> values);

  const TensorShape& shape() const { return shape_; }
  const SymbolAlphabet& alphabet() const { return alphabet_; }
  const std::vector<int32_t>& values() const { return values_; }
  size_t size() const { return values_.size(); }
  int32_t at(size_t c, size_t h, size_t w) const { return values_[shape_.index(c, h, w)]; }

  friend bool operator==(const LatentTensor&, const LatentTensor&) = default;

 private:
  TensorShape shape_;
  SymbolAlphabet alphabet_;
  std::vector<int32_t> values_;
};

// Rounds half away from zero, then clamps into the alphabet. Throws kInput for
// non-finite values or a count that does not match the shape.
LatentTensor quantize(std::span<const double> values, TensorShape shape,
                      SymbolAlphabet alphabet);

// "GLTN" file: magic | channels u16 | height u32 | width u32 |
// alphabet min i16 | max i16 | symbols i16[count], little-endian.
std::vector<uint8_t> serialize_latent(const LatentTensor& tensor);
LatentTensor parse_latent(std::span<const uint8_t> data);
LatentTensor load_latent(const std::filesystem::path& path);
void save_latent(const std::filesystem::path& path, const LatentTensor& tensor);

}  // namespace glc

#endif  // GLC_LATENT_H_
