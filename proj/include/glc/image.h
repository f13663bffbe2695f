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

#ifndef GLC_IMAGE_H_
#define GLC_IMAGE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace glc {

// Interleaved 8-bit RGB image.
class ImageRaster {
 public:
  static constexpr size_t kChannels = 3;

  // Throws kInput for empty dimensions or a sample count mismatch.
  ImageRaster(size_t width, size_t height, std::vector<uint8_t> samples);

  size_t width() const { return width_; }
  size_t height() const { return height_; }
  const std::vector<uint8_t>& samples() const { return samples_; }
  uint8_t at(size_t x, size_t y, size_t c) const {
    return samples_[(y * width_ + x) * kChannels + c];
  }

  friend bool operator==(const ImageRaster&, const ImageRaster&) = default;

 private:
  size_t width_;
  size_t height_;
  std::vector<uint8_t> samples_;
};

// Binary PPM (P6) with maxval 255.
ImageRaster parse_ppm(std::span<const uint8_t> data);
std::vector<uint8_t> serialize_ppm(const ImageRaster& image);
ImageRaster load_ppm(const std::filesystem::path& path);
void save_ppm(const std::filesystem::path& path, const ImageRaster& image);

}  // namespace glc

#endif  // GLC_IMAGE_H_
