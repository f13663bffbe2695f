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

#include "glc/image.h"

#include <cctype>
#include <string>

#include "glc/byte_io.h"
#include "glc/error.h"

namespace glc {

ImageRaster::ImageRaster(size_t width, size_t height, std::vector<uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (width == 0 || height == 0) fail(ErrorKind::kInput, "image dimensions must be >= 1");
  if (samples_.size() != width * height * kChannels) {
    fail(ErrorKind::kInput, "image sample count does not match " + std::to_string(width) + "x" +
                                std::to_string(height) + "x3");
  }
}

namespace {

// Reads one whitespace-delimited header token, skipping '#' comments.
size_t next_header_int(std::span<const uint8_t> data, size_t& pos) {
  for (;;) {
    while (pos < data.size() && std::isspace(data[pos])) ++pos;
    if (pos < data.size() && data[pos] == '#') {
      while (pos < data.size() && data[pos] != '\n') ++pos;
      continue;
    }
    break;
  }
  if (pos >= data.size() || !std::isdigit(data[pos])) {
    fail(ErrorKind::kInput, "malformed PPM header");
  }
  size_t value = 0;
  while (pos < data.size() && std::isdigit(data[pos])) {
    value = value * 10 + (data[pos++] - '0');
    if (value > (size_t{1} << 31)) fail(ErrorKind::kInput, "PPM header value too large");
  }
  return value;
}

}  // namespace

ImageRaster parse_ppm(std::span<const uint8_t> data) {
  if (data.size() < 2 || data[0] != 'P' || data[1] != '6') {
    fail(ErrorKind::kInput, "not a binary PPM (P6) image");
  }
  size_t pos = 2;
  const size_t width = next_header_int(data, pos);
  const size_t height = next_header_int(data, pos);
  const size_t maxval = next_header_int(data, pos);
  if (maxval != 255) fail(ErrorKind::kInput, "PPM maxval must be 255");
  if (pos >= data.size() || !std::isspace(data[pos])) {
    fail(ErrorKind::kInput, "malformed PPM header");
  }
  ++pos;
  const size_t needed = width * height * ImageRaster::kChannels;
  if (data.size() - pos < needed) fail(ErrorKind::kInput, "PPM pixel data truncated");
  return ImageRaster(width, height,
                     std::vector<uint8_t>(data.begin() + static_cast<ptrdiff_t>(pos),
                                          data.begin() + static_cast<ptrdiff_t>(pos + needed)));
}

std::vector<uint8_t> serialize_ppm(const ImageRaster& image) {
  const std::string header =
      "P6\n" + std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n255\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), image.samples().begin(), image.samples().end());
  return out;
}

ImageRaster load_ppm(const std::filesystem::path& path) { return parse_ppm(read_file(path)); }

void save_ppm(const std::filesystem::path& path, const ImageRaster& image) {
  write_file(path, serialize_ppm(image));
}

}  // namespace glc
