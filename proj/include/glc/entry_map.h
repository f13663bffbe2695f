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

#ifndef GLC_ENTRY_MAP_H_
#define GLC_ENTRY_MAP_H_

#include <cstddef>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "glc/alphabet.h"
#include "glc/error.h"

namespace glc {

struct TensorShape {
  size_t channels = 0;
  size_t height = 0;
  size_t width = 0;

  size_t count() const { return channels * height * width; }
  // Channel-major raster index.
  size_t index(size_t c, size_t h, size_t w) const { return (c * height + h) * width + w; }

  std::string to_string() const {
    return std::to_string(channels) + "x" + std::to_string(height) + "x" + std::to_string(width);
  }

  friend bool operator==(const TensorShape&, const TensorShape&) = default;
};

// Assigns one item (a distribution, a CDF table) to every tensor entry.
// An item can be shared by all entries, by each channel, or be specific to
// one entry.
template <typename T>
class EntryMap {
 public:
  enum class Mode { kShared, kPerChannel, kPerEntry };

  static EntryMap shared(T item) {
    return EntryMap(Mode::kShared, {}, std::vector<T>{std::move(item)});
  }
  static EntryMap per_channel(std::vector<T> items) {
    return EntryMap(Mode::kPerChannel, {}, std::move(items));
  }
  // `items` are in channel-major raster order of `shape`.
  static EntryMap per_entry(TensorShape shape, std::vector<T> items) {
    if (items.size() != shape.count()) {
      fail(ErrorKind::kInput, "per-entry map needs " + std::to_string(shape.count()) +
                                  " items, got " + std::to_string(items.size()));
    }
    return EntryMap(Mode::kPerEntry, shape, std::move(items));
  }

  // Throws kLookup when the map has nothing for (c, h, w).
  const T& at(size_t c, size_t h, size_t w) const {
    switch (mode_) {
      case Mode::kShared:
        return items_.front();
      case Mode::kPerChannel:
        if (c >= items_.size()) {
          fail(ErrorKind::kLookup, "no entry for channel " + std::to_string(c) + " (" +
                                       std::to_string(items_.size()) + " channels)");
        }
        return items_[c];
      case Mode::kPerEntry:
        if (c >= shape_.channels || h >= shape_.height || w >= shape_.width) {
          fail(ErrorKind::kLookup, "no entry at (" + std::to_string(c) + ", " +
                                       std::to_string(h) + ", " + std::to_string(w) + ")");
        }
        return items_[shape_.index(c, h, w)];
    }
    fail(ErrorKind::kLookup, "corrupt entry map");
  }

  Mode mode() const { return mode_; }
  const TensorShape& shape() const { return shape_; }
  const std::vector<T>& items() const { return items_; }

  template <typename F>
  auto transform(F&& fn) const -> EntryMap<std::decay_t<std::invoke_result_t<F, const T&>>> {
    using U = std::decay_t<std::invoke_result_t<F, const T&>>;
    std::vector<U> out;
    out.reserve(items_.size());
    for (const T& item : items_) out.push_back(fn(item));
    switch (mode_) {
      case Mode::kShared: return EntryMap<U>::shared(std::move(out.front()));
      case Mode::kPerChannel: return EntryMap<U>::per_channel(std::move(out));
      case Mode::kPerEntry: break;
    }
    return EntryMap<U>::per_entry(shape_, std::move(out));
  }

 private:
  EntryMap(Mode mode, TensorShape shape, std::vector<T> items)
      : mode_(mode), shape_(shape), items_(std::move(items)) {}

  Mode mode_;
  TensorShape shape_;
  std::vector<T> items_;
};

using DistributionMap = EntryMap<DiscreteDistribution>;

}  // namespace glc

#endif  // GLC_ENTRY_MAP_H_
