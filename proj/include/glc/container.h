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

// "GLC1" bitstream container. All fields little-endian:
//
//   offset  size  field
//        0     4  magic "GLC1"
//        4     2  version (1: channel-major raster coding order)
//        6     2  flags: bits 0-4 precision bits, bit 8 hyper stream present
//        8     2  channels
//       10     4  height
//       14     4  width
//       18     2  latent alphabet min (i16)
//       20     2  latent alphabet max (i16)
//       22     8  model id
//       30     4  CRC-32 of bytes [0, 30)
//       34     4  hyper payload length, then the hyper payload
//              4  latent payload length, then the latent payload
//
// The hyper payload starts with its own shape (channels u16, height u32,
// width u32) followed by range-coded bytes. It is empty when flag bit 8 is
// clear. The hyper latent travels first because it is needed to decode the
// main latent in a full system.

#ifndef GLC_CONTAINER_H_
#define GLC_CONTAINER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "glc/cdf_table.h"
#include "glc/latent.h"

namespace glc {

inline constexpr uint16_t kContainerVersion = 1;
inline constexpr size_t kContainerHeaderBytes = 34;

struct ContainerHeader {
  uint16_t version = kContainerVersion;
  int precision_bits = kDefaultPrecisionBits;
  bool has_hyper = false;
  TensorShape shape;
  SymbolAlphabet alphabet{-128, 127};
  uint64_t model_id = 0;

  friend bool operator==(const ContainerHeader&, const ContainerHeader&) = default;
};

struct Bitstream {
  ContainerHeader header;
  // Hyper shape prefix plus coded bytes, empty without a hyper latent.
  std::vector<uint8_t> hyper_payload;
  std::vector<uint8_t> latent_payload;

  // Total container size in bytes.
  size_t size_bytes() const {
    return kContainerHeaderBytes + 4 + hyper_payload.size() + 4 + latent_payload.size();
  }
};

// Range-codes symbols in channel-major raster order. Throws kCoding when a
// table's alphabet or precision does not match the tensor.
std::vector<uint8_t> encode_symbols(const LatentTensor& tensor, const CdfTableMap& tables,
                                    int precision_bits);

// Inverse of encode_symbols. Throws kCorruption for table mismatches and
// undecodable payloads.
LatentTensor decode_symbols(std::span<const uint8_t> payload, TensorShape shape,
                            SymbolAlphabet alphabet, const CdfTableMap& tables,
                            int precision_bits);

Bitstream encode(const LatentTensor& latent, const CdfTableMap& tables, uint64_t model_id = 0,
                 int precision_bits = kDefaultPrecisionBits);
Bitstream encode(const LatentTensor& latent, const CdfTableMap& tables,
                 const LatentTensor& hyper, const CdfTableMap& hyper_tables,
                 uint64_t model_id = 0, int precision_bits = kDefaultPrecisionBits);

LatentTensor decode(const Bitstream& stream, const CdfTableMap& tables);
// Returns nullopt when the stream carries no hyper latent.
std::optional<LatentTensor> decode_hyper(const Bitstream& stream,
                                         const CdfTableMap& hyper_tables,
                                         SymbolAlphabet hyper_alphabet);

std::vector<uint8_t> serialize_bitstream(const Bitstream& stream);
// Checks magic, version, checksum and exact lengths; throws kCorruption.
Bitstream parse_bitstream(std::span<const uint8_t> data);

}  // namespace glc

#endif  // GLC_CONTAINER_H_
