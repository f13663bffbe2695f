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

#include "glc/container.h"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "glc/byte_io.h"
#include "glc/error.h"
#include "glc/range_coder.h"

namespace glc {
namespace {

constexpr std::string_view kMagic = "GLC1";
constexpr size_t kChecksummedBytes = 30;
constexpr size_t kHyperShapeBytes = 10;
constexpr uint16_t kPrecisionMask = 0x1F;
constexpr uint16_t kHyperFlag = 0x100;

uint32_t crc32_of(std::span<const uint8_t> bytes) {
  return static_cast<uint32_t>(
      ::crc32(::crc32(0L, Z_NULL, 0), bytes.data(), static_cast<uInt>(bytes.size())));
}

void check_shape_fits(const TensorShape& s) {
  if (s.channels > 0xFFFF || s.height > 0xFFFFFFFFu || s.width > 0xFFFFFFFFu) {
    fail(ErrorKind::kCapacity, "tensor shape " + s.to_string() + " does not fit the container");
  }
}

Bitstream make_stream(const LatentTensor& latent, const CdfTableMap& tables, uint64_t model_id,
                      int precision_bits) {
  check_shape_fits(latent.shape());
  Bitstream stream;
  stream.header.precision_bits = precision_bits;
  stream.header.shape = latent.shape();
  stream.header.alphabet = latent.alphabet();
  stream.header.model_id = model_id;
  stream.latent_payload = encode_symbols(latent, tables, precision_bits);
  return stream;
}

}  // namespace

std::vector<uint8_t> encode_symbols(const LatentTensor& tensor, const CdfTableMap& tables,
                                    int precision_bits) {
  if (precision_bits < kMinPrecisionBits || precision_bits > kMaxPrecisionBits) {
    fail(ErrorKind::kCoding, "precision bits must be in [8, 16]");
  }
  const TensorShape& s = tensor.shape();
  if (s.count() == 0) return {};
  RangeEncoder enc;
  for (size_t c = 0; c < s.channels; ++c) {
    for (size_t h = 0; h < s.height; ++h) {
      for (size_t w = 0; w < s.width; ++w) {
        const CdfTable* table = nullptr;
        try {
          table = &tables.at(c, h, w);
        } catch (const Error& e) {
          fail(ErrorKind::kCoding, std::string("no coding table: ") + e.what());
        }
        if (table->alphabet() != tensor.alphabet()) {
          fail(ErrorKind::kCoding, "table alphabet does not match the tensor alphabet");
        }
        if (table->precision_bits() != precision_bits) {
          fail(ErrorKind::kCoding, "table precision does not match the stream precision");
        }
        enc.encode(*table, table->alphabet().index_of(tensor.at(c, h, w)));
      }
    }
  }
  return enc.finish();
}

LatentTensor decode_symbols(std::span<const uint8_t> payload, TensorShape shape,
                            SymbolAlphabet alphabet, const CdfTableMap& tables,
                            int precision_bits) {
  std::vector<int32_t> values;
  if (shape.count() == 0) {
    if (!payload.empty()) fail(ErrorKind::kCorruption, "payload present for an empty tensor");
    return LatentTensor(shape, alphabet, std::move(values));
  }
  // Every symbol costs at least -log2(max freq / total) bits, which bounds
  // the symbol count a payload of this size can hold.
  const double count = static_cast<double>(shape.channels) * static_cast<double>(shape.height) *
                       static_cast<double>(shape.width);
  double min_cost = INFINITY;
  for (const CdfTable& t : tables.items()) {
    uint32_t fmax = 0;
    for (size_t i = 0; i < t.alphabet().span(); ++i) fmax = std::max(fmax, t.freq(i));
    min_cost = std::min(min_cost, -std::log2(static_cast<double>(fmax) / t.total()));
  }
  if (count * min_cost > 8.0 * static_cast<double>(payload.size()) + 64.0) {
    fail(ErrorKind::kCorruption, "payload too short for a " + shape.to_string() + " tensor");
  }
  values.reserve(shape.count());
  RangeDecoder dec(payload);
  for (size_t c = 0; c < shape.channels; ++c) {
    for (size_t h = 0; h < shape.height; ++h) {
      for (size_t w = 0; w < shape.width; ++w) {
        const CdfTable* table = nullptr;
        try {
          table = &tables.at(c, h, w);
        } catch (const Error& e) {
          fail(ErrorKind::kCorruption, std::string("table mismatch: ") + e.what());
        }
        if (table->alphabet() != alphabet || table->precision_bits() != precision_bits) {
          fail(ErrorKind::kCorruption,
               "table mismatch: decoding tables disagree with the stream header");
        }
        values.push_back(table->alphabet().symbol_at(dec.decode(*table)));
        if (dec.renormalized_bytes() > payload.size()) {
          fail(ErrorKind::kCorruption, "payload ends before the last symbol");
        }
      }
    }
  }
  // The encoder wrote the renormalization bytes plus at most 8 flush bytes.
  const size_t renorm = dec.renormalized_bytes();
  if (renorm > payload.size() || payload.size() > renorm + 8) {
    fail(ErrorKind::kCorruption, "payload length inconsistent with decoded symbols");
  }
  return LatentTensor(shape, alphabet, std::move(values));
}

Bitstream encode(const LatentTensor& latent, const CdfTableMap& tables, uint64_t model_id,
                 int precision_bits) {
  return make_stream(latent, tables, model_id, precision_bits);
}

Bitstream encode(const LatentTensor& latent, const CdfTableMap& tables,
                 const LatentTensor& hyper, const CdfTableMap& hyper_tables, uint64_t model_id,
                 int precision_bits) {
  Bitstream stream = make_stream(latent, tables, model_id, precision_bits);
  check_shape_fits(hyper.shape());
  stream.header.has_hyper = true;
  ByteWriter w;
  w.put_u16(static_cast<uint16_t>(hyper.shape().channels));
  w.put_u32(static_cast<uint32_t>(hyper.shape().height));
  w.put_u32(static_cast<uint32_t>(hyper.shape().width));
  w.put_bytes(encode_symbols(hyper, hyper_tables, precision_bits));
  stream.hyper_payload = w.take();
  return stream;
}

LatentTensor decode(const Bitstream& stream, const CdfTableMap& tables) {
  const ContainerHeader& h = stream.header;
  return decode_symbols(stream.latent_payload, h.shape, h.alphabet, tables, h.precision_bits);
}

std::optional<LatentTensor> decode_hyper(const Bitstream& stream, const CdfTableMap& hyper_tables,
                                         SymbolAlphabet hyper_alphabet) {
  if (!stream.header.has_hyper) return std::nullopt;
  ByteReader r(stream.hyper_payload);
  TensorShape shape;
  shape.channels = r.get_u16();
  shape.height = r.get_u32();
  shape.width = r.get_u32();
  return decode_symbols(r.get_bytes(r.remaining()), shape, hyper_alphabet, hyper_tables,
                        stream.header.precision_bits);
}

std::vector<uint8_t> serialize_bitstream(const Bitstream& stream) {
  const ContainerHeader& h = stream.header;
  check_shape_fits(h.shape);
  if (h.precision_bits < kMinPrecisionBits || h.precision_bits > kMaxPrecisionBits) {
    fail(ErrorKind::kCoding, "precision bits must be in [8, 16]");
  }
  if (stream.hyper_payload.size() > 0xFFFFFFFFu || stream.latent_payload.size() > 0xFFFFFFFFu) {
    fail(ErrorKind::kCapacity, "payload exceeds 4 GiB");
  }
  ByteWriter w;
  w.put_tag(kMagic);
  w.put_u16(h.version);
  w.put_u16(static_cast<uint16_t>(h.precision_bits | (h.has_hyper ? kHyperFlag : 0)));
  w.put_u16(static_cast<uint16_t>(h.shape.channels));
  w.put_u32(static_cast<uint32_t>(h.shape.height));
  w.put_u32(static_cast<uint32_t>(h.shape.width));
  w.put_i16(static_cast<int16_t>(h.alphabet.min_symbol()));
  w.put_i16(static_cast<int16_t>(h.alphabet.max_symbol()));
  w.put_u64(h.model_id);
  w.put_u32(crc32_of(w.bytes()));
  w.put_u32(static_cast<uint32_t>(stream.hyper_payload.size()));
  w.put_bytes(stream.hyper_payload);
  w.put_u32(static_cast<uint32_t>(stream.latent_payload.size()));
  w.put_bytes(stream.latent_payload);
  return w.take();
}

Bitstream parse_bitstream(std::span<const uint8_t> data) {
  ByteReader r(data, ErrorKind::kCorruption);
  if (!r.tag_matches(kMagic)) fail(ErrorKind::kCorruption, "not a GLC1 container (bad magic)");
  Bitstream stream;
  ContainerHeader& h = stream.header;
  h.version = r.get_u16();
  const uint16_t flags = r.get_u16();
  h.shape.channels = r.get_u16();
  h.shape.height = r.get_u32();
  h.shape.width = r.get_u32();
  const int lo = r.get_i16();
  const int hi = r.get_i16();
  h.model_id = r.get_u64();
  const uint32_t stored_crc = r.get_u32();
  if (stored_crc != crc32_of(data.first(kChecksummedBytes))) {
    fail(ErrorKind::kCorruption, "header checksum mismatch");
  }
  if (h.version != kContainerVersion) {
    fail(ErrorKind::kCorruption, "unsupported container version " + std::to_string(h.version));
  }
  if ((flags & ~(kPrecisionMask | kHyperFlag)) != 0) {
    fail(ErrorKind::kCorruption, "unknown container flags");
  }
  h.precision_bits = flags & kPrecisionMask;
  h.has_hyper = (flags & kHyperFlag) != 0;
  if (h.precision_bits < kMinPrecisionBits || h.precision_bits > kMaxPrecisionBits) {
    fail(ErrorKind::kCorruption, "invalid precision in header");
  }
  try {
    h.alphabet = SymbolAlphabet(lo, hi);
  } catch (const Error&) {
    fail(ErrorKind::kCorruption, "invalid alphabet in header");
  }

  const uint32_t hyper_len = r.get_u32();
  const auto hyper = r.get_bytes(hyper_len);
  stream.hyper_payload.assign(hyper.begin(), hyper.end());
  const uint32_t latent_len = r.get_u32();
  const auto latent = r.get_bytes(latent_len);
  stream.latent_payload.assign(latent.begin(), latent.end());
  if (r.remaining() != 0) {
    fail(ErrorKind::kCorruption, std::to_string(r.remaining()) + " trailing bytes after payload");
  }
  if (h.has_hyper ? hyper_len < kHyperShapeBytes : hyper_len != 0) {
    fail(ErrorKind::kCorruption, "hyper payload inconsistent with header flags");
  }
  return stream;
}

}  // namespace glc
