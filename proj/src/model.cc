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

#include "glc/model.h"

#include <json.hpp>

#include "glc/byte_io.h"
#include "glc/rng.h"

namespace glc {
namespace {

constexpr std::string_view kMagic = "GLMP";

void put_alphabet(ByteWriter& w, const SymbolAlphabet& a) {
  w.put_i16(static_cast<int16_t>(a.min_symbol()));
  w.put_i16(static_cast<int16_t>(a.max_symbol()));
}

SymbolAlphabet get_alphabet(ByteReader& r) {
  const int lo = r.get_i16();
  const int hi = r.get_i16();
  return SymbolAlphabet(lo, hi);
}

}  // namespace

std::vector<uint8_t> serialize_model(const EntropyModel& model) {
  if (model.latent_channels.size() > 0xFFFF || model.hyper.channels.size() > 0xFFFF) {
    fail(ErrorKind::kCapacity, "model has too many channels for the file format");
  }
  ByteWriter w;
  w.put_tag(kMagic);
  w.put_u16(kModelFormatVersion);
  w.put_u16(static_cast<uint16_t>(model.latent_channels.size()));
  for (const GllmmParams& p : model.latent_channels) {
    for (const auto& comps : p.components) w.put_u16(static_cast<uint16_t>(comps.size()));
  }
  put_alphabet(w, model.latent_alphabet);
  for (const GllmmParams& p : model.latent_channels) {
    for (double fw : p.family_weights) w.put_f64(fw);
    for (const auto& comps : p.components) {
      for (const MixtureComponent& c : comps) {
        w.put_f64(c.weight);
        w.put_f64(c.mean);
        w.put_f64(c.spread);
      }
    }
  }

  put_alphabet(w, model.hyper_alphabet);
  const auto& hyper = model.hyper.channels;
  const size_t layers = hyper.empty() ? 0 : hyper.front().layers.size();
  const size_t width = layers == 0 ? 0 : hyper.front().layers.front().weight.size();
  for (const FactorizedChannel& ch : hyper) {
    if (ch.layers.size() != layers) fail(ErrorKind::kInput, "hyper channels differ in layer count");
    for (const FactorizedLayer& l : ch.layers) {
      if (l.weight.size() != width || l.bias.size() != width || l.gate.size() != width) {
        fail(ErrorKind::kInput, "hyper layers differ in width");
      }
    }
  }
  w.put_u16(static_cast<uint16_t>(hyper.size()));
  w.put_u16(static_cast<uint16_t>(layers));
  w.put_u16(static_cast<uint16_t>(width));
  for (const FactorizedChannel& ch : hyper) {
    for (const FactorizedLayer& l : ch.layers) {
      for (double v : l.weight) w.put_f64(v);
      for (double v : l.bias) w.put_f64(v);
      for (double v : l.gate) w.put_f64(v);
    }
  }
  return w.take();
}

EntropyModel parse_model(std::span<const uint8_t> data) {
  ByteReader r(data, ErrorKind::kInput);
  if (!r.tag_matches(kMagic)) fail(ErrorKind::kInput, "not a model file (bad magic)");
  const uint16_t version = r.get_u16();
  if (version != kModelFormatVersion) {
    fail(ErrorKind::kInput, "unsupported model format version " + std::to_string(version));
  }
  EntropyModel model;
  const size_t channels = r.get_u16();
  std::vector<std::array<uint16_t, 3>> counts(channels);
  for (auto& c : counts) {
    for (auto& n : c) n = r.get_u16();
  }
  model.latent_alphabet = get_alphabet(r);
  model.latent_channels.resize(channels);
  for (size_t ch = 0; ch < channels; ++ch) {
    GllmmParams& p = model.latent_channels[ch];
    for (double& fw : p.family_weights) fw = r.get_f64();
    for (size_t f = 0; f < 3; ++f) {
      p.components[f].resize(counts[ch][f]);
      for (MixtureComponent& c : p.components[f]) {
        c.weight = r.get_f64();
        c.mean = r.get_f64();
        c.spread = r.get_f64();
      }
    }
  }

  model.hyper_alphabet = get_alphabet(r);
  const size_t hyper_channels = r.get_u16();
  const size_t layers = r.get_u16();
  const size_t width = r.get_u16();
  model.hyper.channels.resize(hyper_channels);
  for (FactorizedChannel& ch : model.hyper.channels) {
    ch.layers.resize(layers);
    for (FactorizedLayer& l : ch.layers) {
      for (auto* vec : {&l.weight, &l.bias, &l.gate}) {
        vec->resize(width);
        for (double& v : *vec) v = r.get_f64();
      }
    }
  }
  if (r.remaining() != 0) {
    fail(ErrorKind::kInput, std::to_string(r.remaining()) + " trailing bytes in model file");
  }
  return model;
}

EntropyModel load_model(const std::filesystem::path& path) {
  return parse_model(read_file(path));
}

void save_model(const std::filesystem::path& path, const EntropyModel& model) {
  write_file(path, serialize_model(model));
}

std::string model_to_text(const EntropyModel& model) {
  using nlohmann::json;
  json doc;
  doc["format"] = "GLMP";
  doc["version"] = kModelFormatVersion;
  doc["latent_alphabet"] = {model.latent_alphabet.min_symbol(), model.latent_alphabet.max_symbol()};
  doc["hyper_alphabet"] = {model.hyper_alphabet.min_symbol(), model.hyper_alphabet.max_symbol()};
  json channels = json::array();
  for (const GllmmParams& p : model.latent_channels) {
    json ch;
    ch["family_weights"] = p.family_weights;
    for (size_t f = 0; f < 3; ++f) {
      json comps = json::array();
      for (const MixtureComponent& c : p.components[f]) {
        comps.push_back({c.weight, c.mean, c.spread});
      }
      ch[family_name(static_cast<Family>(f))] = comps;
    }
    channels.push_back(ch);
  }
  doc["latent_channels"] = channels;
  json hyper = json::array();
  for (const FactorizedChannel& ch : model.hyper.channels) {
    json layers = json::array();
    for (const FactorizedLayer& l : ch.layers) {
      layers.push_back({{"weight", l.weight}, {"bias", l.bias}, {"gate", l.gate}});
    }
    hyper.push_back(layers);
  }
  doc["hyper_channels"] = hyper;
  return doc.dump(2) + "\n";
}

EntropyModel model_from_text(const std::string& text) {
  using nlohmann::json;
  try {
    const json doc = json::parse(text);
    if (doc.at("format") != "GLMP") fail(ErrorKind::kInput, "text model: wrong format tag");
    EntropyModel model;
    const auto la = doc.at("latent_alphabet");
    model.latent_alphabet = SymbolAlphabet(la.at(0).get<int>(), la.at(1).get<int>());
    const auto ha = doc.at("hyper_alphabet");
    model.hyper_alphabet = SymbolAlphabet(ha.at(0).get<int>(), ha.at(1).get<int>());
    for (const json& ch : doc.at("latent_channels")) {
      GllmmParams p;
      p.family_weights = ch.at("family_weights").get<std::array<double, 3>>();
      for (size_t f = 0; f < 3; ++f) {
        p.components[f].clear();
        for (const json& c : ch.at(family_name(static_cast<Family>(f)))) {
          p.components[f].push_back(
              {c.at(0).get<double>(), c.at(1).get<double>(), c.at(2).get<double>()});
        }
      }
      model.latent_channels.push_back(std::move(p));
    }
    for (const json& layers : doc.at("hyper_channels")) {
      FactorizedChannel ch;
      for (const json& l : layers) {
        ch.layers.push_back({l.at("weight").get<std::vector<double>>(),
                             l.at("bias").get<std::vector<double>>(),
                             l.at("gate").get<std::vector<double>>()});
      }
      model.hyper.channels.push_back(std::move(ch));
    }
    return model;
  } catch (const json::exception& e) {
    fail(ErrorKind::kInput, std::string("text model: ") + e.what());
  }
}

uint64_t model_id(const EntropyModel& model) { return fnv1a64(serialize_model(model)); }

ValidationReport validate_model(const EntropyModel& model) {
  ValidationReport report;
  if (model.latent_channels.empty()) {
    report.violations.push_back({"model", rules::kComponentCount, "model has no latent channels"});
  }
  for (size_t ch = 0; ch < model.latent_channels.size(); ++ch) {
    auto r = validate_params(model.latent_channels[ch], "channel " + std::to_string(ch));
    report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
  }
  auto r = validate_params(model.hyper, "hyper");
  report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
  return report;
}

DistributionMap latent_distributions(const EntropyModel& model) {
  std::vector<DiscreteDistribution> dists;
  dists.reserve(model.latent_channels.size());
  for (const GllmmParams& p : model.latent_channels) {
    dists.push_back(discretize(p, model.latent_alphabet));
  }
  return DistributionMap::per_channel(std::move(dists));
}

DistributionMap hyper_distributions(const EntropyModel& model) {
  std::vector<DiscreteDistribution> dists;
  dists.reserve(model.hyper.channels.size());
  for (size_t ch = 0; ch < model.hyper.channels.size(); ++ch) {
    dists.push_back(discretize_factorized(model.hyper, ch, model.hyper_alphabet));
  }
  return DistributionMap::per_channel(std::move(dists));
}

EntropyModel generate_model(const ModelGenOptions& options) {
  const size_t counts[3] = {options.gaussian_components, options.laplace_components,
                            options.logistic_components};
  if (options.channels == 0 || options.channels > 0xFFFF ||
      options.hyper_channels > 0xFFFF) {
    fail(ErrorKind::kInput, "channel counts must be in [1, 65535]");
  }
  for (size_t n : counts) {
    if (n == 0 || n > 0xFFFF) fail(ErrorKind::kInput, "component counts must be in [1, 65535]");
  }
  Rng rng(options.seed);
  EntropyModel model;
  model.latent_channels.resize(options.channels);
  for (GllmmParams& p : model.latent_channels) {
    double sum = 0.0;
    for (double& fw : p.family_weights) sum += (fw = uniform(rng, 0.2, 1.0));
    for (double& fw : p.family_weights) fw /= sum;
    for (size_t f = 0; f < 3; ++f) {
      auto& comps = p.components[f];
      comps.resize(counts[f]);
      double wsum = 0.0;
      for (MixtureComponent& c : comps) {
        c.weight = uniform(rng, 0.2, 1.0);
        c.mean = uniform(rng, -4.0, 4.0);
        c.spread = f == 0 ? uniform(rng, 0.25, 9.0) : uniform(rng, 0.5, 3.0);
        wsum += c.weight;
      }
      for (MixtureComponent& c : comps) c.weight /= wsum;
    }
  }
  model.hyper = FactorizedDensityParams::identity(options.hyper_channels);
  for (FactorizedChannel& ch : model.hyper.channels) {
    for (FactorizedLayer& l : ch.layers) {
      for (double& v : l.weight) v += uniform(rng, -0.5, 0.5);
      for (double& v : l.bias) v = uniform(rng, -1.0, 1.0);
      for (double& v : l.gate) v = uniform(rng, -2.0, 2.0);
    }
  }
  return model;
}

}  // namespace glc
