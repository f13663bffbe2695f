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

// glc: command-line front end for the entropy coding and RD evaluation
// library. Data goes to files and stdout as key=value lines; diagnostics go
// to stderr as "error[<class>]: <message>".

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "glc/byte_io.h"
#include "glc/container.h"
#include "glc/dists.h"
#include "glc/distortion.h"
#include "glc/error.h"
#include "glc/image.h"
#include "glc/latent.h"
#include "glc/model.h"
#include "glc/ms_ssim.h"
#include "glc/rdo.h"
#include "glc/synth.h"

namespace fs = std::filesystem;

namespace {

using glc::Error;
using glc::ErrorKind;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo: return 2;
    case ErrorKind::kValidation:
    case ErrorKind::kParameterDomain: return 3;
    case ErrorKind::kCapacity: return 4;
    case ErrorKind::kCorruption: return 5;
    case ErrorKind::kCoding:
    case ErrorKind::kOutOfAlphabet:
    case ErrorKind::kLookup: return 6;
    case ErrorKind::kInput: return 7;
  }
  return 8;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string hex(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

glc::TensorShape parse_shape(const std::string& text) {
  glc::TensorShape s;
  char x1 = 0, x2 = 0;
  std::istringstream in(text);
  if (!(in >> s.channels >> x1 >> s.height >> x2 >> s.width) || x1 != 'x' || x2 != 'x' ||
      !in.eof()) {
    glc::fail(ErrorKind::kInput, "shape must look like CxHxW, got '" + text + "'");
  }
  return s;
}

std::vector<double> parse_lambdas(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      glc::fail(ErrorKind::kInput, "bad lambda value '" + item + "'");
    }
  }
  return out;
}

// Loads a model and refuses to continue if it violates any invariant.
glc::EntropyModel load_valid_model(const fs::path& path) {
  glc::EntropyModel model = glc::load_model(path);
  const glc::ValidationReport report = glc::validate_model(model);
  if (!report.ok()) {
    std::cerr << report.to_string();
    glc::fail(ErrorKind::kValidation, "invalid model: " + report.violations.front().to_string());
  }
  return model;
}

// --- gen-model ---------------------------------------------------------------

struct GenModelArgs {
  glc::ModelGenOptions options;
  std::string output;
  std::string text_output;
  std::string from_text;
};

int run_gen_model(const GenModelArgs& args) {
  glc::EntropyModel model = args.from_text.empty()
                                ? glc::generate_model(args.options)
                                : [&] {
                                    const auto bytes = glc::read_file(args.from_text);
                                    return glc::model_from_text(
                                        std::string(bytes.begin(), bytes.end()));
                                  }();
  const glc::ValidationReport report = glc::validate_model(model);
  if (!report.ok()) {
    std::cerr << report.to_string();
    glc::fail(ErrorKind::kValidation, "generated model is invalid");
  }
  glc::save_model(args.output, model);
  if (!args.text_output.empty()) {
    const std::string text = glc::model_to_text(model);
    glc::write_file(args.text_output,
                    {reinterpret_cast<const uint8_t*>(text.data()), text.size()});
  }
  const auto& first = model.latent_channels.front();
  std::cout << "model_id=" << hex(glc::model_id(model))
            << " channels=" << model.latent_channels.size()
            << " K=" << first.family(glc::Family::kGaussian).size()
            << " M=" << first.family(glc::Family::kLaplace).size()
            << " N=" << first.family(glc::Family::kLogistic).size()
            << " hyper_channels=" << model.hyper.channels.size() << "\n";
  return 0;
}

// --- validate ------------------------------------------------------------------

int run_validate(const std::string& model_path, const std::string& dump) {
  const glc::EntropyModel model = glc::load_model(model_path);
  if (!dump.empty()) {
    const std::string text = glc::model_to_text(model);
    glc::write_file(dump, {reinterpret_cast<const uint8_t*>(text.data()), text.size()});
  }
  const glc::ValidationReport report = glc::validate_model(model);
  if (!report.ok()) {
    std::cerr << report.to_string();
    glc::fail(ErrorKind::kValidation, std::to_string(report.violations.size()) +
                                          " violation(s); first: " +
                                          report.violations.front().to_string());
  }
  std::cout << "status=ok model_id=" << hex(glc::model_id(model)) << "\n";
  return 0;
}

// --- compress / decompress -----------------------------------------------------

struct CompressArgs {
  std::string model;
  std::string input;
  std::string hyper_input;
  std::string synthetic;
  uint64_t seed = 0;
  std::string output;
  int precision = glc::kDefaultPrecisionBits;
  std::string pixels;
};

int run_compress(const CompressArgs& args) {
  const glc::EntropyModel model = load_valid_model(args.model);
  std::optional<glc::LatentTensor> latent;
  std::optional<glc::LatentTensor> hyper;
  if (!args.synthetic.empty()) {
    auto synth = glc::synth_model_latents(model, parse_shape(args.synthetic), args.seed);
    latent = std::move(synth.latent);
    hyper = std::move(synth.hyper);
  } else {
    latent = glc::load_latent(args.input);
    if (!args.hyper_input.empty()) hyper = glc::load_latent(args.hyper_input);
  }
  if (latent->alphabet() != model.latent_alphabet) {
    glc::fail(ErrorKind::kCoding, "latent alphabet does not match the model");
  }
  if (hyper && hyper->alphabet() != model.hyper_alphabet) {
    glc::fail(ErrorKind::kCoding, "hyper latent alphabet does not match the model");
  }

  const auto latent_dists = glc::latent_distributions(model);
  const auto latent_tables = glc::build_cdf_tables(latent_dists, args.precision);
  const uint64_t id = glc::model_id(model);
  double estimated = glc::rate_bits(*latent, latent_dists);
  glc::Bitstream stream;
  if (hyper) {
    const auto hyper_dists = glc::hyper_distributions(model);
    estimated += glc::rate_bits(*hyper, hyper_dists);
    stream = glc::encode(*latent, latent_tables, *hyper,
                         glc::build_cdf_tables(hyper_dists, args.precision), id, args.precision);
  } else {
    stream = glc::encode(*latent, latent_tables, id, args.precision);
  }
  const auto bytes = glc::serialize_bitstream(stream);
  glc::write_file(args.output, bytes);

  size_t width = 16 * latent->shape().width;
  size_t height = 16 * latent->shape().height;
  if (!args.pixels.empty()) {
    char x = 0;
    std::istringstream in(args.pixels);
    if (!(in >> width >> x >> height) || x != 'x' || !in.eof()) {
      glc::fail(ErrorKind::kInput, "--pixels must look like WxH");
    }
  }
  const size_t hyper_symbols = hyper ? hyper->size() : 0;
  const double payload_bits = 8.0 * (stream.latent_payload.size() + stream.hyper_payload.size());
  const double container_bits = 8.0 * static_cast<double>(bytes.size());
  std::cout << "symbols=" << latent->size() << " hyper_symbols=" << hyper_symbols
            << " estimated_bits=" << fmt(estimated) << " actual_bits=" << fmt(payload_bits)
            << " container_bits=" << fmt(container_bits)
            << " bpp=" << fmt(glc::bpp(container_bits, width, height)) << "\n";
  return 0;
}

int run_decompress(const std::string& input, const std::string& model_path,
                   const std::string& output, const std::string& hyper_output) {
  const glc::EntropyModel model = load_valid_model(model_path);
  const glc::Bitstream stream = glc::parse_bitstream(glc::read_file(input));
  const uint64_t id = glc::model_id(model);
  if (stream.header.model_id != id) {
    glc::fail(ErrorKind::kCorruption, "table mismatch: container was written with model " +
                                          hex(stream.header.model_id) + ", got model " +
                                          hex(id));
  }
  if (stream.header.alphabet != model.latent_alphabet) {
    glc::fail(ErrorKind::kCorruption, "table mismatch: container alphabet differs from model");
  }
  const int precision = stream.header.precision_bits;
  std::optional<glc::LatentTensor> hyper = glc::decode_hyper(
      stream, glc::build_cdf_tables(glc::hyper_distributions(model), precision),
      model.hyper_alphabet);
  const glc::LatentTensor latent = glc::decode(
      stream, glc::build_cdf_tables(glc::latent_distributions(model), precision));
  glc::save_latent(output, latent);
  if (!hyper_output.empty()) {
    if (!hyper) glc::fail(ErrorKind::kInput, "container carries no hyper latent");
    glc::save_latent(hyper_output, *hyper);
  }
  std::cout << "symbols=" << latent.size() << " shape=" << latent.shape().to_string()
            << " hyper_symbols=" << (hyper ? hyper->size() : 0) << "\n";
  return 0;
}

// --- metrics -------------------------------------------------------------------

struct MetricsArgs {
  std::string reference;
  std::string distorted;
  std::string reference_features;
  std::string distorted_features;
  std::string dists_weights;
  double k_ms = glc::kDefaultKms;
  double k_di = glc::kDefaultKdi;
  bool allow_scale_reduction = false;
};

int run_metrics(const MetricsArgs& args) {
  const glc::ImageRaster x = glc::load_ppm(args.reference);
  const glc::ImageRaster y = glc::load_ppm(args.distorted);
  glc::MsSsimOptions options;
  options.allow_scale_reduction = args.allow_scale_reduction;
  const double score = glc::ms_ssim(x, y, options);
  const double loss = 1.0 - score;

  std::optional<double> dists;
  if (!args.reference_features.empty() && !args.distorted_features.empty()) {
    const glc::FeatureFile fx = glc::load_features(args.reference_features);
    const glc::FeatureFile fy = glc::load_features(args.distorted_features);
    glc::DistsWeights weights;
    if (!args.dists_weights.empty()) {
      auto wf = glc::load_features(args.dists_weights);
      if (!wf.weights) glc::fail(ErrorKind::kInput, "weights file carries no alpha/beta arrays");
      weights = *wf.weights;
    } else if (fx.weights) {
      weights = *fx.weights;
    } else {
      weights = glc::DistsWeights::uniform(fx.stack);
    }
    dists = glc::dists_score(fx.stack, fy.stack, weights);
  } else if (!args.reference_features.empty() || !args.distorted_features.empty()) {
    glc::fail(ErrorKind::kInput, "DISTS needs both --ref-features and --dist-features");
  }
  const double combined =
      glc::combined_distortion(loss, dists.value_or(0.0), args.k_ms, dists ? args.k_di : 0.0);
  std::cout << "ms_ssim=" << fmt(score) << " ms_ssim_loss=" << fmt(loss)
            << " dists=" << (dists ? fmt(*dists) : "absent") << " combined=" << fmt(combined)
            << " k_ms=" << fmt(args.k_ms) << " k_di=" << fmt(args.k_di)
            << " scales=" << glc::effective_scales(x.width(), x.height(), options);
  if (!dists) std::cout << " note=k_di-term-omitted";
  std::cout << "\n";
  return 0;
}

// --- rd-report -----------------------------------------------------------------

// Manifest lines: id reference.ppm distorted.ppm latent [ref.dftr dist.dftr [weights.dftr]]
// where latent is a GLTN path or synthetic:CxHxW:SEED. Paths are relative to
// the manifest. Blank lines and '#' comments are skipped.
std::vector<glc::RdCase> read_manifest(const fs::path& path, const glc::EntropyModel& model) {
  std::ifstream in(path);
  if (!in) glc::fail(ErrorKind::kIo, "cannot open manifest " + path.string());
  const fs::path base = path.parent_path();
  auto resolve = [base](const std::string& p) {
    const fs::path fp(p);
    return fp.is_absolute() ? fp : base / fp;
  };
  std::vector<glc::RdCase> cases;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string tok; fields >> tok;) f.push_back(tok);
    if (f.empty()) continue;
    const std::string id = f[0];
    cases.push_back({id, [f, resolve, &model, line_no]() -> glc::RdInput {
                       if (f.size() != 4 && f.size() != 6 && f.size() != 7) {
                         glc::fail(ErrorKind::kInput, "manifest line " + std::to_string(line_no) +
                                                          ": expected 4, 6 or 7 fields");
                       }
                       std::optional<glc::LatentTensor> latent, hyper;
                       const std::string prefix = "synthetic:";
                       if (f[3].starts_with(prefix)) {
                         const std::string spec = f[3].substr(prefix.size());
                         const size_t colon = spec.rfind(':');
                         if (colon == std::string::npos) {
                           glc::fail(ErrorKind::kInput, "synthetic latent needs CxHxW:SEED");
                         }
                         auto s = glc::synth_model_latents(model, parse_shape(spec.substr(0, colon)),
                                                           std::stoull(spec.substr(colon + 1)));
                         latent = std::move(s.latent);
                         hyper = std::move(s.hyper);
                       } else {
                         latent = glc::load_latent(resolve(f[3]));
                       }
                       glc::RdInput input{glc::load_ppm(resolve(f[1])),
                                          glc::load_ppm(resolve(f[2])),
                                          std::move(*latent),
                                          std::move(hyper),
                                          {},
                                          {},
                                          {}};
                       if (f.size() >= 6) {
                         auto fx = glc::load_features(resolve(f[4]));
                         auto fy = glc::load_features(resolve(f[5]));
                         input.reference_features = fx.stack;
                         input.distorted_features = fy.stack;
                         input.dists_weights = fx.weights;
                         if (f.size() == 7) {
                           auto wf = glc::load_features(resolve(f[6]));
                           if (!wf.weights) {
                             glc::fail(ErrorKind::kInput, "weights file has no alpha/beta");
                           }
                           input.dists_weights = wf.weights;
                         }
                       }
                       return input;
                     }});
  }
  return cases;
}

struct RdReportArgs {
  std::string manifest;
  std::string model;
  std::string lambdas = "2,1,0.5";
  std::string output;
  double k_ms = glc::kDefaultKms;
  double k_di = glc::kDefaultKdi;
  int precision = glc::kDefaultPrecisionBits;
  bool allow_scale_reduction = false;
};

int run_rd_report(const RdReportArgs& args) {
  const glc::EntropyModel model = load_valid_model(args.model);
  glc::RdoConfig config;
  config.lambdas = parse_lambdas(args.lambdas);
  config.k_ms = args.k_ms;
  config.k_di = args.k_di;
  config.precision_bits = args.precision;
  config.ms_ssim.allow_scale_reduction = args.allow_scale_reduction;
  config.check();
  const auto cases = read_manifest(args.manifest, model);
  const glc::RdReport report = glc::rd_sweep(cases, model, config);
  const std::string csv = report.to_csv();
  glc::write_file(args.output, {reinterpret_cast<const uint8_t*>(csv.data()), csv.size()});

  size_t failed = 0;
  for (const glc::RdRow& row : report.rows) {
    if (row.failed()) {
      ++failed;
      std::cerr << "row " << row.input_id << " lambda=" << fmt(row.lambda) << ": " << row.status
                << ": " << row.error_detail << "\n";
    }
  }
  std::cout << "inputs=" << cases.size() << " rows=" << report.rows.size()
            << " failed_rows=" << failed << " lambdas=" << config.lambdas.size()
            << " k_ms=" << fmt(config.k_ms) << " k_di=" << fmt(config.k_di) << "\n";
  if (!report.rows.empty() && failed == report.rows.size()) {
    std::cerr << "error[input]: every row failed\n";
    return exit_code(ErrorKind::kInput);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GLLMM entropy coding and rate-distortion evaluation"};
  app.require_subcommand(1);

  GenModelArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-model", "Generate a random valid GLMP model file");
  gen_cmd->add_option("--output", gen.output, "Model file to write")->required();
  gen_cmd->add_option("--channels", gen.options.channels, "Latent channels")
      ->capture_default_str();
  gen_cmd->add_option("-K,--gaussian", gen.options.gaussian_components, "Gaussian components")
      ->capture_default_str();
  gen_cmd->add_option("-M,--laplace", gen.options.laplace_components, "Laplace components")
      ->capture_default_str();
  gen_cmd->add_option("-N,--logistic", gen.options.logistic_components, "Logistic components")
      ->capture_default_str();
  gen_cmd->add_option("--hyper-channels", gen.options.hyper_channels, "Hyper latent channels")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.options.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--text", gen.text_output, "Also write a JSON dump");
  gen_cmd->add_option("--from-text", gen.from_text, "Convert a JSON dump instead of generating");

  std::string validate_model_path, validate_dump;
  auto* validate_cmd = app.add_subcommand("validate", "Check a model file's invariants");
  validate_cmd->add_option("--model", validate_model_path, "Model file")->required();
  validate_cmd->add_option("--dump", validate_dump, "Write a JSON dump of the model");

  CompressArgs comp;
  auto* comp_cmd = app.add_subcommand("compress", "Range-code a latent tensor into GLC1");
  comp_cmd->add_option("--model", comp.model, "Model file")->required();
  auto* comp_in = comp_cmd->add_option("--input", comp.input, "GLTN latent file");
  comp_cmd->add_option("--hyper", comp.hyper_input, "GLTN hyper latent file")->needs(comp_in);
  auto* comp_syn =
      comp_cmd->add_option("--synthetic", comp.synthetic, "Sample CxHxW latents from the model");
  comp_in->excludes(comp_syn);
  comp_cmd->add_option("--seed", comp.seed, "Seed for --synthetic")->capture_default_str();
  comp_cmd->add_option("--output", comp.output, "Container file to write")->required();
  comp_cmd->add_option("--precision", comp.precision, "Frequency precision bits")
      ->check(CLI::Range(glc::kMinPrecisionBits, glc::kMaxPrecisionBits))
      ->capture_default_str();
  comp_cmd->add_option("--pixels", comp.pixels, "Image size WxH for bpp (default 16x latent)");

  std::string dec_input, dec_model, dec_output, dec_hyper;
  auto* dec_cmd = app.add_subcommand("decompress", "Decode a GLC1 container to GLTN");
  dec_cmd->add_option("--input", dec_input, "Container file")->required();
  dec_cmd->add_option("--model", dec_model, "Model file")->required();
  dec_cmd->add_option("--output", dec_output, "Latent file to write")->required();
  dec_cmd->add_option("--hyper-output", dec_hyper, "Hyper latent file to write");

  MetricsArgs met;
  auto* met_cmd = app.add_subcommand("metrics", "MS-SSIM, DISTS and combined distortion");
  met_cmd->add_option("reference", met.reference, "Reference P6 image")->required();
  met_cmd->add_option("distorted", met.distorted, "Distorted P6 image")->required();
  met_cmd->add_option("--ref-features", met.reference_features, "DFTR features of reference");
  met_cmd->add_option("--dist-features", met.distorted_features, "DFTR features of distorted");
  met_cmd->add_option("--dists-weights", met.dists_weights, "DFTR file with alpha/beta");
  met_cmd->add_option("--k-ms", met.k_ms, "MS-SSIM loss weight")->capture_default_str();
  met_cmd->add_option("--k-di", met.k_di, "DISTS weight")->capture_default_str();
  met_cmd->add_flag("--allow-scale-reduction", met.allow_scale_reduction,
                    "Use fewer scales for small images");

  RdReportArgs rd;
  auto* rd_cmd = app.add_subcommand("rd-report", "Rate-distortion sweep over a manifest");
  rd_cmd->add_option("--input", rd.manifest, "Manifest file")->required();
  rd_cmd->add_option("--model", rd.model, "Model file")->required();
  rd_cmd->add_option("--lambda", rd.lambdas, "Comma-separated lambda list")
      ->capture_default_str();
  rd_cmd->add_option("--output", rd.output, "CSV file to write")->required();
  rd_cmd->add_option("--k-ms", rd.k_ms, "MS-SSIM loss weight")->capture_default_str();
  rd_cmd->add_option("--k-di", rd.k_di, "DISTS weight")->capture_default_str();
  rd_cmd->add_option("--precision", rd.precision, "Frequency precision bits")
      ->check(CLI::Range(glc::kMinPrecisionBits, glc::kMaxPrecisionBits))
      ->capture_default_str();
  rd_cmd->add_flag("--allow-scale-reduction", rd.allow_scale_reduction,
                   "Use fewer scales for small images");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*gen_cmd) return run_gen_model(gen);
    if (*validate_cmd) return run_validate(validate_model_path, validate_dump);
    if (*comp_cmd) {
      if (comp.input.empty() && comp.synthetic.empty()) {
        glc::fail(ErrorKind::kInput, "compress needs --input or --synthetic");
      }
      return run_compress(comp);
    }
    if (*dec_cmd) return run_decompress(dec_input, dec_model, dec_output, dec_hyper);
    if (*met_cmd) return run_metrics(met);
    if (*rd_cmd) return run_rd_report(rd);
  } catch (const Error& e) {
    std::cerr << "error[" << glc::error_kind_name(e.kind()) << "]: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 8;
  }
  return 1;
}
