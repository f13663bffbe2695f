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

// Runs the acceptance suite and prints one PASS/FAIL line per criterion.
//
//   glc_acceptance <path to glc cli> <scratch directory>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "glc/cdf_table.h"
#include "glc/container.h"
#include "glc/distributions.h"
#include "glc/dists.h"
#include "glc/error.h"
#include "glc/image.h"
#include "glc/model.h"
#include "glc/ms_ssim.h"
#include "glc/rdo.h"
#include "glc/synth.h"
#include "oracles.h"

namespace fs = std::filesystem;
using namespace glc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

fs::path g_cli;
fs::path g_work;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  const fs::path out = g_work / "stdout.txt";
  const fs::path err = g_work / "stderr.txt";
  const std::string cmd = "\"" + g_cli.string() + "\" " + args + " >\"" + out.string() +
                          "\" 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

// 1. Discretization against quadrature.
Outcome discretization_oracle() {
  Outcome o;
  Rng rng(1001);
  const SymbolAlphabet a(-24, 24);
  double worst_bin = 0.0, worst_sum = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const GllmmParams p = oracle::random_gllmm(rng);
    const auto masses = discretized_masses(p, a);
    worst_sum = std::max(worst_sum, std::abs(std::accumulate(masses.begin(), masses.end(), 0.0) - 1));
    for (int k = a.min_symbol() + 1; k < a.max_symbol(); ++k) {
      const double d = std::abs(discretized_prob(p, k, a) - oracle::mixture_bin_mass(p, k - 0.5, k + 0.5));
      worst_bin = std::max(worst_bin, d);
    }
  }
  o.require(worst_bin <= 1e-9, "bin error " + fmt("%.3g", worst_bin));
  o.require(worst_sum <= 1e-6, "sum error " + fmt("%.3g", worst_sum));
  o.detail = o.pass ? "max bin error " + fmt("%.3g", worst_bin) + ", max sum error " +
                          fmt("%.3g", worst_sum)
                    : o.detail;
  return o;
}

// 2. Single-family reductions against closed forms.
Outcome reductions() {
  Outcome o;
  Rng rng(1002);
  double worst = 0.0;
  for (int t = 0; t < 2000; ++t) {
    const double mean = uniform(rng, -10, 10), spread = uniform(rng, 0.01, 10),
                 x = uniform(rng, -30, 30);
    for (int f = 0; f < 3; ++f) {
      GllmmParams p = GllmmParams::standard();
      p.family_weights = {0, 0, 0};
      p.family_weights[f] = 1;
      p.components[f] = {{1.0, mean, spread}};
      double closed;
      if (f == 0) {
        closed = 0.5 * std::erfc(-(x - mean) / std::sqrt(2 * spread));
      } else if (f == 1) {
        closed = x < mean ? 0.5 * std::exp((x - mean) / spread)
                          : 1 - 0.5 * std::exp(-(x - mean) / spread);
      } else {
        closed = 1 / (1 + std::exp(-(x - mean) / spread));
      }
      worst = std::max(worst, std::abs(gllmm_cdf(p, x) - closed));
    }
  }
  o.require(worst <= 1e-12, "max error " + fmt("%.3g", worst));
  if (o.pass) o.detail = "max error " + fmt("%.3g", worst);
  return o;
}

// 3. Lossless round trips.
Outcome lossless() {
  Outcome o;
  Rng rng(1003);
  int failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const int lo = -1 - static_cast<int>(uniform01(rng) * 127);
    const int hi = 1 + static_cast<int>(uniform01(rng) * 126);
    const SymbolAlphabet a(lo, hi);
    const int prec = std::max<int>(9 + static_cast<int>(uniform01(rng) * 8),
                                   static_cast<int>(std::ceil(std::log2(a.span() + 1))));
    const TensorShape shape{1 + static_cast<size_t>(uniform01(rng) * 4),
                            1 + static_cast<size_t>(uniform01(rng) * 12),
                            1 + static_cast<size_t>(uniform01(rng) * 12)};
    std::vector<DiscreteDistribution> dists;
    std::vector<GllmmParams> params;
    for (size_t c = 0; c < shape.channels; ++c) {
      params.push_back(oracle::random_gllmm(rng, 3, 3, 3, 16.0));
      dists.push_back(discretize(params.back(), a));
    }
    const auto tables = build_cdf_tables(DistributionMap::per_channel(dists), std::min(prec, 16));
    const LatentTensor latent =
        synth_latents(EntryMap<GllmmParams>::per_channel(params), shape, a, rng());
    const Bitstream s = encode(latent, tables, 0, std::min(prec, 16));
    const auto bytes = serialize_bitstream(s);
    try {
      if (decode(parse_bitstream(bytes), tables) != latent) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  o.require(failures == 0, std::to_string(failures) + " failures");
  if (o.pass) o.detail = "1000/1000 exact";
  return o;
}

// 4. Payload vs Shannon sums at 1e5 symbols.
Outcome rate_optimality() {
  Outcome o;
  const EntropyModel m = generate_model({.channels = 4, .seed = 1004});
  const TensorShape shape{4, 125, 200};
  const auto syn = synth_model_latents(m, shape, 1004);
  const auto dists = latent_distributions(m);
  const auto tables = build_cdf_tables(dists);
  const auto payload = encode_symbols(syn.latent, tables, kDefaultPrecisionBits);
  double fixed = 0.0, slack = 0.0;
  for (size_t c = 0; c < shape.channels; ++c) {
    const CdfTable& t = tables.at(c, 0, 0);
    const auto& probs = dists.at(c, 0, 0).probabilities();
    for (size_t i = 0; i < shape.height * shape.width; ++i) {
      const size_t k = t.alphabet().index_of(syn.latent.values()[c * shape.height * shape.width + i]);
      const double q = t.freq(k) / static_cast<double>(t.total());
      fixed -= std::log2(q);
      slack += std::abs(std::log2(q / probs[k]));
    }
  }
  const double measured = 8.0 * payload.size();
  const double real = rate_bits(syn.latent, dists);
  // The flush may land a few bits under the sum; it never costs more than 64.
  o.require(measured >= fixed - 16.0 && measured - fixed <= 64.0,
            "payload minus fixed-point sum = " + fmt("%.2f", measured - fixed));
  o.require(std::abs(measured - real) <= 0.01 * real + slack + 64.0,
            "real estimate " + fmt("%.1f", real) + " vs measured " + fmt("%.0f", measured));
  if (o.pass) {
    o.detail = "overhead " + fmt("%.2f", measured - fixed) + " bits, real-estimate gap " +
               fmt("%.3f%%", 100 * std::abs(measured - real) / real);
  }
  return o;
}

// 5. Sampling frequencies.
Outcome sampling() {
  Outcome o;
  Rng rng(1005);
  const SymbolAlphabet a(-32, 31);
  int bins = 0;
  double worst_z = 0.0;
  for (int t = 0; t < 3; ++t) {
    const GllmmParams p = oracle::random_gllmm(rng, 3, 3, 3, 6.0);
    const TensorShape shape{1, 1000, 1000};
    const LatentTensor lt = synth_latents(EntryMap<GllmmParams>::shared(p), shape, a, rng());
    std::vector<double> counts(a.span(), 0.0);
    for (int32_t v : lt.values()) counts[a.index_of(v)] += 1;
    const auto masses = discretized_masses(p, a);
    for (size_t i = 0; i < masses.size(); ++i) {
      if (masses[i] < 1e-3) continue;
      const double se = std::sqrt(masses[i] * (1 - masses[i]) / 1e6);
      worst_z = std::max(worst_z, std::abs(counts[i] / 1e6 - masses[i]) / se);
      ++bins;
    }
  }
  o.require(worst_z <= 3.0, "max |z| " + fmt("%.2f", worst_z));
  if (o.pass) o.detail = std::to_string(bins) + " bins, max |z| " + fmt("%.2f", worst_z);
  return o;
}

// 6. MS-SSIM.
Outcome ms_ssim_checks() {
  Outcome o;
  Rng rng(1006);
  double worst = 0.0, identity = 0.0;
  bool monotone = true;
  for (int t = 0; t < 20; ++t) {
    const ImageRaster ref = oracle::random_image(rng, 256, 256);
    identity = std::max(identity, std::abs(ms_ssim(ref, ref) - 1.0));
    const ImageRaster dist = oracle::add_noise(rng, ref, 2.0 + 2.0 * t);
    worst = std::max(worst, std::abs(ms_ssim(ref, dist) - oracle::reference_ms_ssim(ref, dist)));
  }
  const ImageRaster ref = oracle::random_image(rng, 256, 256);
  double prev = 1.0;
  for (double spread : {2.0, 5.0, 10.0, 20.0, 40.0}) {
    const double s = ms_ssim(ref, oracle::add_noise(rng, ref, spread));
    monotone = monotone && s < prev;
    prev = s;
  }
  o.require(identity <= 1e-9, "identity error " + fmt("%.3g", identity));
  o.require(worst <= 1e-6, "reference gap " + fmt("%.3g", worst));
  o.require(monotone, "score not decreasing with noise");
  if (o.pass) o.detail = "max reference gap " + fmt("%.3g", worst);
  return o;
}

// 7. DISTS.
Outcome dists_checks() {
  Outcome o;
  Rng rng(1007);
  FeatureStack f;
  for (size_t c : {3, 6}) {
    FeatureMap m{c, 5, 5, {}};
    for (size_t i = 0; i < c * 25; ++i) m.values.push_back(static_cast<float>(uniform(rng, -1, 4)));
    f.stages.push_back(m);
  }
  const double id = dists_score(f, f, DistsWeights::uniform(f));
  o.require(std::abs(id) <= 1e-9, "identity " + fmt("%.3g", id));

  const FeatureStack x{{FeatureMap{1, 2, 2, {1, 2, 3, 4}}}};
  const FeatureStack y{{FeatureMap{1, 2, 2, {2, 2, 2, 6}}}};
  const double c = 1e-6;
  const double l = (2 * 2.5 * 3.0 + c) / (2.5 * 2.5 + 9.0 + c);
  const double s = (2 * 1.5 + c) / (1.25 + 3.0 + c);
  const double hand = 1 - 0.5 * l - 0.5 * s;
  const double got = dists_score(x, y, DistsWeights{{{0.5}}, {{0.5}}});
  o.require(std::abs(got - hand) <= 1e-12, "hand case gap " + fmt("%.3g", got - hand));

  bool rejected = false;
  try {
    dists_score(x, y, DistsWeights{{{0.5}}, {{0.6}}});
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::kInput;
  }
  o.require(rejected, "non-normalized weights accepted");
  if (o.pass) o.detail = "hand case gap " + fmt("%.3g", got - hand);
  return o;
}

bool write_manifest_inputs(const fs::path& dir) {
  Rng rng(1008);
  const ImageRaster ref = oracle::random_image(rng, 180, 180);
  save_ppm(dir / "ref.ppm", ref);
  save_ppm(dir / "dist.ppm", oracle::add_noise(rng, ref, 8.0));
  std::ofstream(dir / "manifest.txt") << "# id reference distorted latent\n"
                                      << "img1 ref.ppm dist.ppm synthetic:8x11x11:3\n"
                                      << "img0 ref.ppm ref.ppm synthetic:8x11x11:4\n";
  return true;
}

// 8. Default constants surfaced by the CLI.
Outcome constants() {
  Outcome o;
  const RdoConfig cfg;
  o.require(cfg.lambdas == std::vector<double>({2, 1, 0.5}), "default lambdas");
  o.require(cfg.k_ms == 23.90625 && cfg.k_ms == 765.0 / 32.0, "default k_ms");
  o.require(cfg.k_di == 1.0, "default k_di");
  const ModelGenOptions mg;
  o.require(mg.gaussian_components == 3 && mg.laplace_components == 3 &&
                mg.logistic_components == 3,
            "default K, M, N");

  const fs::path dir = g_work / "c8";
  fs::create_directories(dir);
  const RunResult gen = run("gen-model --output " + q(dir / "m.glmp") + " --seed 8");
  o.require(gen.exit_code == 0 && gen.out.find("K=3 M=3 N=3") != std::string::npos,
            "gen-model output: " + gen.out + gen.err);
  write_manifest_inputs(dir);
  const RunResult met = run("metrics " + q(dir / "ref.ppm") + " " + q(dir / "dist.ppm"));
  o.require(met.exit_code == 0 && met.out.find("k_ms=23.90625") != std::string::npos &&
                met.out.find("k_di=1") != std::string::npos,
            "metrics output: " + met.out + met.err);
  const RunResult rd = run("rd-report --input " + q(dir / "manifest.txt") + " --model " +
                           q(dir / "m.glmp") + " --output " + q(dir / "rd.csv"));
  std::istringstream csv(slurp(dir / "rd.csv"));
  std::string line;
  std::getline(csv, line);
  std::map<std::string, std::vector<std::string>> lambdas;
  while (std::getline(csv, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    if (cells.size() == 10) lambdas[cells[0]].push_back(cells[2]);
  }
  const std::vector<std::string> expect = {"2", "1", "0.5"};
  o.require(rd.exit_code == 0 && lambdas.size() == 2 && lambdas["img0"] == expect &&
                lambdas["img1"] == expect,
            "rd-report rows: " + rd.err);
  if (o.pass) o.detail = "lambda {2,1,0.5}, k_ms 23.90625, k_di 1, K=M=N=3, 3 rows/input";
  return o;
}

// 9. Byte-identical outputs on repeated runs.
Outcome determinism() {
  Outcome o;
  const fs::path dir = g_work / "c9";
  fs::create_directories(dir);
  write_manifest_inputs(dir);
  std::string first[3];
  for (int rep = 0; rep < 2; ++rep) {
    const std::string tag = std::to_string(rep);
    const fs::path model = dir / ("m" + tag + ".glmp");
    const fs::path glc = dir / ("c" + tag + ".glc");
    const fs::path csv = dir / ("r" + tag + ".csv");
    const int a = run("gen-model --output " + q(model) + " --seed 99").exit_code;
    const int b = run("compress --model " + q(model) + " --synthetic 8x16x24 --seed 5 --output " +
                      q(glc)).exit_code;
    const int c = run("rd-report --input " + q(dir / "manifest.txt") + " --model " + q(model) +
                      " --output " + q(csv)).exit_code;
    o.require(a == 0 && b == 0 && c == 0, "command failed on run " + tag);
    const std::string got[3] = {slurp(model), slurp(glc), slurp(csv)};
    for (int i = 0; i < 3; ++i) {
      if (rep == 0) {
        first[i] = got[i];
        o.require(!got[i].empty(), "empty output");
      } else {
        o.require(got[i] == first[i], "output " + std::to_string(i) + " differs");
      }
    }
  }
  if (o.pass) o.detail = "model, container and CSV identical across runs";
  return o;
}

// 10. Designated diagnostics for damaged inputs.
Outcome error_contract() {
  Outcome o;
  const fs::path dir = g_work / "c10";
  fs::create_directories(dir);
  const fs::path model = dir / "m.glmp";
  const fs::path glc = dir / "c.glc";
  run("gen-model --output " + q(model) + " --seed 10");
  run("compress --model " + q(model) + " --synthetic 8x8x8 --seed 1 --output " + q(glc));
  const std::string good = slurp(glc);
  o.require(good.size() > kContainerHeaderBytes, "no container produced");

  auto expect_fail = [&](const std::string& args, const std::string& diag, const fs::path& out) {
    fs::remove(out);
    const RunResult r = run(args);
    o.require(r.exit_code != 0, args + " exited 0");
    o.require(r.err.find(diag) != std::string::npos, "missing " + diag + " in: " + r.err);
    o.require(!fs::exists(out), "output written for " + args);
  };
  const fs::path out = dir / "out.gltn";

  std::ofstream(dir / "trunc.glc", std::ios::binary) << good.substr(0, good.size() - 1);
  expect_fail("decompress --input " + q(dir / "trunc.glc") + " --model " + q(model) +
                  " --output " + q(out),
              "error[corruption]", out);

  std::string bad = good;
  bad[10] = static_cast<char>(bad[10] ^ 0x01);  // shape field
  std::ofstream(dir / "crc.glc", std::ios::binary) << bad;
  expect_fail("decompress --input " + q(dir / "crc.glc") + " --model " + q(model) +
                  " --output " + q(out),
              "error[corruption]", out);

  EntropyModel m = load_model(model);
  m.latent_channels[0].family_weights = {0.5, 0.5, 0.5};
  save_model(dir / "bad.glmp", m);
  expect_fail("validate --model " + q(dir / "bad.glmp"), "family-weight-sum", out);
  expect_fail("compress --model " + q(dir / "bad.glmp") + " --synthetic 8x8x8 --output " +
                  q(dir / "x.glc"),
              "error[validation]", dir / "x.glc");
  if (o.pass) o.detail = "truncation, checksum and invalid model all rejected";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: %s <glc cli> <scratch dir>\n", argv[0]);
    return 2;
  }
  g_cli = fs::absolute(argv[1]);
  g_work = fs::absolute(argv[2]);
  fs::remove_all(g_work);
  fs::create_directories(g_work);

  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"discretization matches quadrature", discretization_oracle},
      {"single-family reductions", reductions},
      {"lossless round trips", lossless},
      {"rate near-optimality", rate_optimality},
      {"sampling consistency", sampling},
      {"MS-SSIM correctness", ms_ssim_checks},
      {"DISTS aggregation", dists_checks},
      {"default constants", constants},
      {"determinism", determinism},
      {"error contract", error_contract},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
