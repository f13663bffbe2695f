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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "glc/alphabet.h"
#include "glc/distributions.h"
#include "glc/error.h"
#include "glc/factorized.h"
#include "glc/gllmm.h"
#include "glc/validation.h"
#include "oracles.h"

namespace glc {
namespace {

// Mixture with every weight on one family's first component.
GllmmParams single(Family family, double mean, double spread) {
  GllmmParams p = GllmmParams::standard();
  p.family_weights = {0, 0, 0};
  p.family_weights[static_cast<size_t>(family)] = 1.0;
  auto& comps = p.family(family);
  comps[0] = {1.0, mean, spread};
  comps[1].weight = comps[2].weight = 0.0;
  return p;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorKind::kInput;
}

TEST(FamilyCdf, ClosedFormValues) {
  EXPECT_DOUBLE_EQ(gaussian_cdf(0, 0, 1), 0.5);
  EXPECT_NEAR(gaussian_cdf(0.5, 0, 1), 0.6914625, 5e-8);
  EXPECT_DOUBLE_EQ(gaussian_cdf(3.25, 3.25, 7.0), 0.5);
  EXPECT_DOUBLE_EQ(laplace_cdf(0, 0, 1), 0.5);
  EXPECT_NEAR(laplace_cdf(0.5, 0, 1), 0.6967347, 5e-8);
  EXPECT_NEAR(laplace_cdf(-3, 0, 1), 0.0248935, 5e-8);
  EXPECT_DOUBLE_EQ(logistic_cdf(0, 0, 1), 0.5);
  EXPECT_NEAR(logistic_cdf(0.5, 0, 1), 0.6224593, 5e-8);
  EXPECT_NEAR(logistic_cdf(50, 0, 1), 1.0, 1e-15);
  EXPECT_GE(logistic_cdf(-800, 0, 1), 0.0);
  EXPECT_LE(logistic_cdf(800, 0, 1), 1.0);
}

TEST(FamilyCdf, MatchesQuadratureOfDensity) {
  const double gauss = oracle::integrate([](double x) { return oracle::normal_pdf(x, 0, 1); },
                                         -40.0, 0.5);
  EXPECT_NEAR(gaussian_cdf(0.5, 0, 1), gauss, 1e-12);
  const double lap = oracle::integrate([](double x) { return oracle::laplace_pdf(x, 0, 1); },
                                       -60.0, 0.5, {0.0});
  EXPECT_NEAR(laplace_cdf(0.5, 0, 1), lap, 1e-12);
  const double logi = oracle::integrate([](double x) { return oracle::logistic_pdf(x, 0, 1); },
                                        -60.0, 0.5);
  EXPECT_NEAR(logistic_cdf(0.5, 0, 1), logi, 1e-12);
}

TEST(FamilyCdf, DomainErrors) {
  EXPECT_EQ(kind_of([] { gaussian_cdf(0, 0, 0); }), ErrorKind::kParameterDomain);
  EXPECT_EQ(kind_of([] { gaussian_cdf(NAN, 0, 1); }), ErrorKind::kParameterDomain);
  EXPECT_EQ(kind_of([] { laplace_cdf(0, 0, -1); }), ErrorKind::kParameterDomain);
  EXPECT_EQ(kind_of([] { logistic_cdf(0, INFINITY, 1); }), ErrorKind::kParameterDomain);
}

TEST(FamilyCdf, MonotoneAndSaturatingTails) {
  for (auto cdf : {gaussian_cdf, laplace_cdf, logistic_cdf}) {
    double prev = 0.0;
    for (double x = -30; x <= 30; x += 0.01) {
      const double v = cdf(x, 0, 1);
      ASSERT_GE(v, prev);
      prev = v;
    }
    EXPECT_LT(cdf(-1e4, 0, 1), 1e-12);
    EXPECT_GT(cdf(1e4, 0, 1), 1 - 1e-12);
  }
}

TEST(GllmmCdf, Examples) {
  GllmmParams p = GllmmParams::standard();
  p.family_weights = {0.2, 0.5, 0.3};
  EXPECT_NEAR(gllmm_cdf(p, 0.0), 0.5, 1e-15);
  EXPECT_NEAR(gllmm_cdf(single(Family::kGaussian, 0, 1), 0.5), 0.6914625, 5e-8);

  GllmmParams thirds;
  for (size_t f = 0; f < 3; ++f) thirds.components[f] = {{1.0, 0.0, 1.0}};
  EXPECT_NEAR(gllmm_cdf(thirds, 0.5), 0.6702188, 5e-8);
}

TEST(GllmmCdf, SingleFamilyReductions) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const double mean = uniform(rng, -5, 5);
    const double spread = uniform(rng, 0.1, 4);
    const double x = uniform(rng, -12, 12);
    EXPECT_NEAR(gllmm_cdf(single(Family::kGaussian, mean, spread), x),
                gaussian_cdf(x, mean, spread), 1e-12);
    EXPECT_NEAR(gllmm_cdf(single(Family::kLaplace, mean, spread), x),
                laplace_cdf(x, mean, spread), 1e-12);
    EXPECT_NEAR(gllmm_cdf(single(Family::kLogistic, mean, spread), x),
                logistic_cdf(x, mean, spread), 1e-12);
  }
}

TEST(GllmmCdf, PermutationInvariantWithinFamily) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    GllmmParams p = oracle::random_gllmm(rng);
    GllmmParams q = p;
    for (auto& comps : q.components) std::reverse(comps.begin(), comps.end());
    std::swap(q.family(Family::kLaplace)[0], q.family(Family::kLaplace)[1]);
    for (double x = -10; x <= 10; x += 0.37) {
      EXPECT_NEAR(gllmm_cdf(p, x), gllmm_cdf(q, x), 1e-14);
    }
  }
}

TEST(GllmmCdf, MonotoneOnGrid) {
  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    const GllmmParams p = oracle::random_gllmm(rng);
    double prev = gllmm_cdf(p, -60);
    for (double x = -60; x <= 60; x += 0.05) {
      const double v = gllmm_cdf(p, x);
      ASSERT_GE(v, prev);
      prev = v;
    }
  }
  const GllmmParams unit = GllmmParams::standard();
  EXPECT_LT(gllmm_cdf(unit, -1e4), 1e-12);
  EXPECT_GT(gllmm_cdf(unit, 1e4), 1 - 1e-12);
}

TEST(DiscretizedProb, Examples) {
  const SymbolAlphabet wide(-128, 127);
  EXPECT_NEAR(discretized_prob(single(Family::kGaussian, 0, 1), 0, wide), 0.3829249, 5e-8);
  EXPECT_NEAR(discretized_prob(single(Family::kLaplace, 0, 1), 0, wide), 0.3934693, 5e-8);
  EXPECT_NEAR(discretized_prob(single(Family::kGaussian, 0, 1), 0, wide),
              oracle::integrate([](double x) { return oracle::normal_pdf(x, 0, 1); }, -0.5, 0.5),
              1e-12);
}

TEST(DiscretizedProb, SymmetricParamsGiveSymmetricBins) {
  GllmmParams p = GllmmParams::standard();
  p.family(Family::kGaussian)[1].spread = 4.0;
  p.family(Family::kLaplace)[2].spread = 0.3;
  const SymbolAlphabet a(-20, 20);
  for (int k = 1; k < 20; ++k) {
    EXPECT_NEAR(discretized_prob(p, k, a), discretized_prob(p, -k, a), 1e-15);
  }
}

TEST(DiscretizedProb, BoundaryBinsAbsorbTails) {
  const GllmmParams p = single(Family::kLaplace, 0, 2);
  const SymbolAlphabet a(-3, 3);
  EXPECT_NEAR(discretized_prob(p, -3, a), laplace_cdf(-2.5, 0, 2), 1e-15);
  EXPECT_NEAR(discretized_prob(p, 3, a), 1 - laplace_cdf(2.5, 0, 2), 1e-15);
  const auto masses = discretized_masses(p, a);
  EXPECT_NEAR(std::accumulate(masses.begin(), masses.end(), 0.0), 1.0, 1e-15);
  for (int k = -3; k <= 3; ++k) {
    EXPECT_NEAR(masses[a.index_of(k)], discretized_prob(p, k, a), 1e-15);
  }
}

TEST(DiscretizedProb, OutOfAlphabet) {
  const SymbolAlphabet a(-4, 4);
  EXPECT_EQ(kind_of([&] { discretized_prob(GllmmParams::standard(), 5, a); }),
            ErrorKind::kOutOfAlphabet);
}

TEST(DiscretizedProb, RandomizedSumsAndQuadrature) {
  Rng rng(2024);
  const SymbolAlphabet a(-24, 24);
  for (int t = 0; t < 100; ++t) {
    const GllmmParams p = oracle::random_gllmm(rng);
    const auto masses = discretized_masses(p, a);
    EXPECT_NEAR(std::accumulate(masses.begin(), masses.end(), 0.0), 1.0, 1e-6);
    for (int k = a.min_symbol() + 1; k < a.max_symbol(); k += 3) {
      ASSERT_NEAR(discretized_prob(p, k, a), oracle::mixture_bin_mass(p, k - 0.5, k + 0.5), 1e-9)
          << "trial " << t << " bin " << k;
    }
  }
}

TEST(DiscreteDistribution, FloorAndRenormalize) {
  const SymbolAlphabet a(0, 255);
  std::vector<double> point(256, 0.0);
  point[17] = 1.0;
  const auto d = DiscreteDistribution::from_masses(a, point);
  const auto& probs = d.probabilities();
  EXPECT_NEAR(std::accumulate(probs.begin(), probs.end(), 0.0), 1.0, 1e-12);
  for (double p : probs) EXPECT_GE(p, DiscreteDistribution::kProbabilityFloor);
  EXPECT_DOUBLE_EQ(d.probability(3), DiscreteDistribution::kProbabilityFloor);
  EXPECT_NEAR(d.probability(17), 1.0 - 255 * DiscreteDistribution::kProbabilityFloor, 1e-15);
  EXPECT_EQ(kind_of([&] { d.probability(256); }), ErrorKind::kOutOfAlphabet);
}

TEST(DiscreteDistribution, LargerBinsKeepTheirRatios) {
  const SymbolAlphabet a(0, 3);
  const auto d = DiscreteDistribution::from_masses(a, {0.5, 0.3, 0.2, 0.0});
  EXPECT_NEAR(d.probability(0) / d.probability(1), 0.5 / 0.3, 1e-12);
  EXPECT_DOUBLE_EQ(d.probability(3), DiscreteDistribution::kProbabilityFloor);
}

TEST(SymbolAlphabetTest, Invariants) {
  EXPECT_EQ(SymbolAlphabet(-128, 127).span(), 256u);
  EXPECT_EQ(kind_of([] { SymbolAlphabet(3, 3); }), ErrorKind::kInput);
  EXPECT_EQ(kind_of([] { SymbolAlphabet(-40000, 0); }), ErrorKind::kInput);
  EXPECT_EQ(SymbolAlphabet(-32768, 32767).span(), 65536u);
}

TEST(Factorized, IdentityReducesToLogistic) {
  const auto params = FactorizedDensityParams::identity(2);
  const SymbolAlphabet a(-64, 63);
  EXPECT_NEAR(factorized_prob(params, 0, 0, a), 0.2449187, 5e-8);
  for (double x = -8; x <= 8; x += 0.25) {
    EXPECT_NEAR(factorized_cdf(params, 1, x), logistic_cdf(x, 0, 1), 1e-14);
  }
}

FactorizedDensityParams random_factorized(Rng& rng, size_t channels) {
  auto p = FactorizedDensityParams::identity(channels);
  for (auto& ch : p.channels) {
    for (auto& l : ch.layers) {
      for (double& v : l.weight) v = uniform(rng, -1.5, 1.5);
      for (double& v : l.bias) v = uniform(rng, -2, 2);
      for (double& v : l.gate) v = uniform(rng, -3, 3);
    }
  }
  return p;
}

TEST(Factorized, SumsToOneAndValidates) {
  Rng rng(8);
  const SymbolAlphabet a(-32, 31);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_factorized(rng, 3);
    ASSERT_TRUE(validate_params(p).ok()) << validate_params(p).to_string();
    for (size_t ch = 0; ch < 3; ++ch) {
      double sum = 0.0;
      for (int k = a.min_symbol(); k <= a.max_symbol(); ++k) sum += factorized_prob(p, ch, k, a);
      EXPECT_NEAR(sum, 1.0, 1e-6);
    }
  }
}

TEST(Factorized, BinsDecreaseRightOfTheLastMode) {
  Rng rng(9);
  const SymbolAlphabet a(-40, 40);
  for (int t = 0; t < 50; ++t) {
    const auto p = random_factorized(rng, 1);
    // Dense tabulation of the density by central differences of c.
    const double h = 1e-3;
    double last_rise = -40.0;
    double prev = -1.0;
    for (double x = -40.0; x <= 40.0; x += 0.01) {
      const double dens = (factorized_cdf(p, 0, x + h) - factorized_cdf(p, 0, x - h)) / (2 * h);
      if (dens > prev + 1e-12) last_rise = x;
      prev = dens;
    }
    for (int k = static_cast<int>(std::ceil(last_rise + 0.5)); k + 1 < a.max_symbol(); ++k) {
      EXPECT_GE(factorized_prob(p, 0, k, a) + 1e-15, factorized_prob(p, 0, k + 1, a));
    }
  }
}

TEST(Factorized, Errors) {
  const auto p = FactorizedDensityParams::identity(2);
  const SymbolAlphabet a(-4, 4);
  EXPECT_EQ(kind_of([&] { factorized_prob(p, 2, 0, a); }), ErrorKind::kLookup);
  EXPECT_EQ(kind_of([&] { factorized_prob(p, 0, 9, a); }), ErrorKind::kOutOfAlphabet);
}

TEST(Validation, DefaultParamsAreClean) {
  EXPECT_TRUE(validate_params(GllmmParams::standard()).ok());
  EXPECT_TRUE(validate_params(FactorizedDensityParams::identity(4)).ok());
}

TEST(Validation, FamilyWeightSum) {
  GllmmParams p = GllmmParams::standard();
  p.family_weights = {0.5, 0.5, 0.5};
  const auto report = validate_params(p);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].rule, rules::kFamilyWeightSum);
}

TEST(Validation, GaussianVariancePositivity) {
  GllmmParams p = GllmmParams::standard();
  p.family(Family::kGaussian)[1].spread = 0.0;
  const auto report = validate_params(p);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].rule, rules::kPositivity);
  EXPECT_NE(report.violations[0].location.find("gaussian[1]"), std::string::npos);
}

TEST(Validation, ListsEveryViolation) {
  GllmmParams p = GllmmParams::standard();
  p.family_weights = {1.2, -0.1, -0.1};
  p.family(Family::kLaplace)[0].spread = 1e-9;
  p.family(Family::kLogistic)[2].weight = 0.9;
  p.family(Family::kLogistic)[1].mean = NAN;
  const auto report = validate_params(p);
  std::vector<std::string> found;
  for (const auto& v : report.violations) found.push_back(v.rule);
  auto has = [&](const char* r) { return std::count(found.begin(), found.end(), r); };
  EXPECT_EQ(has(rules::kNonNegative), 2);
  EXPECT_EQ(has(rules::kMinScale), 1);
  EXPECT_EQ(has(rules::kComponentWeightSum), 1);
  EXPECT_EQ(has(rules::kFinite), 1);
  EXPECT_EQ(has(rules::kFamilyWeightSum), 0);  // 1.2 - 0.1 - 0.1 == 1
}

TEST(Validation, FactorizedShapeAndFiniteness) {
  auto p = FactorizedDensityParams::identity(2);
  p.channels[0].layers[1].bias.pop_back();
  p.channels[1].layers[0].gate[2] = INFINITY;
  const auto report = validate_params(p);
  ASSERT_EQ(report.violations.size(), 2u);
  EXPECT_EQ(report.violations[0].rule, rules::kLayerShape);
  EXPECT_EQ(report.violations[1].rule, rules::kFinite);
}

}  // namespace
}  // namespace glc
