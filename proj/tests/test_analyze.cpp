// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "cvdcmap/analyze.hpp"
#include "cvdcmap/errors.hpp"
#include "cvdcmap/io.hpp"

using namespace cvdcmap;

namespace {

ScalarImage ramp_image(std::size_t n, double scale = 1.0) {
  ScalarImage img;
  img.width = n;
  img.height = 1;
  for (std::size_t i = 0; i < n; ++i) img.values.push_back(scale * static_cast<double>(i) / (n - 1));
  img.normalized = scale == 1.0;
  return img;
}

}  // namespace

TEST(PerceptualDeltas, ConstantMapIsZero) {
  Colormap c;
  c.entries.assign(10, {0.4, 0.5, 0.6});
  for (double d : perceptual_deltas(c)) EXPECT_EQ(d, 0.0);
}

TEST(PerceptualDeltas, SumToPathLength) {
  const Colormap jet = builtin_colormap("jet");
  const std::vector<double> d = perceptual_deltas(jet);
  ASSERT_EQ(d.size(), jet.size() - 1);
  double total = 0.0;
  for (std::size_t i = 1; i < jet.size(); ++i)
    total += distance(srgb_to_jab(jet.entries[i]), srgb_to_jab(jet.entries[i - 1]));
  EXPECT_NEAR(std::accumulate(d.begin(), d.end(), 0.0), total, 1e-9);
  EXPECT_GT(*std::max_element(d.begin(), d.end()), 0.8);
}

TEST(PerceptualDeltas, NeedTwoEntries) {
  Colormap one;
  one.entries = {{0.0, 0.0, 0.0}};
  EXPECT_THROW(perceptual_deltas(one), DomainError);
}

TEST(GrayscaleReference, LinearLightnessAndNeutral) {
  const Colormap g = grayscale_reference(101);
  ASSERT_EQ(g.size(), 101u);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const SrgbColor& c = g.entries[i];
    EXPECT_EQ(c.r, c.g);
    EXPECT_EQ(c.g, c.b);
    EXPECT_NEAR(srgb_to_jab(c).jp, static_cast<double>(i), 1e-9);
  }
}

TEST(ValueToColor, RoundHalfUp) {
  EXPECT_EQ(value_to_index(0.0, 256), 0u);
  EXPECT_EQ(value_to_index(1.0, 256), 255u);
  EXPECT_EQ(value_to_index(0.5, 256), 128u);
  EXPECT_EQ(value_to_index(0.5, 3), 1u);
  EXPECT_THROW(value_to_index(-0.01, 256), DomainError);
  EXPECT_THROW(value_to_index(1.01, 256), DomainError);
  EXPECT_THROW(value_to_index(std::nan(""), 256), DomainError);
  const Colormap v = builtin_colormap("viridis");
  EXPECT_EQ(value_to_color(0.0, v), v.entries.front());
  EXPECT_EQ(value_to_color(1.0, v), v.entries.back());
}

TEST(NormalizeImage, MinMax) {
  ScalarImage img = ramp_image(5, 7.0);
  img.values[0] = -2.0;
  const ScalarImage n = normalize_image(img);
  EXPECT_TRUE(n.normalized);
  EXPECT_DOUBLE_EQ(n.values[0], 0.0);
  EXPECT_DOUBLE_EQ(n.values[4], 1.0);
  ScalarImage flat = ramp_image(4);
  std::fill(flat.values.begin(), flat.values.end(), 3.0);
  for (double v : normalize_image(flat).values) EXPECT_EQ(v, 0.0);
}

TEST(KovesiImage, BottomRowIsLinearRamp) {
  const ScalarImage img = kovesi_test_image(512, 128, 8.0, 0.05);
  ASSERT_EQ(img.values.size(), 512u * 128u);
  EXPECT_TRUE(img.normalized);
  for (std::size_t x = 0; x < 512; ++x) EXPECT_NEAR(img.at(x, 127), x / 511.0, 1e-15);
}

TEST(KovesiImage, TopRowCarriesFullAmplitude) {
  const ScalarImage img = kovesi_test_image(512, 128, 8.0, 0.05);
  // x = 2 is a quarter period: sin = 1.
  EXPECT_NEAR(img.at(2, 0), 2.0 / 511.0 + 0.05, 1e-12);
  EXPECT_NEAR(img.at(6, 0), 0.0, 1e-12);  // clamped from 6/511 - 0.05
  EXPECT_NEAR(img.at(200, 64), 200.0 / 511.0 + 0.05 * (127.0 - 64.0) / 127.0 * std::sin(std::numbers::pi * 50.0), 1e-12);
}

TEST(KovesiImage, RowMeansStayNearHalf) {
  const ScalarImage img = kovesi_test_image();
  for (std::size_t y = 0; y < img.height; y += 9) {
    double mean = 0.0;
    for (std::size_t x = 0; x < img.width; ++x) mean += img.at(x, y);
    EXPECT_NEAR(mean / img.width, 0.5, 0.01) << y;
  }
  for (double v : img.values) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(KovesiImage, RejectsShortWidth) { EXPECT_THROW(kovesi_test_image(10, 4, 8.0, 0.05), DomainError); }

TEST(Cdps, GrayReferenceHasUnitSlope) {
  const ScalarImage img = kovesi_test_image();
  const CdpsResult r = cdps(img, row_path(img, img.height - 1), grayscale_reference());
  EXPECT_NEAR(r.slope, 1.0, 0.01);
  EXPECT_GE(r.r2, 0.999);
  EXPECT_EQ(r.n_pairs(), 512u * 511u / 2u);
  EXPECT_EQ(r.data_deltas.size(), r.perceptual_deltas.size());
}

TEST(Cdps, GrayReferenceOnAnyNondegeneratePath) {
  const ScalarImage img = kovesi_test_image();
  SamplePath diagonal;
  for (std::size_t i = 0; i < 128; ++i) diagonal.push_back({i * 3, 127 - i});
  const CdpsResult r = cdps(img, diagonal, grayscale_reference());
  EXPECT_NEAR(r.slope, 1.0, 0.01);
  EXPECT_GE(r.r2, 0.999);
}

TEST(Cdps, RankOrderOnRamp) {
  const ScalarImage ramp = ramp_image(256);
  const SamplePath path = row_path(ramp, 0);
  const CdpsResult civ = cdps(ramp, path, builtin_colormap("cividis"));
  const CdpsResult jet = cdps(ramp, path, builtin_colormap("jet"));
  EXPECT_GE(civ.r2, 0.99);
  EXPECT_LT(jet.r2, civ.r2);
}

TEST(Cdps, InvariantToDataScale) {
  const Colormap v = builtin_colormap("viridis");
  const ScalarImage a = ramp_image(64);
  const ScalarImage b = normalize_image(ramp_image(64, 42.0));
  const CdpsResult ra = cdps(a, row_path(a, 0), v);
  const CdpsResult rb = cdps(b, row_path(b, 0), v);
  EXPECT_NEAR(ra.slope, rb.slope, 1e-12);
  EXPECT_NEAR(ra.r2, rb.r2, 1e-12);
}

TEST(Cdps, ConsecutivePairing) {
  const ScalarImage img = kovesi_test_image();
  const CdpsResult r = cdps(img, row_path(img, 0), builtin_colormap("viridis"), {},
                            CdpsPairing::kConsecutive);
  EXPECT_EQ(r.n_pairs(), 511u);
  // On a pure ramp every consecutive data delta is equal: regression undefined.
  const ScalarImage ramp = ramp_image(64);
  EXPECT_THROW(cdps(ramp, row_path(ramp, 0), grayscale_reference(), {}, CdpsPairing::kConsecutive),
               DegenerateDataError);
}

TEST(Cdps, Errors) {
  ScalarImage flat = ramp_image(8);
  std::fill(flat.values.begin(), flat.values.end(), 0.5);
  const Colormap g = grayscale_reference();
  EXPECT_THROW(cdps(flat, row_path(flat, 0), g), DegenerateDataError);
  const ScalarImage ramp = ramp_image(8);
  EXPECT_THROW(cdps(ramp, {{0, 0}, {1, 0}}, g), DomainError);
  EXPECT_THROW(cdps(ramp, {{0, 0}, {1, 0}, {9, 0}}, g), DomainError);
  EXPECT_THROW(cdps(ramp_image(8, 3.0), row_path(ramp, 0), g), DomainError);
  EXPECT_THROW(row_path(ramp, 1), DomainError);
}

TEST(Overlay, ConstantAndRampImages) {
  const Colormap v = builtin_colormap("viridis");
  ScalarImage zeros = ramp_image(6);
  std::fill(zeros.values.begin(), zeros.values.end(), 0.0);
  for (const SrgbColor& c : overlay(zeros, v).pixels) EXPECT_EQ(c, v.entries.front());
  ScalarImage ones = zeros;
  std::fill(ones.values.begin(), ones.values.end(), 1.0);
  for (const SrgbColor& c : overlay(ones, v).pixels) EXPECT_EQ(c, v.entries.back());
  const RgbImage o = overlay(ramp_image(256), v);
  ASSERT_EQ(o.width, 256u);
  for (std::size_t x = 0; x < 256; ++x) EXPECT_EQ(o.at(x, 0), v.entries[x]);
}

TEST(ColormapRamp, SweepsEntries) {
  const Colormap v = builtin_colormap("viridis");
  const RgbImage r = colormap_ramp(v, 256, 4);
  ASSERT_EQ(r.pixels.size(), 256u * 4u);
  for (std::size_t x = 0; x < 256; ++x) EXPECT_EQ(r.at(x, 3), v.entries[x]);
  const RgbImage narrow = colormap_ramp(v, 3, 1);
  EXPECT_EQ(narrow.at(0, 0), v.entries[0]);
  EXPECT_EQ(narrow.at(1, 0), v.entries[128]);
  EXPECT_EQ(narrow.at(2, 0), v.entries[255]);
}
