// SPDX-License-Identifier: Apache-2.0
//
// Colormap evaluation: perceptual deltas, colormap-data perceptual
// sensitivity (CDPS) regression, sine-ramp test images and overlays.
#pragma once

#include <cstddef>
#include <vector>

#include "cvdcmap/colormap.hpp"
#include "cvdcmap/colorspace.hpp"

namespace cvdcmap {

/// Row-major scalar raster; row 0 is the top of the image.
struct ScalarImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> values;
  bool normalized = false;

  double at(std::size_t x, std::size_t y) const { return values[y * width + x]; }
  double& at(std::size_t x, std::size_t y) { return values[y * width + x]; }
};

struct RgbImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<SrgbColor> pixels;

  const SrgbColor& at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }
};

struct PixelCoord {
  std::size_t x = 0;
  std::size_t y = 0;
};

using SamplePath = std::vector<PixelCoord>;

/// How data samples along the path are paired before differencing.
enum class CdpsPairing {
  kAllPairs,     // every (i, j), i < j
  kConsecutive,  // (i, i + 1) only
};

struct CdpsResult {
  std::vector<double> data_deltas;
  std::vector<double> perceptual_deltas;  // already divided by gray_slope
  double slope = 0.0;
  double r2 = 0.0;
  double gray_slope = 0.0;  // raw J'a'b' per data unit of the gray reference

  std::size_t n_pairs() const { return data_deltas.size(); }
};

/// Consecutive-entry J'a'b' distances (N - 1 values).
std::vector<double> perceptual_deltas(const Colormap& cmap, const ViewingConditions& vc = {});

/// Achromatic map with J' linear from 0 to 100.
Colormap grayscale_reference(std::size_t n = 256, const ViewingConditions& vc = {});

/// Nearest entry, index round-half-up(v * (N - 1)). Throws DomainError
/// outside [0, 1].
SrgbColor value_to_color(double v, const Colormap& cmap);
std::size_t value_to_index(double v, std::size_t n);

/// Min-max rescale to [0, 1]. A constant image maps to all zeros.
ScalarImage normalize_image(const ScalarImage& image);

/// Sine-modulated ramp: value(x, y) = clamp01(x / (w - 1) + A(y) sin(2 pi x / wavelength))
/// with A rising linearly from 0 on the bottom row to max_amplitude on the top row.
ScalarImage kovesi_test_image(std::size_t width = 512, std::size_t height = 128,
                              double wavelength_px = 8.0, double max_amplitude = 0.05);

/// Every pixel of one row, left to right.
SamplePath row_path(const ScalarImage& image, std::size_t row);

void validate_path(const SamplePath& path, const ScalarImage& image);

/// Throws DegenerateDataError when the data deltas have no spread.
CdpsResult cdps(const ScalarImage& image, const SamplePath& path, const Colormap& cmap,
                const ViewingConditions& vc = {}, CdpsPairing pairing = CdpsPairing::kAllPairs);

RgbImage overlay(const ScalarImage& image, const Colormap& cmap);

/// width x height strip sweeping the entries left to right.
RgbImage colormap_ramp(const Colormap& cmap, std::size_t width = 256, std::size_t height = 32);

/// Grayscale rendering of a normalized scalar image (channels = value).
RgbImage scalar_to_gray(const ScalarImage& image);

}  // namespace cvdcmap
