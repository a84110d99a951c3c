// SPDX-License-Identifier: Apache-2.0

#include "cvdcmap/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cvdcmap/errors.hpp"
#include "cvdcmap/stats.hpp"

namespace cvdcmap {

namespace {

std::vector<JabColor> entries_to_jab(const Colormap& cmap, const CamUcs& cam) {
  std::vector<JabColor> out;
  out.reserve(cmap.size());
  for (const SrgbColor& c : cmap.entries) out.push_back(cam.srgb_to_jab(c));
  return out;
}

}  // namespace

std::vector<double> perceptual_deltas(const Colormap& cmap, const ViewingConditions& vc) {
  if (cmap.size() < 2) throw DomainError("perceptual deltas need at least two entries");
  const std::vector<JabColor> jab = entries_to_jab(cmap, CamUcs(vc));
  std::vector<double> deltas;
  deltas.reserve(jab.size() - 1);
  for (std::size_t i = 1; i < jab.size(); ++i) deltas.push_back(distance(jab[i - 1], jab[i]));
  return deltas;
}

Colormap grayscale_reference(std::size_t n, const ViewingConditions& vc) {
  if (n < 2) throw DomainError("colormap needs at least two entries");
  const CamUcs cam(vc);
  Colormap out;
  out.name = "grayscale-jp";
  out.entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double jp = 100.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    const SrgbColor c = clamp_gamut(cam.jab_to_srgb({jp, 0.0, 0.0}));
    // Achromatic: force exactly equal channels.
    const double g = (c.r + c.g + c.b) / 3.0;
    out.entries.push_back({g, g, g});
  }
  out.metadata["source"] = "analytic linear-J' achromatic ramp";
  return out;
}

std::size_t value_to_index(double v, std::size_t n) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError("data value outside [0, 1]");
  if (n == 0) throw DomainError("empty colormap");
  return static_cast<std::size_t>(std::floor(v * static_cast<double>(n - 1) + 0.5));
}

SrgbColor value_to_color(double v, const Colormap& cmap) {
  return cmap.entries[value_to_index(v, cmap.size())];
}

ScalarImage normalize_image(const ScalarImage& image) {
  ScalarImage out = image;
  out.normalized = true;
  if (image.values.empty()) return out;
  const auto [lo, hi] = std::minmax_element(image.values.begin(), image.values.end());
  const double span = *hi - *lo;
  for (double& v : out.values) v = span > 0.0 ? (v - *lo) / span : 0.0;
  return out;
}

ScalarImage kovesi_test_image(std::size_t width, std::size_t height, double wavelength_px,
                              double max_amplitude) {
  if (height < 1 || width < 2) throw DomainError("test image needs width >= 2 and height >= 1");
  if (!(wavelength_px > 0.0) || static_cast<double>(width) < 2.0 * wavelength_px)
    throw DomainError("test image width must be at least twice the wavelength");
  ScalarImage img;
  img.width = width;
  img.height = height;
  img.values.resize(width * height);
  img.normalized = true;
  for (std::size_t y = 0; y < height; ++y) {
    const double amp = height > 1 ? max_amplitude * static_cast<double>(height - 1 - y) /
                                        static_cast<double>(height - 1)
                                  : 0.0;
    for (std::size_t x = 0; x < width; ++x) {
      const double ramp = static_cast<double>(x) / static_cast<double>(width - 1);
      const double wave = std::sin(2.0 * std::numbers::pi * static_cast<double>(x) / wavelength_px);
      img.at(x, y) = std::clamp(ramp + amp * wave, 0.0, 1.0);
    }
  }
  return img;
}

SamplePath row_path(const ScalarImage& image, std::size_t row) {
  if (row >= image.height) throw DomainError("row outside the image");
  SamplePath path;
  path.reserve(image.width);
  for (std::size_t x = 0; x < image.width; ++x) path.push_back({x, row});
  return path;
}

void validate_path(const SamplePath& path, const ScalarImage& image) {
  for (std::size_t i = 0; i < path.size(); ++i)
    if (path[i].x >= image.width || path[i].y >= image.height)
      throw DomainError("path point " + std::to_string(i) + " (" + std::to_string(path[i].x) +
                        ", " + std::to_string(path[i].y) + ") lies outside the image");
}

CdpsResult cdps(const ScalarImage& image, const SamplePath& path, const Colormap& cmap,
                const ViewingConditions& vc, CdpsPairing pairing) {
  if (path.size() < 3) throw DomainError("CDPS needs a path of at least 3 points");
  if (cmap.size() < 2) throw DomainError("colormap needs at least two entries");
  validate_path(path, image);

  std::vector<double> samples;
  samples.reserve(path.size());
  for (const PixelCoord& p : path) {
    const double v = image.at(p.x, p.y);
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError("CDPS needs a normalized image");
    samples.push_back(v);
  }

  const CamUcs cam(vc);
  const std::vector<JabColor> map_jab = entries_to_jab(cmap, cam);
  const std::vector<JabColor> gray_jab = entries_to_jab(grayscale_reference(cmap.size(), vc), cam);
  std::vector<std::size_t> idx;
  idx.reserve(samples.size());
  for (double v : samples) idx.push_back(value_to_index(v, cmap.size()));

  CdpsResult res;
  std::vector<double> gray;
  const auto add_pair = [&](std::size_t i, std::size_t j) {
    res.data_deltas.push_back(std::abs(samples[j] - samples[i]));
    res.perceptual_deltas.push_back(distance(map_jab[idx[j]], map_jab[idx[i]]));
    gray.push_back(distance(gray_jab[idx[j]], gray_jab[idx[i]]));
  };
  if (pairing == CdpsPairing::kConsecutive) {
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) add_pair(i, i + 1);
  } else {
    for (std::size_t i = 0; i < samples.size(); ++i)
      for (std::size_t j = i + 1; j < samples.size(); ++j) add_pair(i, j);
  }

  if (std::all_of(res.data_deltas.begin(), res.data_deltas.end(), [](double d) { return d == 0.0; }))
    throw DegenerateDataError("all data deltas along the path are zero");

  res.gray_slope = fit_line(res.data_deltas, gray).slope;
  if (!(res.gray_slope > 0.0))
    throw DegenerateDataError("grayscale reference has no perceptual response on this path");
  for (double& d : res.perceptual_deltas) d /= res.gray_slope;
  const LinearFit fit = fit_line(res.data_deltas, res.perceptual_deltas);
  res.slope = fit.slope;
  res.r2 = fit.r2;
  return res;
}

RgbImage overlay(const ScalarImage& image, const Colormap& cmap) {
  RgbImage out;
  out.width = image.width;
  out.height = image.height;
  out.pixels.reserve(image.values.size());
  for (double v : image.values) out.pixels.push_back(value_to_color(v, cmap));
  return out;
}

RgbImage colormap_ramp(const Colormap& cmap, std::size_t width, std::size_t height) {
  if (cmap.size() == 0) throw DomainError("empty colormap");
  if (width == 0 || height == 0) throw DomainError("ramp needs positive dimensions");
  RgbImage out;
  out.width = width;
  out.height = height;
  out.pixels.resize(width * height);
  for (std::size_t x = 0; x < width; ++x) {
    // Round half up of x * (N - 1) / (width - 1), in integers.
    const std::size_t i =
        width == 1 ? 0 : (2 * x * (cmap.size() - 1) + (width - 1)) / (2 * (width - 1));
    const SrgbColor c = cmap.entries[i];
    for (std::size_t y = 0; y < height; ++y) out.pixels[y * width + x] = c;
  }
  return out;
}

RgbImage scalar_to_gray(const ScalarImage& image) {
  RgbImage out;
  out.width = image.width;
  out.height = image.height;
  out.pixels.reserve(image.values.size());
  for (double v : image.values) {
    const double g = std::clamp(v, 0.0, 1.0);
    out.pixels.push_back({g, g, g});
  }
  return out;
}

}  // namespace cvdcmap
