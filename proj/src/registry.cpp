// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <array>
#include <mutex>
#include <string>
#include <vector>

#include "cvdcmap/analyze.hpp"
#include "cvdcmap/errors.hpp"
#include "cvdcmap/io.hpp"
#include "cvdcmap/optimize.hpp"
#include "tables.hpp"

namespace cvdcmap {

namespace {

struct Knot {
  double x;
  double y;
};

double interp_knots(const std::vector<Knot>& knots, double x) {
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (x <= knots[i].x) {
      const double f = (x - knots[i - 1].x) / (knots[i].x - knots[i - 1].x);
      return knots[i - 1].y + f * (knots[i].y - knots[i - 1].y);
    }
  }
  return knots.back().y;
}

// matplotlib's segment definition of jet, sampled at 256 points.
Colormap make_jet() {
  const std::vector<Knot> red = {{0.0, 0.0}, {0.35, 0.0}, {0.66, 1.0}, {0.89, 1.0}, {1.0, 0.5}};
  const std::vector<Knot> green = {{0.0, 0.0},  {0.125, 0.0}, {0.375, 1.0},
                                   {0.64, 1.0}, {0.91, 0.0},  {1.0, 0.0}};
  const std::vector<Knot> blue = {{0.0, 0.5}, {0.11, 1.0}, {0.34, 1.0}, {0.65, 0.0}, {1.0, 0.0}};
  Colormap cmap;
  cmap.name = "jet";
  for (std::size_t i = 0; i < 256; ++i) {
    const double x = static_cast<double>(i) / 255.0;
    cmap.entries.push_back({interp_knots(red, x), interp_knots(green, x), interp_knots(blue, x)});
  }
  cmap.metadata["source"] = "matplotlib jet segment data";
  return cmap;
}

Colormap make_viridis() {
  Colormap cmap;
  cmap.name = "viridis";
  for (const auto& rgb : detail::kViridisData) cmap.entries.push_back({rgb[0], rgb[1], rgb[2]});
  cmap.metadata["source"] = "matplotlib viridis";
  return cmap;
}

Colormap make_cividis(const ViewingConditions& vc) {
  OptimizeOptions options;
  options.vc = vc;
  Colormap out = optimize_colormap(make_viridis(), options);
  out.name = "cividis";
  return out;
}

constexpr std::array<const char*, 4> kNames = {"viridis", "jet", "grayscale-jp", "cividis"};

}  // namespace

std::vector<std::string> builtin_names() { return {kNames.begin(), kNames.end()}; }

bool is_builtin(std::string_view name) {
  return std::find(kNames.begin(), kNames.end(), name) != kNames.end();
}

Colormap builtin_colormap(std::string_view name, const ViewingConditions& vc) {
  if (name == "viridis") return make_viridis();
  if (name == "jet") return make_jet();
  if (name == "grayscale-jp") return grayscale_reference(256, vc);
  if (name == "cividis") {
    if (vc == ViewingConditions{}) {
      static std::once_flag once;
      static Colormap cached;
      std::call_once(once, [] { cached = make_cividis({}); });
      return cached;
    }
    return make_cividis(vc);
  }
  std::string known;
  for (const char* n : kNames) known += std::string(known.empty() ? "" : ", ") + n;
  throw UnknownColormapError("unknown colormap '" + std::string(name) +
                             "'; built-in maps: " + known);
}

}  // namespace cvdcmap
