// SPDX-License-Identifier: Apache-2.0
//
// Colormap optimization: CVD simulation, equidistant (a', b') resampling,
// J' linearization and the return trip to sRGB.
#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "cvdcmap/colormap.hpp"
#include "cvdcmap/colorspace.hpp"
#include "cvdcmap/cvd.hpp"

namespace cvdcmap {

/// Number of points the (a', b') path is densified to before resampling.
inline constexpr std::size_t kDensePoints = 10000;

/// Per-index J' interval that admits a displayable color at that (a', b').
struct JpBounds {
  std::vector<double> jmin;
  std::vector<double> jmax;

  std::size_t size() const { return jmin.size(); }
};

enum class LinearizationMethod { kFitOriginal, kMaxRange };

std::string_view to_string(LinearizationMethod m);
/// "fit" / "fit-original" or "max-range".
LinearizationMethod linearization_from_string(std::string_view name);

/// J'(t) = intercept + slope * t over the index t.
struct JpLine {
  double intercept = 0.0;
  double slope = 0.0;

  double at(double t) const { return intercept + slope * t; }
};

struct LinearizeResult {
  JabCurve curve;
  JpLine line;
  double r2 = 0.0;  // fit of the line to the incoming J' (fit_original only)
};

JabCurve colormap_to_cvd_jab(const Colormap& cmap, const CvdSpec& spec,
                             const ViewingConditions& vc = {});

/// Resamples so consecutive points are equally spaced along the (a', b')
/// path. J' follows by interpolation at the same arc-length positions.
/// Throws DegeneratePathError when the path has zero length.
JabCurve resample_equidistant(const JabCurve& curve, std::size_t n_out = 256);

/// Piecewise-linear resampling by index, for curves without hue extent.
JabCurve resample_by_index(const JabCurve& curve, std::size_t n_out);

struct BoundsOptions {
  double gamut_eps = 1e-6;   // channel slack when testing validity
  double precision = 1e-3;   // J' bisection tolerance
  std::size_t scan_steps = 1000;  // coarse J' scan locating the valid interval
};

/// Throws InfeasiblePointError if some (a', b') has no valid J' in [0, 100].
JpBounds compute_jp_bounds(const JabCurve& curve, const ViewingConditions& vc = {},
                           const BoundsOptions& options = {});

/// Ordinary least squares of J' on index; a', b' untouched.
LinearizeResult linearize_fit_original(const JabCurve& curve);

/// Steepest line inside the bounds, slope sign following the J' trend of
/// `curve` (last minus first). Ties broken toward the brighter line.
/// Throws InfeasibleLineError when no line fits.
LinearizeResult linearize_max_range(const JabCurve& curve, const JpBounds& bounds);

/// Exact solution of: maximize direction * slope subject to
/// lo[t] <= intercept + slope * t <= hi[t]. Exposed for testing.
JpLine steepest_bounded_line(const std::vector<double>& lo, const std::vector<double>& hi,
                             int direction);

struct ClampReport {
  double max_channel_excess = 0.0;  // largest |c - clamp(c)| over all channels
  double mean_relative_error = 0.0; // mean |target - achieved| / |target| in J'a'b'
  double max_relative_error = 0.0;
};

struct OptimizeOptions {
  CvdSpec cvd{};
  LinearizationMethod method = LinearizationMethod::kMaxRange;
  ViewingConditions vc{};
  std::size_t n_out = 256;
  BoundsOptions bounds{};
  double clamp_warn_threshold = 0.05;
};

struct OptimizeResult {
  Colormap colormap;
  JabCurve target;  // linearized curve before the return to sRGB
  std::vector<SrgbColor> unclamped;
  ClampReport clamp;
  LinearizeResult linearization;
  bool achromatic_path = false;
  bool clamp_warning = false;
};

OptimizeResult optimize_colormap_detailed(const Colormap& cmap, const OptimizeOptions& options);
Colormap optimize_colormap(const Colormap& cmap, const OptimizeOptions& options = {});

/// Coefficient of determination of J' against index.
double jp_linearity_r2(const JabCurve& curve);

}  // namespace cvdcmap
