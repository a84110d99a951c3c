// SPDX-License-Identifier: Apache-2.0

#include "cvdcmap/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cvdcmap/errors.hpp"
#include "cvdcmap/stats.hpp"
#include "cvdcmap/version.hpp"
#include "format.hpp"

namespace cvdcmap {

namespace {

// Paths shorter than this in the (a', b') plane are treated as achromatic.
constexpr double kAchromaticPathLength = 1e-6;

JabColor lerp(const JabColor& a, const JabColor& b, double f) {
  return {a.jp + f * (b.jp - a.jp), a.ap + f * (b.ap - a.ap), a.bp + f * (b.bp - a.bp)};
}

JabColor sample_by_index(const std::vector<JabColor>& pts, double s) {
  const std::size_t last = pts.size() - 1;
  if (s <= 0.0) return pts.front();
  if (s >= static_cast<double>(last)) return pts.back();
  const auto i = static_cast<std::size_t>(std::floor(s));
  return lerp(pts[i], pts[i + 1], s - static_cast<double>(i));
}

// Dense polyline through the curve: kDensePoints uniform index samples merged
// with the original vertices, so corners are kept exactly.
std::vector<JabColor> densify(const JabCurve& curve) {
  const std::size_t n = curve.size();
  const double span = static_cast<double>(n - 1);
  std::vector<double> params;
  params.reserve(kDensePoints + n);
  for (std::size_t k = 0; k < kDensePoints; ++k)
    params.push_back(span * static_cast<double>(k) / static_cast<double>(kDensePoints - 1));
  for (std::size_t i = 0; i < n; ++i) params.push_back(static_cast<double>(i));
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());

  std::vector<JabColor> dense;
  dense.reserve(params.size());
  for (double s : params) dense.push_back(sample_by_index(curve.points, s));
  return dense;
}

int trend_direction(const JabCurve& curve) {
  return curve.points.back().jp >= curve.points.front().jp ? 1 : -1;
}

LinearizeResult apply_line(const JabCurve& curve, const JpLine& line) {
  LinearizeResult out;
  out.line = line;
  out.curve = curve;
  std::vector<double> observed;
  std::vector<double> predicted;
  observed.reserve(curve.size());
  predicted.reserve(curve.size());
  for (std::size_t t = 0; t < curve.size(); ++t) {
    observed.push_back(curve.points[t].jp);
    predicted.push_back(line.at(static_cast<double>(t)));
    out.curve.points[t].jp = predicted.back();
  }
  out.r2 = coefficient_of_determination(observed, predicted);
  return out;
}

std::string describe(const ViewingConditions& vc) {
  return "whitepoint=" + detail::format_double(vc.whitepoint.x) + "," +
         detail::format_double(vc.whitepoint.y) + "," + detail::format_double(vc.whitepoint.z) +
         ";L_A=" + detail::format_double(vc.adapting_luminance) +
         ";Y_b=" + detail::format_double(vc.background_luminance) +
         ";surround=" + std::string(to_string(vc.surround)) +
         ";discount_illuminant=" + (vc.discount_illuminant ? "true" : "false");
}

}  // namespace

double hue_arc_length(const JabCurve& curve) {
  double total = 0.0;
  for (std::size_t i = 1; i < curve.size(); ++i)
    total += hue_distance(curve.points[i - 1], curve.points[i]);
  return total;
}

std::string_view to_string(LinearizationMethod m) {
  return m == LinearizationMethod::kFitOriginal ? "fit" : "max-range";
}

LinearizationMethod linearization_from_string(std::string_view name) {
  if (name == "fit" || name == "fit-original" || name == "fit_original")
    return LinearizationMethod::kFitOriginal;
  if (name == "max-range" || name == "max_range") return LinearizationMethod::kMaxRange;
  throw DomainError("unknown linearization method '" + std::string(name) +
                    "' (expected fit or max-range)");
}

JabCurve colormap_to_cvd_jab(const Colormap& cmap, const CvdSpec& spec,
                             const ViewingConditions& vc) {
  const Mat3 m = machado_matrix(spec);
  const CamUcs cam(vc);
  JabCurve curve;
  curve.points.reserve(cmap.size());
  for (const SrgbColor& c : cmap.entries) curve.points.push_back(cam.srgb_to_jab(simulate_cvd(c, m)));
  return curve;
}

JabCurve resample_equidistant(const JabCurve& curve, std::size_t n_out) {
  if (curve.size() < 2) throw DomainError("resampling needs a curve with at least two points");
  if (n_out < 2) throw DomainError("resampling needs n_out >= 2");

  const std::vector<JabColor> dense = densify(curve);
  std::vector<double> cumulative(dense.size(), 0.0);
  for (std::size_t i = 1; i < dense.size(); ++i)
    cumulative[i] = cumulative[i - 1] + hue_distance(dense[i - 1], dense[i]);
  const double total = cumulative.back();
  if (!(total > 0.0))
    throw DegeneratePathError("(a', b') path has zero length; nothing to resample by arc length");

  const double spacing = total / static_cast<double>(n_out - 1);
  JabCurve out;
  out.points.reserve(n_out);
  out.points.push_back(dense.front());
  for (std::size_t i = 1; i + 1 < n_out; ++i) {
    const double target = spacing * static_cast<double>(i);
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    const auto k = static_cast<std::size_t>(it - cumulative.begin());
    if (k >= dense.size()) {
      out.points.push_back(dense.back());
      continue;
    }
    const double seg = cumulative[k] - cumulative[k - 1];
    out.points.push_back(lerp(dense[k - 1], dense[k], (target - cumulative[k - 1]) / seg));
  }
  out.points.push_back(dense.back());
  return out;
}

JabCurve resample_by_index(const JabCurve& curve, std::size_t n_out) {
  if (curve.size() < 2) throw DomainError("resampling needs a curve with at least two points");
  if (n_out < 2) throw DomainError("resampling needs n_out >= 2");
  const double span = static_cast<double>(curve.size() - 1);
  JabCurve out;
  out.points.reserve(n_out);
  for (std::size_t i = 0; i < n_out; ++i)
    out.points.push_back(
        sample_by_index(curve.points, span * static_cast<double>(i) / static_cast<double>(n_out - 1)));
  return out;
}

JpBounds compute_jp_bounds(const JabCurve& curve, const ViewingConditions& vc,
                           const BoundsOptions& options) {
  if (options.scan_steps < 2) throw DomainError("bounds scan needs at least two steps");
  const CamUcs cam(vc);
  JpBounds bounds;
  bounds.jmin.reserve(curve.size());
  bounds.jmax.reserve(curve.size());

  for (std::size_t idx = 0; idx < curve.size(); ++idx) {
    const JabColor& p = curve.points[idx];
    const auto valid = [&](double jp) {
      try {
        return in_gamut(cam.jab_to_srgb({jp, p.ap, p.bp}), options.gamut_eps);
      } catch (const MathError&) {
        return false;
      }
    };
    const auto scan_at = [&](std::size_t k) {
      return 100.0 * static_cast<double>(k) / static_cast<double>(options.scan_steps);
    };

    std::size_t first = options.scan_steps + 1;
    std::size_t last = 0;
    for (std::size_t k = 0; k <= options.scan_steps; ++k) {
      if (valid(scan_at(k))) {
        if (first > options.scan_steps) first = k;
        last = k;
      }
    }
    if (first > options.scan_steps)
      throw InfeasiblePointError("no J' in [0, 100] gives a valid sRGB color at index " +
                                     std::to_string(idx) + " (a'=" + detail::format_double(p.ap) +
                                     ", b'=" + detail::format_double(p.bp) + ")",
                                 idx);

    double jmin = scan_at(first);
    if (first > 0) {
      double bad = scan_at(first - 1);
      while (jmin - bad > options.precision) {
        const double mid = 0.5 * (bad + jmin);
        (valid(mid) ? jmin : bad) = mid;
      }
    }
    double jmax = scan_at(last);
    if (last < options.scan_steps) {
      double bad = scan_at(last + 1);
      while (bad - jmax > options.precision) {
        const double mid = 0.5 * (bad + jmax);
        (valid(mid) ? jmax : bad) = mid;
      }
    }
    bounds.jmin.push_back(jmin);
    bounds.jmax.push_back(jmax);
  }
  return bounds;
}

LinearizeResult linearize_fit_original(const JabCurve& curve) {
  if (curve.size() < 2) throw DomainError("linearization needs at least two points");
  std::vector<double> t(curve.size());
  std::vector<double> jp(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    t[i] = static_cast<double>(i);
    jp[i] = curve.points[i].jp;
  }
  const LinearFit fit = fit_line(t, jp);
  return apply_line(curve, {fit.intercept, fit.slope});
}

JpLine steepest_bounded_line(const std::vector<double>& lo, const std::vector<double>& hi,
                             int direction) {
  const std::size_t n = lo.size();
  if (hi.size() != n) throw DomainError("bound arrays differ in length");
  if (n < 2) throw DomainError("a bounded line needs at least two indices");
  for (std::size_t t = 0; t < n; ++t)
    if (lo[t] > hi[t])
      throw InfeasibleLineError("empty J' interval at index " + std::to_string(t));

  // A slope m admits an intercept iff for every s > t:
  //   (lo[s] - hi[t]) / (s - t) <= m <= (hi[s] - lo[t]) / (s - t).
  double m_upper = std::numeric_limits<double>::infinity();
  double m_lower = -std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = t + 1; s < n; ++s) {
      const double dt = static_cast<double>(s - t);
      m_upper = std::min(m_upper, (hi[s] - lo[t]) / dt);
      m_lower = std::max(m_lower, (lo[s] - hi[t]) / dt);
    }
  }
  if (m_lower > m_upper + 1e-12)
    throw InfeasibleLineError("no straight J' line fits within the per-index lightness bounds");

  const double m = direction >= 0 ? m_upper : m_lower;
  double b_lo = -std::numeric_limits<double>::infinity();
  double b_hi = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < n; ++t) {
    b_lo = std::max(b_lo, lo[t] - m * static_cast<double>(t));
    b_hi = std::min(b_hi, hi[t] - m * static_cast<double>(t));
  }
  // With the slope fixed the midpoint grows with the intercept: take the top.
  return {b_hi >= b_lo ? b_hi : 0.5 * (b_lo + b_hi), m};
}

LinearizeResult linearize_max_range(const JabCurve& curve, const JpBounds& bounds) {
  if (bounds.size() != curve.size())
    throw DomainError("bounds and curve differ in length");
  return apply_line(curve, steepest_bounded_line(bounds.jmin, bounds.jmax, trend_direction(curve)));
}

double jp_linearity_r2(const JabCurve& curve) {
  std::vector<double> t(curve.size());
  std::vector<double> jp(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    t[i] = static_cast<double>(i);
    jp[i] = curve.points[i].jp;
  }
  return fit_line(t, jp).r2;
}

OptimizeResult optimize_colormap_detailed(const Colormap& cmap, const OptimizeOptions& options) {
  if (cmap.size() < 2) throw DomainError("colormap needs at least two entries");
  if (options.n_out < 2) throw DomainError("output size must be at least 2");
  options.cvd.validate();
  const CamUcs cam(options.vc);

  OptimizeResult result;
  const JabCurve cvd_curve = colormap_to_cvd_jab(cmap, options.cvd, options.vc);
  result.achromatic_path = hue_arc_length(cvd_curve) <= kAchromaticPathLength;
  const JabCurve resampled = result.achromatic_path
                                 ? resample_by_index(cvd_curve, options.n_out)
                                 : resample_equidistant(cvd_curve, options.n_out);

  if (options.method == LinearizationMethod::kFitOriginal) {
    result.linearization = linearize_fit_original(resampled);
  } else {
    const JpBounds bounds = compute_jp_bounds(resampled, options.vc, options.bounds);
    result.linearization = linearize_max_range(resampled, bounds);
  }
  result.target = result.linearization.curve;

  Colormap& out = result.colormap;
  out.name = cmap.name.empty() ? "optimized" : cmap.name + "-optimized";
  out.entries.reserve(options.n_out);
  result.unclamped.reserve(options.n_out);
  double rel_sum = 0.0;
  for (const JabColor& target : result.target.points) {
    // A fitted line may dip to J' <= 0; the only displayable color there is black.
    const SrgbColor raw = target.jp > 0.0 ? cam.jab_to_srgb(target) : SrgbColor{0.0, 0.0, 0.0};
    const SrgbColor clamped = clamp_gamut(raw);
    result.unclamped.push_back(raw);
    out.entries.push_back(clamped);

    result.clamp.max_channel_excess = std::max(
        {result.clamp.max_channel_excess, std::abs(raw.r - clamped.r),
         std::abs(raw.g - clamped.g), std::abs(raw.b - clamped.b)});
    const double err = distance(target, cam.srgb_to_jab(clamped));
    const double norm = std::sqrt(target.jp * target.jp + target.ap * target.ap + target.bp * target.bp);
    const double rel = norm > 0.0 ? err / norm : err;
    rel_sum += rel;
    result.clamp.max_relative_error = std::max(result.clamp.max_relative_error, rel);
  }
  result.clamp.mean_relative_error = rel_sum / static_cast<double>(options.n_out);
  result.clamp_warning = result.clamp.max_channel_excess > options.clamp_warn_threshold;

  const auto fmt = detail::format_double;
  out.metadata["source"] = cmap.name;
  out.metadata["cvd_type"] = std::string(to_string(options.cvd.kind));
  out.metadata["cvd_severity"] = fmt(options.cvd.severity);
  out.metadata["method"] = std::string(to_string(options.method));
  out.metadata["size"] = std::to_string(options.n_out);
  out.metadata["dense_points"] = std::to_string(kDensePoints);
  out.metadata["viewing_conditions"] = describe(options.vc);
  out.metadata["achromatic_path"] = result.achromatic_path ? "true" : "false";
  out.metadata["jp_intercept"] = fmt(result.linearization.line.intercept);
  out.metadata["jp_slope"] = fmt(result.linearization.line.slope);
  out.metadata["clamp_max_channel_excess"] = fmt(result.clamp.max_channel_excess);
  out.metadata["clamp_mean_relative_error"] = fmt(result.clamp.mean_relative_error);
  out.metadata["tool_version"] = kVersion;
  return result;
}

Colormap optimize_colormap(const Colormap& cmap, const OptimizeOptions& options) {
  return optimize_colormap_detailed(cmap, options).colormap;
}

}  // namespace cvdcmap
