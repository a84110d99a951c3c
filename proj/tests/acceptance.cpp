// SPDX-License-Identifier: Apache-2.0
//
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cvdcmap/analyze.hpp"
#include "cvdcmap/colorspace.hpp"
#include "cvdcmap/cvd.hpp"
#include "cvdcmap/errors.hpp"
#include "cvdcmap/io.hpp"
#include "cvdcmap/optimize.hpp"
#include "cvdcmap/stats.hpp"

using namespace cvdcmap;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s -- %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::vector<double> jp_of(const Colormap& cmap) {
  std::vector<double> jp;
  for (const SrgbColor& c : cmap.entries) jp.push_back(srgb_to_jab(c).jp);
  return jp;
}

double max_deviation_from_mean(const std::vector<double>& v) {
  double mean = 0.0;
  for (double d : v) mean += d;
  mean /= static_cast<double>(v.size());
  double dev = 0.0;
  for (double d : v) dev = std::max(dev, std::abs(d - mean));
  return dev;
}

ScalarImage linear_ramp(std::size_t n) {
  ScalarImage img;
  img.width = n;
  img.height = 1;
  img.normalized = true;
  for (std::size_t i = 0; i < n; ++i) img.values.push_back(static_cast<double>(i) / (n - 1));
  return img;
}

OptimizeOptions cividis_options() {
  OptimizeOptions o;
  o.cvd = {CvdKind::kDeuteranomaly, 100.0};
  o.method = LinearizationMethod::kMaxRange;
  return o;
}

void criterion1() {
  const auto t0 = Clock::now();
  const OptimizeResult r = optimize_colormap_detailed(builtin_colormap("viridis"), cividis_options());
  const double elapsed = seconds_since(t0);
  const Colormap& cmap = r.colormap;

  const std::vector<double> jp = jp_of(cmap);
  std::vector<double> idx(jp.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<double>(i);
  const double r2 = fit_line(idx, jp).r2;
  bool increasing = true;
  for (std::size_t i = 1; i < jp.size(); ++i) increasing = increasing && jp[i] > jp[i - 1];
  const double dev = max_deviation_from_mean(perceptual_deltas(cmap));
  bool in_unit = cmap.size() == 256;
  for (const SrgbColor& c : cmap.entries)
    in_unit = in_unit && c.r >= 0 && c.r <= 1 && c.g >= 0 && c.g <= 1 && c.b >= 0 && c.b <= 1;
  const double b_first = srgb_to_jab(cmap.entries.front()).bp;
  const double b_last = srgb_to_jab(cmap.entries.back()).bp;

  const bool ok = elapsed < 10.0 && r2 >= 0.999 && increasing && dev < 0.2 && in_unit &&
                  b_first < 0.0 && b_last > 0.0;
  std::ostringstream d;
  d << "time " << fmt("%.3f", elapsed) << " s, r2 " << fmt("%.6f", r2) << ", J' increasing "
    << (increasing ? "yes" : "no") << ", delta max dev " << fmt("%.4f", dev) << ", in [0,1]^3 "
    << (in_unit ? "yes" : "no") << ", b' first " << fmt("%.3f", b_first) << " last "
    << fmt("%.3f", b_last);
  report(1, "cividis reconstruction", ok, d.str());
}

void criterion2() {
  const OptimizeResult r = optimize_colormap_detailed(builtin_colormap("viridis"), cividis_options());
  const bool ok = r.clamp.mean_relative_error < 0.01 && r.clamp.max_channel_excess < 0.08;
  report(2, "clamp error bound", ok,
         "mean relative " + fmt("%.3e", r.clamp.mean_relative_error) + ", max channel excess " +
             fmt("%.3e", r.clamp.max_channel_excess));
}

void criterion3() {
  const Colormap jet = builtin_colormap("jet");
  const std::vector<double> deltas = perceptual_deltas(jet);
  const double max_delta = *std::max_element(deltas.begin(), deltas.end());

  const ScalarImage ramp = linear_ramp(256);
  const SamplePath path = row_path(ramp, 0);
  const double r2_jet = cdps(ramp, path, jet).r2;
  const double r2_cividis = cdps(ramp, path, builtin_colormap("cividis")).r2;
  const bool ok = max_delta > 0.8 && r2_jet < r2_cividis;
  report(3, "jet contrast", ok,
         "jet max delta " + fmt("%.3f", max_delta) + ", cdps r2 jet " + fmt("%.4f", r2_jet) +
             " < cividis " + fmt("%.4f", r2_cividis));
}

void criterion4() {
  const auto t0 = Clock::now();
  const CamUcs model;
  double max_err = 0.0;
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j)
      for (int k = 0; k <= 10; ++k) {
        const SrgbColor c{i / 10.0, j / 10.0, k / 10.0};
        const SrgbColor back = model.jab_to_srgb(model.srgb_to_jab(c));
        max_err = std::max({max_err, std::abs(back.r - c.r), std::abs(back.g - c.g),
                            std::abs(back.b - c.b)});
      }
  double max_chroma = 0.0;
  for (int i = 0; i <= 255; ++i) {
    const double v = i / 255.0;
    const JabColor jab = model.srgb_to_jab({v, v, v});
    max_chroma = std::max({max_chroma, std::abs(jab.ap), std::abs(jab.bp)});
  }
  const double elapsed = seconds_since(t0);
  const bool ok = max_err <= 1e-3 && max_chroma <= 1e-6 && elapsed < 5.0;
  report(4, "colorspace round trip", ok,
         "max channel error " + fmt("%.3e", max_err) + ", gray max |a'|,|b'| " +
             fmt("%.3e", max_chroma) + ", time " + fmt("%.3f", elapsed) + " s");
}

void criterion5() {
  double max_identity_err = 0.0;
  for (CvdKind kind : {CvdKind::kDeuteranomaly, CvdKind::kProtanomaly, CvdKind::kTritanomaly})
    for (int i = 0; i <= 10; ++i)
      for (int j = 0; j <= 10; ++j)
        for (int k = 0; k <= 10; ++k) {
          const SrgbColor c{i / 10.0, j / 10.0, k / 10.0};
          const SrgbColor s = simulate_cvd(c, CvdSpec{kind, 0.0});
          max_identity_err = std::max({max_identity_err, std::abs(s.r - c.r),
                                       std::abs(s.g - c.g), std::abs(s.b - c.b)});
        }

  const auto t0 = Clock::now();
  std::vector<double> fractions;
  for (int s = 0; s <= 100; s += 10)
    fractions.push_back(gamut_fraction(CvdKind::kDeuteranomaly, s, 64));
  const double elapsed = seconds_since(t0);
  bool non_increasing = true;
  for (std::size_t i = 1; i < fractions.size(); ++i)
    non_increasing = non_increasing && fractions[i] <= fractions[i - 1];

  const bool ok = max_identity_err <= 1e-6 && fractions.front() == 1.0 && non_increasing &&
                  elapsed < 60.0;
  report(5, "CVD identity and monotone gamut", ok,
         "identity error " + fmt("%.3e", max_identity_err) + ", fraction(0) " +
             fmt("%.6f", fractions.front()) + ", fraction(100) " + fmt("%.6f", fractions.back()) +
             ", non-increasing " + (non_increasing ? "yes" : "no") + ", time " +
             fmt("%.2f", elapsed) + " s");
}

// Largest slope on a 1e-3 grid for which some intercept fits. Intercept
// feasibility is the intersection of all 2N constraint intervals, so the grid
// error is confined to the slope axis.
double grid_search_slope(const std::vector<double>& lo, const std::vector<double>& hi) {
  constexpr double step = 1e-3;
  double best = -1.0;
  for (int mi = 0; mi <= 4000; ++mi) {
    const double m = mi * step;
    double b_lo = -1e300;
    double b_hi = 1e300;
    for (std::size_t t = 0; t < lo.size(); ++t) {
      b_lo = std::max(b_lo, lo[t] - m * static_cast<double>(t));
      b_hi = std::min(b_hi, hi[t] - m * static_cast<double>(t));
    }
    if (b_lo <= b_hi) best = m;
  }
  return best;
}

void criterion6() {
  constexpr std::size_t n = 64;
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  JabCurve curve;
  for (std::size_t t = 0; t < n; ++t) curve.points.push_back({10.0 + t, 5.0, -3.0});

  double worst = 0.0;
  bool never_beaten = true;
  int feasible_checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const double m0 = 0.2 + 1.2 * u(rng);
    const double b0 = 5.0 + 10.0 * u(rng);
    JpBounds bounds;
    for (std::size_t t = 0; t < n; ++t) {
      const double center = b0 + m0 * static_cast<double>(t);
      bounds.jmin.push_back(std::max(0.0, center - 15.0 * u(rng)));
      bounds.jmax.push_back(std::min(100.0, center + 15.0 * u(rng)));
    }
    const double m_lp = linearize_max_range(curve, bounds).line.slope;
    const double m_grid = grid_search_slope(bounds.jmin, bounds.jmax);
    worst = std::max(worst, std::abs(m_lp - m_grid));
    never_beaten = never_beaten && m_grid <= m_lp + 1e-12;
    ++feasible_checked;
  }

  int infeasible_raised = 0;
  constexpr int infeasible_trials = 10;
  for (int trial = 0; trial < infeasible_trials; ++trial) {
    JpBounds bounds;
    bounds.jmin.assign(n, 0.0);
    bounds.jmax.assign(n, 100.0);
    if (trial % 2 == 0) {
      const std::size_t at = 1 + static_cast<std::size_t>(u(rng) * (n - 2));
      bounds.jmin[at] = 60.0;
      bounds.jmax[at] = 59.0;
    } else {
      // A bright window at the ends and a dark window in the middle.
      bounds.jmin[0] = bounds.jmin[n - 1] = 80.0;
      bounds.jmax[n / 2] = 20.0 + 10.0 * u(rng);
    }
    try {
      linearize_max_range(curve, bounds);
    } catch (const InfeasibleLineError&) {
      ++infeasible_raised;
    }
  }

  const bool ok = worst <= 1e-3 && never_beaten && feasible_checked == 50 &&
                  infeasible_raised == infeasible_trials;
  report(6, "bounded-line optimality", ok,
         "50 instances, worst |m_lp - m_grid| " + fmt("%.2e", worst) + (never_beaten ? "" : " (grid beat LP)") + ", infeasible raised " +
             std::to_string(infeasible_raised) + "/" + std::to_string(infeasible_trials));
}

void criterion7() {
  JabCurve corner;
  corner.points = {{50.0, 0.0, 0.0}, {50.0, 3.0, 0.0}, {50.0, 3.0, 4.0}};
  const JabCurve out = resample_equidistant(corner, 8);
  double worst = 0.0;
  for (std::size_t i = 1; i < out.size(); ++i) {
    const double chord = std::hypot(out.points[i].ap - out.points[i - 1].ap,
                                    out.points[i].bp - out.points[i - 1].bp);
    worst = std::max(worst, std::abs(chord - 1.0));
  }

  const JabCurve viridis =
      colormap_to_cvd_jab(builtin_colormap("viridis"), {CvdKind::kDeuteranomaly, 100.0});
  const double before = hue_arc_length(viridis);
  const double after = hue_arc_length(resample_equidistant(viridis, 256));
  const double rel = std::abs(after - before) / before;

  const bool ok = out.size() == 8 && worst <= 1e-9 && rel < 0.005;
  report(7, "resampling oracle", ok,
         "3-4-5 chord error " + fmt("%.2e", worst) + ", viridis arc length change " +
             fmt("%.3e", rel));
}

void criterion8() {
  const ScalarImage image = kovesi_test_image();
  const SamplePath path = row_path(image, image.height - 1);
  const CdpsResult r = cdps(image, path, grayscale_reference());
  const bool ok = std::abs(r.slope - 1.0) <= 0.01 && r.r2 >= 0.999;
  report(8, "CDPS self-consistency", ok,
         "slope " + fmt("%.6f", r.slope) + ", r2 " + fmt("%.6f", r.r2) + ", pairs " +
             std::to_string(r.n_pairs()));
}

void criterion9() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cvdcmap_acceptance";
  fs::create_directories(dir);

  Colormap rgb;
  rgb.name = "rgb";
  rgb.entries = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
  const fs::path lut_path = dir / "rgb.lut";
  export_lut(rgb, lut_path);
  std::ifstream lut_in(lut_path, std::ios::binary);
  const std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(lut_in),
                                         std::istreambuf_iterator<char>()};

  // Hand-built expectation: index i of 256 sits at t = 2i/255 along the
  // three-entry ramp red -> green -> blue.
  bool layout_ok = bytes.size() == 768;
  for (int i = 0; layout_ok && i < 256; ++i) {
    const double t = 2.0 * i / 255.0;
    const double r = std::max(0.0, 1.0 - t);
    const double g = t <= 1.0 ? t : 2.0 - t;
    const double b = std::max(0.0, t - 1.0);
    const auto byte = [](double v) { return static_cast<unsigned char>(std::floor(v * 255.0 + 0.5)); };
    layout_ok = bytes[i] == byte(r) && bytes[256 + i] == byte(g) && bytes[512 + i] == byte(b);
  }
  layout_ok = layout_ok && bytes.size() == 768 && bytes[0] == 255 && bytes[256] == 0 &&
              bytes[512] == 0 && bytes[255] == 0 && bytes[511] == 0 && bytes[767] == 255;

  Colormap table;
  table.name = "bytes";
  for (int i = 0; i < 256; ++i)
    table.entries.push_back({i / 255.0, (255 - i) / 255.0, ((i * 37) % 256) / 255.0});
  const fs::path table_path = dir / "bytes.txt";
  export_table(table, table_path, TableScale::kByte);
  const Colormap loaded = load_colormap(table_path.string());
  bool table_ok = loaded.size() == table.size();
  for (std::size_t i = 0; table_ok && i < table.size(); ++i) {
    const SrgbColor& a = table.entries[i];
    const SrgbColor& b = loaded.entries[i];
    table_ok = to_byte(a.r) == to_byte(b.r) && to_byte(a.g) == to_byte(b.g) &&
               to_byte(a.b) == to_byte(b.b) && a == b;
  }
  fs::remove_all(dir);

  report(9, "format exactness", layout_ok && table_ok,
         std::string("LUT ") + std::to_string(bytes.size()) + " bytes, R/G/B blocks " +
             (layout_ok ? "match" : "differ") + ", byte table round trip " +
             (table_ok ? "exact" : "differs"));
}

template <typename F>
void guarded(int id, const char* title, F f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(id, title, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  guarded(1, "cividis reconstruction", criterion1);
  guarded(2, "clamp error bound", criterion2);
  guarded(3, "jet contrast", criterion3);
  guarded(4, "colorspace round trip", criterion4);
  guarded(5, "CVD identity and monotone gamut", criterion5);
  guarded(6, "bounded-line optimality", criterion6);
  guarded(7, "resampling oracle", criterion7);
  guarded(8, "CDPS self-consistency", criterion8);
  guarded(9, "format exactness", criterion9);
  std::printf("%d of 9 criteria passed\n", 9 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
