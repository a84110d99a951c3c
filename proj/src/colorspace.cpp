// SPDX-License-Identifier: Apache-2.0

#include "cvdcmap/colorspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cvdcmap/errors.hpp"

namespace cvdcmap {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

// IEC 61966-2-1 linear sRGB -> XYZ (Y of white = 1).
constexpr Mat3 kSrgbToXyz = {{{0.4124, 0.3576, 0.1805},
                              {0.2126, 0.7152, 0.0722},
                              {0.0193, 0.1192, 0.9505}}};

constexpr Mat3 kCat02 = {{{0.7328, 0.4296, -0.1624},
                          {-0.7036, 1.6975, 0.0061},
                          {0.0030, 0.0136, 0.9834}}};

// Rows renormalized to sum to 1 so that equal-energy cone signals stay equal.
Mat3 hpe_matrix() {
  Mat3 m = {{{0.38971, 0.68898, -0.07868},
             {-0.22981, 1.18340, 0.04641},
             {0.00000, 0.00000, 1.00000}}};
  for (auto& row : m) {
    const double sum = row[0] + row[1] + row[2];
    for (double& v : row) v /= sum;
  }
  return m;
}

struct Matrices {
  Mat3 xyz_to_srgb;
  Mat3 cat02_inv;
  Mat3 hpe_cat02_inv;  // M_HPE * M_CAT02^-1
  Mat3 cat02_hpe_inv;  // M_CAT02 * M_HPE^-1
};

const Matrices& matrices() {
  static const Matrices m = [] {
    const Mat3 hpe = hpe_matrix();
    return Matrices{inverse(kSrgbToXyz), inverse(kCat02), hpe * inverse(kCat02),
                    kCat02 * inverse(hpe)};
  }();
  return m;
}

Vec3 post_adaptation(const Vec3& rgb_p, double f_l) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    const double x = std::pow(f_l * std::abs(rgb_p[i]) / 100.0, 0.42);
    out[i] = std::copysign(400.0 * x / (x + 27.13), rgb_p[i]) + 0.1;
  }
  return out;
}

Vec3 inverse_post_adaptation(const Vec3& rgb_a, double f_l) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    const double x = rgb_a[i] - 0.1;
    const double ax = std::abs(x);
    if (ax >= 400.0) throw MathError("cone response outside the CIECAM02 compression range");
    out[i] = std::copysign(100.0 / f_l * std::pow(27.13 * ax / (400.0 - ax), 1.0 / 0.42), x);
  }
  return out;
}

}  // namespace

Mat3 inverse(const Mat3& m) {
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (det == 0.0) throw MathError("singular 3x3 matrix");
  const double s = 1.0 / det;
  Mat3 r;
  r[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) * s;
  r[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) * s;
  r[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) * s;
  r[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) * s;
  r[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) * s;
  r[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) * s;
  r[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) * s;
  r[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) * s;
  r[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) * s;
  return r;
}

SurroundConstants surround_constants(Surround s) {
  switch (s) {
    case Surround::kAverage:
      return {1.0, 0.69, 1.0};
    case Surround::kDim:
      return {0.9, 0.59, 0.9};
    case Surround::kDark:
      return {0.8, 0.525, 0.8};
  }
  throw DomainError("unknown surround");
}

std::string_view to_string(Surround s) {
  switch (s) {
    case Surround::kAverage:
      return "average";
    case Surround::kDim:
      return "dim";
    case Surround::kDark:
      return "dark";
  }
  return "?";
}

Surround surround_from_string(std::string_view name) {
  if (name == "average") return Surround::kAverage;
  if (name == "dim") return Surround::kDim;
  if (name == "dark") return Surround::kDark;
  throw DomainError("unknown surround '" + std::string(name) + "' (expected average, dim or dark)");
}

Xyz srgb_white() {
  const Vec3 w = kSrgbToXyz * Vec3{1.0, 1.0, 1.0};
  return {100.0 * w[0], 100.0 * w[1], 100.0 * w[2]};
}

void ViewingConditions::validate() const {
  if (!(adapting_luminance > 0.0) || !std::isfinite(adapting_luminance))
    throw DomainError("adapting luminance L_A must be positive");
  if (!(background_luminance > 0.0 && background_luminance <= 100.0))
    throw DomainError("background luminance factor Y_b must lie in (0, 100]");
  if (!(whitepoint.x > 0.0 && whitepoint.y > 0.0 && whitepoint.z > 0.0))
    throw DomainError("whitepoint must have positive X, Y and Z");
}

CamUcs::CamUcs(const ViewingConditions& vc) : vc_(vc) {
  vc_.validate();
  const SurroundConstants sc = surround_constants(vc_.surround);
  c_ = sc.c;
  n_c_ = sc.n_c;

  const double la = vc_.adapting_luminance;
  const double k = 1.0 / (5.0 * la + 1.0);
  const double k4 = k * k * k * k;
  f_l_ = 0.2 * k4 * (5.0 * la) + 0.1 * (1.0 - k4) * (1.0 - k4) * std::cbrt(5.0 * la);

  const Xyz& w = vc_.whitepoint;
  n_ = vc_.background_luminance / w.y;
  z_ = 1.48 + std::sqrt(n_);
  n_bb_ = 0.725 * std::pow(1.0 / n_, 0.2);

  double d = 1.0;
  if (!vc_.discount_illuminant)
    d = std::clamp(sc.f * (1.0 - (1.0 / 3.6) * std::exp((-la - 42.0) / 92.0)), 0.0, 1.0);

  const Vec3 rgb_w = kCat02 * Vec3{w.x, w.y, w.z};
  for (int i = 0; i < 3; ++i) d_rgb_[i] = d * w.y / rgb_w[i] + 1.0 - d;

  Vec3 rgb_wc{};
  for (int i = 0; i < 3; ++i) rgb_wc[i] = d_rgb_[i] * rgb_w[i];
  const Vec3 rgb_aw = post_adaptation(matrices().hpe_cat02_inv * rgb_wc, f_l_);
  a_w_ = (2.0 * rgb_aw[0] + rgb_aw[1] + rgb_aw[2] / 20.0 - 0.305) * n_bb_;
}

CamCorrelates CamUcs::xyz_to_cam(const Xyz& xyz) const {
  Vec3 rgb = kCat02 * Vec3{xyz.x, xyz.y, xyz.z};
  for (int i = 0; i < 3; ++i) rgb[i] *= d_rgb_[i];
  const Vec3 ra = post_adaptation(matrices().hpe_cat02_inv * rgb, f_l_);

  const double a = ra[0] - 12.0 * ra[1] / 11.0 + ra[2] / 11.0;
  const double b = (ra[0] + ra[1] - 2.0 * ra[2]) / 9.0;
  double h = std::atan2(b, a) * kDegPerRad;
  if (h < 0.0) h += 360.0;

  double achromatic = (2.0 * ra[0] + ra[1] + ra[2] / 20.0 - 0.305) * n_bb_;
  if (achromatic < 0.0) {
    // Black lands on A = 0 up to rounding.
    if (achromatic > -1e-9) {
      achromatic = 0.0;
    } else {
      throw MathError("negative achromatic response; stimulus is outside the model's domain");
    }
  }
  const double j = 100.0 * std::pow(achromatic / a_w_, c_ * z_);

  const double e_t = 0.25 * (std::cos(h / kDegPerRad + 2.0) + 3.8);
  const double denom = ra[0] + ra[1] + 21.0 / 20.0 * ra[2];
  const double t = (50000.0 / 13.0) * n_c_ * n_bb_ * e_t * std::hypot(a, b) / denom;
  const double chroma =
      std::pow(t, 0.9) * std::sqrt(j / 100.0) * std::pow(1.64 - std::pow(0.29, n_), 0.73);
  return {j, chroma * std::pow(f_l_, 0.25), h};
}

Xyz CamUcs::cam_to_xyz(const CamCorrelates& cam) const {
  if (cam.j < 0.0 || !std::isfinite(cam.j)) throw MathError("CIECAM02 lightness must be >= 0");
  const double chroma = cam.m / std::pow(f_l_, 0.25);
  if (chroma < 0.0) throw MathError("CIECAM02 colorfulness must be >= 0");
  if (cam.j == 0.0 && chroma > 0.0)
    throw MathError("CIECAM02 inverse undefined for zero lightness with nonzero chroma");

  double t = 0.0;
  if (chroma > 0.0)
    t = std::pow(chroma / (std::sqrt(cam.j / 100.0) * std::pow(1.64 - std::pow(0.29, n_), 0.73)),
                 1.0 / 0.9);
  const double h_rad = cam.h / kDegPerRad;
  const double e_t = 0.25 * (std::cos(h_rad + 2.0) + 3.8);
  const double achromatic = a_w_ * std::pow(cam.j / 100.0, 1.0 / (c_ * z_));
  const double p2 = achromatic / n_bb_ + 0.305;
  constexpr double p3 = 21.0 / 20.0;

  double a = 0.0;
  double b = 0.0;
  if (t > 0.0) {
    const double p1 = (50000.0 / 13.0) * n_c_ * n_bb_ * e_t / t;
    const double sin_h = std::sin(h_rad);
    const double cos_h = std::cos(h_rad);
    if (std::abs(sin_h) >= std::abs(cos_h)) {
      const double p4 = p1 / sin_h;
      b = p2 * (2.0 + p3) * (460.0 / 1403.0) /
          (p4 + (2.0 + p3) * (220.0 / 1403.0) * (cos_h / sin_h) - 27.0 / 1403.0 +
           p3 * (6300.0 / 1403.0));
      a = b * cos_h / sin_h;
    } else {
      const double p5 = p1 / cos_h;
      a = p2 * (2.0 + p3) * (460.0 / 1403.0) /
          (p5 + (2.0 + p3) * (220.0 / 1403.0) -
           (27.0 / 1403.0 - p3 * (6300.0 / 1403.0)) * (sin_h / cos_h));
      b = a * sin_h / cos_h;
    }
  }

  const Vec3 ra = {(460.0 * p2 + 451.0 * a + 288.0 * b) / 1403.0,
                   (460.0 * p2 - 891.0 * a - 261.0 * b) / 1403.0,
                   (460.0 * p2 - 220.0 * a - 6300.0 * b) / 1403.0};
  Vec3 rgb_c = matrices().cat02_hpe_inv * inverse_post_adaptation(ra, f_l_);
  for (int i = 0; i < 3; ++i) rgb_c[i] /= d_rgb_[i];
  const Vec3 xyz = matrices().cat02_inv * rgb_c;
  return {xyz[0], xyz[1], xyz[2]};
}

JabColor CamUcs::srgb_to_jab(const SrgbColor& c) const {
  return cam_to_jab(xyz_to_cam(linear_to_xyz(srgb_to_linear(c))));
}

SrgbColor CamUcs::jab_to_srgb(const JabColor& j) const {
  if (!(j.jp >= 0.0) || !std::isfinite(j.ap) || !std::isfinite(j.bp))
    throw MathError("J' must be a finite value >= 0");
  if (j.jp == 0.0) {
    if (j.ap != 0.0 || j.bp != 0.0)
      throw MathError("J'a'b' inverse undefined for J' = 0 with nonzero chroma");
    return {0.0, 0.0, 0.0};
  }
  return linear_to_srgb(xyz_to_linear(cam_to_xyz(jab_to_cam(j))));
}

JabColor cam_to_jab(const CamCorrelates& cam) {
  const double jp = (1.0 + 100.0 * kUcsC1) * cam.j / (1.0 + kUcsC1 * cam.j) / kUcsKl;
  const double mp = std::log1p(kUcsC2 * cam.m) / kUcsC2;
  const double h = cam.h / kDegPerRad;
  return {jp, mp * std::cos(h), mp * std::sin(h)};
}

CamCorrelates jab_to_cam(const JabColor& jab) {
  const double jp = jab.jp * kUcsKl;
  const double j = -jp / (kUcsC1 * jp - 100.0 * kUcsC1 - 1.0);
  const double mp = std::hypot(jab.ap, jab.bp);
  double h = std::atan2(jab.bp, jab.ap) * kDegPerRad;
  if (h < 0.0) h += 360.0;
  return {j, std::expm1(kUcsC2 * mp) / kUcsC2, h};
}

double srgb_to_linear(double c) {
  const double a = std::abs(c);
  const double v = a <= 0.04045 ? a / 12.92 : std::pow((a + 0.055) / 1.055, 2.4);
  return std::copysign(v, c);
}

double linear_to_srgb(double c) {
  const double a = std::abs(c);
  const double v = a <= 0.04045 / 12.92 ? a * 12.92 : 1.055 * std::pow(a, 1.0 / 2.4) - 0.055;
  return std::copysign(v, c);
}

LinearRgb srgb_to_linear(const SrgbColor& c) {
  return {srgb_to_linear(c.r), srgb_to_linear(c.g), srgb_to_linear(c.b)};
}

SrgbColor linear_to_srgb(const LinearRgb& c) {
  return {linear_to_srgb(c.r), linear_to_srgb(c.g), linear_to_srgb(c.b)};
}

Xyz linear_to_xyz(const LinearRgb& c) {
  const Vec3 v = kSrgbToXyz * Vec3{c.r, c.g, c.b};
  return {100.0 * v[0], 100.0 * v[1], 100.0 * v[2]};
}

LinearRgb xyz_to_linear(const Xyz& xyz) {
  const Vec3 v = matrices().xyz_to_srgb * Vec3{xyz.x / 100.0, xyz.y / 100.0, xyz.z / 100.0};
  return {v[0], v[1], v[2]};
}

JabColor srgb_to_jab(const SrgbColor& c, const ViewingConditions& vc) {
  return CamUcs(vc).srgb_to_jab(c);
}

SrgbColor jab_to_srgb(const JabColor& j, const ViewingConditions& vc) {
  return CamUcs(vc).jab_to_srgb(j);
}

SrgbColor clamp_gamut(const SrgbColor& c) {
  return {std::clamp(c.r, 0.0, 1.0), std::clamp(c.g, 0.0, 1.0), std::clamp(c.b, 0.0, 1.0)};
}

bool in_gamut(const SrgbColor& c, double eps) {
  const auto ok = [eps](double v) { return v >= -eps && v <= 1.0 + eps; };
  return ok(c.r) && ok(c.g) && ok(c.b);
}

}  // namespace cvdcmap
