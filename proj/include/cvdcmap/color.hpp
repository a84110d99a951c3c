// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>

namespace cvdcmap {

/// Gamma-encoded sRGB on the 0-1 scale. Channels may leave [0, 1] before a
/// gamut clamp; such values mark out-of-gamut colors.
struct SrgbColor {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;

  friend bool operator==(const SrgbColor&, const SrgbColor&) = default;
};

/// Linear-light sRGB (no transfer function applied).
struct LinearRgb {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;

  friend bool operator==(const LinearRgb&, const LinearRgb&) = default;
};

/// CIE XYZ scaled so that the white has Y = 100.
struct Xyz {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Xyz&, const Xyz&) = default;
};

/// CAM02-UCS coordinates: lightness J', red-green a', yellow-blue b'.
struct JabColor {
  double jp = 0.0;
  double ap = 0.0;
  double bp = 0.0;

  friend bool operator==(const JabColor&, const JabColor&) = default;
};

/// Perceptual color difference. The only color metric used by the library.
inline double distance(const JabColor& x, const JabColor& y) {
  return std::sqrt((x.jp - y.jp) * (x.jp - y.jp) + (x.ap - y.ap) * (x.ap - y.ap) +
                   (x.bp - y.bp) * (x.bp - y.bp));
}

/// Distance in the (a', b') plane only.
inline double hue_distance(const JabColor& x, const JabColor& y) {
  return std::hypot(x.ap - y.ap, x.bp - y.bp);
}

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

inline Vec3 operator*(const Mat3& m, const Vec3& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
          m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
          m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Mat3 inverse(const Mat3& m);

inline Mat3 identity3() { return {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}}; }

}  // namespace cvdcmap
