// SPDX-License-Identifier: Apache-2.0
//
// sRGB <-> CIE XYZ <-> CIECAM02 <-> CAM02-UCS conversions.
#pragma once

#include <string>
#include <string_view>

#include "cvdcmap/color.hpp"

namespace cvdcmap {

enum class Surround { kAverage, kDim, kDark };

/// CIECAM02 surround constants (CIE 159:2004, table 1).
struct SurroundConstants {
  double f;    // degree of adaptation factor F
  double c;    // impact of surround
  double n_c;  // chromatic induction factor
};

SurroundConstants surround_constants(Surround s);
std::string_view to_string(Surround s);
Surround surround_from_string(std::string_view name);

/// White of the IEC 61966-2-1 sRGB encoding (D65), Y = 100.
Xyz srgb_white();

struct ViewingConditions {
  Xyz whitepoint = srgb_white();
  double adapting_luminance = 64.0 / (5.0 * 3.14159265358979323846);  // L_A, cd/m^2
  double background_luminance = 20.0;                                 // Y_b, percent
  Surround surround = Surround::kAverage;
  // Full adaptation (D = 1). When false D follows the CIE formula in F and L_A.
  bool discount_illuminant = true;

  /// Throws DomainError unless L_A > 0, Y_b in (0, 100] and the white is positive.
  void validate() const;

  friend bool operator==(const ViewingConditions&, const ViewingConditions&) = default;
};

/// CIECAM02 correlates consumed by the uniform-space transform.
struct CamCorrelates {
  double j = 0.0;  // lightness
  double m = 0.0;  // colorfulness
  double h = 0.0;  // hue angle, degrees in [0, 360)
};

/// Precomputed CIECAM02 + CAM02-UCS model for one set of viewing conditions.
/// Immutable after construction and safe to share between threads.
class CamUcs {
 public:
  explicit CamUcs(const ViewingConditions& vc = {});

  const ViewingConditions& conditions() const { return vc_; }

  CamCorrelates xyz_to_cam(const Xyz& xyz) const;
  Xyz cam_to_xyz(const CamCorrelates& cam) const;

  JabColor srgb_to_jab(const SrgbColor& c) const;
  /// Unclamped; channels outside [0, 1] flag an out-of-gamut J'a'b' point.
  SrgbColor jab_to_srgb(const JabColor& j) const;

 private:
  ViewingConditions vc_;
  double f_l_ = 0.0;
  double n_ = 0.0;
  double z_ = 0.0;
  double n_bb_ = 0.0;
  double a_w_ = 0.0;
  double c_ = 0.0;
  double n_c_ = 0.0;
  Vec3 d_rgb_{};
};

// CAM02-UCS (Luo, Cui & Li 2006) coefficients.
inline constexpr double kUcsKl = 1.0;
inline constexpr double kUcsC1 = 0.007;
inline constexpr double kUcsC2 = 0.0228;

JabColor cam_to_jab(const CamCorrelates& cam);
CamCorrelates jab_to_cam(const JabColor& jab);

/// IEC 61966-2-1 decoding, extended sign-symmetrically to negative values.
double srgb_to_linear(double c);
double linear_to_srgb(double c);
LinearRgb srgb_to_linear(const SrgbColor& c);
SrgbColor linear_to_srgb(const LinearRgb& c);

Xyz linear_to_xyz(const LinearRgb& c);
LinearRgb xyz_to_linear(const Xyz& xyz);

JabColor srgb_to_jab(const SrgbColor& c, const ViewingConditions& vc = {});
SrgbColor jab_to_srgb(const JabColor& j, const ViewingConditions& vc = {});

/// Absolute colorimetric clamp: each channel to [0, 1].
SrgbColor clamp_gamut(const SrgbColor& c);
bool in_gamut(const SrgbColor& c, double eps = 0.0);

}  // namespace cvdcmap
