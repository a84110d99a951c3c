// SPDX-License-Identifier: Apache-2.0
//
// Color-vision-deficiency simulation after Machado, Oliveira & Fernandes
// (2009), with continuous severity.
#pragma once

#include <string_view>

#include "cvdcmap/color.hpp"

namespace cvdcmap {

enum class CvdKind { kDeuteranomaly, kProtanomaly, kTritanomaly };

std::string_view to_string(CvdKind kind);
/// Accepts "deuteranomaly", "protanomaly", "tritanomaly" (or their
/// -opia/short forms "deutan", "protan", "tritan").
CvdKind cvd_kind_from_string(std::string_view name);

/// Severity 0 is normal vision, 100 is complete dichromacy.
struct CvdSpec {
  CvdKind kind = CvdKind::kDeuteranomaly;
  double severity = 100.0;

  /// Throws DomainError unless severity is in [0, 100].
  void validate() const;
};

/// Simulation matrix in linear RGB: the tabulated matrix for multiples of 10,
/// entry-wise linear interpolation in between. Identity at severity 0.
Mat3 machado_matrix(const CvdSpec& spec);

/// Color as seen with the given deficiency. Input and output in [0, 1]^3;
/// linear values leaving [0, 1] after the matrix are clamped.
SrgbColor simulate_cvd(const SrgbColor& c, const CvdSpec& spec);
SrgbColor simulate_cvd(const SrgbColor& c, const Mat3& matrix);

inline constexpr int kDefaultGamutResolution = 64;

/// Fraction of distinct 8-bit colors that remain distinct after simulation,
/// sampled on a resolution^3 lattice of the sRGB cube.
double gamut_fraction(CvdKind kind, double severity, int resolution = kDefaultGamutResolution);

}  // namespace cvdcmap
