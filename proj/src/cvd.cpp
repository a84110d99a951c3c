// SPDX-License-Identifier: Apache-2.0

#include "cvdcmap/cvd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cvdcmap/colorspace.hpp"
#include "cvdcmap/errors.hpp"
#include "tables.hpp"

namespace cvdcmap {

namespace {

const detail::MachadoTable& table_for(CvdKind kind) {
  switch (kind) {
    case CvdKind::kDeuteranomaly:
      return detail::kDeuteranomalyMatrices;
    case CvdKind::kProtanomaly:
      return detail::kProtanomalyMatrices;
    case CvdKind::kTritanomaly:
      return detail::kTritanomalyMatrices;
  }
  throw DomainError("unknown CVD kind");
}

std::uint32_t quantize(const SrgbColor& c) {
  const auto q = [](double v) {
    return static_cast<std::uint32_t>(std::floor(std::clamp(v, 0.0, 1.0) * 255.0 + 0.5));
  };
  return (q(c.r) << 16) | (q(c.g) << 8) | q(c.b);
}

}  // namespace

std::string_view to_string(CvdKind kind) {
  switch (kind) {
    case CvdKind::kDeuteranomaly:
      return "deuteranomaly";
    case CvdKind::kProtanomaly:
      return "protanomaly";
    case CvdKind::kTritanomaly:
      return "tritanomaly";
  }
  return "?";
}

CvdKind cvd_kind_from_string(std::string_view name) {
  if (name == "deuteranomaly" || name == "deuteranopia" || name == "deutan")
    return CvdKind::kDeuteranomaly;
  if (name == "protanomaly" || name == "protanopia" || name == "protan")
    return CvdKind::kProtanomaly;
  if (name == "tritanomaly" || name == "tritanopia" || name == "tritan")
    return CvdKind::kTritanomaly;
  throw DomainError("unknown CVD type '" + std::string(name) +
                    "' (expected deuteranomaly, protanomaly or tritanomaly)");
}

void CvdSpec::validate() const {
  if (!(severity >= 0.0 && severity <= 100.0))
    throw DomainError("CVD severity must lie in [0, 100], got " + std::to_string(severity));
}

Mat3 machado_matrix(const CvdSpec& spec) {
  spec.validate();
  const auto& table = table_for(spec.kind);
  const int low = std::min(static_cast<int>(std::floor(spec.severity / 10.0)), 10);
  if (low == 10) return table[10];
  const double frac = (spec.severity - 10.0 * low) / 10.0;
  if (frac == 0.0) return table[low];
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out[i][j] = (1.0 - frac) * table[low][i][j] + frac * table[low + 1][i][j];
  return out;
}

SrgbColor simulate_cvd(const SrgbColor& c, const Mat3& matrix) {
  const LinearRgb lin = srgb_to_linear(c);
  const Vec3 v = matrix * Vec3{lin.r, lin.g, lin.b};
  return linear_to_srgb(LinearRgb{std::clamp(v[0], 0.0, 1.0), std::clamp(v[1], 0.0, 1.0),
                                  std::clamp(v[2], 0.0, 1.0)});
}

SrgbColor simulate_cvd(const SrgbColor& c, const CvdSpec& spec) {
  return simulate_cvd(c, machado_matrix(spec));
}

double gamut_fraction(CvdKind kind, double severity, int resolution) {
  if (resolution < 16) throw DomainError("gamut_fraction needs a lattice resolution >= 16");
  const Mat3 m = machado_matrix({kind, severity});

  std::vector<bool> seen_in(1u << 24);
  std::vector<bool> seen_out(1u << 24);
  std::size_t distinct_in = 0;
  std::size_t distinct_out = 0;
  const double step = 1.0 / (resolution - 1);
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      for (int k = 0; k < resolution; ++k) {
        const SrgbColor c{i * step, j * step, k * step};
        const std::uint32_t qi = quantize(c);
        if (seen_in[qi]) continue;
        seen_in[qi] = true;
        ++distinct_in;
        const std::uint32_t qo = quantize(simulate_cvd(c, m));
        if (!seen_out[qo]) {
          seen_out[qo] = true;
          ++distinct_out;
        }
      }
    }
  }
  return static_cast<double>(distinct_out) / static_cast<double>(distinct_in);
}

}  // namespace cvdcmap
