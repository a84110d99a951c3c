// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cvdcmap/color.hpp"

namespace cvdcmap {

/// Ordered sRGB entries plus provenance metadata (source, CVD spec,
/// linearization method, viewing conditions, ...).
struct Colormap {
  std::string name;
  std::vector<SrgbColor> entries;
  std::map<std::string, std::string> metadata;

  std::size_t size() const { return entries.size(); }
};

/// A colormap's trajectory through CAM02-UCS, parameterized by index.
struct JabCurve {
  std::vector<JabColor> points;

  std::size_t size() const { return points.size(); }
};

/// Sum of consecutive (a', b') chord lengths.
double hue_arc_length(const JabCurve& curve);

}  // namespace cvdcmap
