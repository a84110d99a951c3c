// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "cvdcmap/color.hpp"

namespace cvdcmap::detail {

using MachadoTable = std::array<Mat3, 11>;

extern const MachadoTable kProtanomalyMatrices;
extern const MachadoTable kDeuteranomalyMatrices;
extern const MachadoTable kTritanomalyMatrices;

extern const std::array<std::array<double, 3>, 256> kViridisData;

}  // namespace cvdcmap::detail
