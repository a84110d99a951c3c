// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

namespace cvdcmap {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Ordinary least squares y ~ intercept + slope * x. Throws
/// DegenerateDataError when x has no spread or the sizes differ.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

/// 1 - SS_res / SS_tot of `observed` against `predicted`. A constant
/// observation gives 1 when matched exactly and 0 otherwise.
double coefficient_of_determination(std::span<const double> observed,
                                    std::span<const double> predicted);

}  // namespace cvdcmap
