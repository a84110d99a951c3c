// SPDX-License-Identifier: Apache-2.0
//
// Colormap ingestion, the built-in registry and file exporters.
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cvdcmap/analyze.hpp"
#include "cvdcmap/colormap.hpp"
#include "cvdcmap/colorspace.hpp"

namespace cvdcmap {

enum class TableScale { kUnit, kByte };

std::string_view to_string(TableScale s);
TableScale table_scale_from_string(std::string_view name);

/// Round half up after clamping to [0, 1].
std::uint8_t to_byte(double v);

// ---- registry -------------------------------------------------------------

/// Names of the built-in maps: viridis, jet, grayscale-jp, cividis.
std::vector<std::string> builtin_names();
bool is_builtin(std::string_view name);
/// cividis is regenerated by the optimizer from viridis on first use.
Colormap builtin_colormap(std::string_view name, const ViewingConditions& vc = {});

// ---- tables ---------------------------------------------------------------

/// Parses comma, tab, semicolon or whitespace separated rows of three values.
/// Lines starting with '#' are comments; "# key: value" comments become
/// metadata. Values above 1 switch the whole table to the 0-255 scale
/// (recorded as metadata "scale"). A 3-row table with more than three
/// columns is read column-wise.
Colormap parse_colormap_table(std::istream& in, const std::string& name = "table");

/// A file path if one exists, otherwise a built-in name. Throws
/// UnknownColormapError listing the registered names.
Colormap load_colormap(const std::string& path_or_name, const ViewingConditions& vc = {});

std::string format_table(const Colormap& cmap, TableScale scale);
void export_table(const Colormap& cmap, const std::filesystem::path& path, TableScale scale);

// ---- ImageJ LUT -----------------------------------------------------------

inline constexpr std::size_t kLutEntries = 256;
using LutBytes = std::array<std::uint8_t, 3 * kLutEntries>;

/// Piecewise-linear resampling by index in sRGB.
Colormap resample_colormap(const Colormap& cmap, std::size_t n);

/// 256 red bytes, then 256 green, then 256 blue. Requires 256 entries.
LutBytes lut_bytes(const Colormap& cmap);

/// Writes the raw 768-byte LUT. Maps without 256 entries are resampled
/// first; the return value tells whether that happened.
bool export_lut(const Colormap& cmap, const std::filesystem::path& path);
Colormap read_lut(const std::filesystem::path& path);

// ---- PNG ------------------------------------------------------------------

/// 8-bit RGB, channels quantized with to_byte.
void export_png(const RgbImage& image, const std::filesystem::path& path);
RgbImage read_png(const std::filesystem::path& path);

// ---- scalar images and paths ----------------------------------------------

/// PNG (mean of the color channels) or a numeric text grid; not normalized.
ScalarImage load_scalar_image(const std::filesystem::path& path);
/// CSV of x,y pixel coordinates; an optional non-numeric header is skipped.
SamplePath load_path_csv(const std::filesystem::path& path);

// ---- metadata and JSON ----------------------------------------------------

void write_metadata_json(const std::map<std::string, std::string>& metadata,
                         const std::filesystem::path& path);

/// {whitepoint: [X, Y, Z], L_A, Y_b, surround, discount_illuminant}; missing
/// keys keep their defaults.
ViewingConditions parse_viewing_conditions(const std::string& json_text);
ViewingConditions load_viewing_conditions(const std::filesystem::path& path);
std::string viewing_conditions_json(const ViewingConditions& vc);

/// Columns data_delta, perceptual_delta.
void write_cdps_csv(const CdpsResult& result, const std::filesystem::path& path);
/// {slope, r2, n_pairs, gray_slope}.
std::string cdps_json(const CdpsResult& result);

}  // namespace cvdcmap
