// SPDX-License-Identifier: Apache-2.0

#include "cvdcmap/io.hpp"

#include <png.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "cvdcmap/errors.hpp"
#include "format.hpp"
#include "json.hpp"

namespace cvdcmap {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_fields(const std::string& line) {
  std::vector<Token> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',' || ch == ';' || ch == '\t' || ch == ' ' || ch == '\r') {
      if (!cur.empty()) out.push_back({std::move(cur), out.size() + 1});
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back({std::move(cur), out.size() + 1});
  return out;
}

bool parse_number(const std::string& s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last && std::isfinite(out);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::ofstream open_out(const fs::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream f(path, mode);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  return f;
}

struct Cell {
  double value;
  std::size_t row;
  std::size_t column;
};

}  // namespace

std::string_view to_string(TableScale s) { return s == TableScale::kUnit ? "unit" : "byte"; }

TableScale table_scale_from_string(std::string_view name) {
  if (name == "unit") return TableScale::kUnit;
  if (name == "byte") return TableScale::kByte;
  throw DomainError("unknown table scale '" + std::string(name) + "' (expected unit or byte)");
}

std::uint8_t to_byte(double v) {
  return static_cast<std::uint8_t>(std::floor(std::clamp(v, 0.0, 1.0) * 255.0 + 0.5));
}

Colormap parse_colormap_table(std::istream& in, const std::string& name) {
  Colormap cmap;
  cmap.name = name;
  std::vector<std::vector<Cell>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      const std::string body = trim(t.substr(1));
      const auto colon = body.find(':');
      if (colon != std::string::npos && colon > 0)
        cmap.metadata[trim(body.substr(0, colon))] = trim(body.substr(colon + 1));
      continue;
    }
    std::vector<Cell> cells;
    const std::string data = trim(t.substr(0, t.find('#')));
    for (const Token& tok : split_fields(data)) {
      double v = 0.0;
      if (!parse_number(tok.text, v))
        throw ParseError("row " + std::to_string(line_no) + ", column " +
                             std::to_string(tok.column) + ": not a number: '" + tok.text + "'",
                         line_no, tok.column);
      cells.push_back({v, line_no, tok.column});
    }
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw ParseError("colormap table has no data rows", 0, 0);

  // Column-oriented input: three rows (R, G, B), one column per color.
  const bool transposed = rows.size() == 3 && rows[0].size() > 3 &&
                          rows[1].size() == rows[0].size() && rows[2].size() == rows[0].size();
  std::vector<std::array<Cell, 3>> colors;
  if (transposed) {
    for (std::size_t j = 0; j < rows[0].size(); ++j) colors.push_back({rows[0][j], rows[1][j], rows[2][j]});
  } else {
    for (const auto& r : rows) {
      if (r.size() != 3) {
        const std::size_t col = r.size() < 3 ? r.size() + 1 : 4;
        throw ParseError("row " + std::to_string(r.front().row) + ", column " +
                             std::to_string(col) + ": expected 3 values, found " +
                             std::to_string(r.size()),
                         r.front().row, col);
      }
      colors.push_back({r[0], r[1], r[2]});
    }
  }
  if (colors.size() < 2) throw ParseError("colormap table needs at least two colors", rows[0][0].row, 1);

  double max_v = 0.0;
  for (const auto& c : colors)
    for (const Cell& cell : c) {
      if (cell.value < 0.0)
        throw ParseError("row " + std::to_string(cell.row) + ", column " +
                             std::to_string(cell.column) + ": negative channel value",
                         cell.row, cell.column);
      max_v = std::max(max_v, cell.value);
    }
  const bool byte_scale = max_v > 1.0;
  for (const auto& c : colors) {
    std::array<double, 3> v{};
    for (std::size_t k = 0; k < 3; ++k) {
      const Cell& cell = c[k];
      if (byte_scale && (cell.value > 255.0 || cell.value != std::floor(cell.value)))
        throw ParseError("row " + std::to_string(cell.row) + ", column " +
                             std::to_string(cell.column) +
                             ": 0-255 tables must hold integers in [0, 255]",
                         cell.row, cell.column);
      v[k] = byte_scale ? cell.value / 255.0 : cell.value;
    }
    cmap.entries.push_back({v[0], v[1], v[2]});
  }
  cmap.metadata["scale"] = byte_scale ? "byte" : "unit";
  if (const auto it = cmap.metadata.find("name"); it != cmap.metadata.end()) {
    if (!it->second.empty()) cmap.name = it->second;
    cmap.metadata.erase(it);
  }
  return cmap;
}

Colormap load_colormap(const std::string& path_or_name, const ViewingConditions& vc) {
  const fs::path p(path_or_name);
  std::error_code ec;
  if (fs::is_regular_file(p, ec)) {
    std::ifstream in(p);
    if (!in) throw IoError("cannot open '" + path_or_name + "'");
    Colormap cmap = parse_colormap_table(in, p.stem().string());
    cmap.metadata.try_emplace("source", path_or_name);
    return cmap;
  }
  return builtin_colormap(path_or_name, vc);
}

std::string format_table(const Colormap& cmap, TableScale scale) {
  std::ostringstream out;
  if (!cmap.name.empty()) out << "# name: " << cmap.name << '\n';
  for (const auto& [k, v] : cmap.metadata)
    if (k != "name" && k != "scale") out << "# " << k << ": " << v << '\n';
  out << "# scale: " << to_string(scale) << '\n';
  for (const SrgbColor& c : cmap.entries) {
    if (scale == TableScale::kByte) {
      out << int{to_byte(c.r)} << ' ' << int{to_byte(c.g)} << ' ' << int{to_byte(c.b)} << '\n';
    } else {
      out << detail::format_double(c.r) << ' ' << detail::format_double(c.g) << ' '
          << detail::format_double(c.b) << '\n';
    }
  }
  return out.str();
}

void export_table(const Colormap& cmap, const fs::path& path, TableScale scale) {
  auto f = open_out(path);
  f << format_table(cmap, scale);
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

Colormap resample_colormap(const Colormap& cmap, std::size_t n) {
  if (cmap.size() < 2 || n < 2) throw DomainError("resampling needs at least two entries");
  Colormap out = cmap;
  out.entries.clear();
  const double span = static_cast<double>(cmap.size() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = span * static_cast<double>(i) / static_cast<double>(n - 1);
    const auto k = std::min(static_cast<std::size_t>(s), cmap.size() - 2);
    const double f = s - static_cast<double>(k);
    const SrgbColor& a = cmap.entries[k];
    const SrgbColor& b = cmap.entries[k + 1];
    out.entries.push_back({a.r + f * (b.r - a.r), a.g + f * (b.g - a.g), a.b + f * (b.b - a.b)});
  }
  return out;
}

LutBytes lut_bytes(const Colormap& cmap) {
  if (cmap.size() != kLutEntries) throw DomainError("an ImageJ LUT needs exactly 256 entries");
  LutBytes bytes{};
  for (std::size_t i = 0; i < kLutEntries; ++i) {
    bytes[i] = to_byte(cmap.entries[i].r);
    bytes[kLutEntries + i] = to_byte(cmap.entries[i].g);
    bytes[2 * kLutEntries + i] = to_byte(cmap.entries[i].b);
  }
  return bytes;
}

bool export_lut(const Colormap& cmap, const fs::path& path) {
  const bool resample = cmap.size() != kLutEntries;
  const LutBytes bytes = lut_bytes(resample ? resample_colormap(cmap, kLutEntries) : cmap);
  auto f = open_out(path, std::ios::out | std::ios::binary);
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw IoError("failed writing '" + path.string() + "'");
  return resample;
}

Colormap read_lut(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "'");
  LutBytes bytes{};
  f.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (f.gcount() != static_cast<std::streamsize>(bytes.size()) || f.peek() != EOF)
    throw ParseError("'" + path.string() + "' is not a 768-byte LUT", 0, 0);
  Colormap cmap;
  cmap.name = path.stem().string();
  for (std::size_t i = 0; i < kLutEntries; ++i)
    cmap.entries.push_back({bytes[i] / 255.0, bytes[kLutEntries + i] / 255.0,
                            bytes[2 * kLutEntries + i] / 255.0});
  return cmap;
}

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

thread_local std::string png_error_message;

[[noreturn]] void png_fail(png_structp png, png_const_charp msg) {
  png_error_message = msg ? msg : "unknown error";
  png_longjmp(png, 1);
}
void png_warn(png_structp, png_const_charp) {}

}  // namespace

void export_png(const RgbImage& image, const fs::path& path) {
  if (image.width == 0 || image.height == 0 || image.pixels.size() != image.width * image.height)
    throw DomainError("invalid raster for PNG export");
  FilePtr fp(std::fopen(path.string().c_str(), "wb"));
  if (!fp) throw IoError("cannot open '" + path.string() + "' for writing");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, png_fail, png_warn);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("libpng initialization failed");
  }
  std::vector<std::uint8_t> row(image.width * 3);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG write '" + path.string() + "': " + png_error_message);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width),
               static_cast<png_uint_32>(image.height), 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::size_t y = 0; y < image.height; ++y) {
    for (std::size_t x = 0; x < image.width; ++x) {
      const SrgbColor& c = image.at(x, y);
      row[3 * x] = to_byte(c.r);
      row[3 * x + 1] = to_byte(c.g);
      row[3 * x + 2] = to_byte(c.b);
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

RgbImage read_png(const fs::path& path) {
  FilePtr fp(std::fopen(path.string().c_str(), "rb"));
  if (!fp) throw IoError("cannot open '" + path.string() + "'");
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, png_fail, png_warn);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("libpng initialization failed");
  }
  RgbImage out;
  std::vector<std::uint8_t> row;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("PNG read '" + path.string() + "': " + png_error_message);
  }
  png_init_io(png, fp.get());
  png_read_info(png, info);
  png_set_expand(png);
  png_set_strip_16(png);
  png_set_strip_alpha(png);
  png_set_gray_to_rgb(png);
  png_read_update_info(png, info);
  out.width = png_get_image_width(png, info);
  out.height = png_get_image_height(png, info);
  row.resize(png_get_rowbytes(png, info));
  out.pixels.reserve(out.width * out.height);
  for (std::size_t y = 0; y < out.height; ++y) {
    png_read_row(png, row.data(), nullptr);
    for (std::size_t x = 0; x < out.width; ++x)
      out.pixels.push_back({row[3 * x] / 255.0, row[3 * x + 1] / 255.0, row[3 * x + 2] / 255.0});
  }
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

ScalarImage load_scalar_image(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  ScalarImage img;
  if (ext == ".png") {
    const RgbImage rgb = read_png(path);
    img.width = rgb.width;
    img.height = rgb.height;
    img.values.reserve(rgb.pixels.size());
    for (const SrgbColor& c : rgb.pixels) img.values.push_back((c.r + c.g + c.b) / 3.0);
    return img;
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto fields = split_fields(t);
    if (img.width == 0) img.width = fields.size();
    if (fields.size() != img.width)
      throw ParseError("row " + std::to_string(line_no) + ": expected " +
                           std::to_string(img.width) + " values",
                       line_no, fields.size() + 1);
    for (const Token& tok : fields) {
      double v = 0.0;
      if (!parse_number(tok.text, v))
        throw ParseError("row " + std::to_string(line_no) + ", column " +
                             std::to_string(tok.column) + ": not a number",
                         line_no, tok.column);
      img.values.push_back(v);
    }
    ++img.height;
  }
  if (img.values.empty()) throw ParseError("image file has no data", 0, 0);
  return img;
}

SamplePath load_path_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  SamplePath out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto fields = split_fields(t);
    double x = 0.0;
    double y = 0.0;
    const bool numeric = fields.size() == 2 && parse_number(fields[0].text, x) &&
                         parse_number(fields[1].text, y);
    if (!numeric) {
      if (out.empty() && line_no == 1) continue;  // header
      throw ParseError("row " + std::to_string(line_no) + ": expected x,y pixel coordinates",
                       line_no, 1);
    }
    if (x < 0.0 || y < 0.0 || x != std::floor(x) || y != std::floor(y))
      throw ParseError("row " + std::to_string(line_no) + ": coordinates must be non-negative integers",
                       line_no, 1);
    out.push_back({static_cast<std::size_t>(x), static_cast<std::size_t>(y)});
  }
  return out;
}

void write_metadata_json(const std::map<std::string, std::string>& metadata, const fs::path& path) {
  json j(metadata);
  auto f = open_out(path);
  f << j.dump(2) << '\n';
}

ViewingConditions parse_viewing_conditions(const std::string& json_text) {
  ViewingConditions vc;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("viewing conditions: ") + e.what(), 0, 0);
  }
  try {
    if (j.contains("whitepoint")) {
      const auto& w = j.at("whitepoint");
      if (!w.is_array() || w.size() != 3)
        throw DomainError("viewing conditions: whitepoint must be [X, Y, Z]");
      vc.whitepoint = {w[0].get<double>(), w[1].get<double>(), w[2].get<double>()};
    }
    if (j.contains("L_A")) vc.adapting_luminance = j.at("L_A").get<double>();
    if (j.contains("Y_b")) vc.background_luminance = j.at("Y_b").get<double>();
    if (j.contains("surround")) vc.surround = surround_from_string(j.at("surround").get<std::string>());
    if (j.contains("discount_illuminant"))
      vc.discount_illuminant = j.at("discount_illuminant").get<bool>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("viewing conditions: ") + e.what(), 0, 0);
  }
  vc.validate();
  return vc;
}

ViewingConditions load_viewing_conditions(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_viewing_conditions(ss.str());
}

std::string viewing_conditions_json(const ViewingConditions& vc) {
  json j;
  j["whitepoint"] = {vc.whitepoint.x, vc.whitepoint.y, vc.whitepoint.z};
  j["L_A"] = vc.adapting_luminance;
  j["Y_b"] = vc.background_luminance;
  j["surround"] = std::string(to_string(vc.surround));
  j["discount_illuminant"] = vc.discount_illuminant;
  return j.dump();
}

void write_cdps_csv(const CdpsResult& result, const fs::path& path) {
  auto f = open_out(path);
  f << "data_delta,perceptual_delta\n";
  for (std::size_t i = 0; i < result.n_pairs(); ++i)
    f << detail::format_double(result.data_deltas[i]) << ','
      << detail::format_double(result.perceptual_deltas[i]) << '\n';
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

std::string cdps_json(const CdpsResult& result) {
  json j;
  j["slope"] = result.slope;
  j["r2"] = result.r2;
  j["n_pairs"] = result.n_pairs();
  j["gray_slope"] = result.gray_slope;
  return j.dump(2);
}

}  // namespace cvdcmap
