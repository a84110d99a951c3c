// SPDX-License-Identifier: Apache-2.0

#include "cvdcmap/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cvdcmap/analyze.hpp"
#include "cvdcmap/cvd.hpp"
#include "cvdcmap/errors.hpp"
#include "cvdcmap/io.hpp"
#include "cvdcmap/optimize.hpp"
#include "cvdcmap/version.hpp"
#include "format.hpp"

namespace cvdcmap {

namespace {

struct Outputs {
  std::string table;
  std::string lut;
  std::string png;
  std::string scale = "unit";
  std::size_t png_height = 32;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--out-table", table, "Write the colormap as a text table");
    cmd->add_option("--out-lut", lut, "Write a 768-byte ImageJ LUT (plus a .json sidecar)");
    cmd->add_option("--out-png", png, "Write a ramp image of the colormap (plus a .json sidecar)");
    cmd->add_option("--scale", scale, "Table value scale")
        ->check(CLI::IsMember({"unit", "byte"}))
        ->capture_default_str();
    cmd->add_option("--png-height", png_height, "Height of the ramp image")->capture_default_str();
  }

  bool any() const { return !table.empty() || !lut.empty() || !png.empty(); }
};

std::string sidecar(const std::string& path) { return path + ".json"; }

void emit(const Colormap& cmap, const Outputs& outs, std::ostream& out, std::ostream& err) {
  const TableScale scale = table_scale_from_string(outs.scale);
  if (!outs.any()) out << format_table(cmap, scale);
  if (!outs.table.empty()) export_table(cmap, outs.table, scale);
  if (!outs.lut.empty()) {
    if (export_lut(cmap, outs.lut))
      err << "warning: " << cmap.size() << "-entry map resampled to 256 entries for the LUT\n";
    write_metadata_json(cmap.metadata, sidecar(outs.lut));
  }
  if (!outs.png.empty()) {
    export_png(colormap_ramp(cmap, std::max<std::size_t>(cmap.size(), 2), outs.png_height), outs.png);
    write_metadata_json(cmap.metadata, sidecar(outs.png));
  }
}

std::string join_args(int argc, const char* const* argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimize and evaluate colormaps for color-vision-deficient and normal viewers"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string vc_file;
  std::string cvd_type = "deuteranomaly";
  double severity = 100.0;
  const auto add_cvd = [&](CLI::App* cmd) {
    cmd->add_option("--cvd-type", cvd_type, "deuteranomaly, protanomaly or tritanomaly")
        ->capture_default_str();
    cmd->add_option("--severity", severity, "0 (normal vision) to 100 (dichromacy)")
        ->check(CLI::Range(0.0, 100.0))
        ->capture_default_str();
  };
  const auto add_vc = [&](CLI::App* cmd) {
    cmd->add_option("--viewing-conditions", vc_file,
                    "JSON {whitepoint, L_A, Y_b, surround, discount_illuminant}")
        ->check(CLI::ExistingFile);
  };

  // optimize
  auto* opt = app.add_subcommand("optimize", "Build a CVD-optimized, perceptually uniform map");
  std::string opt_input = "viridis";
  std::string method = "max-range";
  std::size_t size = 256;
  double warn_clamp = 0.05;
  Outputs opt_out;
  opt->add_option("--input", opt_input, "Colormap table file or built-in name")->capture_default_str();
  add_cvd(opt);
  opt->add_option("--method", method, "J' linearization")
      ->check(CLI::IsMember({"fit", "max-range"}))
      ->capture_default_str();
  opt->add_option("--size", size, "Number of output entries")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20))
      ->capture_default_str();
  opt->add_option("--warn-clamp", warn_clamp, "Warn when a channel is clamped by more than this")
      ->capture_default_str();
  opt_out.add_to(opt);
  add_vc(opt);

  // simulate
  auto* sim = app.add_subcommand("simulate", "Apply CVD simulation to a colormap or PNG");
  std::string sim_input = "viridis";
  std::string sim_png;
  Outputs sim_out;
  sim->add_option("--input", sim_input, "Colormap table file or built-in name")->capture_default_str();
  sim->add_option("--png", sim_png, "Simulate every pixel of this PNG instead (needs --out-png)")
      ->check(CLI::ExistingFile);
  add_cvd(sim);
  sim_out.add_to(sim);

  // cdps
  auto* cd = app.add_subcommand("cdps", "Colormap-data perceptual sensitivity along a path");
  std::string cd_image;
  std::string cd_path;
  std::string cd_map = "cividis";
  std::string cd_pairing = "all";
  std::string cd_csv;
  std::string cd_json;
  cd->add_option("--image", cd_image, "Scalar image (PNG or text grid); default: the sine-ramp test image")
      ->check(CLI::ExistingFile);
  cd->add_option("--path", cd_path, "CSV of x,y pixel coordinates; default: the image's bottom row")
      ->check(CLI::ExistingFile);
  cd->add_option("--map", cd_map, "Colormap table file or built-in name")->capture_default_str();
  cd->add_option("--pairing", cd_pairing, "Pair all samples or consecutive ones only")
      ->check(CLI::IsMember({"all", "consecutive"}))
      ->capture_default_str();
  cd->add_option("--out-csv", cd_csv, "Write data_delta,perceptual_delta pairs");
  cd->add_option("--out-json", cd_json, "Write {slope, r2, n_pairs}");
  add_vc(cd);

  // testimage
  auto* ti = app.add_subcommand("testimage", "Render the sine-ramp colormap test image");
  std::size_t ti_width = 512;
  std::size_t ti_height = 128;
  double ti_wavelength = 8.0;
  double ti_amplitude = 0.05;
  std::string ti_out;
  std::string ti_overlay;
  ti->add_option("--width", ti_width)->capture_default_str();
  ti->add_option("--height", ti_height)->capture_default_str();
  ti->add_option("--wavelength", ti_wavelength, "Sine wavelength in pixels")->capture_default_str();
  ti->add_option("--amplitude", ti_amplitude, "Sine amplitude on the top row")->capture_default_str();
  ti->add_option("--out", ti_out, "Output PNG")->required();
  ti->add_option("--overlay", ti_overlay, "Color the image with this colormap");
  add_vc(ti);

  // gamut-fraction
  auto* gf = app.add_subcommand("gamut-fraction", "Fraction of sRGB colors still distinct under CVD");
  std::vector<double> gf_severities = {0, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  int gf_resolution = kDefaultGamutResolution;
  std::string gf_out;
  gf->add_option("--cvd-type", cvd_type)->capture_default_str();
  gf->add_option("--severity", gf_severities, "One or more severities (comma separated)")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 100.0));
  gf->add_option("--resolution", gf_resolution, "Lattice points per axis")
      ->check(CLI::Range(16, 256))
      ->capture_default_str();
  gf->add_option("--out", gf_out, "Also write the CSV here");

  auto* ls = app.add_subcommand("list", "List built-in colormaps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const std::string command_line = join_args(argc, argv);
  try {
    const ViewingConditions vc = vc_file.empty() ? ViewingConditions{} : load_viewing_conditions(vc_file);

    if (ls->parsed()) {
      for (const std::string& n : builtin_names()) out << n << '\n';
      return 0;
    }

    if (opt->parsed()) {
      OptimizeOptions o;
      o.cvd = {cvd_kind_from_string(cvd_type), severity};
      o.method = linearization_from_string(method);
      o.vc = vc;
      o.n_out = size;
      o.clamp_warn_threshold = warn_clamp;
      const Colormap input = load_colormap(opt_input, vc);
      OptimizeResult r;
      try {
        r = optimize_colormap_detailed(input, o);
      } catch (const InfeasibleLineError& e) {
        err << "error: " << e.what() << "\n"
            << "hint: the max-range method cannot place a straight J' line through the gamut bounds;"
               " retry with --method fit\n";
        return 2;
      } catch (const InfeasiblePointError& e) {
        err << "error: " << e.what() << "\n"
            << "hint: the max-range method needs every hue point to be displayable;"
               " retry with --method fit\n";
        return 2;
      }
      r.colormap.metadata["command"] = command_line;
      err << "clamp: max channel excess " << detail::format_double(r.clamp.max_channel_excess)
          << ", mean relative J'a'b' error " << detail::format_double(r.clamp.mean_relative_error)
          << "\n";
      if (r.clamp_warning)
        err << "warning: gamut clamping exceeded " << warn_clamp
            << "; consider the other linearization method\n";
      emit(r.colormap, opt_out, out, err);
      return 0;
    }

    if (sim->parsed()) {
      const CvdSpec spec{cvd_kind_from_string(cvd_type), severity};
      const Mat3 m = machado_matrix(spec);
      if (!sim_png.empty()) {
        if (sim_out.png.empty()) throw DomainError("--png input needs --out-png");
        RgbImage img = read_png(sim_png);
        for (SrgbColor& c : img.pixels) c = simulate_cvd(c, m);
        export_png(img, sim_out.png);
        return 0;
      }
      Colormap cmap = load_colormap(sim_input, vc);
      for (SrgbColor& c : cmap.entries) c = simulate_cvd(c, m);
      cmap.name += "-" + std::string(to_string(spec.kind));
      cmap.metadata["cvd_type"] = std::string(to_string(spec.kind));
      cmap.metadata["cvd_severity"] = detail::format_double(spec.severity);
      cmap.metadata["command"] = command_line;
      emit(cmap, sim_out, out, err);
      return 0;
    }

    if (cd->parsed()) {
      const ScalarImage image = cd_image.empty() ? kovesi_test_image()
                                                 : normalize_image(load_scalar_image(cd_image));
      const SamplePath path = cd_path.empty() ? row_path(image, image.height - 1) : load_path_csv(cd_path);
      const Colormap cmap = load_colormap(cd_map, vc);
      const CdpsResult res = cdps(image, path, cmap, vc,
                                  cd_pairing == "all" ? CdpsPairing::kAllPairs : CdpsPairing::kConsecutive);
      if (!cd_csv.empty()) write_cdps_csv(res, cd_csv);
      const std::string js = cdps_json(res);
      if (!cd_json.empty()) {
        std::ofstream f(cd_json);
        if (!f) throw IoError("cannot open '" + cd_json + "' for writing");
        f << js << '\n';
      }
      out << js << '\n';
      return 0;
    }

    if (ti->parsed()) {
      const ScalarImage img = kovesi_test_image(ti_width, ti_height, ti_wavelength, ti_amplitude);
      if (ti_overlay.empty()) {
        export_png(scalar_to_gray(img), ti_out);
      } else {
        const Colormap cmap = load_colormap(ti_overlay, vc);
        export_png(overlay(img, cmap), ti_out);
      }
      return 0;
    }

    if (gf->parsed()) {
      const CvdKind kind = cvd_kind_from_string(cvd_type);
      std::string csv = "severity,fraction\n";
      for (double s : gf_severities) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", gamut_fraction(kind, s, gf_resolution));
        csv += detail::format_double(s) + "," + buf + "\n";
      }
      out << csv;
      if (!gf_out.empty()) {
        std::ofstream f(gf_out);
        if (!f) throw IoError("cannot open '" + gf_out + "' for writing");
        f << csv;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace cvdcmap
