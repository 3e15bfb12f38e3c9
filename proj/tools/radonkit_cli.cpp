// radonkit command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 runtime or data error, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "radonkit/radonkit.h"

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct PhantomDeleter {
  void operator()(rk_phantom* p) const noexcept { rk_phantom_free(p); }
};
struct ImageDeleter {
  void operator()(rk_image* p) const noexcept { rk_image_free(p); }
};
struct SinogramDeleter {
  void operator()(rk_sinogram* p) const noexcept { rk_sinogram_free(p); }
};
using PhantomPtr = std::unique_ptr<rk_phantom, PhantomDeleter>;
using ImagePtr = std::unique_ptr<rk_image, ImageDeleter>;
using SinogramPtr = std::unique_ptr<rk_sinogram, SinogramDeleter>;

// Carries a failed rk_status up to main.
struct Failure {
  int exit_code;
  std::string message;
};

void check(rk_status s, const std::string& context) {
  if (s == RK_OK) return;
  throw Failure{kExitData, context + ": " + rk_status_string(s) + ": " + rk_last_error()};
}

struct Source {
  std::vector<std::string> gallery;
  std::string file;

  void attach(CLI::App* cmd, bool many_galleries) {
    CLI::Option* g = nullptr;
    if (many_galleries) {
      g = cmd->add_option("--gallery", gallery,
                          "Gallery phantom name (repeatable; 'all' for every gallery)");
    } else {
      g = cmd->add_option("--gallery", gallery, "Gallery phantom name")->expected(1);
    }
    auto* f = cmd->add_option("--file", file, "Phantom text file");
    g->excludes(f);
    f->excludes(g);
  }

  // Resolves to (label, handle) pairs. Throws a usage failure when neither
  // source was given.
  std::vector<std::pair<std::string, PhantomPtr>> load() const {
    if (gallery.empty() && file.empty()) {
      throw Failure{kExitUsage, "exactly one of --gallery or --file is required"};
    }
    std::vector<std::pair<std::string, PhantomPtr>> out;
    if (!file.empty()) {
      rk_phantom* p = nullptr;
      check(rk_phantom_from_file(file.c_str(), &p), "loading " + file);
      std::string label = file;
      if (auto slash = label.find_last_of('/'); slash != std::string::npos) {
        label = label.substr(slash + 1);
      }
      out.emplace_back(label, PhantomPtr(p));
      return out;
    }
    std::vector<std::string> names;
    for (const auto& g : gallery) {
      if (g == "all") {
        for (size_t i = 0; i < rk_gallery_count(); ++i) names.emplace_back(rk_gallery_name(i));
      } else {
        names.push_back(g);
      }
    }
    for (const auto& name : names) {
      rk_phantom* p = nullptr;
      check(rk_phantom_from_gallery(name.c_str(), &p), "gallery");
      out.emplace_back(name, PhantomPtr(p));
    }
    return out;
  }
};

int cmd_gallery(const std::string& format) {
  if (format == "csv") std::cout << "name,figures,ellipses,rectangles\n";
  for (size_t i = 0; i < rk_gallery_count(); ++i) {
    const char* name = rk_gallery_name(i);
    rk_phantom* raw = nullptr;
    check(rk_phantom_from_gallery(name, &raw), "gallery");
    PhantomPtr p(raw);
    size_t count = 0;
    check(rk_phantom_figure_count(p.get(), &count), "gallery");
    size_t ellipses = 0;
    for (size_t k = 0; k < count; ++k) {
      rk_figure_kind kind{};
      check(rk_phantom_figure_kind(p.get(), k, &kind), "gallery");
      if (kind == RK_FIGURE_ELLIPSE) ++ellipses;
    }
    if (format == "csv") {
      std::cout << name << ',' << count << ',' << ellipses << ',' << count - ellipses << '\n';
    } else {
      std::string kinds;
      if (ellipses) kinds += std::to_string(ellipses) + " ellipses";
      if (count - ellipses) {
        if (!kinds.empty()) kinds += ", ";
        kinds += std::to_string(count - ellipses) + " rectangles";
      }
      std::printf("%-22s %zu figures (%s)\n", name, count, kinds.c_str());
    }
  }
  return 0;
}

int cmd_phantom(const Source& src, size_t n, const std::string& out, const std::string& pgm) {
  auto phantoms = src.load();
  rk_image* raw = nullptr;
  check(rk_rasterize(phantoms.front().second.get(), n, &raw), "rasterize");
  ImagePtr img(raw);
  check(rk_image_save(img.get(), out.c_str()), "writing " + out);
  if (!pgm.empty()) check(rk_image_export_pgm(img.get(), pgm.c_str()), "writing " + pgm);
  std::cout << "wrote " << n << "x" << n << " image to " << out << '\n';
  return 0;
}

int cmd_sinogram(const Source& src, size_t n, size_t angles, const std::string& method,
                 const std::string& out) {
  auto phantoms = src.load();
  const rk_phantom* p = phantoms.front().second.get();
  rk_sinogram* raw = nullptr;
  if (method == "analytic") {
    check(rk_analytic_sinogram(p, n, angles, &raw), "analytic sinogram");
  } else {
    rk_image* img_raw = nullptr;
    check(rk_rasterize(p, n, &img_raw), "rasterize");
    ImagePtr img(img_raw);
    check(rk_forward_project(img.get(), angles, &raw), "forward projection");
  }
  SinogramPtr sino(raw);
  check(rk_sinogram_save(sino.get(), out.c_str()), "writing " + out);
  std::cout << "wrote " << n << "x" << angles << " " << method << " sinogram to " << out << '\n';
  return 0;
}

int cmd_reconstruct(const std::string& input, std::optional<size_t> n, const std::string& filter,
                    bool no_circle, const std::string& out, const std::string& pgm) {
  rk_sinogram* raw = nullptr;
  check(rk_sinogram_load(input.c_str(), &raw), "reading " + input);
  SinogramPtr sino(raw);
  size_t n_t = 0;
  size_t n_theta = 0;
  check(rk_sinogram_shape(sino.get(), &n_t, &n_theta), "sinogram");
  const size_t side = n.value_or(n_t);
  const rk_filter kind = filter == "ramp" ? RK_FILTER_RAMP : RK_FILTER_RAMP_HANN;
  rk_image* img_raw = nullptr;
  check(rk_fbp(sino.get(), side, kind, no_circle ? 0 : 1, &img_raw), "reconstruction");
  ImagePtr img(img_raw);
  check(rk_image_save(img.get(), out.c_str()), "writing " + out);
  if (!pgm.empty()) check(rk_image_export_pgm(img.get(), pgm.c_str()), "writing " + pgm);
  std::cout << "wrote " << side << "x" << side << " reconstruction to " << out << '\n';
  return 0;
}

int cmd_compare(const Source& src, size_t n, size_t angles, std::optional<long> margin,
                const std::string& csv, bool append) {
  auto phantoms = src.load();
  const size_t m = margin ? static_cast<size_t>(*margin)
                          : static_cast<size_t>((static_cast<double>(n) / 100.0) + 0.5);
  std::vector<rk_report> reports;
  for (const auto& [label, p] : phantoms) {
    rk_report r{};
    check(rk_compare(p.get(), label.c_str(), n, angles, m, &r), "compare " + label);
    std::printf("%s n=%zu angles=%zu margin=%zu err_analytic=%.5f err_discrete=%.5f\n",
                r.phantom, r.n, r.n_theta, r.margin, r.err_analytic, r.err_discrete);
    std::fprintf(stderr, "%s: analytic pipeline %.3f s, discrete pipeline %.3f s\n", r.phantom,
                 r.seconds_analytic, r.seconds_discrete);
    reports.push_back(r);
  }
  if (!csv.empty()) {
    check(rk_reports_export_csv(reports.data(), reports.size(), csv.c_str(), append ? 1 : 0),
          "writing " + csv);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analytic and discrete Radon transforms of parametric phantoms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rk_version()));

  std::string gallery_format = "text";
  auto* gallery = app.add_subcommand("gallery", "List the built-in phantoms");
  gallery->add_option("--format", gallery_format, "Output format")
      ->check(CLI::IsMember({"text", "csv"}));

  Source phantom_src;
  size_t phantom_n = 300;
  std::string phantom_out;
  std::string phantom_pgm;
  auto* phantom = app.add_subcommand("phantom", "Rasterize a phantom");
  phantom_src.attach(phantom, false);
  phantom->add_option("--n", phantom_n, "Image side in pixels")->check(CLI::Range(2, 1 << 16));
  phantom->add_option("--out", phantom_out, "Output float grid")->required();
  phantom->add_option("--pgm", phantom_pgm, "Also write a 16-bit PGM");

  Source sino_src;
  size_t sino_n = 300;
  size_t sino_angles = 360;
  std::string sino_method = "analytic";
  std::string sino_out;
  auto* sinogram = app.add_subcommand("sinogram", "Compute a sinogram");
  sino_src.attach(sinogram, false);
  sinogram->add_option("--n", sino_n, "Detector count (and raster side for --method discrete)")
      ->check(CLI::Range(2, 1 << 16));
  sinogram->add_option("--angles", sino_angles, "Angle count over a full turn")
      ->check(CLI::Range(1, 1 << 20));
  sinogram->add_option("--method", sino_method, "analytic or discrete")
      ->check(CLI::IsMember({"analytic", "discrete"}));
  sinogram->add_option("--out", sino_out, "Output float grid")->required();

  std::string rec_in;
  std::optional<size_t> rec_n;
  std::string rec_filter = "ramp";
  bool rec_no_circle = false;
  std::string rec_out;
  std::string rec_pgm;
  auto* reconstruct = app.add_subcommand("reconstruct", "Filtered back-projection");
  reconstruct->add_option("--sinogram", rec_in, "Input sinogram float grid")->required();
  reconstruct->add_option("--n", rec_n, "Image side (default: detector count)")
      ->check(CLI::Range(2, 1 << 16));
  reconstruct->add_option("--filter", rec_filter, "ramp or ramp-hann")
      ->check(CLI::IsMember({"ramp", "ramp-hann"}));
  reconstruct->add_flag("--no-circle", rec_no_circle, "Keep pixels outside the unit disk");
  reconstruct->add_option("--out", rec_out, "Output float grid")->required();
  reconstruct->add_option("--pgm", rec_pgm, "Also write a 16-bit PGM");

  Source cmp_src;
  size_t cmp_n = 300;
  size_t cmp_angles = 360;
  std::optional<long> cmp_margin;
  std::string cmp_csv;
  bool cmp_append = false;
  auto* compare = app.add_subcommand("compare", "Compare analytic and discrete pipelines");
  cmp_src.attach(compare, true);
  compare->add_option("--n", cmp_n, "Image side and detector count")
      ->check(CLI::Range(2, 1 << 16));
  compare->add_option("--angles", cmp_angles, "Angle count over a full turn")
      ->check(CLI::Range(1, 1 << 20));
  compare->add_option("--margin", cmp_margin, "Mask margin in pixels (default round(n/100))")
      ->check(CLI::NonNegativeNumber);
  compare->add_option("--out-csv", cmp_csv, "Write the comparison table as CSV");
  compare->add_flag("--append", cmp_append, "Append rows to --out-csv instead of overwriting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gallery) return cmd_gallery(gallery_format);
    if (*phantom) return cmd_phantom(phantom_src, phantom_n, phantom_out, phantom_pgm);
    if (*sinogram) return cmd_sinogram(sino_src, sino_n, sino_angles, sino_method, sino_out);
    if (*reconstruct) {
      return cmd_reconstruct(rec_in, rec_n, rec_filter, rec_no_circle, rec_out, rec_pgm);
    }
    if (*compare) return cmd_compare(cmp_src, cmp_n, cmp_angles, cmp_margin, cmp_csv, cmp_append);
  } catch (const Failure& f) {
    std::cerr << "radonkit: " << f.message << '\n';
    return f.exit_code;
  }
  return kExitUsage;
}
