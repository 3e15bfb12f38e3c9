#pragma once

// File formats.
//
// FGRID1 float grid:
//   FGRID1\n
//   rows=<r> cols=<c> kind=<image|sinogram|mask>\n
//   t_values=<v0> <v1> ...\n          (sinogram only, 17 significant digits)
//   theta_values=<v0> <v1> ...\n      (sinogram only)
//   rows*cols IEEE-754 binary64, little-endian, row-major
//
// Images and masks are stored as square grids; masks hold 0.0 / 1.0.

#include <optional>
#include <string>
#include <vector>

#include "radonkit/analysis.hpp"
#include "radonkit/analytic.hpp"
#include "radonkit/raster.hpp"

namespace radonkit {

enum class GridKind { Image, Sinogram, Mask };

const char* to_string(GridKind kind) noexcept;

struct FloatGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  GridKind kind = GridKind::Image;
  std::vector<double> t_values;      // sinogram only
  std::vector<double> theta_values;  // sinogram only
  std::vector<double> values;

  bool operator==(const FloatGrid&) const = default;
};

std::string encode_grid(const FloatGrid& grid);

/// Throws MalformedHeader, TruncatedPayload or DimensionMismatch.
FloatGrid decode_grid(const std::string& bytes);

void write_grid(const std::string& path, const FloatGrid& grid);
FloatGrid read_grid(const std::string& path);

FloatGrid to_grid(const Image& img);
FloatGrid to_grid(const Sinogram& s);
FloatGrid to_grid(const Mask& m);

/// Each throws Error(MalformedHeader) if the grid holds a different kind.
Image image_from_grid(const FloatGrid& g);
Sinogram sinogram_from_grid(const FloatGrid& g);
Mask mask_from_grid(const FloatGrid& g);

/// Binary PGM (P5), 16-bit big-endian samples, min-max normalized. The bounds
/// are recorded as "# min=<v> max=<v>". A constant image maps to zeros.
std::string encode_pgm(const Image& img);
void export_pgm(const Image& img, const std::string& path);

inline constexpr const char* kCsvHeader = "phantom,n,n_theta,margin,err_analytic,err_discrete";

/// Header plus one row per report. Throws Error(InvalidReport) on a
/// non-finite or negative error.
std::string encode_csv(const std::vector<ComparisonReport>& reports, bool with_header = true);

/// Overwrites path, or appends rows when append is set (writing the header
/// only if the file is new or empty).
void export_csv(const std::vector<ComparisonReport>& reports, const std::string& path,
                bool append = false);

/// Flat key=value block, one key per line. Timings are not included.
std::string format_report(const ComparisonReport& r);

}  // namespace radonkit
