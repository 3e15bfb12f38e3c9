#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "radonkit/analytic.hpp"
#include "radonkit/phantom.hpp"
#include "radonkit/raster.hpp"
#include "radonkit/reconstruction.hpp"

namespace radonkit {

/// n x n selection raster; true pixels enter the error norms.
class Mask {
 public:
  Mask(std::size_t n, std::vector<bool> keep);

  std::size_t size() const noexcept { return n_; }
  bool at(std::size_t i, std::size_t j) const { return keep_[i * n_ + j]; }
  std::size_t count() const noexcept;
  double fraction() const noexcept;
  const std::vector<bool>& values() const noexcept { return keep_; }

  bool operator==(const Mask&) const = default;

 private:
  std::size_t n_;
  std::vector<bool> keep_;
};

/// ||a - b|| / ||b|| over the masked pixels, 2-norms, row-major summation.
/// Throws Error(DimensionMismatch) on size mismatch and
/// Error(ZeroDenominator) when b vanishes on the mask.
double relative_error(const Image& a, const Image& b, const Mask& m);

/// Excludes every pixel whose Chebyshev neighborhood of radius `margin`
/// contains a pixel covered by a different set of figures. In circle mode the
/// band |r - 1| <= margin * pixel_width around the unit circle is excluded too.
/// Throws Error(EmptyMask) if nothing survives.
Mask gibbs_mask(const Phantom& p, std::size_t n, std::size_t margin);

/// round(n / 100), the mask margin used when none is given.
std::size_t default_margin(std::size_t n) noexcept;

struct ComparisonReport {
  std::string phantom;
  std::size_t n = 0;
  std::size_t n_theta = 0;
  std::size_t margin = 0;
  double err_analytic = 0.0;  // fbp(analytic sinogram) vs raster
  double err_discrete = 0.0;  // fbp(forward_project(raster)) vs raster
  double mask_fraction = 0.0;
  double seconds_analytic = 0.0;
  double seconds_discrete = 0.0;
};

/// Runs both reconstruction pipelines against the rasterized phantom.
ComparisonReport compare_pipelines(const Phantom& p, std::string name, std::size_t n,
                                   const SinogramGrid& g, std::size_t margin,
                                   const FilterSpec& spec = {});

}  // namespace radonkit
