#pragma once

#include <cstddef>
#include <vector>

#include "radonkit/analytic.hpp"
#include "radonkit/phantom.hpp"

namespace radonkit {

/// Square raster over [-1,1]^2. Row i counts from the top, column j from the
/// left; pixel (i, j) is centered at (-1 + (2j+1)/n, 1 - (2i+1)/n).
class Image {
 public:
  explicit Image(std::size_t n);
  Image(std::size_t n, std::vector<double> values);

  std::size_t size() const noexcept { return n_; }
  double pixel_width() const noexcept { return 2.0 / static_cast<double>(n_); }

  double x_center(std::size_t j) const noexcept;
  double y_center(std::size_t i) const noexcept;

  double& at(std::size_t i, std::size_t j) { return values_[i * n_ + j]; }
  double at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }

  const std::vector<double>& values() const noexcept { return values_; }
  std::vector<double>& values() noexcept { return values_; }

  /// Bilinear interpolation between pixel centers; samples outside the
  /// raster read as zero.
  double sample(double x, double y) const noexcept;

  bool operator==(const Image&) const = default;

 private:
  std::size_t n_;
  std::vector<double> values_;
};

/// Point-samples the phantom at every pixel center (no anti-aliasing).
Image rasterize(const Phantom& p, std::size_t n);

/// Ray-driven discrete projector: each ray is sampled at the midpoints of a
/// uniform partition of s in [-1,1] with step 2/n, bilinearly interpolated.
Sinogram forward_project(const Image& img, const SinogramGrid& g);

}  // namespace radonkit
