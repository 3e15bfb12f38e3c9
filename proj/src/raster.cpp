#include "radonkit/raster.hpp"

#include <cmath>

#include "radonkit/error.hpp"

namespace radonkit {

Image::Image(std::size_t n) : n_(n), values_(n * n, 0.0) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "image side must be at least 2 pixels");
}

Image::Image(std::size_t n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "image side must be at least 2 pixels");
  if (values_.size() != n * n) {
    throw Error(ErrorCode::DimensionMismatch, "image payload does not match n x n");
  }
}

double Image::x_center(std::size_t j) const noexcept {
  return -1.0 + static_cast<double>(2 * j + 1) / static_cast<double>(n_);
}

double Image::y_center(std::size_t i) const noexcept {
  return 1.0 - static_cast<double>(2 * i + 1) / static_cast<double>(n_);
}

double Image::sample(double x, double y) const noexcept {
  const double half_n = 0.5 * static_cast<double>(n_);
  // Continuous pixel coordinates, integer values at pixel centers.
  const double col = (x + 1.0) * half_n - 0.5;
  const double row = (1.0 - y) * half_n - 0.5;
  const double c0 = std::floor(col);
  const double r0 = std::floor(row);
  const double last = static_cast<double>(n_) - 1.0;
  if (c0 < -1.0 || r0 < -1.0 || c0 > last || r0 > last) return 0.0;

  const double fc = col - c0;
  const double fr = row - r0;
  const auto ic = static_cast<long>(c0);
  const auto ir = static_cast<long>(r0);
  const auto n = static_cast<long>(n_);

  auto px = [&](long i, long j) -> double {
    if (i < 0 || j < 0 || i >= n || j >= n) return 0.0;
    return values_[static_cast<std::size_t>(i * n + j)];
  };
  const double top = (1.0 - fc) * px(ir, ic) + fc * px(ir, ic + 1);
  const double bottom = (1.0 - fc) * px(ir + 1, ic) + fc * px(ir + 1, ic + 1);
  return (1.0 - fr) * top + fr * bottom;
}

Image rasterize(const Phantom& p, std::size_t n) {
  require_valid(p);
  Image img(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = img.y_center(i);
    for (std::size_t j = 0; j < n; ++j) {
      img.at(i, j) = attenuation(p, img.x_center(j), y);
    }
  }
  return img;
}

Sinogram forward_project(const Image& img, const SinogramGrid& g) {
  for (double t : {g.t_values().front(), g.t_values().back()}) {
    if (std::abs(t) > 1.0) {
      throw Error(ErrorCode::InvalidArgument, "detector offsets must lie within [-1, 1]");
    }
  }
  const std::size_t n = img.size();
  const double h = img.pixel_width();
  Sinogram out(g);
  const auto& ts = g.t_values();
  const auto& thetas = g.theta_values();

  for (std::size_t j = 0; j < thetas.size(); ++j) {
    const double ct = std::cos(thetas[j]);
    const double st = std::sin(thetas[j]);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const double ox = ts[k] * ct;
      const double oy = ts[k] * st;
      double sum = 0.0;
      for (std::size_t m = 0; m < n; ++m) {
        const double s = -1.0 + (static_cast<double>(m) + 0.5) * h;
        sum += img.sample(ox - s * st, oy + s * ct);
      }
      out.at(k, j) = h * sum;
    }
  }
  return out;
}

}  // namespace radonkit
