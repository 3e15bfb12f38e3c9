#pragma once

// Exact parallel-beam Radon transform of ellipses, rectangles and phantoms.
//
// The line for (t, theta) is p(s) = (t cos(theta) - s sin(theta),
// t sin(theta) + s cos(theta)): it passes through t * (cos, sin) and runs
// orthogonal to that unit normal.

#include <cstddef>
#include <numbers>
#include <vector>

#include "radonkit/phantom.hpp"

namespace radonkit {

class SinogramGrid {
 public:
  /// Pixel-center aligned detector offsets t_k = -1 + (2k+1)/n_t and angles
  /// theta_j = j * theta_max / n_theta.
  static SinogramGrid uniform(std::size_t n_t, std::size_t n_theta,
                              double theta_max = 2.0 * std::numbers::pi);

  /// Throws Error(InvalidArgument) unless t is strictly increasing and
  /// symmetric about 0 (to 1e-15) and theta is strictly increasing in [0, 2pi).
  SinogramGrid(std::vector<double> t_values, std::vector<double> theta_values);

  std::size_t n_t() const noexcept { return t_.size(); }
  std::size_t n_theta() const noexcept { return theta_.size(); }
  const std::vector<double>& t_values() const noexcept { return t_; }
  const std::vector<double>& theta_values() const noexcept { return theta_; }

  /// Detector pitch t_1 - t_0 (the grid is assumed uniform where this matters).
  double t_step() const noexcept;

  bool operator==(const SinogramGrid&) const = default;

 private:
  std::vector<double> t_;
  std::vector<double> theta_;
};

/// n_t x n_theta matrix, stored row-major: values[k * n_theta + j] is the
/// line integral at (t_k, theta_j).
struct Sinogram {
  SinogramGrid grid;
  std::vector<double> values;

  explicit Sinogram(SinogramGrid g)
      : grid(std::move(g)), values(grid.n_t() * grid.n_theta(), 0.0) {}

  double& at(std::size_t k, std::size_t j) { return values[k * grid.n_theta() + j]; }
  double at(std::size_t k, std::size_t j) const { return values[k * grid.n_theta() + j]; }
};

/// Chord length of the ellipse along l(t, theta), times delta.
double radon_ellipse(const Ellipse& e, double t, double theta) noexcept;

/// Chord length of the rectangle along l(t, theta), times delta. The
/// rectangle is the intersection of two slabs in its local frame; the chord
/// is the overlap of the two parameter intervals the line spends in each.
double radon_rectangle(const Rectangle& r, double t, double theta) noexcept;

double radon_figure(const Figure& f, double t, double theta) noexcept;

/// Linear superposition over the phantom's figures, summed in list order.
Sinogram analytic_sinogram(const Phantom& p, const SinogramGrid& g);

}  // namespace radonkit
