#include "radonkit/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "radonkit/error.hpp"

namespace radonkit {

namespace {

constexpr double kTangencyClamp = 1e-14;
constexpr double kParallelEps = 1e-14;
constexpr double kSymmetryTol = 1e-15;

struct Interval {
  double lo;
  double hi;
};

// Parameter interval of s for which |offset + s * slope| <= half_width.
Interval slab(double offset, double slope, double half_width) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (std::abs(slope) < kParallelEps) {
    if (std::abs(offset) <= half_width) return {-inf, inf};
    return {inf, -inf};
  }
  const double s1 = (-half_width - offset) / slope;
  const double s2 = (half_width - offset) / slope;
  return {std::min(s1, s2), std::max(s1, s2)};
}

}  // namespace

SinogramGrid SinogramGrid::uniform(std::size_t n_t, std::size_t n_theta, double theta_max) {
  if (n_t < 1 || n_theta < 1) {
    throw Error(ErrorCode::InvalidArgument, "sinogram grid needs n_t >= 1 and n_theta >= 1");
  }
  if (!(theta_max > 0.0) || theta_max > 2.0 * std::numbers::pi) {
    throw Error(ErrorCode::InvalidArgument, "theta_max must lie in (0, 2pi]");
  }
  std::vector<double> t(n_t);
  const double nt = static_cast<double>(n_t);
  for (std::size_t k = 0; k < n_t; ++k) {
    t[k] = -1.0 + static_cast<double>(2 * k + 1) / nt;
  }
  // Force exact antisymmetry; the formula above is only symmetric to rounding.
  for (std::size_t k = 0; k < n_t / 2; ++k) t[n_t - 1 - k] = -t[k];
  if (n_t % 2 == 1) t[n_t / 2] = 0.0;

  std::vector<double> theta(n_theta);
  const double step = theta_max / static_cast<double>(n_theta);
  for (std::size_t j = 0; j < n_theta; ++j) theta[j] = static_cast<double>(j) * step;
  return SinogramGrid(std::move(t), std::move(theta));
}

SinogramGrid::SinogramGrid(std::vector<double> t_values, std::vector<double> theta_values)
    : t_(std::move(t_values)), theta_(std::move(theta_values)) {
  if (t_.empty() || theta_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "sinogram grid axes must be non-empty");
  }
  for (std::size_t k = 0; k < t_.size(); ++k) {
    if (!std::isfinite(t_[k])) throw Error(ErrorCode::InvalidArgument, "non-finite t value");
    if (k > 0 && !(t_[k] > t_[k - 1])) {
      throw Error(ErrorCode::InvalidArgument, "t values must be strictly increasing");
    }
    if (std::abs(t_[k] + t_[t_.size() - 1 - k]) > kSymmetryTol) {
      throw Error(ErrorCode::InvalidArgument, "t values must be symmetric about 0");
    }
  }
  for (std::size_t j = 0; j < theta_.size(); ++j) {
    if (!(theta_[j] >= 0.0) || !(theta_[j] < 2.0 * std::numbers::pi)) {
      throw Error(ErrorCode::InvalidArgument, "theta values must lie in [0, 2pi)");
    }
    if (j > 0 && !(theta_[j] > theta_[j - 1])) {
      throw Error(ErrorCode::InvalidArgument, "theta values must be strictly increasing");
    }
  }
}

double SinogramGrid::t_step() const noexcept {
  if (t_.size() < 2) return 2.0;
  return t_[1] - t_[0];
}

double radon_ellipse(const Ellipse& e, double t, double theta) noexcept {
  const double th = theta - e.phi;
  const double tt = t - e.x0 * std::cos(theta) - e.y0 * std::sin(theta);
  const double sn = std::sin(th);
  const double cs = std::cos(th);
  const double d = e.b * e.b * sn * sn + e.a * e.a * cs * cs;
  double gap = d - tt * tt;
  if (gap < 0.0) {
    if (gap < -kTangencyClamp) return 0.0;
    gap = 0.0;
  }
  return e.delta * 2.0 * e.a * e.b * std::sqrt(gap) / d;
}

double radon_rectangle(const Rectangle& r, double t, double theta) noexcept {
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double cp = std::cos(r.phi);
  const double sp = std::sin(r.phi);

  // Line origin relative to the rectangle center, and its direction.
  const double px = t * ct - r.x0;
  const double py = t * st - r.y0;
  const double dx = -st;
  const double dy = ct;

  const Interval u = slab(px * cp + py * sp, dx * cp + dy * sp, 0.5 * r.wx);
  const Interval v = slab(py * cp - px * sp, dy * cp - dx * sp, 0.5 * r.wy);

  const double lo = std::max(u.lo, v.lo);
  const double hi = std::min(u.hi, v.hi);
  if (!(hi > lo)) return 0.0;
  return r.delta * (hi - lo);
}

double radon_figure(const Figure& f, double t, double theta) noexcept {
  if (const auto* e = std::get_if<Ellipse>(&f)) return radon_ellipse(*e, t, theta);
  return radon_rectangle(std::get<Rectangle>(f), t, theta);
}

Sinogram analytic_sinogram(const Phantom& p, const SinogramGrid& g) {
  require_valid(p);
  Sinogram out(g);
  const auto& ts = g.t_values();
  const auto& thetas = g.theta_values();
  for (std::size_t k = 0; k < ts.size(); ++k) {
    for (std::size_t j = 0; j < thetas.size(); ++j) {
      double sum = 0.0;
      for (const auto& f : p.figures) sum += radon_figure(f, ts[k], thetas[j]);
      out.at(k, j) = sum;
    }
  }
  return out;
}

}  // namespace radonkit
