#include "radonkit/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "radonkit/error.hpp"

namespace radonkit {

Mask::Mask(std::size_t n, std::vector<bool> keep) : n_(n), keep_(std::move(keep)) {
  if (keep_.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "mask is not n x n");
}

std::size_t Mask::count() const noexcept {
  return static_cast<std::size_t>(std::count(keep_.begin(), keep_.end(), true));
}

double Mask::fraction() const noexcept {
  return static_cast<double>(count()) / static_cast<double>(keep_.size());
}

double relative_error(const Image& a, const Image& b, const Mask& m) {
  if (a.size() != b.size() || a.size() != m.size()) {
    throw Error(ErrorCode::DimensionMismatch, "relative_error: images and mask differ in size");
  }
  double num = 0.0;
  double den = 0.0;
  const auto& av = a.values();
  const auto& bv = b.values();
  const auto& keep = m.values();
  for (std::size_t p = 0; p < av.size(); ++p) {
    if (!keep[p]) continue;
    const double d = av[p] - bv[p];
    num += d * d;
    den += bv[p] * bv[p];
  }
  if (den == 0.0) {
    throw Error(ErrorCode::ZeroDenominator, "reference image vanishes on the mask");
  }
  return std::sqrt(num) / std::sqrt(den);
}

Mask gibbs_mask(const Phantom& p, std::size_t n, std::size_t margin) {
  require_valid(p);
  const Image grid(n);

  // Label each pixel by the set of figures covering it.
  std::vector<int> label(n * n);
  std::map<std::vector<bool>, int> ids;
  std::vector<bool> sig(p.figures.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double y = grid.y_center(i);
    for (std::size_t j = 0; j < n; ++j) {
      const double x = grid.x_center(j);
      for (std::size_t f = 0; f < p.figures.size(); ++f) sig[f] = contains(p.figures[f], x, y);
      const auto [it, inserted] = ids.try_emplace(sig, static_cast<int>(ids.size()));
      label[i * n + j] = it->second;
    }
  }

  const auto nn = static_cast<long>(n);
  const auto r = static_cast<long>(margin);
  const double band = static_cast<double>(margin) * grid.pixel_width();
  std::vector<bool> keep(n * n, true);

  for (long i = 0; i < nn; ++i) {
    for (long j = 0; j < nn; ++j) {
      const int own = label[static_cast<std::size_t>(i * nn + j)];
      bool excluded = false;
      for (long di = std::max(0L, i - r); di <= std::min(nn - 1, i + r) && !excluded; ++di) {
        for (long dj = std::max(0L, j - r); dj <= std::min(nn - 1, j + r); ++dj) {
          if (label[static_cast<std::size_t>(di * nn + dj)] != own) {
            excluded = true;
            break;
          }
        }
      }
      if (!excluded && p.circle_mode) {
        const double radius = std::hypot(grid.x_center(static_cast<std::size_t>(j)),
                                         grid.y_center(static_cast<std::size_t>(i)));
        excluded = std::abs(radius - 1.0) <= band;
      }
      keep[static_cast<std::size_t>(i * nn + j)] = !excluded;
    }
  }

  Mask m(n, std::move(keep));
  if (m.count() == 0) throw Error(ErrorCode::EmptyMask, "gibbs mask excludes every pixel");
  return m;
}

std::size_t default_margin(std::size_t n) noexcept {
  return static_cast<std::size_t>(std::llround(static_cast<double>(n) / 100.0));
}

ComparisonReport compare_pipelines(const Phantom& p, std::string name, std::size_t n,
                                   const SinogramGrid& g, std::size_t margin,
                                   const FilterSpec& spec) {
  using clock = std::chrono::steady_clock;
  require_valid(p);

  const Image reference = rasterize(p, n);
  const Mask mask = gibbs_mask(p, n, margin);

  const auto t0 = clock::now();
  const Image analytic = fbp(analytic_sinogram(p, g), n, spec, p.circle_mode);
  const auto t1 = clock::now();
  const Image discrete = fbp(forward_project(reference, g), n, spec, p.circle_mode);
  const auto t2 = clock::now();

  ComparisonReport rep;
  rep.phantom = std::move(name);
  rep.n = n;
  rep.n_theta = g.n_theta();
  rep.margin = margin;
  rep.err_analytic = relative_error(analytic, reference, mask);
  rep.err_discrete = relative_error(discrete, reference, mask);
  rep.mask_fraction = mask.fraction();
  rep.seconds_analytic = std::chrono::duration<double>(t1 - t0).count();
  rep.seconds_discrete = std::chrono::duration<double>(t2 - t1).count();
  return rep;
}

}  // namespace radonkit
