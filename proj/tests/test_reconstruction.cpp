#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "radonkit/analysis.hpp"
#include "radonkit/analytic.hpp"
#include "radonkit/error.hpp"
#include "radonkit/raster.hpp"
#include "radonkit/reconstruction.hpp"

namespace radonkit {
namespace {

constexpr double kPi = std::numbers::pi;

const Phantom& half_disk() {
  static const Phantom p{{Ellipse{0, 0, 0.5, 0.5, 0, 1}}, true};
  return p;
}

Sinogram random_sinogram(std::size_t n_t, std::size_t n_theta, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<> u(-1, 1);
  Sinogram s(SinogramGrid::uniform(n_t, n_theta));
  for (double& v : s.values) v = u(rng);
  return s;
}

TEST(FilterSpec, PadResolution) {
  EXPECT_EQ(FilterSpec{}.resolved_pad(300), 4096u);
  EXPECT_EQ(FilterSpec{}.resolved_pad(256), 2048u);
  EXPECT_EQ((FilterSpec{FilterKind::Ramp, 1024}.resolved_pad(300)), 1024u);
  EXPECT_EQ((FilterSpec{FilterKind::Ramp, 512}.resolved_pad(256)), 512u);
  EXPECT_THROW((FilterSpec{FilterKind::Ramp, 512}.resolved_pad(300)), Error);
  EXPECT_THROW((FilterSpec{FilterKind::Ramp, 1000}.resolved_pad(300)), Error);
}

TEST(FilterResponse, RampAndHann) {
  const double dt = 0.01;
  const auto ramp = filter_response({FilterKind::Ramp}, 16, dt);
  const auto hann = filter_response({FilterKind::RampHann}, 16, dt);
  const double df = 1.0 / (16 * dt);
  EXPECT_EQ(ramp[0], 0.0);
  EXPECT_DOUBLE_EQ(ramp[3], 3 * df);
  EXPECT_DOUBLE_EQ(ramp[13], 3 * df);  // folded negative frequency
  EXPECT_DOUBLE_EQ(ramp[8], 0.5 / dt);
  EXPECT_NEAR(hann[8], 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(hann[4], ramp[4] * 0.5);
  for (std::size_t k = 0; k < 16; ++k) EXPECT_LE(hann[k], ramp[k]);
}

TEST(RampFilter, ZeroInZeroOut) {
  Sinogram s(SinogramGrid::uniform(40, 12));
  const auto out = ramp_filter(s);
  for (double v : out.values) EXPECT_EQ(v, 0.0);
}

TEST(RampFilter, ConstantColumnHasZeroMean) {
  const std::vector<double> column(300, 1.0);
  for (FilterKind kind : {FilterKind::Ramp, FilterKind::RampHann}) {
    const auto out = ramp_filter_column(column, {kind}, 2.0 / 300);
    const double mean = std::accumulate(out.begin(), out.end(), 0.0) / out.size();
    EXPECT_NEAR(mean, 0.0, 1e-10);
  }
}

TEST(RampFilter, DcSuppressedOnRandomColumns) {
  const auto s = random_sinogram(128, 6, 5);
  for (std::size_t j = 0; j < 6; ++j) {
    std::vector<double> column(128);
    double peak = 0.0;
    for (std::size_t k = 0; k < 128; ++k) {
      column[k] = s.at(k, j);
      peak = std::max(peak, std::abs(column[k]));
    }
    const auto out = ramp_filter_column(column, {}, s.grid.t_step());
    const double mean = std::accumulate(out.begin(), out.end(), 0.0) / out.size();
    EXPECT_LE(std::abs(mean), 1e-8 * peak);
  }
}

TEST(RampFilter, UnitDiskMatchesContinuousProfile) {
  // The ramp-filtered chord profile 2*sqrt(1 - t^2) is 1/pi for |t| < 1.
  const Phantom disk{{Ellipse{0, 0, 1, 1, 0, 1}}, true};
  const auto g = SinogramGrid::uniform(300, 1);
  const auto filtered = ramp_filter(analytic_sinogram(disk, g));
  const auto gr = SinogramGrid::uniform(4096, 1);
  const auto reference = ramp_filter(analytic_sinogram(disk, gr));
  for (std::size_t k = 0; k < g.n_t(); ++k) {
    const double t = g.t_values()[k];
    if (std::abs(t) >= 0.5) continue;
    const double pos = (t - gr.t_values().front()) / gr.t_step();
    const auto i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    const double ref = (1 - frac) * reference.values[i] + frac * reference.values[i + 1];
    EXPECT_NEAR(filtered.values[k], ref, 0.005 / kPi) << "t=" << t;
    EXPECT_NEAR(filtered.values[k], 1 / kPi, 0.01 / kPi) << "t=" << t;
  }
}

TEST(Backproject, ZeroInZeroOut) {
  const Image img = backproject(Sinogram(SinogramGrid::uniform(30, 10)), 25);
  for (double v : img.values()) EXPECT_EQ(v, 0.0);
  const Image rec = fbp(Sinogram(SinogramGrid::uniform(30, 10)), 25);
  for (double v : rec.values()) EXPECT_EQ(v, 0.0);
}

TEST(Backproject, SingleAngleSmear) {
  Sinogram s(SinogramGrid({-0.75, -0.25, 0.25, 0.75}, {0.0}));
  s.values = {1.0, 4.0, -2.0, 3.0};
  const Image img = backproject(s, 40, false);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> pick(0, 39);
  for (int c = 0; c < 3; ++c) {
    const std::size_t j = pick(rng);
    for (std::size_t i = 1; i < 40; ++i) EXPECT_EQ(img.at(i, j), img.at(0, j)) << "column " << j;
  }
}

TEST(Backproject, CircleModeZeroesCorners) {
  Sinogram s(SinogramGrid::uniform(20, 8));
  std::fill(s.values.begin(), s.values.end(), 1.0);
  const Image img = backproject(s, 20, true);
  EXPECT_EQ(img.at(0, 0), 0.0);
  EXPECT_GT(img.at(10, 10), 0.0);
}

TEST(Backproject, RejectsMismatchedPayload) {
  Sinogram s(SinogramGrid::uniform(20, 8));
  s.values.pop_back();
  EXPECT_THROW(backproject(s, 10), Error);
  EXPECT_THROW(ramp_filter(s), Error);
}

TEST(Fbp, LinearInSinogram) {
  const auto a = random_sinogram(64, 20, 1);
  const auto b = random_sinogram(64, 20, 2);
  Sinogram mix(a.grid);
  const double alpha = 1.7, beta = -0.4;
  for (std::size_t i = 0; i < mix.values.size(); ++i) {
    mix.values[i] = alpha * a.values[i] + beta * b.values[i];
  }
  const Image ra = fbp(a, 64), rb = fbp(b, 64), rm = fbp(mix, 64);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < rm.values().size(); ++i) {
    const double d = rm.values()[i] - (alpha * ra.values()[i] + beta * rb.values()[i]);
    num += d * d;
    den += rm.values()[i] * rm.values()[i];
  }
  EXPECT_LE(std::sqrt(num / den), 1e-10);
}

TEST(Fbp, RecoversConstantDisk) {
  const Image img = fbp(analytic_sinogram(half_disk(), SinogramGrid::uniform(300, 360)), 300);
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < 300; ++i) {
    for (std::size_t j = 0; j < 300; ++j) {
      if (std::hypot(img.x_center(j), img.y_center(i)) < 0.35) {
        sum += img.at(i, j);
        ++count;
      }
    }
  }
  EXPECT_NEAR(sum / count, 1.0, 0.02);

  double lo = INFINITY, hi = -INFINITY;
  for (int a = 0; a < 360; ++a) {
    const double th = a * kPi / 180;
    const double v = img.sample(0.25 * std::cos(th), 0.25 * std::sin(th));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  EXPECT_LE((hi - lo) / (0.5 * (hi + lo)), 0.02);
}

TEST(Fbp, ErrorShrinksWithAngleCount) {
  const Image truth = rasterize(half_disk(), 300);
  const Mask mask = gibbs_mask(half_disk(), 300, 3);
  double previous = INFINITY;
  for (std::size_t angles : {30, 90, 360}) {
    const Image rec = fbp(analytic_sinogram(half_disk(), SinogramGrid::uniform(300, angles)), 300);
    const double err = relative_error(rec, truth, mask);
    EXPECT_LE(err, previous) << angles << " angles";
    previous = err;
  }
}

TEST(Fbp, HannIsSmootherThanRamp) {
  const auto s = analytic_sinogram(half_disk(), SinogramGrid::uniform(128, 180));
  const Image ramp = fbp(s, 128);
  const Image hann = fbp(s, 128, {FilterKind::RampHann});
  auto roughness = [](const Image& img) {
    double acc = 0.0;
    for (std::size_t i = 0; i < img.size(); ++i) {
      for (std::size_t j = 1; j < img.size(); ++j) {
        const double d = img.at(i, j) - img.at(i, j - 1);
        acc += d * d;
      }
    }
    return acc;
  };
  EXPECT_LT(roughness(hann), roughness(ramp));
}

TEST(Fbp, Deterministic) {
  const auto s = random_sinogram(50, 30, 3);
  EXPECT_EQ(fbp(s, 40), fbp(s, 40));
}

}  // namespace
}  // namespace radonkit
