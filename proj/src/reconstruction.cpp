#include "radonkit/reconstruction.hpp"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>

#include "radonkit/error.hpp"

namespace radonkit {

namespace {

// The FFTW planner is not reentrant; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};
struct PlanDestroy {
  void operator()(fftw_plan p) const noexcept {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};
using PlanPtr = std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDestroy>;

class ColumnFilter {
 public:
  ColumnFilter(const FilterSpec& spec, std::size_t pad, double dt)
      : pad_(pad),
        response_(filter_response(spec, pad, dt)),
        real_(static_cast<double*>(fftw_malloc(sizeof(double) * pad))),
        spectrum_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (pad / 2 + 1)))) {
    if (!real_ || !spectrum_) throw std::bad_alloc();
    std::lock_guard lock(planner_mutex());
    const int len = static_cast<int>(pad);
    forward_.reset(fftw_plan_dft_r2c_1d(len, real_.get(), spectrum_.get(), FFTW_ESTIMATE));
    inverse_.reset(fftw_plan_dft_c2r_1d(len, spectrum_.get(), real_.get(), FFTW_ESTIMATE));
  }

  // Input is copied into the zero-padded buffer; the full padded output is
  // left in data().
  void run(const double* column, std::size_t n_t, std::size_t stride) {
    double* buf = real_.get();
    for (std::size_t k = 0; k < pad_; ++k) buf[k] = k < n_t ? column[k * stride] : 0.0;
    fftw_execute(forward_.get());
    fftw_complex* spec = spectrum_.get();
    const double scale = 1.0 / static_cast<double>(pad_);
    for (std::size_t k = 0; k <= pad_ / 2; ++k) {
      spec[k][0] *= response_[k] * scale;
      spec[k][1] *= response_[k] * scale;
    }
    fftw_execute(inverse_.get());
  }

  const double* data() const noexcept { return real_.get(); }

 private:
  std::size_t pad_;
  std::vector<double> response_;
  std::unique_ptr<double, FftwFree> real_;
  std::unique_ptr<fftw_complex, FftwFree> spectrum_;
  PlanPtr forward_;
  PlanPtr inverse_;
};

void check_shape(const Sinogram& s) {
  if (s.values.size() != s.grid.n_t() * s.grid.n_theta()) {
    throw Error(ErrorCode::DimensionMismatch, "sinogram payload does not match its grid");
  }
}

}  // namespace

std::size_t FilterSpec::resolved_pad(std::size_t n_t) const {
  const std::size_t minimum = 2 * n_t;
  if (pad_length == 0) return std::bit_ceil(8 * n_t);
  if (pad_length < minimum || !std::has_single_bit(pad_length)) {
    throw Error(ErrorCode::InvalidArgument,
                "filter pad length must be a power of two >= 2 * n_t (n_t = " +
                    std::to_string(n_t) + ")");
  }
  return pad_length;
}

std::vector<double> filter_response(const FilterSpec& spec, std::size_t pad, double dt) {
  std::vector<double> h(pad);
  const double df = 1.0 / (static_cast<double>(pad) * dt);
  const double nyquist = 0.5 / dt;
  for (std::size_t k = 0; k < pad; ++k) {
    const std::size_t fold = k <= pad / 2 ? k : pad - k;
    const double nu = static_cast<double>(fold) * df;
    double v = nu;
    if (spec.kind == FilterKind::RampHann) {
      v *= 0.5 * (1.0 + std::cos(std::numbers::pi * nu / nyquist));
    }
    h[k] = v;
  }
  return h;
}

std::vector<double> ramp_filter_column(const std::vector<double>& column, const FilterSpec& spec,
                                       double dt) {
  const std::size_t pad = spec.resolved_pad(column.size());
  ColumnFilter filter(spec, pad, dt);
  filter.run(column.data(), column.size(), 1);
  return {filter.data(), filter.data() + pad};
}

Sinogram ramp_filter(const Sinogram& s, const FilterSpec& spec) {
  check_shape(s);
  const std::size_t n_t = s.grid.n_t();
  const std::size_t n_theta = s.grid.n_theta();
  ColumnFilter filter(spec, spec.resolved_pad(n_t), s.grid.t_step());

  Sinogram out(s.grid);
  for (std::size_t j = 0; j < n_theta; ++j) {
    filter.run(s.values.data() + j, n_t, n_theta);
    const double* res = filter.data();
    for (std::size_t k = 0; k < n_t; ++k) out.at(k, j) = res[k];
  }
  return out;
}

Image backproject(const Sinogram& s, std::size_t n, bool circle_mode) {
  check_shape(s);
  Image img(n);
  const auto& ts = s.grid.t_values();
  const std::size_t n_t = ts.size();
  const std::size_t n_theta = s.grid.n_theta();
  const double t0 = ts.front();
  const double dt = s.grid.t_step();

  std::vector<double> cosines(n_theta);
  std::vector<double> sines(n_theta);
  for (std::size_t j = 0; j < n_theta; ++j) {
    cosines[j] = std::cos(s.grid.theta_values()[j]);
    sines[j] = std::sin(s.grid.theta_values()[j]);
  }

  const double scale = std::numbers::pi / static_cast<double>(n_theta);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = img.y_center(i);
    for (std::size_t jx = 0; jx < n; ++jx) {
      const double x = img.x_center(jx);
      if (circle_mode && x * x + y * y > 1.0) continue;
      double acc = 0.0;
      for (std::size_t j = 0; j < n_theta; ++j) {
        const double pos = (x * cosines[j] + y * sines[j] - t0) / dt;
        const double k0 = std::floor(pos);
        if (k0 < -1.0 || k0 > static_cast<double>(n_t) - 1.0) continue;
        const double frac = pos - k0;
        const auto k = static_cast<long>(k0);
        const double lo = k >= 0 ? s.at(static_cast<std::size_t>(k), j) : 0.0;
        const double hi =
            k + 1 < static_cast<long>(n_t) ? s.at(static_cast<std::size_t>(k + 1), j) : 0.0;
        acc += (1.0 - frac) * lo + frac * hi;
      }
      img.at(i, jx) = scale * acc;
    }
  }
  return img;
}

Image fbp(const Sinogram& s, std::size_t n, const FilterSpec& spec, bool circle_mode) {
  return backproject(ramp_filter(s, spec), n, circle_mode);
}

}  // namespace radonkit
