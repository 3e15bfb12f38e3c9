#include "radonkit/radonkit.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "radonkit/analysis.hpp"
#include "radonkit/analytic.hpp"
#include "radonkit/error.hpp"
#include "radonkit/io.hpp"
#include "radonkit/phantom.hpp"
#include "radonkit/raster.hpp"
#include "radonkit/reconstruction.hpp"

struct rk_phantom {
  radonkit::Phantom value;
};
struct rk_image {
  radonkit::Image value;
};
struct rk_sinogram {
  radonkit::Sinogram value;
};
struct rk_mask {
  radonkit::Mask value;
};

namespace {

thread_local std::string g_last_error;

rk_status fail(rk_status status, std::string msg) {
  g_last_error = std::move(msg);
  return status;
}

rk_status map_code(radonkit::ErrorCode code) {
  using radonkit::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return RK_ERR_INVALID_ARGUMENT;
    case ErrorCode::UnknownGallery: return RK_ERR_UNKNOWN_GALLERY;
    case ErrorCode::InvalidPhantom: return RK_ERR_INVALID_PHANTOM;
    case ErrorCode::Io: return RK_ERR_IO;
    case ErrorCode::MalformedHeader: return RK_ERR_MALFORMED_HEADER;
    case ErrorCode::TruncatedPayload: return RK_ERR_TRUNCATED_PAYLOAD;
    case ErrorCode::DimensionMismatch: return RK_ERR_DIMENSION_MISMATCH;
    case ErrorCode::ZeroDenominator: return RK_ERR_ZERO_DENOMINATOR;
    case ErrorCode::EmptyMask: return RK_ERR_EMPTY_MASK;
    case ErrorCode::InvalidReport: return RK_ERR_INVALID_REPORT;
  }
  return RK_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <class F>
rk_status guarded(F&& body) noexcept {
  try {
    body();
    return RK_OK;
  } catch (const radonkit::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RK_ERR_INTERNAL, "unknown exception");
  }
}

#define RK_REQUIRE(cond)                                                    \
  do {                                                                      \
    if (!(cond)) return fail(RK_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

radonkit::ComparisonReport from_c(const rk_report& r) {
  radonkit::ComparisonReport out;
  out.phantom = std::string(r.phantom, strnlen(r.phantom, sizeof r.phantom));
  out.n = r.n;
  out.n_theta = r.n_theta;
  out.margin = r.margin;
  out.err_analytic = r.err_analytic;
  out.err_discrete = r.err_discrete;
  out.mask_fraction = r.mask_fraction;
  out.seconds_analytic = r.seconds_analytic;
  out.seconds_discrete = r.seconds_discrete;
  return out;
}

}  // namespace

extern "C" {

const char* rk_version(void) { return RADONKIT_VERSION; }

const char* rk_status_string(rk_status status) {
  switch (status) {
    case RK_OK: return "ok";
    case RK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RK_ERR_UNKNOWN_GALLERY: return "unknown gallery name";
    case RK_ERR_INVALID_PHANTOM: return "invalid phantom";
    case RK_ERR_IO: return "i/o error";
    case RK_ERR_MALFORMED_HEADER: return "malformed header";
    case RK_ERR_TRUNCATED_PAYLOAD: return "truncated payload";
    case RK_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case RK_ERR_ZERO_DENOMINATOR: return "zero denominator";
    case RK_ERR_EMPTY_MASK: return "empty mask";
    case RK_ERR_INVALID_REPORT: return "invalid report";
    case RK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rk_last_error(void) { return g_last_error.c_str(); }

size_t rk_gallery_count(void) { return radonkit::gallery_names().size(); }

const char* rk_gallery_name(size_t index) {
  const auto& names = radonkit::gallery_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

rk_status rk_phantom_from_gallery(const char* name, rk_phantom** out) {
  RK_REQUIRE(name && out);
  return guarded([&] { *out = new rk_phantom{radonkit::gallery(name)}; });
}

rk_status rk_phantom_from_file(const char* path, rk_phantom** out) {
  RK_REQUIRE(path && out);
  return guarded([&] { *out = new rk_phantom{radonkit::load_phantom(path)}; });
}

rk_status rk_phantom_from_text(const char* text, rk_phantom** out) {
  RK_REQUIRE(text && out);
  return guarded([&] { *out = new rk_phantom{radonkit::parse_phantom(text)}; });
}

rk_status rk_phantom_save(const rk_phantom* p, const char* path) {
  RK_REQUIRE(p && path);
  return guarded([&] { radonkit::save_phantom(p->value, path); });
}

void rk_phantom_free(rk_phantom* p) { delete p; }

rk_status rk_phantom_figure_count(const rk_phantom* p, size_t* out) {
  RK_REQUIRE(p && out);
  *out = p->value.figures.size();
  return RK_OK;
}

rk_status rk_phantom_figure_kind(const rk_phantom* p, size_t index, rk_figure_kind* out) {
  RK_REQUIRE(p && out);
  if (index >= p->value.figures.size()) {
    return fail(RK_ERR_INVALID_ARGUMENT, "figure index out of range");
  }
  *out = std::holds_alternative<radonkit::Ellipse>(p->value.figures[index]) ? RK_FIGURE_ELLIPSE
                                                                            : RK_FIGURE_RECTANGLE;
  return RK_OK;
}

rk_status rk_phantom_circle_mode(const rk_phantom* p, int* out) {
  RK_REQUIRE(p && out);
  *out = p->value.circle_mode ? 1 : 0;
  return RK_OK;
}

rk_status rk_rasterize(const rk_phantom* p, size_t n, rk_image** out) {
  RK_REQUIRE(p && out);
  return guarded([&] { *out = new rk_image{radonkit::rasterize(p->value, n)}; });
}

rk_status rk_image_size(const rk_image* img, size_t* n) {
  RK_REQUIRE(img && n);
  *n = img->value.size();
  return RK_OK;
}

rk_status rk_image_data(const rk_image* img, const double** data) {
  RK_REQUIRE(img && data);
  *data = img->value.values().data();
  return RK_OK;
}

rk_status rk_image_save(const rk_image* img, const char* path) {
  RK_REQUIRE(img && path);
  return guarded([&] { radonkit::write_grid(path, radonkit::to_grid(img->value)); });
}

rk_status rk_image_load(const char* path, rk_image** out) {
  RK_REQUIRE(path && out);
  return guarded([&] {
    *out = new rk_image{radonkit::image_from_grid(radonkit::read_grid(path))};
  });
}

rk_status rk_image_export_pgm(const rk_image* img, const char* path) {
  RK_REQUIRE(img && path);
  return guarded([&] { radonkit::export_pgm(img->value, path); });
}

void rk_image_free(rk_image* img) { delete img; }

rk_status rk_analytic_sinogram(const rk_phantom* p, size_t n_t, size_t n_theta,
                               rk_sinogram** out) {
  RK_REQUIRE(p && out);
  return guarded([&] {
    const auto grid = radonkit::SinogramGrid::uniform(n_t, n_theta);
    *out = new rk_sinogram{radonkit::analytic_sinogram(p->value, grid)};
  });
}

rk_status rk_forward_project(const rk_image* img, size_t n_theta, rk_sinogram** out) {
  RK_REQUIRE(img && out);
  return guarded([&] {
    const auto grid = radonkit::SinogramGrid::uniform(img->value.size(), n_theta);
    *out = new rk_sinogram{radonkit::forward_project(img->value, grid)};
  });
}

rk_status rk_sinogram_shape(const rk_sinogram* s, size_t* n_t, size_t* n_theta) {
  RK_REQUIRE(s && n_t && n_theta);
  *n_t = s->value.grid.n_t();
  *n_theta = s->value.grid.n_theta();
  return RK_OK;
}

rk_status rk_sinogram_data(const rk_sinogram* s, const double** data) {
  RK_REQUIRE(s && data);
  *data = s->value.values.data();
  return RK_OK;
}

rk_status rk_sinogram_axes(const rk_sinogram* s, const double** t_values,
                           const double** theta_values) {
  RK_REQUIRE(s && t_values && theta_values);
  *t_values = s->value.grid.t_values().data();
  *theta_values = s->value.grid.theta_values().data();
  return RK_OK;
}

rk_status rk_sinogram_save(const rk_sinogram* s, const char* path) {
  RK_REQUIRE(s && path);
  return guarded([&] { radonkit::write_grid(path, radonkit::to_grid(s->value)); });
}

rk_status rk_sinogram_load(const char* path, rk_sinogram** out) {
  RK_REQUIRE(path && out);
  return guarded([&] {
    *out = new rk_sinogram{radonkit::sinogram_from_grid(radonkit::read_grid(path))};
  });
}

void rk_sinogram_free(rk_sinogram* s) { delete s; }

rk_status rk_fbp(const rk_sinogram* s, size_t n, rk_filter filter, int circle_mode,
                 rk_image** out) {
  RK_REQUIRE(s && out);
  if (filter != RK_FILTER_RAMP && filter != RK_FILTER_RAMP_HANN) {
    return fail(RK_ERR_INVALID_ARGUMENT, "unknown filter");
  }
  return guarded([&] {
    radonkit::FilterSpec spec;
    spec.kind = filter == RK_FILTER_RAMP ? radonkit::FilterKind::Ramp
                                         : radonkit::FilterKind::RampHann;
    *out = new rk_image{radonkit::fbp(s->value, n, spec, circle_mode != 0)};
  });
}

rk_status rk_gibbs_mask(const rk_phantom* p, size_t n, size_t margin, rk_mask** out) {
  RK_REQUIRE(p && out);
  return guarded([&] { *out = new rk_mask{radonkit::gibbs_mask(p->value, n, margin)}; });
}

rk_status rk_mask_count(const rk_mask* m, size_t* out) {
  RK_REQUIRE(m && out);
  *out = m->value.count();
  return RK_OK;
}

rk_status rk_mask_save(const rk_mask* m, const char* path) {
  RK_REQUIRE(m && path);
  return guarded([&] { radonkit::write_grid(path, radonkit::to_grid(m->value)); });
}

void rk_mask_free(rk_mask* m) { delete m; }

rk_status rk_relative_error(const rk_image* a, const rk_image* b, const rk_mask* m,
                            double* out) {
  RK_REQUIRE(a && b && m && out);
  return guarded([&] { *out = radonkit::relative_error(a->value, b->value, m->value); });
}

rk_status rk_compare(const rk_phantom* p, const char* name, size_t n, size_t n_theta,
                     size_t margin, rk_report* out) {
  RK_REQUIRE(p && name && out);
  if (std::strlen(name) >= sizeof out->phantom) {
    return fail(RK_ERR_INVALID_ARGUMENT, "report name longer than 63 bytes");
  }
  return guarded([&] {
    const auto grid = radonkit::SinogramGrid::uniform(n, n_theta);
    const auto rep = radonkit::compare_pipelines(p->value, name, n, grid, margin);
    rk_report r{};
    std::memcpy(r.phantom, rep.phantom.c_str(), rep.phantom.size() + 1);
    r.n = rep.n;
    r.n_theta = rep.n_theta;
    r.margin = rep.margin;
    r.err_analytic = rep.err_analytic;
    r.err_discrete = rep.err_discrete;
    r.mask_fraction = rep.mask_fraction;
    r.seconds_analytic = rep.seconds_analytic;
    r.seconds_discrete = rep.seconds_discrete;
    *out = r;
  });
}

rk_status rk_reports_export_csv(const rk_report* reports, size_t count, const char* path,
                                int append) {
  RK_REQUIRE(path && (reports || count == 0));
  return guarded([&] {
    std::vector<radonkit::ComparisonReport> reps;
    reps.reserve(count);
    for (size_t i = 0; i < count; ++i) reps.push_back(from_c(reports[i]));
    radonkit::export_csv(reps, path, append != 0);
  });
}

rk_status rk_report_format(const rk_report* r, char* buf, size_t size, size_t* needed) {
  RK_REQUIRE(r && (buf || size == 0));
  return guarded([&] {
    const std::string text = radonkit::format_report(from_c(*r));
    if (needed) *needed = text.size();
    if (size > 0) {
      const size_t n = std::min(size - 1, text.size());
      std::memcpy(buf, text.data(), n);
      buf[n] = '\0';
    }
  });
}

}  // extern "C"
