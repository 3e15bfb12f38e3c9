/*
 * radonkit C interface.
 *
 * Objects are opaque handles created by rk_*_create / rk_*_load style calls
 * and released with the matching rk_*_free. Every fallible call returns an
 * rk_status; on failure rk_last_error() describes the problem for the calling
 * thread until that thread's next failing call. Output handles are only
 * written on success.
 */
#ifndef RADONKIT_H
#define RADONKIT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(RADONKIT_BUILDING)
#    define RK_API __declspec(dllexport)
#  else
#    define RK_API __declspec(dllimport)
#  endif
#else
#  define RK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rk_status {
  RK_OK = 0,
  RK_ERR_INVALID_ARGUMENT = 1,
  RK_ERR_UNKNOWN_GALLERY = 2,
  RK_ERR_INVALID_PHANTOM = 3,
  RK_ERR_IO = 4,
  RK_ERR_MALFORMED_HEADER = 5,
  RK_ERR_TRUNCATED_PAYLOAD = 6,
  RK_ERR_DIMENSION_MISMATCH = 7,
  RK_ERR_ZERO_DENOMINATOR = 8,
  RK_ERR_EMPTY_MASK = 9,
  RK_ERR_INVALID_REPORT = 10,
  RK_ERR_INTERNAL = 99
} rk_status;

typedef enum rk_figure_kind { RK_FIGURE_ELLIPSE = 0, RK_FIGURE_RECTANGLE = 1 } rk_figure_kind;

typedef enum rk_filter { RK_FILTER_RAMP = 0, RK_FILTER_RAMP_HANN = 1 } rk_filter;

typedef struct rk_phantom rk_phantom;
typedef struct rk_image rk_image;
typedef struct rk_sinogram rk_sinogram;
typedef struct rk_mask rk_mask;

/* One row of the pipeline comparison. phantom is NUL-terminated. */
typedef struct rk_report {
  char phantom[64];
  size_t n;
  size_t n_theta;
  size_t margin;
  double err_analytic;
  double err_discrete;
  double mask_fraction;
  double seconds_analytic;
  double seconds_discrete;
} rk_report;

RK_API const char* rk_version(void);
RK_API const char* rk_status_string(rk_status status);
RK_API const char* rk_last_error(void);

/* ---- phantoms ---------------------------------------------------------- */

RK_API size_t rk_gallery_count(void);
/* Returns NULL when index is out of range. */
RK_API const char* rk_gallery_name(size_t index);

RK_API rk_status rk_phantom_from_gallery(const char* name, rk_phantom** out);
RK_API rk_status rk_phantom_from_file(const char* path, rk_phantom** out);
RK_API rk_status rk_phantom_from_text(const char* text, rk_phantom** out);
RK_API rk_status rk_phantom_save(const rk_phantom* p, const char* path);
RK_API void rk_phantom_free(rk_phantom* p);

RK_API rk_status rk_phantom_figure_count(const rk_phantom* p, size_t* out);
RK_API rk_status rk_phantom_figure_kind(const rk_phantom* p, size_t index, rk_figure_kind* out);
RK_API rk_status rk_phantom_circle_mode(const rk_phantom* p, int* out);

/* ---- images ------------------------------------------------------------ */

RK_API rk_status rk_rasterize(const rk_phantom* p, size_t n, rk_image** out);
RK_API rk_status rk_image_size(const rk_image* img, size_t* n);
/* Row-major n*n values, valid until the image is freed. */
RK_API rk_status rk_image_data(const rk_image* img, const double** data);
RK_API rk_status rk_image_save(const rk_image* img, const char* path);
RK_API rk_status rk_image_load(const char* path, rk_image** out);
RK_API rk_status rk_image_export_pgm(const rk_image* img, const char* path);
RK_API void rk_image_free(rk_image* img);

/* ---- sinograms --------------------------------------------------------- */

/* Default grid: n_t pixel-centered offsets over [-1,1], n_theta angles over [0, 2pi). */
RK_API rk_status rk_analytic_sinogram(const rk_phantom* p, size_t n_t, size_t n_theta,
                                      rk_sinogram** out);
/* Uses n_t = image side. */
RK_API rk_status rk_forward_project(const rk_image* img, size_t n_theta, rk_sinogram** out);
RK_API rk_status rk_sinogram_shape(const rk_sinogram* s, size_t* n_t, size_t* n_theta);
/* Row-major n_t*n_theta values. */
RK_API rk_status rk_sinogram_data(const rk_sinogram* s, const double** data);
RK_API rk_status rk_sinogram_axes(const rk_sinogram* s, const double** t_values,
                                  const double** theta_values);
RK_API rk_status rk_sinogram_save(const rk_sinogram* s, const char* path);
RK_API rk_status rk_sinogram_load(const char* path, rk_sinogram** out);
RK_API void rk_sinogram_free(rk_sinogram* s);

/* ---- reconstruction and analysis -------------------------------------- */

RK_API rk_status rk_fbp(const rk_sinogram* s, size_t n, rk_filter filter, int circle_mode,
                        rk_image** out);

RK_API rk_status rk_gibbs_mask(const rk_phantom* p, size_t n, size_t margin, rk_mask** out);
RK_API rk_status rk_mask_count(const rk_mask* m, size_t* out);
RK_API rk_status rk_mask_save(const rk_mask* m, const char* path);
RK_API void rk_mask_free(rk_mask* m);

RK_API rk_status rk_relative_error(const rk_image* a, const rk_image* b, const rk_mask* m,
                                   double* out);

/* Runs both pipelines on the default grid (n_t = n). name labels the report. */
RK_API rk_status rk_compare(const rk_phantom* p, const char* name, size_t n, size_t n_theta,
                            size_t margin, rk_report* out);

/* Writes header + rows (append != 0 appends rows, header only for a new file). */
RK_API rk_status rk_reports_export_csv(const rk_report* reports, size_t count, const char* path,
                                       int append);
/* Copies the key=value rendering into buf (always NUL-terminated when size > 0)
   and stores the full length, excluding the terminator, in *needed. */
RK_API rk_status rk_report_format(const rk_report* r, char* buf, size_t size, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* RADONKIT_H */
