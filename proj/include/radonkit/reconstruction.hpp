#pragma once

#include <cstddef>
#include <vector>

#include "radonkit/analytic.hpp"
#include "radonkit/raster.hpp"

namespace radonkit {

enum class FilterKind { Ramp, RampHann };

struct FilterSpec {
  FilterKind kind = FilterKind::Ramp;
  // 0 selects the smallest power of two >= 8 * n_t. The sampled |nu| response
  // has no zero-frequency weight, so short pads bias the reconstruction low.
  std::size_t pad_length = 0;

  /// Resolves pad_length for n_t detectors and checks it. Throws
  /// Error(InvalidArgument) if it is not a power of two >= 2 * n_t.
  std::size_t resolved_pad(std::size_t n_t) const;
};

/// Frequency response sampled on the DFT grid of length pad, detector pitch dt,
/// in cycles per unit length: |nu_k|, optionally Hann-tapered.
std::vector<double> filter_response(const FilterSpec& spec, std::size_t pad, double dt);

/// Filters one detector column, returning all pad samples (before truncation).
std::vector<double> ramp_filter_column(const std::vector<double>& column, const FilterSpec& spec,
                                       double dt);

/// Applies the ramp filter along t to every angle column.
Sinogram ramp_filter(const Sinogram& s, const FilterSpec& spec = {});

/// Unfiltered back-projection onto an n x n raster with linear interpolation
/// along t, scaled by pi / n_theta. The scale is right for uniform angles over
/// either a half or a full turn. In circle mode pixels outside the unit disk
/// are zeroed.
Image backproject(const Sinogram& s, std::size_t n, bool circle_mode = true);

Image fbp(const Sinogram& s, std::size_t n, const FilterSpec& spec = {}, bool circle_mode = true);

}  // namespace radonkit
