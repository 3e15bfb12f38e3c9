#pragma once

#include <span>
#include <string_view>

namespace radonkit::detail {

struct GallerySource {
  std::string_view name;
  std::string_view text;
};

// Generated at configure time from data/gallery/*.phm.
std::span<const GallerySource> gallery_sources();

}  // namespace radonkit::detail
