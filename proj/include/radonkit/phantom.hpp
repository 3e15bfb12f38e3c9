#pragma once

// Geometric figures, phantoms and the built-in gallery.
//
// All coordinates live on the normalized image domain [-1,1]^2 with x pointing
// right and y pointing up. Rotations are counterclockwise, in radians.

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace radonkit {

struct Ellipse {
  double x0 = 0.0;
  double y0 = 0.0;
  double a = 1.0;  // semi-axis along the rotated local x
  double b = 1.0;  // semi-axis along the rotated local y
  double phi = 0.0;
  double delta = 1.0;
};

// wx, wy are full side lengths. A square is wx == wy.
struct Rectangle {
  double x0 = 0.0;
  double y0 = 0.0;
  double wx = 1.0;
  double wy = 1.0;
  double phi = 0.0;
  double delta = 1.0;
};

using Figure = std::variant<Ellipse, Rectangle>;

struct Phantom {
  std::vector<Figure> figures;
  bool circle_mode = true;
};

bool contains(const Ellipse& e, double x, double y) noexcept;
bool contains(const Rectangle& r, double x, double y) noexcept;
bool contains(const Figure& f, double x, double y) noexcept;

double area(const Ellipse& e) noexcept;
double area(const Rectangle& r) noexcept;
double figure_area(const Figure& f) noexcept;

/// Largest distance from the figure's center to a point of its support.
double circumradius(const Figure& f) noexcept;

double attenuation(const Figure& f) noexcept;

/// Sum of delta over every figure containing (x, y).
double attenuation(const Phantom& p, double x, double y) noexcept;

/// Empty result means the phantom is valid. Each entry is one human-readable
/// violation, prefixed with the offending figure index where applicable.
std::vector<std::string> validate(const Phantom& p);

/// Throws Error(InvalidPhantom) listing every violation.
void require_valid(const Phantom& p);

// ---- gallery ---------------------------------------------------------------

/// Canonical names, in listing order.
const std::vector<std::string>& gallery_names();

/// Accepts canonical names plus the alias "ellipses" (= "shepp_logan").
/// Throws Error(UnknownGallery) naming the valid identifiers.
Phantom gallery(std::string_view name);

// ---- text serialization ----------------------------------------------------
//
//   phantom v1 circle=1
//   # comment
//   E x0 y0 a b phi delta
//   R x0 y0 wx wy phi delta
//
// Numbers are written with 17 significant digits so parse(format(p)) == p.

Phantom parse_phantom(std::string_view text);
std::string format_phantom(const Phantom& p);

Phantom load_phantom(const std::string& path);
void save_phantom(const Phantom& p, const std::string& path);

}  // namespace radonkit
