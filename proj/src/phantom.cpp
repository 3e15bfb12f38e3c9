#include "radonkit/phantom.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gallery_data.hpp"
#include "radonkit/error.hpp"
#include "text_util.hpp"

namespace radonkit {

namespace {

constexpr double kCircleSlack = 1e-12;

// Coordinates of (x, y) in the frame centered at (x0, y0) rotated by phi.
std::array<double, 2> to_local(double x0, double y0, double phi, double x, double y) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double dx = x - x0;
  const double dy = y - y0;
  return {dx * c + dy * s, dy * c - dx * s};
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

bool contains(const Ellipse& e, double x, double y) noexcept {
  const auto [xh, yh] = to_local(e.x0, e.y0, e.phi, x, y);
  return xh * xh / (e.a * e.a) + yh * yh / (e.b * e.b) <= 1.0;
}

bool contains(const Rectangle& r, double x, double y) noexcept {
  const auto [u, v] = to_local(r.x0, r.y0, r.phi, x, y);
  return std::abs(u) <= 0.5 * r.wx && std::abs(v) <= 0.5 * r.wy;
}

bool contains(const Figure& f, double x, double y) noexcept {
  return std::visit([&](const auto& g) { return contains(g, x, y); }, f);
}

double area(const Ellipse& e) noexcept { return std::numbers::pi * e.a * e.b; }
double area(const Rectangle& r) noexcept { return r.wx * r.wy; }

double figure_area(const Figure& f) noexcept {
  return std::visit([](const auto& g) { return area(g); }, f);
}

double circumradius(const Figure& f) noexcept {
  return std::visit(
      overloaded{[](const Ellipse& e) { return std::max(e.a, e.b); },
                 [](const Rectangle& r) { return 0.5 * std::hypot(r.wx, r.wy); }},
      f);
}

double attenuation(const Figure& f) noexcept {
  return std::visit([](const auto& g) { return g.delta; }, f);
}

double attenuation(const Phantom& p, double x, double y) noexcept {
  double sum = 0.0;
  for (const auto& f : p.figures) {
    if (contains(f, x, y)) sum += attenuation(f);
  }
  return sum;
}

std::vector<std::string> validate(const Phantom& p) {
  std::vector<std::string> out;
  if (p.figures.empty()) out.emplace_back("phantom has no figures");

  for (std::size_t i = 0; i < p.figures.size(); ++i) {
    const std::string tag = "figure " + std::to_string(i) + ": ";
    std::visit(
        overloaded{
            [&](const Ellipse& e) {
              const std::array vals{e.x0, e.y0, e.a, e.b, e.phi, e.delta};
              for (double v : vals) {
                if (!std::isfinite(v)) {
                  out.push_back(tag + "non-finite parameter");
                  return;
                }
              }
              if (!(e.a > 0.0) || !(e.b > 0.0)) {
                out.push_back(tag + "semi-axis must be positive");
                return;
              }
              if (p.circle_mode &&
                  std::hypot(e.x0, e.y0) + std::max(e.a, e.b) > 1.0 + kCircleSlack) {
                out.push_back(tag + "ellipse leaves the unit disk");
              }
            },
            [&](const Rectangle& r) {
              const std::array vals{r.x0, r.y0, r.wx, r.wy, r.phi, r.delta};
              for (double v : vals) {
                if (!std::isfinite(v)) {
                  out.push_back(tag + "non-finite parameter");
                  return;
                }
              }
              if (!(r.wx > 0.0) || !(r.wy > 0.0)) {
                out.push_back(tag + "side length must be positive");
                return;
              }
              if (!p.circle_mode) return;
              const double c = std::cos(r.phi);
              const double s = std::sin(r.phi);
              for (double su : {-0.5, 0.5}) {
                for (double sv : {-0.5, 0.5}) {
                  const double u = su * r.wx;
                  const double v = sv * r.wy;
                  const double x = r.x0 + u * c - v * s;
                  const double y = r.y0 + u * s + v * c;
                  if (std::hypot(x, y) > 1.0 + kCircleSlack) {
                    out.push_back(tag + "rectangle corner leaves the unit disk");
                    return;
                  }
                }
              }
            }},
        p.figures[i]);
  }
  return out;
}

void require_valid(const Phantom& p) {
  const auto violations = validate(p);
  if (violations.empty()) return;
  std::string msg = "invalid phantom:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw Error(ErrorCode::InvalidPhantom, msg);
}

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names{"shepp_logan", "modified_shepp_logan",
                                              "squares", "rectangles"};
  return names;
}

Phantom gallery(std::string_view name) {
  if (name == "ellipses") name = "shepp_logan";
  for (const auto& entry : detail::gallery_sources()) {
    if (entry.name == name) return parse_phantom(entry.text);
  }
  std::string msg = "unknown gallery '" + std::string(name) + "'; valid names:";
  for (const auto& n : gallery_names()) msg += " " + n;
  msg += " (alias: ellipses)";
  throw Error(ErrorCode::UnknownGallery, msg);
}

Phantom parse_phantom(std::string_view text) {
  Phantom p;
  bool header_seen = false;
  std::size_t line_no = 0;

  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;

    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::InvalidPhantom,
                   "phantom text line " + std::to_string(line_no) + ": " + why);
    };

    if (!header_seen) {
      if (tokens.size() != 3 || tokens[0] != "phantom" || tokens[1] != "v1" ||
          (tokens[2] != "circle=0" && tokens[2] != "circle=1")) {
        throw fail("expected header 'phantom v1 circle=<0|1>'");
      }
      p.circle_mode = tokens[2] == "circle=1";
      header_seen = true;
      continue;
    }

    if (tokens.size() != 7 || (tokens[0] != "E" && tokens[0] != "R")) {
      throw fail("expected 'E|R' followed by six numbers");
    }
    std::array<double, 6> v{};
    for (std::size_t k = 0; k < 6; ++k) {
      auto parsed = detail::parse_double(tokens[k + 1]);
      if (!parsed) throw fail("bad number '" + std::string(tokens[k + 1]) + "'");
      v[k] = *parsed;
    }
    if (tokens[0] == "E") {
      p.figures.emplace_back(Ellipse{v[0], v[1], v[2], v[3], v[4], v[5]});
    } else {
      p.figures.emplace_back(Rectangle{v[0], v[1], v[2], v[3], v[4], v[5]});
    }
  }
  if (!header_seen) throw Error(ErrorCode::InvalidPhantom, "phantom text has no header");
  require_valid(p);
  return p;
}

std::string format_phantom(const Phantom& p) {
  std::string out = p.circle_mode ? "phantom v1 circle=1\n" : "phantom v1 circle=0\n";
  for (const auto& f : p.figures) {
    std::visit(overloaded{[&](const Ellipse& e) {
                            out += "E";
                            for (double v : {e.x0, e.y0, e.a, e.b, e.phi, e.delta}) {
                              out += ' ' + detail::format_double(v);
                            }
                          },
                          [&](const Rectangle& r) {
                            out += "R";
                            for (double v : {r.x0, r.y0, r.wx, r.wy, r.phi, r.delta}) {
                              out += ' ' + detail::format_double(v);
                            }
                          }},
               f);
    out += '\n';
  }
  return out;
}

Phantom load_phantom(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open phantom file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_phantom(ss.str());
}

void save_phantom(const Phantom& p, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write phantom file '" + path + "'");
  out << format_phantom(p);
  if (!out) throw Error(ErrorCode::Io, "write failed for '" + path + "'");
}

}  // namespace radonkit
