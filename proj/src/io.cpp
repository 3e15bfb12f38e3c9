#include "radonkit/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "radonkit/error.hpp"
#include "text_util.hpp"

namespace radonkit {

namespace {

constexpr std::string_view kMagic = "FGRID1\n";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void dump(const std::string& path, const std::string& bytes, std::ios::openmode mode) {
  std::ofstream out(path, std::ios::binary | mode);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed for '" + path + "'");
}

// Reads one '\n'-terminated line starting at pos.
std::string_view take_line(std::string_view bytes, std::size_t& pos) {
  const auto nl = bytes.find('\n', pos);
  if (nl == std::string_view::npos) {
    throw Error(ErrorCode::MalformedHeader, "float grid header line is not terminated");
  }
  auto line = bytes.substr(pos, nl - pos);
  pos = nl + 1;
  return line;
}

std::vector<double> parse_axis(std::string_view line, std::string_view key) {
  if (line.substr(0, key.size()) != key || line.size() <= key.size() || line[key.size()] != '=') {
    throw Error(ErrorCode::MalformedHeader,
                "expected '" + std::string(key) + "=' line in sinogram header");
  }
  std::vector<double> out;
  for (auto tok : detail::split_ws(line.substr(key.size() + 1))) {
    auto v = detail::parse_double(tok);
    if (!v) throw Error(ErrorCode::MalformedHeader, "bad number '" + std::string(tok) + "'");
    out.push_back(*v);
  }
  return out;
}

std::string join_axis(std::string_view key, const std::vector<double>& values) {
  std::string out(key);
  out += '=';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += detail::format_double(values[i]);
  }
  out += '\n';
  return out;
}

std::string csv_row(const ComparisonReport& r) {
  for (double e : {r.err_analytic, r.err_discrete}) {
    if (!std::isfinite(e) || e < 0.0) {
      throw Error(ErrorCode::InvalidReport, "report '" + r.phantom + "' has an invalid error value");
    }
  }
  if (r.phantom.find_first_of(",\n\"") != std::string::npos) {
    throw Error(ErrorCode::InvalidReport, "phantom name must not contain ',', '\"' or newlines");
  }
  return r.phantom + ',' + std::to_string(r.n) + ',' + std::to_string(r.n_theta) + ',' +
         std::to_string(r.margin) + ',' + detail::format_double(r.err_analytic) + ',' +
         detail::format_double(r.err_discrete) + '\n';
}

}  // namespace

const char* to_string(GridKind kind) noexcept {
  switch (kind) {
    case GridKind::Image: return "image";
    case GridKind::Sinogram: return "sinogram";
    case GridKind::Mask: return "mask";
  }
  return "?";
}

std::string encode_grid(const FloatGrid& g) {
  if (g.values.size() != g.rows * g.cols) {
    throw Error(ErrorCode::DimensionMismatch, "float grid payload does not match rows x cols");
  }
  std::string out(kMagic);
  out += "rows=" + std::to_string(g.rows) + " cols=" + std::to_string(g.cols) +
         " kind=" + to_string(g.kind) + '\n';
  if (g.kind == GridKind::Sinogram) {
    if (g.t_values.size() != g.rows || g.theta_values.size() != g.cols) {
      throw Error(ErrorCode::DimensionMismatch, "sinogram axes do not match rows x cols");
    }
    out += join_axis("t_values", g.t_values);
    out += join_axis("theta_values", g.theta_values);
  }
  const std::size_t header = out.size();
  out.resize(header + 8 * g.values.size());
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    auto bits = std::bit_cast<std::uint64_t>(g.values[i]);
    for (std::size_t b = 0; b < 8; ++b) {
      out[header + 8 * i + b] = static_cast<char>(bits & 0xffu);
      bits >>= 8;
    }
  }
  return out;
}

FloatGrid decode_grid(const std::string& bytes_in) {
  const std::string_view bytes(bytes_in);
  if (bytes.substr(0, kMagic.size()) != kMagic) {
    throw Error(ErrorCode::MalformedHeader, "missing FGRID1 magic");
  }
  std::size_t pos = kMagic.size();
  const auto dims = detail::split_ws(take_line(bytes, pos));

  FloatGrid g;
  if (dims.size() != 3 || dims[0].substr(0, 5) != "rows=" || dims[1].substr(0, 5) != "cols=" ||
      dims[2].substr(0, 5) != "kind=") {
    throw Error(ErrorCode::MalformedHeader, "expected 'rows=<r> cols=<c> kind=<k>'");
  }
  auto rows = detail::parse_uint<std::size_t>(dims[0].substr(5));
  auto cols = detail::parse_uint<std::size_t>(dims[1].substr(5));
  if (!rows || !cols) throw Error(ErrorCode::MalformedHeader, "bad grid dimensions");
  g.rows = *rows;
  g.cols = *cols;
  const auto kind = dims[2].substr(5);
  if (kind == "image") {
    g.kind = GridKind::Image;
  } else if (kind == "sinogram") {
    g.kind = GridKind::Sinogram;
  } else if (kind == "mask") {
    g.kind = GridKind::Mask;
  } else {
    throw Error(ErrorCode::MalformedHeader, "unknown grid kind '" + std::string(kind) + "'");
  }

  if (g.kind == GridKind::Sinogram) {
    g.t_values = parse_axis(take_line(bytes, pos), "t_values");
    g.theta_values = parse_axis(take_line(bytes, pos), "theta_values");
    if (g.t_values.size() != g.rows || g.theta_values.size() != g.cols) {
      throw Error(ErrorCode::DimensionMismatch, "sinogram axes do not match rows x cols");
    }
  }

  if (g.cols != 0 && g.rows > (bytes.size() / 8) / g.cols + 1) {
    throw Error(ErrorCode::TruncatedPayload, "payload shorter than rows x cols");
  }
  const std::size_t count = g.rows * g.cols;
  const std::size_t payload = bytes.size() - pos;
  if (payload < 8 * count) {
    throw Error(ErrorCode::TruncatedPayload,
                "payload holds " + std::to_string(payload / 8) + " values, header promises " +
                    std::to_string(count));
  }
  if (payload > 8 * count) {
    throw Error(ErrorCode::DimensionMismatch, "payload longer than rows x cols");
  }
  g.values.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t bits = 0;
    for (std::size_t b = 0; b < 8; ++b) {
      bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[pos + 8 * i + b]))
              << (8 * b);
    }
    g.values[i] = std::bit_cast<double>(bits);
  }
  return g;
}

void write_grid(const std::string& path, const FloatGrid& grid) {
  dump(path, encode_grid(grid), std::ios::trunc);
}

FloatGrid read_grid(const std::string& path) { return decode_grid(slurp(path)); }

FloatGrid to_grid(const Image& img) {
  return FloatGrid{img.size(), img.size(), GridKind::Image, {}, {}, img.values()};
}

FloatGrid to_grid(const Sinogram& s) {
  return FloatGrid{s.grid.n_t(), s.grid.n_theta(), GridKind::Sinogram,
                   s.grid.t_values(), s.grid.theta_values(), s.values};
}

FloatGrid to_grid(const Mask& m) {
  FloatGrid g{m.size(), m.size(), GridKind::Mask, {}, {}, {}};
  g.values.reserve(m.values().size());
  for (bool b : m.values()) g.values.push_back(b ? 1.0 : 0.0);
  return g;
}

Image image_from_grid(const FloatGrid& g) {
  if (g.kind != GridKind::Image) {
    throw Error(ErrorCode::MalformedHeader,
                std::string("expected an image grid, found ") + to_string(g.kind));
  }
  if (g.rows != g.cols) throw Error(ErrorCode::DimensionMismatch, "image grid is not square");
  return Image(g.rows, g.values);
}

Sinogram sinogram_from_grid(const FloatGrid& g) {
  if (g.kind != GridKind::Sinogram) {
    throw Error(ErrorCode::MalformedHeader,
                std::string("expected a sinogram grid, found ") + to_string(g.kind));
  }
  Sinogram s(SinogramGrid(g.t_values, g.theta_values));
  s.values = g.values;
  return s;
}

Mask mask_from_grid(const FloatGrid& g) {
  if (g.kind != GridKind::Mask) {
    throw Error(ErrorCode::MalformedHeader,
                std::string("expected a mask grid, found ") + to_string(g.kind));
  }
  if (g.rows != g.cols) throw Error(ErrorCode::DimensionMismatch, "mask grid is not square");
  std::vector<bool> keep;
  keep.reserve(g.values.size());
  for (double v : g.values) {
    if (v != 0.0 && v != 1.0) throw Error(ErrorCode::MalformedHeader, "mask values must be 0 or 1");
    keep.push_back(v == 1.0);
  }
  return Mask(g.rows, std::move(keep));
}

std::string encode_pgm(const Image& img) {
  const auto& v = img.values();
  for (double x : v) {
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "cannot export non-finite image");
  }
  const auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const double span = hi - lo;

  std::string out = "P5\n# min=" + detail::format_double(lo) + " max=" +
                    detail::format_double(hi) + "\n" + std::to_string(img.size()) + ' ' +
                    std::to_string(img.size()) + "\n65535\n";
  out.reserve(out.size() + 2 * v.size());
  for (double x : v) {
    unsigned sample = 0;
    if (span > 0.0) sample = static_cast<unsigned>(std::lround((x - lo) / span * 65535.0));
    out += static_cast<char>((sample >> 8) & 0xffu);
    out += static_cast<char>(sample & 0xffu);
  }
  return out;
}

void export_pgm(const Image& img, const std::string& path) {
  dump(path, encode_pgm(img), std::ios::trunc);
}

std::string encode_csv(const std::vector<ComparisonReport>& reports, bool with_header) {
  std::string out;
  if (with_header) out += std::string(kCsvHeader) + '\n';
  for (const auto& r : reports) out += csv_row(r);
  return out;
}

void export_csv(const std::vector<ComparisonReport>& reports, const std::string& path,
                bool append) {
  std::error_code ec;
  const bool fresh = !append || !std::filesystem::exists(path, ec) ||
                     std::filesystem::file_size(path, ec) == 0;
  const std::string body = encode_csv(reports, fresh);
  dump(path, body, fresh ? std::ios::trunc : std::ios::app);
}

std::string format_report(const ComparisonReport& r) {
  return "phantom=" + r.phantom + "\nn=" + std::to_string(r.n) +
         "\nn_theta=" + std::to_string(r.n_theta) + "\nmargin=" + std::to_string(r.margin) +
         "\nerr_analytic=" + detail::format_double(r.err_analytic) +
         "\nerr_discrete=" + detail::format_double(r.err_discrete) +
         "\nmask_fraction=" + detail::format_double(r.mask_fraction) + '\n';
}

}  // namespace radonkit
