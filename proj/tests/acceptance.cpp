// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <sys/wait.h>

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "radonkit/analysis.hpp"
#include "radonkit/analytic.hpp"
#include "radonkit/io.hpp"
#include "radonkit/raster.hpp"
#include "radonkit/reconstruction.hpp"
#include "support/oracle_chord.hpp"
#include "support/random_figures.hpp"

namespace {

using namespace radonkit;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double center_x(const Figure& f) {
  return std::visit([](const auto& g) { return g.x0; }, f);
}
double center_y(const Figure& f) {
  return std::visit([](const auto& g) { return g.y0; }, f);
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(RADONKIT_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. Closed forms against the root-finding oracle.
Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  testing::FigureSource src(1);
  double worst[2] = {0, 0};
  for (int i = 0; i < 1000; ++i) {
    const Figure figs[2] = {Figure{src.ellipse()}, Figure{src.rectangle()}};
    for (int c = 0; c < 2; ++c) {
      const double t = src.uniform(-1, 1);
      const double th = src.uniform(0, 2 * kPi);
      worst[c] = std::max(worst[c], std::abs(radon_figure(figs[c], t, th) -
                                             testing::oracle_chord(figs[c], t, th)));
    }
  }
  const double secs = seconds_since(t0);
  return {worst[0] <= 1e-10 && worst[1] <= 1e-10 && secs < 10.0,
          fmt("max |diff| ellipse %.2e, rectangle %.2e (<= 1e-10); %.2f s (< 10 s)", worst[0],
              worst[1], secs)};
}

// 2. Antipodal, rotation and translation symmetries.
Outcome symmetries() {
  testing::FigureSource src(2);
  double anti = 0, rot = 0, shift = 0;
  for (int i = 0; i < 1000; ++i) {
    const Figure f = i % 2 ? Figure{src.ellipse()} : Figure{src.rectangle()};
    const double t = src.uniform(-1, 1);
    const double th = src.uniform(0, kPi);
    const double v = radon_figure(f, t, th);
    anti = std::max(anti, std::abs(v - radon_figure(f, -t, th + kPi)));

    const double alpha = src.uniform(-kPi, kPi);
    Figure r = f;
    std::visit(
        [&](auto& g) {
          const double x = g.x0, y = g.y0;
          g.x0 = x * std::cos(alpha) - y * std::sin(alpha);
          g.y0 = x * std::sin(alpha) + y * std::cos(alpha);
          g.phi += alpha;
        },
        r);
    rot = std::max(rot, std::abs(v - radon_figure(r, t, th + alpha)));

    const double dx = src.uniform(-0.3, 0.3), dy = src.uniform(-0.3, 0.3);
    Figure s = f;
    std::visit([&](auto& g) { g.x0 += dx, g.y0 += dy; }, s);
    shift = std::max(shift,
                     std::abs(v - radon_figure(s, t + dx * std::cos(th) + dy * std::sin(th), th)));
  }
  return {anti <= 1e-12 && rot <= 1e-12 && shift <= 1e-12,
          fmt("antipodal %.2e, rotation %.2e, translation %.2e (each <= 1e-12)", anti, rot, shift)};
}

// 3. Projection mass equals delta * area.
Outcome mass_conservation() {
  testing::FigureSource src(3);
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const Figure f = i % 2 ? Figure{src.ellipse()} : Figure{src.rectangle()};
    const double mass = attenuation(f) * figure_area(f);
    const double r = circumradius(f);
    for (int a = 0; a < 8; ++a) {
      const double th = a * kPi / 8 + 0.1;
      const double c = center_x(f) * std::cos(th) + center_y(f) * std::sin(th);
      constexpr int kSamples = 4001;
      const double h = 2 * r / (kSamples - 1);
      double sum = 0;
      for (int k = 0; k < kSamples; ++k) {
        sum += (k == 0 || k == kSamples - 1 ? 0.5 : 1.0) * radon_figure(f, c - r + k * h, th);
      }
      worst = std::max(worst, std::abs(sum * h - mass) / mass);
    }
  }
  return {worst <= 1e-3, fmt("max relative deviation %.2e over 20 figures x 8 angles (<= 1e-3)", worst)};
}

// 4. Constant disk recovered by FBP.
Outcome fbp_sanity() {
  const Phantom disk{{Ellipse{0, 0, 0.5, 0.5, 0, 1}}, true};
  const Image img = fbp(analytic_sinogram(disk, SinogramGrid::uniform(300, 360)), 300);
  double sum = 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < 300; ++i) {
    for (std::size_t j = 0; j < 300; ++j) {
      if (std::hypot(img.x_center(j), img.y_center(i)) < 0.35) {
        sum += img.at(i, j);
        ++count;
      }
    }
  }
  const double mean = sum / static_cast<double>(count);
  double lo = INFINITY, hi = -INFINITY;
  for (int a = 0; a < 360; ++a) {
    const double v = img.sample(0.25 * std::cos(a * kPi / 180), 0.25 * std::sin(a * kPi / 180));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double ring = (hi - lo) / (0.5 * (hi + lo));
  return {std::abs(mean - 1.0) <= 0.02 && ring <= 0.02,
          fmt("interior mean %.5f (1 +- 0.02), ring variation %.2e (<= 0.02)", mean, ring)};
}

struct Row {
  double analytic = NAN;
  double discrete = NAN;
};

// Runs the CLI comparison over every gallery and parses its CSV.
std::map<std::string, Row> cli_table(const fs::path& dir, double& seconds, int& code) {
  const fs::path csv = dir / "table.csv";
  const auto t0 = Clock::now();
  code = run_cli("compare --gallery all --n 300 --angles 360 --margin 3 --out-csv " + csv.string());
  seconds = seconds_since(t0);
  std::map<std::string, Row> rows;
  std::istringstream in(slurp(csv));
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != 6) continue;
    rows[cells[0]] = Row{std::strtod(cells[4].c_str(), nullptr), std::strtod(cells[5].c_str(), nullptr)};
  }
  return rows;
}

bool within(double v, double lo, double hi) { return v >= lo && v <= hi; }

// 5. Error levels of the comparison table.
Outcome table_reproduction(const std::map<std::string, Row>& rows, double seconds, int code) {
  auto get = [&](const char* name) {
    const auto it = rows.find(name);
    return it == rows.end() ? Row{} : it->second;
  };
  const Row sl = get("shepp_logan"), msl = get("modified_shepp_logan");
  const Row sq = get("squares"), re = get("rectangles");
  auto banded = [](const Row& r, double ref_a, double ref_d) {
    return within(r.analytic, 0.015, 0.06) && within(r.analytic, ref_a / 2, ref_a * 2) &&
           within(r.discrete, 0.015, 0.07) && within(r.discrete, ref_d / 2, ref_d * 2);
  };
  const bool ok_sl = banded(sl, 0.03073, 0.03604);
  const bool ok_msl = banded(msl, 0.02590, 0.03191);
  const bool ok_blocks =
      sq.analytic <= 0.07 && sq.discrete <= 0.07 && re.analytic <= 0.07 && re.discrete <= 0.07;
  return {code == 0 && ok_sl && ok_msl && ok_blocks && seconds <= 120.0,
          fmt("shepp_logan %.5f/%.5f [%s], modified_shepp_logan %.5f/%.5f [%s], squares "
              "%.5f/%.5f, rectangles %.5f/%.5f [%s]; %.1f s (<= 120 s)",
              sl.analytic, sl.discrete, ok_sl ? "in band" : "out of band", msl.analytic,
              msl.discrete, ok_msl ? "in band" : "out of band", sq.analytic, sq.discrete,
              re.analytic, re.discrete, ok_blocks ? "<= 0.07" : "> 0.07", seconds)};
}

// 6. Analytic pipeline beats the discrete one on the ellipse galleries.
Outcome ordering(const std::map<std::string, Row>& rows) {
  std::string detail;
  bool pass = true;
  for (const char* name : {"shepp_logan", "modified_shepp_logan"}) {
    const auto it = rows.find(name);
    const Row r = it == rows.end() ? Row{} : it->second;
    const bool ok = r.analytic < r.discrete;
    pass = pass && ok;
    detail += fmt("%s%s analytic %.5f %s discrete %.5f", detail.empty() ? "" : ", ", name,
                  r.analytic, ok ? "<" : ">=", r.discrete);
  }
  return {pass, detail};
}

// 7. Analytic-pipeline error vs angle count.
Outcome convergence() {
  const Phantom p = gallery("shepp_logan");
  const Image truth = rasterize(p, 300);
  const Mask mask = gibbs_mask(p, 300, 3);
  std::vector<double> errs;
  for (std::size_t angles : {45, 90, 180, 360}) {
    errs.push_back(relative_error(fbp(analytic_sinogram(p, SinogramGrid::uniform(300, angles)), 300),
                                  truth, mask));
  }
  bool pass = true;
  for (std::size_t i = 1; i < errs.size(); ++i) pass = pass && errs[i] <= 1.1 * errs[i - 1];
  return {pass, fmt("errors at 45/90/180/360 angles: %.5f %.5f %.5f %.5f (each <= 1.1 x previous)",
                    errs[0], errs[1], errs[2], errs[3])};
}

// 8. Byte-identical CLI reruns and bit-exact grid round trips.
Outcome determinism(const fs::path& dir) {
  const std::vector<std::string> commands = {
      "phantom --gallery shepp_logan --n 128 --out {} --pgm {}.pgm",
      "sinogram --gallery modified_shepp_logan --n 128 --angles 180 --method analytic --out {}",
      "sinogram --gallery rectangles --n 128 --angles 180 --method discrete --out {}",
      "compare --gallery squares --n 96 --angles 90 --out-csv {}",
  };
  bool reruns = true;
  for (std::size_t c = 0; c < commands.size(); ++c) {
    std::string outputs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const std::string target = (dir / fmt("run%zu_%d", c, rep)).string();
      std::string cmd = commands[c];
      for (std::size_t pos; (pos = cmd.find("{}")) != std::string::npos;) cmd.replace(pos, 2, target);
      reruns = reruns && run_cli(cmd) == 0;
      outputs[rep] = slurp(target);
      if (fs::exists(target + ".pgm")) outputs[rep] += slurp(target + ".pgm");
    }
    reruns = reruns && !outputs[0].empty() && outputs[0] == outputs[1];
  }
  {
    const Phantom p = gallery("shepp_logan");
    const auto g = SinogramGrid::uniform(64, 30);
    const Sinogram s = analytic_sinogram(p, g);
    const std::string path = (dir / "sino.fgrid").string();
    write_grid(path, to_grid(s));
    reruns = reruns && sinogram_from_grid(read_grid(path)).values == s.values;
  }

  const double sub = std::numeric_limits<double>::denorm_min();
  const std::vector<double> specials = {0.0,  -0.0, 1.0,  kPi,        1e-300,
                                        sub,  -sub, 3 * sub, std::numeric_limits<double>::max()};
  FloatGrid g{3, 3, GridKind::Image, {}, {}, specials};
  const std::string path = (dir / "specials.fgrid").string();
  write_grid(path, g);
  const FloatGrid back = read_grid(path);
  bool exact = back.values.size() == specials.size();
  for (std::size_t i = 0; exact && i < specials.size(); ++i) {
    exact = std::bit_cast<std::uint64_t>(back.values[i]) == std::bit_cast<std::uint64_t>(specials[i]);
  }
  return {reruns && exact, fmt("CLI reruns %s; -0.0/subnormal round trip %s",
                                reruns ? "byte-identical" : "DIFFER", exact ? "bit-exact" : "NOT exact")};
}

}  // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / "radonkit_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  double table_seconds = 0;
  int table_code = -1;
  std::map<std::string, Row> rows;
  auto table = [&] {
    if (rows.empty()) rows = cli_table(dir, table_seconds, table_code);
    return rows;
  };

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"exact symmetries", symmetries},
      {"mass conservation", mass_conservation},
      {"FBP sanity", fbp_sanity},
      {"comparison table",
       [&] {
         const auto t = table();
         return table_reproduction(t, table_seconds, table_code);
       }},
      {"ellipse ordering", [&] { return ordering(table()); }},
      {"angle convergence", convergence},
      {"determinism and round trips", [&] { return determinism(dir); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, "threw"};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %zu %s: %s -- %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  fs::remove_all(dir);
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
