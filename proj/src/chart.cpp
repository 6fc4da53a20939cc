#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "attackecon/cli.hpp"

namespace attackecon::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 190.0;  // legend column
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;
constexpr std::size_t kMaxCurves = 5;

constexpr const char* kPalette[kMaxCurves] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Frame {
  double t_lo, t_hi, y_lo, y_hi;

  double x(double t) const {
    const double span = t_hi > t_lo ? t_hi - t_lo : 1.0;
    return kLeft + (t - t_lo) / span * (kWidth - kLeft - kRight);
  }
  double y(double v) const {
    const double span = y_hi > y_lo ? y_hi - y_lo : 1.0;
    return kHeight - kBottom - (v - y_lo) / span * (kHeight - kTop - kBottom);
  }
};

std::vector<std::size_t> pick_rows(std::size_t rows) {
  const std::size_t count = std::min(rows, kMaxCurves);
  std::vector<std::size_t> picked;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t row = count == 1 ? 0 : (k * (rows - 1) + (count - 1) / 2) / (count - 1);
    if (picked.empty() || picked.back() != row) picked.push_back(row);
  }
  return picked;
}

}  // namespace

std::string render_payoff_chart(const SweepGrid& grid) {
  const SweepSpec& spec = grid.spec;
  const std::vector<std::size_t> rows = pick_rows(spec.alpha_steps);

  Frame f{spec.t_min, spec.t_max, 0.0, 0.0};
  for (std::size_t i : rows)
    for (std::size_t j = 0; j < spec.t_steps; ++j) {
      const RegionCell& c = grid.at(i, j);
      f.y_lo = std::min({f.y_lo, c.pi1, c.pi2});
      f.y_hi = std::max({f.y_hi, c.pi1, c.pi2});
    }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
         "viewBox=\"0 0 800 600\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n"
      << "  <text x=\"" << num(kLeft) << "\" y=\"24\" font-family=\"sans-serif\" "
         "font-size=\"16\">Phase-one and two-phase payoff vs t</text>\n";

  // Axes, zero line and end-point tick labels.
  const double x0 = f.x(f.t_lo), x1 = f.x(f.t_hi);
  const double yb = f.y(f.y_lo), yt = f.y(f.y_hi);
  svg << "  <line x1=\"" << num(x0) << "\" y1=\"" << num(yb) << "\" x2=\"" << num(x1)
      << "\" y2=\"" << num(yb) << "\" stroke=\"black\"/>\n"
      << "  <line x1=\"" << num(x0) << "\" y1=\"" << num(yb) << "\" x2=\"" << num(x0)
      << "\" y2=\"" << num(yt) << "\" stroke=\"black\"/>\n"
      << "  <line x1=\"" << num(x0) << "\" y1=\"" << num(f.y(0.0)) << "\" x2=\"" << num(x1)
      << "\" y2=\"" << num(f.y(0.0)) << "\" stroke=\"#999999\" stroke-dasharray=\"2,3\"/>\n";
  const auto label = [&](double x, double y, const std::string& text, const char* anchor) {
    svg << "  <text x=\"" << num(x) << "\" y=\"" << num(y)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"" << anchor << "\">"
        << text << "</text>\n";
  };
  label(x0, yb + 18, num(f.t_lo), "middle");
  label(x1, yb + 18, num(f.t_hi), "middle");
  label((x0 + x1) / 2, yb + 40, "t", "middle");
  label(x0 - 6, yb + 4, num(f.y_lo), "end");
  label(x0 - 6, yt + 4, num(f.y_hi), "end");
  label(x0 - 6, f.y(0.0) + 4, "0", "end");
  label(x0 - 50, (yb + yt) / 2, "payoff", "middle");

  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::size_t i = rows[k];
    const char* color = kPalette[k];
    const double pi1 = grid.at(i, 0).pi1;

    svg << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t j = 0; j < spec.t_steps; ++j) {
      const RegionCell& c = grid.at(i, j);
      svg << (j ? " " : "") << num(f.x(c.t)) << ',' << num(f.y(c.pi2));
    }
    svg << "\"/>\n";
    svg << "  <polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1\" stroke-dasharray=\"6,4\" points=\"" << num(x0) << ','
        << num(f.y(pi1)) << ' ' << num(x1) << ',' << num(f.y(pi1)) << "\"/>\n";

    const double ly = kTop + 20.0 + 36.0 * static_cast<double>(k);
    const double lx = kWidth - kRight + 20.0;
    svg << "  <line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 24)
        << "\" y2=\"" << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    label(lx + 30, ly + 4, "Pi2, alpha=" + num(grid.at(i, 0).alpha), "start");
    svg << "  <line x1=\"" << num(lx) << "\" y1=\"" << num(ly + 16) << "\" x2=\""
        << num(lx + 24) << "\" y2=\"" << num(ly + 16) << "\" stroke=\"" << color
        << "\" stroke-dasharray=\"6,4\"/>\n";
    label(lx + 30, ly + 20, "Pi1, alpha=" + num(grid.at(i, 0).alpha), "start");
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace attackecon::cli
