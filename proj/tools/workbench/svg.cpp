#include "workbench/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace rspec::workbench::svg {

namespace {

constexpr double kWidth = 720, kHeight = 360;
constexpr double kLeft = 60, kRight = 20, kTop = 36, kBottom = 40;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

constexpr std::array<const char*, 4> kColours{"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string header(const std::string& title, double width = kWidth, double height = kHeight) {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"{2}\" y=\"22\" font-family=\"sans-serif\" font-size=\"14\">{3}</text>\n",
      width, height, kLeft, escape(title));
}

std::string axes(double x0, double x1, double y0, double y1) {
  std::string s = fmt::format(
      "<g stroke=\"black\" stroke-width=\"1\">"
      "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\"/>"
      "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{3}\"/></g>\n",
      kLeft, kTop + kPlotH, kLeft + kPlotW, kTop);
  s += fmt::format(
      "<g font-family=\"sans-serif\" font-size=\"11\">"
      "<text x=\"{0}\" y=\"{1}\">{4:.6g}</text>"
      "<text x=\"{2}\" y=\"{1}\" text-anchor=\"end\">{5:.6g}</text>"
      "<text x=\"{6}\" y=\"{7}\" text-anchor=\"end\">{8:.6g}</text>"
      "<text x=\"{6}\" y=\"{3}\" text-anchor=\"end\">{9:.6g}</text></g>\n",
      kLeft, kTop + kPlotH + 16, kLeft + kPlotW, kTop + 10, x0, x1, kLeft - 6, kTop + kPlotH, y0,
      y1);
  return s;
}

}  // namespace

std::string bar_chart(const std::string& title, const std::vector<std::uint64_t>& counts) {
  std::string s = header(title);
  const std::uint64_t top = counts.empty() ? 1 : std::max<std::uint64_t>(
                                                     1, *std::max_element(counts.begin(), counts.end()));
  s += axes(0.0, 1.0, 0.0, static_cast<double>(top));
  const double w = counts.empty() ? 0.0 : kPlotW / static_cast<double>(counts.size());
  s += "<g fill=\"#1f77b4\">\n";
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double h = kPlotH * static_cast<double>(counts[k]) / static_cast<double>(top);
    s += fmt::format("<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\"/>\n",
                     kLeft + k * w, kTop + kPlotH - h, std::max(w - 0.5, 0.5), h);
  }
  s += "</g>\n</svg>\n";
  return s;
}

std::string line_chart(const std::string& title, const std::vector<Series>& series) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& ser : series) {
    for (double v : ser.x) x0 = std::min(x0, v), x1 = std::max(x1, v);
    for (double v : ser.y) y0 = std::min(y0, v), y1 = std::max(y1, v);
  }
  if (!(x1 > x0)) {
    x0 = std::isfinite(x0) ? x0 - 1 : 0;
    x1 = x0 + 2;
  }
  if (!(y1 > y0)) {
    y0 = std::isfinite(y0) ? y0 - 1 : 0;
    y1 = y0 + 2;
  }

  std::string s = header(title);
  s += axes(x0, x1, y0, y1);
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& ser = series[i];
    const char* colour = kColours[i % kColours.size()];
    s += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.2\" points=\"", colour);
    for (std::size_t k = 0; k < ser.x.size() && k < ser.y.size(); ++k) {
      const double px = kLeft + kPlotW * (ser.x[k] - x0) / (x1 - x0);
      const double py = kTop + kPlotH * (1.0 - (ser.y[k] - y0) / (y1 - y0));
      s += fmt::format("{}{:.2f},{:.2f}", k ? " " : "", px, py);
    }
    s += "\"/>\n";
    s += fmt::format(
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" fill=\"{}\">{}</text>\n",
        kLeft + kPlotW - 140, kTop + 14 + 14 * i, colour, escape(ser.label));
  }
  s += "</svg>\n";
  return s;
}

std::string heat_map(const std::string& title, const std::vector<std::uint64_t>& cells,
                     std::size_t bins) {
  const double side = std::min(kPlotW, kPlotH);
  std::string s = header(title, kLeft + side + kRight, kTop + side + kBottom);
  const std::uint64_t top =
      cells.empty() ? 1 : std::max<std::uint64_t>(1, *std::max_element(cells.begin(), cells.end()));
  const double cell = bins ? side / static_cast<double>(bins) : 0.0;
  for (std::size_t x = 0; x < bins; ++x) {
    for (std::size_t y = 0; y < bins; ++y) {
      const std::uint64_t c = cells[x * bins + y];
      if (c == 0) continue;
      const int shade = 255 - static_cast<int>(255.0 * static_cast<double>(c) / top);
      s += fmt::format(
          "<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" "
          "fill=\"rgb({},{},255)\"/>\n",
          kLeft + x * cell, kTop + side - (y + 1) * cell, cell, cell, shade, shade);
    }
  }
  s += fmt::format(
      "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
      kLeft, kTop, side, side);
  s += "</svg>\n";
  return s;
}

}  // namespace rspec::workbench::svg
