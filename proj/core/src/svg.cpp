#include "svg.hpp"

#include <array>
#include <cstdio>

namespace sigdoc::svg {
namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 60, kRight = 20, kTop = 40, kBottom = 50;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double px(double x) { return kLeft + x * kPlotW; }
double py(double y) { return kTop + (1.0 - y) * kPlotH; }

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string render_cdfs(const std::vector<Series>& series, const std::string& title) {
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
         "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">" + xml_escape(title) + "</text>\n";

  for (int i = 0; i <= 10; ++i) {
    const double t = i / 10.0;
    out += "<line x1=\"" + num(px(t)) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(px(t)) + "\" y2=\"" +
           num(py(1)) + "\" stroke=\"#e0e0e0\"/>\n";
    out += "<line x1=\"" + num(px(0)) + "\" y1=\"" + num(py(t)) + "\" x2=\"" + num(px(1)) + "\" y2=\"" +
           num(py(t)) + "\" stroke=\"#e0e0e0\"/>\n";
    if (i % 2 == 0) {
      char label[8];
      std::snprintf(label, sizeof label, "%.1f", t);
      out += "<text x=\"" + num(px(t)) + "\" y=\"" + num(py(0) + 18) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + label + "</text>\n";
      out += "<text x=\"" + num(px(0) - 8) + "\" y=\"" + num(py(t) + 4) +
             "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + label + "</text>\n";
    }
  }
  out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(kPlotW) + "\" height=\"" +
         num(kPlotH) + "\" fill=\"none\" stroke=\"black\"/>\n";
  out += "<text x=\"" + num(px(0.5)) + "\" y=\"" + num(kHeight - 12) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">meaningless score</text>\n";
  out += "<text x=\"16\" y=\"" + num(py(0.5)) + "\" transform=\"rotate(-90 16 " + num(py(0.5)) +
         ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">fraction of functions</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& [name, cdf] = series[s];
    if (cdf->points.empty()) continue;
    std::string d = "M" + num(px(0)) + " " + num(py(0));
    for (const auto& p : cdf->points) {
      d += " H" + num(px(p.score.to_double()));
      d += " V" + num(py(p.cumulative_fraction.to_double()));
    }
    d += " H" + num(px(1));
    out += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + kPalette[s % kPalette.size()] +
           "\" stroke-width=\"1.5\"><title>" + xml_escape(name) + "</title></path>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace sigdoc::svg
