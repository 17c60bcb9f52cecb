#include "sparseph/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sparseph {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Tick spacing of 1, 2 or 5 times a power of ten giving about `target` ticks.
double nice_step(double span, int target) {
  if (!(span > 0.0)) return 1.0;
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / mag;
  return (f < 1.5 ? 1.0 : f < 3.5 ? 2.0 : f < 7.5 ? 5.0 : 10.0) * mag;
}

}  // namespace

StepPlot::StepPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)) {}

void StepPlot::add(const BettiCurve& curve, SeriesStyle style, std::string label) {
  series_.push_back({curve, std::move(style), std::move(label)});
}

std::string StepPlot::render(int width, int height) const {
  const double left = 60, right = 20, top = 36, bottom = 48;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double x_max = 0.0;
  std::size_t y_max = 1;
  for (const auto& s : series_) {
    x_max = std::max(x_max, s.curve.domain_max);
    for (const auto& b : s.curve.breakpoints) y_max = std::max(y_max, b.beta0);
  }
  if (!(x_max > 0.0)) x_max = 1.0;
  const double y_step = nice_step(static_cast<double>(y_max), 5);
  const double y_top = std::ceil(static_cast<double>(y_max) / y_step) * y_step;

  auto sx = [&](double x) { return left + plot_w * x / x_max; };
  auto sy = [&](double y) { return top + plot_h * (1.0 - y / y_top); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
    << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
    << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << num(width / 2.0) << "\" y=\"20\" text-anchor=\"middle\" "
    << "font-size=\"14\">" << escape(title_) << "</text>\n";

  // Axes and ticks.
  o << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
    << "<line x1=\"" << num(left) << "\" y1=\"" << num(top + plot_h) << "\" x2=\""
    << num(left + plot_w) << "\" y2=\"" << num(top + plot_h) << "\"/>\n"
    << "<line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\""
    << num(left) << "\" y2=\"" << num(top + plot_h) << "\"/>\n</g>\n";
  const double x_step = nice_step(x_max, 5);
  o << "<g text-anchor=\"middle\">\n";
  for (int i = 0; i * x_step <= x_max * (1 + 1e-9); ++i) {
    const double x = sx(i * x_step);
    o << "<line x1=\"" << num(x) << "\" y1=\"" << num(top + plot_h) << "\" x2=\""
      << num(x) << "\" y2=\"" << num(top + plot_h + 4) << "\" stroke=\"black\"/>"
      << "<text x=\"" << num(x) << "\" y=\"" << num(top + plot_h + 16) << "\">"
      << tick_label(i * x_step) << "</text>\n";
  }
  o << "</g>\n<g text-anchor=\"end\">\n";
  for (int i = 0; i * y_step <= y_top * (1 + 1e-9); ++i) {
    const double y = sy(i * y_step);
    o << "<line x1=\"" << num(left - 4) << "\" y1=\"" << num(y) << "\" x2=\""
      << num(left) << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>"
      << "<text x=\"" << num(left - 6) << "\" y=\"" << num(y + 4) << "\">"
      << tick_label(i * y_step) << "</text>\n";
  }
  o << "</g>\n";
  o << "<text x=\"" << num(left + plot_w / 2) << "\" y=\"" << num(height - 10.0)
    << "\" text-anchor=\"middle\">" << escape(x_label_) << "</text>\n";
  o << "<text transform=\"translate(16," << num(top + plot_h / 2)
    << ") rotate(-90)\" text-anchor=\"middle\">" << escape(y_label_) << "</text>\n";

  for (const auto& s : series_) {
    const auto& bp = s.curve.breakpoints;
    if (bp.empty()) continue;
    o << "<polyline fill=\"none\" stroke=\"" << s.style.stroke
      << "\" stroke-width=\"" << num(s.style.width) << '"';
    if (!s.style.dash.empty()) o << " stroke-dasharray=\"" << s.style.dash << '"';
    if (s.style.opacity < 1.0) o << " stroke-opacity=\"" << num(s.style.opacity) << '"';
    o << " points=\"";
    for (std::size_t r = 0; r < bp.size(); ++r) {
      const double y = sy(static_cast<double>(bp[r].beta0));
      const double x_end =
          r + 1 < bp.size() ? bp[r + 1].lambda : s.curve.domain_max;
      o << num(sx(bp[r].lambda)) << ',' << num(y) << ' ' << num(sx(x_end)) << ','
        << num(y) << (r + 1 < bp.size() ? " " : "");
    }
    o << "\"/>\n";
  }

  // Legend, one entry per distinct label in insertion order.
  std::vector<const Series*> legend;
  for (const auto& s : series_) {
    if (s.label.empty()) continue;
    if (std::none_of(legend.begin(), legend.end(),
                     [&](const Series* l) { return l->label == s.label; })) {
      legend.push_back(&s);
    }
  }
  for (std::size_t i = 0; i < legend.size(); ++i) {
    const double y = top + 12 + 16.0 * static_cast<double>(i);
    const double x = left + plot_w - 130;
    o << "<line x1=\"" << num(x) << "\" y1=\"" << num(y) << "\" x2=\""
      << num(x + 24) << "\" y2=\"" << num(y) << "\" stroke=\""
      << legend[i]->style.stroke << "\" stroke-width=\""
      << num(legend[i]->style.width) << '"';
    if (!legend[i]->style.dash.empty()) {
      o << " stroke-dasharray=\"" << legend[i]->style.dash << '"';
    }
    o << "/><text x=\"" << num(x + 30) << "\" y=\"" << num(y + 4) << "\">"
      << escape(legend[i]->label) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace sparseph
