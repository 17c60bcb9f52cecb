#pragma once

#include <string>
#include <vector>

#include "sparseph/filtration.hpp"

namespace sparseph {

struct SeriesStyle {
  std::string stroke = "#1f77b4";
  /// SVG stroke-dasharray; empty for a solid line.
  std::string dash;
  double width = 1.5;
  double opacity = 1.0;
};

/// Minimal SVG step plot of Betti curves: axes with ticks, one polyline per
/// curve, and a legend for labelled series. Output depends only on the
/// added curves, so identical inputs give identical bytes.
class StepPlot {
 public:
  StepPlot(std::string title, std::string x_label = "filtration value (lambda)",
           std::string y_label = "beta0");

  /// An empty label keeps the series out of the legend.
  void add(const BettiCurve& curve, SeriesStyle style, std::string label = {});

  std::string render(int width = 640, int height = 420) const;

 private:
  struct Series {
    BettiCurve curve;
    SeriesStyle style;
    std::string label;
  };

  std::string title_;
  std::string x_label_;
  std::string y_label_;
  std::vector<Series> series_;
};

}  // namespace sparseph
