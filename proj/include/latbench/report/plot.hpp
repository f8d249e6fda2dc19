#pragma once

#include <span>
#include <string>
#include <vector>

#include "latbench/error.hpp"

namespace latbench::report {

/// Nothing to draw.
class EmptyPlotError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Linear interpolation between order statistics (h = (n-1)p); p in [0, 1].
double percentile(std::span<const double> sorted, double p);

/// Quartiles with whiskers at the most extreme samples inside 1.5 IQR.
struct BoxStats {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double whisker_lo = 0.0;
  double whisker_hi = 0.0;
  std::vector<double> outliers;
};
BoxStats box_stats(std::span<const double> values);

struct Series {
  std::string label;
  std::vector<double> values;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct ScatterSeries {
  std::string label;
  std::vector<Point2> points;
};

/// Every function returns a complete SVG document; `comment` is inserted
/// verbatim after the root element (e.g. Provenance::svg_comment()). Output
/// depends only on the arguments. Empty input throws EmptyPlotError.

/// One box per series.
std::string box_plot_svg(const std::vector<Series>& series, const std::string& title, const std::string& y_label,
                         const std::string& comment = {});

/// One closed polygon per series over len(axes) spokes; values are divided by
/// the matching axis limit and clipped at 1.5.
std::string spider_svg(const std::vector<std::string>& axes, const std::vector<double>& limits,
                       const std::vector<Series>& series, const std::string& title, const std::string& comment = {});

/// Labelled scatter panels placed side by side.
struct ScatterPanel {
  std::string x_label;
  std::string y_label;
  std::vector<ScatterSeries> series;
};
std::string scatter_svg(const std::vector<ScatterPanel>& panels, const std::string& title,
                        const std::string& comment = {});

/// (IAE, M_eps, M_zeta) points drawn as the three pairwise projections.
std::string pareto_projections_svg(const std::vector<std::vector<double>>& objectives, const std::string& title,
                                   const std::string& comment = {});

}  // namespace latbench::report
