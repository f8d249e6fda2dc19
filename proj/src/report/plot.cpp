#include "latbench/report/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace latbench::report {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};

const char* color(std::size_t i) { return kPalette[i % (sizeof kPalette / sizeof kPalette[0])]; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
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

class Svg {
 public:
  Svg(double width, double height, const std::string& comment, const std::string& title) {
    o_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
       << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    if (!comment.empty()) o_ << comment << '\n';
    o_ << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height) << "\" fill=\"white\"/>\n";
    text(width / 2, 18, title, "middle", 14);
  }

  void line(double x1, double y1, double x2, double y2, const std::string& stroke, const std::string& extra = {}) {
    o_ << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y2)
       << "\" stroke=\"" << stroke << '"' << extra << "/>\n";
  }
  void rect(double x, double y, double w, double h, const std::string& cls, const std::string& fill,
            const std::string& stroke) {
    o_ << "<rect class=\"" << cls << "\" x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(w)
       << "\" height=\"" << fmt(h) << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
  }
  void circle(double x, double y, double r, const std::string& cls, const std::string& fill) {
    o_ << "<circle class=\"" << cls << "\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"" << fmt(r)
       << "\" fill=\"" << fill << "\"/>\n";
  }
  void polygon(const std::vector<Point2>& pts, const std::string& cls, const std::string& stroke,
               const std::string& fill, const std::string& label = {}) {
    o_ << "<polygon class=\"" << cls << '"';
    if (!label.empty()) o_ << " data-label=\"" << escape(label) << '"';
    o_ << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) o_ << (i ? " " : "") << fmt(pts[i].x) << ',' << fmt(pts[i].y);
    o_ << "\" fill=\"" << fill << "\" fill-opacity=\"0.15\" stroke=\"" << stroke << "\"/>\n";
  }
  void text(double x, double y, const std::string& s, const char* anchor = "start", int size = 11,
            const std::string& extra = {}) {
    o_ << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" text-anchor=\"" << anchor << "\" font-size=\"" << size
       << '"' << extra << '>' << escape(s) << "</text>\n";
  }
  std::string finish() {
    o_ << "</svg>\n";
    return o_.str();
  }

 private:
  std::ostringstream o_;
};

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

Range padded(double lo, double hi) {
  if (!(hi > lo)) {
    const double d = std::abs(lo) > 0 ? 0.1 * std::abs(lo) : 1.0;
    return {lo - d, hi + d};
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

// Linear map from data range to a pixel span; y spans run upwards.
struct Scale {
  Range r;
  double p0 = 0.0;
  double p1 = 1.0;
  double operator()(double v) const { return p0 + (v - r.lo) / (r.hi - r.lo) * (p1 - p0); }
};

void axis_ticks_y(Svg& svg, const Scale& sy, double x) {
  for (int k = 0; k <= 4; ++k) {
    const double v = sy.r.lo + (sy.r.hi - sy.r.lo) * k / 4.0;
    svg.line(x - 4, sy(v), x, sy(v), "black");
    svg.text(x - 6, sy(v) + 4, tick_label(v), "end", 10);
  }
}

void axis_ticks_x(Svg& svg, const Scale& sx, double y) {
  for (int k = 0; k <= 4; ++k) {
    const double v = sx.r.lo + (sx.r.hi - sx.r.lo) * k / 4.0;
    svg.line(sx(v), y, sx(v), y + 4, "black");
    svg.text(sx(v), y + 15, tick_label(v), "middle", 10);
  }
}

}  // namespace

double percentile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw EmptyPlotError("percentile of an empty sample");
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("percentile fraction must lie in [0, 1]");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

BoxStats box_stats(std::span<const double> values) {
  std::vector<double> v;
  for (double x : values)
    if (std::isfinite(x)) v.push_back(x);
  if (v.empty()) throw EmptyPlotError("box plot of an empty sample");
  std::sort(v.begin(), v.end());
  BoxStats b;
  b.q1 = percentile(v, 0.25);
  b.median = percentile(v, 0.5);
  b.q3 = percentile(v, 0.75);
  const double iqr = b.q3 - b.q1;
  const double lo_fence = b.q1 - 1.5 * iqr;
  const double hi_fence = b.q3 + 1.5 * iqr;
  b.whisker_lo = b.q1;
  b.whisker_hi = b.q3;
  for (double x : v) {
    if (x < lo_fence || x > hi_fence) {
      b.outliers.push_back(x);
      continue;
    }
    b.whisker_lo = std::min(b.whisker_lo, x);
    b.whisker_hi = std::max(b.whisker_hi, x);
  }
  return b;
}

std::string box_plot_svg(const std::vector<Series>& series, const std::string& title, const std::string& y_label,
                         const std::string& comment) {
  if (series.empty()) throw EmptyPlotError("box plot without series");
  std::vector<BoxStats> stats;
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const auto& s : series) {
    stats.push_back(box_stats(s.values));
    const auto& b = stats.back();
    lo = std::min(lo, b.whisker_lo);
    hi = std::max(hi, b.whisker_hi);
    for (double x : b.outliers) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  const double slot = 60.0;
  const double left = 70.0;
  const double top = 35.0;
  const double plot_h = 280.0;
  const double width = left + slot * static_cast<double>(series.size()) + 20.0;
  const double height = top + plot_h + 60.0;
  Svg svg(width, height, comment, title);
  const Scale sy{padded(lo, hi), top + plot_h, top};
  svg.line(left, top, left, top + plot_h, "black");
  svg.line(left, top + plot_h, width - 20.0, top + plot_h, "black");
  axis_ticks_y(svg, sy, left);
  svg.text(16, top + plot_h / 2, y_label, "middle", 11,
           " transform=\"rotate(-90 16 " + fmt(top + plot_h / 2) + ")\"");
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& b = stats[i];
    const double cx = left + slot * (static_cast<double>(i) + 0.5);
    const double half = 0.3 * slot;
    svg.line(cx, sy(b.whisker_lo), cx, sy(b.q1), "black", " class=\"whisker\"");
    svg.line(cx, sy(b.q3), cx, sy(b.whisker_hi), "black", " class=\"whisker\"");
    svg.line(cx - half / 2, sy(b.whisker_lo), cx + half / 2, sy(b.whisker_lo), "black");
    svg.line(cx - half / 2, sy(b.whisker_hi), cx + half / 2, sy(b.whisker_hi), "black");
    svg.rect(cx - half, sy(b.q3), 2 * half, std::max(0.0, sy(b.q1) - sy(b.q3)), "box", color(i), "black");
    svg.line(cx - half, sy(b.median), cx + half, sy(b.median), "black", " class=\"median\" stroke-width=\"2\"");
    for (double x : b.outliers) svg.circle(cx, sy(x), 2.0, "outlier", "black");
    svg.text(cx, top + plot_h + 16, series[i].label, "middle", 10);
  }
  return svg.finish();
}

std::string spider_svg(const std::vector<std::string>& axes, const std::vector<double>& limits,
                       const std::vector<Series>& series, const std::string& title, const std::string& comment) {
  if (series.empty()) throw EmptyPlotError("spider plot without series");
  if (axes.size() < 3) throw ArgumentError("spider plot needs at least three axes");
  if (limits.size() != axes.size()) throw ArgumentError("one limit per spider axis");
  for (double l : limits)
    if (!(l > 0.0) || !std::isfinite(l)) throw ArgumentError("spider limits must be finite and > 0");
  for (const auto& s : series)
    if (s.values.size() != axes.size()) throw ArgumentError("series '" + s.label + "' does not match the axes");

  const double cx = 220.0;
  const double cy = 230.0;
  const double radius = 150.0;
  const double width = 440.0 + 140.0;
  Svg svg(width, 460.0, comment, title);
  const std::size_t n = axes.size();
  auto at = [&](std::size_t k, double frac) {
    const double a = -M_PI / 2 + 2 * M_PI * static_cast<double>(k) / static_cast<double>(n);
    return Point2{cx + radius * frac * std::cos(a), cy + radius * frac * std::sin(a)};
  };
  for (double ring : {0.5, 1.0, 1.5}) {
    std::vector<Point2> pts;
    for (std::size_t k = 0; k < n; ++k) pts.push_back(at(k, ring / 1.5));
    svg.polygon(pts, "grid", ring == 1.0 ? "black" : "#bbbbbb", "none");
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Point2 end = at(k, 1.0);
    svg.line(cx, cy, end.x, end.y, "#999999");
    const Point2 lab = at(k, 1.12);
    svg.text(lab.x, lab.y, axes[k] + " (" + tick_label(limits[k]) + ")", "middle", 11);
  }
  for (std::size_t i = 0; i < series.size(); ++i) {
    std::vector<Point2> pts;
    for (std::size_t k = 0; k < n; ++k) {
      double v = series[i].values[k] / limits[k];
      v = std::isfinite(v) ? std::clamp(v, 0.0, 1.5) : 1.5;
      pts.push_back(at(k, v / 1.5));
    }
    svg.polygon(pts, "series", color(i), color(i), series[i].label);
    const double ly = 60.0 + 18.0 * static_cast<double>(i);
    svg.rect(450.0, ly - 9, 10, 10, "legend", color(i), color(i));
    svg.text(466.0, ly, series[i].label);
  }
  return svg.finish();
}

std::string scatter_svg(const std::vector<ScatterPanel>& panels, const std::string& title,
                        const std::string& comment) {
  std::size_t total = 0;
  for (const auto& p : panels)
    for (const auto& s : p.series)
      for (const auto& q : s.points)
        if (std::isfinite(q.x) && std::isfinite(q.y)) ++total;
  if (total == 0) throw EmptyPlotError("scatter plot without points");

  const double panel_w = 320.0;
  const double plot = 240.0;
  const double top = 40.0;
  std::size_t legend_rows = 0;
  for (const auto& p : panels) legend_rows = std::max(legend_rows, p.series.size());
  const double height = top + plot + 50.0 + 16.0 * static_cast<double>(legend_rows);
  Svg svg(panel_w * static_cast<double>(panels.size()), height, comment, title);
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const auto& p = panels[k];
    double xlo = INFINITY, xhi = -INFINITY, ylo = INFINITY, yhi = -INFINITY;
    for (const auto& s : p.series)
      for (const auto& q : s.points) {
        if (!std::isfinite(q.x) || !std::isfinite(q.y)) continue;
        xlo = std::min(xlo, q.x);
        xhi = std::max(xhi, q.x);
        ylo = std::min(ylo, q.y);
        yhi = std::max(yhi, q.y);
      }
    if (!std::isfinite(xlo)) xlo = xhi = ylo = yhi = 0.0;
    const double left = panel_w * static_cast<double>(k) + 60.0;
    const Scale sx{padded(xlo, xhi), left, left + plot};
    const Scale sy{padded(ylo, yhi), top + plot, top};
    svg.rect(left, top, plot, plot, "frame", "none", "black");
    axis_ticks_x(svg, sx, top + plot);
    axis_ticks_y(svg, sy, left);
    svg.text(left + plot / 2, top + plot + 32, p.x_label, "middle");
    svg.text(left - 45, top + plot / 2, p.y_label, "middle", 11,
             " transform=\"rotate(-90 " + fmt(left - 45) + ' ' + fmt(top + plot / 2) + ")\"");
    for (std::size_t i = 0; i < p.series.size(); ++i) {
      for (const auto& q : p.series[i].points)
        if (std::isfinite(q.x) && std::isfinite(q.y)) svg.circle(sx(q.x), sy(q.y), 2.5, "point", color(i));
      if (!p.series[i].label.empty()) {
        const double ly = top + plot + 50.0 + 16.0 * static_cast<double>(i);
        svg.rect(left, ly - 9, 10, 10, "legend", color(i), color(i));
        svg.text(left + 16, ly, p.series[i].label);
      }
    }
  }
  return svg.finish();
}

std::string pareto_projections_svg(const std::vector<std::vector<double>>& objectives, const std::string& title,
                                   const std::string& comment) {
  if (objectives.empty()) throw EmptyPlotError("pareto plot without archive points");
  static const char* names[3] = {"max IAE (m)", "max M_eps", "max M_zeta"};
  static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  std::vector<ScatterPanel> panels;
  for (const auto& pr : pairs) {
    ScatterPanel p{names[pr[0]], names[pr[1]], {ScatterSeries{}}};
    for (const auto& f : objectives) {
      if (f.size() != 3) throw ArgumentError("archive objectives must have three values");
      p.series[0].points.push_back({f[pr[0]], f[pr[1]]});
    }
    panels.push_back(std::move(p));
  }
  return scatter_svg(panels, title, comment);
}

}  // namespace latbench::report
