#include "nodal_theta_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace nodal_theta::cli {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

// Blue -> white -> red.
std::string colour(double v) {
  v = std::clamp(v, 0.0, 1.0);
  int r, g, b;
  if (v < 0.5) {
    const double k = v / 0.5;
    r = static_cast<int>(40 + 215 * k);
    g = static_cast<int>(70 + 185 * k);
    b = 255;
  } else {
    const double k = (v - 0.5) / 0.5;
    r = 255;
    g = static_cast<int>(255 - 185 * k);
    b = static_cast<int>(255 - 215 * k);
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

std::string heatmap_svg(const NodalCurveSpec& spec,
                        const std::vector<std::vector<double>>& values,
                        const std::vector<Marker>& markers, const std::string& title) {
  const double size = 480.0;
  const double margin = 40.0;
  const Complex tau = spec.tau().value();
  // Page coordinates of z = q0 + s + t tau; y grows downward.
  const double width = 1.0 + std::abs(tau.real());
  const double height = tau.imag();
  const double scale = size / std::max(width, height);
  const double x_off = margin + (tau.real() < 0 ? -tau.real() * scale : 0.0);
  const auto page = [&](double s, double t) {
    const Complex d = s + t * tau;
    return std::pair{x_off + d.real() * scale, margin + (height - d.imag()) * scale};
  };

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& row : values) {
    for (double v : row) {
      if (std::isfinite(v)) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
  }
  if (!(hi > lo)) hi = lo + 1.0;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(width * scale + 2 * margin) + "\" height=\"" +
         num(height * scale + 2 * margin) + "\">\n";
  out += "<title>" + title + "</title>\n";
  const std::size_t nt = values.size();
  for (std::size_t j = 0; j < nt; ++j) {
    const std::size_t ns = values[j].size();
    for (std::size_t i = 0; i < ns; ++i) {
      const double s0 = static_cast<double>(i) / ns, s1 = static_cast<double>(i + 1) / ns;
      const double t0 = static_cast<double>(j) / nt, t1 = static_cast<double>(j + 1) / nt;
      const auto a = page(s0, t0), b = page(s1, t0), c = page(s1, t1), d = page(s0, t1);
      const double v = values[j][i];
      const std::string fill = std::isfinite(v) ? colour((v - lo) / (hi - lo)) : "#000000";
      out += "<polygon points=\"" + num(a.first) + "," + num(a.second) + " " +
             num(b.first) + "," + num(b.second) + " " + num(c.first) + "," +
             num(c.second) + " " + num(d.first) + "," + num(d.second) +
             "\" fill=\"" + fill + "\" stroke=\"none\"/>\n";
    }
  }
  {
    const auto a = page(0, 0), b = page(1, 0), c = page(1, 1), d = page(0, 1);
    out += "<polygon points=\"" + num(a.first) + "," + num(a.second) + " " +
           num(b.first) + "," + num(b.second) + " " + num(c.first) + "," +
           num(c.second) + " " + num(d.first) + "," + num(d.second) +
           "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  }
  for (const auto& m : markers) {
    const ParallelogramCoords st = spec.coords(m.z);
    const auto p = page(st.s, st.t);
    if (m.kind == "zero") {
      out += "<circle class=\"zero\" cx=\"" + num(p.first) + "\" cy=\"" + num(p.second) +
             "\" r=\"5\" fill=\"#000000\" stroke=\"#ffffff\" stroke-width=\"1.5\"/>\n";
    } else {
      out += "<rect class=\"" + m.kind + "\" x=\"" + num(p.first - 4) + "\" y=\"" +
             num(p.second - 4) + "\" width=\"8\" height=\"8\" fill=\"" +
             (m.kind == "p1" ? "#1a9850" : "#984ea3") +
             "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
      out += "<text x=\"" + num(p.first + 7) + "\" y=\"" + num(p.second - 7) +
             "\" font-family=\"sans-serif\" font-size=\"12\">" + m.kind + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace nodal_theta::cli
