#include "collatz_zeros/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "collatz_zeros/errors.hpp"
#include "collatz_zeros/serialize.hpp"

namespace collatz {

void PlotSpec::validate() const {
  if (low < 2) throw DomainError("plot: range must start at N >= 2");
  if (high < low) throw DomainError("plot: range end is below range start");
  if (width_px <= 0 || height_px <= 0) throw DomainError("plot: width and height must be positive");
  if (!(point_radius_px > 0)) throw DomainError("plot: point radius must be positive");
  for (double r : overlay_circles) {
    if (!(r > 0)) throw DomainError("plot: overlay circle radii must be positive");
  }
}

namespace {

// Pixel coordinates carry three decimals; anything finer is invisible.
std::string px(double v) { return format_shortest(std::round(v * 1000.0) / 1000.0); }

std::string modulus_color(double modulus) {
  // Blue inside the unit disk shading to red at |z| = 2.
  const double t = std::clamp(modulus / 2.0, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(30 + t * (200 - 30)));
  const int g = static_cast<int>(std::lround(80 + t * (40 - 80)));
  const int b = static_cast<int>(std::lround(200 + t * (40 - 200)));
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

std::string render_svg(const PlotSpec& spec, const std::vector<std::complex<double>>& roots) {
  spec.validate();
  const double w = spec.width_px;
  const double h = spec.height_px;
  const double sx = w / (2 * kPlotExtent);
  const double sy = h / (2 * kPlotExtent);
  const auto to_x = [&](double re) { return (re + kPlotExtent) * sx; };
  const auto to_y = [&](double im) { return (kPlotExtent - im) * sy; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width_px << "\" height=\""
     << spec.height_px << "\" viewBox=\"0 0 " << spec.width_px << ' ' << spec.height_px << "\">\n"
     << "<title>Zeros of P_N for " << spec.low << " &lt;= N &lt;= " << spec.high << "</title>\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<g stroke=\"#bbbbbb\" stroke-width=\"0.5\">\n"
     << "<line x1=\"0\" y1=\"" << px(to_y(0)) << "\" x2=\"" << spec.width_px << "\" y2=\""
     << px(to_y(0)) << "\"/>\n"
     << "<line x1=\"" << px(to_x(0)) << "\" y1=\"0\" x2=\"" << px(to_x(0)) << "\" y2=\""
     << spec.height_px << "\"/>\n"
     << "</g>\n";

  os << "<g fill=\"none\" stroke=\"#444444\" stroke-width=\"0.8\" class=\"overlay\">\n";
  for (double r : spec.overlay_circles) {
    os << "<ellipse cx=\"" << px(to_x(0)) << "\" cy=\"" << px(to_y(0)) << "\" rx=\"" << px(r * sx)
       << "\" ry=\"" << px(r * sy) << "\"/>\n";
  }
  os << "</g>\n";

  const std::string radius = px(spec.point_radius_px);
  if (spec.color_rule == ColorRule::uniform) {
    os << "<g fill=\"#1f3f8f\" class=\"zeros\">\n";
    for (const auto& z : roots) {
      os << "<circle cx=\"" << px(to_x(z.real())) << "\" cy=\"" << px(to_y(z.imag()))
         << "\" r=\"" << radius << "\"/>\n";
    }
  } else {
    os << "<g class=\"zeros\">\n";
    for (const auto& z : roots) {
      os << "<circle cx=\"" << px(to_x(z.real())) << "\" cy=\"" << px(to_y(z.imag()))
         << "\" r=\"" << radius << "\" fill=\"" << modulus_color(std::abs(z)) << "\"/>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace collatz
