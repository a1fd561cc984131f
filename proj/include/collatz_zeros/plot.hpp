#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "collatz_zeros/bigint.hpp"

namespace collatz {

enum class ColorRule { uniform, by_modulus };

struct PlotSpec {
  std::uint64_t low = 2;
  std::uint64_t high = 2;
  int width_px = 800;
  int height_px = 800;
  double point_radius_px = 0.6;
  std::vector<double> overlay_circles{2.0};
  ColorRule color_rule = ColorRule::uniform;
  std::string output_path = "zeros.svg";

  /// Throws DomainError when low < 2, high < low or a size is not positive.
  void validate() const;
};

/// Visible region of the complex plane: [-kPlotExtent, kPlotExtent]^2.
inline constexpr double kPlotExtent = 2.2;

/// Deterministic SVG scatter of the given roots with overlay circles.
std::string render_svg(const PlotSpec& spec, const std::vector<std::complex<double>>& roots);

}  // namespace collatz
