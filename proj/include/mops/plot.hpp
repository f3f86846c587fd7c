#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mops/numerics.hpp"
#include "mops/recurrence.hpp"

namespace mops {

struct PlotConfig {
  std::optional<PerturbationKind> kind;  // nullopt: only the unperturbed curve
  int r = 0;
  std::vector<Rational> params;
  int n = 0;
  double x_lo = -1.2;
  double x_hi = 1.2;
  int samples = 601;
};

struct PlotData {
  std::vector<std::string> columns;  // "x", "P_n", then one per parameter
  std::vector<double> x;
  std::vector<std::vector<double>> curves;  // curves[0] is the unperturbed one
  std::vector<int> regime;                  // 0 base, -1 negative regime, +1 positive regime
  std::vector<double> base_zeros;
};

/// Throws InvalidArgument on an empty range, fewer than two samples, or bad parameters.
PlotData sample_plot(const PlotConfig& cfg);
std::string format_double(double v);
std::string plot_csv(const PlotData& data);
/// 800x500 SVG with axes, polylines and zero markers; byte-identical for identical input.
std::string plot_svg(const PlotData& data, const PlotConfig& cfg);

/// "-5..-1,1..5,1/2" -> [-5,-4,-3,-2,-1,1,...,5,1/2]; ranges step by 1.
std::vector<Rational> parse_param_list(const std::string& text);

}  // namespace mops
