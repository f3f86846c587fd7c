#include "mops/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace mops {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string param_label(PerturbationKind kind, int r, const Rational& v) {
  return std::string(kind == PerturbationKind::translation ? "mu" : "lambda") + "_" + std::to_string(r) + "=" +
         v.pretty();
}

}  // namespace

PlotData sample_plot(const PlotConfig& cfg) {
  if (!(cfg.x_lo < cfg.x_hi)) throw Error(ErrorKind::InvalidArgument, "empty sampling range");
  if (cfg.samples < 2) throw Error(ErrorKind::InvalidArgument, "need at least two samples");
  if (cfg.n < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  if (cfg.kind && cfg.params.empty()) throw Error(ErrorKind::InvalidArgument, "parameter list is empty");

  PlotData d;
  const auto base = generate(chebyshev_spec(ChebyshevKind::second), cfg.n)[static_cast<size_t>(cfg.n)];
  std::vector<Polynomial> polys{base};
  d.columns = {"x", "P_" + std::to_string(cfg.n)};
  d.regime = {0};
  if (cfg.kind) {
    for (const auto& v : cfg.params) {
      const PerturbationSpec pert{*cfg.kind, cfg.r, v};
      polys.push_back(generate(perturbed_spec(pert), cfg.n)[static_cast<size_t>(cfg.n)]);
      d.columns.push_back(param_label(*cfg.kind, cfg.r, v));
      const int s = *cfg.kind == PerturbationKind::translation ? v.sign() : (v - Rational(1)).sign();
      d.regime.push_back(s < 0 ? -1 : 1);
    }
  }
  d.curves.resize(polys.size());
  for (int i = 0; i < cfg.samples; ++i) {
    const double x = cfg.x_lo + (cfg.x_hi - cfg.x_lo) * i / (cfg.samples - 1);
    d.x.push_back(x);
    for (size_t c = 0; c < polys.size(); ++c) d.curves[c].push_back(polys[c].evaluate_double(x));
  }
  if (cfg.n >= 1) {
    for (const auto& z : closed_form_zeros(ChebyshevKind::second, cfg.n)) d.base_zeros.push_back(z.approx());
  }
  return d;
}

std::string plot_csv(const PlotData& data) {
  std::ostringstream os;
  for (size_t c = 0; c < data.columns.size(); ++c) os << (c ? "," : "") << data.columns[c];
  os << '\n';
  for (size_t i = 0; i < data.x.size(); ++i) {
    os << format_double(data.x[i]);
    for (const auto& curve : data.curves) os << ',' << format_double(curve[i]);
    os << '\n';
  }
  return os.str();
}

std::string plot_svg(const PlotData& data, const PlotConfig& cfg) {
  constexpr double W = 800, H = 500, L = 60, R = 20, T = 20, B = 40;
  double y_max = 0;
  for (double v : data.curves.front()) y_max = std::max(y_max, std::fabs(v));
  y_max = std::max(1.0, 2.0 * y_max);
  const auto sx = [&](double x) { return L + (x - cfg.x_lo) / (cfg.x_hi - cfg.x_lo) * (W - L - R); };
  const auto sy = [&](double y) { return T + (y_max - y) / (2 * y_max) * (H - T - B); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n";
  os << "<style>.base{stroke:#1f4fbf;fill:none;stroke-width:2}.neg{stroke:#000;fill:none;stroke-width:1}"
        ".pos{stroke:#c8102e;fill:none;stroke-width:1}.axis{stroke:#888;stroke-width:1}"
        ".zero{fill:#1f4fbf}text{font:12px sans-serif}</style>\n";
  os << "<rect width=\"800\" height=\"500\" fill=\"#fff\"/>\n";
  os << "<line class=\"axis\" x1=\"" << fixed3(L) << "\" y1=\"" << fixed3(sy(0)) << "\" x2=\"" << fixed3(W - R)
     << "\" y2=\"" << fixed3(sy(0)) << "\"/>\n";
  if (cfg.x_lo <= 0 && 0 <= cfg.x_hi) {
    os << "<line class=\"axis\" x1=\"" << fixed3(sx(0)) << "\" y1=\"" << fixed3(T) << "\" x2=\"" << fixed3(sx(0))
       << "\" y2=\"" << fixed3(H - B) << "\"/>\n";
  }
  for (double t : {-1.0, 1.0}) {
    if (t < cfg.x_lo || t > cfg.x_hi) continue;
    os << "<line class=\"axis\" stroke-dasharray=\"4 4\" x1=\"" << fixed3(sx(t)) << "\" y1=\"" << fixed3(T)
       << "\" x2=\"" << fixed3(sx(t)) << "\" y2=\"" << fixed3(H - B) << "\"/>\n";
  }
  os << "<text x=\"" << fixed3(L) << "\" y=\"" << fixed3(H - 12) << "\">x in [" << fixed3(cfg.x_lo) << ", "
     << fixed3(cfg.x_hi) << "], y in [" << fixed3(-y_max) << ", " << fixed3(y_max) << "]</text>\n";

  // Curves in draw order: perturbed first, unperturbed on top.
  for (size_t k = data.curves.size(); k-- > 0;) {
    const char* cls = data.regime[k] == 0 ? "base" : (data.regime[k] < 0 ? "neg" : "pos");
    std::string pts;
    auto flush = [&] {
      if (pts.find(' ') != std::string::npos) {
        os << "<polyline class=\"" << cls << "\" points=\"" << pts << "\"/>\n";
      }
      pts.clear();
    };
    for (size_t i = 0; i < data.x.size(); ++i) {
      const double y = data.curves[k][i];
      if (!std::isfinite(y) || std::fabs(y) > y_max) {
        flush();
        continue;
      }
      if (!pts.empty()) pts += ' ';
      pts += fixed3(sx(data.x[i])) + "," + fixed3(sy(y));
    }
    flush();
  }
  for (double z : data.base_zeros) {
    os << "<circle class=\"zero\" cx=\"" << fixed3(sx(z)) << "\" cy=\"" << fixed3(sy(0)) << "\" r=\"3\"/>\n";
  }
  os << "<text x=\"" << fixed3(W - 250) << "\" y=\"" << fixed3(T + 14) << "\" fill=\"#1f4fbf\">"
     << data.columns[1] << " (unperturbed)</text>\n";
  os << "<text x=\"" << fixed3(W - 250) << "\" y=\"" << fixed3(T + 30) << "\" fill=\"#000\">negative regime</text>\n";
  os << "<text x=\"" << fixed3(W - 250) << "\" y=\"" << fixed3(T + 46) << "\" fill=\"#c8102e\">positive regime</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::vector<Rational> parse_param_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw Error(ErrorKind::Parse, "empty entry in parameter list '" + text + "'");
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(Rational::parse(item));
      continue;
    }
    const Rational a = Rational::parse(item.substr(0, dots));
    const Rational b = Rational::parse(item.substr(dots + 2));
    if (b < a) throw Error(ErrorKind::Parse, "descending range '" + item + "'");
    for (Rational v = a; v <= b; v += Rational(1)) out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "empty parameter list");
  return out;
}

}  // namespace mops
