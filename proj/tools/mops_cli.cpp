#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "mops/connection.hpp"
#include "mops/intersections.hpp"
#include "mops/json_io.hpp"
#include "mops/plot.hpp"
#include "mops/verify.hpp"
#include "mops/zeros.hpp"

namespace {

using namespace mops;

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct RunConfig {
  std::string format;
  std::string out;
  long bits = 60;
  double tol = 1e-13;
  std::string kind;
  std::string base;
  std::optional<int> r;
  std::string param;
  std::string params;
  std::optional<int> n;
  std::optional<int> n_max;
  std::string basis = "second_kind";
  std::string method = "closed_form";
  double x_lo = -1.2;
  double x_hi = 1.2;
  int samples = 601;
  std::string suite = "all";
  std::optional<int> r_max;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + cfg.out + "' for writing");
  f << text;
}

std::string format_or(const RunConfig& cfg, const std::string& def, std::initializer_list<const char*> allowed) {
  const std::string f = cfg.format.empty() ? def : cfg.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw UsageError("format '" + f + "' is not available for this subcommand");
}

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

// Either a perturbation (--kind/--r[/--param]) or an unperturbed family (--base).
struct Family {
  std::optional<PerturbationSpec> pert;
  RecurrenceSpec spec;
  std::string label;
};

Family family(const RunConfig& cfg, bool need_param) {
  Family f;
  if (!cfg.kind.empty()) {
    if (!cfg.base.empty()) throw UsageError("--kind and --base are exclusive");
    PerturbationSpec p{parse_perturbation_kind(cfg.kind), need(cfg.r, "--r"), std::nullopt};
    if (need_param && cfg.param.empty()) throw UsageError("missing --param");
    if (!cfg.param.empty()) p.param = Rational::parse(cfg.param);
    p.validate();
    f.pert = p;
    f.spec = perturbed_spec(p);
    f.label = std::string(to_string(p.kind)) + " r=" + std::to_string(p.order) +
              (p.param ? " " + std::string(param_name(p.kind)) + "=" + p.param->pretty() : "");
    return f;
  }
  const ChebyshevKind k = parse_chebyshev_kind(cfg.base.empty() ? "second" : cfg.base);
  f.spec = chebyshev_spec(k);
  f.label = std::string(to_string(k)) + " kind";
  return f;
}

// ------------------------------------------------------------------- table

int cmd_table(const RunConfig& cfg) {
  if (cfg.kind.empty()) throw UsageError("table needs --kind");
  const PerturbationKind kind = parse_perturbation_kind(cfg.kind);
  const int r = need(cfg.r, "--r");
  const int n_max = cfg.n_max.value_or(12);
  PerturbationSpec{kind, r, std::nullopt}.validate();
  if (n_max < 0 || n_max > kMaxTableOrder) throw UsageError("--n-max out of range");
  const Basis basis = parse_basis(cfg.basis);
  const Method method = parse_method(cfg.method);
  CCTable t;
  if (method == Method::recurrence) {
    const RecurrenceSpec base = basis == Basis::canonical ? monomial_spec() : chebyshev_spec(ChebyshevKind::second);
    t = cc_recurrence(perturbed_spec({kind, r, std::nullopt}), base, n_max);
  } else if (basis == Basis::canonical) {
    t = kind == PerturbationKind::translation ? cc_canonical_translation(r, n_max) : cc_canonical_dilatation(r, n_max);
  } else {
    t = kind == PerturbationKind::translation ? cc_closed_translation(r, n_max) : cc_closed_dilatation(r, n_max);
  }
  const std::string f = format_or(cfg, "text", {"text", "json", "csv"});
  if (f == "text") emit(cfg, render_text(t, param_name(kind)));
  if (f == "csv") emit(cfg, render_csv(t, param_name(kind)));
  if (f == "json") {
    json j = t;
    j["kind"] = to_string(kind);
    j["r"] = r;
    emit(cfg, j.dump(2) + "\n");
  }
  return 0;
}

// ------------------------------------------------------------------- zeros

OriginReport origin_of(const Polynomial& p) {
  OriginReport o;
  const int n = p.degree();
  o.value_at_0 = p.coeff(0).as_rational();
  o.sum_of_zeros = n >= 1 ? -p.coeff(n - 1).as_rational() : Rational(0);
  o.product_of_zeros = n % 2 == 0 ? o.value_at_0 : -o.value_at_0;
  o.origin_is_zero = o.value_at_0.is_zero();
  return o;
}

int cmd_zeros(const RunConfig& cfg) {
  const Family fam = family(cfg, true);
  const int n = need(cfg.n, "--n");
  if (n < 0) throw UsageError("--n must be nonnegative");
  const Polynomial p = generate(fam.spec, n)[static_cast<size_t>(n)];
  const ZeroReport zr = all_roots(p, cfg.tol, cfg.bits);
  const OriginReport orig = fam.pert ? origin_report(*fam.pert, n) : origin_of(p);
  std::optional<GershgorinRegion> region;
  std::string note;
  if (n >= 1) {
    try {
      region = gershgorin(fam.spec, n);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonPositiveGamma) throw;
      note = std::string("Gershgorin region omitted: ") + e.what();
    }
  }
  const std::string f = format_or(cfg, "json", {"json", "text", "csv"});
  if (f == "json") {
    json j;
    j["family"] = fam.label;
    j["n"] = n;
    j["zeros"] = zr;
    j["origin"] = orig;
    if (region) j["gershgorin"] = *region;
    if (!note.empty()) j["note"] = note;
    emit(cfg, j.dump(2) + "\n");
  } else if (f == "csv") {
    std::ostringstream os;
    os << "re,im\n";
    for (const auto& r : zr.real) os << format_double(r.approx) << ",0\n";
    for (const auto& c : zr.complex_pairs) {
      os << format_double(c.real()) << ',' << format_double(c.imag()) << '\n';
      os << format_double(c.real()) << ',' << format_double(-c.imag()) << '\n';
    }
    emit(cfg, os.str());
  } else {
    std::ostringstream os;
    os << fam.label << ", degree " << n << '\n';
    os << "real zeros: " << zr.n_real << '\n';
    for (const auto& r : zr.real) os << "  " << format_double(r.approx) << '\n';
    os << "complex conjugate pairs: " << zr.n_complex_pairs << '\n';
    for (const auto& c : zr.complex_pairs) {
      os << "  " << format_double(c.real()) << " +/- " << format_double(c.imag()) << "i\n";
    }
    os << "value at 0: " << orig.value_at_0.pretty() << '\n';
    os << "sum of zeros: " << orig.sum_of_zeros.pretty() << '\n';
    os << "product of zeros: " << orig.product_of_zeros.pretty() << '\n';
    os << "origin is a zero: " << (orig.origin_is_zero ? "yes" : "no") << '\n';
    if (region) {
      os << "gershgorin:";
      for (const auto& iv : region->intervals) os << " [" << iv.lo.pretty() << ", " << iv.hi.pretty() << "]";
      os << '\n';
    }
    if (!note.empty()) os << note << '\n';
    emit(cfg, os.str());
  }
  return 0;
}

// --------------------------------------------------------------- intersect

int cmd_intersect(const RunConfig& cfg) {
  if (cfg.kind.empty()) throw UsageError("intersect needs --kind");
  const IntersectionReport rep =
      intersection_points(parse_perturbation_kind(cfg.kind), need(cfg.r, "--r"), need(cfg.n, "--n"));
  const std::string f = format_or(cfg, "json", {"json", "text", "csv"});
  if (f == "json") {
    emit(cfg, json(rep).dump(2) + "\n");
  } else if (f == "csv") {
    std::ostringstream os;
    os << "k,m,x_approx,double,common,double_common\n";
    for (const auto& pt : rep.points) {
      os << pt.x.k() << ',' << pt.x.m() << ',' << format_double(pt.x.approx()) << ',' << pt.is_double << ','
         << pt.common << ',' << pt.double_common << '\n';
    }
    emit(cfg, os.str());
  } else {
    std::ostringstream os;
    os << to_string(rep.kind) << " r=" << rep.r << " n=" << rep.n << ": " << rep.n_distinct
       << " distinct interception points\n";
    for (const auto& pt : rep.points) {
      os << "  " << pt.x.str() << " = " << format_double(pt.x.approx()) << (pt.is_double ? " double" : " simple")
         << (pt.common ? " common" : "") << '\n';
    }
    os << "origin: " << to_string(rep.origin) << ", " << to_string(rep.origin_common) << '\n';
    emit(cfg, os.str());
  }
  return 0;
}

// -------------------------------------------------------------- gershgorin

int cmd_gershgorin(const RunConfig& cfg) {
  const Family fam = family(cfg, true);
  const int n = need(cfg.n, "--n");
  const GershgorinRegion g = gershgorin(fam.spec, n);
  const std::string f = format_or(cfg, "json", {"json", "text", "csv"});
  if (f == "json") {
    json j;
    j["family"] = fam.label;
    j["n"] = n;
    j["region"] = g;
    emit(cfg, j.dump(2) + "\n");
  } else if (f == "csv") {
    std::ostringstream os;
    os << "lo,hi,lo_approx,hi_approx\n";
    for (const auto& iv : g.intervals) {
      os << iv.lo.pretty() << ',' << iv.hi.pretty() << ',' << format_double(iv.lo.to_double()) << ','
         << format_double(iv.hi.to_double()) << '\n';
    }
    emit(cfg, os.str());
  } else {
    std::ostringstream os;
    os << fam.label << ", degree " << n << ':';
    for (const auto& iv : g.intervals) os << " [" << iv.lo.pretty() << ", " << iv.hi.pretty() << "]";
    os << '\n';
    emit(cfg, os.str());
  }
  return 0;
}

// -------------------------------------------------------------------- plot

int cmd_plot(const RunConfig& cfg) {
  PlotConfig pc;
  if (!cfg.kind.empty()) {
    pc.kind = parse_perturbation_kind(cfg.kind);
    pc.r = need(cfg.r, "--r");
    const std::string list = cfg.params.empty() ? cfg.param : cfg.params;
    if (list.empty()) throw UsageError("plot needs --params");
    pc.params = parse_param_list(list);
    for (const auto& v : pc.params) PerturbationSpec{*pc.kind, pc.r, v}.validate();
  } else if (!cfg.base.empty() && parse_chebyshev_kind(cfg.base) != ChebyshevKind::second) {
    throw UsageError("plot draws second-kind polynomials only");
  }
  pc.n = need(cfg.n, "--n");
  pc.x_lo = cfg.x_lo;
  pc.x_hi = cfg.x_hi;
  pc.samples = cfg.samples;
  PlotData d;
  try {
    d = sample_plot(pc);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) throw UsageError(e.what());
    throw;
  }
  const std::string f = format_or(cfg, "csv", {"csv", "svg"});
  emit(cfg, f == "csv" ? plot_csv(d) : plot_svg(d, pc));
  return 0;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const RunConfig& cfg) {
  format_or(cfg, "text", {"text"});
  VerifyConfig vc;
  vc.suite = cfg.suite;
  vc.r_max = cfg.r_max;
  vc.n_max = cfg.n_max;
  VerifyResult res;
  try {
    res = run_verify(vc);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) throw UsageError(e.what());
    throw;
  }
  emit(cfg, res.text);
  return res.all_pass ? 0 : kExitVerify;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::PrecisionExhausted:
    case ErrorKind::AffineOverflow:
    case ErrorKind::Internal:
      return kExitNumeric;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perturbed Chebyshev polynomials of the second kind: connection coefficients, zeros, interception points."};
  app.name("mops");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format: json, csv, text or svg (default depends on subcommand)");
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
  app.add_option("--bits", cfg.bits, "Interval precision in bits")->capture_default_str()->check(CLI::Range(8L, 4096L));
  app.add_option("--tol", cfg.tol, "Relative residual tolerance for complex roots")->capture_default_str();

  const auto family_flags = [&](CLI::App* sub, bool with_param) {
    sub->add_option("--kind", cfg.kind, "Perturbation kind: translation or dilatation");
    sub->add_option("--base", cfg.base, "Unperturbed family: first, second, third or fourth");
    sub->add_option("--r", cfg.r, "Perturbation order");
    if (with_param) sub->add_option("--param", cfg.param, "Parameter value, an exact rational such as 3 or -1/2");
  };

  CLI::App* table = app.add_subcommand("table", "Connection-coefficient table");
  table->add_option("--kind", cfg.kind, "Perturbation kind: translation or dilatation")->required();
  table->add_option("--r", cfg.r, "Perturbation order")->required();
  table->add_option("--n-max", cfg.n_max, "Last row of the table (default 12)");
  table->add_option("--basis", cfg.basis, "second_kind or canonical")->capture_default_str();
  table->add_option("--method", cfg.method, "closed_form or recurrence")->capture_default_str();

  CLI::App* zeros = app.add_subcommand("zeros", "Zero, origin and Gershgorin reports");
  family_flags(zeros, true);
  zeros->add_option("--n", cfg.n, "Degree")->required();

  CLI::App* intersect = app.add_subcommand("intersect", "Interception points of same-degree perturbed polynomials");
  intersect->add_option("--kind", cfg.kind, "Perturbation kind")->required();
  intersect->add_option("--r", cfg.r, "Perturbation order")->required();
  intersect->add_option("--n", cfg.n, "Degree")->required();

  CLI::App* gersh = app.add_subcommand("gershgorin", "Gershgorin region of the Jacobi matrix");
  family_flags(gersh, true);
  gersh->add_option("--n", cfg.n, "Matrix order")->required();

  CLI::App* plot = app.add_subcommand("plot", "Sampled curves as CSV or SVG");
  family_flags(plot, false);
  plot->add_option("--params", cfg.params, "Parameter list, e.g. -5..-1,1..5 or 1/2,3");
  plot->add_option("--n", cfg.n, "Degree")->required();
  plot->add_option("--x-lo", cfg.x_lo, "Left end of the sampling interval")->capture_default_str();
  plot->add_option("--x-hi", cfg.x_hi, "Right end of the sampling interval")->capture_default_str();
  plot->add_option("--samples", cfg.samples, "Number of samples")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", cfg.suite, "all, or one of the suite names")->capture_default_str();
  verify->add_option("--r-max", cfg.r_max, "Largest perturbation order (default per suite)");
  verify->add_option("--n-max", cfg.n_max, "Largest degree (default per suite)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*table) return cmd_table(cfg);
    if (*zeros) return cmd_zeros(cfg);
    if (*intersect) return cmd_intersect(cfg);
    if (*gersh) return cmd_gershgorin(cfg);
    if (*plot) return cmd_plot(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitUsage;
}
