#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bgk/error.hpp"
#include "bgk/factorization.hpp"
#include "bgk/representations.hpp"
#include "bgk/spectrum.hpp"

namespace bgk::cli {

namespace {

using namespace std::complex_literals;
using Json = nlohmann::ordered_json;

constexpr double kFigurePresets[] = {0.1, 0.3, 0.5};

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17e", v);
  return buf;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int k = 0; k < n; ++k) g[k] = lo + (hi - lo) * k / (n - 1);
  g.back() = hi;
  return g;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  const double ratio = std::log(hi / lo);
  for (int k = 0; k < n; ++k) g[k] = lo * std::exp(ratio * k / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

QuadratureConfig quadrature_from(const RunConfig& cfg) {
  QuadratureConfig q;
  if (cfg.has_tol) {
    q.abs_tol = cfg.tol;
    q.rel_tol = cfg.tol;
  }
  q.validate();
  return q;
}

Json pair_json(Complex z) { return Json::array({z.real(), z.imag()}); }

// One identity check of the verification report.
struct Check {
  std::string name;
  std::string grid;
  double tolerance;
  std::function<double()> residual;  // empty: skipped in this regime
};

std::vector<Check> build_checks(const Factorizer& f, const RunConfig& cfg) {
  const bool one = f.regime() == Regime::IndexOne;
  auto tol = [&](double fallback) { return cfg.has_tol ? cfg.tol : fallback; };
  auto over_z = [&f](std::vector<Complex> zs, double (*fn)(Complex, const Factorizer&)) {
    return [&f, zs, fn] {
      double worst = 0.0;
      for (Complex z : zs) worst = std::max(worst, fn(z, f));
      return worst;
    };
  };
  auto over_mu = [&f](std::vector<double> ms, double (*fn)(double, const Factorizer&)) {
    return [&f, ms, fn] {
      double worst = 0.0;
      for (double m : ms) worst = std::max(worst, fn(m, f));
      return worst;
    };
  };

  const std::vector<Complex> z_jump =
      one ? std::vector<Complex>{-1.0, 2i, -0.5 + 0.5i} : std::vector<Complex>{-1.0, 1.0 + 2i};
  const std::vector<Complex> z_recip =
      one ? std::vector<Complex>{-2.0, 3i} : std::vector<Complex>{-1.0, 1.0 + 2i};
  const std::vector<double> mu_recip = one ? std::vector<double>{0.8} : std::vector<double>{0.5};
  const std::vector<double> mu_cosh =
      one ? std::vector<double>{0.3, 0.9, 2.0} : std::vector<double>{0.5, 0.7};
  const std::string z_jump_text = one ? "z in {-1, 2i, -0.5+0.5i}" : "z in {-1, 1+2i}";
  const std::string z_recip_text = one ? "z in {-2, 3i}" : "z in {-1, 1+2i}";
  const std::string mu_recip_text = one ? "mu = 0.8" : "mu = 0.5";
  const std::string mu_cosh_text = one ? "mu in {0.3, 0.9, 2}" : "mu in {0.5, 0.7}";

  std::vector<Check> checks;
  checks.push_back({"boundary_ratio", "mu in {0.1, 0.5, 0.9, 2}", tol(1e-9), [&f] {
                      double worst = 0.0;
                      for (double mu : {0.1, 0.5, 0.9, 2.0}) {
                        const BoundaryPair x = f.x_boundary(mu);
                        const Complex g = coefficient_g(mu, f.params());
                        worst = std::max(worst, std::abs(x.plus / x.minus - g) / std::abs(g));
                      }
                      return worst;
                    }});
  checks.push_back({"jump_representation", z_jump_text, tol(1e-6),
                    over_z(z_jump, jump_representation_residual)});
  checks.push_back({"weighted_jump_representation", z_jump_text, tol(1e-6),
                    over_z(z_jump, weighted_jump_representation_residual)});
  checks.push_back({"normalization", "(1/pi) int s X+ / lambda+ = -1", tol(1e-6),
                    one ? std::function<double()>([&f] {
                      return std::abs(normalization_integral(f) + 1.0);
                    })
                        : std::function<double()>()});
  checks.push_back({"reciprocal_representation", z_recip_text, tol(1e-6),
                    over_z(z_recip, reciprocal_representation_residual)});
  checks.push_back({"reciprocal_on_cut", mu_recip_text, tol(1e-5),
                    over_mu(mu_recip, reciprocal_on_cut_residual)});
  checks.push_back(
      {"cosh_on_cut", mu_cosh_text, tol(1e-5), over_mu(mu_cosh, cosh_on_cut_residual)});
  checks.push_back({"factorization", "600 points, |z| in [0.5, 20], arg z = +-pi/4, +-pi/2, +-3pi/4",
                    tol(1e-6), [&f] {
                      const auto grid = standard_factorization_grid();
                      return factorization_residual(grid, f);
                    }});
  checks.push_back({"boundary_factorization", "mu in {+-0.3, +-0.9, +-2}", tol(1e-6), [&f] {
                      const std::vector<double> grid{0.3, -0.3, 0.9, -0.9, 2.0, -2.0};
                      return boundary_factorization_residual(grid, f);
                    }});
  checks.push_back({"nonlinear_representation", "z in {-1, 2i}", tol(1e-6),
                    one ? std::function<double()>(over_z({-1.0, 2i},
                                                         nonlinear_representation_residual))
                        : std::function<double()>()});
  checks.push_back({"eta0_cross_check", "|closed form - Newton|", tol(1e-8),
                    one ? std::function<double()>([&f] {
                      return std::abs(eta0_explicit(f) - eta0_newton_oracle(f.params()));
                    })
                        : std::function<double()>()});
  checks.push_back({one ? "limit_zx" : "limit_x", "|z| = 1e3, arg z = 3pi/4", tol(1e-3), [&f, one] {
                      const Complex z = std::polar(1e3, 0.75 * std::numbers::pi);
                      const Complex x = f.x_of_z(z);
                      return one ? std::abs(z * x - 1.0) : std::abs(x - 1.0);
                    }});
  return checks;
}

void emit(const Table& t, const RunConfig& cfg, std::ostream& os) {
  if (cfg.format == OutputFormat::Json) write_json(t, os);
  else write_csv(t, os);
}

}  // namespace

void RunConfig::validate() const {
  std::ostringstream msg;
  if (!std::isfinite(omega1) || omega1 < 0.0) msg << "--omega1 must be finite and non-negative";
  else if (!(grid_min < grid_max)) msg << "--grid-min must be below --grid-max";
  else if (grid_points < 2) msg << "--points must be at least 2";
  else if (!(tol > 0.0)) msg << "--tol must be positive";
  else return;
  throw Error(ErrorCode::InvalidConfig, msg.str());
}

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_number(row[c]);
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  Json j;
  j["table"] = t.name;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  os << j.dump(2) << '\n';
}

Table cmd_dispersion(const RunConfig& cfg) {
  cfg.validate();
  const ProblemParams p(cfg.omega1);
  Table t{"dispersion",
          {"mu", "lambda0", "s", "re_lambda_plus", "im_lambda_plus", "re_lambda_minus",
           "im_lambda_minus"},
          {}};
  for (double mu : linear_grid(cfg.grid_min, cfg.grid_max, cfg.grid_points)) {
    const BoundaryPair lam = lambda_boundary(mu, p);
    t.rows.push_back({mu, lambda0_real(mu), half_jump(mu), lam.plus.real(), lam.plus.imag(),
                      lam.minus.real(), lam.minus.imag()});
  }
  return t;
}

Table cmd_figures(Figure which, const RunConfig& in) {
  RunConfig cfg = in;
  if (which == Figure::Fig5) {
    if (!cfg.has_grid) {
      cfg.grid_min = 0.01;
      cfg.grid_max = 0.69;
    }
    if (!cfg.has_points) cfg.grid_points = 200;
  } else {
    if (!cfg.has_grid) {
      cfg.grid_min = 0.01;
      cfg.grid_max = 3.0;
    }
    if (!cfg.has_points) cfg.grid_points = 300;
  }
  cfg.validate();
  const QuadratureConfig q = quadrature_from(cfg);

  if (which == Figure::Fig5) {
    if (!(cfg.grid_min > 0.0))
      throw Error(ErrorCode::InvalidConfig, "fig5 sweeps omega1 on a log grid; --grid-min must be positive");
    Table t{"fig5", {"omega1", "re_eta0", "re_eta0_asymptotic"}, {}};
    for (double w : log_grid(cfg.grid_min, cfg.grid_max, cfg.grid_points)) {
      const Factorizer f(ProblemParams(w), q);
      t.rows.push_back({w, eta0_explicit(f).real(), eta0_asymptotic(w).real()});
    }
    return t;
  }

  if (!(cfg.grid_min > 0.0) || !(cfg.grid_max < q.cutoff)) {
    std::ostringstream msg;
    msg << "figure grids must lie inside (0, " << q.cutoff << ")";
    throw Error(ErrorCode::InvalidConfig, msg.str());
  }
  std::vector<double> omegas(std::begin(kFigurePresets), std::end(kFigurePresets));
  if (cfg.has_omega1) {
    if (std::find(omegas.begin(), omegas.end(), cfg.omega1) == omegas.end())
      throw Error(ErrorCode::InvalidConfig, "figures 1-3 are drawn for omega1 in {0.1, 0.3, 0.5}");
    omegas = {cfg.omega1};
  }

  const char* quantity = which == Figure::Fig1 ? "re_v" : which == Figure::Fig2 ? "abs_x" : "re_x";
  const char* name = which == Figure::Fig1 ? "fig1" : which == Figure::Fig2 ? "fig2" : "fig3";
  Table t{name, {"omega1", "mu", quantity}, {}};
  for (double w : omegas) {
    const Factorizer f(ProblemParams(w), q);
    for (double mu : linear_grid(cfg.grid_min, cfg.grid_max, cfg.grid_points)) {
      const Complex v = f.v_principal(mu);
      double value = v.real();
      if (which == Figure::Fig2) value = std::exp(v.real()) / mu;
      if (which == Figure::Fig3) value = std::exp(v.real()) * std::cos(v.imag()) / mu;
      t.rows.push_back({w, mu, value});
    }
  }
  return t;
}

bool cmd_verify(const RunConfig& cfg, std::ostream& os) {
  cfg.validate();
  const Factorizer f{ProblemParams(cfg.omega1)};
  const auto checks = build_checks(f, cfg);

  bool all_pass = true;
  Table csv{"verify", {"max_residual", "tolerance"}, {}};
  Json report;
  report["omega1"] = cfg.omega1;
  report["index"] = f.params().index();
  report["checks"] = Json::array();
  for (const Check& c : checks) {
    Json entry;
    entry["identity"] = c.name;
    entry["grid"] = c.grid;
    entry["tolerance"] = c.tolerance;
    if (!c.residual) {
      entry["max_residual"] = nullptr;
      entry["status"] = "skipped (regime)";
    } else {
      const double r = c.residual();
      const bool pass = r < c.tolerance;
      all_pass = all_pass && pass;
      entry["max_residual"] = r;
      entry["status"] = pass ? "pass" : "fail";
    }
    report["checks"].push_back(entry);
  }
  report["all_pass"] = all_pass;

  if (cfg.format == OutputFormat::Csv) {
    os << "identity,grid,max_residual,tolerance,status\n";
    for (const auto& e : report["checks"]) {
      os << e["identity"].get<std::string>() << ",\"" << e["grid"].get<std::string>() << "\","
         << (e["max_residual"].is_null() ? std::string() : format_number(e["max_residual"]))
         << ',' << format_number(e["tolerance"]) << ',' << e["status"].get<std::string>() << '\n';
    }
  } else {
    os << report.dump(2) << '\n';
  }
  return all_pass;
}

void cmd_eta0(const RunConfig& cfg, std::ostream& os) {
  cfg.validate();
  const Factorizer f(ProblemParams(cfg.omega1), quadrature_from(cfg));
  const Complex eta0 = eta0_explicit(f);
  const Complex oracle = eta0_newton_oracle(f.params());
  const Complex asym = eta0_asymptotic(cfg.omega1);
  if (cfg.format == OutputFormat::Csv) {
    Table t{"eta0",
            {"omega1", "re_eta0", "im_eta0", "re_asymptotic", "im_asymptotic", "re_oracle",
             "im_oracle", "max_cross_error"},
            {{cfg.omega1, eta0.real(), eta0.imag(), asym.real(), asym.imag(), oracle.real(),
              oracle.imag(), std::abs(eta0 - oracle)}}};
    write_csv(t, os);
    return;
  }
  Json j;
  j["omega1"] = cfg.omega1;
  j["eta0"] = pair_json(eta0);
  j["asymptotic"] = pair_json(asym);
  j["oracle"] = pair_json(oracle);
  j["max_cross_error"] = std::abs(eta0 - oracle);
  os << j.dump(2) << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dispersion, factorization and discrete spectrum of the oscillating-plate kinetic problem",
               "bgk-stokes"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "csv";
  std::string figure = "fig1";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--omega1", cfg.omega1, "Plate oscillation frequency omega1 >= 0");
    sub->add_option("--grid-min", cfg.grid_min, "Lower end of the grid");
    sub->add_option("--grid-max", cfg.grid_max, "Upper end of the grid");
    sub->add_option("--points", cfg.grid_points, "Number of grid nodes");
    sub->add_option("--tol", cfg.tol,
                    "Quadrature tolerance; for verify, the pass threshold for every check");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.output_path, "Output file (default: standard output)");
  };
  CLI::App* dispersion = app.add_subcommand("dispersion", "Tabulate lambda0, s and lambda+- on a mu grid");
  CLI::App* figures = app.add_subcommand("figures", "Emit figure data (fig1, fig2, fig3, fig5)");
  CLI::App* verify = app.add_subcommand("verify", "Check the factorization identities at one omega1");
  CLI::App* eta0 = app.add_subcommand("eta0", "Zero eta0 of lambda by closed form and Newton");
  for (CLI::App* sub : {dispersion, figures, verify, eta0}) add_common(sub);
  figures->add_option("which", figure, "Figure to reproduce")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig5"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App* active = app.get_subcommands().front();
  cfg.has_omega1 = active->count("--omega1") > 0;
  cfg.has_grid = active->count("--grid-min") > 0 || active->count("--grid-max") > 0;
  cfg.has_points = active->count("--points") > 0;
  cfg.has_tol = active->count("--tol") > 0;
  cfg.has_format = active->count("--format") > 0;
  const bool report = active == verify || active == eta0;
  cfg.format = format == "json" || (report && !cfg.has_format) ? OutputFormat::Json
                                                               : OutputFormat::Csv;

  std::ostringstream buffer;
  int code = 0;
  try {
    if (active == dispersion) {
      emit(cmd_dispersion(cfg), cfg, buffer);
    } else if (active == figures) {
      const Figure which = figure == "fig1"   ? Figure::Fig1
                           : figure == "fig2" ? Figure::Fig2
                           : figure == "fig3" ? Figure::Fig3
                                              : Figure::Fig5;
      emit(cmd_figures(which, cfg), cfg, buffer);
    } else if (active == verify) {
      if (!cmd_verify(cfg, buffer)) code = 3;
    } else {
      cmd_eta0(cfg, buffer);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numerical_failure(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }

  if (cfg.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file || !(file << buffer.str())) {
      err << "error: cannot write " << cfg.output_path << '\n';
      return 2;
    }
  }
  if (code != 0) err << "error: one or more identity checks failed\n";
  return code;
}

}  // namespace bgk::cli
