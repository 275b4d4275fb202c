#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bgk::cli {

enum class OutputFormat { Csv, Json };
enum class Figure { Fig1, Fig2, Fig3, Fig5 };

/// Options shared by every subcommand. The `has_*` flags record which values
/// came from the command line; each command fills the rest with its own defaults.
struct RunConfig {
  double omega1 = 0.3;
  double grid_min = 0.0;
  double grid_max = 3.0;
  int grid_points = 301;
  double tol = 1e-10;
  OutputFormat format = OutputFormat::Csv;
  std::string output_path;  ///< empty: standard output

  bool has_omega1 = false;
  bool has_grid = false;
  bool has_points = false;
  bool has_tol = false;
  bool has_format = false;

  /// Throws Error(InvalidConfig) unless grid_min < grid_max, grid_points >= 2, tol > 0.
  void validate() const;
};

/// Column-oriented result of a command, written as CSV or JSON.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_csv(const Table& t, std::ostream& os);
void write_json(const Table& t, std::ostream& os);

/// mu, lambda0, s, Re/Im lambda^+, Re/Im lambda^- on a linear grid.
Table cmd_dispersion(const RunConfig& cfg);

/// fig1: Re V(mu); fig2: |X(mu)| = exp(Re V) / mu; fig3: Re X(mu) = exp(Re V) cos(Im V) / mu,
/// one series per omega1 in {0.1, 0.3, 0.5} (or the single preset passed with --omega1).
/// fig5: Re eta0 and 1 / (2 sqrt(omega1)) on a log grid of omega1.
Table cmd_figures(Figure which, const RunConfig& cfg);

/// Runs every identity check valid in the regime of cfg.omega1 and writes the
/// report. Returns true iff no check failed.
bool cmd_verify(const RunConfig& cfg, std::ostream& os);

/// eta0 from the closed form, the Newton oracle and the asymptote.
void cmd_eta0(const RunConfig& cfg, std::ostream& os);

/// Full command-line entry point. Exit codes: 0 success, 2 configuration or
/// regime error, 3 numerical failure (including failed verification checks).
/// Output is written only after the command has completed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bgk::cli
