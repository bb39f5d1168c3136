#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "floquet_ising/model.hpp"
#include "floquet_ising/output.hpp"

namespace floquet_ising {

enum class Experiment { Convergence, VolumeLaw, FrequencyScan, FloquetDump, GGEDump, QuenchCheck };
enum class OutputFormat { Csv, Json };

std::string to_string(Experiment e);
Experiment parse_experiment(std::string_view name);
Boundary parse_boundary(std::string_view name);
/// "start:stop:step", stop included when it lies on the grid.
std::vector<double> parse_scan(std::string_view spec);

/// Zero or empty fields mean "use the experiment's default".
struct ExperimentConfig {
  Experiment experiment = Experiment::Convergence;
  double h0 = 2.3;
  double A = 1.0;
  double omega0 = 4.0;
  int L = 0;
  Boundary boundary = Boundary::SpinPBC;
  std::vector<int> subchain_lengths;
  int n_max = -1;
  std::vector<double> scan;
  std::vector<std::pair<double, double>> quench_pairs;
  int resonance_cutoff = 10;
  int steps_per_period = 0;
  int n_samples = 64;
  double t_bar = 0.0;
  std::string output_dir = ".";
  OutputFormat format = OutputFormat::Csv;
  bool emit_plots = false;

  int chain_length() const;
  DriveParams drive() const;
  ChainSpec chain() const;
  std::vector<int> lengths() const;
  std::vector<double> scan_grid() const;
  std::vector<std::pair<double, double>> quench_list() const;
  void validate() const;
};

/// JSON keys are the field names above; unknown keys are rejected.
ExperimentConfig config_from_json(const std::string& text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base = {});

struct ExperimentResult {
  std::string name;
  Metadata metadata;
  Table table;
  std::vector<std::string> warnings;
  std::string gnuplot;
};

/// Revival-free stroboscopic horizon: largest n with n tau <= L/4.
int revival_horizon(const DriveParams& p, int L);

/// First index after which every value stays within rel_tol of reference; -1 if the last one is outside.
int entry_index(const std::vector<double>& values, double reference, double rel_tol);

double low_frequency_threshold(int L);

ExperimentResult run_convergence(const ExperimentConfig& cfg);
ExperimentResult run_volume_law(const ExperimentConfig& cfg);
ExperimentResult run_frequency_scan(const ExperimentConfig& cfg);
ExperimentResult run_floquet_dump(const ExperimentConfig& cfg);
ExperimentResult run_gge_dump(const ExperimentConfig& cfg);
ExperimentResult run_quench_check(const ExperimentConfig& cfg);
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Writes <name>.csv and its <name>.json mirror (JSON only for format json),
/// plus <name>.gp when plots are requested.
std::vector<std::filesystem::path> write_output(const ExperimentResult& result, const ExperimentConfig& cfg);

}  // namespace floquet_ising
