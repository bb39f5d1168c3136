#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "floquet_ising/errors.hpp"
#include "floquet_ising/experiments.hpp"

namespace fi = floquet_ising;

namespace {

enum Exit { kOk = 0, kConfig = 1, kNumerical = 2, kIo = 3 };

std::vector<int> parse_lengths(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int l = 0;
    try {
      l = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw fi::ConfigError("--l expects a comma separated list of integers");
    out.push_back(l);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Driven transverse-field Ising chain: Floquet dynamics and entanglement entropy"};
  std::string experiment;
  std::string config_path;
  std::string boundary, lengths, scan, out_dir, format;
  double h0 = 0, amplitude = 0, omega0 = 0;
  int L = 0, n_max = 0;
  bool plots = false;

  app.add_option("experiment", experiment,
                 "convergence | volume_law | frequency_scan | floquet_dump | gge_dump | quench_check")
      ->required();
  app.add_option("--config", config_path, "JSON config file");
  auto* o_h0 = app.add_option("--h0", h0, "mean transverse field");
  auto* o_a = app.add_option("--A", amplitude, "drive amplitude");
  auto* o_w = app.add_option("--omega0", omega0, "drive frequency");
  auto* o_l = app.add_option("--L", L, "chain length (even)");
  auto* o_b = app.add_option("--boundary", boundary, "pbc or obc")->check(CLI::IsMember({"pbc", "obc"}));
  auto* o_ls = app.add_option("--l", lengths, "subchain lengths, comma separated");
  auto* o_n = app.add_option("--nmax", n_max, "last stroboscopic index");
  auto* o_scan = app.add_option("--scan", scan, "omega0 grid start:stop:step");
  auto* o_out = app.add_option("--out", out_dir, "output directory");
  auto* o_fmt = app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--plots", plots, "also write a gnuplot script");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    fi::ExperimentConfig cfg;
    if (!config_path.empty()) cfg = fi::load_config(config_path, cfg);
    cfg.experiment = fi::parse_experiment(experiment);
    if (*o_h0) cfg.h0 = h0;
    if (*o_a) cfg.A = amplitude;
    if (*o_w) cfg.omega0 = omega0;
    if (*o_l) cfg.L = L;
    if (*o_b) cfg.boundary = fi::parse_boundary(boundary);
    if (*o_ls) cfg.subchain_lengths = parse_lengths(lengths);
    if (*o_n) cfg.n_max = n_max;
    if (*o_scan) cfg.scan = fi::parse_scan(scan);
    if (*o_out) cfg.output_dir = out_dir;
    if (*o_fmt) cfg.format = format == "csv" ? fi::OutputFormat::Csv : fi::OutputFormat::Json;
    if (plots) cfg.emit_plots = true;
    cfg.validate();

    const fi::ExperimentResult result = fi::run_experiment(cfg);
    for (const auto& path : fi::write_output(result, cfg)) std::cout << path.string() << '\n';
    return kOk;
  } catch (const fi::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const fi::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const fi::IoError& e) {
    std::cerr << "I/O failure: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
}
