#include "floquet_ising/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "floquet_ising/bdg.hpp"
#include "floquet_ising/corr.hpp"
#include "floquet_ising/entropy.hpp"
#include "floquet_ising/errors.hpp"
#include "floquet_ising/floquet.hpp"
#include "parallel.hpp"

#ifndef FLOQUET_ISING_VERSION
#define FLOQUET_ISING_VERSION "unknown"
#endif

namespace floquet_ising {

namespace {

const std::map<std::string, Experiment, std::less<>> kExperimentNames = {
    {"convergence", Experiment::Convergence},     {"volume_law", Experiment::VolumeLaw},
    {"frequency_scan", Experiment::FrequencyScan}, {"floquet_dump", Experiment::FloquetDump},
    {"gge_dump", Experiment::GGEDump},             {"quench_check", Experiment::QuenchCheck},
};

std::string fmt(double x) { return format_double(x); }

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

std::string timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int resolve_steps(const ExperimentConfig& cfg, const DriveParams& p) {
  return cfg.steps_per_period > 0 ? cfg.steps_per_period : default_steps_per_period(p);
}

FloquetOptions floquet_options(const ExperimentConfig& cfg, int steps, bool periodic) {
  FloquetOptions o;
  o.steps_per_period = steps;
  o.n_samples = cfg.n_samples;
  o.periodic_components = periodic;
  return o;
}

Metadata base_metadata(const ExperimentConfig& cfg, const std::string& name) {
  const QuadratureOptions q;
  Metadata m;
  m.emplace_back("experiment", name);
  m.emplace_back("version", FLOQUET_ISING_VERSION);
  m.emplace_back("timestamp", timestamp());
  m.emplace_back("h0", fmt(cfg.h0));
  m.emplace_back("A", fmt(cfg.A));
  if (cfg.experiment != Experiment::FrequencyScan) {
    m.emplace_back("omega0", fmt(cfg.omega0));
    m.emplace_back("tau", fmt(2.0 * std::numbers::pi / cfg.omega0));
  }
  m.emplace_back("L", std::to_string(cfg.chain_length()));
  m.emplace_back("boundary", cfg.boundary == Boundary::SpinPBC ? "pbc" : "obc");
  m.emplace_back("N_s", std::to_string(cfg.n_samples));
  m.emplace_back("quadrature_eps_abs", fmt(q.eps_abs));
  m.emplace_back("quadrature_eps_rel", fmt(q.eps_rel));
  m.emplace_back("quadrature_limit", std::to_string(q.limit));
  m.emplace_back("norm_drift_limit", fmt(kNormDriftLimit));
  m.emplace_back("unitarity_limit", fmt(kUnitarityLimit));
  m.emplace_back("entropy_units", "nats");
  return m;
}

void add_step_metadata(Metadata& m, const DriveParams& p, int steps) {
  m.emplace_back("steps_per_period", std::to_string(steps));
  m.emplace_back("dt", fmt(p.tau() / steps));
}

void note(ExperimentResult& r, const std::string& message) {
  warn(message);
  r.warnings.push_back(message);
}

void check_lengths(const std::vector<int>& ls, int limit, const char* what) {
  for (int l : ls) {
    if (l <= 0 || l > limit) {
      std::ostringstream os;
      os << "subchain length " << l << " outside 1.." << limit << " (" << what << ")";
      throw ConfigError(os.str());
    }
  }
}

std::string plot_preamble(const std::string& name) {
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set terminal pngcairo size 900,600\n"
     << "set output '" << name << ".png'\n"
     << "csv = '" << name << ".csv'\n";
  return os.str();
}

}  // namespace

std::string to_string(Experiment e) {
  for (const auto& [name, value] : kExperimentNames) {
    if (value == e) return name;
  }
  return "unknown";
}

Experiment parse_experiment(std::string_view name) {
  std::string key(name);
  if (key == "floquet") key = "floquet_dump";
  if (key == "gge") key = "gge_dump";
  const auto it = kExperimentNames.find(key);
  if (it == kExperimentNames.end()) throw ConfigError("unknown experiment '" + std::string(name) + "'");
  return it->second;
}

Boundary parse_boundary(std::string_view name) {
  if (name == "pbc") return Boundary::SpinPBC;
  if (name == "obc") return Boundary::OBC;
  throw ConfigError("boundary must be pbc or obc, got '" + std::string(name) + "'");
}

std::vector<double> parse_scan(std::string_view spec) {
  std::vector<double> parts;
  std::string s(spec);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) {
    char* end = nullptr;
    const double x = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0') throw ConfigError("scan must look like start:stop:step, got '" + s + "'");
    parts.push_back(x);
  }
  if (parts.size() != 3) throw ConfigError("scan must look like start:stop:step, got '" + s + "'");
  const double start = parts[0], stop = parts[1], step = parts[2];
  if (!(step > 0.0) || stop < start) throw ConfigError("scan needs step > 0 and stop >= start");
  const long n = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out(n);
  for (long i = 0; i < n; ++i) out[i] = start + static_cast<double>(i) * step;
  return out;
}

int ExperimentConfig::chain_length() const {
  if (L > 0) return L;
  return experiment == Experiment::Convergence ? 400 : 1000;
}

DriveParams ExperimentConfig::drive() const { return DriveParams(h0, A, omega0); }

ChainSpec ExperimentConfig::chain() const { return {chain_length(), boundary}; }

std::vector<int> ExperimentConfig::lengths() const {
  if (!subchain_lengths.empty()) return subchain_lengths;
  if (experiment == Experiment::VolumeLaw) return {10, 20, 40, 80, 120, 160, 200};
  return {20, 40};
}

std::vector<double> ExperimentConfig::scan_grid() const {
  if (!scan.empty()) return scan;
  return parse_scan("0.5:7:0.025");
}

std::vector<std::pair<double, double>> ExperimentConfig::quench_list() const {
  if (!quench_pairs.empty()) return quench_pairs;
  return {{2.3, 2.3}, {2.3, 1.5}, {0.5, 1.5}, {2.3, 0.5}};
}

void ExperimentConfig::validate() const {
  (void)drive();
  chain().validate();
  if (n_samples <= 0) throw ConfigError("n_samples must be positive");
  if (steps_per_period < 0) throw ConfigError("steps_per_period must be >= 0");
  if (resonance_cutoff < 1) throw ConfigError("resonance_cutoff must be >= 1");
  for (int l : subchain_lengths) {
    if (l < 1) throw ConfigError("subchain lengths must be >= 1");
  }
  for (double w : scan) {
    if (!(w > 0.0)) throw ConfigError("scan frequencies must be > 0");
  }
  if (experiment != Experiment::Convergence && boundary == Boundary::OBC) {
    throw ConfigError(to_string(experiment) + " needs a periodic chain (momentum grid)");
  }
}

ExperimentConfig config_from_json(const std::string& text, ExperimentConfig cfg) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "experiment") {
        cfg.experiment = parse_experiment(value.get<std::string>());
      } else if (key == "h0") {
        cfg.h0 = value.get<double>();
      } else if (key == "A") {
        cfg.A = value.get<double>();
      } else if (key == "omega0") {
        cfg.omega0 = value.get<double>();
      } else if (key == "L") {
        cfg.L = value.get<int>();
      } else if (key == "boundary") {
        cfg.boundary = parse_boundary(value.get<std::string>());
      } else if (key == "subchain_lengths") {
        cfg.subchain_lengths = value.get<std::vector<int>>();
      } else if (key == "n_max") {
        cfg.n_max = value.get<int>();
      } else if (key == "scan") {
        cfg.scan = value.is_string() ? parse_scan(value.get<std::string>()) : value.get<std::vector<double>>();
      } else if (key == "quench_pairs") {
        cfg.quench_pairs.clear();
        for (const auto& pair : value) {
          const auto v = pair.get<std::vector<double>>();
          if (v.size() != 2) throw ConfigError("quench_pairs entries must be [h0, h1]");
          cfg.quench_pairs.emplace_back(v[0], v[1]);
        }
      } else if (key == "resonance_cutoff") {
        cfg.resonance_cutoff = value.get<int>();
      } else if (key == "steps_per_period") {
        cfg.steps_per_period = value.get<int>();
      } else if (key == "n_samples") {
        cfg.n_samples = value.get<int>();
      } else if (key == "t_bar") {
        cfg.t_bar = value.get<double>();
      } else if (key == "output_dir") {
        cfg.output_dir = value.get<std::string>();
      } else if (key == "format") {
        const auto f = value.get<std::string>();
        if (f != "csv" && f != "json") throw ConfigError("format must be csv or json");
        cfg.format = f == "csv" ? OutputFormat::Csv : OutputFormat::Json;
      } else if (key == "emit_plots") {
        cfg.emit_plots = value.get<bool>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config has a value of the wrong type: ") + e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_json(ss.str(), std::move(base));
}

int revival_horizon(const DriveParams& p, int L) {
  return static_cast<int>(std::floor(0.25 * L / p.tau() + 1e-12));
}

int entry_index(const std::vector<double>& values, double reference, double rel_tol) {
  const double band = rel_tol * std::abs(reference);
  int entry = -1;
  for (int i = static_cast<int>(values.size()) - 1; i >= 0; --i) {
    if (std::abs(values[i] - reference) > band) break;
    entry = i;
  }
  return entry;
}

double low_frequency_threshold(int L) { return 0.3 * std::min(1.0, 2000.0 / L); }

ExperimentResult run_convergence(const ExperimentConfig& cfg) {
  cfg.validate();
  const DriveParams p = cfg.drive();
  const ChainSpec chain = cfg.chain();
  const int steps = resolve_steps(cfg, p);
  const std::vector<int> ls = cfg.lengths();
  check_lengths(ls, chain.L / 2, "must not exceed L/2");
  const int horizon = revival_horizon(p, chain.L);
  const int n_max = cfg.n_max >= 0 ? cfg.n_max : horizon;

  ExperimentResult r;
  r.name = "convergence";
  r.metadata = base_metadata(cfg, r.name);
  add_step_metadata(r.metadata, p, steps);
  r.metadata.emplace_back("n_max", std::to_string(n_max));
  r.metadata.emplace_back("revival_horizon_n", std::to_string(horizon));
  if (n_max > horizon) {
    note(r, "n_max * tau exceeds the revival bound L/4; later rows are flagged");
  }

  const KGrid grid = build_k_grid({chain.L, Boundary::SpinPBC});
  const std::vector<FloquetMode> modes = analyze_grid(p, grid, floquet_options(cfg, steps, true));
  std::vector<double> s_inf;
  for (int l : ls) {
    const MajoranaCorrelation c = asymptotic_toeplitz(modes, l, cfg.t_bar);
    if (!c.quadrature_converged) note(r, "asymptotic quadrature not converged for l=" + std::to_string(l));
    s_inf.push_back(subchain_entropy(c));
  }

  std::vector<std::vector<double>> traces(ls.size());
  BogoliubovFrame frame = ground_state_bogoliubov(chain, p);
  const StroboscopicEvolver evolver(chain, p, steps);
  for (int n = 0; n <= n_max; ++n) {
    for (std::size_t i = 0; i < ls.size(); ++i) traces[i].push_back(subchain_entropy(correlation_generic(frame, ls[i])));
    if (n % 16 == 15 || n == n_max) {
      const double err = frame.unitarity_error();
      if (err > kUnitarityLimit) {
        std::ostringstream os;
        os << "Bogoliubov frame lost unitarity (" << err << ") at n=" << n;
        throw UnitarityError(os.str());
      }
    }
    if (n < n_max) frame = evolver.advance(frame);
  }

  r.table.columns = {"l", "n", "t", "S", "S_inf", "revival_flag"};
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (int n = 0; n <= n_max; ++n) {
      r.table.add_row({double(ls[i]), double(n), n * p.tau(), traces[i][n], s_inf[i], n > horizon ? 1.0 : 0.0});
    }
    const std::vector<double> before(traces[i].begin(), traces[i].begin() + std::min(n_max, horizon) + 1);
    r.metadata.emplace_back("entry_n_3pct_l" + std::to_string(ls[i]), std::to_string(entry_index(before, s_inf[i], 0.03)));
  }

  std::ostringstream gp;
  gp << plot_preamble(r.name) << "set xlabel 'n'\nset ylabel 'S_l(n tau)'\nset key left top\n"
     << "plot for [l in '" << join(ls) << "'] csv using (column(1)==l+0 ? column(2) : 1/0):4 with lines title 'l='.l, \\\n"
     << "     for [l in '" << join(ls) << "'] csv using (column(1)==l+0 ? column(2) : 1/0):5 with lines dashtype 2 notitle\n";
  r.gnuplot = gp.str();
  return r;
}

ExperimentResult run_volume_law(const ExperimentConfig& cfg) {
  cfg.validate();
  const DriveParams p = cfg.drive();
  const ChainSpec chain = cfg.chain();
  const int steps = resolve_steps(cfg, p);
  const std::vector<int> ls = cfg.lengths();
  check_lengths(ls, chain.L / 2, "must not exceed L/2");

  ExperimentResult r;
  r.name = "volume_law";
  r.metadata = base_metadata(cfg, r.name);
  add_step_metadata(r.metadata, p, steps);

  const std::vector<FloquetMode> modes = analyze_grid(p, build_k_grid(chain), floquet_options(cfg, steps, true));
  const EntropyDensity s = asymptotic_entropy_density(modes);
  r.metadata.emplace_back("s_inf", fmt(s.value));
  r.metadata.emplace_back("s_inf_abs_error", fmt(s.abs_error));

  r.table.columns = {"l", "S_inf", "l_s_inf", "S_inf_over_l_minus_s", "quadrature_converged"};
  std::vector<std::vector<double>> rows(ls.size());
  detail::parallel_for(static_cast<long>(ls.size()), [&](long i) {
    const MajoranaCorrelation c = asymptotic_toeplitz(modes, ls[i], cfg.t_bar);
    const double S = subchain_entropy(c);
    rows[i] = {double(ls[i]), S, ls[i] * s.value, S / ls[i] - s.value, c.quadrature_converged ? 1.0 : 0.0};
  });
  for (auto& row : rows) {
    if (row[4] == 0.0) note(r, "Toeplitz quadrature not converged for l=" + fmt(row[0]));
    r.table.add_row(std::move(row));
  }

  std::ostringstream gp;
  gp << plot_preamble(r.name) << "set multiplot layout 1,2\nset xlabel 'l'\n"
     << "plot csv using 1:2 with lines title 'S_l^inf(0)', csv using 1:3 with lines dashtype 2 title 'l s^inf'\n"
     << "set ylabel 'S_l^inf(0)/l - s^inf'\nplot csv using 1:4 with linespoints notitle\nunset multiplot\n";
  r.gnuplot = gp.str();
  return r;
}

ExperimentResult run_frequency_scan(const ExperimentConfig& cfg) {
  cfg.validate();
  const ChainSpec chain = cfg.chain();
  const KGrid grid = build_k_grid(chain);
  const std::vector<double> omegas = cfg.scan_grid();
  const double threshold = low_frequency_threshold(chain.L);

  ExperimentResult r;
  r.name = "frequency_scan";
  r.metadata = base_metadata(cfg, r.name);
  r.metadata.emplace_back("low_frequency_threshold", fmt(threshold));

  const long n = static_cast<long>(omegas.size());
  std::vector<std::vector<double>> rows(n);
  detail::parallel_for(n, [&](long i) {
    const DriveParams p(cfg.h0, cfg.A, omegas[i]);
    const int steps = resolve_steps(cfg, p);
    const std::vector<FloquetMode> modes = analyze_grid(p, grid, floquet_options(cfg, steps, false));
    const EntropyDensity s = asymptotic_entropy_density(modes);
    const EntropyDensity g = gge_entropy_density(build_gge(modes));
    rows[i] = {omegas[i], s.value, s.abs_error, g.value, (s.converged && g.converged) ? 1.0 : 0.0,
               omegas[i] < threshold ? 1.0 : 0.0, double(steps), 0.0, 0.0};
  });

  std::vector<double> k0, kpi;
  for (int q = 1; q <= cfg.resonance_cutoff; ++q) {
    k0.push_back(2.0 * std::abs(cfg.h0 - 1.0) / q);
    kpi.push_back(2.0 * std::abs(cfg.h0 + 1.0) / q);
  }
  auto mark = [&](const std::vector<double>& freqs, std::size_t col) {
    for (std::size_t q = 0; q < freqs.size(); ++q) {
      if (n == 0 || freqs[q] < omegas.front() || freqs[q] > omegas.back()) continue;
      long best = 0;
      for (long i = 1; i < n; ++i) {
        if (std::abs(omegas[i] - freqs[q]) < std::abs(omegas[best] - freqs[q])) best = i;
      }
      if (rows[best][col] == 0.0) rows[best][col] = double(q + 1);
    }
  };
  mark(k0, 7);
  mark(kpi, 8);
  r.metadata.emplace_back("resonances_k0", join(k0));
  r.metadata.emplace_back("resonances_kpi", join(kpi));

  bool low = false;
  r.table.columns = {"omega0",        "s_inf",           "s_inf_abs_error",     "s_gge",
                     "quadrature_converged", "low_frequency", "steps_per_period", "k0_resonance_order",
                     "kpi_resonance_order"};
  for (auto& row : rows) {
    low = low || row[5] != 0.0;
    if (row[4] == 0.0) note(r, "s_inf quadrature not converged at omega0=" + fmt(row[0]));
    r.table.add_row(std::move(row));
  }
  if (low) note(r, "scan includes omega0 below " + fmt(threshold) + "; the momentum grid may under-resolve resonances");

  std::ostringstream gp;
  gp << plot_preamble(r.name) << "set xlabel 'omega_0'\nset ylabel 's^inf'\n";
  for (double w : k0) gp << "set arrow from " << fmt(w) << ", graph 0 to " << fmt(w) << ", graph 1 nohead dashtype 2 lc 'red'\n";
  for (double w : kpi) gp << "set arrow from " << fmt(w) << ", graph 0 to " << fmt(w) << ", graph 1 nohead dashtype 3 lc 'blue'\n";
  if (!omegas.empty()) gp << "set xrange [" << fmt(omegas.front()) << ":" << fmt(omegas.back()) << "]\n";
  gp << "plot csv using 1:2 with lines notitle\n";
  r.gnuplot = gp.str();
  return r;
}

ExperimentResult run_floquet_dump(const ExperimentConfig& cfg) {
  cfg.validate();
  const DriveParams p = cfg.drive();
  const int steps = resolve_steps(cfg, p);
  ExperimentResult r;
  r.name = "floquet";
  r.metadata = base_metadata(cfg, r.name);
  add_step_metadata(r.metadata, p, steps);
  const std::vector<FloquetMode> modes = analyze_grid(p, build_k_grid(cfg.chain()), floquet_options(cfg, steps, false));
  r.table.columns = {"k", "mu", "r_plus_sq", "r_minus_sq", "lambda", "degenerate"};
  int degenerate = 0;
  for (const FloquetMode& m : modes) {
    degenerate += m.degenerate;
    r.table.add_row({m.k, m.mu, m.weight_plus(), m.weight_minus(), gge_lambda(m.r_plus, m.r_minus),
                     m.degenerate ? 1.0 : 0.0});
  }
  if (degenerate > 0) note(r, std::to_string(degenerate) + " degenerate Floquet propagators on the grid");
  std::ostringstream gp;
  gp << plot_preamble(r.name) << "set multiplot layout 1,2\nset xlabel 'k'\n"
     << "plot csv using 1:2 with lines title 'mu_k'\n"
     << "plot csv using 1:3 with lines title '|r+|^2', csv using 1:4 with lines title '|r-|^2'\nunset multiplot\n";
  r.gnuplot = gp.str();
  return r;
}

ExperimentResult run_gge_dump(const ExperimentConfig& cfg) {
  cfg.validate();
  const DriveParams p = cfg.drive();
  const int steps = resolve_steps(cfg, p);
  ExperimentResult r;
  r.name = "gge";
  r.metadata = base_metadata(cfg, r.name);
  add_step_metadata(r.metadata, p, steps);
  const std::vector<FloquetMode> modes = analyze_grid(p, build_k_grid(cfg.chain()), floquet_options(cfg, steps, false));
  const GGEData gge = build_gge(modes);
  r.metadata.emplace_back("s_gge", fmt(gge_entropy_density(gge).value));
  r.metadata.emplace_back("s_inf", fmt(asymptotic_entropy_density(modes).value));
  r.table.columns = {"k", "n_expectation", "lambda"};
  for (std::size_t i = 0; i < gge.k.size(); ++i) r.table.add_row({gge.k[i], gge.n_expectation[i], gge.lambda[i]});
  std::ostringstream gp;
  gp << plot_preamble(r.name) << "set xlabel 'k'\nset ylabel 'lambda_k'\nplot csv using 1:3 with lines notitle\n";
  r.gnuplot = gp.str();
  return r;
}

ExperimentResult run_quench_check(const ExperimentConfig& cfg) {
  cfg.validate();
  const KGrid grid = build_k_grid(cfg.chain());
  ExperimentResult r;
  r.name = "quench_check";
  r.metadata = base_metadata(cfg, r.name);
  FloquetOptions opts = floquet_options(cfg, cfg.steps_per_period, false);
  r.table.columns = {"h0", "h1", "s_closed_form", "s_pipeline", "deviation"};
  for (const auto& [h0, h1] : cfg.quench_list()) {
    const QuenchCheck q = quench_limit_check(h0, h1, grid, opts);
    r.table.add_row({h0, h1, q.closed_form.value, q.pipeline.value, q.deviation});
  }
  std::ostringstream gp;
  gp << plot_preamble(r.name) << "set xlabel 's^inf closed form'\nset ylabel 's^inf pipeline'\n"
     << "plot csv using 3:4 with points pt 7 notitle, x with lines dashtype 2 notitle\n";
  r.gnuplot = gp.str();
  return r;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case Experiment::Convergence:
      return run_convergence(cfg);
    case Experiment::VolumeLaw:
      return run_volume_law(cfg);
    case Experiment::FrequencyScan:
      return run_frequency_scan(cfg);
    case Experiment::FloquetDump:
      return run_floquet_dump(cfg);
    case Experiment::GGEDump:
      return run_gge_dump(cfg);
    case Experiment::QuenchCheck:
      return run_quench_check(cfg);
  }
  throw ConfigError("unknown experiment");
}

std::vector<std::filesystem::path> write_output(const ExperimentResult& result, const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  const fs::path dir(cfg.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

  std::vector<fs::path> written;
  auto emit = [&](const fs::path& path, auto&& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    writer(out);
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
    written.push_back(path);
  };
  const bool csv = cfg.format == OutputFormat::Csv || cfg.emit_plots;
  if (csv) emit(dir / (result.name + ".csv"), [&](std::ostream& os) { write_csv(os, result.metadata, result.table); });
  emit(dir / (result.name + ".json"), [&](std::ostream& os) { write_json(os, result.metadata, result.table); });
  if (cfg.emit_plots) emit(dir / (result.name + ".gp"), [&](std::ostream& os) { os << result.gnuplot; });
  return written;
}

}  // namespace floquet_ising
