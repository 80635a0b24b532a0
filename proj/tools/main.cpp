// Command-line workbench for step-discontinuity electron scattering: grid
// scans over potential strength for the sharp and smooth steps, their
// electromagnetic analogs, dispersion/transition curves, closed-form vs
// ODE-oracle comparisons, and a physical-constants report. Emits CSV or JSON;
// output is deterministic (no timestamps), so identical requests produce
// byte-identical files.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "diracstep.h"
#include "json.hpp"

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

enum class Mode {
  SharpSpatial,
  SharpTemporal,
  EmSpatial,
  EmTemporal,
  Smooth,
  Dispersion,
  OracleCompare,
  Constants,
};

struct Request {
  Mode mode = Mode::SharpTemporal;
  double energy_ratio = 2.0;
  double grid_min = 0.0;
  double grid_max = 5.0;
  long points = 101;
  std::vector<double> taus;
  std::string format = "csv";
  std::string out = "-";
  double threshold = 1e-6;
  unsigned jobs = 1;
};

struct Row {
  std::vector<double> nums;  // NaN marks an empty cell
  std::string regime;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<Row> rows;
};

const char* regime_name(int regime) {
  switch (regime) {
    case DSTEP_REGIME_PROPAGATING: return "propagating";
    case DSTEP_REGIME_KLEIN_GAP: return "klein_gap";
    case DSTEP_REGIME_KLEIN: return "klein_regime";
    case DSTEP_REGIME_NO_BACKSCATTER: return "no_backscatter";
  }
  return "unknown";
}

std::string failure_regime(dstep_status status) {
  return status == DSTEP_ERR_BOUNDARY ? "boundary" : "error";
}

std::vector<double> linspace(double lo, double hi, long n) {
  std::vector<double> xs(n);
  for (long i = 0; i < n; ++i)
    xs[i] = n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1);
  return xs;
}

// Static partition of [0, n) over the worker threads; results land by index,
// so the assembly order is independent of scheduling.
template <typename Fn>
void parallel_for(long n, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || n < 2) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  const long chunk = (n + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const long lo = w * chunk;
    const long hi = std::min<long>(n, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([lo, hi, &fn] {
      for (long i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : workers) t.join();
}

Table scan_sharp_spatial(const Request& req) {
  Table t;
  t.columns = {"qV_over_m", "gamma_re", "gamma_im", "r_re", "r_im",
               "t_re",      "t_im",     "R",        "T",    "p_t_re",
               "p_t_im",    "regime"};
  const auto xs = linspace(req.grid_min, req.grid_max, req.points);
  t.rows.resize(xs.size());
  parallel_for(xs.size(), req.jobs, [&](long i) {
    const double x = xs[i];
    dstep_scatter_outcome o;
    const auto st =
        dstep_scatter_scalar_spatial(req.energy_ratio, 0.0, x, 1.0, &o);
    Row& row = t.rows[i];
    if (st != DSTEP_OK) {
      row.nums = {x, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN,
                  kNaN};
      row.regime = failure_regime(st);
      return;
    }
    row.nums = {x,
                o.gamma.re,
                o.gamma.im,
                o.amp_secondary.re,
                o.amp_secondary.im,
                o.amp_primary.re,
                o.amp_primary.im,
                o.prob_secondary,
                o.prob_primary,
                o.momentum_out.re,
                o.momentum_out.im};
    row.regime = regime_name(o.regime);
  });
  return t;
}

Table scan_sharp_temporal(const Request& req) {
  Table t;
  t.columns = {"qA_over_m", "gamma_re", "gamma_im", "f_re",       "f_im",
               "b_re",      "b_im",     "F",        "B",          "E_f_over_m",
               "regime"};
  const auto xs = linspace(req.grid_min, req.grid_max, req.points);
  t.rows.resize(xs.size());
  parallel_for(xs.size(), req.jobs, [&](long i) {
    const double x = xs[i];
    dstep_scatter_outcome o;
    const auto st =
        dstep_scatter_vector_temporal(req.energy_ratio, 0.0, x, 1.0, &o);
    Row& row = t.rows[i];
    if (st != DSTEP_OK) {
      row.nums = {x, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
      row.regime = failure_regime(st);
      return;
    }
    row.nums = {x,
                o.gamma.re,
                o.gamma.im,
                o.amp_primary.re,
                o.amp_primary.im,
                o.amp_secondary.re,
                o.amp_secondary.im,
                o.prob_primary,
                o.prob_secondary,
                o.energy_out};
    row.regime = regime_name(o.regime);
  });
  return t;
}

Table scan_em(const Request& req, bool temporal) {
  Table t;
  t.columns = temporal
                  ? std::vector<std::string>{"N", "f", "b", "F", "B", "regime"}
                  : std::vector<std::string>{"N", "r", "t", "R", "T", "regime"};
  const auto xs = linspace(req.grid_min, req.grid_max, req.points);
  t.rows.resize(xs.size());
  parallel_for(xs.size(), req.jobs, [&](long i) {
    const double n = xs[i];
    dstep_scatter_outcome o;
    const auto st = temporal ? dstep_em_scatter_temporal(1.0, n, &o)
                             : dstep_em_scatter_spatial(1.0, n, &o);
    Row& row = t.rows[i];
    if (st != DSTEP_OK) {
      row.nums = {n, kNaN, kNaN, kNaN, kNaN};
      row.regime = failure_regime(st);
      return;
    }
    if (temporal) {
      row.nums = {n, o.amp_primary.re, o.amp_secondary.re, o.prob_primary,
                  o.prob_secondary};
    } else {
      row.nums = {n, o.amp_secondary.re, o.amp_primary.re, o.prob_secondary,
                  o.prob_primary};
    }
    row.regime = regime_name(o.regime);
  });
  return t;
}

Table scan_smooth(const Request& req) {
  Table t;
  t.columns = {"tau",  "qA_over_m", "f_re", "f_im", "b_re",
               "b_im", "F",         "B",    "regime"};
  const auto xs = linspace(req.grid_min, req.grid_max, req.points);
  const long n_rows = static_cast<long>(req.taus.size()) * req.points;
  t.rows.resize(n_rows);
  const double p = std::sqrt(req.energy_ratio * req.energy_ratio - 1.0);
  parallel_for(n_rows, req.jobs, [&](long i) {
    const double tau = req.taus[i / req.points];
    const double x = xs[i % req.points];
    const dstep_smooth_config cfg{0.0, x, 0.0, tau, p, 1.0};
    dstep_scatter_outcome o;
    const auto st = dstep_smooth_scatter(&cfg, &o);
    Row& row = t.rows[i];
    if (st != DSTEP_OK) {
      row.nums = {tau, x, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
      row.regime = failure_regime(st);
      return;
    }
    row.nums = {tau,
                x,
                o.amp_primary.re,
                o.amp_primary.im,
                o.amp_secondary.re,
                o.amp_secondary.im,
                o.prob_primary,
                o.prob_secondary};
    row.regime = regime_name(o.regime);
  });
  return t;
}

Table scan_dispersion(const Request& req) {
  Table t;
  t.columns = {"q_step_over_m", "E_f_over_m", "E_b_over_m", "p_t_re",
               "p_t_im",        "v_p_f",      "v_g_f",      "regime"};
  const auto xs = linspace(req.grid_min, req.grid_max, req.points);
  t.rows.resize(xs.size());
  const double e = req.energy_ratio;
  const double p = std::sqrt(e * e - 1.0);
  parallel_for(xs.size(), req.jobs, [&](long i) {
    const double x = xs[i];
    Row& row = t.rows[i];
    double ef = kNaN, eb = kNaN;
    dstep_temporal_transition(e, x, 1.0, &ef, &eb);
    // Spatial-step momentum transformation at the same coupled strength:
    // the PotentialPoint stores raw V with q = -1, so qV = x means v = -x.
    dstep_complex pt{kNaN, kNaN};
    int evan = 0;
    dstep_momentum_from_energy(e, -x, 0.0, -1.0, 1.0, +1, &pt, &evan);
    double vp = kNaN, vg = kNaN;
    dstep_phase_velocity(ef, p, &vp);
    dstep_group_velocity(ef, p, 0.0, -x, -1.0, &vg);
    row.nums = {x, ef, eb, pt.re, pt.im, vp, vg};
    row.regime = evan ? "klein_gap" : "propagating";
  });
  return t;
}

Table scan_oracle_compare(const Request& req, double* max_dev) {
  Table t;
  t.columns = {"tau",      "qA_over_m", "F_closed",  "B_closed",
               "F_oracle", "B_oracle",  "abs_dev_F", "regime"};
  const auto xs = linspace(req.grid_min, req.grid_max, req.points);
  const long n_rows = static_cast<long>(req.taus.size()) * req.points;
  t.rows.resize(n_rows);
  const double p = std::sqrt(req.energy_ratio * req.energy_ratio - 1.0);
  parallel_for(n_rows, req.jobs, [&](long i) {
    const double tau = req.taus[i / req.points];
    const double x = xs[i % req.points];
    const dstep_smooth_config cfg{0.0, x, 0.0, tau, p, 1.0};
    dstep_scatter_outcome closed, oracle;
    const auto st1 = dstep_smooth_scatter(&cfg, &closed);
    const auto st2 = dstep_oracle_scatter(&cfg, nullptr, &oracle);
    Row& row = t.rows[i];
    if (st1 != DSTEP_OK || st2 != DSTEP_OK) {
      row.nums = {tau, x, kNaN, kNaN, kNaN, kNaN, kNaN};
      row.regime = failure_regime(st1 != DSTEP_OK ? st1 : st2);
      return;
    }
    row.nums = {tau,
                x,
                closed.prob_primary,
                closed.prob_secondary,
                oracle.prob_primary,
                oracle.prob_secondary,
                std::fabs(closed.prob_primary - oracle.prob_primary)};
    row.regime = regime_name(closed.regime);
  });
  *max_dev = 0.0;
  for (const auto& row : t.rows) {
    if (row.nums.size() >= 7 && std::isfinite(row.nums[6]))
      *max_dev = std::max(*max_dev, row.nums[6]);
  }
  return t;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const Table& t) {
  for (size_t i = 0; i < t.columns.size(); ++i)
    os << t.columns[i] << (i + 1 < t.columns.size() ? "," : "\n");
  for (const auto& row : t.rows) {
    for (double v : row.nums) os << format_double(v) << ",";
    os << row.regime << "\n";
  }
}

void write_json(std::ostream& os, const Request& req, const char* mode_name,
                const Table& t) {
  nlohmann::ordered_json doc;
  doc["mode"] = mode_name;
  doc["energy_ratio"] = req.energy_ratio;
  doc["grid"] = {{"min", req.grid_min},
                 {"max", req.grid_max},
                 {"points", req.points}};
  doc["tau"] = req.taus;
  doc["library_version"] = dstep_version();
  dstep_integration_settings s;
  dstep_integration_settings_default(&s);
  doc["tolerances"] = {{"hyp2f1", 1e-12},
                       {"ode_rel_tol", s.rel_tol},
                       {"ode_abs_tol", s.abs_tol}};
  doc["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::ordered_json::array();
    for (double v : row.nums) {
      if (std::isnan(v))
        r.push_back(nullptr);
      else
        r.push_back(v);
    }
    r.push_back(row.regime);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << "\n";
}

int run_constants(std::ostream& os) {
  dstep_si_constants c;
  dstep_si_constants_get(&c);
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "electron mass        %.9g kg\n"
                "elementary charge    %.9g C\n"
                "speed of light       %.9g m/s\n"
                "Planck constant      %.9g J s\n"
                "hbar                 %.9g J s\n",
                c.electron_mass_kg, c.elementary_charge_C,
                c.speed_of_light_mps, c.planck_Js, c.hbar_Js);
  os << buf;

  double t2 = 0.0, t1 = 0.0;
  dstep_de_broglie_period(2.0, &t2);
  dstep_de_broglie_period(1.0, &t1);
  std::snprintf(buf, sizeof(buf),
                "de Broglie period (E = m c^2)    %.5g s\n"
                "de Broglie period (E = 2 m c^2)  %.5g s\n"
                "de Broglie period (graphene)     %.5g s\n",
                t1, t2, dstep_graphene_de_broglie_period());
  os << buf;

  dstep_energy_comparison r;
  dstep_energy_comparison_example(&r);
  std::snprintf(
      buf, sizeof(buf),
      "worked example: electron at v = c/100 in a 7 V potential\n"
      "  kinetic energy                 %.4g J\n"
      "  potential energy               %.4g J\n"
      "  rest energy                    %.4g J\n"
      "  energy ratio (Ek+Ep)/Em        %.4g\n"
      "  non-relativistic total         %.5g J\n"
      "  relativistic total             %.5g J\n"
      "  relative error                 %.5g\n",
      r.kinetic_energy_J, r.potential_energy_J, r.rest_energy_J,
      r.energy_ratio, r.nonrel_total_J, r.rel_total_J, r.relative_error);
  os << buf;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "diracstep: electron scattering at sharp and smooth potential steps in "
      "space and time"};
  app.get_formatter()->column_width(34);

  Request req;
  std::string mode_str;
  std::string grid_str;
  const std::vector<std::pair<std::string, Mode>> mode_names = {
      {"sharp-spatial", Mode::SharpSpatial},
      {"sharp-temporal", Mode::SharpTemporal},
      {"em-spatial", Mode::EmSpatial},
      {"em-temporal", Mode::EmTemporal},
      {"smooth", Mode::Smooth},
      {"dispersion", Mode::Dispersion},
      {"oracle-compare", Mode::OracleCompare},
      {"constants", Mode::Constants},
  };
  std::string mode_help = "scan mode:";
  for (const auto& m : mode_names) mode_help += " " + m.first;

  app.add_option("--mode", mode_str, mode_help)->required();
  app.add_option("--energy-ratio", req.energy_ratio,
                 "incident E/m (default 2)");
  app.add_option("--grid", grid_str, "grid range min:max");
  app.add_option("--points", req.points, "grid points (default 101)")
      ->check(CLI::Range(2L, 10000000L));
  app.add_option("--tau", req.taus,
                 "transition constant, natural units (repeatable; smooth and "
                 "oracle-compare modes)");
  app.add_option("--format", req.format, "csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", req.out, "output path, - for stdout (default -)");
  app.add_option("--threshold", req.threshold,
                 "oracle-compare failure threshold on max |F_closed - "
                 "F_oracle| (default 1e-6)");
  app.add_option("--jobs", req.jobs, "worker threads for grid points");

  CLI11_PARSE(app, argc, argv);

  const auto mode_it =
      std::find_if(mode_names.begin(), mode_names.end(),
                   [&](const auto& m) { return m.first == mode_str; });
  if (mode_it == mode_names.end()) {
    std::cerr << "unknown mode: " << mode_str << "\n";
    return 1;
  }
  req.mode = mode_it->second;

  // Per-mode grid defaults.
  bool grid_given = !grid_str.empty();
  bool points_given = app.count("--points") > 0;
  if (req.mode == Mode::EmSpatial || req.mode == Mode::EmTemporal) {
    if (!grid_given) {
      req.grid_min = 0.1;
      req.grid_max = 10.0;
    }
  } else if (req.mode == Mode::OracleCompare) {
    if (!grid_given) {
      req.grid_min = 0.5;
      req.grid_max = 3.5;
    }
    if (!points_given) req.points = 5;
    if (req.taus.empty()) req.taus = {0.01, 0.1, 0.3, 1.0, 3.0};
  }
  if (grid_given) {
    const auto colon = grid_str.find(':');
    if (colon == std::string::npos) {
      std::cerr << "--grid expects min:max\n";
      return 1;
    }
    try {
      req.grid_min = std::stod(grid_str.substr(0, colon));
      req.grid_max = std::stod(grid_str.substr(colon + 1));
    } catch (const std::exception&) {
      std::cerr << "--grid expects numeric min:max\n";
      return 1;
    }
  }
  if (!(req.grid_min < req.grid_max)) {
    std::cerr << "--grid requires min < max\n";
    return 1;
  }
  if (req.mode == Mode::Smooth && req.taus.empty()) {
    std::cerr << "smooth mode requires at least one --tau\n";
    return 1;
  }
  if ((req.mode == Mode::SharpSpatial || req.mode == Mode::SharpTemporal ||
       req.mode == Mode::Smooth || req.mode == Mode::Dispersion ||
       req.mode == Mode::OracleCompare) &&
      !(req.energy_ratio > 1.0)) {
    std::cerr << "--energy-ratio must exceed 1 (propagating incident wave)\n";
    return 1;
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (req.out != "-") {
    file.open(req.out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open output file: " << req.out << "\n";
      return 1;
    }
    os = &file;
  }

  if (req.mode == Mode::Constants) return run_constants(*os);

  Table table;
  double max_dev = 0.0;
  switch (req.mode) {
    case Mode::SharpSpatial: table = scan_sharp_spatial(req); break;
    case Mode::SharpTemporal: table = scan_sharp_temporal(req); break;
    case Mode::EmSpatial: table = scan_em(req, false); break;
    case Mode::EmTemporal: table = scan_em(req, true); break;
    case Mode::Smooth: table = scan_smooth(req); break;
    case Mode::Dispersion: table = scan_dispersion(req); break;
    case Mode::OracleCompare: table = scan_oracle_compare(req, &max_dev); break;
    case Mode::Constants: break;
  }

  if (req.format == "csv")
    write_csv(*os, table);
  else
    write_json(*os, req, mode_it->first.c_str(), table);
  os->flush();
  if (file.is_open() && !file) {
    std::cerr << "write failed: " << req.out << "\n";
    return 1;
  }

  if (req.mode == Mode::OracleCompare) {
    std::fprintf(stderr,
                 "oracle-compare: max |F_closed - F_oracle| = %.3e over %zu "
                 "points (threshold %.3e)\n",
                 max_dev, table.rows.size(), req.threshold);
    if (max_dev > req.threshold) return 1;
  }
  return 0;
}
