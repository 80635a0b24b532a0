#include "diracstep/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace dstep {

namespace {

using State = std::array<Complex, 2>;  // (phi, theta)

State rhs(const SmoothStepConfig& c, double t, const State& y) {
  const double k = c.momentum - potential_at(c, t);
  const Complex minus_i(0.0, -1.0);
  return {minus_i * (k * y[0] + c.mass * y[1]),
          minus_i * (-k * y[1] + c.mass * y[0])};
}

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// b - b*: coefficients of the embedded error estimate.
constexpr double kE[7] = {71.0 / 57600,    0.0,          -71.0 / 16695,
                          71.0 / 1920,     -17253.0 / 339200,
                          22.0 / 525,      -1.0 / 40};

struct StepResult {
  State y;
  State err;
};

StepResult dopri5_step(const SmoothStepConfig& c, double t, const State& y,
                       double h, const State& k1, State& k7_out) {
  std::array<State, 7> k;
  k[0] = k1;
  for (int stage = 1; stage < 7; ++stage) {
    State acc = y;
    for (int j = 0; j < stage; ++j) {
      if (kA[stage][j] == 0.0) continue;
      acc[0] += h * kA[stage][j] * k[j][0];
      acc[1] += h * kA[stage][j] * k[j][1];
    }
    k[stage] = rhs(c, t + kC[stage] * h, acc);
  }
  StepResult r;
  r.y = y;
  for (int j = 0; j < 6; ++j) {
    if (kA[6][j] == 0.0) continue;
    r.y[0] += h * kA[6][j] * k[j][0];
    r.y[1] += h * kA[6][j] * k[j][1];
  }
  r.err = {0.0, 0.0};
  for (int j = 0; j < 7; ++j) {
    r.err[0] += h * kE[j] * k[j][0];
    r.err[1] += h * kE[j] * k[j][1];
  }
  k7_out = k[6];  // FSAL: the last stage is the derivative at (t+h, y_new)
  return r;
}

double error_norm(const State& err, const State& y0, const State& y1,
                  double atol, double rtol) {
  double acc = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double sc =
        atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double e = std::abs(err[i]) / sc;
    acc += e * e;
  }
  return std::sqrt(acc / 2.0);
}

}  // namespace

void IntegrationSettings::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw DomainError("IntegrationSettings: tolerances must be positive");
  if (!(t_start_sigma >= 5.0) || !(t_end_sigma >= 5.0))
    throw DomainError("IntegrationSettings: sigmas must be >= 5");
  if (max_steps <= 0)
    throw DomainError("IntegrationSettings: max_steps must be positive");
}

Trajectory integrate(const SmoothStepConfig& config,
                     const IntegrationSettings& settings) {
  config.validate();
  settings.validate();

  const double t_start = config.t0 - settings.t_start_sigma * config.tau;
  const double t_end = config.t0 + settings.t_end_sigma * config.tau;
  const double span = t_end - t_start;

  // Incident asymptotic condition with unit Weyl amplitude.
  const double e1 = config.earlier_energy();
  const double k1 = config.momentum - config.qa1;
  const double dt0 = t_start - config.t0;
  const Complex phase = std::exp(Complex(0.0, -e1 * dt0));
  State y = {phase, ((e1 - k1) / config.mass) * phase};

  Trajectory traj;
  traj.times.push_back(t_start);
  traj.phi.push_back(y[0]);
  traj.theta.push_back(y[1]);

  double t = t_start;
  State k_first = rhs(config, t, y);

  if (settings.fixed_dt > 0.0) {
    double h = settings.fixed_dt;
    long steps = 0;
    while (t < t_end) {
      if (++steps > settings.max_steps)
        throw IntegrationError("integrate: step budget exhausted at t = " +
                               std::to_string(t));
      const double hh = std::min(h, t_end - t);
      State k7;
      StepResult r = dopri5_step(config, t, y, hh, k_first, k7);
      t += hh;
      y = r.y;
      k_first = k7;
      traj.times.push_back(t);
      traj.phi.push_back(y[0]);
      traj.theta.push_back(y[1]);
    }
    return traj;
  }

  double h = span / 100.0;
  if (settings.max_dt > 0.0) h = std::min(h, settings.max_dt);
  long steps = 0;
  while (t < t_end) {
    if (++steps > settings.max_steps)
      throw IntegrationError(
          "integrate: step budget exhausted after " +
          std::to_string(settings.max_steps) + " steps at t = " +
          std::to_string(t));
    h = std::min(h, t_end - t);
    State k7;
    StepResult r = dopri5_step(config, t, y, h, k_first, k7);
    const double err =
        error_norm(r.err, y, r.y, settings.abs_tol, settings.rel_tol);
    if (err <= 1.0) {
      t += h;
      y = r.y;
      k_first = k7;
      traj.times.push_back(t);
      traj.phi.push_back(y[0]);
      traj.theta.push_back(y[1]);
      if (!std::isfinite(std::abs(y[0])) || !std::isfinite(std::abs(y[1])))
        throw IntegrationError("integrate: state became non-finite");
    }
    const double factor =
        std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
    h *= factor;
    if (settings.max_dt > 0.0) h = std::min(h, settings.max_dt);
  }
  return traj;
}

ExtractedAmplitudes extract_amplitudes(const Trajectory& trajectory,
                                       const SmoothStepConfig& config) {
  if (trajectory.times.empty())
    throw ExtractionError("extract_amplitudes: empty trajectory");
  const double t_end = trajectory.times.back();
  const double min_reach = config.t0 + 5.0 * config.tau;
  if (t_end < min_reach - 1e-12)
    throw ExtractionError(
        "extract_amplitudes: trajectory does not reach the later asymptotic "
        "regime");

  const double e2 = config.later_energy();
  const double k2 = config.momentum - config.qa2;
  const double m = config.mass;
  // Weyl eigen-spinors of the constant later medium.
  const double rf = (e2 - k2) / m;   // forward, frequency +E2
  const double rb = -(e2 + k2) / m;  // backward, frequency -E2
  const Complex phi = trajectory.phi.back();
  const Complex theta = trajectory.theta.back();

  const double det = rb - rf;  // = -2 E2 / m, never zero
  const double cond =
      (std::max(1.0, std::fabs(rb)) + std::max(1.0, std::fabs(rf))) *
      (std::max(1.0, std::fabs(rb)) + std::max(1.0, std::fabs(rf))) /
      std::fabs(det);
  if (cond > 1e8)
    throw ExtractionError("extract_amplitudes: eigenbasis is ill-conditioned");

  const Complex u = (rb * phi - theta) / det;  // g_f * e^{-i E2 (t-t0)}
  const Complex v = (theta - rf * phi) / det;  // g_b * e^{+i E2 (t-t0)}
  const double dt = t_end - config.t0;
  ExtractedAmplitudes g;
  g.g_forward = u * std::exp(Complex(0.0, e2 * dt));
  g.g_backward = v * std::exp(Complex(0.0, -e2 * dt));
  return g;
}

ScatterOutcome oracle_scatter(const SmoothStepConfig& config,
                              const IntegrationSettings& settings) {
  const Trajectory traj = integrate(config, settings);
  const ExtractedAmplitudes g = extract_amplitudes(traj, config);

  const double m = config.mass;
  const double e2 = config.later_energy();
  const double k2 = config.momentum - config.qa2;
  const double wf = (m + e2 - k2) * (m + e2 - k2);
  const double wb = (m - e2 - k2) * (m - e2 - k2);
  const double pf = std::norm(g.g_forward) * wf;
  const double pb = std::norm(g.g_backward) * wb;

  ScatterOutcome out;
  out.regime = Regime::Propagating;
  out.amp_primary = g.g_forward;
  out.amp_secondary = g.g_backward;
  out.prob_primary = pf / (pf + pb);
  out.prob_secondary = pb / (pf + pb);
  out.energy_in = config.earlier_energy();
  out.energy_out = e2;
  out.momentum_in = config.momentum;
  out.momentum_out = Complex(config.momentum, 0.0);
  return out;
}

}  // namespace dstep
