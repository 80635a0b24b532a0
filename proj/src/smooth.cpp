#include "diracstep/smooth.hpp"

#include <cmath>

#include "diracstep/hyp2f1.hpp"

namespace dstep {

namespace {

constexpr double kHypTol = 1e-12;

// zeta is always a negative real here; powers use log(zeta) = log|zeta| + i pi,
// i.e. (-1)^a = e^{i pi a}.
Complex zeta_power(double log_abs_zeta, Complex exponent) {
  return std::exp(exponent * Complex(log_abs_zeta, M_PI));
}

struct Mixer {
  Complex x1, x2;  // earlier side: phi and theta coefficients of C2
  Complex y3, z3;  // later side, C3 column
  Complex y4, z4;  // later side, C4 column
};

// The reduced boundary-matching system at t0 (zeta = -1 on both charts). All
// exponential prefactors and the common 2^(nu-1) are already divided out.
Mixer matching_mixer(const SmoothStepConfig& c) {
  const MatchingBlocks mb = matching_blocks(c);
  const double m = c.mass;
  const auto& f = mb.f;
  const auto& d = mb.d;
  Mixer mx;
  mx.x1 = (2.0 * m + d[0]) * f[0] - d[1] * f[1];
  mx.x2 = (2.0 * m - d[0]) * f[0] + d[1] * f[1];
  mx.y3 = (2.0 * m + d[2]) * f[2] + d[3] * f[3];
  mx.z3 = (2.0 * m - d[2]) * f[2] - d[3] * f[3];
  mx.y4 = (2.0 * m - d[4]) * f[4] + d[5] * f[5];
  mx.z4 = (2.0 * m + d[4]) * f[4] - d[5] * f[5];
  return mx;
}

}  // namespace

void SmoothStepConfig::validate() const {
  if (!(tau > 0.0)) throw DomainError("SmoothStepConfig: tau must be positive");
  if (!(mass > 0.0)) throw DomainError("SmoothStepConfig: mass must be positive");
}

double SmoothStepConfig::earlier_energy() const {
  const double k = momentum - qa1;
  return std::sqrt(k * k + mass * mass);
}

double SmoothStepConfig::later_energy() const {
  const double k = momentum - qa2;
  return std::sqrt(k * k + mass * mass);
}

double potential_at(const SmoothStepConfig& config, double t) {
  return config.qa1 +
         0.5 * (config.qa2 - config.qa1) *
             (1.0 + std::tanh((t - config.t0) / config.tau));
}

double field_at(const SmoothStepConfig& config, double t) {
  const double s = 1.0 / std::cosh((t - config.t0) / config.tau);
  return -(config.qa2 - config.qa1) / (2.0 * config.tau) * s * s;
}

HypergeomExponents exponents(const SmoothStepConfig& config) {
  config.validate();
  const double e1 = config.earlier_energy();
  const double e2 = config.later_energy();
  const double da = config.qa2 - config.qa1;
  const double half_tau = 0.5 * config.tau;

  HypergeomExponents e;
  e.mu = Complex(0.0, half_tau * e1);
  e.nu = Complex(0.0, half_tau * da);
  e.lambda = Complex(0.0, half_tau * e2);
  e.alpha1 = Complex(half_tau * half_tau * e1 * e1, 0.0);
  e.alpha2 = Complex(half_tau * half_tau * e2 * e2, 0.0);
  e.alpha0 = -Complex(half_tau * half_tau, 0.0) *
                 Complex(e1 * e1 + e2 * e2 - da * da, 0.0) +
             Complex(0.0, half_tau * da);
  return e;
}

MatchingBlocks matching_blocks(const SmoothStepConfig& config) {
  config.validate();
  const HypergeomExponents e = exponents(config);
  const Complex mu = e.mu, nu = e.nu, lam = e.lambda;
  const double k1 = config.momentum - config.qa1;
  const double k2 = config.momentum - config.qa2;
  const double e1 = config.earlier_energy();
  const double e2 = config.later_energy();
  const double da = config.qa2 - config.qa1;
  const Complex minus_one(-1.0, 0.0);
  const Complex i_four_over_tau(0.0, 4.0 / config.tau);

  MatchingBlocks mb;
  const Complex a1 = -mu + nu - lam, b1 = -mu + nu + lam, c1 = 1.0 - 2.0 * mu;
  const Complex a3 = lam + nu - mu, b3 = lam + nu + mu, c3 = 1.0 + 2.0 * lam;
  const Complex a5 = -lam + nu - mu, b5 = -lam + nu + mu, c5 = 1.0 - 2.0 * lam;
  mb.f[0] = hyp2f1({a1, b1, c1, minus_one}, kHypTol);
  mb.f[1] = hyp2f1({a1 + 1.0, b1 + 1.0, c1 + 1.0, minus_one}, kHypTol);
  mb.f[2] = hyp2f1({a3, b3, c3, minus_one}, kHypTol);
  mb.f[3] = hyp2f1({a3 + 1.0, b3 + 1.0, c3 + 1.0, minus_one}, kHypTol);
  mb.f[4] = hyp2f1({a5, b5, c5, minus_one}, kHypTol);
  mb.f[5] = hyp2f1({a5 + 1.0, b5 + 1.0, c5 + 1.0, minus_one}, kHypTol);

  mb.d[0] = Complex(2.0 * e1 - da - k2 - k1, 0.0);
  mb.d[1] = i_four_over_tau * a1 * b1 / c1;
  mb.d[2] = Complex(2.0 * e2 + da - k2 - k1, 0.0);
  mb.d[3] = i_four_over_tau * a3 * b3 / c3;
  mb.d[4] = Complex(2.0 * e2 - da + k2 + k1, 0.0);
  mb.d[5] = i_four_over_tau * a5 * b5 / c5;
  return mb;
}

CoefficientRatios coefficient_ratios(const SmoothStepConfig& config) {
  const Mixer mx = matching_mixer(config);
  const Complex det = mx.y3 * mx.z4 - mx.z3 * mx.y4;
  const double scale =
      std::max(std::abs(mx.y3 * mx.z4), std::abs(mx.z3 * mx.y4));
  if (std::abs(det) < 1e-14 * std::max(scale, 1e-300))
    throw SingularMatchingError(
        "coefficient_ratios: boundary matching system is degenerate");
  CoefficientRatios r;
  r.c3_over_c2_reduced = (mx.x1 * mx.z4 - mx.x2 * mx.y4) / det;
  r.c4_over_c2_reduced = (mx.x2 * mx.y3 - mx.x1 * mx.z3) / det;
  return r;
}

ScatterOutcome smooth_scatter(const SmoothStepConfig& config) {
  const CoefficientRatios cr = coefficient_ratios(config);
  const double m = config.mass;
  const double k1 = config.momentum - config.qa1;
  const double k2 = config.momentum - config.qa2;
  const double e1 = config.earlier_energy();
  const double e2 = config.later_energy();

  const Complex f =
      cr.c3_over_c2_reduced * ((m + e2 - k2) / (m + e1 - k1));
  const Complex b =
      cr.c4_over_c2_reduced * ((m - e2 - k2) / (m + e1 - k1));
  const double nf = std::norm(f);
  const double nb = std::norm(b);

  ScatterOutcome out;
  out.regime = Regime::Propagating;
  out.amp_primary = f;
  out.amp_secondary = b;
  out.prob_primary = nf / (nf + nb);
  out.prob_secondary = nb / (nf + nb);
  out.energy_in = e1;
  out.energy_out = e2;
  out.momentum_in = config.momentum;
  out.momentum_out = Complex(config.momentum, 0.0);
  return out;
}

SpinorSample wavefunction_at(const SmoothStepConfig& config, double t,
                             Side side) {
  config.validate();
  const HypergeomExponents e = exponents(config);
  const Complex mu = e.mu, nu = e.nu, lam = e.lambda;
  const double m = config.mass;
  const double p = config.momentum;
  const double tau = config.tau;
  const double dt = t - config.t0;
  const Complex i_two_over_tau(0.0, 2.0 / tau);

  if (side == Side::Earlier) {
    const double log_u = 2.0 * dt / tau;  // zeta_e = -e^{2 dt / tau}
    if (log_u > 1e-12)
      throw DomainError(
          "wavefunction_at: Earlier chart requires t <= t0 (|zeta| <= 1)");
    const double u = std::exp(log_u);
    const Complex zeta(-u, 0.0);
    const Complex a = -mu + nu - lam, b = -mu + nu + lam, c = 1.0 - 2.0 * mu;
    const Complex f1 = hyp2f1({a, b, c, zeta}, kHypTol);
    const Complex f2 = hyp2f1({a + 1.0, b + 1.0, c + 1.0, zeta}, kHypTol);
    const Complex k2c = a * b / c;
    const Complex zm = zeta_power(log_u, -mu);
    const Complex one_minus = 1.0 + u;  // 1 - zeta, positive real
    const Complex on = std::pow(one_minus, nu);
    const Complex onm = std::pow(one_minus, nu - 1.0);
    const double abar = p - (config.qa1 + config.qa2 * u) / (1.0 + u);

    SpinorSample s;
    s.representation = Representation::Weyl;
    s.phi = zm * on * f1;
    s.theta = (1.0 / m) * (-i_two_over_tau * mu * zm * on * f1 -
                           i_two_over_tau * nu * (zeta * zm) * onm * f1 +
                           i_two_over_tau * (zeta * zm) * on * k2c * f2 -
                           abar * zm * on * f1);
    return s;
  }

  // Later chart: zeta_l = -e^{-2 dt / tau}
  const double log_u = -2.0 * dt / tau;
  if (log_u > 1e-12)
    throw DomainError(
        "wavefunction_at: Later chart requires t >= t0 (|zeta| <= 1)");
  const double u = std::exp(log_u);
  const Complex zeta(-u, 0.0);
  const double e1 = config.earlier_energy();
  const double e2 = config.later_energy();
  const CoefficientRatios cr = coefficient_ratios(config);
  // True ratios: reinstate the exponential prefactors. Overflows for
  // tau*(E1+E2) of order 10^3; the scattering path never needs them.
  const Complex c3 = cr.c3_over_c2_reduced *
                     std::exp(Complex(M_PI * tau * (e1 + e2) / 2.0, 0.0));
  const Complex c4 = cr.c4_over_c2_reduced *
                     std::exp(Complex(M_PI * tau * (e1 - e2) / 2.0, 0.0));

  const Complex a3 = lam + nu - mu, b3 = lam + nu + mu, cc3 = 1.0 + 2.0 * lam;
  const Complex a5 = -lam + nu - mu, b5 = -lam + nu + mu, cc5 = 1.0 - 2.0 * lam;
  const Complex f3 = hyp2f1({a3, b3, cc3, zeta}, kHypTol);
  const Complex f4 = hyp2f1({a3 + 1.0, b3 + 1.0, cc3 + 1.0, zeta}, kHypTol);
  const Complex f5 = hyp2f1({a5, b5, cc5, zeta}, kHypTol);
  const Complex f6 = hyp2f1({a5 + 1.0, b5 + 1.0, cc5 + 1.0, zeta}, kHypTol);
  const Complex k4c = a3 * b3 / cc3;
  const Complex k6c = a5 * b5 / cc5;
  const Complex zp = zeta_power(log_u, lam);
  const Complex zm = zeta_power(log_u, -lam);
  const Complex one_minus = 1.0 + u;
  const Complex on = std::pow(one_minus, nu);
  const Complex onm = std::pow(one_minus, nu - 1.0);
  const double abar = p - (config.qa2 + config.qa1 * u) / (1.0 + u);

  SpinorSample s;
  s.representation = Representation::Weyl;
  s.phi = c3 * zp * on * f3 + c4 * zm * on * f5;
  s.theta = (c3 / m) * (-i_two_over_tau * lam * zp * on * f3 +
                        i_two_over_tau * nu * (zeta * zp) * onm * f3 -
                        i_two_over_tau * (zeta * zp) * on * k4c * f4 -
                        abar * zp * on * f3) +
            (c4 / m) * (i_two_over_tau * lam * zm * on * f5 +
                        i_two_over_tau * nu * (zeta * zm) * onm * f5 -
                        i_two_over_tau * (zeta * zm) * on * k6c * f6 -
                        abar * zm * on * f5);
  return s;
}

SpinorSample weyl_to_dirac(const SpinorSample& sample) {
  if (sample.representation != Representation::Weyl)
    throw UsageError("weyl_to_dirac: input is not in the Weyl representation");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return {(sample.phi + sample.theta) * inv_sqrt2,
          (sample.phi - sample.theta) * inv_sqrt2,
          Representation::DiracPauli};
}

SpinorSample dirac_to_weyl(const SpinorSample& sample) {
  if (sample.representation != Representation::DiracPauli)
    throw UsageError("dirac_to_weyl: input is not in the Dirac representation");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return {(sample.phi + sample.theta) * inv_sqrt2,
          (sample.phi - sample.theta) * inv_sqrt2,
          Representation::Weyl};
}

}  // namespace dstep
