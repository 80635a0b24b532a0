#include "diracstep/sharp.hpp"

#include <cmath>

namespace dstep {

namespace {

// Cosmetic float hygiene: tiny negative probabilities from rounding clamp to
// zero; anything larger is a real error and is left alone.
double clamp_probability(double p) {
  if (p < 0.0 && p > -1e-14) return 0.0;
  return p;
}

}  // namespace

DiracSpinorPlaneWave make_plane_wave(double energy, double momentum, double qv,
                                     double qa, double mass) {
  if (!(mass > 0.0)) throw DomainError("make_plane_wave: mass must be positive");
  const double kin = momentum - qa;
  const double w = energy - qv;
  DiracSpinorPlaneWave s;
  s.energy = energy;
  s.momentum = momentum;
  s.representation = Representation::DiracPauli;
  if (std::fabs(kin) < 1e-8) {
    s.third_component_ratio = Complex(kin / (w + mass), 0.0);
  } else {
    s.third_component_ratio = Complex((w - mass) / kin, 0.0);
  }
  return s;
}

double dirac_current_z(const DiracSpinorPlaneWave& spinor, Complex amplitude) {
  return 2.0 * std::norm(amplitude) * spinor.third_component_ratio.real();
}

ScatterOutcome scatter_scalar_spatial(double energy, double qv1, double qv2,
                                      double mass) {
  if (!(mass > 0.0)) throw DomainError("scatter_scalar_spatial: mass must be positive");
  if (!(energy - qv1 > mass))
    throw DomainError("scatter_scalar_spatial: incident wave not propagating");

  const double w1 = energy - qv1;
  const double w2 = energy - qv2;
  const double p_i = std::sqrt(w1 * w1 - mass * mass);
  const double kernel = w2 * w2 - mass * mass;
  if (kernel == 0.0)
    throw BoundaryError("scatter_scalar_spatial: qV2 at E -/+ m, step parameter singular");

  ScatterOutcome out;
  out.energy_in = out.energy_out = energy;
  out.momentum_in = p_i;

  Complex p_t;
  if (qv2 < energy - mass) {
    p_t = Complex(std::sqrt(kernel), 0.0);
    out.regime = Regime::Propagating;
  } else if (qv2 < energy + mass) {
    p_t = Complex(0.0, std::sqrt(-kernel));  // evanescent, decaying for z > z0
    out.regime = Regime::KleinGap;
  } else {
    // Keep the transmitted group velocity positive: p_t takes the negative
    // root beyond the gap.
    p_t = Complex(-std::sqrt(kernel), 0.0);
    out.regime = Regime::KleinRegime;
  }
  out.momentum_out = p_t;

  const Complex gamma = (w2 - mass) * p_i / ((w1 - mass) * p_t);
  out.gamma = gamma;
  const Complex r = (1.0 - gamma) / (1.0 + gamma);
  const Complex t = 2.0 / (1.0 + gamma);
  out.amp_primary = t;
  out.amp_secondary = r;

  if (out.regime == Regime::KleinGap) {
    // |r| = 1 for purely imaginary gamma; T = |t|^2 gamma would be complex,
    // so the probabilities are pinned to total reflection.
    out.prob_secondary = 1.0;
    out.prob_primary = 0.0;
  } else {
    const double big_r = std::norm(r);
    out.prob_secondary = clamp_probability(big_r);
    out.prob_primary = clamp_probability(std::norm(t) * gamma.real());
  }
  return out;
}

ScatterOutcome scatter_scalar_temporal(double e_incident, double qv1,
                                       double qv2, double mass) {
  if (!(mass > 0.0)) throw DomainError("scatter_scalar_temporal: mass must be positive");
  const double w1 = e_incident - qv1;
  if (w1 < mass)
    throw DomainError("scatter_scalar_temporal: incident energy below rest mass");
  const double p = std::sqrt(w1 * w1 - mass * mass);

  ScatterOutcome out;
  out.regime = Regime::NoBackscatter;
  out.amp_primary = Complex(1.0, 0.0);
  out.amp_secondary = Complex(0.0, 0.0);
  out.prob_primary = 1.0;
  out.prob_secondary = 0.0;
  out.gamma = Complex(1.0, 0.0);
  out.energy_in = e_incident;
  out.energy_out = std::sqrt(p * p + mass * mass) + qv2;
  out.momentum_in = p;
  out.momentum_out = Complex(p, 0.0);
  return out;
}

ScatterOutcome scatter_vector_spatial(double energy, double qa1, double qa2,
                                      double mass) {
  if (!(mass > 0.0)) throw DomainError("scatter_vector_spatial: mass must be positive");
  if (!(energy > mass))
    throw DomainError("scatter_vector_spatial: energy must exceed rest mass");
  const double root = std::sqrt(energy * energy - mass * mass);

  ScatterOutcome out;
  out.regime = Regime::NoBackscatter;
  out.amp_primary = Complex(1.0, 0.0);
  out.amp_secondary = Complex(0.0, 0.0);
  out.prob_primary = 1.0;
  out.prob_secondary = 0.0;
  out.gamma = Complex(1.0, 0.0);
  out.energy_in = out.energy_out = energy;
  out.momentum_in = root + qa1;
  out.momentum_out = Complex(root + qa2, 0.0);
  return out;
}

double gamma_t_energy_form(double e_incident, double qa1, double qa2,
                           double mass) {
  const double root = std::sqrt(e_incident * e_incident - mass * mass);
  const double kin2 = root - (qa2 - qa1);
  const double e_f = std::sqrt(kin2 * kin2 + mass * mass);
  return e_f / (kin2 * (e_incident - mass) / root + mass);
}

double gamma_t_momentum_form(double p, double qa1, double qa2, double mass) {
  const double kin1 = p - qa1;
  const double kin2 = p - qa2;
  const double e_i = std::sqrt(kin1 * kin1 + mass * mass);
  const double e_f = std::sqrt(kin2 * kin2 + mass * mass);
  return (e_f / kin2) / ((e_i - mass) / kin1 + mass / kin2);
}

ScatterOutcome scatter_vector_temporal(double e_incident, double qa1,
                                       double qa2, double mass) {
  if (!(mass > 0.0)) throw DomainError("scatter_vector_temporal: mass must be positive");
  if (!(e_incident > mass))
    throw DomainError(
        "scatter_vector_temporal: incident energy must exceed the rest mass "
        "(Gamma_t is singular at zero incident kinetic momentum)");

  const double root = std::sqrt(e_incident * e_incident - mass * mass);
  const double p = root + qa1;
  const double kin2 = p - qa2;
  const double e_f = std::sqrt(kin2 * kin2 + mass * mass);

  // Work with 1/Gamma_t: the crossing point, where the denominator of
  // Gamma_t vanishes and f = b = 1/2, is then an ordinary value.
  const double ginv = (kin2 * (e_incident - mass) / root + mass) / e_f;

  ScatterOutcome out;
  out.regime = Regime::Propagating;
  out.gamma = Complex(e_f / (kin2 * (e_incident - mass) / root + mass), 0.0);
  out.amp_primary = Complex(0.5 * (1.0 + ginv), 0.0);    // f
  out.amp_secondary = Complex(0.5 * (1.0 - ginv), 0.0);  // b
  const double norm = 2.0 * (1.0 + ginv * ginv);
  out.prob_primary = clamp_probability((1.0 + ginv) * (1.0 + ginv) / norm);
  out.prob_secondary = clamp_probability((1.0 - ginv) * (1.0 - ginv) / norm);
  out.energy_in = e_incident;
  out.energy_out = e_f;
  out.momentum_in = p;
  out.momentum_out = Complex(p, 0.0);
  return out;
}

ScatterOutcome scatter(const StepConfig& step, double e_incident, double mass) {
  switch (step.kind) {
    case StepKind::ScalarSpatial:
      return scatter_scalar_spatial(e_incident, step.before, step.after, mass);
    case StepKind::ScalarTemporal:
      return scatter_scalar_temporal(e_incident, step.before, step.after, mass);
    case StepKind::VectorSpatial:
      return scatter_vector_spatial(e_incident, step.before, step.after, mass);
    case StepKind::VectorTemporal:
      return scatter_vector_temporal(e_incident, step.before, step.after, mass);
  }
  throw UsageError("scatter: unknown step kind");
}

ScatterOutcome scatter_nonrel_spatial(double e_nonrel, double qv1, double qv2,
                                      double mass) {
  if (!(mass > 0.0)) throw DomainError("scatter_nonrel_spatial: mass must be positive");
  if (!(e_nonrel > qv1) || !(e_nonrel > qv2))
    throw DomainError("scatter_nonrel_spatial: evanescent side not modeled");
  const double k1 = std::sqrt(2.0 * mass * (e_nonrel - qv1));
  const double k2 = std::sqrt(2.0 * mass * (e_nonrel - qv2));

  ScatterOutcome out;
  out.regime = Regime::Propagating;
  out.gamma = Complex(k2 / k1, 0.0);
  out.amp_secondary = Complex((k1 - k2) / (k1 + k2), 0.0);  // r
  out.amp_primary = Complex(2.0 * k1 / (k1 + k2), 0.0);     // t
  out.prob_secondary = std::norm(out.amp_secondary);
  out.prob_primary = std::norm(out.amp_primary) * (k2 / k1);
  out.energy_in = out.energy_out = e_nonrel;
  out.momentum_in = k1;
  out.momentum_out = Complex(k2, 0.0);
  return out;
}

ScatterOutcome scatter_nonrel_temporal() {
  ScatterOutcome out;
  out.regime = Regime::NoBackscatter;
  out.amp_primary = Complex(1.0, 0.0);
  out.amp_secondary = Complex(0.0, 0.0);
  out.prob_primary = 1.0;
  out.prob_secondary = 0.0;
  out.gamma = Complex(1.0, 0.0);
  return out;
}

}  // namespace dstep
