#pragma once

#include <array>

#include "diracstep/types.hpp"

namespace dstep {

// Hyperbolic-tangent vector-potential step
//   qA(t) = qa1 + (qa2 - qa1)/2 * (1 + tanh((t - t0)/tau)),
// for a conserved momentum p and mass m, all in natural units. tau is the
// transition constant; the sharp step is its tau -> 0 limit.
struct SmoothStepConfig {
  double qa1 = 0.0;
  double qa2 = 0.0;
  double t0 = 0.0;
  double tau = 1.0;
  double momentum = 0.0;
  double mass = 1.0;

  void validate() const;          // tau > 0, mass > 0
  double earlier_energy() const;  // E1 = sqrt((p - qa1)^2 + m^2)
  double later_energy() const;    // E2 = sqrt((p - qa2)^2 + m^2)
};

// The three purely imaginary exponents of the hypergeometric solution,
//   mu = i tau E1 / 2,  nu = i tau (qa2 - qa1) / 2,  lambda = i tau E2 / 2,
// together with the quadratic-form coefficients they are the square roots of.
struct HypergeomExponents {
  Complex mu{};
  Complex nu{};
  Complex lambda{};
  Complex alpha0{};
  Complex alpha1{};  // (tau/2)^2 E1^2
  Complex alpha2{};  // (tau/2)^2 E2^2
};

// The six 2F1 values at argument -1 and the six linear coefficients entering
// the boundary matching at t0.
struct MatchingBlocks {
  std::array<Complex, 6> f{};
  std::array<Complex, 6> d{};
};

// C3/C2 and C4/C2 with the exponential prefactors e^{+pi tau (E1 +/- E2)/2}
// struck out analytically: they cancel identically against the matching
// factors in f and b, and for tau E of a few hundred the naive factors
// overflow before the cancellation can happen numerically.
struct CoefficientRatios {
  Complex c3_over_c2_reduced{};
  Complex c4_over_c2_reduced{};
};

// Two-component spinor value at one time. The exact solution lives in the
// Weyl representation; weyl_to_dirac maps it to the Dirac-Pauli one.
struct SpinorSample {
  Complex phi{};
  Complex theta{};
  Representation representation = Representation::Weyl;
};

enum class Side { Earlier, Later };

double potential_at(const SmoothStepConfig& config, double t);  // qA(t)

// Coupled electric field qE_z(t) = -d(qA)/dt
//   = -(q dA / (2 tau)) sech^2((t - t0)/tau);
// its integral over all time is -(qa2 - qa1).
double field_at(const SmoothStepConfig& config, double t);

HypergeomExponents exponents(const SmoothStepConfig& config);

MatchingBlocks matching_blocks(const SmoothStepConfig& config);

CoefficientRatios coefficient_ratios(const SmoothStepConfig& config);

// Later-forward/backward amplitudes and probabilities of the smooth step:
// f and b are the reduced ratios times the spinor amplitude factors
// (m + E2 - (p-qa2))/(m + E1 - (p-qa1)) and (m - E2 - (p-qa2))/(m + E1 - (p-qa1)),
// F = |f|^2/(|f|^2+|b|^2), B = 1 - F.
ScatterOutcome smooth_scatter(const SmoothStepConfig& config);

// Exact Weyl-representation solution, normalized to C2 = 1. The Earlier chart
// is valid for t <= t0 and the Later one for t >= t0 (|zeta| <= 1); both
// agree at t0 once the matched ratios are applied.
SpinorSample wavefunction_at(const SmoothStepConfig& config, double t,
                             Side side);

// (phi, theta) -> (phi + theta, phi - theta)/sqrt(2); self-inverse up to the
// representation tag.
SpinorSample weyl_to_dirac(const SpinorSample& sample);
SpinorSample dirac_to_weyl(const SpinorSample& sample);

}  // namespace dstep
