#pragma once

#include <vector>

#include "diracstep/smooth.hpp"
#include "diracstep/types.hpp"

namespace dstep {

// Controls for the brute-force integration of the two-component Dirac system
//   i theta' = -(p - qA(t)) theta + m phi
//   i phi'   =  (p - qA(t)) phi   + m theta
// from t0 - t_start_sigma*tau to t0 + t_end_sigma*tau. The sigmas must be
// >= 5 so both endpoints sit in the asymptotic regime of the tanh profile
// (sigma = 8 leaves qA within 2.3e-7 * |q dA| of its limit).
struct IntegrationSettings {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double t_start_sigma = 8.0;
  double t_end_sigma = 8.0;
  long max_steps = 2000000;
  double max_dt = 0.0;    // 0 = no cap on the step size
  double fixed_dt = 0.0;  // > 0: fixed-step mode, no error control

  void validate() const;
};

// Accepted integration points of one trajectory (Weyl components).
struct Trajectory {
  std::vector<double> times;
  std::vector<Complex> phi;
  std::vector<Complex> theta;
};

// Integrate with the incident-wave initial condition (unit Weyl amplitude)
// at t0 - sigma*tau. The momentum p enters only as the fixed parameter in
// qA(t); it is never evolved.
Trajectory integrate(const SmoothStepConfig& config,
                     const IntegrationSettings& settings = {});

struct ExtractedAmplitudes {
  Complex g_forward{};
  Complex g_backward{};
};

// Expand the trajectory endpoint in the two later-medium eigen-solutions
// (frequencies -/+ E2 with Weyl spinors (1, (E2 -/+ (p-qA2))/m) up to sign)
// and strip the e^{ -/+ i E2 (t - t0)} phases.
ExtractedAmplitudes extract_amplitudes(const Trajectory& trajectory,
                                       const SmoothStepConfig& config);

// Probabilities from the extracted amplitudes, weighted so that they match
// the closed-form convention (weights (m + E2 - k2)^2 and (m - E2 - k2)^2
// from the Weyl -> Dirac amplitude map; the null step then gives F = 1).
ScatterOutcome oracle_scatter(const SmoothStepConfig& config,
                              const IntegrationSettings& settings = {});

}  // namespace dstep
