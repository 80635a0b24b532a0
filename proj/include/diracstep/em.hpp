#pragma once

#include "diracstep/types.hpp"

namespace dstep {

// Refractive-index pair of a classical nonmagnetic interface, with the
// contrast N = n2/n1 that plays the role Gamma_t plays for the electron.
struct IndexContrast {
  double n1 = 1.0;
  double n2 = 1.0;
  double contrast = 1.0;

  static IndexContrast from_indices(double n1, double n2);
  static IndexContrast from_contrast(double n);  // n1 = 1, n2 = n
};

// Spatial index step: r = (1-N)/(1+N), t = 2/(1+N); R = r^2, T = t^2 N,
// R + T = 1.
ScatterOutcome em_scatter_spatial(const IndexContrast& contrast);

// Temporal index step: f = (1+N)/(2N), b = (N-1)/(2N); the Poynting ratios
// F = f^2/N and B = b^2/N do NOT sum to one (energy is not conserved across a
// temporal interface) and are reported as printed.
ScatterOutcome em_scatter_temporal(const IndexContrast& contrast);

// The formal identity between the quantum temporal amplitudes and the
// electromagnetic ones: N = Gamma_t makes the (f, b) pairs coincide exactly.
IndexContrast quantum_em_formal_map(double gamma_t);

}  // namespace dstep
