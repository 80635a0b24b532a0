#include "diracstep/em.hpp"

#include <cmath>

namespace dstep {

IndexContrast IndexContrast::from_indices(double n1, double n2) {
  if (!(n1 > 0.0) || !(n2 > 0.0))
    throw DomainError("IndexContrast: refractive indices must be positive");
  return {n1, n2, n2 / n1};
}

IndexContrast IndexContrast::from_contrast(double n) {
  return from_indices(1.0, n);
}

ScatterOutcome em_scatter_spatial(const IndexContrast& contrast) {
  if (!(contrast.n1 > 0.0) || !(contrast.n2 > 0.0))
    throw DomainError("em_scatter_spatial: refractive indices must be positive");
  const double n = contrast.contrast;

  ScatterOutcome out;
  out.regime = Regime::Propagating;
  out.gamma = Complex(n, 0.0);
  out.amp_secondary = Complex((1.0 - n) / (1.0 + n), 0.0);  // r
  out.amp_primary = Complex(2.0 / (1.0 + n), 0.0);          // t
  out.prob_secondary = std::norm(out.amp_secondary);
  out.prob_primary = std::norm(out.amp_primary) * n;
  return out;
}

ScatterOutcome em_scatter_temporal(const IndexContrast& contrast) {
  if (!(contrast.n1 > 0.0) || !(contrast.n2 > 0.0))
    throw DomainError("em_scatter_temporal: refractive indices must be positive");
  const double n = contrast.contrast;

  ScatterOutcome out;
  out.regime = Regime::Propagating;
  out.gamma = Complex(n, 0.0);
  out.amp_primary = Complex((1.0 + n) / (2.0 * n), 0.0);    // f
  out.amp_secondary = Complex((n - 1.0) / (2.0 * n), 0.0);  // b
  out.prob_primary = std::norm(out.amp_primary) / n;
  out.prob_secondary = std::norm(out.amp_secondary) / n;
  out.prob_normalized = false;  // Poynting ratios, F + B != 1 in general
  return out;
}

IndexContrast quantum_em_formal_map(double gamma_t) {
  if (!(gamma_t > 0.0))
    throw DomainError("quantum_em_formal_map: Gamma_t must be positive");
  return IndexContrast::from_contrast(gamma_t);
}

}  // namespace dstep
