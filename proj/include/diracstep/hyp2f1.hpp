#pragma once

#include "diracstep/types.hpp"

namespace dstep {

// Arguments of a Gauss hypergeometric evaluation 2F1(a, b; c; z).
// Contract: c not at a non-positive integer, |z| <= 1. The physics here only
// needs z in [-1, 0] with small imaginary parameter combinations, plus
// interior real z for cross-checks.
struct Hyp2F1Params {
  Complex a{};
  Complex b{};
  Complex c{};
  Complex z{};
};

// 2F1 with estimated relative error <= tol (tol in [1e-16, 1e-6]).
//
// Strategy: Maclaurin series after a Pfaff transformation for Re(z) < 0,
//   2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)),
// so the series argument at z = -1 has modulus 1/2 and the term ratio is
// asymptotically geometric. The a<->b symmetry is used to transform whichever
// parameter leaves the smaller pair behind. Raw summation at z = -1 would
// converge only like k^(-Re(c-a-b)-1).
Complex hyp2f1(const Hyp2F1Params& params, double tol = 1e-12);

// d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1, b+1; c+1; z)
Complex hyp2f1_derivative(const Hyp2F1Params& params, double tol = 1e-12);

}  // namespace dstep
