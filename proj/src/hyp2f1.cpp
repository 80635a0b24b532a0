#include "diracstep/hyp2f1.hpp"

#include <cmath>

namespace dstep {

namespace {

constexpr long kMaxTerms = 100000;

bool near_nonpositive_integer(Complex c) {
  if (std::fabs(c.imag()) > 1e-12) return false;
  const double n = std::round(c.real());
  return n <= 0.0 && std::fabs(c.real() - n) < 1e-12;
}

// Plain Maclaurin sum with the three-term sustained stopping rule. The term
// ratio approaches z, so the stopping test charges each term with the
// geometric tail factor |z|/(1-|z|) (clamped; irrelevant for the Pfaff-routed
// |z| <= 1/2 calls). Throws ConvergenceError, carrying the partial sum and
// the last relative term, at the iteration cap.
Complex maclaurin_series(Complex a, Complex b, Complex c, Complex z,
                         double tol) {
  const double q = std::abs(z);
  // 4x internal safety so the delivered error sits clearly under tol.
  const double tail =
      4.0 * (q < 1.0 ? std::min(1e6, std::max(1.0, q / (1.0 - q))) : 1e6);
  Complex term(1.0, 0.0);
  Complex sum(1.0, 0.0);
  int quiet = 0;
  for (long k = 0; k < kMaxTerms; ++k) {
    const double kd = static_cast<double>(k);
    const Complex ck = c + kd;
    term *= (a + kd) * (b + kd) / (ck * (kd + 1.0)) * z;
    sum += term;
    if (std::abs(term) * tail <= tol * std::abs(sum)) {
      if (++quiet >= 3) return sum;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("hyp2f1: series did not converge within 100000 terms",
                         sum, std::abs(term) / std::abs(sum));
}

}  // namespace

Complex hyp2f1(const Hyp2F1Params& params, double tol) {
  if (!(tol >= 1e-16 && tol <= 1e-6))
    throw DomainError("hyp2f1: tol outside [1e-16, 1e-6]");
  if (near_nonpositive_integer(params.c))
    throw DomainError("hyp2f1: c at a non-positive integer pole");
  // The Pfaff map keeps the whole left half-plane inside the series disk
  // (|z/(z-1)| < 1 iff Re z < 1/2), so only Re(z) >= 0 needs |z| <= 1.
  if (params.z.real() >= 0.0 && std::abs(params.z) > 1.0 + 1e-14)
    throw DomainError("hyp2f1: |z| > 1 outside the series contract");

  const Complex a = params.a, b = params.b, c = params.c, z = params.z;
  if (z == Complex(0.0, 0.0)) return Complex(1.0, 0.0);

  if (z.real() < 0.0) {
    const Complex w = z / (z - 1.0);
    // Transform the parameter that leaves the smaller (a', b') pair; both
    // choices are the same Pfaff map thanks to the a<->b symmetry.
    const double keep_a = std::max(std::abs(a), std::abs(c - b));
    const double keep_b = std::max(std::abs(b), std::abs(c - a));
    Complex head = a, tail = c - b;
    if (keep_b < keep_a) {
      head = b;
      tail = c - a;
    }
    const Complex prefactor = std::pow(1.0 - z, -head);
    return prefactor * maclaurin_series(head, tail, c, w, tol);
  }
  return maclaurin_series(a, b, c, z, tol);
}

Complex hyp2f1_derivative(const Hyp2F1Params& params, double tol) {
  const Complex scale = params.a * params.b / params.c;
  Hyp2F1Params shifted{params.a + 1.0, params.b + 1.0, params.c + 1.0,
                       params.z};
  return scale * hyp2f1(shifted, tol);
}

}  // namespace dstep
