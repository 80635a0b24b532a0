#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "diracstep/hyp2f1.hpp"
#include "doctest.h"
#include "test_util.hpp"

using dstep::Complex;
using dstep::Hyp2F1Params;
using dstep::hyp2f1;
using dstep::hyp2f1_derivative;

namespace {

// Brute-force oracle: plain term-by-term summation of the defining series,
// independent of the Pfaff-routed production path. For |z| = 1 with
// Re(c-a-b) > 0 the terms decay like k^(-1-Re(c-a-b)) and eventually
// alternate, so the plain partial sum after n terms is good to about the
// first omitted term; the tail-averaged variant kills the leading
// oscillation for the tighter comparisons.
Complex reference_series(Complex a, Complex b, Complex c, Complex z, long n,
                         bool average_tail = false) {
  Complex term(1.0, 0.0);
  Complex sum = term;
  Complex prev = sum;
  for (long k = 0; k < n; ++k) {
    const double kd = static_cast<double>(k);
    term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
    prev = sum;
    sum += term;
  }
  return average_tail ? 0.5 * (sum + prev) : sum;
}

// The exponent family of the smooth-step solution: purely imaginary
// (mu, nu, lambda) built from momentum, step height and transition constant.
struct Family {
  Complex mu, nu, lambda;
};

Family family_from(double p, double qa2, double tau, double mass = 1.0) {
  const double e1 = std::hypot(p, mass);
  const double e2 = std::hypot(p - qa2, mass);
  return {Complex(0.0, 0.5 * tau * e1), Complex(0.0, 0.5 * tau * qa2),
          Complex(0.0, 0.5 * tau * e2)};
}

}  // namespace

TEST_CASE("series definition at z = 0") {
  CHECK(hyp2f1({Complex(0.3, 1.0), Complex(-2.0, 0.5), Complex(1.1, -0.2),
                Complex(0.0, 0.0)}) == Complex(1.0, 0.0));
  CHECK(hyp2f1({Complex(5.0, 0.0), Complex(7.0, 0.0), Complex(0.5, 0.0),
                Complex(0.0, 0.0)}) == Complex(1.0, 0.0));
}

TEST_CASE("2F1(1,1;2;z) = -log(1-z)/z") {
  const Complex one(1.0, 0.0), two(2.0, 0.0);
  SUBCASE("z = -1 gives log 2") {
    const Complex v = hyp2f1({one, one, two, Complex(-1.0, 0.0)});
    CHECK(testutil::abs_diff(v, Complex(std::log(2.0), 0.0)) < 1e-12);
  }
  SUBCASE("interior points") {
    for (double z : {-0.5, 0.25, 0.5, 0.9}) {
      const Complex v = hyp2f1({one, one, two, Complex(z, 0.0)});
      CHECK(testutil::abs_diff(v, Complex(-std::log1p(-z) / z, 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("smooth-step parameter family at z = -1") {
  // mu = 0.1i, nu = 0.05i, lambda computed from the printed 4-digit E2.
  const Complex mu(0.0, 0.1), nu(0.0, 0.05), lam(0.0, 0.1 * 1.2393 / 2.0);
  const Complex a = -mu + nu - lam, b = -mu + nu + lam, c = 1.0 - 2.0 * mu;
  const Complex z(-1.0, 0.0);
  const Complex v = hyp2f1({a, b, c, z});

  // Frozen from an independent high-precision evaluation.
  const Complex expected(0.9989410942480011, -0.0002128053778151213);
  CHECK(testutil::rel_diff(v, expected) < 1e-12);

  // Raw-series oracle, 1e5 terms.
  const Complex raw = reference_series(a, b, c, z, 100000);
  CHECK(testutil::rel_diff(v, raw) < 1e-10);
}

TEST_CASE("derivative") {
  SUBCASE("z = 0 gives ab/c") {
    const Hyp2F1Params p{Complex(0.7, 0.2), Complex(-1.2, 0.1),
                         Complex(2.0, -0.3), Complex(0.0, 0.0)};
    CHECK(testutil::abs_diff(hyp2f1_derivative(p), p.a * p.b / p.c) < 1e-14);
  }
  SUBCASE("d/dz 2F1(1,1;2;z) at z = -1") {
    const Hyp2F1Params p{Complex(1.0, 0.0), Complex(1.0, 0.0),
                         Complex(2.0, 0.0), Complex(-1.0, 0.0)};
    // Closed form: (2 log 2 - 1)/2.
    const double expected = (2.0 * std::log(2.0) - 1.0) / 2.0;
    CHECK(testutil::abs_diff(hyp2f1_derivative(p), Complex(expected, 0.0)) <
          1e-12);

    // Centered finite difference of the function itself.
    const double h = 1e-5;
    const Complex fp = hyp2f1({p.a, p.b, p.c, Complex(-1.0 + h, 0.0)});
    const Complex fm = hyp2f1({p.a, p.b, p.c, Complex(-1.0 - h, 0.0)});
    CHECK(testutil::abs_diff(hyp2f1_derivative(p), (fp - fm) / (2.0 * h)) <
          1e-8);
  }
  SUBCASE("finite-difference consistency at random interior z") {
    auto gen = testutil::rng(42);
    std::uniform_real_distribution<double> unit(-0.6, 0.6);
    for (int i = 0; i < 25; ++i) {
      const Hyp2F1Params p{Complex(unit(gen), unit(gen)),
                           Complex(unit(gen), unit(gen)),
                           Complex(1.5 + unit(gen), unit(gen)),
                           Complex(unit(gen), 0.0)};
      const double h = 1e-5;
      const Complex fp = hyp2f1({p.a, p.b, p.c, p.z + h});
      const Complex fm = hyp2f1({p.a, p.b, p.c, p.z - h});
      CHECK(testutil::abs_diff(hyp2f1_derivative(p), (fp - fm) / (2.0 * h)) <
            1e-8);
    }
  }
}

TEST_CASE("Pfaff route agrees with the raw series on the parameter family") {
  auto gen = testutil::rng(7);
  std::uniform_real_distribution<double> pd(0.1, 3.0);
  std::uniform_real_distribution<double> ad(-3.0, 3.0);
  std::uniform_real_distribution<double> td(0.02, 1.0);
  const Complex z(-1.0, 0.0);
  for (int i = 0; i < 100; ++i) {
    const Family f = family_from(pd(gen), ad(gen), td(gen));
    // Both c-groups that appear in the boundary matching.
    const Complex sets[2][3] = {
        {-f.mu + f.nu - f.lambda, -f.mu + f.nu + f.lambda, 1.0 - 2.0 * f.mu},
        {f.lambda + f.nu - f.mu, f.lambda + f.nu + f.mu, 1.0 + 2.0 * f.lambda},
    };
    for (const auto& s : sets) {
      // Purely imaginary exponents make Re(c - a - b) = 1 exactly: absolute
      // convergence on |z| = 1 is guaranteed.
      CHECK((s[2] - s[0] - s[1]).real() == doctest::Approx(1.0).epsilon(1e-14));
      const Complex direct = reference_series(s[0], s[1], s[2], z, 100000, true);
      const Complex routed = hyp2f1({s[0], s[1], s[2], z});
      CHECK(testutil::rel_diff(routed, direct) < 1e-12);
    }
  }
}

TEST_CASE("symmetric in a and b") {
  auto gen = testutil::rng(11);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const Complex a(unit(gen), unit(gen));
    const Complex b(unit(gen), unit(gen));
    const Complex c(1.2 + unit(gen) * 0.5, unit(gen));
    for (const Complex z : {Complex(-1.0, 0.0), Complex(0.4, 0.0)}) {
      const Complex ab = hyp2f1({a, b, c, z});
      const Complex ba = hyp2f1({b, a, c, z});
      CHECK(testutil::rel_diff(ab, ba) < 1e-14);
    }
  }
}

TEST_CASE("domain and convergence errors") {
  const Complex one(1.0, 0.0);
  CHECK_THROWS_AS(hyp2f1({one, one, Complex(0.0, 0.0), Complex(0.5, 0.0)}),
                  dstep::DomainError);
  CHECK_THROWS_AS(hyp2f1({one, one, Complex(-3.0, 0.0), Complex(0.5, 0.0)}),
                  dstep::DomainError);
  CHECK_THROWS_AS(hyp2f1({one, one, Complex(2.0, 0.0), Complex(1.5, 0.0)}),
                  dstep::DomainError);
  // The left half-plane is reachable through the Pfaff continuation.
  CHECK(std::abs(hyp2f1({one, one, Complex(2.0, 0.0), Complex(-1.5, 0.0)}) -
                 Complex(-std::log1p(1.5) / -1.5, 0.0)) < 1e-12);
  CHECK_THROWS_AS(hyp2f1({one, one, Complex(2.0, 0.0), Complex(0.5, 0.0)}, 1.0),
                  dstep::DomainError);
  CHECK_THROWS_AS(hyp2f1({one, one, Complex(2.0, 0.0), Complex(0.5, 0.0)}, 0.0),
                  dstep::DomainError);

  // z = 1 with slowly decaying terms exhausts the cap; the error carries the
  // partial sum and an estimate.
  try {
    hyp2f1({one, one, Complex(1.5, 0.0), Complex(1.0, 0.0)});
    FAIL("expected ConvergenceError");
  } catch (const dstep::ConvergenceError& e) {
    CHECK(std::isfinite(e.partial.real()));
    CHECK(e.estimate > 0.0);
  }
}
