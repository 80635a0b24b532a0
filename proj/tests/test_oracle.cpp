#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "diracstep/oracle.hpp"
#include "diracstep/sharp.hpp"
#include "diracstep/smooth.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace dstep;

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

SmoothStepConfig config_for(double qa2, double tau, double e_over_m = 2.0) {
  SmoothStepConfig c;
  c.qa2 = qa2;
  c.tau = tau;
  c.momentum = std::sqrt(e_over_m * e_over_m - 1.0);
  return c;
}

}  // namespace

TEST_CASE("settings validation") {
  IntegrationSettings s;
  s.t_start_sigma = 4.0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = {};
  s.rel_tol = 0.0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = {};
  s.max_steps = 0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  CHECK_NOTHROW(IntegrationSettings{}.validate());
}

TEST_CASE("null step stays a pure phase") {
  const auto traj = integrate(config_for(0.0, 0.2));
  for (size_t i = 0; i < traj.times.size(); ++i) {
    // Unit Weyl spinor norm is (E1 + k1)/... constant; phi alone has
    // constant modulus 1 for the incident normalization.
    CHECK(std::fabs(std::abs(traj.phi[i]) - 1.0) < 1e-9);
  }
}

TEST_CASE("trajectory matches the closed-form wavefunction") {
  const auto c = config_for(1.0, 0.1);
  IntegrationSettings s;
  s.rel_tol = 1e-12;
  s.abs_tol = 1e-14;
  s.max_dt = 0.25 * c.tau;  // enough interior samples
  const auto traj = integrate(c, s);
  REQUIRE(traj.times.size() >= 40);

  // The integrator normalization differs from the exact solution (C2 = 1)
  // by the constant e^{pi tau E1 / 2}.
  const double scale = std::exp(M_PI * c.tau * c.earlier_energy() / 2.0);
  int compared = 0;
  for (size_t i = 0; i < traj.times.size(); ++i) {
    const double t = traj.times[i];
    if (std::fabs(t - c.t0) > 6.0 * c.tau) continue;  // stay inside the charts
    const auto w = wavefunction_at(
        c, t, t <= c.t0 ? Side::Earlier : Side::Later);
    CHECK(testutil::abs_diff(scale * traj.phi[i], w.phi) < 1e-8);
    CHECK(testutil::abs_diff(scale * traj.theta[i], w.theta) < 1e-8);
    ++compared;
  }
  CHECK(compared >= 20);
}

TEST_CASE("halving the tolerances is stable") {
  const auto c = config_for(2.0, 0.3);
  IntegrationSettings s;
  s.rel_tol = 1e-8;
  s.abs_tol = 1e-10;
  const auto t1 = integrate(c, s);
  s.rel_tol /= 2.0;
  s.abs_tol /= 2.0;
  const auto t2 = integrate(c, s);
  CHECK(testutil::abs_diff(t1.phi.back(), t2.phi.back()) < 10.0 * 1e-8);
  CHECK(testutil::abs_diff(t1.theta.back(), t2.theta.back()) < 10.0 * 1e-8);
}

TEST_CASE("amplitude extraction") {
  SUBCASE("null step") {
    const auto c = config_for(0.0, 0.2);
    const auto traj = integrate(c);
    const auto g = extract_amplitudes(traj, c);
    CHECK(std::abs(g.g_backward) < 1e-9);
    CHECK(std::fabs(std::abs(g.g_forward) - 1.0) < 1e-9);
  }
  SUBCASE("two distinct late times agree") {
    const auto c = config_for(1.7, 0.15);
    IntegrationSettings s;
    const auto g1 = extract_amplitudes(integrate(c, s), c);
    s.t_end_sigma = 11.0;
    const auto g2 = extract_amplitudes(integrate(c, s), c);
    CHECK(testutil::abs_diff(g1.g_forward, g2.g_forward) < 1e-8);
    CHECK(testutil::abs_diff(g1.g_backward, g2.g_backward) < 1e-8);
  }
  SUBCASE("empty trajectory") {
    CHECK_THROWS_AS(extract_amplitudes(Trajectory{}, config_for(1.0, 0.1)),
                    ExtractionError);
  }
}

TEST_CASE("oracle probabilities match the closed form") {
  const auto c = config_for(1.0, 0.1);
  const auto closed = smooth_scatter(c);
  const auto oracle = oracle_scatter(c);
  CHECK(std::fabs(oracle.prob_primary - closed.prob_primary) < 1e-8);
  CHECK(std::fabs(oracle.prob_primary - 0.9956422221462982) < 1e-8);
}

TEST_CASE("oracle agrees with the sharp step as tau -> 0") {
  const auto o = oracle_scatter(config_for(1.0, 1e-3));
  const auto sharp = scatter_vector_temporal(2.0, 0.0, 1.0, 1.0);
  CHECK(std::fabs(o.prob_primary - sharp.prob_primary) < 1e-4);

  // Equal split at twice the incident momentum.
  const auto cross = oracle_scatter(config_for(2.0 * kSqrt3, 1e-3));
  CHECK(std::fabs(cross.prob_primary - 0.5) < 1e-3);
  CHECK(std::fabs(cross.prob_secondary - 0.5) < 1e-3);
}

TEST_CASE("slow transition suppresses back-scattering") {
  const auto o = oracle_scatter(config_for(2.0, 2.0 * M_PI));
  CHECK(o.prob_secondary <= 0.01);
}

TEST_CASE("closed form vs oracle on a parameter subgrid") {
  for (double qa2 : {0.5, 2.0, 3.5}) {
    for (double tau : {0.01, 0.3, 3.0}) {
      const auto c = config_for(qa2, tau);
      const auto closed = smooth_scatter(c);
      const auto oracle = oracle_scatter(c);
      CHECK(std::fabs(closed.prob_primary - oracle.prob_primary) < 1e-6);
    }
  }
}

TEST_CASE("fixed-step convergence matches the scheme order") {
  const auto c = config_for(1.0, 0.3);
  IntegrationSettings tight;
  tight.rel_tol = 1e-13;
  tight.abs_tol = 1e-14;
  const auto ref = integrate(c, tight).phi.back();

  double errs[3];
  const double hs[3] = {0.04, 0.02, 0.01};
  for (int i = 0; i < 3; ++i) {
    IntegrationSettings s;
    s.fixed_dt = hs[i];
    errs[i] = std::abs(integrate(c, s).phi.back() - ref);
  }
  const double slope1 = std::log2(errs[0] / errs[1]);
  const double slope2 = std::log2(errs[1] / errs[2]);
  const double slope = 0.5 * (slope1 + slope2);
  CHECK(slope > 4.5);
  CHECK(slope < 5.5);
}

TEST_CASE("second-order form holds along the trajectory") {
  // phi'' + [(p - qA)^2 + m^2 - i (qA)'] phi = 0, with the derivatives taken
  // numerically from a uniform-step trajectory.
  const auto c = config_for(1.0, 0.1);
  IntegrationSettings s;
  s.fixed_dt = 5e-5;
  const auto traj = integrate(c, s);
  double max_residual = 0.0;
  const double h = s.fixed_dt;
  for (size_t i = 1; i + 1 < traj.times.size(); i += 37) {
    if (std::fabs(traj.times[i + 1] - traj.times[i] - h) > 1e-12) continue;
    const Complex d2 =
        (traj.phi[i + 1] - 2.0 * traj.phi[i] + traj.phi[i - 1]) / (h * h);
    const double k = c.momentum - potential_at(c, traj.times[i]);
    const Complex coeff =
        Complex(k * k + c.mass * c.mass, 0.0) - Complex(0.0, -field_at(c, traj.times[i]));
    max_residual = std::max(max_residual, std::abs(d2 + coeff * traj.phi[i]));
  }
  CHECK(max_residual < 1e-6);
}

TEST_CASE("integration failure reporting") {
  const auto c = config_for(1.0, 0.1);
  IntegrationSettings s;
  s.max_steps = 3;
  CHECK_THROWS_AS(integrate(c, s), IntegrationError);
}

TEST_CASE("repeat runs are bit-identical") {
  const auto c = config_for(1.3, 0.2);
  const auto a = integrate(c);
  const auto b = integrate(c);
  REQUIRE(a.times.size() == b.times.size());
  CHECK(a.phi.back() == b.phi.back());
  CHECK(a.theta.back() == b.theta.back());
}
