#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "diracstep/em.hpp"
#include "diracstep/sharp.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace dstep;

TEST_CASE("spatial index step") {
  const auto unity = em_scatter_spatial(IndexContrast::from_contrast(1.0));
  CHECK(unity.amp_secondary == Complex(0.0, 0.0));
  CHECK(unity.amp_primary == Complex(1.0, 0.0));

  const auto out = em_scatter_spatial(IndexContrast::from_contrast(2.0));
  CHECK(out.amp_secondary.real() == doctest::Approx(-1.0 / 3).epsilon(1e-14));
  CHECK(out.amp_primary.real() == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(out.prob_secondary == doctest::Approx(1.0 / 9).epsilon(1e-14));
  CHECK(out.prob_primary == doctest::Approx(8.0 / 9).epsilon(1e-14));
  CHECK(out.prob_normalized);

  // Mirror limit.
  const auto mirror = em_scatter_spatial(IndexContrast::from_contrast(1e9));
  CHECK(mirror.amp_secondary.real() == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK(mirror.prob_secondary == doctest::Approx(1.0).epsilon(1e-8));

  CHECK_THROWS_AS(em_scatter_spatial(IndexContrast::from_contrast(-1.0)),
                  DomainError);
  CHECK_THROWS_AS(IndexContrast::from_indices(0.0, 1.0), DomainError);
}

TEST_CASE("temporal index step") {
  const auto unity = em_scatter_temporal(IndexContrast::from_contrast(1.0));
  CHECK(unity.amp_primary == Complex(1.0, 0.0));
  CHECK(unity.amp_secondary == Complex(0.0, 0.0));

  const auto out = em_scatter_temporal(IndexContrast::from_contrast(2.0));
  CHECK(out.amp_primary.real() == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(out.amp_secondary.real() == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(out.prob_primary == doctest::Approx(9.0 / 32).epsilon(1e-14));
  CHECK(out.prob_secondary == doctest::Approx(1.0 / 32).epsilon(1e-14));
  // Energy is not conserved across a temporal interface: F + B = 5/16 here.
  CHECK_FALSE(out.prob_normalized);
  CHECK(out.prob_primary + out.prob_secondary ==
        doctest::Approx(5.0 / 16).epsilon(1e-14));
}

TEST_CASE("spatial conservation and sum rules") {
  for (double n = 1e-3; n <= 1.0001e3; n *= 1.7) {
    const auto s = em_scatter_spatial(IndexContrast::from_contrast(n));
    CHECK(std::fabs(s.prob_primary + s.prob_secondary - 1.0) < 1e-12);
    CHECK(testutil::abs_diff(Complex(1.0, 0.0) + s.amp_secondary,
                             s.amp_primary) < 1e-12);
    const auto t = em_scatter_temporal(IndexContrast::from_contrast(n));
    CHECK(testutil::abs_diff(t.amp_primary + t.amp_secondary,
                             Complex(1.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("contrast bookkeeping") {
  const auto c = IndexContrast::from_indices(1.5, 2.4);
  CHECK(c.contrast == doctest::Approx(1.6).epsilon(1e-12));
  // Only the contrast matters for the outcomes.
  const auto a = em_scatter_spatial(c);
  const auto b = em_scatter_spatial(IndexContrast::from_contrast(1.6));
  CHECK(testutil::abs_diff(a.amp_secondary, b.amp_secondary) < 1e-14);
}

TEST_CASE("formal map from the quantum temporal step") {
  CHECK_THROWS_AS(quantum_em_formal_map(0.0), DomainError);
  CHECK_THROWS_AS(quantum_em_formal_map(-2.0), DomainError);

  SUBCASE("unity") {
    const auto n = quantum_em_formal_map(1.0);
    const auto o = em_scatter_temporal(n);
    CHECK(o.amp_primary == Complex(1.0, 0.0));
    CHECK(o.amp_secondary == Complex(0.0, 0.0));
  }
  SUBCASE("fixed contrast") {
    const auto o = em_scatter_temporal(quantum_em_formal_map(3.0));
    CHECK(o.amp_primary.real() == doctest::Approx(2.0 / 3).epsilon(1e-14));
    CHECK(o.amp_secondary.real() == doctest::Approx(1.0 / 3).epsilon(1e-14));
  }
  SUBCASE("quantum amplitudes coincide under Gamma_t -> N") {
    auto gen = testutil::rng(61);
    std::uniform_real_distribution<double> ed(1.01, 5.0);
    std::uniform_real_distribution<double> ad(-4.0, 4.0);
    int used = 0;
    for (int i = 0; i < 2000 && used < 500; ++i) {
      const auto q = scatter_vector_temporal(ed(gen), ad(gen), ad(gen), 1.0);
      const double g = q.gamma.real();
      if (!(g > 1e-8) || !std::isfinite(g)) continue;
      ++used;
      const auto e = em_scatter_temporal(quantum_em_formal_map(g));
      CHECK(testutil::abs_diff(q.amp_primary, e.amp_primary) < 1e-12);
      CHECK(testutil::abs_diff(q.amp_secondary, e.amp_secondary) < 1e-12);
    }
    CHECK(used == 500);
  }
}
