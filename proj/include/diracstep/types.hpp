#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace dstep {

using Complex = std::complex<double>;

// Scattering regime of an outcome. Propagating covers the ordinary case on
// both sides of the step; KleinGap is the evanescent window of a scalar
// spatial step (total reflection); KleinRegime the strong-potential window
// beyond it (transmitted wave with reversed momentum sign); NoBackscatter
// marks the gauge-trivial steps whose secondary amplitude vanishes
// identically.
enum class Regime {
  Propagating,
  KleinGap,
  KleinRegime,
  NoBackscatter,
};

enum class Representation { DiracPauli, Weyl };

// One scattering event. For spatial steps the primary amplitude is the
// transmission t and the secondary the reflection r; for temporal steps they
// are the later-forward f and later-backward b. Probabilities follow the same
// primary/secondary pairing (T/R or F/B).
//
// energy/momentum bookkeeping: the conserved quantity is repeated on both
// slots, the transformed one carries the scattered value. momentum_out is
// complex because the transmitted momentum is evanescent inside the Klein
// gap.
struct ScatterOutcome {
  Complex amp_primary{};
  Complex amp_secondary{};
  double prob_primary = 0.0;
  double prob_secondary = 0.0;
  Regime regime = Regime::Propagating;
  Complex gamma{};  // dimensionless step parameter (Gamma_s, Gamma_t or N)
  double energy_in = 0.0;
  double energy_out = 0.0;
  double momentum_in = 0.0;
  Complex momentum_out{};
  // False only for the electromagnetic temporal step, whose Poynting ratios
  // do not sum to one and are reported as printed, not renormalized.
  bool prob_normalized = true;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A step parameter placed exactly on a singular region boundary (e.g. the
// transmitted momentum vanishes and the step parameter diverges).
struct BoundaryError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& what, Complex partial_value,
                   double error_estimate)
      : std::runtime_error(what),
        partial(partial_value),
        estimate(error_estimate) {}
  Complex partial;   // partial sum at the iteration cap
  double estimate;   // last relative term magnitude
};

struct SingularMatchingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntegrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExtractionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::logic_error {
  using std::logic_error::logic_error;
};

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::Propagating: return "propagating";
    case Regime::KleinGap: return "klein_gap";
    case Regime::KleinRegime: return "klein_regime";
    case Regime::NoBackscatter: return "no_backscatter";
  }
  return "unknown";
}

}  // namespace dstep
