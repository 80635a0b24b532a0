#include "diracstep/dispersion.hpp"

#include <cmath>

namespace dstep {

double energy_from_momentum(double p, PotentialPoint pot, double mass,
                            Branch branch, double charge) {
  if (!(mass > 0.0)) throw DomainError("energy_from_momentum: mass must be positive");
  const double kin = p - charge * pot.a;
  const double root = std::sqrt(kin * kin + mass * mass);
  return charge * pot.v + (branch == Branch::Plus ? root : -root);
}

MomentumResult momentum_from_energy(double energy, PotentialPoint pot,
                                    double mass, Branch branch, double charge) {
  if (!(mass > 0.0)) throw DomainError("momentum_from_energy: mass must be positive");
  const double w = energy - charge * pot.v;
  const double kernel = w * w - mass * mass;
  const double qa = charge * pot.a;
  if (kernel < 0.0) {
    return {Complex(qa, std::sqrt(-kernel)), true};
  }
  const double root = std::sqrt(kernel);
  return {Complex(qa + (branch == Branch::Plus ? root : -root), 0.0), false};
}

TemporalTransition temporal_transition(double e_incident, double q_delta_a,
                                       double mass) {
  if (!(mass > 0.0)) throw DomainError("temporal_transition: mass must be positive");
  if (e_incident < mass)
    throw DomainError("temporal_transition: incident energy below rest mass");
  const double kin = std::sqrt(e_incident * e_incident - mass * mass) - q_delta_a;
  const double e_f = std::sqrt(kin * kin + mass * mass);
  return {e_f, -e_f};
}

double phase_velocity(const KinematicState& state) {
  if (state.momentum == 0.0)
    throw DomainError("phase_velocity: zero momentum");
  return state.energy / state.momentum;
}

double group_velocity(const KinematicState& state, PotentialPoint pot,
                      double charge) {
  const double denom = state.energy - charge * pot.v;
  if (denom == 0.0) throw DomainError("group_velocity: E - qV vanishes");
  return (state.momentum - charge * pot.a) / denom;
}

}  // namespace dstep
