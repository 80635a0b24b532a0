#pragma once

#include "diracstep/types.hpp"
#include "diracstep/units.hpp"

namespace dstep {

// Local value of the four-potential: scalar part v (A0) and the z component
// of the vector part a (A3). The coupling to the electron always enters as
// q*v and q*a with q = -e.
struct PotentialPoint {
  double v = 0.0;
  double a = 0.0;
};

// On-shell state: (E - qV)^2 - (p - qA)^2 = m^2. Signed exactly as produced
// by the transition maps; a negative energy or momentum encodes propagation
// in the -z direction, not an antiparticle.
struct KinematicState {
  double energy = 0.0;
  double momentum = 0.0;
};

enum class Branch { Plus = +1, Minus = -1 };

struct MomentumResult {
  Complex value{};
  bool evanescent = false;
};

struct TemporalTransition {
  double forward = 0.0;   // E_f
  double backward = 0.0;  // E_b = -E_f
};

// E = qV +/- sqrt((p - qA)^2 + m^2)
double energy_from_momentum(double p, PotentialPoint pot, double mass,
                            Branch branch,
                            double charge = units::kElectronCharge);

// p = qA +/- sqrt((E - qV)^2 - m^2). Inside the gap |E - qV| < m the result
// is qA + i*|sqrt| (decaying wave, upper half-plane) and the evanescent flag
// is set; the branch sign is ignored there.
MomentumResult momentum_from_energy(double energy, PotentialPoint pot,
                                    double mass, Branch branch,
                                    double charge = units::kElectronCharge);

// Energy levels after a vector-potential temporal step of coupled height
// q_delta_a, for an incident level e_incident >= m:
//   E_f = sqrt((sqrt(E_i^2 - m^2) - q dA)^2 + m^2),  E_b = -E_f.
TemporalTransition temporal_transition(double e_incident, double q_delta_a,
                                       double mass);

// v_p = E/p. May exceed 1 in magnitude; sign follows the state's signs.
double phase_velocity(const KinematicState& state);

// v_g = (p - qA)/(E - qV). Below 1 in magnitude for on-shell propagating
// states; the sign encodes the propagation direction.
double group_velocity(const KinematicState& state, PotentialPoint pot,
                      double charge = units::kElectronCharge);

}  // namespace dstep
