#include "diracstep/units.hpp"

#include <cmath>

#include "diracstep/types.hpp"

namespace dstep::units {

const SIConstants& si() {
  static const SIConstants c = [] {
    SIConstants s{};
    s.electron_mass_kg = 9.10938370e-31;
    s.elementary_charge_C = 1.60217663e-19;
    s.speed_of_light_mps = 299792458.0;
    s.planck_Js = 6.62607015e-34;
    s.hbar_Js = s.planck_Js / (2.0 * M_PI);
    return s;
  }();
  return c;
}

double de_broglie_period(double total_energy_in_units_of_mc2) {
  if (!(total_energy_in_units_of_mc2 > 0.0))
    throw DomainError("de_broglie_period: energy must be positive");
  const SIConstants& c = si();
  const double rest_energy = c.electron_mass_kg * c.speed_of_light_mps *
                             c.speed_of_light_mps;
  return c.planck_Js / (total_energy_in_units_of_mc2 * rest_energy);
}

double graphene_de_broglie_period() {
  const double lattice_constant = 0.246e-9;  // m
  const double fermi_velocity = 1.0e6;       // m/s
  return 1.5 * lattice_constant / fermi_velocity;
}

double denormalize_time(double tau_natural) {
  if (tau_natural < 0.0)
    throw DomainError("denormalize_time: tau must be non-negative");
  const SIConstants& c = si();
  const double rest_energy = c.electron_mass_kg * c.speed_of_light_mps *
                             c.speed_of_light_mps;
  return tau_natural * c.hbar_Js / rest_energy;
}

double eta_to_tau(double eta_seconds) {
  if (eta_seconds < 0.0) throw DomainError("eta_to_tau: eta must be non-negative");
  const SIConstants& c = si();
  const double rest_energy = c.electron_mass_kg * c.speed_of_light_mps *
                             c.speed_of_light_mps;
  return eta_seconds * rest_energy / c.hbar_Js;
}

double round_sig(double x, int digits) {
  if (x == 0.0) return 0.0;
  const double mag = std::pow(10.0, digits - 1 - (int)std::floor(std::log10(std::fabs(x))));
  return std::round(x * mag) / mag;
}

EnergyComparison energy_comparison_example() {
  // 4-digit constants, exactly as the worked example states them.
  const double m = 9.109e-31;
  const double e = 1.602e-19;
  const double c = 2.998e8;
  const double v = c / 100.0;

  EnergyComparison r{};
  r.kinetic_energy_J = round_sig(0.5 * m * v * v, 4);           // 4.094e-18
  r.potential_energy_J = round_sig(e * 7.0, 4);                 // 1.121e-18
  r.rest_energy_J = round_sig(m * c * c, 4);                    // 8.187e-14
  r.energy_ratio =
      (0.5 * m * v * v + e * 7.0) / (m * c * c);                // ~6.370e-5

  r.nonrel_total_J = round_sig(
      r.rest_energy_J + r.kinetic_energy_J + r.potential_energy_J, 5);

  const double gamma = 1.0 / std::sqrt(1.0 - (v / c) * (v / c));
  const double p = round_sig(gamma * m * v, 4);                 // 2.731e-24
  r.rel_total_J = round_sig(
      std::sqrt((m * c * c) * (m * c * c) + (p * c) * (p * c)) +
          r.potential_energy_J,
      5);

  r.relative_error = std::fabs(r.rel_total_J - r.nonrel_total_J) / r.rel_total_J;
  return r;
}

}  // namespace dstep::units
