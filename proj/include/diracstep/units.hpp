#pragma once

namespace dstep::units {

// Natural-unit conventions used by every physics routine: hbar = c = 1, the
// electron rest mass is the energy scale (m = 1 by default) and the charge is
// q = -e with e > 0.
struct NaturalUnits {
  double mass = 1.0;
  double charge = -1.0;
};

inline constexpr double kElectronCharge = -1.0;  // q = -e in natural units

// CODATA-style SI constants, compiled in to 9 significant digits.
struct SIConstants {
  double electron_mass_kg;
  double elementary_charge_C;
  double speed_of_light_mps;
  double planck_Js;
  double hbar_Js;  // planck / (2 pi)
};

const SIConstants& si();

// de Broglie period h/E of an electron with total energy E = kappa * m c^2,
// in seconds.
double de_broglie_period(double total_energy_in_units_of_mc2);

// Same period for a graphene Dirac quasiparticle, (3a/2)/v_F with lattice
// constant a = 0.246 nm and Fermi velocity v_F = 1e6 m/s.
double graphene_de_broglie_period();

// Natural-unit time constant -> seconds: tau * hbar / (m c^2).
double denormalize_time(double tau_natural);

// Seconds -> natural-unit time constant: eta * m c^2 / hbar. Inverse of
// denormalize_time.
double eta_to_tau(double eta_seconds);

// The worked non-relativistic vs relativistic energy comparison for an
// electron at v = c/100 in a 7 V potential, carried out with the 4-digit
// constants and intermediate roundings of the source it reproduces. The
// headline relative error is the difference of the two 5-digit rounded
// totals; with full-precision arithmetic it would be ~2e-9.
struct EnergyComparison {
  double kinetic_energy_J;          // (1/2) m v^2
  double potential_energy_J;        // e * 7 V
  double rest_energy_J;             // m c^2, rounded to 4 digits
  double energy_ratio;              // (Ek + Ep) / Em
  double nonrel_total_J;            // Em + Ek + Ep, 5-digit rounded
  double rel_total_J;               // sqrt((mc^2)^2 + (pc)^2) + Ep, 5-digit rounded
  double relative_error;            // |rel - nonrel| / rel of the rounded totals
};

EnergyComparison energy_comparison_example();

// Round to n significant decimal digits (used by the worked example above).
double round_sig(double x, int digits);

}  // namespace dstep::units
