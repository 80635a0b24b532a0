/* diracstep: electron scattering at sharp and smooth potential step
 * discontinuities in space and time, from the Dirac equation.
 *
 * C interface of the shared library. All functions are pure apart from a
 * thread-local error message buffer; they are safe to call concurrently.
 * Natural units (hbar = c = 1) throughout; potentials enter premultiplied by
 * the charge (qV, qA with q = -e for the electron).
 */
#ifndef DIRACSTEP_H
#define DIRACSTEP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef DSTEP_API
#if defined(_WIN32)
#define DSTEP_API
#else
#define DSTEP_API __attribute__((visibility("default")))
#endif
#endif

typedef enum dstep_status {
  DSTEP_OK = 0,
  DSTEP_ERR_DOMAIN = 1,       /* precondition violated */
  DSTEP_ERR_BOUNDARY = 2,     /* parameter on a singular region boundary */
  DSTEP_ERR_CONVERGENCE = 3,  /* series iteration cap reached */
  DSTEP_ERR_SINGULAR = 4,     /* degenerate boundary-matching system */
  DSTEP_ERR_INTEGRATION = 5,  /* ODE step budget exhausted / non-finite */
  DSTEP_ERR_EXTRACTION = 6,   /* amplitude extraction failed */
  DSTEP_ERR_USAGE = 7,        /* wrong representation, bad argument, null out */
  DSTEP_ERR_UNKNOWN = 8
} dstep_status;

typedef enum dstep_regime {
  DSTEP_REGIME_PROPAGATING = 0,
  DSTEP_REGIME_KLEIN_GAP = 1,
  DSTEP_REGIME_KLEIN = 2,
  DSTEP_REGIME_NO_BACKSCATTER = 3
} dstep_regime;

typedef struct dstep_complex {
  double re;
  double im;
} dstep_complex;

/* One scattering event. Primary amplitude/probability is t/T for spatial
 * steps and f/F for temporal ones; secondary is r/R or b/B. momentum_out is
 * complex (evanescent inside the Klein gap). prob_normalized is 0 only for
 * the electromagnetic temporal step, whose Poynting ratios do not sum to 1. */
typedef struct dstep_scatter_outcome {
  dstep_complex amp_primary;
  dstep_complex amp_secondary;
  double prob_primary;
  double prob_secondary;
  int regime; /* dstep_regime */
  dstep_complex gamma;
  double energy_in;
  double energy_out;
  double momentum_in;
  dstep_complex momentum_out;
  int prob_normalized;
} dstep_scatter_outcome;

/* ---- error reporting -------------------------------------------------- */

/* Static description of a status code. */
DSTEP_API const char* dstep_status_name(dstep_status status);
/* Detail message of the last failing call on this thread ("" if none). */
DSTEP_API const char* dstep_last_error(void);
DSTEP_API const char* dstep_version(void);

/* ---- units ------------------------------------------------------------ */

typedef struct dstep_si_constants {
  double electron_mass_kg;
  double elementary_charge_C;
  double speed_of_light_mps;
  double planck_Js;
  double hbar_Js;
} dstep_si_constants;

DSTEP_API void dstep_si_constants_get(dstep_si_constants* out);

/* h / (kappa m c^2) in seconds, kappa = E / (m c^2) > 0. */
DSTEP_API dstep_status dstep_de_broglie_period(double kappa, double* seconds);
DSTEP_API double dstep_graphene_de_broglie_period(void);
/* tau (natural) -> seconds, and back. */
DSTEP_API dstep_status dstep_denormalize_time(double tau_natural,
                                              double* seconds);
DSTEP_API dstep_status dstep_eta_to_tau(double eta_seconds, double* tau);

/* Worked non-relativistic vs relativistic electron energy comparison
 * (v = c/100, 7 V potential), reproduced with its printed roundings. */
typedef struct dstep_energy_comparison {
  double kinetic_energy_J;
  double potential_energy_J;
  double rest_energy_J;
  double energy_ratio;
  double nonrel_total_J;
  double rel_total_J;
  double relative_error;
} dstep_energy_comparison;

DSTEP_API void dstep_energy_comparison_example(dstep_energy_comparison* out);

/* ---- dispersion (charge enters explicitly; electron is q = -1) --------- */

DSTEP_API dstep_status dstep_energy_from_momentum(double p, double v, double a,
                                                  double charge, double mass,
                                                  int branch_sign,
                                                  double* energy);
DSTEP_API dstep_status dstep_momentum_from_energy(double energy, double v,
                                                  double a, double charge,
                                                  double mass, int branch_sign,
                                                  dstep_complex* momentum,
                                                  int* evanescent);
DSTEP_API dstep_status dstep_temporal_transition(double e_incident,
                                                 double q_delta_a, double mass,
                                                 double* e_forward,
                                                 double* e_backward);
DSTEP_API dstep_status dstep_phase_velocity(double energy, double momentum,
                                            double* v_phase);
DSTEP_API dstep_status dstep_group_velocity(double energy, double momentum,
                                            double v, double a, double charge,
                                            double* v_group);

/* ---- sharp steps (potential values premultiplied by q) ----------------- */

DSTEP_API dstep_status dstep_scatter_scalar_spatial(double energy, double qv1,
                                                    double qv2, double mass,
                                                    dstep_scatter_outcome* out);
DSTEP_API dstep_status dstep_scatter_scalar_temporal(
    double e_incident, double qv1, double qv2, double mass,
    dstep_scatter_outcome* out);
DSTEP_API dstep_status dstep_scatter_vector_spatial(double energy, double qa1,
                                                    double qa2, double mass,
                                                    dstep_scatter_outcome* out);
DSTEP_API dstep_status dstep_scatter_vector_temporal(
    double e_incident, double qa1, double qa2, double mass,
    dstep_scatter_outcome* out);
DSTEP_API dstep_status dstep_scatter_nonrel_spatial(double e_nonrel,
                                                    double qv1, double qv2,
                                                    double mass,
                                                    dstep_scatter_outcome* out);
DSTEP_API dstep_status dstep_scatter_nonrel_temporal(
    dstep_scatter_outcome* out);

/* ---- electromagnetic analog -------------------------------------------- */

DSTEP_API dstep_status dstep_em_scatter_spatial(double n1, double n2,
                                                dstep_scatter_outcome* out);
DSTEP_API dstep_status dstep_em_scatter_temporal(double n1, double n2,
                                                 dstep_scatter_outcome* out);
/* The formal Gamma_t <-> N map (returns N; fails for Gamma_t <= 0). */
DSTEP_API dstep_status dstep_quantum_em_contrast(double gamma_t, double* n);

/* ---- Gauss hypergeometric 2F1 ------------------------------------------ */

DSTEP_API dstep_status dstep_hyp2f1(dstep_complex a, dstep_complex b,
                                    dstep_complex c, dstep_complex z,
                                    double tol, dstep_complex* value);
DSTEP_API dstep_status dstep_hyp2f1_derivative(dstep_complex a,
                                               dstep_complex b,
                                               dstep_complex c,
                                               dstep_complex z, double tol,
                                               dstep_complex* value);

/* ---- smooth tanh step --------------------------------------------------- */

typedef struct dstep_smooth_config {
  double qa1;
  double qa2;
  double t0;
  double tau;      /* > 0 */
  double momentum; /* conserved p */
  double mass;     /* > 0 */
} dstep_smooth_config;

DSTEP_API dstep_status dstep_smooth_potential_at(
    const dstep_smooth_config* config, double t, double* qa);
DSTEP_API dstep_status dstep_smooth_field_at(const dstep_smooth_config* config,
                                             double t, double* q_ez);
DSTEP_API dstep_status dstep_smooth_scatter(const dstep_smooth_config* config,
                                            dstep_scatter_outcome* out);

/* Exact Weyl-representation wavefunction (C2 = 1). side: 0 earlier chart
 * (t <= t0), 1 later chart (t >= t0). */
DSTEP_API dstep_status dstep_smooth_wavefunction_at(
    const dstep_smooth_config* config, double t, int side, dstep_complex* phi,
    dstep_complex* theta);

DSTEP_API dstep_status dstep_weyl_to_dirac(dstep_complex phi,
                                           dstep_complex theta,
                                           dstep_complex* phi_dirac,
                                           dstep_complex* theta_dirac);

/* ---- independent ODE oracle --------------------------------------------- */

typedef struct dstep_integration_settings {
  double rel_tol;
  double abs_tol;
  double t_start_sigma; /* >= 5, in units of tau before t0 */
  double t_end_sigma;   /* >= 5 */
  long max_steps;
  double max_dt;   /* 0 = uncapped */
  double fixed_dt; /* 0 = adaptive */
} dstep_integration_settings;

DSTEP_API void dstep_integration_settings_default(
    dstep_integration_settings* out);

/* Opaque trajectory handle; free with dstep_trajectory_free. */
typedef struct dstep_trajectory dstep_trajectory;

DSTEP_API dstep_status dstep_integrate(
    const dstep_smooth_config* config,
    const dstep_integration_settings* settings, dstep_trajectory** out);
DSTEP_API void dstep_trajectory_free(dstep_trajectory* trajectory);
DSTEP_API size_t dstep_trajectory_size(const dstep_trajectory* trajectory);
DSTEP_API dstep_status dstep_trajectory_sample(
    const dstep_trajectory* trajectory, size_t index, double* t,
    dstep_complex* phi, dstep_complex* theta);
DSTEP_API dstep_status dstep_extract_amplitudes(
    const dstep_trajectory* trajectory, const dstep_smooth_config* config,
    dstep_complex* g_forward, dstep_complex* g_backward);
DSTEP_API dstep_status dstep_oracle_scatter(
    const dstep_smooth_config* config,
    const dstep_integration_settings* settings, dstep_scatter_outcome* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DIRACSTEP_H */
