#include "diracstep.h"

#include <memory>
#include <new>
#include <string>

#include "diracstep/dispersion.hpp"
#include "diracstep/em.hpp"
#include "diracstep/hyp2f1.hpp"
#include "diracstep/oracle.hpp"
#include "diracstep/sharp.hpp"
#include "diracstep/smooth.hpp"
#include "diracstep/types.hpp"
#include "diracstep/units.hpp"

namespace {

thread_local std::string g_last_error;

dstep_complex to_c(dstep::Complex z) { return {z.real(), z.imag()}; }
dstep::Complex from_c(dstep_complex z) { return {z.re, z.im}; }

void fill_outcome(const dstep::ScatterOutcome& in, dstep_scatter_outcome* out) {
  out->amp_primary = to_c(in.amp_primary);
  out->amp_secondary = to_c(in.amp_secondary);
  out->prob_primary = in.prob_primary;
  out->prob_secondary = in.prob_secondary;
  out->regime = static_cast<int>(in.regime);
  out->gamma = to_c(in.gamma);
  out->energy_in = in.energy_in;
  out->energy_out = in.energy_out;
  out->momentum_in = in.momentum_in;
  out->momentum_out = to_c(in.momentum_out);
  out->prob_normalized = in.prob_normalized ? 1 : 0;
}

dstep::SmoothStepConfig from_c(const dstep_smooth_config& c) {
  dstep::SmoothStepConfig out;
  out.qa1 = c.qa1;
  out.qa2 = c.qa2;
  out.t0 = c.t0;
  out.tau = c.tau;
  out.momentum = c.momentum;
  out.mass = c.mass;
  return out;
}

dstep::IntegrationSettings from_c(const dstep_integration_settings& s) {
  dstep::IntegrationSettings out;
  out.rel_tol = s.rel_tol;
  out.abs_tol = s.abs_tol;
  out.t_start_sigma = s.t_start_sigma;
  out.t_end_sigma = s.t_end_sigma;
  out.max_steps = s.max_steps;
  out.max_dt = s.max_dt;
  out.fixed_dt = s.fixed_dt;
  return out;
}

// Run a callable, translating exceptions to status codes and stashing the
// message in the thread-local error buffer.
template <typename Fn>
dstep_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return DSTEP_OK;
  } catch (const dstep::BoundaryError& e) {
    g_last_error = e.what();
    return DSTEP_ERR_BOUNDARY;
  } catch (const dstep::ConvergenceError& e) {
    g_last_error = e.what();
    return DSTEP_ERR_CONVERGENCE;
  } catch (const dstep::SingularMatchingError& e) {
    g_last_error = e.what();
    return DSTEP_ERR_SINGULAR;
  } catch (const dstep::IntegrationError& e) {
    g_last_error = e.what();
    return DSTEP_ERR_INTEGRATION;
  } catch (const dstep::ExtractionError& e) {
    g_last_error = e.what();
    return DSTEP_ERR_EXTRACTION;
  } catch (const dstep::UsageError& e) {
    g_last_error = e.what();
    return DSTEP_ERR_USAGE;
  } catch (const dstep::DomainError& e) {
    g_last_error = e.what();
    return DSTEP_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DSTEP_ERR_UNKNOWN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DSTEP_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown error";
    return DSTEP_ERR_UNKNOWN;
  }
}

dstep_status usage_error(const char* msg) {
  g_last_error = msg;
  return DSTEP_ERR_USAGE;
}

}  // namespace

struct dstep_trajectory {
  dstep::Trajectory traj;
};

extern "C" {

const char* dstep_status_name(dstep_status status) {
  switch (status) {
    case DSTEP_OK: return "ok";
    case DSTEP_ERR_DOMAIN: return "domain error";
    case DSTEP_ERR_BOUNDARY: return "boundary error";
    case DSTEP_ERR_CONVERGENCE: return "convergence error";
    case DSTEP_ERR_SINGULAR: return "singular matching error";
    case DSTEP_ERR_INTEGRATION: return "integration error";
    case DSTEP_ERR_EXTRACTION: return "extraction error";
    case DSTEP_ERR_USAGE: return "usage error";
    case DSTEP_ERR_UNKNOWN: return "unknown error";
  }
  return "invalid status";
}

const char* dstep_last_error(void) { return g_last_error.c_str(); }

const char* dstep_version(void) { return "1.0.0"; }

void dstep_si_constants_get(dstep_si_constants* out) {
  if (!out) return;
  const auto& c = dstep::units::si();
  out->electron_mass_kg = c.electron_mass_kg;
  out->elementary_charge_C = c.elementary_charge_C;
  out->speed_of_light_mps = c.speed_of_light_mps;
  out->planck_Js = c.planck_Js;
  out->hbar_Js = c.hbar_Js;
}

dstep_status dstep_de_broglie_period(double kappa, double* seconds) {
  if (!seconds) return usage_error("null output pointer");
  return guarded([&] { *seconds = dstep::units::de_broglie_period(kappa); });
}

double dstep_graphene_de_broglie_period(void) {
  return dstep::units::graphene_de_broglie_period();
}

dstep_status dstep_denormalize_time(double tau_natural, double* seconds) {
  if (!seconds) return usage_error("null output pointer");
  return guarded([&] { *seconds = dstep::units::denormalize_time(tau_natural); });
}

dstep_status dstep_eta_to_tau(double eta_seconds, double* tau) {
  if (!tau) return usage_error("null output pointer");
  return guarded([&] { *tau = dstep::units::eta_to_tau(eta_seconds); });
}

void dstep_energy_comparison_example(dstep_energy_comparison* out) {
  if (!out) return;
  const auto r = dstep::units::energy_comparison_example();
  out->kinetic_energy_J = r.kinetic_energy_J;
  out->potential_energy_J = r.potential_energy_J;
  out->rest_energy_J = r.rest_energy_J;
  out->energy_ratio = r.energy_ratio;
  out->nonrel_total_J = r.nonrel_total_J;
  out->rel_total_J = r.rel_total_J;
  out->relative_error = r.relative_error;
}

dstep_status dstep_energy_from_momentum(double p, double v, double a,
                                        double charge, double mass,
                                        int branch_sign, double* energy) {
  if (!energy) return usage_error("null output pointer");
  return guarded([&] {
    *energy = dstep::energy_from_momentum(
        p, {v, a}, mass,
        branch_sign >= 0 ? dstep::Branch::Plus : dstep::Branch::Minus, charge);
  });
}

dstep_status dstep_momentum_from_energy(double energy, double v, double a,
                                        double charge, double mass,
                                        int branch_sign,
                                        dstep_complex* momentum,
                                        int* evanescent) {
  if (!momentum) return usage_error("null output pointer");
  return guarded([&] {
    const auto r = dstep::momentum_from_energy(
        energy, {v, a}, mass,
        branch_sign >= 0 ? dstep::Branch::Plus : dstep::Branch::Minus, charge);
    *momentum = to_c(r.value);
    if (evanescent) *evanescent = r.evanescent ? 1 : 0;
  });
}

dstep_status dstep_temporal_transition(double e_incident, double q_delta_a,
                                       double mass, double* e_forward,
                                       double* e_backward) {
  if (!e_forward || !e_backward) return usage_error("null output pointer");
  return guarded([&] {
    const auto r = dstep::temporal_transition(e_incident, q_delta_a, mass);
    *e_forward = r.forward;
    *e_backward = r.backward;
  });
}

dstep_status dstep_phase_velocity(double energy, double momentum,
                                  double* v_phase) {
  if (!v_phase) return usage_error("null output pointer");
  return guarded(
      [&] { *v_phase = dstep::phase_velocity({energy, momentum}); });
}

dstep_status dstep_group_velocity(double energy, double momentum, double v,
                                  double a, double charge, double* v_group) {
  if (!v_group) return usage_error("null output pointer");
  return guarded([&] {
    *v_group = dstep::group_velocity({energy, momentum}, {v, a}, charge);
  });
}

#define DSTEP_SCATTER_WRAPPER(cname, corename)                              \
  dstep_status cname(double x1, double x2, double x3, double mass,          \
                     dstep_scatter_outcome* out) {                          \
    if (!out) return usage_error("null output pointer");                    \
    return guarded(                                                         \
        [&] { fill_outcome(dstep::corename(x1, x2, x3, mass), out); });     \
  }

DSTEP_SCATTER_WRAPPER(dstep_scatter_scalar_spatial, scatter_scalar_spatial)
DSTEP_SCATTER_WRAPPER(dstep_scatter_scalar_temporal, scatter_scalar_temporal)
DSTEP_SCATTER_WRAPPER(dstep_scatter_vector_spatial, scatter_vector_spatial)
DSTEP_SCATTER_WRAPPER(dstep_scatter_vector_temporal, scatter_vector_temporal)
DSTEP_SCATTER_WRAPPER(dstep_scatter_nonrel_spatial, scatter_nonrel_spatial)

#undef DSTEP_SCATTER_WRAPPER

dstep_status dstep_scatter_nonrel_temporal(dstep_scatter_outcome* out) {
  if (!out) return usage_error("null output pointer");
  return guarded([&] { fill_outcome(dstep::scatter_nonrel_temporal(), out); });
}

dstep_status dstep_em_scatter_spatial(double n1, double n2,
                                      dstep_scatter_outcome* out) {
  if (!out) return usage_error("null output pointer");
  return guarded([&] {
    fill_outcome(
        dstep::em_scatter_spatial(dstep::IndexContrast::from_indices(n1, n2)),
        out);
  });
}

dstep_status dstep_em_scatter_temporal(double n1, double n2,
                                       dstep_scatter_outcome* out) {
  if (!out) return usage_error("null output pointer");
  return guarded([&] {
    fill_outcome(
        dstep::em_scatter_temporal(dstep::IndexContrast::from_indices(n1, n2)),
        out);
  });
}

dstep_status dstep_quantum_em_contrast(double gamma_t, double* n) {
  if (!n) return usage_error("null output pointer");
  return guarded([&] { *n = dstep::quantum_em_formal_map(gamma_t).contrast; });
}

dstep_status dstep_hyp2f1(dstep_complex a, dstep_complex b, dstep_complex c,
                          dstep_complex z, double tol, dstep_complex* value) {
  if (!value) return usage_error("null output pointer");
  return guarded([&] {
    *value = to_c(
        dstep::hyp2f1({from_c(a), from_c(b), from_c(c), from_c(z)}, tol));
  });
}

dstep_status dstep_hyp2f1_derivative(dstep_complex a, dstep_complex b,
                                     dstep_complex c, dstep_complex z,
                                     double tol, dstep_complex* value) {
  if (!value) return usage_error("null output pointer");
  return guarded([&] {
    *value = to_c(dstep::hyp2f1_derivative(
        {from_c(a), from_c(b), from_c(c), from_c(z)}, tol));
  });
}

dstep_status dstep_smooth_potential_at(const dstep_smooth_config* config,
                                       double t, double* qa) {
  if (!config || !qa) return usage_error("null pointer argument");
  return guarded([&] { *qa = dstep::potential_at(from_c(*config), t); });
}

dstep_status dstep_smooth_field_at(const dstep_smooth_config* config, double t,
                                   double* q_ez) {
  if (!config || !q_ez) return usage_error("null pointer argument");
  return guarded([&] { *q_ez = dstep::field_at(from_c(*config), t); });
}

dstep_status dstep_smooth_scatter(const dstep_smooth_config* config,
                                  dstep_scatter_outcome* out) {
  if (!config || !out) return usage_error("null pointer argument");
  return guarded(
      [&] { fill_outcome(dstep::smooth_scatter(from_c(*config)), out); });
}

dstep_status dstep_smooth_wavefunction_at(const dstep_smooth_config* config,
                                          double t, int side,
                                          dstep_complex* phi,
                                          dstep_complex* theta) {
  if (!config || !phi || !theta) return usage_error("null pointer argument");
  if (side != 0 && side != 1) return usage_error("side must be 0 or 1");
  return guarded([&] {
    const auto s = dstep::wavefunction_at(
        from_c(*config), t,
        side == 0 ? dstep::Side::Earlier : dstep::Side::Later);
    *phi = to_c(s.phi);
    *theta = to_c(s.theta);
  });
}

dstep_status dstep_weyl_to_dirac(dstep_complex phi, dstep_complex theta,
                                 dstep_complex* phi_dirac,
                                 dstep_complex* theta_dirac) {
  if (!phi_dirac || !theta_dirac) return usage_error("null output pointer");
  return guarded([&] {
    const auto s = dstep::weyl_to_dirac(
        {from_c(phi), from_c(theta), dstep::Representation::Weyl});
    *phi_dirac = to_c(s.phi);
    *theta_dirac = to_c(s.theta);
  });
}

void dstep_integration_settings_default(dstep_integration_settings* out) {
  if (!out) return;
  const dstep::IntegrationSettings s;
  out->rel_tol = s.rel_tol;
  out->abs_tol = s.abs_tol;
  out->t_start_sigma = s.t_start_sigma;
  out->t_end_sigma = s.t_end_sigma;
  out->max_steps = s.max_steps;
  out->max_dt = s.max_dt;
  out->fixed_dt = s.fixed_dt;
}

dstep_status dstep_integrate(const dstep_smooth_config* config,
                             const dstep_integration_settings* settings,
                             dstep_trajectory** out) {
  if (!config || !out) return usage_error("null pointer argument");
  *out = nullptr;
  return guarded([&] {
    dstep::IntegrationSettings s;
    if (settings) s = from_c(*settings);
    auto handle = std::make_unique<dstep_trajectory>();
    handle->traj = dstep::integrate(from_c(*config), s);
    *out = handle.release();
  });
}

void dstep_trajectory_free(dstep_trajectory* trajectory) { delete trajectory; }

size_t dstep_trajectory_size(const dstep_trajectory* trajectory) {
  return trajectory ? trajectory->traj.times.size() : 0;
}

dstep_status dstep_trajectory_sample(const dstep_trajectory* trajectory,
                                     size_t index, double* t,
                                     dstep_complex* phi,
                                     dstep_complex* theta) {
  if (!trajectory || !t || !phi || !theta)
    return usage_error("null pointer argument");
  if (index >= trajectory->traj.times.size())
    return usage_error("trajectory index out of range");
  *t = trajectory->traj.times[index];
  *phi = to_c(trajectory->traj.phi[index]);
  *theta = to_c(trajectory->traj.theta[index]);
  return DSTEP_OK;
}

dstep_status dstep_extract_amplitudes(const dstep_trajectory* trajectory,
                                      const dstep_smooth_config* config,
                                      dstep_complex* g_forward,
                                      dstep_complex* g_backward) {
  if (!trajectory || !config || !g_forward || !g_backward)
    return usage_error("null pointer argument");
  return guarded([&] {
    const auto g =
        dstep::extract_amplitudes(trajectory->traj, from_c(*config));
    *g_forward = to_c(g.g_forward);
    *g_backward = to_c(g.g_backward);
  });
}

dstep_status dstep_oracle_scatter(const dstep_smooth_config* config,
                                  const dstep_integration_settings* settings,
                                  dstep_scatter_outcome* out) {
  if (!config || !out) return usage_error("null pointer argument");
  return guarded([&] {
    dstep::IntegrationSettings s;
    if (settings) s = from_c(*settings);
    fill_outcome(dstep::oracle_scatter(from_c(*config), s), out);
  });
}

}  // extern "C"
