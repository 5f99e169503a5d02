/* lnfield — field quantization and thermal balance in layered lossy media.
 *
 * C interface to the shared library. Scenes describe a piecewise-homogeneous
 * stack (complex refractive index and temperature per layer); a solver
 * prepares one scene at one photon energy and evaluates the position-resolved
 * observables: effective photon number, field temperature, electric and
 * magnetic field fluctuations, electric local density of states, energy
 * density, spectral Poynting flux, and net emission rate.
 *
 * All handles are opaque. Functions return LNF_OK or an error code;
 * lnf_last_error_message() gives a thread-local description of the most
 * recent failure. Solvers are immutable after creation and safe to evaluate
 * from any number of threads concurrently.
 *
 * Units: positions in meters, photon energies in eV, temperatures in kelvin.
 * Output fields use the normalized units spelled out in lnf_spectral_point.
 */

#ifndef LNFIELD_H
#define LNFIELD_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lnf_status {
  LNF_OK = 0,
  LNF_ERR_INVALID_ARGUMENT = 1, /* null handle, malformed input */
  LNF_ERR_DOMAIN = 2,           /* physics precondition violated (gain, T < 0, ...) */
  LNF_ERR_SINGULAR = 3,         /* singular interface coefficients / degenerate LDOS */
  LNF_ERR_NOT_CONVERGED = 4,    /* quadrature oracle failed to stabilize */
  LNF_ERR_INTERNAL = 5
} lnf_status;

/* Scene: geometry plus layer temperatures. */
typedef struct lnf_scene lnf_scene;
/* Solver: a scene prepared at one photon energy. */
typedef struct lnf_solver lnf_solver;

typedef struct lnf_spectral_point {
  double x_m;
  double photon_energy_eV;
  double photon_number;   /* dimensionless */
  double temperature_K;   /* effective field temperature */
  double efield_fluct;    /* units hbar*w / (2*pi*eps0*c*S) */
  double hfield_fluct;    /* units hbar*w / (2*pi*mu0*c*S) */
  double ldos;            /* units 2 / (pi*c*S) */
  double energy_density;  /* units hbar*w / (2*pi*c*S) */
  double poynting;        /* units hbar*w / (1000*pi*S) */
  double net_emission;    /* units hbar*w^2 / (1000*pi*c*S) */
} lnf_spectral_point;

/* Per-point self-consistency metrics, all relative unless noted. */
typedef struct lnf_point_validation {
  double norm_identity_rel;     /* |G_A|^2 integral vs Im-G normalization */
  double fluct_identity_rel;    /* field fluctuation vs LDOS * (n + 1/2) route */
  double oracle_rel_aa;         /* closed form vs quadrature, |G_A|^2 kernel */
  double oracle_rel_ee;
  double oracle_rel_hh;
  double oracle_rel_eh;
  double poynting_residual_rel; /* |d<S>/dx - Q| / scale; NaN where inapplicable */
  double commutator_sum_err;    /* |RR(x,x) + LL(x,x) - 1|, absolute */
  double commutator_rl_err;     /* |RL(x,x)|, absolute */
} lnf_point_validation;

const char* lnf_version(void);
const char* lnf_status_name(lnf_status status);
/* Description of the most recent error on this thread ("" if none). */
const char* lnf_last_error_message(void);

/* Scene constructors. Layers are listed left to right; interfaces sit at
 * x = 0 (and x = gap_m for the slab). Gain (Im n < 0), negative temperatures
 * and non-positive gaps are rejected. */
lnf_status lnf_scene_create_homogeneous(double n_re, double n_im, double temperature_K,
                                        lnf_scene** out);
lnf_status lnf_scene_create_interface(double n1_re, double n1_im, double t1_K,
                                      double n2_re, double n2_im, double t2_K,
                                      lnf_scene** out);
lnf_status lnf_scene_create_slab(double n1_re, double n1_im, double t1_K,
                                 double n2_re, double n2_im, double t2_K,
                                 double n3_re, double n3_im, double t3_K,
                                 double gap_m, lnf_scene** out);
void lnf_scene_destroy(lnf_scene* scene);

lnf_status lnf_solver_create(const lnf_scene* scene, double photon_energy_eV,
                             lnf_solver** out);
void lnf_solver_destroy(lnf_solver* solver);

/* All observables at one position. */
lnf_status lnf_solver_evaluate(const lnf_solver* solver, double x_m,
                               lnf_spectral_point* out);

/* Thermal occupation and its inverse at the given photon energy. */
lnf_status lnf_bose_einstein(double temperature_K, double photon_energy_eV, double* out);
lnf_status lnf_effective_temperature(double occupation, double photon_energy_eV,
                                     double* out);

/* Runs the built-in cross checks at one position. oracle_tol controls the
 * quadrature oracle (regularization Im n = loss_epsilon for lossless layers);
 * fd_step_m is the step of the Poynting-theorem finite difference, skipped
 * (NaN) when x sits within 2*fd_step_m of an interface or in a lossless
 * layer. */
lnf_status lnf_solver_validate_point(const lnf_solver* solver, double x_m,
                                     double oracle_tol, double loss_epsilon,
                                     double fd_step_m, lnf_point_validation* out);

/* Largest relative jump of the Green's function or its slope across any
 * interface. */
lnf_status lnf_solver_continuity(const lnf_solver* solver, double* max_rel_jump);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LNFIELD_H */
