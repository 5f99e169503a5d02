#include "lnfield.h"

#include <cmath>
#include <limits>
#include <new>
#include <string>

#include "errors.hpp"
#include "greens.hpp"
#include "optics.hpp"
#include "quantities.hpp"
#include "segint.hpp"

using lnf::cplx;

struct lnf_scene {
  lnf::Geometry geometry;
};

struct lnf_solver {
  lnf::SpectralEvaluator evaluator;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
lnf_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return LNF_OK;
  } catch (const lnf::SingularGeometryError& e) {
    set_error(e.what());
    return LNF_ERR_SINGULAR;
  } catch (const lnf::DegenerateLdosError& e) {
    set_error(e.what());
    return LNF_ERR_SINGULAR;
  } catch (const lnf::ConvergenceError& e) {
    set_error(e.what());
    return LNF_ERR_NOT_CONVERGED;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return LNF_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return LNF_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return LNF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return LNF_ERR_INTERNAL;
  }
}

lnf_status require(bool ok, const char* what) {
  if (ok) return LNF_OK;
  set_error(what);
  return LNF_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* lnf_version(void) { return "1.0.0"; }

const char* lnf_status_name(lnf_status status) {
  switch (status) {
    case LNF_OK: return "ok";
    case LNF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LNF_ERR_DOMAIN: return "domain error";
    case LNF_ERR_SINGULAR: return "singular geometry";
    case LNF_ERR_NOT_CONVERGED: return "not converged";
    case LNF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lnf_last_error_message(void) { return g_last_error.c_str(); }

lnf_status lnf_scene_create_homogeneous(double n_re, double n_im, double temperature_K,
                                        lnf_scene** out) {
  if (lnf_status s = require(out != nullptr, "null output pointer"); s != LNF_OK) return s;
  *out = nullptr;
  return guarded([&] {
    *out = new lnf_scene{lnf::Geometry::homogeneous(cplx(n_re, n_im), temperature_K)};
  });
}

lnf_status lnf_scene_create_interface(double n1_re, double n1_im, double t1_K,
                                      double n2_re, double n2_im, double t2_K,
                                      lnf_scene** out) {
  if (lnf_status s = require(out != nullptr, "null output pointer"); s != LNF_OK) return s;
  *out = nullptr;
  return guarded([&] {
    *out = new lnf_scene{lnf::Geometry::single_interface(cplx(n1_re, n1_im), t1_K,
                                                         cplx(n2_re, n2_im), t2_K)};
  });
}

lnf_status lnf_scene_create_slab(double n1_re, double n1_im, double t1_K, double n2_re,
                                 double n2_im, double t2_K, double n3_re, double n3_im,
                                 double t3_K, double gap_m, lnf_scene** out) {
  if (lnf_status s = require(out != nullptr, "null output pointer"); s != LNF_OK) return s;
  *out = nullptr;
  return guarded([&] {
    *out = new lnf_scene{lnf::Geometry::slab(cplx(n1_re, n1_im), t1_K, cplx(n2_re, n2_im),
                                             t2_K, cplx(n3_re, n3_im), t3_K, gap_m)};
  });
}

void lnf_scene_destroy(lnf_scene* scene) { delete scene; }

lnf_status lnf_solver_create(const lnf_scene* scene, double photon_energy_eV,
                             lnf_solver** out) {
  if (lnf_status s = require(scene != nullptr && out != nullptr, "null handle");
      s != LNF_OK)
    return s;
  *out = nullptr;
  return guarded([&] {
    const lnf::EvalContext ctx = lnf::EvalContext::from_photon_energy(photon_energy_eV);
    *out = new lnf_solver{lnf::SpectralEvaluator(scene->geometry, ctx)};
  });
}

void lnf_solver_destroy(lnf_solver* solver) { delete solver; }

lnf_status lnf_solver_evaluate(const lnf_solver* solver, double x_m,
                               lnf_spectral_point* out) {
  if (lnf_status s = require(solver != nullptr && out != nullptr, "null handle");
      s != LNF_OK)
    return s;
  return guarded([&] {
    const lnf::SpectralPoint pt = solver->evaluator.evaluate(x_m);
    out->x_m = pt.x;
    out->photon_energy_eV = pt.photon_energy_eV;
    out->photon_number = pt.photon_number;
    out->temperature_K = pt.temperature;
    out->efield_fluct = pt.efield_fluct;
    out->hfield_fluct = pt.hfield_fluct;
    out->ldos = pt.ldos;
    out->energy_density = pt.energy_density;
    out->poynting = pt.poynting;
    out->net_emission = pt.net_emission;
  });
}

lnf_status lnf_bose_einstein(double temperature_K, double photon_energy_eV, double* out) {
  if (lnf_status s = require(out != nullptr, "null output pointer"); s != LNF_OK) return s;
  return guarded([&] {
    const lnf::EvalContext ctx = lnf::EvalContext::from_photon_energy(photon_energy_eV);
    *out = lnf::bose_einstein(temperature_K, ctx);
  });
}

lnf_status lnf_effective_temperature(double occupation, double photon_energy_eV,
                                     double* out) {
  if (lnf_status s = require(out != nullptr, "null output pointer"); s != LNF_OK) return s;
  return guarded([&] {
    const lnf::EvalContext ctx = lnf::EvalContext::from_photon_energy(photon_energy_eV);
    *out = lnf::effective_temperature(occupation, ctx);
  });
}

lnf_status lnf_solver_validate_point(const lnf_solver* solver, double x_m,
                                     double oracle_tol, double loss_epsilon,
                                     double fd_step_m, lnf_point_validation* out) {
  if (lnf_status s = require(solver != nullptr && out != nullptr, "null handle");
      s != LNF_OK)
    return s;
  return guarded([&] {
    const lnf::SpectralEvaluator& ev = solver->evaluator;
    const lnf::Geometry& geom = ev.basis().geometry();
    const lnf::EvalContext& base_ctx = ev.ctx();

    const double c_im = ev.normalization_c(x_m);
    const double c_int = ev.normalization_c_integral(x_m);
    out->norm_identity_rel = std::abs(c_int * c_int / (c_im * c_im) - 1.0);

    // Field fluctuation against the LDOS * (n + 1/2) route, in SI.
    const double e2 = ev.efield_fluctuation_si(x_m);
    const double ldos_si = ev.electric_ldos(x_m) * 2.0 /
                           (lnf::consts::pi * lnf::consts::c0 * base_ctx.area);
    const double e2_route = lnf::consts::hbar * base_ctx.omega / lnf::consts::eps0 *
                            ldos_si * (ev.photon_number(x_m) + 0.5);
    out->fluct_identity_rel = std::abs(e2_route / e2 - 1.0);

    // Closed form vs quadrature on a regularized twin of the scene.
    lnf::EvalContext reg_ctx = base_ctx;
    reg_ctx.loss_epsilon = loss_epsilon;
    const lnf::GreensBasis reg_basis(geom, reg_ctx, lnf::Regularize::yes);
    const std::vector<double>& eta = ev.occupations();
    double* slots[4] = {&out->oracle_rel_aa, &out->oracle_rel_ee, &out->oracle_rel_hh,
                        &out->oracle_rel_eh};
    const lnf::ProductKind kinds[4] = {lnf::ProductKind::AA, lnf::ProductKind::EE,
                                       lnf::ProductKind::HH, lnf::ProductKind::EH};
    for (int i = 0; i < 4; ++i) {
      const cplx closed = lnf::integrate_kernel_product(ev.basis(), x_m, kinds[i], eta);
      const cplx quad = lnf::oracle_quadrature(reg_basis, x_m, kinds[i], eta, oracle_tol);
      const double scale = std::max(std::abs(closed), std::abs(quad));
      *slots[i] = scale > 0.0 ? std::abs(closed - quad) / scale : 0.0;
    }

    // Poynting theorem check, only meaningful inside a lossy layer away from
    // the interfaces.
    out->poynting_residual_rel = std::numeric_limits<double>::quiet_NaN();
    const int region = geom.region_of(x_m);
    const lnf::Layer& layer = geom.layer(region);
    const bool near_interface =
        (x_m - layer.x_min < 2.0 * fd_step_m) || (layer.x_max - x_m < 2.0 * fd_step_m);
    if (!layer.lossless() && fd_step_m > 0.0 && !near_interface) {
      const double residual = ev.poynting_theorem_residual(x_m, fd_step_m);
      const double q = ev.net_emission_si(x_m);
      const double scale = std::abs(q);
      if (scale > 0.0) out->poynting_residual_rel = std::abs(residual) / scale;
    }

    const cplx rr = ev.commutator_kernel(x_m, x_m, lnf::CommutatorDomain::RR).value;
    const cplx ll = ev.commutator_kernel(x_m, x_m, lnf::CommutatorDomain::LL).value;
    const cplx rl = ev.commutator_kernel(x_m, x_m, lnf::CommutatorDomain::RL).value;
    out->commutator_sum_err = std::abs(rr + ll - 1.0);
    out->commutator_rl_err = std::abs(rl);
  });
}

lnf_status lnf_solver_continuity(const lnf_solver* solver, double* max_rel_jump) {
  if (lnf_status s = require(solver != nullptr && max_rel_jump != nullptr, "null handle");
      s != LNF_OK)
    return s;
  return guarded([&] {
    const lnf::ContinuityReport rep = lnf::check_continuity(solver->evaluator.basis());
    *max_rel_jump = std::max(rep.max_value_jump, rep.max_slope_jump);
  });
}

}  // extern "C"
