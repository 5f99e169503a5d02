#include "quantities.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "constants.hpp"
#include "errors.hpp"

namespace lnf {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPiSq = 2.0 * consts::pi * consts::pi;
}

SpectralEvaluator::SpectralEvaluator(const Geometry& geometry, const EvalContext& ctx)
    : geometry_(geometry), ctx_(ctx), basis_(geometry, ctx) {
  for (const Layer& l : geometry_.layers()) {
    eta_.push_back(bose_einstein(l.temperature, ctx_));
    eta_plus_half_.push_back(eta_.back() + 0.5);
    ones_.push_back(1.0);
  }
}

double SpectralEvaluator::im_g_coincident(double x) const {
  return std::imag(basis_.eval(x, x));
}

double SpectralEvaluator::c_squared(double x) const {
  const double im_g = im_g_coincident(x);
  if (!(im_g > 0.0)) {
    std::ostringstream msg;
    msg << "normalization: Im G(x,x) = " << im_g << " at x = " << x
        << " leaves no positive mode normalization";
    throw DegenerateLdosError(msg.str());
  }
  return 4.0 * consts::pi * consts::hbar /
         (consts::eps0 * consts::c0 * consts::c0 * ctx_.area) * im_g;
}

double SpectralEvaluator::normalization_c(double x) const {
  return std::sqrt(c_squared(x));
}

double SpectralEvaluator::normalization_c_integral(double x) const {
  return std::sqrt(std::real(integrate_kernel_product(basis_, x, ProductKind::AA, ones_)));
}

double SpectralEvaluator::photon_number(double x) const {
  const double num = std::real(integrate_kernel_product(basis_, x, ProductKind::AA, eta_));
  return num / c_squared(x);
}

double SpectralEvaluator::effective_field_temperature(double x) const {
  return effective_temperature(photon_number(x), ctx_);
}

double SpectralEvaluator::efield_fluctuation_si(double x) const {
  return std::real(integrate_kernel_product(basis_, x, ProductKind::EE, eta_plus_half_)) /
         kTwoPiSq;
}

double SpectralEvaluator::hfield_fluctuation_si(double x) const {
  return std::real(integrate_kernel_product(basis_, x, ProductKind::HH, eta_plus_half_)) /
         kTwoPiSq;
}

double SpectralEvaluator::poynting_si(double x) const {
  return std::real(integrate_kernel_product(basis_, x, ProductKind::EH, eta_)) / kTwoPiSq;
}

double SpectralEvaluator::net_emission_si(double x) const {
  const int region = geometry_.region_of(x);
  const cplx n = geometry_.layer(region).n;
  const double im_n2 = std::imag(n * n);
  if (im_n2 == 0.0) return 0.0;
  const double ldos_si = 2.0 * ctx_.omega /
                         (consts::pi * consts::c0 * consts::c0 * ctx_.area) *
                         im_g_coincident(x);
  const double eta_local = eta_[static_cast<size_t>(region)];
  return consts::hbar * ctx_.omega * ctx_.omega * im_n2 * ldos_si *
         (eta_local - photon_number(x));
}

double SpectralEvaluator::efield_fluctuation(double x) const {
  const double unit = consts::hbar * ctx_.omega /
                      (2.0 * consts::pi * consts::eps0 * consts::c0 * ctx_.area);
  return efield_fluctuation_si(x) / unit;
}

double SpectralEvaluator::hfield_fluctuation(double x) const {
  const double unit = consts::hbar * ctx_.omega /
                      (2.0 * consts::pi * consts::mu0 * consts::c0 * ctx_.area);
  return hfield_fluctuation_si(x) / unit;
}

double SpectralEvaluator::electric_ldos(double x) const {
  // 2w/(pi c^2 S) Im G, reported in units of 2/(pi c S).
  return ctx_.omega / consts::c0 * im_g_coincident(x);
}

double SpectralEvaluator::energy_density(double x) const {
  const int region = geometry_.region_of(x);
  const cplx n = geometry_.layer(region).n;
  const cplx chi_e = n * n - 1.0;
  // Frequency-flat susceptibility: |d(chi w)/dw| = |chi|; chi_m = 0.
  const double u_si = 0.5 * consts::eps0 * (1.0 + std::abs(chi_e)) *
                          efield_fluctuation_si(x) +
                      0.5 * consts::mu0 * hfield_fluctuation_si(x);
  const double unit =
      consts::hbar * ctx_.omega / (2.0 * consts::pi * consts::c0 * ctx_.area);
  return u_si / unit;
}

double SpectralEvaluator::poynting(double x) const {
  const double unit = consts::hbar * ctx_.omega / (1000.0 * consts::pi * ctx_.area);
  return poynting_si(x) / unit;
}

double SpectralEvaluator::net_emission(double x) const {
  const double unit = consts::hbar * ctx_.omega * ctx_.omega /
                      (1000.0 * consts::pi * consts::c0 * ctx_.area);
  return net_emission_si(x) / unit;
}

double SpectralEvaluator::poynting_theorem_residual(double x, double h) const {
  if (!(h > 0.0)) throw std::invalid_argument("poynting_theorem_residual: h must be > 0");
  const double flux_slope = (poynting_si(x + h) - poynting_si(x - h)) / (2.0 * h);
  return flux_slope - net_emission_si(x);
}

CommutatorKernel SpectralEvaluator::commutator_kernel(double x, double xp,
                                                      CommutatorDomain domain) const {
  CommutatorKernel out;
  out.domain = domain;
  out.x = x;
  out.xp = xp;

  cplx integral = 0.0;
  switch (domain) {
    case CommutatorDomain::RR:
      integral = product_integral(basis_, KernelKind::A, x, KernelKind::A, xp, -kInf,
                                  std::min(x, xp), ones_);
      break;
    case CommutatorDomain::LL:
      integral = product_integral(basis_, KernelKind::A, x, KernelKind::A, xp,
                                  std::max(x, xp), kInf, ones_);
      break;
    case CommutatorDomain::RL:
      // Overlap strip [xp, x]; empty (zero) unless x > xp.
      if (x > xp)
        integral = product_integral(basis_, KernelKind::A, x, KernelKind::A, xp, xp, x, ones_);
      break;
  }
  out.value = integral / (normalization_c(x) * normalization_c(xp));
  return out;
}

SpectralPoint SpectralEvaluator::evaluate(double x) const {
  SpectralPoint pt;
  pt.x = x;
  pt.photon_energy_eV = ctx_.photon_energy_eV;
  pt.photon_number = photon_number(x);
  pt.temperature = effective_temperature(pt.photon_number, ctx_);
  pt.efield_fluct = efield_fluctuation(x);
  pt.hfield_fluct = hfield_fluctuation(x);
  pt.ldos = electric_ldos(x);
  pt.energy_density = energy_density(x);
  pt.poynting = poynting(x);
  pt.net_emission = net_emission(x);
  return pt;
}

double SpectralEvaluator::dispersion_factor_numeric(cplx n_minus, cplx n_plus,
                                                    double omega, double delta) {
  if (!(delta > 0.0) || !(omega > delta))
    throw std::invalid_argument("dispersion_factor_numeric: need 0 < delta < omega");
  const cplx chi_minus = n_minus * n_minus - 1.0;
  const cplx chi_plus = n_plus * n_plus - 1.0;
  return std::abs((chi_plus * (omega + delta) - chi_minus * (omega - delta)) /
                  (2.0 * delta));
}

}  // namespace lnf
