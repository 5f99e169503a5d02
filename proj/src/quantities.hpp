#pragma once

#include <vector>

#include "greens.hpp"
#include "optics.hpp"
#include "segint.hpp"

namespace lnf {

/// All observables at one (x, omega), reported in the fixed output units:
/// field fluctuations in hbar w/(2 pi eps0 c S) and hbar w/(2 pi mu0 c S),
/// electric LDOS in 2/(pi c S), energy density in hbar w/(2 pi c S),
/// Poynting flux in hbar w/(1000 pi S), net emission in hbar w^2/(1000 pi c S).
struct SpectralPoint {
  double x = 0.0;  // m
  double photon_energy_eV = 0.0;
  double photon_number = 0.0;
  double temperature = 0.0;  // K, effective field temperature
  double efield_fluct = 0.0;
  double hfield_fluct = 0.0;
  double ldos = 0.0;
  double energy_density = 0.0;
  double poynting = 0.0;
  double net_emission = 0.0;
};

enum class CommutatorDomain : std::uint8_t { RR, LL, RL };

/// Coefficient of delta(w - w') in the commutator of the source-domain ladder
/// operators at positions (x, xp). RR collects sources left of both points,
/// LL right of both, RL the overlap strip (zero for x <= xp).
struct CommutatorKernel {
  cplx value{0.0, 0.0};
  CommutatorDomain domain = CommutatorDomain::RR;
  double x = 0.0;
  double xp = 0.0;
};

/// Evaluates the observables of one scene at one frequency. Construction
/// builds the Green's basis and per-layer occupations; everything afterwards
/// is pure and safe to call concurrently.
class SpectralEvaluator {
 public:
  SpectralEvaluator(const Geometry& geometry, const EvalContext& ctx);

  const GreensBasis& basis() const { return basis_; }
  const EvalContext& ctx() const { return ctx_; }
  const std::vector<double>& occupations() const { return eta_; }

  /// Ladder normalization, real positive, from Im G(x, x).
  double normalization_c(double x) const;
  /// Same quantity from the closed-form |G_A|^2 integral (validation pair).
  double normalization_c_integral(double x) const;

  double photon_number(double x) const;
  double effective_field_temperature(double x) const;
  double efield_fluctuation(double x) const;  // output units
  double hfield_fluctuation(double x) const;
  double electric_ldos(double x) const;
  double energy_density(double x) const;
  double poynting(double x) const;
  double net_emission(double x) const;

  double efield_fluctuation_si(double x) const;
  double hfield_fluctuation_si(double x) const;
  double poynting_si(double x) const;
  double net_emission_si(double x) const;

  /// Central-difference d<S>/dx minus the local net emission rate, in SI;
  /// vanishes to O(h^2) inside homogeneous regions.
  double poynting_theorem_residual(double x, double h) const;

  CommutatorKernel commutator_kernel(double x, double xp, CommutatorDomain domain) const;

  SpectralPoint evaluate(double x) const;

  /// Energy-density dispersion factor |d(chi w)/dw| from a tabulated index
  /// pair at w -/+ delta; equals |chi| for a frequency-flat susceptibility.
  static double dispersion_factor_numeric(cplx n_minus, cplx n_plus, double omega,
                                          double delta);

 private:
  double c_squared(double x) const;  // |C|^2 via Im G, with positivity check
  double im_g_coincident(double x) const;

  Geometry geometry_;
  EvalContext ctx_;
  GreensBasis basis_;
  std::vector<double> eta_;            // per-layer occupation
  std::vector<double> eta_plus_half_;  // source weights of the fluctuation integrals
  std::vector<double> ones_;
};

}  // namespace lnf
