#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "optics.hpp"

namespace lnf {

/// Validity of a term relative to the observation point: terms produced by
/// splitting e^{ik|x-x'|} apply on one side of x' = x only. `left` covers
/// x' <= x and `right` covers x' > x, so the coincident point is counted once.
enum class KinkSide : std::uint8_t { none, left, right };

/// One exponential building block of the Green's function,
///   value = coeff * e^{obs_exponent * x} * e^{src_exponent * x'},
/// valid for x in obs_region and x' in src_region (restricted by `kink`).
/// `direction` is +1 for e^{+ik x} observation dependence and -1 for e^{-ik x},
/// which defines the split into right/left propagating parts.
struct GreensTerm {
  cplx coeff;
  cplx obs_exponent;
  cplx src_exponent;
  int direction = +1;
  KinkSide kink = KinkSide::none;
};

enum class Regularize : std::uint8_t { no, yes };

/// Analytic Green's function of the 1D Helmholtz equation for the supported
/// layered geometries, stored as exponential terms per (observation, source)
/// region pair. Immutable after construction; evaluation is pure.
///
/// With Regularize::yes every lossless layer is given Im(n) = loss_epsilon in
/// both the wavevectors and the noise-current scaling; this is the picture the
/// quadrature oracle integrates, whose eps -> 0 limit the production path
/// (Regularize::no plus analytic half-space limits) reproduces.
class GreensBasis {
 public:
  GreensBasis(const Geometry& geometry, const EvalContext& ctx,
              Regularize reg = Regularize::no);

  const Geometry& geometry() const { return geometry_; }
  const EvalContext& ctx() const { return ctx_; }
  bool regularized() const { return regularized_; }

  cplx wavevec(int region) const { return k_[static_cast<size_t>(region)]; }
  cplx index(int region) const { return n_[static_cast<size_t>(region)]; }
  /// Noise-current scaling j0^2 = 4 pi hbar w^2 eps0 Im(n^2)/S of the source
  /// layer; identically zero for unregularized lossless layers.
  double j0_squared(int region) const { return j0sq_[static_cast<size_t>(region)]; }

  const std::vector<GreensTerm>& terms(int obs_region, int src_region) const {
    return terms_[static_cast<size_t>(obs_region)][static_cast<size_t>(src_region)];
  }

  /// G(x, w, x').
  cplx eval(double x, double xp) const;
  /// G evaluated with a forced observation-region dispatch (interface checks).
  cplx eval_in_region(int obs_region, double x, double xp) const;
  /// dG/dx, analytic.
  cplx eval_dx(double x, double xp) const;
  cplx eval_dx_in_region(int obs_region, double x, double xp) const;
  /// (G_R, G_L) with G_R + G_L = G exactly.
  std::pair<cplx, cplx> split_rl(double x, double xp) const;

  /// Copy with one term's coefficient scaled (corruption hook for the
  /// continuity negative control in the validation suite).
  GreensBasis with_scaled_term(int obs_region, int src_region, size_t index,
                               cplx scale) const;

 private:
  void build();
  void add(int obs, int src, cplx coeff, cplx p, cplx q, int dir,
           KinkSide kink = KinkSide::none);
  void add_kink_pair(int region, cplx amplitude, cplx k);
  bool term_applies(const GreensTerm& t, double x, double xp) const;

  Geometry geometry_;
  EvalContext ctx_;
  bool regularized_;
  std::vector<cplx> n_;
  std::vector<cplx> k_;
  std::vector<double> j0sq_;
  std::vector<std::vector<std::vector<GreensTerm>>> terms_;
};

struct ScaledKernels {
  cplx A;  // vector potential kernel  mu0 j0 G
  cplx E;  // electric field kernel    i w mu0 j0 G
  cplx B;  // magnetic flux kernel     (i w n(x)/c) mu0 j0 (G_R - G_L)
  cplx H;  // field strength kernel    B / mu0 (non-magnetic media)
};

/// All four scaled kernels at one point pair. j0 uses the source layer of x'.
ScaledKernels scaled_kernels(const GreensBasis& basis, double x, double xp);

struct ContinuityReport {
  double max_value_jump = 0.0;  // relative
  double max_slope_jump = 0.0;  // relative
  int worst_interface = -1;
  double worst_interface_x = 0.0;
};

/// Relative jumps of G and dG/dx across each interface, probed over a spread
/// of source points. Clean bases sit at rounding level; a corrupted Fresnel
/// coefficient shows up as an O(1) jump at the affected interface.
ContinuityReport check_continuity(const GreensBasis& basis);

}  // namespace lnf
