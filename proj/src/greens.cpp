#include "greens.hpp"

#include <cmath>
#include <stdexcept>

#include "constants.hpp"
#include "errors.hpp"

namespace lnf {

namespace {
const cplx kI(0.0, 1.0);
}

GreensBasis::GreensBasis(const Geometry& geometry, const EvalContext& ctx, Regularize reg)
    : geometry_(geometry), ctx_(ctx), regularized_(reg == Regularize::yes) {
  const int nr = geometry_.region_count();
  n_.resize(static_cast<size_t>(nr));
  k_.resize(static_cast<size_t>(nr));
  j0sq_.resize(static_cast<size_t>(nr));
  for (int r = 0; r < nr; ++r) {
    const Layer& l = geometry_.layer(r);
    cplx n = l.n;
    if (regularized_ && l.lossless()) n = cplx(n.real(), ctx_.loss_epsilon);
    n_[static_cast<size_t>(r)] = n;
    k_[static_cast<size_t>(r)] = ctx_.omega / consts::c0 * n;
    j0sq_[static_cast<size_t>(r)] = 4.0 * consts::pi * consts::hbar * ctx_.omega *
                                    ctx_.omega * consts::eps0 * std::imag(n * n) /
                                    ctx_.area;
  }
  terms_.assign(static_cast<size_t>(nr),
                std::vector<std::vector<GreensTerm>>(static_cast<size_t>(nr)));
  build();
}

void GreensBasis::add(int obs, int src, cplx coeff, cplx p, cplx q, int dir,
                      KinkSide kink) {
  terms_[static_cast<size_t>(obs)][static_cast<size_t>(src)].push_back(
      GreensTerm{coeff, p, q, dir, kink});
}

// The |x - x'| part of the same-region response, split at x' = x into a
// right-propagating branch (source to the left) and a left-propagating one.
void GreensBasis::add_kink_pair(int region, cplx amplitude, cplx k) {
  add(region, region, amplitude, kI * k, -kI * k, +1, KinkSide::left);
  add(region, region, amplitude, -kI * k, kI * k, -1, KinkSide::right);
}

void GreensBasis::build() {
  switch (geometry_.kind()) {
    case GeometryKind::homogeneous: {
      const cplx k = k_[0];
      add_kink_pair(0, kI / (2.0 * k), k);
      return;
    }
    case GeometryKind::single_interface: {
      const cplx k1 = k_[0], k2 = k_[1];
      const FresnelPair f = fresnel(n_[0], n_[1]);
      const FresnelPair fr = fresnel(n_[1], n_[0]);
      const cplx a1 = kI / (2.0 * k1), a2 = kI / (2.0 * k2);

      add_kink_pair(0, a1, k1);
      add(0, 0, a1 * f.r, -kI * k1, -kI * k1, -1);    // reflected at the interface
      add(0, 1, a2 * fr.t, -kI * k1, kI * k2, -1);    // transmitted from the right
      add(1, 0, a1 * f.t, kI * k2, -kI * k1, +1);     // transmitted from the left
      add_kink_pair(1, a2, k2);
      add(1, 1, a2 * fr.r, kI * k2, kI * k2, +1);     // reflected at the interface
      return;
    }
    case GeometryKind::slab: {
      const double d = geometry_.gap();
      const cplx k1 = k_[0], k2 = k_[1], k3 = k_[2];
      // Build the composites from the effective (possibly regularized) indices
      // so the oracle picture stays internally consistent.
      EvalContext ctx = ctx_;
      const SlabCoefficients s = slab_coefficients(n_[0], n_[1], n_[2], d, ctx);
      const cplx a1 = kI / (2.0 * k1), a2 = kI / (2.0 * k2), a3 = kI / (2.0 * k3);
      const cplx cross = std::exp(kI * (k2 - k3) * d);  // e^{i k2 d} e^{-i k3 d}

      // Observation in the left medium.
      add_kink_pair(0, a1, k1);
      add(0, 0, a1 * s.R1, -kI * k1, -kI * k1, -1);
      add(0, 1, a2 * s.T1p * s.nu, -kI * k1, kI * k2, -1);
      add(0, 1, a2 * s.T1p * s.nu * s.r2 * s.phase, -kI * k1, -kI * k2, -1);
      add(0, 2, a3 * s.T1p * s.T2p * cross, -kI * k1, kI * k3, -1);

      // Observation inside the cavity.
      add(1, 0, a1 * s.T1, kI * k2, -kI * k1, +1);
      add(1, 0, a1 * s.T1 * s.r2 * s.phase, -kI * k2, -kI * k1, -1);
      add_kink_pair(1, a2, k2);
      add(1, 1, a2 * s.nu * s.r1p, kI * k2, kI * k2, +1);
      add(1, 1, a2 * s.nu * s.r1p * s.r2 * s.phase, kI * k2, -kI * k2, +1);
      add(1, 1, a2 * s.nu * s.r2 * s.phase, -kI * k2, -kI * k2, -1);
      add(1, 1, a2 * s.nu * s.r2 * s.phase * s.r1p, -kI * k2, kI * k2, -1);
      add(1, 2, a3 * s.T2p * cross, -kI * k2, kI * k3, -1);
      add(1, 2, a3 * s.T2p * s.r1p * cross, kI * k2, kI * k3, +1);

      // Observation in the right medium.
      add(2, 0, a1 * s.T1 * s.T2 * cross, kI * k3, -kI * k1, +1);
      add(2, 1, a2 * s.T2 * s.nu * cross, kI * k3, -kI * k2, +1);
      add(2, 1, a2 * s.T2 * s.nu * s.r1p * cross, kI * k3, kI * k2, +1);
      add_kink_pair(2, a3, k3);
      add(2, 2, a3 * s.R2p * std::exp(-2.0 * kI * k3 * d), kI * k3, kI * k3, +1);
      return;
    }
  }
  throw std::logic_error("unknown geometry kind");
}

bool GreensBasis::term_applies(const GreensTerm& t, double x, double xp) const {
  switch (t.kink) {
    case KinkSide::none:
      return true;
    case KinkSide::left:
      return xp <= x;
    case KinkSide::right:
      return xp > x;
  }
  return false;
}

cplx GreensBasis::eval(double x, double xp) const {
  return eval_in_region(geometry_.region_of(x), x, xp);
}

cplx GreensBasis::eval_in_region(int obs_region, double x, double xp) const {
  const int s = geometry_.region_of(xp);
  cplx g = 0.0;
  for (const GreensTerm& t : terms(obs_region, s)) {
    if (!term_applies(t, x, xp)) continue;
    g += t.coeff * std::exp(t.obs_exponent * x + t.src_exponent * xp);
  }
  return g;
}

cplx GreensBasis::eval_dx(double x, double xp) const {
  return eval_dx_in_region(geometry_.region_of(x), x, xp);
}

cplx GreensBasis::eval_dx_in_region(int obs_region, double x, double xp) const {
  const int s = geometry_.region_of(xp);
  cplx g = 0.0;
  for (const GreensTerm& t : terms(obs_region, s)) {
    if (!term_applies(t, x, xp)) continue;
    g += t.coeff * t.obs_exponent * std::exp(t.obs_exponent * x + t.src_exponent * xp);
  }
  return g;
}

std::pair<cplx, cplx> GreensBasis::split_rl(double x, double xp) const {
  const int o = geometry_.region_of(x);
  const int s = geometry_.region_of(xp);
  cplx right = 0.0, left = 0.0;
  for (const GreensTerm& t : terms(o, s)) {
    if (!term_applies(t, x, xp)) continue;
    const cplx v = t.coeff * std::exp(t.obs_exponent * x + t.src_exponent * xp);
    (t.direction > 0 ? right : left) += v;
  }
  return {right, left};
}

GreensBasis GreensBasis::with_scaled_term(int obs_region, int src_region, size_t index,
                                          cplx scale) const {
  GreensBasis copy = *this;
  auto& list = copy.terms_[static_cast<size_t>(obs_region)][static_cast<size_t>(src_region)];
  if (index >= list.size()) throw std::out_of_range("with_scaled_term: no such term");
  list[index].coeff *= scale;
  return copy;
}

ScaledKernels scaled_kernels(const GreensBasis& basis, double x, double xp) {
  const int o = basis.geometry().region_of(x);
  const int s = basis.geometry().region_of(xp);
  const double j0 = std::sqrt(basis.j0_squared(s));
  const double w = basis.ctx().omega;
  const cplx g = basis.eval(x, xp);
  const auto [gr, gl] = basis.split_rl(x, xp);

  ScaledKernels k;
  k.A = consts::mu0 * j0 * g;
  k.E = kI * w * k.A;
  k.B = kI * w * basis.index(o) / consts::c0 * consts::mu0 * j0 * (gr - gl);
  k.H = k.B / consts::mu0;
  return k;
}

ContinuityReport check_continuity(const GreensBasis& basis) {
  const Geometry& g = basis.geometry();
  ContinuityReport rep;
  const double lambda = 2.0 * consts::pi * consts::c0 / basis.ctx().omega;

  for (size_t i = 0; i < g.interfaces().size(); ++i) {
    const double xi = g.interfaces()[i];
    const int left = static_cast<int>(i);
    const int right = static_cast<int>(i) + 1;

    // Source points spread over every region, near and far from the interface.
    std::vector<double> sources;
    for (int r = 0; r < g.region_count(); ++r) {
      const Layer& l = g.layer(r);
      const double lo = std::isinf(l.x_min) ? l.x_max - 2.0 * lambda : l.x_min;
      const double hi = std::isinf(l.x_max) ? l.x_min + 2.0 * lambda : l.x_max;
      for (double f : {0.13, 0.41, 0.87}) sources.push_back(lo + f * (hi - lo));
    }

    for (double xp : sources) {
      const cplx gl_val = basis.eval_in_region(left, xi, xp);
      const cplx gr_val = basis.eval_in_region(right, xi, xp);
      const double scale = std::max(std::abs(gl_val), std::abs(gr_val));
      if (scale > 0.0) {
        const double jump = std::abs(gl_val - gr_val) / scale;
        if (jump > rep.max_value_jump) {
          rep.max_value_jump = jump;
          rep.worst_interface = static_cast<int>(i);
          rep.worst_interface_x = xi;
        }
      }
      const cplx dl = basis.eval_dx_in_region(left, xi, xp);
      const cplx dr = basis.eval_dx_in_region(right, xi, xp);
      const double dscale = std::max(std::abs(dl), std::abs(dr));
      if (dscale > 0.0) {
        const double jump = std::abs(dl - dr) / dscale;
        if (jump > rep.max_slope_jump) {
          rep.max_slope_jump = jump;
          if (jump > rep.max_value_jump) {
            rep.worst_interface = static_cast<int>(i);
            rep.worst_interface_x = xi;
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace lnf
