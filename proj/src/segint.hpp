#pragma once

#include <cstdint>
#include <span>

#include "greens.hpp"
#include "optics.hpp"

namespace lnf {

/// A single closed-form integrand piece, integral c * e^{p x'} over [a, b].
/// Endpoints may be infinite when the exponential decays toward them.
struct ExpSegment {
  cplx coefficient{1.0, 0.0};
  cplx exponent{0.0, 0.0};
  double a = 0.0;
  double b = 0.0;
};

/// Exact integral of an ExpSegment. Near p -> 0 a short series replaces the
/// (e^{pb} - e^{pa})/p form; a divergent semi-infinite segment raises
/// std::domain_error.
cplx integrate_exp(const ExpSegment& seg);

enum class HalfSpaceSide : std::uint8_t { left, right };

/// The Im(n) -> 0+ limit of a noise-source integral over a lossless
/// half-space: j0^2 grows like 2 Re(n) eps while the decay integral grows like
/// c/(2 w eps), leaving 4 pi hbar w eps0 c Re(n) |c_amp|^2 / S. Raises
/// std::invalid_argument when called for a lossy layer (the closed form
/// applies there instead).
double lossless_halfspace_weight(cplx c_amp, cplx k, cplx n, double boundary,
                                 HalfSpaceSide side, const EvalContext& ctx);

/// Which scaled kernel a profile describes.
enum class KernelKind : std::uint8_t { A, E, H };

/// Kernel product selectors for the source integrals:
///   AA -> |G_A|^2, EE -> |G_E|^2, HH -> |G_H|^2, EH -> G_H conj(G_E)
/// (the real part of EH is the Poynting integrand).
enum class ProductKind : std::uint8_t { AA, EE, HH, EH };

/// Closed-form integral of K1(x1, y) * conj(K2(x2, y)) * weight(y) over
/// [lo, hi]. Weights are per-region constants (occupations or 1). Lossy
/// source regions integrate exactly; lossless regions contribute their
/// analytic limit on semi-infinite pieces and zero on finite ones.
cplx product_integral(const GreensBasis& basis, KernelKind k1, double x1,
                      KernelKind k2, double x2, double lo, double hi,
                      std::span<const double> weights);

/// product_integral specialization over the whole line at a single
/// observation point, selected by ProductKind.
cplx integrate_kernel_product(const GreensBasis& basis, double x, ProductKind kind,
                              std::span<const double> weights);

/// Independent adaptive-quadrature evaluation of the same integral on a
/// regularized basis (all layers lossy). Semi-infinite domains are truncated
/// at `truncation_depths` penetration depths 1/(2 Im k). Raises
/// ConvergenceError when interval halving fails to stabilize within tol.
cplx oracle_quadrature(const GreensBasis& basis, double x, ProductKind kind,
                       std::span<const double> weights, double tol,
                       double truncation_depths = 40.0);

}  // namespace lnf
