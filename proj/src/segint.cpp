#include "segint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "constants.hpp"
#include "errors.hpp"

namespace lnf {

namespace {

const cplx kI(0.0, 1.0);
constexpr double kInf = std::numeric_limits<double>::infinity();

// e^z - 1 without cancellation for small z.
cplx expm1c(cplx z) {
  const double em = std::expm1(z.real());
  const double sy = std::sin(z.imag());
  const double shalf = std::sin(0.5 * z.imag());
  return {em * std::cos(z.imag()) - 2.0 * shalf * shalf, (em + 1.0) * sy};
}

}  // namespace

cplx integrate_exp(const ExpSegment& seg) {
  const bool a_inf = std::isinf(seg.a);
  const bool b_inf = std::isinf(seg.b);
  const cplx c = seg.coefficient;
  const cplx p = seg.exponent;

  if (!a_inf && !b_inf) {
    if (!(seg.a <= seg.b)) throw std::invalid_argument("integrate_exp: a > b");
    const double width = seg.b - seg.a;
    const cplx z = p * width;
    if (std::abs(z) < 1e-8) {
      // c (b-a) e^{pa} (1 + z/2 + z^2/6 + z^3/24); truncation ~ |z|^4/120.
      const cplx series = 1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0));
      return c * width * std::exp(p * seg.a) * series;
    }
    return c * std::exp(p * seg.a) * expm1c(z) / p;
  }
  if (b_inf && !a_inf) {
    if (!(p.real() < 0.0))
      throw std::domain_error("integrate_exp: divergent segment toward +inf");
    return -c * std::exp(p * seg.a) / p;
  }
  if (a_inf && !b_inf) {
    if (!(p.real() > 0.0))
      throw std::domain_error("integrate_exp: divergent segment toward -inf");
    return c * std::exp(p * seg.b) / p;
  }
  throw std::domain_error("integrate_exp: doubly infinite segment");
}

double lossless_halfspace_weight(cplx c_amp, cplx /*k*/, cplx n, double /*boundary*/,
                                 HalfSpaceSide /*side*/, const EvalContext& ctx) {
  if (n.imag() != 0.0)
    throw std::invalid_argument("lossless_halfspace_weight: layer is lossy");
  const double a2 = std::norm(c_amp);
  return 4.0 * consts::pi * consts::hbar * ctx.omega * consts::eps0 * consts::c0 *
         n.real() * a2 / ctx.area;
}

namespace {

struct ProfileEntry {
  cplx amp;   // kernel amplitude at the fixed observation point
  cplx q;     // source-coordinate exponent
  KinkSide side;
};

// Kernel K(x, y) restricted to source region s equals
//   j0(s) * sum over applicable entries of amp * e^{q y}.
struct SourceProfile {
  double anchor = 0.0;
  std::vector<std::vector<ProfileEntry>> per_region;
};

SourceProfile make_profile(const GreensBasis& basis, KernelKind kind, double x) {
  const Geometry& g = basis.geometry();
  const int o = g.region_of(x);
  const double w = basis.ctx().omega;
  cplx scale;
  switch (kind) {
    case KernelKind::A:
      scale = consts::mu0;
      break;
    case KernelKind::E:
      scale = kI * w * consts::mu0;
      break;
    case KernelKind::H:
      scale = kI * w * basis.index(o) / consts::c0;
      break;
  }

  SourceProfile prof;
  prof.anchor = x;
  prof.per_region.resize(static_cast<size_t>(g.region_count()));
  for (int s = 0; s < g.region_count(); ++s) {
    for (const GreensTerm& t : basis.terms(o, s)) {
      cplx amp = scale * t.coeff * std::exp(t.obs_exponent * x);
      if (kind == KernelKind::H) amp *= static_cast<double>(t.direction);
      prof.per_region[static_cast<size_t>(s)].push_back({amp, t.src_exponent, t.kink});
    }
  }
  return prof;
}

bool entry_applies(const ProfileEntry& e, double anchor, double a, double b) {
  // Pieces never straddle an anchor, so comparing one endpoint suffices.
  switch (e.side) {
    case KinkSide::none:
      return true;
    case KinkSide::left:
      return b <= anchor;
    case KinkSide::right:
      return a >= anchor;
  }
  return false;
}

}  // namespace

cplx product_integral(const GreensBasis& basis, KernelKind k1, double x1,
                      KernelKind k2, double x2, double lo, double hi,
                      std::span<const double> weights) {
  const Geometry& g = basis.geometry();
  if (static_cast<int>(weights.size()) != g.region_count())
    throw std::invalid_argument("product_integral: one weight per region required");
  if (!(lo <= hi)) return 0.0;

  const SourceProfile p1 = make_profile(basis, k1, x1);
  const SourceProfile p2 = make_profile(basis, k2, x2);

  cplx total = 0.0;
  for (int s = 0; s < g.region_count(); ++s) {
    const Layer& layer = g.layer(s);
    const double seg_lo = std::max(lo, layer.x_min);
    const double seg_hi = std::min(hi, layer.x_max);
    if (!(seg_lo < seg_hi)) continue;
    const double weight = weights[static_cast<size_t>(s)];
    if (weight == 0.0) continue;

    // Split at the kink anchors that fall inside this piece.
    std::vector<double> cuts{seg_lo};
    for (double anchor : {x1, x2}) {
      if (anchor > seg_lo && anchor < seg_hi) cuts.push_back(anchor);
    }
    cuts.push_back(seg_hi);
    std::sort(cuts.begin(), cuts.end());

    const bool lossless = !basis.regularized() && layer.lossless();
    const double j0sq = basis.j0_squared(s);

    for (size_t c = 0; c + 1 < cuts.size(); ++c) {
      const double a = cuts[c];
      const double b = cuts[c + 1];
      if (!(a < b)) continue;
      const bool infinite = std::isinf(a) || std::isinf(b);

      if (lossless) {
        // j0^2 vanishes; only a semi-infinite piece survives the
        // Im(n) -> 0+ limit, where all valid entries carry the same decaying
        // exponent and the product exponent cancels exactly.
        if (!infinite) continue;
        const double limit_factor = 4.0 * consts::pi * consts::hbar *
                                    basis.ctx().omega * consts::eps0 * consts::c0 *
                                    layer.n.real() / basis.ctx().area;
        cplx pair_sum = 0.0;
        for (const ProfileEntry& e1 : p1.per_region[static_cast<size_t>(s)]) {
          if (!entry_applies(e1, p1.anchor, a, b)) continue;
          for (const ProfileEntry& e2 : p2.per_region[static_cast<size_t>(s)]) {
            if (!entry_applies(e2, p2.anchor, a, b)) continue;
            pair_sum += e1.amp * std::conj(e2.amp);
          }
        }
        total += weight * limit_factor * pair_sum;
        continue;
      }

      for (const ProfileEntry& e1 : p1.per_region[static_cast<size_t>(s)]) {
        if (!entry_applies(e1, p1.anchor, a, b)) continue;
        for (const ProfileEntry& e2 : p2.per_region[static_cast<size_t>(s)]) {
          if (!entry_applies(e2, p2.anchor, a, b)) continue;
          const cplx coeff = weight * j0sq * e1.amp * std::conj(e2.amp);
          total += integrate_exp({coeff, e1.q + std::conj(e2.q), a, b});
        }
      }
    }
  }
  return total;
}

cplx integrate_kernel_product(const GreensBasis& basis, double x, ProductKind kind,
                              std::span<const double> weights) {
  switch (kind) {
    case ProductKind::AA:
      return product_integral(basis, KernelKind::A, x, KernelKind::A, x, -kInf, kInf, weights);
    case ProductKind::EE:
      return product_integral(basis, KernelKind::E, x, KernelKind::E, x, -kInf, kInf, weights);
    case ProductKind::HH:
      return product_integral(basis, KernelKind::H, x, KernelKind::H, x, -kInf, kInf, weights);
    case ProductKind::EH:
      return product_integral(basis, KernelKind::H, x, KernelKind::E, x, -kInf, kInf, weights);
  }
  throw std::logic_error("unknown product kind");
}

namespace {

struct QuadContext {
  const GreensBasis* basis;
  double x;
  ProductKind kind;
};

cplx integrand(const QuadContext& q, double y) {
  const ScaledKernels k = scaled_kernels(*q.basis, q.x, y);
  switch (q.kind) {
    case ProductKind::AA:
      return k.A * std::conj(k.A);
    case ProductKind::EE:
      return k.E * std::conj(k.E);
    case ProductKind::HH:
      return k.H * std::conj(k.H);
    case ProductKind::EH:
      return k.H * std::conj(k.E);
  }
  return 0.0;
}

struct AdaptiveState {
  double abs_tol;
  int max_depth;
  int min_depth;
  bool converged = true;
  double worst_a = 0.0, worst_b = 0.0, worst_err = 0.0;
};

cplx simpson(cplx fa, cplx fm, cplx fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

cplx adaptive_step(const QuadContext& q, AdaptiveState& st, double a, double b, cplx fa,
                   cplx fm, cplx fb, cplx whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const cplx flm = integrand(q, lm);
  const cplx frm = integrand(q, rm);
  const cplx left = simpson(fa, flm, fm, a, m);
  const cplx right = simpson(fm, frm, fb, m, b);
  const double err = std::abs(left + right - whole);
  if (depth >= st.min_depth && err < 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  if (depth >= st.max_depth) {
    st.converged = false;
    if (err > st.worst_err) {
      st.worst_err = err;
      st.worst_a = a;
      st.worst_b = b;
    }
    return left + right;
  }
  return adaptive_step(q, st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         adaptive_step(q, st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

cplx adaptive_piece(const QuadContext& q, AdaptiveState& st, double a, double b,
                    double tol) {
  const cplx fa = integrand(q, a);
  const cplx fm = integrand(q, 0.5 * (a + b));
  const cplx fb = integrand(q, b);
  return adaptive_step(q, st, a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol, 0);
}

// Coarse magnitude estimate used to budget absolute tolerances.
double rough_l1(const QuadContext& q, double a, double b) {
  constexpr int n = 64;
  double sum = 0.0;
  const double h = (b - a) / n;
  for (int i = 0; i <= n; ++i) {
    const double wgt = (i == 0 || i == n) ? 0.5 : 1.0;
    sum += wgt * std::abs(integrand(q, a + i * h));
  }
  return sum * h;
}

}  // namespace

cplx oracle_quadrature(const GreensBasis& basis, double x, ProductKind kind,
                       std::span<const double> weights, double tol,
                       double truncation_depths) {
  const Geometry& g = basis.geometry();
  if (static_cast<int>(weights.size()) != g.region_count())
    throw std::invalid_argument("oracle_quadrature: one weight per region required");
  for (int s = 0; s < g.region_count(); ++s) {
    if (std::imag(basis.index(s)) <= 0.0)
      throw std::invalid_argument(
          "oracle_quadrature: requires lossy or regularized layers");
  }

  const QuadContext q{&basis, x, kind};

  // Pieces: region intervals truncated at the requested number of penetration
  // depths, split at the observation point.
  struct Piece {
    double a, b;
    int region;
  };
  std::vector<Piece> pieces;
  for (int s = 0; s < g.region_count(); ++s) {
    const Layer& layer = g.layer(s);
    const double depth = 1.0 / (2.0 * std::imag(basis.wavevec(s)));
    double a = layer.x_min;
    double b = layer.x_max;
    if (std::isinf(a)) a = std::min(b, x) - truncation_depths * depth;
    if (std::isinf(b)) b = std::max(a, x) + truncation_depths * depth;
    if (x > a && x < b) {
      pieces.push_back({a, x, s});
      pieces.push_back({x, b, s});
    } else {
      pieces.push_back({a, b, s});
    }
  }

  double l1 = 0.0;
  std::vector<double> piece_l1(pieces.size());
  for (size_t i = 0; i < pieces.size(); ++i) {
    piece_l1[i] = rough_l1(q, pieces[i].a, pieces[i].b);
    l1 += piece_l1[i];
  }
  if (l1 == 0.0) return 0.0;

  cplx total = 0.0;
  AdaptiveState st;
  st.max_depth = 48;
  st.min_depth = 7;  // forces sub-oscillation sampling before trusting estimates
  for (size_t i = 0; i < pieces.size(); ++i) {
    const double wgt = weights[static_cast<size_t>(pieces[i].region)];
    if (wgt == 0.0) continue;
    st.abs_tol = tol * 0.5 * (piece_l1[i] + l1 / static_cast<double>(pieces.size()));
    total += wgt * adaptive_piece(q, st, pieces[i].a, pieces[i].b, st.abs_tol);
  }
  if (!st.converged) {
    std::ostringstream msg;
    msg << "oracle_quadrature: no convergence after max subdivisions; worst interval ["
        << st.worst_a << ", " << st.worst_b << "] with error estimate " << st.worst_err;
    throw ConvergenceError(msg.str());
  }
  return total;
}

}  // namespace lnf
