#include "optics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "constants.hpp"
#include "errors.hpp"

namespace lnf {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Geometry::Geometry(GeometryKind kind, std::vector<Layer> layers,
                   std::vector<double> interfaces, double gap)
    : kind_(kind), layers_(std::move(layers)), interfaces_(std::move(interfaces)), gap_(gap) {
  validate();
}

Geometry Geometry::homogeneous(cplx n, double temperature) {
  return Geometry(GeometryKind::homogeneous, {Layer{n, temperature, -kInf, kInf}}, {}, 0.0);
}

Geometry Geometry::single_interface(cplx n1, double t1, cplx n2, double t2) {
  return Geometry(GeometryKind::single_interface,
                  {Layer{n1, t1, -kInf, 0.0}, Layer{n2, t2, 0.0, kInf}}, {0.0}, 0.0);
}

Geometry Geometry::slab(cplx n1, double t1, cplx n2, double t2, cplx n3, double t3,
                        double gap) {
  if (!(gap > 0.0)) throw std::invalid_argument("slab gap width must be positive");
  return Geometry(GeometryKind::slab,
                  {Layer{n1, t1, -kInf, 0.0}, Layer{n2, t2, 0.0, gap},
                   Layer{n3, t3, gap, kInf}},
                  {0.0, gap}, gap);
}

void Geometry::validate() const {
  const size_t expected = kind_ == GeometryKind::homogeneous       ? 1
                          : kind_ == GeometryKind::single_interface ? 2
                                                                    : 3;
  if (layers_.size() != expected)
    throw std::invalid_argument("layer count does not match geometry kind");
  for (const Layer& l : layers_) {
    if (!(l.n.imag() >= 0.0))
      throw std::domain_error("gain medium rejected: Im(n) must be >= 0");
    if (!(l.temperature >= 0.0))
      throw std::domain_error("layer temperature must be >= 0 K");
    if (!(l.x_min < l.x_max)) throw std::invalid_argument("layer interval is empty");
  }
  if (layers_.front().x_min != -kInf || layers_.back().x_max != kInf)
    throw std::invalid_argument("outer layers must be semi-infinite");
  for (size_t i = 0; i + 1 < layers_.size(); ++i) {
    if (layers_[i].x_max != layers_[i + 1].x_min)
      throw std::invalid_argument("layers must tile the real line contiguously");
  }
}

int Geometry::region_of(double x) const {
  int region = 0;
  for (double xi : interfaces_) {
    if (x >= xi) ++region;
  }
  return region;
}

Geometry Geometry::with_uniform_temperature(double t) const {
  Geometry copy = *this;
  for (Layer& l : copy.layers_) l.temperature = t;
  copy.validate();
  return copy;
}

EvalContext EvalContext::from_photon_energy(double energy_eV, double area,
                                            double loss_epsilon) {
  if (!(energy_eV > 0.0)) throw std::domain_error("photon energy must be positive");
  if (!(area > 0.0)) throw std::domain_error("quantization area must be positive");
  if (!(loss_epsilon > 0.0 && loss_epsilon <= 1e-6))
    throw std::domain_error("loss_epsilon must be in (0, 1e-6]");
  EvalContext ctx;
  ctx.omega = energy_eV * consts::eV / consts::hbar;
  ctx.photon_energy_eV = energy_eV;
  ctx.area = area;
  ctx.loss_epsilon = loss_epsilon;
  return ctx;
}

cplx wavevector(const Layer& layer, const EvalContext& ctx, bool regularized) {
  cplx n = layer.n;
  if (regularized && layer.lossless()) n = cplx(n.real(), ctx.loss_epsilon);
  return ctx.omega / consts::c0 * n;
}

double bose_einstein(double temperature, const EvalContext& ctx) {
  if (temperature < 0.0) throw std::domain_error("bose_einstein: negative temperature");
  if (temperature == 0.0) return 0.0;
  const double x = consts::hbar * ctx.omega / (consts::kB * temperature);
  return 1.0 / std::expm1(x);  // underflows to 0 for very large x
}

double effective_temperature(double n_eff, const EvalContext& ctx) {
  if (n_eff < 0.0) throw std::domain_error("effective_temperature: negative occupation");
  if (n_eff == 0.0) return 0.0;
  return consts::hbar * ctx.omega / (consts::kB * std::log1p(1.0 / n_eff));
}

FresnelPair fresnel(cplx n1, cplx n2) {
  const cplx den = n1 + n2;
  if (std::abs(den) == 0.0) throw std::invalid_argument("fresnel: n1 + n2 vanishes");
  return {(n1 - n2) / den, 2.0 * n1 / den};
}

SlabCoefficients slab_coefficients(cplx n1, cplx n2, cplx n3, double d,
                                   const EvalContext& ctx) {
  if (!(d > 0.0)) throw std::invalid_argument("slab_coefficients: width must be positive");
  SlabCoefficients s;
  const FresnelPair f1 = fresnel(n1, n2);
  const FresnelPair f1r = fresnel(n2, n1);
  const FresnelPair f2 = fresnel(n2, n3);
  const FresnelPair f2r = fresnel(n3, n2);
  s.r1 = f1.r;
  s.t1 = f1.t;
  s.r1p = f1r.r;
  s.t1p = f1r.t;
  s.r2 = f2.r;
  s.t2 = f2.t;
  s.r2p = f2r.r;
  s.t2p = f2r.t;

  const cplx k2 = ctx.omega / consts::c0 * n2;
  s.phase = std::exp(cplx(0.0, 2.0) * k2 * d);
  const cplx den = 1.0 + s.r1 * s.r2 * s.phase;
  if (std::abs(den) < 1e-12)
    throw SingularGeometryError("slab_coefficients: resonant denominator 1 + r1 r2 e^{2ik2d} vanishes");
  s.nu = 1.0 / den;

  s.R1 = (s.r1 + s.r2 * s.phase) * s.nu;
  s.T1 = s.t1 * s.nu;
  s.R2 = s.r2;
  s.T2 = s.t2;
  s.R1p = s.r1p;
  s.T1p = s.t1p;
  s.R2p = -(s.r2 + s.r1 * s.phase) * s.nu;
  s.T2p = s.t2p * s.nu;
  return s;
}

}  // namespace lnf
