#pragma once

#include <complex>
#include <vector>

namespace lnf {

using cplx = std::complex<double>;

/// One homogeneous piece of the stack: complex refractive index at the
/// evaluation frequency, source temperature, and the interval it occupies.
/// Media are passive (Im n >= 0) and non-magnetic.
struct Layer {
  cplx n{1.0, 0.0};
  double temperature = 0.0;  // K
  double x_min = 0.0;        // m, may be -inf
  double x_max = 0.0;        // m, may be +inf

  bool lossless() const { return n.imag() == 0.0; }
};

enum class GeometryKind { homogeneous, single_interface, slab };

/// Piecewise-homogeneous scene. Layers tile the real line contiguously with
/// interfaces at x = 0 (and x = d for the slab). Gain media are rejected.
class Geometry {
 public:
  static Geometry homogeneous(cplx n, double temperature);
  static Geometry single_interface(cplx n1, double t1, cplx n2, double t2);
  static Geometry slab(cplx n1, double t1, cplx n2, double t2, cplx n3, double t3,
                       double gap);

  GeometryKind kind() const { return kind_; }
  const std::vector<Layer>& layers() const { return layers_; }
  const Layer& layer(int region) const { return layers_[static_cast<size_t>(region)]; }
  int region_count() const { return static_cast<int>(layers_.size()); }
  const std::vector<double>& interfaces() const { return interfaces_; }
  double gap() const { return gap_; }

  /// Region index of an observation or source point. Intervals are half-open
  /// [x_i, x_{i+1}), so a point exactly on an interface belongs to the region
  /// on its right.
  int region_of(double x) const;

  /// Same stack with every layer temperature replaced by t (equilibrium variants).
  Geometry with_uniform_temperature(double t) const;

 private:
  Geometry(GeometryKind kind, std::vector<Layer> layers, std::vector<double> interfaces,
           double gap);
  void validate() const;

  GeometryKind kind_;
  std::vector<Layer> layers_;
  std::vector<double> interfaces_;
  double gap_ = 0.0;
};

/// Everything fixed for one evaluation frequency.
struct EvalContext {
  double omega = 0.0;            // angular frequency, rad/s
  double photon_energy_eV = 0.0; // hbar*omega in eV
  double area = 1.0;             // quantization area S in the y-z plane, m^2
  double loss_epsilon = 1e-9;    // Im(n) used when regularizing lossless layers

  static EvalContext from_photon_energy(double energy_eV, double area = 1.0,
                                        double loss_epsilon = 1e-9);
};

/// k = omega n / c. With `regularized` set, a lossless layer gets
/// k = omega (Re n + i loss_epsilon) / c; lossy layers are returned unchanged.
cplx wavevector(const Layer& layer, const EvalContext& ctx, bool regularized = false);

/// Thermal occupation 1/(e^{hbar w/kB T} - 1); exactly 0 at T = 0.
double bose_einstein(double temperature, const EvalContext& ctx);

/// Inverse of bose_einstein at fixed frequency; 0 maps to 0 K.
double effective_temperature(double n_eff, const EvalContext& ctx);

struct FresnelPair {
  cplx r;
  cplx t;
};

/// Normal-incidence amplitude coefficients for a wave in medium 1 hitting
/// medium 2. The reversed-side pair is fresnel(n2, n1).
FresnelPair fresnel(cplx n1, cplx n2);

/// Interface coefficients of the two-interface structure n1 | n2 (width d) | n3.
/// Lowercase members are the bare single-interface coefficients; uppercase
/// members fold in the cavity round trips where the wave actually experiences
/// them:
///   R1, R2p  - stack reflection seen from medium 1 / medium 3
///   T1, T2p  - transmission into the cavity from medium 1 / medium 3
///   T1p, T2  - transmission out of the cavity (bare, nothing beyond)
///   R1p, R2  - reflection inside the cavity at the left/right wall (bare)
struct SlabCoefficients {
  cplx r1, t1, r1p, t1p;  // first interface, from the left / from the right
  cplx r2, t2, r2p, t2p;  // second interface, from the left / from the right
  cplx phase;             // e^{2 i k2 d}
  cplx nu;                // 1 / (1 + r1 r2 e^{2 i k2 d})
  cplx R1, T1, R2, T2;
  cplx R1p, T1p, R2p, T2p;
};

SlabCoefficients slab_coefficients(cplx n1, cplx n2, cplx n3, double d,
                                   const EvalContext& ctx);

}  // namespace lnf
