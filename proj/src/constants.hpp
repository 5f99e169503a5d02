#pragma once

#include <numbers>

namespace lnf::consts {

// SI defining constants (exact).
inline constexpr double pi = std::numbers::pi;
inline constexpr double c0 = 299792458.0;           // speed of light, m/s
inline constexpr double h_planck = 6.62607015e-34;  // Planck constant, J s
inline constexpr double hbar = h_planck / (2.0 * pi);
inline constexpr double eV = 1.602176634e-19;       // J per electronvolt
inline constexpr double kB = 1.380649e-23;          // Boltzmann constant, J/K
inline constexpr double kB_eV = kB / eV;            // 8.617333262e-5 eV/K

// CODATA 2018 vacuum permittivity.
inline constexpr double eps0 = 8.8541878128e-12;  // F/m

// Defined through eps0 so that mu0*eps0*c0^2 == 1 holds exactly; the
// normalization identities between the kernel integrals and Im G rely on
// this pairing being exact in floating point.
inline constexpr double mu0 = 1.0 / (eps0 * c0 * c0);

inline constexpr double hbar_c_eV_nm = hbar * c0 / eV * 1e9;  // 197.3269804 eV nm

}  // namespace lnf::consts
