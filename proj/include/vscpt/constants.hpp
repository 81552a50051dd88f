#pragma once

#include <complex>
#include <numbers>

namespace vscpt {

using cplx = std::complex<double>;

// CODATA 2018, SI.
namespace phys {
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double c = 299792458.0;              // m / s
inline constexpr double eps0 = 8.8541878128e-12;      // F / m
inline constexpr double e = 1.602176634e-19;          // C
inline constexpr double a0 = 5.29177210903e-11;       // m
inline constexpr double amu = 1.66053906660e-27;      // kg
}  // namespace phys

inline constexpr cplx I{0.0, 1.0};
inline constexpr double pi = std::numbers::pi;

}  // namespace vscpt
