#include "vscpt/faddeeva.hpp"

#include <cmath>

#include "vscpt/error.hpp"

namespace vscpt {

namespace {

constexpr double two_over_sqrt_pi = 1.12837916709551257388;
constexpr double max_exp = 708.503061461606;

// w(z) for x = Re z >= 0, y = Im z >= 0. Returns also exp(-z^2) pieces
// needed for reflection into the lower half plane.
cplx w_first_quadrant(double x, double y, bool& small_region, double& u2,
                      double& v2) {
  const double xs = x / 6.3;
  const double ys = y / 4.4;
  double qrho = xs * xs + ys * ys;
  const double xquad = x * x - y * y;
  const double yquad = 2.0 * x * y;
  small_region = qrho < 0.085264;
  double u = 0.0;
  double v = 0.0;
  if (small_region) {
    // Power series of erf (Abramowitz & Stegun 7.1.5), then
    // w = exp(-z^2) (1 - erf(-iz)).
    qrho = (1.0 - 0.85 * ys) * std::sqrt(qrho);
    const int n = static_cast<int>(std::lround(6.0 + 72.0 * qrho));
    int j = 2 * n + 1;
    double xsum = 1.0 / j;
    double ysum = 0.0;
    for (int i = n; i >= 1; --i) {
      j -= 2;
      const double xaux = (xsum * xquad - ysum * yquad) / i;
      ysum = (xsum * yquad + ysum * xquad) / i;
      xsum = xaux + 1.0 / j;
    }
    const double u1 = -two_over_sqrt_pi * (xsum * y + ysum * x) + 1.0;
    const double v1 = two_over_sqrt_pi * (xsum * x - ysum * y);
    const double daux = std::exp(-xquad);
    u2 = daux * std::cos(yquad);
    v2 = -daux * std::sin(yquad);
    u = u1 * u2 - v1 * v2;
    v = u1 * v2 + v1 * u2;
    return {u, v};
  }

  double h = 0.0;
  int kapn = 0;
  int nu = 0;
  if (qrho > 1.0) {
    // Laplace continued fraction.
    qrho = std::sqrt(qrho);
    nu = static_cast<int>(3.0 + 1442.0 / (26.0 * qrho + 77.0));
  } else {
    // Truncated Taylor expansion about z + i h, coefficients from the
    // continued fraction (Gautschi).
    qrho = (1.0 - ys) * std::sqrt(1.0 - qrho);
    h = 1.88 * qrho;
    kapn = static_cast<int>(std::lround(7.0 + 34.0 * qrho));
    nu = static_cast<int>(std::lround(16.0 + 26.0 * qrho));
  }
  const double h2 = 2.0 * h;
  double qlambda = h > 0.0 ? std::pow(h2, kapn) : 0.0;
  double rx = 0.0, ry = 0.0, sx = 0.0, sy = 0.0;
  for (int n = nu; n >= 0; --n) {
    const double np1 = n + 1.0;
    double tx = y + h + np1 * rx;
    double ty = x - np1 * ry;
    const double cc = 0.5 / (tx * tx + ty * ty);
    rx = cc * tx;
    ry = cc * ty;
    if (h > 0.0 && n <= kapn) {
      tx = qlambda + sx;
      sx = rx * tx - ry * sy;
      sy = ry * tx + rx * sy;
      qlambda /= h2;
    }
  }
  if (h == 0.0) {
    u = two_over_sqrt_pi * rx;
    v = two_over_sqrt_pi * ry;
  } else {
    u = two_over_sqrt_pi * sx;
    v = two_over_sqrt_pi * sy;
  }
  if (y == 0.0) u = std::exp(-x * x);
  return {u, v};
}

}  // namespace

cplx faddeeva_w(cplx z) {
  const double xi = z.real();
  const double yi = z.imag();
  const double x = std::abs(xi);
  const double y = std::abs(yi);
  bool small = false;
  double u2 = 0.0, v2 = 0.0;
  const cplx w = w_first_quadrant(x, y, small, u2, v2);
  double u = w.real();
  double v = w.imag();
  if (yi < 0.0) {
    // w(z) = 2 exp(-z^2) - w(-z) for the lower half plane.
    if (small) {
      u2 *= 2.0;
      v2 *= 2.0;
    } else {
      const double xquad = y * y - x * x;
      const double yquad = 2.0 * x * y;
      if (xquad > max_exp) {
        throw SolverError("faddeeva_w: exp(-z^2) overflows in the lower "
                          "half plane; use scaled_erf_plus_one");
      }
      const double w1 = 2.0 * std::exp(xquad);
      u2 = w1 * std::cos(yquad);
      v2 = -w1 * std::sin(yquad);
    }
    u = u2 - u;
    v = v2 - v;
    if (xi > 0.0) v = -v;
  } else if (xi < 0.0) {
    v = -v;
  }
  return {u, v};
}

cplx erfcx(cplx z) { return faddeeva_w(I * z); }

cplx erf(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  // Near the origin the series form avoids the cancellation in 1 - erfc.
  if (std::abs(z) < 0.5) {
    cplx term = z;
    cplx sum = z;
    const cplx z2 = z * z;
    for (int n = 1; n < 40; ++n) {
      term *= -z2 / static_cast<double>(n);
      const cplx add = term / static_cast<double>(2 * n + 1);
      sum += add;
      if (std::abs(add) < 1e-17 * std::abs(sum)) break;
    }
    return two_over_sqrt_pi * sum;
  }
  // erf(z) = 1 - exp(-z^2) w(iz), using the half plane Re z >= 0 where
  // w(iz) is bounded, and oddness of erf otherwise.
  if (x < 0.0) return -erf(-z);
  const cplx mz2 = -(z * z);
  if (mz2.real() < -max_exp) return {1.0, 0.0};
  (void)y;
  return 1.0 - std::exp(mz2) * faddeeva_w(I * z);
}

cplx scaled_erf_plus_one(cplx eta, cplx log_scale) {
  // exp(eta^2) (1 + erf(eta)) = exp(eta^2) erfc(-eta) = w(-i eta).
  // For Re(eta) <= 0 the argument -i eta lies in the upper half plane and
  // w is bounded. Otherwise use w(-i eta) = 2 exp(eta^2) - w(i eta), with the
  // exponential folded into the scale factor.
  if (eta.real() <= 0.0) return std::exp(log_scale) * faddeeva_w(-I * eta);
  return 2.0 * std::exp(log_scale + eta * eta) -
         std::exp(log_scale) * faddeeva_w(I * eta);
}

}  // namespace vscpt
