#pragma once

#include <cmath>
#include <complex>
#include <algorithm>
#include <array>
#include <random>
#include <utility>

#include "vscpt/constants.hpp"

namespace testing {

// Fixed seeds keep every randomized property test reproducible.
inline std::mt19937_64 rng(unsigned seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline double log_uniform(std::mt19937_64& g, double lo, double hi) {
  return std::exp(uniform(g, std::log(lo), std::log(hi)));
}

inline double rel_err(vscpt::cplx a, vscpt::cplx b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

using Mat2 = std::array<std::array<vscpt::cplx, 2>, 2>;

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

// exp(-i t H), H = [[beta + ws, -beta], [-beta, beta + ws]], by scaling
// and squaring a Taylor series.
inline Mat2 expm_oracle(vscpt::cplx beta, double ws, double t) {
  using vscpt::I;
  Mat2 A{{{-I * t * (beta + ws), I * t * beta}, {I * t * beta, -I * t * (beta + ws)}}};
  double norm = 0.0;
  for (auto& row : A)
    for (auto& v : row) norm = std::max(norm, std::abs(v));
  int s = 0;
  while (norm > 0.1) {
    norm /= 2;
    ++s;
  }
  const double f = std::ldexp(1.0, -s);
  for (auto& row : A)
    for (auto& v : row) v *= f;
  Mat2 term{{{1.0, 0.0}, {0.0, 1.0}}}, sum = term;
  for (int n = 1; n < 30; ++n) {
    term = mul(term, A);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        term[i][j] /= n;
        sum[i][j] += term[i][j];
      }
  }
  for (int k = 0; k < s; ++k) sum = mul(sum, sum);
  return sum;
}

// Singular values of a 2x2 matrix from the eigenvalues of M^dag M.
inline std::pair<double, double> singular_values(const Mat2& m) {
  double a = 0, d = 0;
  vscpt::cplx b = 0;
  for (int k = 0; k < 2; ++k) {
    a += std::norm(m[k][0]);
    d += std::norm(m[k][1]);
    b += std::conj(m[k][0]) * m[k][1];
  }
  const double tr = a + d, det = a * d - std::norm(b);
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
  return {std::sqrt(tr / 2 + disc), std::sqrt(std::max(0.0, tr / 2 - disc))};
}

}  // namespace testing
