#include "cq/rng.hpp"

#include <cmath>

namespace cq::rng {

double uniform01(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

double normal(Engine& eng) {
  double u1 = uniform01(eng);
  while (u1 <= 0.0) u1 = uniform01(eng);
  const double u2 = uniform01(eng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

CVec gaussian_cvec(int m, Engine& eng) {
  CVec v(m);
  for (int k = 0; k < m; ++k) {
    const double re = normal(eng);
    const double im = normal(eng);
    v[k] = Complex(re, im);
  }
  return v;
}

RVec gaussian_rvec(int m, Engine& eng) {
  RVec v(m);
  for (int k = 0; k < m; ++k) v[k] = normal(eng);
  return v;
}

RVec random_unit_rvec(int m, Engine& eng) {
  RVec v = gaussian_rvec(m, eng);
  while (v.norm() < 1e-6) v = gaussian_rvec(m, eng);
  return v / v.norm();
}

CVec random_unit_cvec(int m, Engine& eng) {
  CVec v = gaussian_cvec(m, eng);
  while (v.norm() < 1e-6) v = gaussian_cvec(m, eng);
  return v / v.norm();
}

RMat random_rotation(int n, Engine& eng) {
  RMat a(n, n);
  for (int j = 0; j < n; ++j) a.col(j) = gaussian_rvec(n, eng);
  RMat q(n, n);
  for (int j = 0; j < n; ++j) {
    RVec v = a.col(j);
    for (int i = 0; i < j; ++i) v -= q.col(i).dot(v) * q.col(i);
    if (v.norm() < 1e-10) {
      // Degenerate draw; retry with fresh columns.
      return random_rotation(n, eng);
    }
    q.col(j) = v / v.norm();
  }
  if (q.determinant() < 0.0) q.col(n - 1) *= -1.0;
  return q;
}

CqAutomorphism random_automorphism(int m, Engine& eng) {
  CqAutomorphism u;
  const double theta = 2.0 * M_PI * uniform01(eng);
  u.phase = Complex(std::cos(theta), std::sin(theta));
  u.rotation = random_rotation(m, eng);
  return u;
}

RealSubspace random_subspace(int m, int d, Engine& eng, double tol) {
  std::vector<CVec> gen;
  gen.reserve(d);
  for (int j = 0; j < d; ++j) gen.push_back(gaussian_cvec(m, eng));
  return RealSubspace::span(gen, m, tol);
}

}  // namespace cq::rng
