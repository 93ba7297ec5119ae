#include "cq/lie_model.hpp"

#include <cmath>

namespace cq {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

RMat TangentMatrix::full() const {
  const int n = m() + 2;
  RMat x = RMat::Zero(n, n);
  x.block(2, 0, m(), 2) = block;
  x.block(0, 2, 2, m()) = -block.transpose();
  return x;
}

RMat IsotropyMatrix::full() const {
  const int n = m() + 2;
  RMat x = RMat::Zero(n, n);
  x.block(0, 0, 2, 2) = k2;
  x.block(2, 2, m(), m()) = km;
  return x;
}

double IsotropyMatrix::norm() const {
  return std::sqrt(k2.squaredNorm() + km.squaredNorm());
}

TangentMatrix tangent_lift(const CVec& v) {
  if (!is_finite(v)) throw std::invalid_argument("tangent_lift: non-finite input");
  TangentMatrix x;
  x.block.resize(v.size(), 2);
  x.block.col(0) = kSqrt2 * v.real();
  x.block.col(1) = kSqrt2 * v.imag();
  return x;
}

CVec tangent_project(const TangentMatrix& x) {
  CVec v(x.m());
  v.real() = x.block.col(0) / kSqrt2;
  v.imag() = x.block.col(1) / kSqrt2;
  return v;
}

IsotropyMatrix bracket(const TangentMatrix& x, const TangentMatrix& y) {
  if (x.m() != y.m()) throw std::invalid_argument("bracket: dimension mismatch");
  // XY = [[-Bx^T By, 0], [0, -Bx By^T]], so the commutator is block-diagonal.
  IsotropyMatrix k;
  k.k2 = y.block.transpose() * x.block - x.block.transpose() * y.block;
  k.km = y.block * x.block.transpose() - x.block * y.block.transpose();
  return k;
}

TangentMatrix bracket_with_tangent(const IsotropyMatrix& k,
                                   const TangentMatrix& z) {
  if (k.m() != z.m()) {
    throw std::invalid_argument("bracket_with_tangent: dimension mismatch");
  }
  TangentMatrix out;
  out.block = k.km * z.block - z.block * k.k2;
  return out;
}

double killing_inner(const TangentMatrix& x, const TangentMatrix& y) {
  if (x.m() != y.m()) throw std::invalid_argument("killing_inner: dimension mismatch");
  // tr(XY) = -2 tr(Bx^T By); kappa = m tr(XY); metric = -kappa/(4m).
  return 0.5 * (x.block.transpose() * y.block).trace();
}

CVec ad_squared(const CVec& z, const CVec& e) {
  const TangentMatrix zl = tangent_lift(z);
  const IsotropyMatrix k = bracket(zl, tangent_lift(e));
  // [Z,[Z,E]] = -[[Z,E],Z].
  TangentMatrix out = bracket_with_tangent(k, zl);
  out.block *= -1.0;
  return tangent_project(out);
}

CVec curvature(const CVec& u, const CVec& v, const CVec& w,
               CurvatureMode mode) {
  if (u.size() != v.size() || u.size() != w.size()) {
    throw std::invalid_argument("curvature: dimension mismatch");
  }
  if (mode == CurvatureMode::Bracket) {
    const IsotropyMatrix k = bracket(tangent_lift(u), tangent_lift(v));
    TangentMatrix out = bracket_with_tangent(k, tangent_lift(w));
    out.block *= -1.0;
    return tangent_project(out);
  }
  const CVec a0u = u.conjugate();
  const CVec a0v = v.conjugate();
  const CVec a0w = w.conjugate();
  const Complex h_wv = hermitian_inner(w, v);
  const Complex h_wu = hermitian_inner(w, u);
  const double g_ju_v = -hermitian_inner(u, v).imag();  // Re<Ju, v>
  const Complex h_v_aw = hermitian_inner(v, a0w);
  const Complex h_u_aw = hermitian_inner(u, a0w);
  return h_wv * u - h_wu * v - 2.0 * g_ju_v * jmul(w) + h_v_aw * a0u -
         h_u_aw * a0v;
}

LieTripleResult is_lie_triple(const RealSubspace& s) {
  LieTripleResult out;
  const auto& basis = s.basis();
  double scale = 0.0;
  double worst = 0.0;
  for (const CVec& u : basis) {
    for (const CVec& v : basis) {
      for (const CVec& w : basis) {
        const CVec r = curvature(u, v, w);
        scale = std::max(scale, r.norm());
        worst = std::max(worst, (r - s.project(r)).norm());
      }
    }
  }
  out.residual = worst;
  out.is_lts = worst <= s.tol() * std::max(1.0, scale);
  return out;
}

CVec shape_operator(Complex phase, const CVec& v) {
  if (std::abs(std::abs(phase) - 1.0) > 1e-12) {
    throw std::invalid_argument("shape_operator: |phase| must be 1");
  }
  return phase * v.conjugate();
}

RealSubspace commutant_subspace(const RealSubspace& s, const CVec& x) {
  if (s.dim() == 0) return RealSubspace(s.m(), s.tol());
  const TangentMatrix xl = tangent_lift(x);
  RMat op(4 + s.m() * s.m(), s.dim());
  for (int j = 0; j < s.dim(); ++j) {
    const IsotropyMatrix k = bracket(xl, tangent_lift(s.basis()[j]));
    op.col(j).head(4) = Eigen::Map<const RVec>(k.k2.data(), 4);
    op.col(j).tail(s.m() * s.m()) =
        Eigen::Map<const RVec>(k.km.data(), s.m() * s.m());
  }
  Eigen::JacobiSVD<RMat> svd(op, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = s.tol() * std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
  std::vector<CVec> gen;
  for (int j = 0; j < s.dim(); ++j) {
    const double sigma = (j < sv.size()) ? sv[j] : 0.0;
    if (sigma <= cutoff) {
      CVec v = CVec::Zero(s.m());
      for (int i = 0; i < s.dim(); ++i) v += svd.matrixV()(i, j) * s.basis()[i];
      gen.push_back(v);
    }
  }
  return RealSubspace::span(gen, s.m(), s.tol());
}

int commutant_dimension(const RealSubspace& s, const CVec& x) {
  return commutant_subspace(s, x).dim();
}

}  // namespace cq
