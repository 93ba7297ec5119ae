#pragma once

// The so(m+2) matrix model of the tangent space. With the base point lift
// z = (e1 + i e2)/sqrt(2) and W = span_C{e1, e2}, the tangent part m of the
// symmetric decomposition consists of the skew matrices [[0, -B^T], [B, 0]]
// over the split R^{m+2} = span{e1,e2} (+) span{e3..e_{m+2}}, and the
// tangent isomorphism reads a complex m-vector off the block B.
//
// Provides the Lie bracket, the Killing-form metric, the curvature tensor
// both as a closed formula and as the double bracket -[[X,Y],Z] (the two
// are independent computations kept as mutual oracles), the Lie-triple-
// system test, and the shape operators of the quadric.

#include "cq/linalg.hpp"

namespace cq {

struct TangentMatrix {
  RMat block;  // m x 2; column 0 = sqrt(2) Re(v), column 1 = sqrt(2) Im(v)

  int m() const { return static_cast<int>(block.rows()); }
  RMat full() const;  // the (m+2) x (m+2) skew matrix
};

struct IsotropyMatrix {
  RMat k2;  // 2 x 2 skew block on span{e1, e2}
  RMat km;  // m x m skew block on span{e3..e_{m+2}}

  int m() const { return static_cast<int>(km.rows()); }
  RMat full() const;  // block-diagonal (m+2) x (m+2)
  double norm() const;
};

TangentMatrix tangent_lift(const CVec& v);
CVec tangent_project(const TangentMatrix& x);

// [X, Y]; lands in the isotropy algebra (block-diagonal).
IsotropyMatrix bracket(const TangentMatrix& x, const TangentMatrix& y);

// [K, Z] for K isotropy, Z tangent; lands back in the tangent part.
TangentMatrix bracket_with_tangent(const IsotropyMatrix& k,
                                   const TangentMatrix& z);

// -kappa(X,Y)/(4m), with kappa the Killing form of so(m+2), evaluated via
// the closed form kappa(X,Y) = m tr(XY). Equals Re<tau X, tau Y>.
double killing_inner(const TangentMatrix& x, const TangentMatrix& y);

// ad(Z)^2 E = [Z,[Z,E]] through matrix lifts, projected back to C^m.
// Root-space diagnostics use this, independently of the curvature formula.
CVec ad_squared(const CVec& z, const CVec& e);

enum class CurvatureMode { Formula, Bracket };

// Curvature tensor R(u,v)w of the quadric at the base point.
// Formula mode evaluates
//   R(u,v)w = <w,v> u - <w,u> v - 2 Re<Ju,v> Jw + <v,A0 w> A0 u - <u,A0 w> A0 v
// with A0 the distinguished conjugation; bracket mode computes
// -tau([[X,Y],Z]) through lifts.
CVec curvature(const CVec& u, const CVec& v, const CVec& w,
               CurvatureMode mode = CurvatureMode::Formula);

struct LieTripleResult {
  bool is_lts = false;
  double residual = 0.0;  // worst projection residual over basis triples
};

// R(u,v)w stays in s for all ordered basis triples, within
// s.tol() * max(1, curvature scale).
LieTripleResult is_lie_triple(const RealSubspace& s);

// Shape operator A_eta of the quadric along the unit normal with the given
// phase; identical to the gauged conjugation.
CVec shape_operator(Complex phase, const CVec& v);

// { y in s : [x_lift, y_lift] = 0 }, decided by least squares. Rank probes
// reduce to its dimension: a Lie triple system has rank 2 exactly when the
// commutant of one of its elements is at least 2-dimensional.
RealSubspace commutant_subspace(const RealSubspace& s, const CVec& x);
int commutant_dimension(const RealSubspace& s, const CVec& x);

}  // namespace cq
