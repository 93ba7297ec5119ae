#pragma once

// Cartan frames, the restricted-root table of the quadric, root-space
// decomposition of Lie triple systems relative to a frame, the
// elementary/composite classification of restricted roots, the Weyl group,
// and the characteristic angle.

#include "cq/lie_model.hpp"

#include <vector>

namespace cq {

// A conjugation gauge plus an orthonormal pair (X, Y) fixed by it;
// the associated Cartan subalgebra is span{X, JY}.
struct CartanFrame {
  Complex phase{1.0, 0.0};
  CVec x;
  CVec y;

  int m() const { return static_cast<int>(x.size()); }
  CVec jy() const { return jmul(y); }
  RealSubspace cartan_subalgebra(double tol = kDefaultTol) const;
};

// Frame (1, e1, e2). Requires m >= 2.
CartanFrame canonical_cartan(int m);

// Gauge reduction: construct a frame whose Cartan subalgebra meets the
// given Lie triple system in a maximal flat, so decompose_by_roots
// applies. Works by drawing a generic element, taking the maximal flat
// through it, and putting a regular generator into Weyl-chamber normal
// form z = e^{i psi}(a + i b), a _|_ b, |a| >= |b|. Deterministic.
CartanFrame adapted_cartan_frame(const RealSubspace& s);

// One row of the root table: index k in {1,..,4}, Riesz vector in the
// Cartan subalgebra, root space, multiplicity. Rows 1 and 2 are absent
// when m = 2.
struct RootDatum {
  int k = 0;
  CVec riesz;
  RealSubspace root_space;
  int multiplicity = 0;
};

// Riesz vectors sqrt(2) JY, sqrt(2) X, sqrt(2)(X - JY), sqrt(2)(X + JY)
// with root spaces J((RX + RY)^perp in V(A)), (RX + RY)^perp in V(A),
// R(JX + Y), R(JX - Y) and multiplicities (m-2, m-2, 1, 1).
std::vector<RootDatum> root_table(const CartanFrame& frame, int m);

// phi(v) in [0, pi/4] with |b(v,v)| = cos(2 phi) ||v||^2. Scale-invariant
// and independent of the conjugation phase. Throws on the zero vector.
double characteristic_angle(const CVec& v);

// One restricted root of a Lie triple system relative to a frame.
struct RestrictedPart {
  // Canonical positive value: norm of the projection of the Riesz vectors
  // onto the sub-Cartan (equals |lambda(Z)| on the unit generator Z when
  // the sub-Cartan is a line).
  double value = 0.0;
  std::vector<int> ambient;    // ambient root indices restricting to +-this
  std::vector<double> signs;   // sign of each restriction rel. canonical
  RealSubspace part;           // (direct sum of those root spaces) n S

  bool elementary() const { return ambient.size() == 1; }
};

struct RestrictedRootReport {
  RealSubspace zero_part;  // S n a, the sub-Cartan a'
  int rank = 0;            // dim a'
  std::vector<RestrictedPart> parts;
};

// Requires S to be a Lie triple system whose intersection with the frame's
// Cartan subalgebra is a Cartan subalgebra of S (flat + maximal flat, both
// verified; throws otherwise).
RestrictedRootReport decompose_by_roots(const RealSubspace& s,
                                        const CartanFrame& frame);

// Elementary restricted roots must have their Riesz vector inside the
// sub-Cartan; Riesz differences of composite pairs must be orthogonal
// to it.
bool elementary_riesz_check(const RestrictedRootReport& report,
                            const CartanFrame& frame, const RealSubspace& s);

// Weyl group in (X, JY) coordinates of the Cartan plane: closure of the
// root-hyperplane reflections under composition. Order 8 for m >= 3
// (dihedral group of the square diagram), order 4 for m = 2.
std::vector<Eigen::Matrix2d> weyl_group(const CartanFrame& frame, int m);

// Subgroup generated by the reflections of a subset of the ambient roots
// (indices in 1..4); used for subsystem-containment checks.
std::vector<Eigen::Matrix2d> weyl_subgroup(const std::vector<int>& roots);

// Riesz vector of root k in (X, JY) coordinates.
Eigen::Vector2d riesz_coords(int k);

}  // namespace cq
