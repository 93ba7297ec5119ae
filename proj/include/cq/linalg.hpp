#pragma once

// Linear algebra over the tangent model C^m of the complex quadric:
// conjugations (anti-linear involutions), real subspaces with orthonormal
// bases, the complex / totally-real / isotropic / CQ-subspace predicates,
// and canonical representations of CQ-subspaces and isotropic subspaces.

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cq {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

inline constexpr double kDefaultTol = 1e-9;

// k-th standard basis vector of C^m (0-based index).
CVec unit_vector(int m, int k);

// Hermitian inner product <u,v> = sum_k u_k * conj(v_k), linear in the
// first argument. Its real part is the Riemannian inner product.
Complex hermitian_inner(const CVec& u, const CVec& v);

// Re<u,v>.
double real_inner(const CVec& u, const CVec& v);

// Complex symmetric bilinear form b(u,v) = sum_k u_k v_k. b(v,v) = 0
// characterizes isotropic vectors, independently of the conjugation phase.
Complex bilinear_form(const CVec& u, const CVec& v);

// J v = i v.
CVec jmul(const CVec& v);

bool is_finite(const CVec& v);

// Realification: C^m -> R^{2m}, [Re(v); Im(v)]. Real inner products of
// realified vectors equal Re<.,.> of the originals.
RVec realify(const CVec& v);
CVec unrealify(const RVec& r);

// A = phase * (componentwise conjugation). Anti-linear orthogonal
// involution; the CQ-structure is the circle of all phases.
struct Conjugation {
  Complex phase{1.0, 0.0};

  Conjugation() = default;
  explicit Conjugation(Complex lambda);

  CVec apply(const CVec& v) const;

  // v = re_part + J im_part, both parts fixed by A.
  CVec re_part(const CVec& v) const;  // (Av + v)/2
  CVec im_part(const CVec& v) const;  // J(Av - v)/2
};

// A real-linear subspace of C^m, stored as an orthonormal basis with
// respect to Re<.,.>. Immutable after construction.
class RealSubspace {
 public:
  RealSubspace() = default;
  RealSubspace(int m, double tol);  // the zero subspace

  // Real span of arbitrary vectors, orthonormalized by modified
  // Gram-Schmidt with column pivoting. Vectors whose post-projection norm
  // falls below tol * (max input norm) are dropped.
  static RealSubspace span(const std::vector<CVec>& vectors, int m,
                           double tol = kDefaultTol);

  int m() const { return m_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  double tol() const { return tol_; }
  const std::vector<CVec>& basis() const { return basis_; }

  CVec project(const CVec& v) const;

  // ||v - P v|| / max(1, ||v||).
  double membership_residual(const CVec& v) const;
  bool contains(const CVec& v) const;

 private:
  int m_ = 0;
  double tol_ = kDefaultTol;
  std::vector<CVec> basis_;
};

struct SubspaceFlags {
  bool is_complex = false;
  bool is_totally_real = false;
  bool is_isotropic = false;
  bool is_cq_subspace = false;
};

SubspaceFlags subspace_flags(const RealSubspace& s);

// S + JS. Complex; isotropic whenever S is.
RealSubspace complex_closure(const RealSubspace& s);

RealSubspace subspace_sum(const RealSubspace& a, const RealSubspace& b);
RealSubspace subspace_intersection(const RealSubspace& a,
                                   const RealSubspace& b);

// true iff every basis vector of s1 lies in s2 within tolerance.
bool is_subspace_of(const RealSubspace& s1, const RealSubspace& s2);

enum class CanonicalKind { CqSubspace, IsotropicComplex, IsotropicTotallyReal };

// Canonical representation record.
//   CqSubspace:           S = W (+) JW with W = S n V(A).
//   IsotropicComplex:     S = { x + J(tau x) : x in W }, tau an orthogonal
//                         complex structure on W subset V(A).
//   IsotropicTotallyReal: S = { x + J(tau x) : x in W1 }, tau an isometry
//                         W1 -> W2, W1 _|_ W2 subset V(A).
struct CanonicalRep {
  CanonicalKind kind;
  RealSubspace w1;  // W (CQ / isotropic complex) or W1
  RealSubspace w2;  // equals w1 in the complex case; W2 in the real case
  // tau applied to w1.basis()[j]; empty for the CQ case.
  std::vector<CVec> tau_images;
};

// Verifies that s satisfies the claimed predicate, then extracts the
// representation via W1 = Re_A(S), W2 = Im_A(S), tau = Im_A o (Re_A|S)^-1.
// Throws std::invalid_argument naming the broken invariant otherwise.
CanonicalRep canonical_representation(const RealSubspace& s,
                                      const Conjugation& a,
                                      CanonicalKind kind);

// Rebuild the subspace from its canonical representation.
RealSubspace rebuild_from_representation(const CanonicalRep& rep);

// An element of Aut(CQ-structure): v -> phase * (rotation * v) with
// rotation in SO(m). This is the isotropy action SO(2) x SO(m) pushed
// through the tangent isomorphism.
struct CqAutomorphism {
  Complex phase{1.0, 0.0};
  RMat rotation;  // m x m, special orthogonal

  CVec apply(const CVec& v) const;
  RealSubspace apply(const RealSubspace& s) const;
};

}  // namespace cq
