#pragma once

// Point-level geometry: projective points and quadric membership,
// Fubini-Study distance, the explicit totally geodesic embeddings, the
// maximal-torus covering map and its lattice, geodesic sampling, and the
// closed-geodesic period formulas with a lattice-search oracle.

#include "cq/classify.hpp"

#include <cstdint>

namespace cq {

// A point of CP^n as normalized homogeneous coordinates. The stored
// representative has norm 1 and real positive leading coordinate; equality
// is |<z,w>| = 1 up to tolerance, independent of representatives.
class ProjPoint {
 public:
  explicit ProjPoint(CVec homog);

  const CVec& homog() const { return homog_; }
  int n() const { return static_cast<int>(homog_.size()) - 1; }

 private:
  CVec homog_;
};

bool on_quadric(const ProjPoint& p, double tol = 1e-12);
bool proj_equal(const ProjPoint& p, const ProjPoint& q, double tol = 1e-10);

// arccos(|<p,q>|) on unit representatives; a metric with diameter pi/2.
double fs_distance(const ProjPoint& p, const ProjPoint& q);

// Base point [1, i, 0, ..., 0] of Q^m.
ProjPoint quadric_base_point(int m);

// Q^k -> Q^m by zero padding; isometric, totally geodesic.
ProjPoint embed_quadric_inclusion(int k, int m, const ProjPoint& p);

// (x, y) on unit spheres -> [x0, i y0, x1..x_{k1}, i y1..i y_{k2}, 0..],
// a two-fold covering of its image (f(-x,-y) = f(x,y)); a local isometry
// from the product of radius-1/sqrt(2) spheres. The layout puts the base
// pair (e1, e1) on the base point of Q^m. k1 = 0 or k2 = 0 degenerates to
// the sphere family. Inputs are unit vectors in R^{k1+1} x R^{k2+1}.
ProjPoint embed_sphere_product(int k1, int k2, int m, const RVec& x,
                               const RVec& y);

// Maximal flat torus g(t + is); g(0) is the base point, and
// g(w) = g(w') iff w - w' lies in the lattice
// Gamma = Z (pi/sqrt2)(1+i) + Z (pi/sqrt2)(1-i).
ProjPoint torus_map(int m, double t, double s);

// Unit-speed geodesic through the base point with initial direction
// cos(phi) x + sin(phi) i y, for orthonormal x, y in R^m and
// 0 <= phi <= pi/4 (the canonical gauge).
ProjPoint geodesic_sample(const RVec& x, const RVec& y, double phi, double t,
                          int m);

// tan(phi) = n1/n2 as a reduced fraction; (0, 1) encodes phi = 0.
struct PeriodCase {
  int tan_num = 0;
  int tan_den = 1;
};

// Minimal period of the closed geodesic:
//   n1 = 0                -> sqrt(2) pi
//   n1, n2 both odd       -> (pi/sqrt2) sqrt(n1^2 + n2^2)
//   one of n1, n2 even    -> sqrt(2) pi sqrt(n1^2 + n2^2)
// Throws on non-reduced input.
double minimal_period(const PeriodCase& c);

// Independent oracle: smallest positive t with t e^{i phi} in Gamma, by
// brute-force search over lattice points with |a|, |b| <= 10 (n1 + n2).
double minimal_period_oracle(const PeriodCase& c);

// CP^k -> Q^m, [z0..zk] -> [z0..zk, i z0..i zk, 0..]; isometric, image of
// type I1(k), or I2(k) when restricted to real points (real_only).
ProjPoint embed_projective(int k, int m, const ProjPoint& z, bool real_only);

// Segre product CP^1 x CP^1 -> CP^3 followed by a fixed unitary carrying
// the Segre quadric {v0 v3 = v1 v2} onto {sum z^2 = 0}, then zero-padded
// into Q^m. Restricting w to the real circle yields the G3 family.
ProjPoint embed_segre_g3(const ProjPoint& z, const ProjPoint& w, int m);

// The 4x4 unitary used above; satisfies sum_k (Uv)_k^2 = 2 (v0 v3 - v1 v2)
// and U e1 = base lift.
CMat segre_unitary();

struct EmbeddingDescriptor {
  enum class Kind {
    QuadricInclusion,  // k
    SphereProduct,     // k1, k2 (k2 = 0: sphere family)
    Torus,
    Projective,        // k
    ProjectiveReal,    // k
    SegreG3,
  };
  Kind kind = Kind::Torus;
  int k = 0;
  int k1 = 0;
  int k2 = 0;
};

// Pushes coordinate curves through the base source point forward by
// symmetric difference quotients (h = 1e-5), lifts horizontally at the
// base lift, reads tangent coordinates, and spans. All canonical
// embeddings fix the base point (composing with a coordinate swap for the
// projective family, whose printed layout does not).
RealSubspace tangent_space_of_embedding(const EmbeddingDescriptor& e, int m);

struct EmbeddingCheck {
  bool pass = false;
  double max_quadric_residual = 0.0;
  double max_isometry_deviation = 0.0;  // curve-length or distance based
  double max_covering_deviation = 0.0;  // sphere product only
  LtsType tangent_type;
  LtsType expected_type;
  std::string detail;
};

// Sampled verification of one embedding: quadric membership of image
// points, isometry checks, covering identity where applicable, and the
// classification of the numerically extracted tangent space.
EmbeddingCheck verify_embedding(const EmbeddingDescriptor& e, int m,
                                int samples, std::uint64_t seed);

}  // namespace cq
