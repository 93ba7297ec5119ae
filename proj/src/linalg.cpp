#include "cq/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace cq {

namespace {

void check_same_dim(const CVec& u, const CVec& v, const char* op) {
  if (u.size() != v.size()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()) + ")");
  }
}

}  // namespace

CVec unit_vector(int m, int k) {
  if (k < 0 || k >= m) throw std::invalid_argument("unit_vector: index out of range");
  CVec v = CVec::Zero(m);
  v[k] = Complex(1.0, 0.0);
  return v;
}

Complex hermitian_inner(const CVec& u, const CVec& v) {
  check_same_dim(u, v, "hermitian_inner");
  // Eigen's dot() conjugates the *first* argument; the convention here is
  // linear in the first argument, so conjugate v instead.
  return v.dot(u);
}

double real_inner(const CVec& u, const CVec& v) {
  return hermitian_inner(u, v).real();
}

Complex bilinear_form(const CVec& u, const CVec& v) {
  check_same_dim(u, v, "bilinear_form");
  return u.transpose() * v;
}

CVec jmul(const CVec& v) { return Complex(0.0, 1.0) * v; }

bool is_finite(const CVec& v) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (!std::isfinite(v[k].real()) || !std::isfinite(v[k].imag())) return false;
  }
  return true;
}

RVec realify(const CVec& v) {
  RVec r(2 * v.size());
  r.head(v.size()) = v.real();
  r.tail(v.size()) = v.imag();
  return r;
}

CVec unrealify(const RVec& r) {
  const Eigen::Index m = r.size() / 2;
  CVec v(m);
  v.real() = r.head(m);
  v.imag() = r.tail(m);
  return v;
}

Conjugation::Conjugation(Complex lambda) : phase(lambda) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12) {
    throw std::invalid_argument("Conjugation: |phase| must be 1");
  }
}

CVec Conjugation::apply(const CVec& v) const { return phase * v.conjugate(); }

CVec Conjugation::re_part(const CVec& v) const { return 0.5 * (apply(v) + v); }

CVec Conjugation::im_part(const CVec& v) const {
  return 0.5 * jmul(apply(v) - v);
}

RealSubspace::RealSubspace(int m, double tol) : m_(m), tol_(tol) {
  if (m < 1) throw std::invalid_argument("RealSubspace: m must be positive");
  if (tol < 0.0) throw std::invalid_argument("RealSubspace: negative tolerance");
}

RealSubspace RealSubspace::span(const std::vector<CVec>& vectors, int m,
                                double tol) {
  RealSubspace s(m, tol);
  if (vectors.empty()) return s;

  std::vector<CVec> work;
  double max_norm = 0.0;
  for (const CVec& v : vectors) {
    if (v.size() != m) throw std::invalid_argument("span: vector dimension != m");
    if (!is_finite(v)) throw std::invalid_argument("span: non-finite entries");
    work.push_back(v);
    max_norm = std::max(max_norm, v.norm());
  }
  const double drop = tol * max_norm;

  // Modified Gram-Schmidt with column pivoting. A second projection pass
  // on the pivot keeps the basis orthonormal to machine precision.
  std::vector<bool> used(work.size(), false);
  for (size_t round = 0; round < work.size(); ++round) {
    size_t pivot = work.size();
    double best = drop;
    for (size_t j = 0; j < work.size(); ++j) {
      if (used[j]) continue;
      const double n = work[j].norm();
      if (n > best) {
        best = n;
        pivot = j;
      }
    }
    if (pivot == work.size()) break;
    used[pivot] = true;
    CVec q = work[pivot];
    for (const CVec& b : s.basis_) q -= real_inner(q, b) * b;
    const double n = q.norm();
    if (n <= drop) continue;
    q /= n;
    s.basis_.push_back(q);
    for (size_t j = 0; j < work.size(); ++j) {
      if (!used[j]) work[j] -= real_inner(work[j], q) * q;
    }
  }
  return s;
}

CVec RealSubspace::project(const CVec& v) const {
  if (v.size() != m_) throw std::invalid_argument("project: dimension mismatch");
  CVec p = CVec::Zero(m_);
  for (const CVec& b : basis_) p += real_inner(v, b) * b;
  return p;
}

double RealSubspace::membership_residual(const CVec& v) const {
  const CVec r = v - project(v);
  return r.norm() / std::max(1.0, v.norm());
}

bool RealSubspace::contains(const CVec& v) const {
  return membership_residual(v) <= tol_;
}

SubspaceFlags subspace_flags(const RealSubspace& s) {
  SubspaceFlags f;
  f.is_complex = true;
  f.is_totally_real = true;
  f.is_isotropic = true;
  for (const CVec& b : s.basis()) {
    if (s.membership_residual(jmul(b)) > s.tol()) f.is_complex = false;
  }
  const auto& basis = s.basis();
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (std::abs(real_inner(jmul(basis[i]), basis[j])) > s.tol()) {
        f.is_totally_real = false;
      }
      if (std::abs(bilinear_form(basis[i], basis[j])) > s.tol()) {
        f.is_isotropic = false;
      }
    }
  }
  // Invariance under the distinguished conjugation decides the CQ property;
  // for complex subspaces this is phase-independent.
  f.is_cq_subspace = f.is_complex;
  if (f.is_complex) {
    const Conjugation a0;
    for (const CVec& b : s.basis()) {
      if (s.membership_residual(a0.apply(b)) > s.tol()) f.is_cq_subspace = false;
    }
  }
  return f;
}

RealSubspace complex_closure(const RealSubspace& s) {
  std::vector<CVec> gen = s.basis();
  for (const CVec& b : s.basis()) gen.push_back(jmul(b));
  return RealSubspace::span(gen, s.m(), s.tol());
}

RealSubspace subspace_sum(const RealSubspace& a, const RealSubspace& b) {
  if (a.m() != b.m()) throw std::invalid_argument("subspace_sum: dimension mismatch");
  std::vector<CVec> gen = a.basis();
  gen.insert(gen.end(), b.basis().begin(), b.basis().end());
  return RealSubspace::span(gen, a.m(), std::max(a.tol(), b.tol()));
}

RealSubspace subspace_intersection(const RealSubspace& a,
                                   const RealSubspace& b) {
  if (a.m() != b.m()) {
    throw std::invalid_argument("subspace_intersection: dimension mismatch");
  }
  const double tol = std::max(a.tol(), b.tol());
  if (a.dim() == 0 || b.dim() == 0) return RealSubspace(a.m(), tol);

  // v = A c lies in b iff (I - P_b) A c = 0; the kernel of that operator
  // in coefficient space gives the intersection.
  RMat residual(2 * a.m(), a.dim());
  for (int j = 0; j < a.dim(); ++j) {
    const CVec& v = a.basis()[j];
    residual.col(j) = realify(v - b.project(v));
  }
  Eigen::JacobiSVD<RMat> svd(residual, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::vector<CVec> gen;
  for (int j = 0; j < a.dim(); ++j) {
    const double sigma = (j < sv.size()) ? sv[j] : 0.0;
    if (sigma <= tol) {
      CVec v = CVec::Zero(a.m());
      for (int i = 0; i < a.dim(); ++i) v += svd.matrixV()(i, j) * a.basis()[i];
      gen.push_back(v);
    }
  }
  return RealSubspace::span(gen, a.m(), tol);
}

bool is_subspace_of(const RealSubspace& s1, const RealSubspace& s2) {
  if (s1.m() != s2.m()) throw std::invalid_argument("is_subspace_of: dimension mismatch");
  const double tol = std::max(s1.tol(), s2.tol());
  for (const CVec& b : s1.basis()) {
    if (s2.membership_residual(b) > tol) return false;
  }
  return true;
}

namespace {

// Solve Re_A(v) = w for v in s (least squares over the basis coefficients),
// then return Im_A(v). Used to build tau = Im_A o (Re_A|S)^-1.
CVec tau_image(const RealSubspace& s, const Conjugation& a, const CVec& w) {
  RMat re_matrix(2 * s.m(), s.dim());
  for (int j = 0; j < s.dim(); ++j) {
    re_matrix.col(j) = realify(a.re_part(s.basis()[j]));
  }
  const RVec c = re_matrix.colPivHouseholderQr().solve(realify(w));
  CVec v = CVec::Zero(s.m());
  for (int j = 0; j < s.dim(); ++j) v += c[j] * s.basis()[j];
  if ((a.re_part(v) - w).norm() > 1e2 * s.tol() * std::max(1.0, w.norm())) {
    throw std::invalid_argument(
        "canonical_representation: Re_A is not surjective onto W1 "
        "(subspace is not of the claimed kind)");
  }
  return a.im_part(v);
}

}  // namespace

CanonicalRep canonical_representation(const RealSubspace& s,
                                      const Conjugation& a,
                                      CanonicalKind kind) {
  const SubspaceFlags f = subspace_flags(s);
  CanonicalRep rep;
  rep.kind = kind;

  std::vector<CVec> re_gen, im_gen;
  for (const CVec& b : s.basis()) {
    re_gen.push_back(a.re_part(b));
    im_gen.push_back(a.im_part(b));
  }

  switch (kind) {
    case CanonicalKind::CqSubspace: {
      if (!f.is_cq_subspace) {
        throw std::invalid_argument(
            "canonical_representation: subspace is not a CQ-subspace "
            "(complex + conjugation-invariant fails)");
      }
      rep.w1 = RealSubspace::span(re_gen, s.m(), s.tol());
      rep.w2 = rep.w1;
      if (2 * rep.w1.dim() != s.dim()) {
        throw std::invalid_argument(
            "canonical_representation: dim(W (+) JW) != dim S");
      }
      return rep;
    }
    case CanonicalKind::IsotropicComplex: {
      if (!f.is_isotropic || !f.is_complex) {
        throw std::invalid_argument(
            "canonical_representation: subspace is not complex isotropic");
      }
      rep.w1 = RealSubspace::span(re_gen, s.m(), s.tol());
      rep.w2 = RealSubspace::span(im_gen, s.m(), s.tol());
      if (rep.w1.dim() != s.dim() || rep.w2.dim() != s.dim() ||
          !is_subspace_of(rep.w1, rep.w2) || !is_subspace_of(rep.w2, rep.w1)) {
        throw std::invalid_argument(
            "canonical_representation: W1 != W2 in the complex isotropic case");
      }
      rep.w2 = rep.w1;
      break;
    }
    case CanonicalKind::IsotropicTotallyReal: {
      if (!f.is_isotropic || !f.is_totally_real) {
        throw std::invalid_argument(
            "canonical_representation: subspace is not totally real isotropic");
      }
      rep.w1 = RealSubspace::span(re_gen, s.m(), s.tol());
      rep.w2 = RealSubspace::span(im_gen, s.m(), s.tol());
      if (rep.w1.dim() != s.dim() || rep.w2.dim() != s.dim()) {
        throw std::invalid_argument(
            "canonical_representation: Re_A|S or Im_A|S is degenerate");
      }
      for (const CVec& u : rep.w1.basis()) {
        for (const CVec& v : rep.w2.basis()) {
          if (std::abs(real_inner(u, v)) > 1e2 * s.tol()) {
            throw std::invalid_argument(
                "canonical_representation: W1 not orthogonal to W2");
          }
        }
      }
      break;
    }
  }

  for (const CVec& w : rep.w1.basis()) {
    CVec t = tau_image(s, a, w);
    if (std::abs(t.norm() - w.norm()) > 1e2 * s.tol()) {
      throw std::invalid_argument("canonical_representation: tau is not isometric");
    }
    rep.tau_images.push_back(t);
  }

  if (kind == CanonicalKind::IsotropicComplex) {
    // tau must be an orthogonal complex structure: tau^2 = -id on W.
    for (size_t j = 0; j < rep.tau_images.size(); ++j) {
      const CVec t2 = tau_image(s, a, rep.tau_images[j]);
      if ((t2 + rep.w1.basis()[j]).norm() > 1e3 * s.tol()) {
        throw std::invalid_argument(
            "canonical_representation: tau^2 != -id in the complex isotropic case");
      }
    }
  }
  return rep;
}

RealSubspace rebuild_from_representation(const CanonicalRep& rep) {
  std::vector<CVec> gen;
  if (rep.kind == CanonicalKind::CqSubspace) {
    for (const CVec& w : rep.w1.basis()) {
      gen.push_back(w);
      gen.push_back(jmul(w));
    }
  } else {
    for (size_t j = 0; j < rep.tau_images.size(); ++j) {
      gen.push_back(rep.w1.basis()[j] + jmul(rep.tau_images[j]));
    }
  }
  return RealSubspace::span(gen, rep.w1.m(), rep.w1.tol());
}

CVec CqAutomorphism::apply(const CVec& v) const {
  if (rotation.rows() != v.size()) {
    throw std::invalid_argument("CqAutomorphism: dimension mismatch");
  }
  return phase * (rotation.cast<Complex>() * v);
}

RealSubspace CqAutomorphism::apply(const RealSubspace& s) const {
  std::vector<CVec> gen;
  for (const CVec& b : s.basis()) gen.push_back(apply(b));
  return RealSubspace::span(gen, s.m(), s.tol());
}

}  // namespace cq
