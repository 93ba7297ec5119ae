#include "cq/classify.hpp"

#include "cq/rng.hpp"

#include <algorithm>
#include <cmath>

namespace cq {

namespace {

constexpr double kAngleTol = 1e-6;  // arccos amplifies error near cos(2phi) = +-1
constexpr double kPi4 = 0.78539816339744831;
const double kArctanHalf = std::atan(0.5);

}  // namespace

std::string tag_name(Tag t) {
  switch (t) {
    case Tag::Geo: return "Geo";
    case Tag::G1: return "G1";
    case Tag::G2: return "G2";
    case Tag::G3: return "G3";
    case Tag::P1: return "P1";
    case Tag::P2: return "P2";
    case Tag::A: return "A";
    case Tag::I1: return "I1";
    case Tag::I2: return "I2";
    case Tag::Full: return "Full";
    case Tag::NotLieTriple: return "NotLieTriple";
  }
  throw std::logic_error("tag_name: unreachable");
}

Tag tag_from_name(const std::string& name) {
  for (Tag t : {Tag::Geo, Tag::G1, Tag::G2, Tag::G3, Tag::P1, Tag::P2, Tag::A,
                Tag::I1, Tag::I2, Tag::Full, Tag::NotLieTriple}) {
    if (tag_name(t) == name) return t;
  }
  throw std::invalid_argument("unknown type tag: " + name);
}

LtsType LtsType::g2(int k1, int k2) {
  LtsType t;
  t.tag = Tag::G2;
  t.k1 = std::max(k1, k2);
  t.k2 = std::min(k1, k2);
  return t;
}

bool LtsType::operator==(const LtsType& o) const {
  if (tag != o.tag) return false;
  switch (tag) {
    case Tag::G1:
    case Tag::P1:
    case Tag::I1:
    case Tag::I2: return k == o.k;
    case Tag::G2: return k1 == o.k1 && k2 == o.k2;
    default: return true;
  }
}

std::string LtsType::to_string() const {
  switch (tag) {
    case Tag::G1:
    case Tag::P1:
    case Tag::I1:
    case Tag::I2: return tag_name(tag) + "(" + std::to_string(k) + ")";
    case Tag::G2:
      return "G2(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
    default: return tag_name(tag);
  }
}

bool admissible(const LtsType& t, int m) {
  if (m < 2) return false;
  switch (t.tag) {
    case Tag::Geo:
    case Tag::G3:
    case Tag::P2:
    case Tag::Full: return true;
    case Tag::G1: return t.k >= 2 && t.k <= m - 1;
    case Tag::G2: return t.k2 >= 1 && t.k1 + t.k2 <= m;
    case Tag::P1: return t.k >= 1 && t.k <= m;
    case Tag::A: return m >= 3;
    case Tag::I1:
    case Tag::I2: return t.k >= 1 && 2 * t.k <= m;
    case Tag::NotLieTriple: return false;
  }
  return false;
}

TypeProperties type_properties(const LtsType& t, int m) {
  if (!admissible(t, m)) {
    throw std::invalid_argument("type_properties: inadmissible type " +
                                t.to_string() + " for m = " + std::to_string(m));
  }
  switch (t.tag) {
    case Tag::Geo: return {1, Complexity::TotallyReal, 1, false};
    case Tag::G1:
      return {2 * t.k, Complexity::Complex, 2, t.k == m - 1 && m >= 3};
    case Tag::G2:
      return {t.k1 + t.k2, Complexity::TotallyReal, 2, t.k1 + t.k2 == m && m >= 3};
    case Tag::G3: return {3, Complexity::Neither, 2, m == 2};
    case Tag::P1: return {t.k, Complexity::TotallyReal, 1, t.k == m};
    case Tag::P2: return {2, Complexity::Complex, 1, m == 2};
    case Tag::A: return {2, Complexity::Neither, 1, m == 3};
    case Tag::I1: return {2 * t.k, Complexity::Complex, 1, 2 * t.k == m && m >= 4};
    case Tag::I2: return {t.k, Complexity::TotallyReal, 1, false};
    case Tag::Full: return {2 * m, Complexity::Complex, 2, false};
    case Tag::NotLieTriple: break;
  }
  throw std::invalid_argument("type_properties: NotLieTriple has no table row");
}

int rank_of(const RealSubspace& s) {
  if (s.dim() == 0) throw std::invalid_argument("rank_of: zero subspace");
  if (!is_lie_triple(s).is_lts) {
    throw std::invalid_argument("rank_of: not a Lie triple system");
  }
  return commutant_dimension(s, s.basis()[0]) >= 2 ? 2 : 1;
}

namespace {

Classification not_lts(const RealSubspace& s, const SubspaceFlags& flags,
                       double residual, std::string why) {
  Classification c;
  c.type = LtsType::simple(Tag::NotLieTriple);
  c.dim = s.dim();
  c.rank = 0;
  c.flags = flags;
  c.residual = residual;
  c.diagnostic = std::move(why);
  return c;
}

// Measured angle + constancy check over the basis and 20 random unit
// elements. The internal draw is fixed-seeded so classify is a function of
// its argument only.
bool constant_angle(const RealSubspace& s, double* angle_out, double* spread) {
  double base = characteristic_angle(s.basis()[0]);
  double lo = base, hi = base;
  for (const CVec& b : s.basis()) {
    const double a = characteristic_angle(b);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  rng::Engine eng(0x0123456789ABCDEFULL);
  for (int trial = 0; trial < 20; ++trial) {
    CVec v = CVec::Zero(s.m());
    for (const CVec& b : s.basis()) v += rng::normal(eng) * b;
    if (v.norm() < 1e-8) continue;
    const double a = characteristic_angle(v);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  *angle_out = base;
  *spread = hi - lo;
  return hi - lo <= kAngleTol;
}

// Gram matrix split for the totally real rank-2 case: all entries of
// B_ij = b(v_i, v_j) share one phase, and the rephased real symmetric
// matrix has eigenvalues +-1. The eigenvalue counts give (k1, k2).
bool g2_split(const RealSubspace& s, int* k_plus, int* k_minus) {
  const int d = s.dim();
  CMat gram(d, d);
  double amp = 0.0;
  Complex lead(1.0, 0.0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      gram(i, j) = bilinear_form(s.basis()[i], s.basis()[j]);
      if (std::abs(gram(i, j)) > amp && std::abs(gram(i, j)) > 1e-12) {
        amp = std::abs(gram(i, j));
        lead = gram(i, j);
      }
    }
  }
  if (amp == 0.0) return false;
  const Complex unphase = std::conj(lead) / std::abs(lead);
  const CMat rephased = unphase * gram;
  const double tol = std::max(kAngleTol, 1e2 * s.tol());
  if (rephased.imag().cwiseAbs().maxCoeff() > tol) return false;
  Eigen::SelfAdjointEigenSolver<RMat> eig(rephased.real());
  int plus = 0, minus = 0;
  for (int i = 0; i < d; ++i) {
    const double ev = eig.eigenvalues()[i];
    if (std::abs(ev - 1.0) <= tol) {
      ++plus;
    } else if (std::abs(ev + 1.0) <= tol) {
      ++minus;
    } else {
      return false;
    }
  }
  *k_plus = std::max(plus, minus);
  *k_minus = std::min(plus, minus);
  return true;
}

// Structural certificate for G3: the maximal complex subspace S n JS is an
// isotropic complex line, and its orthocomplement line in S is isotropic
// and Hermitian-orthogonal to it.
bool g3_certificate(const RealSubspace& s) {
  std::vector<CVec> jgen;
  for (const CVec& b : s.basis()) jgen.push_back(jmul(b));
  const RealSubspace js = RealSubspace::span(jgen, s.m(), s.tol());
  const RealSubspace line = subspace_intersection(s, js);
  if (line.dim() != 2 || !subspace_flags(line).is_complex ||
      !subspace_flags(line).is_isotropic) {
    return false;
  }
  std::vector<CVec> rest;
  for (const CVec& b : s.basis()) rest.push_back(b - line.project(b));
  const RealSubspace residual_line = RealSubspace::span(rest, s.m(), s.tol());
  if (residual_line.dim() != 1) return false;
  const CVec& w = residual_line.basis()[0];
  if (std::abs(std::abs(bilinear_form(w, w))) > kAngleTol) return false;
  for (const CVec& u : line.basis()) {
    if (std::abs(hermitian_inner(w, u)) > kAngleTol) return false;
  }
  return true;
}

}  // namespace

Classification classify(const RealSubspace& s) {
  SubspaceFlags flags = subspace_flags(s);
  if (s.dim() == 0) {
    return not_lts(s, flags, 0.0, "zero subspace (excluded by hypothesis)");
  }

  const LieTripleResult ltr = is_lie_triple(s);
  Classification c;
  c.dim = s.dim();
  c.flags = flags;
  c.residual = ltr.residual;

  if (s.dim() == 2 * s.m()) {
    c.type = LtsType::simple(Tag::Full);
    c.rank = 2;
    return c;
  }
  if (!ltr.is_lts) {
    return not_lts(s, flags, ltr.residual, "curvature invariance fails");
  }

  if (s.dim() == 1) {
    // One-dimensional systems are all geodesic traces; the angle singles
    // out the ones lying in a real form (P1,1) or isotropic (I2,1).
    c.rank = 1;
    c.angle = characteristic_angle(s.basis()[0]);
    if (c.angle <= kAngleTol) {
      c.type = LtsType::with_k(Tag::P1, 1);
    } else if (std::abs(c.angle - kPi4) <= kAngleTol) {
      c.type = LtsType::with_k(Tag::I2, 1);
    } else {
      c.type = LtsType::simple(Tag::Geo);
    }
    return c;
  }

  c.rank = commutant_dimension(s, s.basis()[0]) >= 2 ? 2 : 1;

  if (c.rank == 2) {
    if (flags.is_complex) {
      if (!flags.is_cq_subspace) {
        return not_lts(s, flags, ltr.residual,
                       "rank-2 complex system is not conjugation-invariant");
      }
      c.type = LtsType::with_k(Tag::G1, s.dim() / 2);
      return c;
    }
    if (flags.is_totally_real) {
      int k1 = 0, k2 = 0;
      if (!g2_split(s, &k1, &k2) || k2 < 1) {
        return not_lts(s, flags, ltr.residual,
                       "rank-2 totally real system without a +-1 Gram split");
      }
      c.type = LtsType::g2(k1, k2);
      return c;
    }
    if (s.dim() == 3 && g3_certificate(s)) {
      c.type = LtsType::simple(Tag::G3);
      return c;
    }
    return not_lts(s, flags, ltr.residual,
                   "rank-2 system matches no type of the classification");
  }

  // rank 1, dim >= 2
  double angle = 0.0, spread = 0.0;
  if (!constant_angle(s, &angle, &spread)) {
    return not_lts(s, flags, ltr.residual,
                   "characteristic angle is not constant on the system");
  }
  c.angle = angle;
  if (angle <= kAngleTol) {
    if (flags.is_complex && s.dim() == 2) {
      c.type = LtsType::simple(Tag::P2);
      return c;
    }
    if (flags.is_totally_real) {
      c.type = LtsType::with_k(Tag::P1, s.dim());
      return c;
    }
  } else if (std::abs(angle - kArctanHalf) <= kAngleTol) {
    if (s.dim() == 2 && !flags.is_complex && !flags.is_totally_real) {
      c.type = LtsType::simple(Tag::A);
      return c;
    }
  } else if (std::abs(angle - kPi4) <= kAngleTol) {
    if (flags.is_complex) {
      c.type = LtsType::with_k(Tag::I1, s.dim() / 2);
      return c;
    }
    if (flags.is_totally_real) {
      c.type = LtsType::with_k(Tag::I2, s.dim());
      return c;
    }
  }
  return not_lts(s, flags, ltr.residual,
                 "rank-1 angle/flag combination outside the classification");
}

RealSubspace generate(const LtsType& t, int m, std::uint64_t seed) {
  if (!admissible(t, m)) {
    throw std::invalid_argument("generate: inadmissible type " + t.to_string() +
                                " for m = " + std::to_string(m));
  }
  auto e = [m](int k) { return unit_vector(m, k); };
  const Complex i(0.0, 1.0);

  std::vector<CVec> gen;
  switch (t.tag) {
    case Tag::Geo:
      gen.push_back((3.0 * e(0) + i * e(1)) / std::sqrt(10.0));
      break;
    case Tag::G1:
      for (int j = 0; j < t.k; ++j) {
        gen.push_back(e(j));
        gen.push_back(i * e(j));
      }
      break;
    case Tag::G2:
      for (int j = 0; j < t.k1; ++j) gen.push_back(e(j));
      for (int j = 0; j < t.k2; ++j) gen.push_back(i * e(t.k1 + j));
      break;
    case Tag::G3:
      gen.push_back(e(0) - i * e(1));
      gen.push_back(i * (e(0) - i * e(1)));
      gen.push_back(e(0) + i * e(1));
      break;
    case Tag::P1:
      for (int j = 0; j < t.k; ++j) gen.push_back(e(j));
      break;
    case Tag::P2:
      gen.push_back(e(0));
      gen.push_back(i * e(0));
      break;
    case Tag::A:
      gen.push_back((2.0 * e(0) + i * e(1)) / std::sqrt(5.0));
      gen.push_back((e(1) + i * e(0) + std::sqrt(3.0) * i * e(2)) / std::sqrt(5.0));
      break;
    case Tag::I1:
      for (int j = 0; j < t.k; ++j) {
        const CVec u = (e(2 * j) + i * e(2 * j + 1)) / std::sqrt(2.0);
        gen.push_back(u);
        gen.push_back(i * u);
      }
      break;
    case Tag::I2:
      for (int j = 0; j < t.k; ++j) {
        gen.push_back((e(2 * j) + i * e(2 * j + 1)) / std::sqrt(2.0));
      }
      break;
    case Tag::Full:
      for (int j = 0; j < m; ++j) {
        gen.push_back(e(j));
        gen.push_back(i * e(j));
      }
      break;
    case Tag::NotLieTriple:
      throw std::invalid_argument("generate: NotLieTriple has no generator");
  }

  rng::Engine eng(seed);
  const CqAutomorphism u = rng::random_automorphism(m, eng);
  std::vector<CVec> rotated;
  rotated.reserve(gen.size());
  for (const CVec& v : gen) rotated.push_back(u.apply(v));
  return RealSubspace::span(rotated, m);
}

}  // namespace cq
