#include "cq/roots.hpp"

#include <algorithm>
#include <cmath>

namespace cq {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kGroupTol = 1e-9;   // grouping of restricted roots
constexpr double kMatrixTol = 1e-10; // Weyl matrix equality

void validate_frame(const CartanFrame& frame) {
  const Conjugation a(frame.phase);
  if (frame.x.size() != frame.y.size() || frame.x.size() < 2) {
    throw std::invalid_argument("CartanFrame: need orthonormal X, Y in C^m, m >= 2");
  }
  const double rx = (a.apply(frame.x) - frame.x).norm();
  const double ry = (a.apply(frame.y) - frame.y).norm();
  if (rx > 1e-12 || ry > 1e-12) {
    throw std::invalid_argument("CartanFrame: X, Y not fixed by the gauged conjugation");
  }
  if (std::abs(frame.x.norm() - 1.0) > 1e-12 || std::abs(frame.y.norm() - 1.0) > 1e-12 ||
      std::abs(real_inner(frame.x, frame.y)) > 1e-12) {
    throw std::invalid_argument("CartanFrame: (X, Y) not orthonormal");
  }
}

}  // namespace

RealSubspace CartanFrame::cartan_subalgebra(double tol) const {
  return RealSubspace::span({x, jmul(y)}, m(), tol);
}

CartanFrame canonical_cartan(int m) {
  if (m < 2) throw std::invalid_argument("canonical_cartan: m must be >= 2");
  CartanFrame frame;
  frame.phase = Complex(1.0, 0.0);
  frame.x = unit_vector(m, 0);
  frame.y = unit_vector(m, 1);
  return frame;
}

namespace {

// Weyl-chamber normal form of a nonzero tangent vector: a gauge psi and
// real vectors a _|_ b with z = e^{i psi}(a + ib) and |a| >= |b|. The
// choice psi = arg(b(z,z))/2 makes b(z', z') = |b(z,z)| >= 0, which forces
// both properties at once.
void normal_form(const CVec& z, Complex* half_phase, RVec* a, RVec* b) {
  const Complex bz = bilinear_form(z, z);
  double psi = 0.0;
  if (std::abs(bz) > 1e-14 * z.squaredNorm()) psi = 0.5 * std::arg(bz);
  const Complex rot(std::cos(psi), std::sin(psi));
  const CVec zp = std::conj(rot) * z;
  *half_phase = rot;
  *a = zp.real();
  *b = zp.imag();
}

}  // namespace

CartanFrame adapted_cartan_frame(const RealSubspace& s) {
  if (s.dim() == 0) {
    throw std::invalid_argument("adapted_cartan_frame: zero subspace");
  }
  if (!is_lie_triple(s).is_lts) {
    throw std::invalid_argument("adapted_cartan_frame: not a Lie triple system");
  }
  const int m = s.m();
  std::mt19937_64 eng(0xADA97EDF00C0FFEEULL);
  auto draw_unit = [&](const RealSubspace& space) {
    CVec v = CVec::Zero(m);
    for (const CVec& basis_vec : space.basis()) {
      // Box-Muller on the raw engine, as in the rng module
      double u1 = static_cast<double>(eng() >> 11) * 0x1.0p-53;
      const double u2 = static_cast<double>(eng() >> 11) * 0x1.0p-53;
      if (u1 <= 0.0) u1 = 0.5;
      v += std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2) * basis_vec;
    }
    return v;
  };

  for (int attempt = 0; attempt < 64; ++attempt) {
    CVec u = draw_unit(s);
    if (u.norm() < 1e-8) continue;
    u /= u.norm();
    const RealSubspace flat = commutant_subspace(s, u);
    if (flat.dim() < 1 || flat.dim() > 2) continue;  // singular draw

    CVec z;
    if (flat.dim() == 2) {
      // regular generator: characteristic angle away from the chamber walls
      bool found = false;
      for (int inner = 0; inner < 16 && !found; ++inner) {
        CVec candidate = draw_unit(flat);
        if (candidate.norm() < 1e-8) continue;
        candidate /= candidate.norm();
        const double phi = characteristic_angle(candidate);
        if (phi > 1e-3 && phi < M_PI / 4.0 - 1e-3) {
          z = candidate;
          found = true;
        }
      }
      if (!found) continue;
    } else {
      z = u;
    }

    Complex half_phase;
    RVec a, b;
    normal_form(z, &half_phase, &a, &b);
    if (a.norm() < 1e-8) continue;
    b -= (a.dot(b) / a.squaredNorm()) * a;

    CartanFrame frame;
    frame.phase = half_phase * half_phase;
    frame.x = half_phase * RVec(a / a.norm()).cast<Complex>();
    if (b.norm() > 1e-8) {
      frame.y = half_phase * RVec(b / b.norm()).cast<Complex>();
    } else {
      // z lies in the real form; any orthogonal real direction completes
      // the frame
      RVec y = RVec::Zero(m);
      for (int k = 0; k < m; ++k) {
        RVec candidate = RVec::Unit(m, k);
        candidate -= candidate.dot(a / a.norm()) * (a / a.norm());
        if (candidate.norm() > 0.5) {
          y = candidate / candidate.norm();
          break;
        }
      }
      frame.y = half_phase * y.cast<Complex>();
    }

    try {
      decompose_by_roots(s, frame);
      return frame;
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
  throw std::runtime_error(
      "adapted_cartan_frame: no adapted frame found (singular input?)");
}

std::vector<RootDatum> root_table(const CartanFrame& frame, int m) {
  validate_frame(frame);
  if (frame.m() != m) throw std::invalid_argument("root_table: frame dimension != m");

  const CVec jx = jmul(frame.x);
  const CVec jy = frame.jy();

  std::vector<RootDatum> table;
  if (m > 2) {
    // (RX + RY)^perp inside V(A): sweep a basis of V(A) = phase^{1/2} R^m
    // and project out X and Y.
    const Complex half_phase = std::sqrt(frame.phase);
    std::vector<CVec> gen;
    for (int k = 0; k < m; ++k) {
      CVec v = half_phase * unit_vector(m, k);
      v -= real_inner(v, frame.x) * frame.x;
      v -= real_inner(v, frame.y) * frame.y;
      gen.push_back(v);
    }
    const RealSubspace perp = RealSubspace::span(gen, m);
    std::vector<CVec> jgen;
    for (const CVec& v : perp.basis()) jgen.push_back(jmul(v));

    table.push_back({1, kSqrt2 * jy, RealSubspace::span(jgen, m), m - 2});
    table.push_back({2, kSqrt2 * frame.x, perp, m - 2});
  }
  table.push_back({3, kSqrt2 * (frame.x - jy), RealSubspace::span({jx + frame.y}, m), 1});
  table.push_back({4, kSqrt2 * (frame.x + jy), RealSubspace::span({jx - frame.y}, m), 1});
  return table;
}

double characteristic_angle(const CVec& v) {
  const double n2 = v.squaredNorm();
  if (n2 <= 0.0 || !is_finite(v)) {
    throw std::invalid_argument("characteristic_angle: zero or non-finite vector");
  }
  // clamp guards |b| marginally above ||v||^2 from roundoff
  const double c = std::clamp(std::abs(bilinear_form(v, v)) / n2, 0.0, 1.0);
  return 0.5 * std::acos(c);
}

RestrictedRootReport decompose_by_roots(const RealSubspace& s,
                                        const CartanFrame& frame) {
  validate_frame(frame);
  if (s.m() != frame.m()) {
    throw std::invalid_argument("decompose_by_roots: dimension mismatch");
  }
  const LieTripleResult ltr = is_lie_triple(s);
  if (!ltr.is_lts) {
    throw std::invalid_argument("decompose_by_roots: S is not a Lie triple system");
  }

  const RealSubspace cartan = frame.cartan_subalgebra(s.tol());
  RestrictedRootReport report;
  report.zero_part = subspace_intersection(s, cartan);
  report.rank = report.zero_part.dim();
  if (report.rank == 0) {
    throw std::invalid_argument(
        "decompose_by_roots: S n a is zero; frame is not adapted to S");
  }

  // a' must be flat and a maximal flat of S.
  for (const CVec& u : report.zero_part.basis()) {
    for (const CVec& v : report.zero_part.basis()) {
      if (bracket(tangent_lift(u), tangent_lift(v)).norm() > 1e-10) {
        throw std::invalid_argument("decompose_by_roots: S n a is not flat");
      }
    }
  }
  const int rank_s = commutant_dimension(s, s.basis()[0]) >= 2 ? 2 : 1;
  if (report.rank != rank_s) {
    throw std::invalid_argument(
        "decompose_by_roots: S n a is not a maximal flat of S");
  }

  const std::vector<RootDatum> table = root_table(frame, s.m());

  // Restrict each ambient root: the restriction is represented by the
  // projection of its Riesz vector onto a'. Two roots give the same
  // restricted root iff those projections agree up to sign.
  struct Restriction {
    int k;
    CVec proj;
    double norm;
  };
  std::vector<Restriction> restrictions;
  for (const RootDatum& row : table) {
    CVec p = report.zero_part.project(row.riesz);
    const double n = p.norm();
    if (n > kGroupTol) restrictions.push_back({row.k, p, n});
  }

  std::vector<bool> grouped(restrictions.size(), false);
  for (size_t i = 0; i < restrictions.size(); ++i) {
    if (grouped[i]) continue;
    RestrictedPart part;
    part.value = restrictions[i].norm;
    part.ambient.push_back(restrictions[i].k);
    part.signs.push_back(1.0);
    grouped[i] = true;
    for (size_t j = i + 1; j < restrictions.size(); ++j) {
      if (grouped[j]) continue;
      const double plus = (restrictions[j].proj - restrictions[i].proj).norm();
      const double minus = (restrictions[j].proj + restrictions[i].proj).norm();
      if (std::min(plus, minus) <= kGroupTol * std::max(1.0, part.value)) {
        part.ambient.push_back(restrictions[j].k);
        part.signs.push_back(plus <= minus ? 1.0 : -1.0);
        grouped[j] = true;
      }
    }
    // Part = (direct sum of the grouped ambient root spaces) n S.
    std::vector<CVec> gen;
    for (int k : part.ambient) {
      for (const RootDatum& row : table) {
        if (row.k == k) {
          gen.insert(gen.end(), row.root_space.basis().begin(),
                     row.root_space.basis().end());
        }
      }
    }
    part.part = subspace_intersection(RealSubspace::span(gen, s.m(), s.tol()), s);
    if (part.part.dim() > 0) report.parts.push_back(part);
  }

  // Direct-sum certificate: dimensions add up and S is spanned.
  int total = report.zero_part.dim();
  std::vector<CVec> all = report.zero_part.basis();
  for (const RestrictedPart& p : report.parts) {
    total += p.part.dim();
    all.insert(all.end(), p.part.basis().begin(), p.part.basis().end());
  }
  const RealSubspace rebuilt = RealSubspace::span(all, s.m(), s.tol());
  if (total != s.dim() || rebuilt.dim() != s.dim() || !is_subspace_of(s, rebuilt)) {
    throw std::invalid_argument(
        "decompose_by_roots: root-space decomposition does not sum to S");
  }
  return report;
}

bool elementary_riesz_check(const RestrictedRootReport& report,
                            const CartanFrame& frame, const RealSubspace& s) {
  validate_frame(frame);
  if (report.zero_part.m() != s.m() || !is_subspace_of(report.zero_part, s)) {
    throw std::invalid_argument("elementary_riesz_check: stale report");
  }
  const std::vector<RootDatum> table = root_table(frame, s.m());
  auto riesz_of = [&table](int k) -> const CVec& {
    for (const RootDatum& row : table) {
      if (row.k == k) return row.riesz;
    }
    throw std::invalid_argument("elementary_riesz_check: unknown root index");
  };
  const double tol = std::max(s.tol(), kGroupTol);
  for (const RestrictedPart& part : report.parts) {
    if (part.elementary()) {
      const CVec& r = riesz_of(part.ambient[0]);
      if (report.zero_part.membership_residual(r) > tol) return false;
    } else {
      for (size_t i = 0; i < part.ambient.size(); ++i) {
        for (size_t j = i + 1; j < part.ambient.size(); ++j) {
          const CVec diff = part.signs[i] * riesz_of(part.ambient[i]) -
                            part.signs[j] * riesz_of(part.ambient[j]);
          if (report.zero_part.project(diff).norm() > tol * std::max(1.0, diff.norm())) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

Eigen::Vector2d riesz_coords(int k) {
  switch (k) {
    case 1: return {0.0, kSqrt2};
    case 2: return {kSqrt2, 0.0};
    case 3: return {kSqrt2, -kSqrt2};
    case 4: return {kSqrt2, kSqrt2};
    default: throw std::invalid_argument("riesz_coords: root index must be 1..4");
  }
}

std::vector<Eigen::Matrix2d> weyl_subgroup(const std::vector<int>& roots) {
  std::vector<Eigen::Matrix2d> group;
  auto add_unique = [&group](const Eigen::Matrix2d& g) {
    for (const auto& h : group) {
      if ((g - h).cwiseAbs().maxCoeff() <= kMatrixTol) return false;
    }
    group.push_back(g);
    return true;
  };
  add_unique(Eigen::Matrix2d::Identity());
  for (int k : roots) {
    const Eigen::Vector2d n = riesz_coords(k).normalized();
    add_unique(Eigen::Matrix2d::Identity() - 2.0 * n * n.transpose());
  }
  // Closure by fixed-point iteration.
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t count = group.size();
    for (size_t i = 0; i < count; ++i) {
      for (size_t j = 0; j < count; ++j) {
        if (add_unique(group[i] * group[j])) grew = true;
      }
    }
  }
  return group;
}

std::vector<Eigen::Matrix2d> weyl_group(const CartanFrame& frame, int m) {
  validate_frame(frame);
  if (frame.m() != m) throw std::invalid_argument("weyl_group: frame dimension != m");
  return weyl_subgroup(m == 2 ? std::vector<int>{3, 4}
                              : std::vector<int>{1, 2, 3, 4});
}

}  // namespace cq
