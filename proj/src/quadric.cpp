#include "cq/quadric.hpp"

#include "cq/rng.hpp"

#include <cmath>
#include <functional>
#include <numeric>

namespace cq {

namespace {

constexpr double kR = 0.70710678118654752;  // 1/sqrt(2), the sphere radius
constexpr double kPi = 3.14159265358979324;
constexpr double kDiffStep = 1e-5;

Complex quadric_form(const CVec& z) {
  Complex q(0.0, 0.0);
  for (Eigen::Index k = 0; k < z.size(); ++k) q += z[k] * z[k];
  return q;
}

}  // namespace

ProjPoint::ProjPoint(CVec homog) : homog_(std::move(homog)) {
  if (homog_.size() < 2 || !is_finite(homog_)) {
    throw std::invalid_argument("ProjPoint: need >= 2 finite coordinates");
  }
  const double n = homog_.norm();
  if (n < 1e-14) throw std::invalid_argument("ProjPoint: zero vector");
  homog_ /= n;
  for (Eigen::Index k = 0; k < homog_.size(); ++k) {
    const double a = std::abs(homog_[k]);
    if (a > 1e-12) {
      homog_ *= std::conj(homog_[k]) / a;
      break;
    }
  }
}

bool on_quadric(const ProjPoint& p, double tol) {
  return std::abs(quadric_form(p.homog())) <= tol;
}

bool proj_equal(const ProjPoint& p, const ProjPoint& q, double tol) {
  if (p.n() != q.n()) return false;
  return std::abs(hermitian_inner(p.homog(), q.homog())) >= 1.0 - tol;
}

double fs_distance(const ProjPoint& p, const ProjPoint& q) {
  if (p.n() != q.n()) throw std::invalid_argument("fs_distance: dimension mismatch");
  const double c = std::abs(hermitian_inner(p.homog(), q.homog()));
  return std::acos(std::clamp(c, 0.0, 1.0));
}

ProjPoint quadric_base_point(int m) {
  CVec z = CVec::Zero(m + 2);
  z[0] = Complex(1.0, 0.0);
  z[1] = Complex(0.0, 1.0);
  return ProjPoint(z);
}

ProjPoint embed_quadric_inclusion(int k, int m, const ProjPoint& p) {
  if (k < 1 || k >= m) {
    throw std::invalid_argument("embed_quadric_inclusion: need 1 <= k < m");
  }
  if (p.n() != k + 1) {
    throw std::invalid_argument("embed_quadric_inclusion: point not in CP^{k+1}");
  }
  if (!on_quadric(p)) {
    throw std::invalid_argument("embed_quadric_inclusion: point not on Q^k");
  }
  CVec z = CVec::Zero(m + 2);
  z.head(k + 2) = p.homog();
  return ProjPoint(z);
}

ProjPoint embed_sphere_product(int k1, int k2, int m, const RVec& x,
                               const RVec& y) {
  if (k1 < 0 || k2 < 0 || k1 + k2 < 1 || k1 + k2 > m) {
    throw std::invalid_argument("embed_sphere_product: parameter bounds violated");
  }
  if (x.size() != k1 + 1 || y.size() != k2 + 1) {
    throw std::invalid_argument("embed_sphere_product: sphere point dimensions");
  }
  if (std::abs(x.norm() - 1.0) > 1e-9 || std::abs(y.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("embed_sphere_product: inputs must be unit vectors");
  }
  const RVec xn = x / x.norm();
  const RVec yn = y / y.norm();
  const Complex i(0.0, 1.0);
  CVec z = CVec::Zero(m + 2);
  z[0] = xn[0];
  z[1] = i * yn[0];
  for (int j = 1; j <= k1; ++j) z[1 + j] = xn[j];
  for (int j = 1; j <= k2; ++j) z[1 + k1 + j] = i * yn[j];
  return ProjPoint(z);
}

namespace {

// r cos(at/r) e1 + i r cos(bt/r) e2 + r sin(at/r) x + i r sin(bt/r) y,
// with x, y placed in coordinates 3..m+2. Lies on the quadric for every
// a^2 + b^2 and t; unit speed when a^2 + b^2 = 1 and (x, y) orthonormal.
ProjPoint torus_curve(const RVec& x, const RVec& y, double a, double b,
                      double t, int m) {
  const Complex i(0.0, 1.0);
  CVec z = CVec::Zero(m + 2);
  z[0] = kR * std::cos(a * t / kR);
  z[1] = i * kR * std::cos(b * t / kR);
  for (int j = 0; j < m; ++j) {
    z[2 + j] = kR * std::sin(a * t / kR) * x[j] +
               i * kR * std::sin(b * t / kR) * y[j];
  }
  return ProjPoint(z);
}

}  // namespace

ProjPoint torus_map(int m, double t, double s) {
  if (m < 2) throw std::invalid_argument("torus_map: m must be >= 2");
  const Complex i(0.0, 1.0);
  CVec z = CVec::Zero(m + 2);
  z[0] = kR * std::cos(t / kR);
  z[1] = i * kR * std::cos(s / kR);
  z[2] = kR * std::sin(t / kR);
  z[3] = i * kR * std::sin(s / kR);
  return ProjPoint(z);
}

ProjPoint geodesic_sample(const RVec& x, const RVec& y, double phi, double t,
                          int m) {
  if (x.size() != m || y.size() != m) {
    throw std::invalid_argument("geodesic_sample: direction dimensions != m");
  }
  if (std::abs(x.norm() - 1.0) > 1e-9 || std::abs(y.norm() - 1.0) > 1e-9 ||
      std::abs(x.dot(y)) > 1e-9) {
    throw std::invalid_argument("geodesic_sample: (x, y) must be orthonormal");
  }
  if (phi < -1e-12 || phi > kPi / 4.0 + 1e-12) {
    throw std::invalid_argument("geodesic_sample: phi outside [0, pi/4]");
  }
  return torus_curve(x, y, std::cos(phi), std::sin(phi), t, m);
}

namespace {

void validate_period_case(const PeriodCase& c) {
  if (c.tan_den < 1 || c.tan_num < 0) {
    throw std::invalid_argument("PeriodCase: need n1 >= 0 and n2 >= 1");
  }
  if (std::gcd(c.tan_num, c.tan_den) != 1) {
    throw std::invalid_argument("PeriodCase: fraction not reduced");
  }
}

}  // namespace

double minimal_period(const PeriodCase& c) {
  validate_period_case(c);
  const double hyp =
      std::sqrt(double(c.tan_num) * c.tan_num + double(c.tan_den) * c.tan_den);
  if (c.tan_num == 0) return std::sqrt(2.0) * kPi;
  if (c.tan_num % 2 == 1 && c.tan_den % 2 == 1) return kPi / std::sqrt(2.0) * hyp;
  return std::sqrt(2.0) * kPi * hyp;
}

double minimal_period_oracle(const PeriodCase& c) {
  validate_period_case(c);
  const double hyp =
      std::sqrt(double(c.tan_num) * c.tan_num + double(c.tan_den) * c.tan_den);
  const double dx = c.tan_den / hyp;  // cos(phi)
  const double dy = c.tan_num / hyp;  // sin(phi)
  const double unit = kPi / std::sqrt(2.0);
  const int bound = 10 * (c.tan_num + c.tan_den);
  double best = -1.0;
  for (int a = -bound; a <= bound; ++a) {
    for (int b = -bound; b <= bound; ++b) {
      const double px = unit * (a + b);
      const double py = unit * (a - b);
      const double cross = px * dy - py * dx;
      const double along = px * dx + py * dy;
      if (std::abs(cross) <= 1e-9 && along > 1e-9) {
        if (best < 0.0 || along < best) best = along;
      }
    }
  }
  if (best < 0.0) {
    throw std::runtime_error("minimal_period_oracle: lattice search exhausted");
  }
  return best;
}

ProjPoint embed_projective(int k, int m, const ProjPoint& z, bool real_only) {
  if (k < 1 || 2 * k > m) {
    throw std::invalid_argument("embed_projective: need 1 <= k <= m/2");
  }
  if (z.n() != k) throw std::invalid_argument("embed_projective: point not in CP^k");
  const CVec& rep = z.homog();
  if (real_only && rep.imag().cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument(
        "embed_projective: point has no real representative (real_only)");
  }
  const Complex i(0.0, 1.0);
  CVec out = CVec::Zero(m + 2);
  out.head(k + 1) = rep;
  out.segment(k + 1, k + 1) = i * rep;
  return ProjPoint(out);
}

CMat segre_unitary() {
  const Complex i(0.0, 1.0);
  CMat u(4, 4);
  u << 1, 0, 0, 1,
       i, 0, 0, -i,
       0, 1, -1, 0,
       0, -i, -i, 0;
  return u / std::sqrt(2.0);
}

ProjPoint embed_segre_g3(const ProjPoint& z, const ProjPoint& w, int m) {
  if (z.n() != 1 || w.n() != 1) {
    throw std::invalid_argument("embed_segre_g3: factors must lie in CP^1");
  }
  if (m < 2) throw std::invalid_argument("embed_segre_g3: m must be >= 2");
  const CVec& a = z.homog();
  const CVec& b = w.homog();
  CVec v(4);
  v << a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1];
  const CVec mapped = segre_unitary() * v;
  CVec out = CVec::Zero(m + 2);
  out.head(4) = mapped;
  return ProjPoint(out);
}

namespace {

CVec base_lift(int m) {
  CVec z = CVec::Zero(m + 2);
  z[0] = Complex(kR, 0.0);
  z[1] = Complex(0.0, kR);
  return z;
}

// Horizontal derivative at the base point, read in tangent coordinates.
// Representatives are phase-aligned against the base lift before the
// symmetric difference quotient.
CVec curve_derivative(const std::function<ProjPoint(double)>& curve, int m) {
  const CVec z0 = base_lift(m);
  auto aligned = [&z0](const ProjPoint& p) {
    const Complex ip = hermitian_inner(p.homog(), z0);
    if (std::abs(ip) < 1e-6) {
      throw std::runtime_error("tangent extraction: curve left the base chart");
    }
    return CVec(p.homog() * (std::conj(ip) / std::abs(ip)));
  };
  CVec v = (aligned(curve(kDiffStep)) - aligned(curve(-kDiffStep))) /
           (2.0 * kDiffStep);
  const CVec zbar = z0.conjugate();
  v -= hermitian_inner(v, z0) * z0;
  v -= hermitian_inner(v, zbar) * zbar;
  return v.segment(2, m);
}

// Curves on Q^k through its base point with velocities e_a and i e_a.
ProjPoint inclusion_probe(int k, int a, bool complex_dir, double t) {
  RVec x = RVec::Zero(k), y = RVec::Zero(k);
  x[a] = 1.0;
  y[a] = 1.0;
  return complex_dir ? torus_curve(x, y, 0.0, 1.0, t, k)
                     : torus_curve(x, y, 1.0, 0.0, t, k);
}

// Coordinate swap making the projective embedding fix the base point:
// its printed layout sends [1,0,..,0] to [1,0,..,0,i,0,..], so exchange
// slots 1 and k+1.
ProjPoint swap_for_base(const ProjPoint& p, int k) {
  CVec z = p.homog();
  std::swap(z[1], z[k + 1]);
  return ProjPoint(z);
}

ProjPoint cp1_point(double t, bool complex_dir) {
  CVec z(2);
  z[0] = std::cos(t);
  z[1] = complex_dir ? Complex(0.0, std::sin(t)) : Complex(std::sin(t), 0.0);
  return ProjPoint(z);
}

}  // namespace

RealSubspace tangent_space_of_embedding(const EmbeddingDescriptor& e, int m) {
  using Kind = EmbeddingDescriptor::Kind;
  std::vector<std::function<ProjPoint(double)>> curves;
  int expected_dim = 0;

  switch (e.kind) {
    case Kind::QuadricInclusion: {
      const int k = e.k;
      for (int a = 0; a < k; ++a) {
        for (bool cplx : {false, true}) {
          curves.push_back([k, a, cplx, m](double t) {
            return embed_quadric_inclusion(k, m, inclusion_probe(k, a, cplx, t));
          });
        }
      }
      expected_dim = 2 * k;
      break;
    }
    case Kind::SphereProduct: {
      const int k1 = e.k1, k2 = e.k2;
      for (int a = 1; a <= k1; ++a) {
        curves.push_back([k1, k2, a, m](double t) {
          RVec x = RVec::Zero(k1 + 1), y = RVec::Zero(k2 + 1);
          x[0] = std::cos(t);
          x[a] = std::sin(t);
          y[0] = 1.0;
          return embed_sphere_product(k1, k2, m, x, y);
        });
      }
      for (int b = 1; b <= k2; ++b) {
        curves.push_back([k1, k2, b, m](double t) {
          RVec x = RVec::Zero(k1 + 1), y = RVec::Zero(k2 + 1);
          x[0] = 1.0;
          y[0] = std::cos(t);
          y[b] = std::sin(t);
          return embed_sphere_product(k1, k2, m, x, y);
        });
      }
      expected_dim = k1 + k2;
      break;
    }
    case Kind::Torus: {
      curves.push_back([m](double t) { return torus_map(m, t, 0.0); });
      curves.push_back([m](double t) { return torus_map(m, 0.0, t); });
      expected_dim = 2;
      break;
    }
    case Kind::Projective:
    case Kind::ProjectiveReal: {
      const int k = e.k;
      const bool real_only = e.kind == Kind::ProjectiveReal;
      for (int j = 1; j <= k; ++j) {
        for (bool cplx : {false, true}) {
          if (real_only && cplx) continue;
          curves.push_back([k, j, cplx, m, real_only](double t) {
            CVec z = CVec::Zero(k + 1);
            z[0] = std::cos(t);
            z[j] = cplx ? Complex(0.0, std::sin(t)) : Complex(std::sin(t), 0.0);
            return swap_for_base(
                embed_projective(k, m, ProjPoint(z), real_only), k);
          });
        }
      }
      expected_dim = real_only ? k : 2 * k;
      break;
    }
    case Kind::SegreG3: {
      const ProjPoint pole(CVec(Eigen::Vector2cd(1.0, 0.0)));
      curves.push_back([m, pole](double t) {
        return embed_segre_g3(cp1_point(t, false), pole, m);
      });
      curves.push_back([m, pole](double t) {
        return embed_segre_g3(cp1_point(t, true), pole, m);
      });
      curves.push_back([m, pole](double t) {
        return embed_segre_g3(pole, cp1_point(t, false), m);
      });
      expected_dim = 3;
      break;
    }
  }

  std::vector<CVec> velocities;
  velocities.reserve(curves.size());
  const ProjPoint base = quadric_base_point(m);
  for (const auto& curve : curves) {
    if (!proj_equal(curve(0.0), base)) {
      throw std::invalid_argument(
          "tangent_space_of_embedding: embedding does not fix the base point");
    }
    velocities.push_back(curve_derivative(curve, m));
  }
  const RealSubspace s = RealSubspace::span(velocities, m, 1e-6);
  if (s.dim() != expected_dim) {
    throw std::runtime_error(
        "tangent_space_of_embedding: extracted dimension " +
        std::to_string(s.dim()) + " != expected " + std::to_string(expected_dim));
  }
  return s;
}

namespace {

double polygonal_length(const std::function<ProjPoint(double)>& curve,
                        double t0, double t1, int segments) {
  double len = 0.0;
  ProjPoint prev = curve(t0);
  for (int j = 1; j <= segments; ++j) {
    ProjPoint next = curve(t0 + (t1 - t0) * j / segments);
    len += fs_distance(prev, next);
    prev = next;
  }
  return len;
}

LtsType expected_tangent_type(const EmbeddingDescriptor& e) {
  using Kind = EmbeddingDescriptor::Kind;
  switch (e.kind) {
    case Kind::QuadricInclusion:
      return e.k >= 2 ? LtsType::with_k(Tag::G1, e.k) : LtsType::simple(Tag::P2);
    case Kind::SphereProduct:
      if (e.k1 >= 1 && e.k2 >= 1) return LtsType::g2(e.k1, e.k2);
      return LtsType::with_k(Tag::P1, std::max(e.k1, e.k2));
    case Kind::Torus: return LtsType::g2(1, 1);
    case Kind::Projective: return LtsType::with_k(Tag::I1, e.k);
    case Kind::ProjectiveReal: return LtsType::with_k(Tag::I2, e.k);
    case Kind::SegreG3: return LtsType::simple(Tag::G3);
  }
  throw std::logic_error("expected_tangent_type: unreachable");
}

}  // namespace

EmbeddingCheck verify_embedding(const EmbeddingDescriptor& e, int m,
                                int samples, std::uint64_t seed) {
  using Kind = EmbeddingDescriptor::Kind;
  EmbeddingCheck out;
  out.expected_type = expected_tangent_type(e);
  rng::Engine eng(seed);
  const int segments = 10000;

  auto record_point = [&out](const ProjPoint& p) {
    out.max_quadric_residual =
        std::max(out.max_quadric_residual, std::abs(quadric_form(p.homog())));
  };

  switch (e.kind) {
    case Kind::QuadricInclusion: {
      // every point of Q^k lifts to (u + iv)/sqrt(2) with (u, v) an
      // orthonormal pair in R^{k+2}
      std::vector<ProjPoint> src;
      for (int j = 0; j < samples; ++j) {
        const RVec u = rng::random_unit_rvec(e.k + 2, eng);
        RVec v = rng::gaussian_rvec(e.k + 2, eng);
        v -= u.dot(v) * u;
        if (v.norm() < 1e-8) {
          --j;
          continue;
        }
        v /= v.norm();
        CVec lift(e.k + 2);
        lift.real() = u / std::sqrt(2.0);
        lift.imag() = v / std::sqrt(2.0);
        src.push_back(ProjPoint(lift));
      }
      std::vector<ProjPoint> img;
      for (const ProjPoint& p : src) {
        img.push_back(embed_quadric_inclusion(e.k, m, p));
        record_point(img.back());
      }
      for (size_t a = 0; a + 1 < src.size(); ++a) {
        const double d = std::abs(fs_distance(src[a], src[a + 1]) -
                                  fs_distance(img[a], img[a + 1]));
        out.max_isometry_deviation = std::max(out.max_isometry_deviation, d);
      }
      break;
    }
    case Kind::SphereProduct: {
      for (int j = 0; j < samples; ++j) {
        const RVec x = rng::random_unit_rvec(e.k1 + 1, eng);
        const RVec y = rng::random_unit_rvec(e.k2 + 1, eng);
        const ProjPoint p = embed_sphere_product(e.k1, e.k2, m, x, y);
        record_point(p);
        const ProjPoint q = embed_sphere_product(e.k1, e.k2, m, RVec(-x), RVec(-y));
        const double cov =
            1.0 - std::abs(hermitian_inner(p.homog(), q.homog()));
        out.max_covering_deviation = std::max(out.max_covering_deviation, cov);
      }
      // Great-circle length on the radius-1/sqrt(2) source sphere is
      // sqrt(2) pi; the image curve must match.
      if (e.k1 >= 1) {
        const RVec y0 = RVec::Unit(e.k2 + 1, 0);
        auto circle = [&](double t) {
          RVec x = RVec::Zero(e.k1 + 1);
          x[0] = std::cos(t);
          x[1] = std::sin(t);
          return embed_sphere_product(e.k1, e.k2, m, x, y0);
        };
        const double len = polygonal_length(circle, 0.0, 2.0 * kPi, segments);
        out.max_isometry_deviation = std::max(
            out.max_isometry_deviation, std::abs(len / (std::sqrt(2.0) * kPi) - 1.0));
      }
      if (e.k2 >= 1) {
        const RVec x0 = RVec::Unit(e.k1 + 1, 0);
        auto circle = [&](double t) {
          RVec y = RVec::Zero(e.k2 + 1);
          y[0] = std::cos(t);
          y[1] = std::sin(t);
          return embed_sphere_product(e.k1, e.k2, m, x0, y);
        };
        const double len = polygonal_length(circle, 0.0, 2.0 * kPi, segments);
        out.max_isometry_deviation = std::max(
            out.max_isometry_deviation, std::abs(len / (std::sqrt(2.0) * kPi) - 1.0));
      }
      break;
    }
    case Kind::Torus: {
      for (int j = 0; j < samples; ++j) {
        const double t = 4.0 * kPi * rng::uniform01(eng);
        const double s = 4.0 * kPi * rng::uniform01(eng);
        record_point(torus_map(m, t, s));
      }
      const double unit = kPi / std::sqrt(2.0);
      for (const double sign : {1.0, -1.0}) {
        auto gen_circle = [&](double u) {
          return torus_map(m, u * unit, sign * u * unit);
        };
        const double len = polygonal_length(gen_circle, 0.0, 1.0, segments);
        out.max_isometry_deviation =
            std::max(out.max_isometry_deviation, std::abs(len / kPi - 1.0));
        if (!proj_equal(gen_circle(0.0), gen_circle(1.0))) {
          out.detail = "torus generating circle fails to close";
        }
      }
      break;
    }
    case Kind::Projective:
    case Kind::ProjectiveReal: {
      const bool real_only = e.kind == Kind::ProjectiveReal;
      std::vector<ProjPoint> src;
      for (int j = 0; j < samples; ++j) {
        if (real_only) {
          const RVec r = rng::random_unit_rvec(e.k + 1, eng);
          src.push_back(ProjPoint(r.cast<Complex>()));
        } else {
          src.push_back(ProjPoint(rng::random_unit_cvec(e.k + 1, eng)));
        }
      }
      std::vector<ProjPoint> img;
      for (const ProjPoint& p : src) {
        img.push_back(embed_projective(e.k, m, p, real_only));
        record_point(img.back());
      }
      for (size_t a = 0; a + 1 < src.size(); ++a) {
        const double d = std::abs(fs_distance(src[a], src[a + 1]) -
                                  fs_distance(img[a], img[a + 1]));
        out.max_isometry_deviation = std::max(out.max_isometry_deviation, d);
      }
      break;
    }
    case Kind::SegreG3: {
      const int grid = std::max(2, static_cast<int>(std::round(std::sqrt(samples))));
      for (int a = 0; a < grid; ++a) {
        for (int b = 0; b < grid; ++b) {
          CVec z(2), w(2);
          const double ta = kPi * a / grid, tb = 2.0 * kPi * a / grid;
          const double ua = kPi * b / grid, ub = 2.0 * kPi * b / grid;
          z[0] = std::cos(ta);
          z[1] = std::sin(ta) * Complex(std::cos(tb), std::sin(tb));
          w[0] = std::cos(ua);
          w[1] = std::sin(ua) * Complex(std::cos(ub), std::sin(ub));
          record_point(embed_segre_g3(ProjPoint(z), ProjPoint(w), m));
        }
      }
      break;
    }
  }

  const RealSubspace tangent = tangent_space_of_embedding(e, m);
  out.tangent_type = classify(tangent).type;

  const bool isometry_ok =
      e.kind == Kind::SphereProduct || e.kind == Kind::Torus
          ? out.max_isometry_deviation <= 1e-6
          : out.max_isometry_deviation <= 1e-12;
  out.pass = out.max_quadric_residual <= 1e-12 && isometry_ok &&
             out.max_covering_deviation <= 1e-10 &&
             out.tangent_type == out.expected_type && out.detail.empty();
  if (!out.pass && out.detail.empty()) {
    out.detail = "residual thresholds or tangent classification failed";
  }
  return out;
}

}  // namespace cq
