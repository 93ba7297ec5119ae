#include "cq/linalg.hpp"
#include "cq/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace cq;

namespace {

CVec e(int m, int k) { return unit_vector(m, k); }
const Complex I(0.0, 1.0);

// Totally real isotropic subspace from k orthonormal pair directions.
RealSubspace random_isotropic(int m, int k, rng::Engine& eng, bool complex_closure_too) {
  const RMat rot = rng::random_rotation(m, eng);
  std::vector<CVec> gen;
  for (int j = 0; j < k; ++j) {
    const CVec w = rot.col(2 * j).cast<Complex>();
    const CVec u = rot.col(2 * j + 1).cast<Complex>();
    gen.push_back((w + jmul(u)) / std::sqrt(2.0));
    if (complex_closure_too) gen.push_back(jmul((w + jmul(u)) / std::sqrt(2.0)));
  }
  return RealSubspace::span(gen, m);
}

}  // namespace

TEST_CASE("hermitian inner product convention") {
  const int m = 3;
  CHECK(std::abs(hermitian_inner(e(m, 0), e(m, 0)) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(hermitian_inner(e(m, 0), I * e(m, 0)) - Complex(0, -1)) < 1e-15);

  rng::Engine eng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const CVec u = rng::gaussian_cvec(m, eng);
    const CVec v = rng::gaussian_cvec(m, eng);
    CHECK(std::abs(hermitian_inner(u, v) - std::conj(hermitian_inner(v, u))) <= 1e-12);
    // <v,w>_C = <v,w> + i <v,Jw>
    const Complex lhs = hermitian_inner(u, v);
    CHECK(std::abs(lhs - Complex(real_inner(u, v), real_inner(u, jmul(v)))) <= 1e-12);
  }
  CHECK_THROWS_AS(hermitian_inner(e(2, 0), e(3, 0)), std::invalid_argument);
}

TEST_CASE("conjugation apply and split") {
  const int m = 2;
  const Conjugation a0;
  CHECK((a0.apply(e(m, 0) + I * e(m, 1)) - (e(m, 0) - I * e(m, 1))).norm() < 1e-15);

  const Conjugation ai(I);
  CHECK((ai.apply(e(m, 0)) - I * e(m, 0)).norm() < 1e-15);

  CHECK_THROWS_AS(Conjugation(Complex(2.0, 0.0)), std::invalid_argument);

  rng::Engine eng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const double theta = 2 * M_PI * rng::uniform01(eng);
    const Conjugation a(Complex(std::cos(theta), std::sin(theta)));
    const CVec v = rng::gaussian_cvec(4, eng);
    CHECK((a.apply(a.apply(v)) - v).norm() <= 1e-12 * v.norm());
    const CVec w = rng::gaussian_cvec(4, eng);
    CHECK(real_inner(a.apply(v), a.apply(w)) ==
          doctest::Approx(real_inner(v, w)).epsilon(1e-12));
    // split: v = re + J im with both parts fixed by A
    const CVec re = a.re_part(v), im = a.im_part(v);
    CHECK((v - re - jmul(im)).norm() <= 1e-12 * v.norm());
    CHECK((a.apply(re) - re).norm() <= 1e-12 * v.norm());
    CHECK((a.apply(im) - im).norm() <= 1e-12 * v.norm());
  }

  // (A0, e1 + i e2) -> (e1, e2); (A0, i e1) -> (0, e1)
  CHECK((a0.re_part(e(m, 0) + I * e(m, 1)) - e(m, 0)).norm() < 1e-15);
  CHECK((a0.im_part(e(m, 0) + I * e(m, 1)) - e(m, 1)).norm() < 1e-15);
  CHECK(a0.re_part(I * e(m, 0)).norm() < 1e-15);
  CHECK((a0.im_part(I * e(m, 0)) - e(m, 0)).norm() < 1e-15);
}

TEST_CASE("span rank decisions") {
  const int m = 3;
  const RealSubspace s1 = RealSubspace::span({e(m, 0), 2.0 * e(m, 0), e(m, 1)}, m);
  CHECK(s1.dim() == 2);
  CHECK(s1.contains(e(m, 0)));
  CHECK(s1.contains(e(m, 1)));

  const RealSubspace s2 = RealSubspace::span({e(m, 0), I * e(m, 0)}, m);
  CHECK(s2.dim() == 2);

  rng::Engine eng(3);
  const CVec v = rng::random_unit_cvec(m, eng);
  const CVec w = rng::random_unit_cvec(m, eng);
  const RealSubspace s3 = RealSubspace::span({v, v + 1e-15 * w}, m, 1e-9);
  CHECK(s3.dim() == 1);

  CHECK(RealSubspace::span({}, m).dim() == 0);
  CVec bad = e(m, 0);
  bad[1] = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(RealSubspace::span({bad}, m), std::invalid_argument);

  // basis independence of membership
  for (int trial = 0; trial < 20; ++trial) {
    const CVec a = rng::gaussian_cvec(m, eng);
    const CVec b = rng::gaussian_cvec(m, eng);
    const RealSubspace sa = RealSubspace::span({a, b}, m);
    const RealSubspace sb = RealSubspace::span({a + 2.0 * b, a - b}, m);
    const CVec probe = rng::gaussian_cvec(m, eng);
    CHECK(sa.contains(probe) == sb.contains(probe));
    CHECK(sa.contains(a + 0.5 * b));
  }
}

TEST_CASE("subspace flags") {
  const int m = 3;
  const auto f1 = subspace_flags(RealSubspace::span({e(m, 0), I * e(m, 0)}, m));
  CHECK(f1.is_complex);
  CHECK_FALSE(f1.is_totally_real);
  CHECK_FALSE(f1.is_isotropic);
  CHECK(f1.is_cq_subspace);

  const auto f2 = subspace_flags(
      RealSubspace::span({(e(m, 0) + I * e(m, 1)) / std::sqrt(2.0)}, m));
  CHECK(f2.is_totally_real);
  CHECK(f2.is_isotropic);
  CHECK_FALSE(f2.is_complex);

  const auto f3 = subspace_flags(RealSubspace::span({e(m, 0), e(m, 1)}, m));
  CHECK(f3.is_totally_real);
  CHECK_FALSE(f3.is_isotropic);

  // phase invariance of the isotropic and CQ flags: rotate the subspace
  // into the gauge of another conjugation and compare
  rng::Engine eng(5);
  for (int p = 0; p < 8; ++p) {
    const double theta = 2 * M_PI * p / 8.0;
    const Complex half(std::cos(theta / 2), std::sin(theta / 2));
    // span{half e0, half i e0} is V(e^{i theta} A0)-adapted complex line
    const auto f = subspace_flags(
        RealSubspace::span({half * e(m, 0), half * I * e(m, 0)}, m));
    CHECK(f.is_cq_subspace);
    const auto g = subspace_flags(RealSubspace::span(
        {half * (e(m, 0) + I * e(m, 1)) / std::sqrt(2.0)}, m));
    CHECK(g.is_isotropic);
  }
}

TEST_CASE("V(A) decomposition invariants") {
  const int m = 4;
  rng::Engine eng(13);
  for (int p = 0; p < 8; ++p) {
    const double theta = 2 * M_PI * p / 8.0;
    const Conjugation a(Complex(std::cos(theta), std::sin(theta)));
    std::vector<CVec> va_gen;
    for (int k = 0; k < m; ++k) {
      va_gen.push_back(a.re_part(e(m, k)));
      va_gen.push_back(a.re_part(I * e(m, k)));
    }
    const RealSubspace va = RealSubspace::span(va_gen, m);
    CHECK(va.dim() == m);
    // V(A) _|_ J V(A) and their sum is everything
    for (const CVec& u : va.basis()) {
      for (const CVec& v : va.basis()) {
        CHECK(std::abs(real_inner(u, jmul(v))) <= 1e-12);
      }
    }
    CHECK(complex_closure(va).dim() == 2 * m);
  }
}

TEST_CASE("canonical representation: CQ case") {
  const int m = 3;
  const RealSubspace s = RealSubspace::span(
      {e(m, 0), I * e(m, 0), e(m, 1), I * e(m, 1)}, m);
  const CanonicalRep rep = canonical_representation(s, Conjugation(), CanonicalKind::CqSubspace);
  CHECK(rep.w1.dim() == 2);
  CHECK(rep.w1.contains(e(m, 0)));
  CHECK(rep.w1.contains(e(m, 1)));
  const RealSubspace rebuilt = rebuild_from_representation(rep);
  CHECK(is_subspace_of(rebuilt, s));
  CHECK(is_subspace_of(s, rebuilt));

  CHECK_THROWS_AS(canonical_representation(RealSubspace::span({e(m, 0)}, m),
                                           Conjugation(), CanonicalKind::CqSubspace),
                  std::invalid_argument);
}

TEST_CASE("canonical representation: isotropic totally real") {
  const int m = 2;
  const CVec u = (e(m, 0) + I * e(m, 1)) / std::sqrt(2.0);
  const RealSubspace s = RealSubspace::span({u}, m);
  const CanonicalRep rep =
      canonical_representation(s, Conjugation(), CanonicalKind::IsotropicTotallyReal);
  CHECK(rep.w1.dim() == 1);
  CHECK(rep.w2.dim() == 1);
  CHECK(rep.w1.contains(e(m, 0)));
  CHECK(rep.w2.contains(e(m, 1)));
  // tau maps the W1 direction isometrically onto the W2 direction
  CHECK(rep.tau_images.size() == 1);
  CHECK(std::abs(rep.tau_images[0].norm() - 1.0) <= 1e-10);
  CHECK(rep.w2.contains(rep.tau_images[0]));
  const RealSubspace rebuilt = rebuild_from_representation(rep);
  CHECK(is_subspace_of(rebuilt, s));
  CHECK(is_subspace_of(s, rebuilt));
}

TEST_CASE("canonical representation: isotropic complex") {
  const int m = 2;
  const CVec u = (e(m, 0) + I * e(m, 1)) / std::sqrt(2.0);
  const RealSubspace s = RealSubspace::span({u, jmul(u)}, m);
  const CanonicalRep rep =
      canonical_representation(s, Conjugation(), CanonicalKind::IsotropicComplex);
  CHECK(rep.w1.dim() == 2);
  CHECK(rep.w1.contains(e(m, 0)));
  CHECK(rep.w1.contains(e(m, 1)));
  // tau is an orthogonal complex structure (tau^2 = -id is verified
  // internally; a wrong claim must throw)
  const RealSubspace rebuilt = rebuild_from_representation(rep);
  CHECK(is_subspace_of(rebuilt, s));
  CHECK(is_subspace_of(s, rebuilt));

  CHECK_THROWS_AS(
      canonical_representation(s, Conjugation(), CanonicalKind::IsotropicTotallyReal),
      std::invalid_argument);
}

TEST_CASE("complex closure") {
  const int m = 3;
  const RealSubspace s = RealSubspace::span({e(m, 0)}, m);
  const RealSubspace c = complex_closure(s);
  CHECK(c.dim() == 2);
  CHECK(c.contains(I * e(m, 0)));
  CHECK(subspace_flags(c).is_complex);

  const RealSubspace iso = RealSubspace::span(
      {(e(m, 0) + I * e(m, 1)) / std::sqrt(2.0)}, m);
  const RealSubspace ic = complex_closure(iso);
  CHECK(ic.dim() == 2);
  CHECK(subspace_flags(ic).is_complex);
  CHECK(subspace_flags(ic).is_isotropic);

  rng::Engine eng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const RealSubspace r = rng::random_subspace(4, 2, eng);
    const RealSubspace once = complex_closure(r);
    const RealSubspace twice = complex_closure(once);
    CHECK(once.dim() == twice.dim());
    CHECK(is_subspace_of(twice, once));
  }
}

TEST_CASE("isotropy preserved by complex closure") {
  rng::Engine eng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 4 + static_cast<int>(3 * rng::uniform01(eng));
    const int k = 1 + static_cast<int>(rng::uniform01(eng) * (m / 2));
    const RealSubspace iso = random_isotropic(m, k, eng, false);
    REQUIRE(subspace_flags(iso).is_isotropic);
    CHECK(subspace_flags(complex_closure(iso)).is_isotropic);
  }
}

TEST_CASE("canonical representation round-trips on random inputs") {
  rng::Engine eng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 4;
    const RealSubspace s = random_isotropic(m, 2, eng, trial % 2 == 1);
    const CanonicalKind kind = trial % 2 == 1 ? CanonicalKind::IsotropicComplex
                                              : CanonicalKind::IsotropicTotallyReal;
    const CanonicalRep rep = canonical_representation(s, Conjugation(), kind);
    const RealSubspace rebuilt = rebuild_from_representation(rep);
    CHECK(is_subspace_of(rebuilt, s));
    CHECK(is_subspace_of(s, rebuilt));
  }
}
