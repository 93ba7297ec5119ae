#include "cq/classify.hpp"
#include "cq/rng.hpp"
#include "cq/roots.hpp"

#include <doctest.h>

#include <cmath>

using namespace cq;

namespace {

CVec e(int m, int k) { return unit_vector(m, k); }
const Complex I(0.0, 1.0);

double root_value(const CVec& z, const CVec& riesz) { return real_inner(z, riesz); }

}  // namespace

TEST_CASE("canonical cartan frame") {
  CHECK_THROWS_AS(canonical_cartan(1), std::invalid_argument);
  const CartanFrame frame = canonical_cartan(3);
  CHECK((frame.x - e(3, 0)).norm() == 0.0);
  CHECK((frame.y - e(3, 1)).norm() == 0.0);
  // flat
  CHECK(bracket(tangent_lift(frame.x), tangent_lift(frame.jy())).norm() <= 1e-12);
  // and classified as the Cartan type
  CHECK(classify(frame.cartan_subalgebra()).type == LtsType::g2(1, 1));
}

TEST_CASE("root table") {
  const int m = 4;
  const CartanFrame frame = canonical_cartan(m);
  const std::vector<RootDatum> table = root_table(frame, m);
  REQUIRE(table.size() == 4);

  // multiplicities (m-2, m-2, 1, 1) and total dimension 2 + sum = 2m
  int total = 2;
  for (const RootDatum& row : table) {
    CHECK(row.multiplicity == row.root_space.dim());
    total += row.multiplicity;
  }
  CHECK(table[0].multiplicity == m - 2);
  CHECK(table[1].multiplicity == m - 2);
  CHECK(table[2].multiplicity == 1);
  CHECK(table[3].multiplicity == 1);
  CHECK(total == 2 * m);

  // row 3: riesz sqrt(2)(e1 - i e2), root space R(i e1 + e2)
  CHECK((table[2].riesz - std::sqrt(2.0) * (e(m, 0) - I * e(m, 1))).norm() <= 1e-14);
  CHECK(table[2].root_space.contains(I * e(m, 0) + e(m, 1)));

  // direct sum with the Cartan subalgebra recovers everything
  std::vector<CVec> all = frame.cartan_subalgebra().basis();
  for (const RootDatum& row : table) {
    all.insert(all.end(), row.root_space.basis().begin(), row.root_space.basis().end());
  }
  CHECK(RealSubspace::span(all, m).dim() == 2 * m);

  // eigen-equation ad(Z)^2 E = -lambda(Z)^2 E over random Cartan elements
  rng::Engine eng(61);
  for (const RootDatum& row : table) {
    for (int trial = 0; trial < 20; ++trial) {
      const CVec z = rng::normal(eng) * frame.x + rng::normal(eng) * frame.jy();
      const double lz = root_value(z, row.riesz);
      for (const CVec& ev : row.root_space.basis()) {
        CHECK((ad_squared(z, ev) + lz * lz * ev).norm() <=
              1e-9 * std::max(1.0, lz * lz));
      }
    }
  }

  // m = 2: rows 1 and 2 are absent
  const std::vector<RootDatum> table2 = root_table(canonical_cartan(2), 2);
  REQUIRE(table2.size() == 2);
  CHECK(table2[0].k == 3);
  CHECK(table2[1].k == 4);
}

TEST_CASE("root table in a rotated gauge") {
  const int m = 5;
  rng::Engine eng(67);
  const CqAutomorphism u = rng::random_automorphism(m, eng);
  CartanFrame frame;
  frame.phase = u.phase * u.phase;  // gauge of the rotated real form
  frame.x = u.apply(e(m, 0));
  frame.y = u.apply(e(m, 1));
  const std::vector<RootDatum> table = root_table(frame, m);
  rng::Engine eng2(71);
  for (const RootDatum& row : table) {
    CHECK(row.multiplicity == row.root_space.dim());
    for (int trial = 0; trial < 5; ++trial) {
      const CVec z = rng::normal(eng2) * frame.x + rng::normal(eng2) * frame.jy();
      const double lz = root_value(z, row.riesz);
      for (const CVec& ev : row.root_space.basis()) {
        CHECK((ad_squared(z, ev) + lz * lz * ev).norm() <=
              1e-9 * std::max(1.0, lz * lz));
      }
    }
  }
}

TEST_CASE("characteristic angle") {
  const int m = 3;
  CHECK(characteristic_angle(e(m, 0)) == doctest::Approx(0.0).epsilon(1e-12));
  // riesz directions: phi(l1) = phi(l2) = 0, phi(l3) = phi(l4) = pi/4
  const CartanFrame frame = canonical_cartan(m);
  const std::vector<RootDatum> table = root_table(frame, m);
  CHECK(std::abs(characteristic_angle(table[0].riesz)) <= 1e-12);
  CHECK(std::abs(characteristic_angle(table[1].riesz)) <= 1e-12);
  CHECK(std::abs(characteristic_angle(table[2].riesz) - M_PI / 4) <= 1e-12);
  CHECK(std::abs(characteristic_angle(table[3].riesz) - M_PI / 4) <= 1e-12);

  const CVec iso = (e(m, 0) + I * e(m, 1)) / std::sqrt(2.0);
  CHECK(std::abs(characteristic_angle(iso) - M_PI / 4) <= 1e-12);

  const CVec at = (2.0 * e(m, 0) + I * e(m, 1)) / std::sqrt(5.0);
  CHECK(std::abs(characteristic_angle(at) - std::atan(0.5)) <= 1e-12);
  CHECK(std::cos(2.0 * characteristic_angle(at)) == doctest::Approx(0.6).epsilon(1e-12));

  // composite riesz difference: phi(l3 - l1) = arctan(1/2)
  CHECK(std::abs(characteristic_angle(CVec(table[2].riesz - table[0].riesz)) -
                 std::atan(0.5)) <= 1e-12);

  CHECK_THROWS_AS(characteristic_angle(CVec(CVec::Zero(m))), std::invalid_argument);

  rng::Engine eng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const CVec v = rng::random_unit_cvec(m, eng);
    const double phi = characteristic_angle(v);
    // scale invariance
    const double c = 4.0 * rng::uniform01(eng) - 2.0;
    if (std::abs(c) > 1e-3) {
      CHECK(std::abs(characteristic_angle(CVec(c * v)) - phi) <= 1e-12);
    }
    // CQ-automorphism invariance
    const CqAutomorphism u = rng::random_automorphism(m, eng);
    CHECK(std::abs(characteristic_angle(u.apply(v)) - phi) <= 1e-10);
  }

  // orthogonal complement inside a Cartan plane has the same angle
  for (int trial = 0; trial < 20; ++trial) {
    const double alpha = 2 * M_PI * rng::uniform01(eng);
    const CVec v = std::cos(alpha) * frame.x + std::sin(alpha) * frame.jy();
    const CVec vp = -std::sin(alpha) * frame.x + std::cos(alpha) * frame.jy();
    CHECK(std::abs(characteristic_angle(v) - characteristic_angle(vp)) <= 1e-12);
  }
}

TEST_CASE("restricted root decomposition: rank 1 composite case (P1)") {
  const int m = 4;
  const CartanFrame frame = canonical_cartan(m);
  const RealSubspace s = RealSubspace::span({e(m, 0), e(m, 1), e(m, 2)}, m);
  const RestrictedRootReport report = decompose_by_roots(s, frame);
  CHECK(report.rank == 1);
  CHECK(report.zero_part.dim() == 1);
  CHECK(report.zero_part.contains(e(m, 0)));
  REQUIRE(report.parts.size() == 1);
  const RestrictedPart& part = report.parts[0];
  CHECK(part.part.dim() == 2);
  CHECK_FALSE(part.elementary());
  CHECK(part.ambient == std::vector<int>{2, 3, 4});
  CHECK(part.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(elementary_riesz_check(report, frame, s));
}

TEST_CASE("restricted root decomposition: rank 2 is elementary") {
  const int m = 4;
  const CartanFrame frame = canonical_cartan(m);
  // type G2(1,2): span{e1, i e2, i e3} contains the Cartan subalgebra
  const RealSubspace s = RealSubspace::span({e(m, 0), I * e(m, 1), I * e(m, 2)}, m);
  const RestrictedRootReport report = decompose_by_roots(s, frame);
  CHECK(report.rank == 2);
  REQUIRE(report.parts.size() == 1);
  CHECK(report.parts[0].elementary());
  CHECK(report.parts[0].ambient == std::vector<int>{1});
  CHECK(report.parts[0].part.dim() == 1);
  CHECK(elementary_riesz_check(report, frame, s));

  // full-rank G1(3): every present restricted root is elementary
  const RealSubspace g1 = RealSubspace::span(
      {e(m, 0), I * e(m, 0), e(m, 1), I * e(m, 1), e(m, 2), I * e(m, 2)}, m);
  const RestrictedRootReport g1_report = decompose_by_roots(g1, frame);
  CHECK(g1_report.rank == 2);
  for (const RestrictedPart& p : g1_report.parts) CHECK(p.elementary());
  CHECK(elementary_riesz_check(g1_report, frame, g1));
}

TEST_CASE("restricted root decomposition: type A") {
  const int m = 3;
  const CartanFrame frame = canonical_cartan(m);
  const CVec z = (2.0 * e(m, 0) + I * e(m, 1)) / std::sqrt(5.0);
  const CVec h = (e(m, 1) + I * e(m, 0) + std::sqrt(3.0) * I * e(m, 2)) / std::sqrt(5.0);
  const RealSubspace s = RealSubspace::span({z, h}, m);
  const RestrictedRootReport report = decompose_by_roots(s, frame);
  CHECK(report.rank == 1);
  CHECK(report.zero_part.contains(z));

  // restricted values of (l1..l4) on Z are (1, 2, 1, 3) sqrt(2)/sqrt(5)
  const std::vector<RootDatum> table = root_table(frame, m);
  const double base = std::sqrt(2.0) / std::sqrt(5.0);
  CHECK(root_value(z, table[0].riesz) == doctest::Approx(base).epsilon(1e-12));
  CHECK(root_value(z, table[1].riesz) == doctest::Approx(2 * base).epsilon(1e-12));
  CHECK(root_value(z, table[2].riesz) == doctest::Approx(base).epsilon(1e-12));
  CHECK(root_value(z, table[3].riesz) == doctest::Approx(3 * base).epsilon(1e-12));

  // the only present restricted root is composite, from lambda_1 and lambda_3
  REQUIRE(report.parts.size() == 1);
  CHECK(report.parts[0].ambient == std::vector<int>{1, 3});
  CHECK_FALSE(report.parts[0].elementary());
  CHECK(report.parts[0].value == doctest::Approx(base).epsilon(1e-12));
  CHECK(elementary_riesz_check(report, frame, s));

  // negative control: corrupt the report by relabeling the composite part
  RestrictedRootReport corrupted = report;
  corrupted.parts[0].ambient = {1};
  corrupted.parts[0].signs = {1.0};
  CHECK_FALSE(elementary_riesz_check(corrupted, frame, s));
}

TEST_CASE("restricted root decomposition: canonical I1 mixes roots 1 and 2") {
  const int m = 4;
  const CartanFrame frame = canonical_cartan(m);
  const CVec u = (e(m, 0) + I * e(m, 1)) / std::sqrt(2.0);
  const RealSubspace s = RealSubspace::span({u, jmul(u)}, m);
  const RestrictedRootReport report = decompose_by_roots(s, frame);
  CHECK(report.rank == 1);
  REQUIRE(report.parts.size() == 1);
  // lambda_4 restricts to twice the generator value; its root space meets S
  CHECK(report.parts[0].ambient == std::vector<int>{4});
  CHECK(report.parts[0].elementary());
  CHECK(elementary_riesz_check(report, frame, s));
}

TEST_CASE("decompose rejects unadapted frames and non lie triples") {
  const int m = 3;
  const CartanFrame frame = canonical_cartan(m);
  const RealSubspace bad = RealSubspace::span({e(m, 0), e(m, 1) + I * e(m, 0)}, m);
  CHECK_THROWS_AS(decompose_by_roots(bad, frame), std::invalid_argument);

  // a Lie triple system the canonical frame misses entirely
  const RealSubspace off = RealSubspace::span({e(m, 2)}, m);
  CHECK_THROWS_AS(decompose_by_roots(off, frame), std::invalid_argument);

  // canonical G2(2,1) has Cartan subalgebra R e1 + R i e3, so the
  // canonical frame sees only a 1-dimensional intersection
  const int m4 = 4;
  const RealSubspace g2 =
      RealSubspace::span({e(m4, 0), e(m4, 1), I * e(m4, 2)}, m4);
  CHECK_THROWS_AS(decompose_by_roots(g2, canonical_cartan(m4)), std::invalid_argument);

  // an adapted frame works: (X, Y) = (e1, e3)
  CartanFrame adapted;
  adapted.phase = Complex(1.0, 0.0);
  adapted.x = e(m4, 0);
  adapted.y = e(m4, 2);
  const RestrictedRootReport report = decompose_by_roots(g2, adapted);
  CHECK(report.rank == 2);
  REQUIRE(report.parts.size() == 1);
  CHECK(report.parts[0].ambient == std::vector<int>{2});
  CHECK(report.parts[0].part.contains(e(m4, 1)));
  CHECK(elementary_riesz_check(report, adapted, g2));
}

TEST_CASE("weyl group") {
  const CartanFrame f4 = canonical_cartan(4);
  const auto group = weyl_group(f4, 4);
  CHECK(group.size() == 8);

  const auto group2 = weyl_group(canonical_cartan(2), 2);
  CHECK(group2.size() == 4);

  // every element permutes the root vectors up to sign
  for (const auto& g : group) {
    for (int k = 1; k <= 4; ++k) {
      const Eigen::Vector2d image = g * riesz_coords(k);
      bool matched = false;
      for (int j = 1; j <= 4; ++j) {
        if ((image - riesz_coords(j)).norm() <= 1e-9 ||
            (image + riesz_coords(j)).norm() <= 1e-9) {
          matched = true;
        }
      }
      CHECK(matched);
    }
  }

  // reflection in l1 followed by reflection in l4 is a rotation by pi/2
  auto reflection = [](int k) {
    const Eigen::Vector2d n = riesz_coords(k).normalized();
    return Eigen::Matrix2d(Eigen::Matrix2d::Identity() - 2.0 * n * n.transpose());
  };
  const Eigen::Matrix2d b = reflection(4) * reflection(1);
  CHECK(std::abs(b.trace()) <= 1e-12);
  CHECK(b.determinant() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((b * b + Eigen::Matrix2d::Identity()).norm() <= 1e-12);

  // rank-2 subsystem Weyl groups embed into the ambient group
  for (const std::vector<int>& sub : {std::vector<int>{3},       // G3
                                      std::vector<int>{1, 2},    // G2 family
                                      std::vector<int>{3, 4}}) { // G1(2)
    for (const auto& g : weyl_subgroup(sub)) {
      bool found = false;
      for (const auto& h : group) {
        if ((g - h).norm() <= 1e-10) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("adapted frames reduce any generated instance to decomposable gauge") {
  const int m = 5;
  const std::vector<LtsType> types = {
      LtsType::simple(Tag::Geo),   LtsType::with_k(Tag::G1, 3),
      LtsType::g2(3, 2),           LtsType::g2(2, 1),
      LtsType::simple(Tag::G3),    LtsType::with_k(Tag::P1, 1),
      LtsType::with_k(Tag::P1, 4), LtsType::simple(Tag::P2),
      LtsType::simple(Tag::A),     LtsType::with_k(Tag::I1, 2),
      LtsType::with_k(Tag::I2, 2),
  };
  for (const LtsType& t : types) {
    for (std::uint64_t seed : {2ULL, 5ULL}) {
      const RealSubspace s = generate(t, m, seed);
      const CartanFrame frame = adapted_cartan_frame(s);
      const RestrictedRootReport report = decompose_by_roots(s, frame);
      const TypeProperties props = type_properties(t, m);
      CHECK(report.rank == props.rank);
      CHECK(elementary_riesz_check(report, frame, s));
      // determinism of the reduction
      const CartanFrame again = adapted_cartan_frame(s);
      CHECK((frame.x - again.x).norm() <= 1e-12);
      CHECK((frame.y - again.y).norm() <= 1e-12);
    }
  }
  const RealSubspace bad =
      RealSubspace::span({unit_vector(m, 0), unit_vector(m, 1) + I * unit_vector(m, 0)}, m);
  CHECK_THROWS_AS(adapted_cartan_frame(bad), std::invalid_argument);
}

TEST_CASE("rank-1 angle constancy on generated types") {
  rng::Engine eng(79);
  const int m = 5;
  const std::vector<LtsType> rank1 = {
      LtsType::with_k(Tag::P1, 3), LtsType::simple(Tag::P2), LtsType::simple(Tag::A),
      LtsType::with_k(Tag::I1, 2), LtsType::with_k(Tag::I2, 2)};
  for (const LtsType& t : rank1) {
    const RealSubspace s = generate(t, m, 11);
    // constancy is measured on the defining invariant cos(2 phi) =
    // |b(v,v)| / ||v||^2; the angle itself loses half the digits near
    // phi = 0 where arccos is ill-conditioned
    double lo = 10.0, hi = -10.0;
    for (int trial = 0; trial < 100; ++trial) {
      CVec v = CVec::Zero(m);
      for (const CVec& b : s.basis()) v += rng::normal(eng) * b;
      if (v.norm() < 1e-9) continue;
      const double c2 = std::abs(bilinear_form(v, v)) / v.squaredNorm();
      lo = std::min(lo, c2);
      hi = std::max(hi, c2);
    }
    CHECK(hi - lo <= 1e-9);
    // the trichotomy: cos(2 phi0) in {1, 3/5, 0}
    const double c0 = 0.5 * (lo + hi);
    const bool in_set = std::abs(c0 - 1.0) <= 1e-9 || std::abs(c0 - 0.6) <= 1e-9 ||
                        std::abs(c0) <= 1e-9;
    CHECK(in_set);
    // and the angle stays within the classifier tolerance
    const double phi0 = characteristic_angle(s.basis()[0]);
    const bool angle_in_set = phi0 <= 1e-6 ||
                              std::abs(phi0 - std::atan(0.5)) <= 1e-6 ||
                              std::abs(phi0 - M_PI / 4) <= 1e-6;
    CHECK(angle_in_set);
  }
}
