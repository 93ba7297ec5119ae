#pragma once

// The type classifier for Lie triple systems of the quadric tangent space:
// rank computation, the full decision procedure, canonical generators for
// every type, and the classification table.

#include "cq/roots.hpp"

#include <cstdint>
#include <string>

namespace cq {

enum class Tag { Geo, G1, G2, G3, P1, P2, A, I1, I2, Full, NotLieTriple };

std::string tag_name(Tag t);
Tag tag_from_name(const std::string& name);

// Tagged type with parameters. G1/P1/I1/I2 carry k; G2 carries (k1, k2)
// stored with k1 >= k2 (replacing the conjugation by its negative swaps
// the two factors, so the ordered pair is a representation choice).
struct LtsType {
  Tag tag = Tag::NotLieTriple;
  int k = 0;
  int k1 = 0;
  int k2 = 0;

  static LtsType simple(Tag t) { return {t, 0, 0, 0}; }
  static LtsType with_k(Tag t, int k) { return {t, k, 0, 0}; }
  static LtsType g2(int k1, int k2);

  bool operator==(const LtsType& o) const;
  std::string to_string() const;
};

// Admissibility of a type for ambient dimension m:
//   G1: 2 <= k <= m-1; G2: k1,k2 >= 1, k1+k2 <= m; P1: 1 <= k <= m;
//   A: m >= 3; I1/I2: 1 <= k <= m/2; Geo/G3/P2/Full: always (m >= 2).
bool admissible(const LtsType& t, int m);

enum class Complexity { Complex, TotallyReal, Neither };

struct TypeProperties {
  int real_dim = 0;
  Complexity complexity = Complexity::Neither;
  int rank = 0;
  bool maximal = false;
};

// The classification table row for an admissible type.
TypeProperties type_properties(const LtsType& t, int m);

// Rank of a nonzero Lie triple system (1 or 2), decided by the dimension
// of the commutant of a single probe vector: every element lies in a
// maximal flat, so one probe suffices. Throws on zero or non-LTS input.
int rank_of(const RealSubspace& s);

struct Classification {
  LtsType type;
  int dim = 0;
  int rank = 0;        // 0 when not applicable (NotLieTriple)
  double angle = -1.0; // characteristic angle; < 0 unless rank == 1
  SubspaceFlags flags;
  double residual = 0.0;     // worst curvature-invariance residual
  std::string diagnostic;    // reason, when NotLieTriple
};

// Full decision procedure. NotLieTriple is a value, not an error; it is
// also returned with a diagnostic when a numerically inconsistent state is
// reached that the classification excludes for exact input.
Classification classify(const RealSubspace& s);

// Canonical example of the type built from standard basis vectors, then
// conjugated by a seed-determined CQ-automorphism so instances are not
// axis-aligned. classify(generate(t, m, seed)) == t for admissible t.
RealSubspace generate(const LtsType& t, int m, std::uint64_t seed);

}  // namespace cq
