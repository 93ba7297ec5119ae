#pragma once

// Deterministic randomness. All draws go through std::mt19937_64 and the
// fixed mappings below, so identical seeds give identical values on every
// platform (standard distributions are not portable across libraries).

#include "cq/linalg.hpp"

#include <cstdint>
#include <random>

namespace cq::rng {

using Engine = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 42;

// Uniform in [0, 1) with 53 random bits.
double uniform01(Engine& eng);

// Standard normal via Box-Muller.
double normal(Engine& eng);

CVec gaussian_cvec(int m, Engine& eng);
RVec gaussian_rvec(int m, Engine& eng);
RVec random_unit_rvec(int m, Engine& eng);
CVec random_unit_cvec(int m, Engine& eng);

// Haar-ish rotation in SO(n): Gram-Schmidt of a Gaussian matrix, sign-fixed.
RMat random_rotation(int n, Engine& eng);

CqAutomorphism random_automorphism(int m, Engine& eng);

// Random real subspace of C^m spanned by d Gaussian vectors.
RealSubspace random_subspace(int m, int d, Engine& eng,
                             double tol = kDefaultTol);

}  // namespace cq::rng
