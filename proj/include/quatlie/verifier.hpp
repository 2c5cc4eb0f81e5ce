#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quatlie/classifier.hpp"
#include "quatlie/quat_lie.hpp"

namespace quatlie {

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  std::string witness;
};

struct VerificationReport {
  int id = 0;
  int p = 0;
  int q = 0;
  std::uint64_t seed = 0;
  double tol_structural = 0.0;
  double tol_exponential = 0.0;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

struct VerifyOptions {
  double tol_structural = 1e-10;
  double tol_exponential = 1e-8;
  int samples = 20;
  std::uint64_t seed = 42;
};

/// Binomial dimension == closed form (float, 1e-9) == classified real
/// dimension (exact, rows 1..11) == basis length.
CheckResult verify_dimensions(int id, Signature sig);

/// Matrix-side infinitesimal conditions for rows 6..11: every subspace basis
/// element maps, through the normal-formed representation, into the claimed
/// classical algebra (anti-Hermitian against J, antisymmetric against the
/// symmetric form, Hamiltonian against Omega, or the free block of the
/// linear-group parametrization). Rows 8 and 11 are verified through their
/// even-subalgebra reduction.
CheckResult verify_matrix_conditions(int id, Signature sig, double tol);

/// Real-linear rank of the basis-to-matrix map equals the algebra dimension
/// (injectivity; with the containment check and equal dimensions this
/// certifies the isomorphism). Rows 1..5 run the plain injectivity form.
CheckResult verify_rank(int id, Signature sig, double tol);

/// Seeded random Lie algebra elements exponentiate into the group: the
/// defining condition residual and the matrix-level form preservation both
/// stay below tol.
CheckResult verify_group_exponentials(int id, Signature sig, int samples, std::uint64_t seed,
                                      double tol);

/// All applicable checks for one (id, signature) pair.
VerificationReport verify_signature(int id, Signature sig, const VerifyOptions& opt = {});

/// Reports for every signature with 1 <= p+q <= max_n (p descending within
/// each n) and every requested id; deterministic given the seed.
std::vector<VerificationReport> sweep(int max_n, const std::vector<int>& ids,
                                      const VerifyOptions& opt = {});

}  // namespace quatlie
