#pragma once

#include <cstdint>
#include <vector>

#include "quatlie/algebra.hpp"
#include "quatlie/matrix.hpp"

namespace quatlie {

/// Faithful irreducible representation of the complexified algebra by exact
/// generator matrices. Matrices have side 2^ceil(n/2); for odd n every
/// generator is block-diagonal with blocks differing only in sign.
struct Representation {
  Signature sig;
  std::vector<ExactMatrix> gens;  // gens[a-1] is the image of e_a

  int matrix_size() const { return gens.empty() ? 0 : gens.front().size(); }
  bool odd_blocks() const { return sig.n() & 1; }
};

/// Unit factor in front of the J normal form of e_1...e_p: 1 for
/// p = 0,1 mod 4, i for p = 2,3 mod 4.
ExactComplex alpha_factor(int p);
/// Unit factor for e_{p+1}...e_n: 1 for q = 0,3 mod 4, i for q = 1,2 mod 4.
ExactComplex sigma_factor(int q);

/// Recursive generator construction: diag(1,-1) and the symmetric swap as
/// base cases, block doubling plus i^k times the total product for each odd
/// step, the anti-diagonal identity block for each even step; generators
/// p+1..n are then multiplied by i.
Representation build_beta(Signature sig);

/// Image of a basis blade: ordered product of generator images.
ExactMatrix blade_image(const Representation& rep, BladeMask m);
/// All 2^n blade images, indexed by mask.
std::vector<ExactMatrix> all_blade_images(const Representation& rep);

ExactMatrix rep_apply(const Representation& rep, const Multivector& u);
ComplexMatrix rep_apply_approx(const Representation& rep, const ApproxMultivector& u);
ComplexMatrix rep_apply(const std::vector<ComplexMatrix>& gens, int matrix_size,
                        const ApproxMultivector& u);

struct RepresentationReport {
  bool anticommutation = false;  // g_a g_b + g_b g_a = 2 eta_ab I, exact
  bool hermiticity = false;      // (g_a)^dagger = eta_aa g_a, exact
  bool odd_block_structure = true;
  bool faithful = false;
  std::int64_t rank = 0;  // certified complex rank of the blade-image span
  bool passed() const {
    return anticommutation && hermiticity && odd_block_structure && faithful;
  }
};

/// Exact structural verification. Faithfulness is certified by exact
/// pairwise Frobenius orthogonality of the blade images for n <= 8 and by
/// exact trace vanishing of non-identity blade images above that.
RepresentationReport verify_representation(const Representation& rep);

struct AdditionalSignature {
  int k = 0;   // symmetric generator matrices
  int l = 0;   // skew-symmetric generator matrices
  int kp = 0;  // symmetric among a <= p
  int lp = 0;  // skew among a <= p
  int kq = 0;  // symmetric among a > p
  int lq = 0;  // skew among a > p
  std::vector<int> b_indices;  // 1-based generators with symmetric image
  std::vector<int> c_indices;  // 1-based generators with skew image
  bool table_ok = false;       // (k mod 4, l mod 4) among the allowed pairs for n mod 8
};

/// Allowed (k mod 4, l mod 4) pairs per n mod 8.
bool additional_signature_allowed(int n, int k_mod4, int l_mod4);

/// Counts symmetric/skew generator images; throws std::domain_error when a
/// generator is neither (non-canonical representation).
AdditionalSignature additional_signature(const Representation& rep);

struct PullbackReport {
  bool b_relation = false;   // transpose pullback through the symmetric-index product
  bool c_relation = false;   // transpose pullback through the skew-index product
  bool p_relation = false;   // element dagger through e_1..p
  bool q_relation = false;   // element dagger through e_{p+1}..n
  bool dagger_bridge = false;  // rep(U^dagger) equals rep(U)^dagger
  bool passed() const {
    return b_relation && c_relation && p_relation && q_relation && dagger_bridge;
  }
};

/// Verifies, on every basis blade, the transpose pullback identities (with or
/// without grade involution per the parities of k and l), the element-level
/// dagger identities (per the parities of p and q), and that element dagger
/// maps to matrix conjugate transpose. All checks exact.
PullbackReport pullback_identity_check(const Representation& rep);

}  // namespace quatlie
