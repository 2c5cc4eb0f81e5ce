#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "quatlie/algebra.hpp"

namespace quatlie {

/// Direct sum of quaternion-type components of the complexified algebra.
/// allowed[s][phase] says whether the real (phase 0) or imaginary (phase 1)
/// copy of type s belongs to the subspace.
struct SubspaceSpec {
  std::array<std::array<bool, 2>, 4> allowed{};

  bool has(int type, int phase) const { return allowed[type & 3][phase]; }

  /// Builds from component strings, e.g. ("23", "01") for the real types
  /// {2,3} plus the imaginary types {0,1}.
  static SubspaceSpec of(const std::string& real_types, const std::string& imag_types);

  /// Parses names like "2", "02i13", "0123i0123".
  static SubspaceSpec parse(const std::string& name);

  std::string name() const;

  friend bool operator==(const SubspaceSpec& a, const SubspaceSpec& b) {
    return a.allowed == b.allowed;
  }
};

enum class ConditionKind {
  Invertible,
  PseudoHermitian,        // U^dd U = e
  GradedPseudoHermitian,  // (hat U)^dd U = e
  Reversion,              // (tilde U) U = e
  GradedReversion,        // (tilde of hat U) U = e
};

struct GroupCondition {
  ConditionKind kind;
  SubspaceSpec carrier;
};

/// One row of the sixteen-entry group/algebra catalog.
struct AlgebraCatalogRow {
  int id;                  // 1..16
  const char* name;        // algebra name, e.g. "23i01"
  const char* group_name;  // display name of the group
  SubspaceSpec algebra;
  GroupCondition condition;
};

const AlgebraCatalogRow& catalog_row(int id);
int catalog_id_from_name(const std::string& name);  // 0 when unknown

/// Closed-form real dimension of catalog row `id` at n generators.
double closed_form_dim(int id, int n);

Multivector quat_projection(const Multivector& u, int s);
ApproxMultivector quat_projection(const ApproxMultivector& u, int s);

/// Dimensions of the four quaternion-type subspaces, as exact binomial sums.
std::array<std::int64_t, 4> quat_type_dims(int n);
/// The trigonometric closed forms 2^{n-2} +- 2^{(n-2)/2} cos/sin(pi n/4).
std::array<double, 4> quat_type_dims_closed(int n);

std::int64_t binomial(int n, int k);
std::int64_t subspace_dim(const SubspaceSpec& spec, int n);
std::int64_t lie_algebra_dim(int id, int n);

/// Real basis of the subspace: blades for real components, i*blade for
/// imaginary ones. Real components first, then imaginary, each in ascending
/// blade-mask order.
std::vector<Multivector> subspace_basis(const SubspaceSpec& spec, Signature sig);
std::vector<Multivector> subspace_basis(int id, Signature sig);

bool contains(const SubspaceSpec& spec, const Multivector& u);
bool contains(int id, const Multivector& u);
bool contains_approx(const SubspaceSpec& spec, const ApproxMultivector& u, double tol = 1e-10);

struct ClosureReport {
  int id = 0;  // catalog id, 0 for an ad-hoc subspace
  int p = 0;
  int q = 0;
  bool passed = false;
  std::vector<std::pair<BladeMask, BladeMask>> violations;
};

/// Brute-force commutator closure over all ordered basis pairs.
ClosureReport closure_check(const SubspaceSpec& spec, Signature sig, int report_id = 0);
ClosureReport closure_check(int id, Signature sig);

struct CommutationRelation {
  int s = 0;
  int t = 0;
  int target = 0;
  bool passed = false;
  std::vector<std::pair<BladeMask, BladeMask>> violations;
};

struct CommutationTableReport {
  int p = 0;
  int q = 0;
  std::vector<CommutationRelation> relations;
  bool passed() const;
};

/// Checks every bracket inclusion between quaternion-type subspaces
/// ([k,k] in type 2, [k,2] in type k, and the 0/1/3 cyclic relations)
/// by brute force over blade pairs.
CommutationTableReport commutation_table_check(Signature sig);

/// Residual of the defining group condition: inf-norm of (LHS - e).
/// Invertible-only groups return 0 iff the matrix image is invertible.
double group_residual(int id, const ApproxMultivector& u);

/// Exact variant: the condition is evaluated in rational arithmetic and the
/// invertible-only rows use an exact determinant test, so 0.0 means exact
/// group membership.
double group_residual(int id, const Multivector& u);

struct SpinChecksReport {
  int p = 0;
  int q = 0;
  bool grade2_in_type2 = false;
  bool bracket_closed = false;
  bool stabilizes_vectors = false;
  bool dim_coincidence = false;  // dim(2+i2) == n(n-1) exactly when n <= 5
  std::int64_t spin_algebra_dim = 0;
  std::int64_t type2_complex_dim = 0;
  bool traces_zero = true;  // checked at n == 6, vacuous otherwise
  double max_trace = 0.0;
  std::vector<std::pair<BladeMask, BladeMask>> violations;
  bool passed() const;
};

SpinChecksReport spin_lie_checks(Signature sig);

}  // namespace quatlie
