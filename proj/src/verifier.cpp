#include "quatlie/verifier.hpp"

#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>

#include "quatlie/normal_form.hpp"
#include "quatlie/representation.hpp"

namespace quatlie {

namespace {

std::string describe_mask(BladeMask m) {
  if (m == 0) return "e";
  std::string s = "e{";
  bool first = true;
  for (int a = 1; m != 0; ++a, m >>= 1) {
    if (m & 1) {
      if (!first) s += ",";
      s += std::to_string(a);
      first = false;
    }
  }
  return s + "}";
}

std::string describe_element(const Multivector& u) {
  if (u.is_zero()) return "0";
  const auto& [m, c] = *u.terms().begin();
  std::string prefix = c.re.is_zero() ? "i*" : "";
  return prefix + describe_mask(m);
}

BladeMask range_mask(int first, int last) {
  BladeMask m = 0;
  for (int a = first; a <= last; ++a) m |= BladeMask(1) << (a - 1);
  return m;
}

BladeMask mask_from_indices(const std::vector<int>& indices) {
  BladeMask m = 0;
  for (int a : indices) m |= BladeMask(1) << (a - 1);
  return m;
}

/// Chain map for rows 8 and 11: even element of Cl(p,q) to Cl(p,q-1), with a
/// signature swap first when q = 0.
Multivector reduce_even_element(const Multivector& u, bool via_swap) {
  return even_iso_inverse(via_swap ? swap_iso(u) : u);
}

ApproxMultivector reduce_even_element_approx(const ApproxMultivector& u, bool via_swap) {
  ApproxMultivector cur = u;
  if (via_swap) {
    // Only reached for definite signatures, where the swap keeps blade
    // indices and the i^grade factor is the whole story.
    Signature swapped(u.sig().q(), u.sig().p());
    ApproxMultivector next(swapped, u.tol());
    for (const auto& [m, c] : cur.terms()) {
      int k = blade_grade(m) & 3;
      std::complex<double> unit = k == 0 ? 1.0 : (k == 1 ? std::complex<double>(0, 1)
                                                         : (k == 2 ? -1.0
                                                                   : std::complex<double>(0, -1)));
      next.set(m, unit * c);
    }
    cur = next;
  }
  const Signature& s = cur.sig();
  Signature source(s.p(), s.q() - 1);
  BladeMask top = BladeMask(1) << (s.n() - 1);
  ApproxMultivector out(source, cur.tol());
  for (const auto& [m, c] : cur.terms()) out.set(m & ~top, c);
  return out;
}

enum class FormKind { Unitary, Orth, Omega, GLParam };

struct MatrixPlan {
  int id = 0;                // original row
  Signature sig;             // original signature
  int working_id = 0;        // row used for the relation machinery
  Signature working_sig;     // signature of the working representation
  bool reduced = false;
  bool via_swap = false;
  bool reduction_contained = true;
  bool trivial = false;       // zero-dimensional algebra
  bool single_block = false;  // n = 1 even-carrier rows: test one block
  FormKind form = FormKind::Unitary;
  bool blockwise = false;
  bool family_consistent = true;
  bool summands_consistent = true;
  Representation rep;
  std::vector<Multivector> basis;  // working basis
  ComplexMatrix transform;
  ComplexMatrix form_matrix;
  ClassicalLieAlgebra target;

  MatrixPlan(Signature s) : sig(s), working_sig(s), rep{s, {}} {}
};

MatrixPlan make_plan(int id, Signature sig) {
  MatrixPlan plan(sig);
  plan.id = id;
  plan.working_id = id;
  plan.target = classify(id, sig);
  plan.basis = subspace_basis(id, sig);

  if (plan.basis.empty()) {
    plan.trivial = true;
    return plan;
  }

  if (id <= 5) {
    plan.rep = build_beta(sig);
    return plan;  // rank-only rows; no form machinery
  }

  const bool even_carrier_row = (id == 8 || id == 11);
  if (even_carrier_row && sig.n() == 1) {
    plan.single_block = true;
    plan.rep = build_beta(sig);
    plan.form = id == 8 ? FormKind::Unitary : FormKind::Orth;
    plan.transform = ComplexMatrix::identity(plan.rep.matrix_size());
    plan.form_matrix = ComplexMatrix::identity(plan.rep.matrix_size() / 2);
    plan.family_consistent = plan.target.family == (id == 8 ? Family::U : Family::SOComplex);
    plan.summands_consistent = plan.target.summands == 1;
    return plan;
  }

  if (even_carrier_row) {
    plan.reduced = true;
    plan.via_swap = sig.q() == 0;
    Signature stage = plan.via_swap ? Signature(sig.q(), sig.p()) : sig;
    plan.working_sig = Signature(stage.p(), stage.q() - 1);
    plan.working_id = id == 8 ? 7 : 10;
    std::vector<Multivector> mapped;
    mapped.reserve(plan.basis.size());
    for (const auto& b : plan.basis) {
      Multivector r = reduce_even_element(b, plan.via_swap);
      if (!contains(plan.working_id, r)) plan.reduction_contained = false;
      mapped.push_back(std::move(r));
    }
    plan.basis = std::move(mapped);
  }

  plan.rep = build_beta(plan.working_sig);
  const Signature& ws = plan.working_sig;
  const int n = ws.n();
  const bool odd_n = (n % 2) == 1;

  ConditionKind kind = catalog_row(plan.working_id).condition.kind;
  const bool dagger_family = kind == ConditionKind::PseudoHermitian ||
                             kind == ConditionKind::GradedPseudoHermitian;
  const bool need_hat = kind == ConditionKind::GradedPseudoHermitian ||
                        kind == ConditionKind::GradedReversion;

  struct Candidate {
    BladeMask mask = 0;
    ExactComplex unit = ExactComplex::one();
    bool hat = false;
    int count = 0;
  };
  std::vector<Candidate> candidates;
  if (dagger_family) {
    candidates.push_back({range_mask(1, ws.p()), alpha_factor(ws.p()), ws.p() % 2 == 0, ws.p()});
    candidates.push_back(
        {range_mask(ws.p() + 1, n), sigma_factor(ws.q()), ws.q() % 2 == 1, ws.q()});
  } else {
    AdditionalSignature as = additional_signature(plan.rep);
    ExactComplex b_unit = (as.kq % 2) ? ExactComplex::i() : ExactComplex::one();
    ExactComplex c_unit = (as.lp % 2) ? ExactComplex::i() : ExactComplex::one();
    candidates.push_back({mask_from_indices(as.b_indices), b_unit, as.k % 2 == 0, as.k});
    candidates.push_back({mask_from_indices(as.c_indices), c_unit, as.l % 2 == 1, as.l});
  }

  std::optional<Candidate> chosen;
  for (const auto& c : candidates)
    if (c.hat == need_hat && c.mask == 0) {
      chosen = c;
      break;
    }
  if (!chosen) {
    for (const auto& c : candidates)
      if (c.hat == need_hat && c.mask != 0 && (!odd_n || c.count % 2 == 0)) {
        chosen = c;
        break;
      }
  }

  plan.blockwise = odd_n;
  if (!chosen) {
    // No pullback relation matches the condition's grade involution; the
    // element splits into free diagonal blocks (the linear-group branch).
    plan.form = FormKind::GLParam;
    plan.transform = ComplexMatrix::identity(plan.rep.matrix_size());
    plan.family_consistent = plan.target.family == Family::GL && odd_n;
    plan.summands_consistent = plan.target.summands == 1;
    return plan;
  }

  if (chosen->mask == 0) {
    plan.transform = ComplexMatrix::identity(plan.rep.matrix_size());
    plan.form_matrix = ComplexMatrix::identity(plan.rep.matrix_size());
    plan.form = dagger_family ? FormKind::Unitary : FormKind::Orth;
  } else {
    ConjugatorNormalForm cnf =
        normalize_blade_conjugator(plan.rep, chosen->mask, chosen->unit, !dagger_family, odd_n);
    plan.transform = cnf.transform;
    plan.form_matrix = cnf.form;
    plan.form = dagger_family ? FormKind::Unitary
                              : (cnf.omega ? FormKind::Omega : FormKind::Orth);
  }

  Family expected_family = plan.form == FormKind::Unitary
                               ? Family::U
                               : (plan.form == FormKind::Omega ? Family::SPComplex
                                                               : Family::SOComplex);
  plan.family_consistent = plan.target.family == expected_family;
  plan.summands_consistent = plan.target.summands == (plan.blockwise ? 2 : 1);
  return plan;
}

ComplexMatrix transformed_image(const MatrixPlan& plan, const Multivector& u) {
  ComplexMatrix raw = to_complex(rep_apply(plan.rep, u));
  if (plan.form == FormKind::GLParam) return raw;
  return conj_transpose(plan.transform) * raw * plan.transform;
}

double form_condition_residual(const MatrixPlan& plan, const ComplexMatrix& y) {
  auto residual_on = [&](const ComplexMatrix& yy, const ComplexMatrix& f) {
    ComplexMatrix lhs = plan.form == FormKind::Unitary ? conj_transpose(yy) : transpose(yy);
    return max_abs(lhs * f + f * yy);
  };
  if (plan.single_block) {
    const int h = y.size() / 2;
    return residual_on(block(y, 0, 0, h), plan.form_matrix);
  }
  if (plan.blockwise) {
    const int h = y.size() / 2;
    double off = 0.0;
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j)
        off = std::max({off, std::abs(y.at(i, h + j)), std::abs(y.at(h + i, j))});
    double r0 = residual_on(block(y, 0, 0, h), block(plan.form_matrix, 0, 0, h));
    double r1 = residual_on(block(y, h, h, h), block(plan.form_matrix, h, h, h));
    return std::max({off, r0, r1});
  }
  return residual_on(y, plan.form_matrix);
}

double group_form_residual(const MatrixPlan& plan, const ComplexMatrix& g) {
  auto residual_on = [&](const ComplexMatrix& gg, const ComplexMatrix& f) {
    ComplexMatrix lhs = plan.form == FormKind::Unitary ? conj_transpose(gg) : transpose(gg);
    return max_abs(lhs * f * gg - f);
  };
  if (plan.form == FormKind::GLParam) {
    const int h = g.size() / 2;
    return std::abs(det(block(g, 0, 0, h))) > 1e-6 ? 0.0 : 1.0;
  }
  if (plan.single_block) {
    const int h = g.size() / 2;
    return residual_on(block(g, 0, 0, h), plan.form_matrix);
  }
  if (plan.blockwise) {
    const int h = g.size() / 2;
    double r0 = residual_on(block(g, 0, 0, h), block(plan.form_matrix, 0, 0, h));
    double r1 = residual_on(block(g, h, h, h), block(plan.form_matrix, h, h, h));
    return std::max(r0, r1);
  }
  return residual_on(g, plan.form_matrix);
}

bool plan_flags_ok(const MatrixPlan& plan, std::string* witness) {
  if (!plan.reduction_contained) {
    *witness = "reduced basis escapes the target subspace";
    return false;
  }
  if (!plan.family_consistent) {
    *witness = "derived form family disagrees with the classification";
    return false;
  }
  if (!plan.summands_consistent) {
    *witness = "summand count disagrees with the classification";
    return false;
  }
  return true;
}

double random_unit(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;  // [0,1), platform independent
}

std::mt19937_64 seeded_stream(std::uint64_t seed, int id, Signature sig) {
  std::uint64_t mix = seed;
  mix = mix * 0x9E3779B97F4A7C15ull + std::uint64_t(id);
  mix = mix * 0x9E3779B97F4A7C15ull + std::uint64_t(sig.p());
  mix = mix * 0x9E3779B97F4A7C15ull + std::uint64_t(sig.q());
  return std::mt19937_64(mix);
}

}  // namespace

CheckResult verify_dimensions(int id, Signature sig) {
  CheckResult check;
  check.name = "dimensions";
  const int n = sig.n();
  std::int64_t dim = lie_algebra_dim(id, n);
  double closed = closed_form_dim(id, n);
  check.residual = std::abs(closed - double(dim));
  if (check.residual >= 1e-9) {
    check.witness = "closed form disagrees with binomial sum";
    return check;
  }
  if (std::int64_t(subspace_basis(id, sig).size()) != dim) {
    check.witness = "basis length disagrees with binomial sum";
    return check;
  }
  if (id <= 11) {
    std::int64_t classified = real_dim(classify(id, sig));
    if (classified != dim) {
      check.witness = "classified real dimension " + std::to_string(classified) +
                      " != " + std::to_string(dim);
      return check;
    }
  }
  check.passed = true;
  return check;
}

CheckResult verify_matrix_conditions(int id, Signature sig, double tol) {
  if (id < 6 || id > 11)
    throw std::invalid_argument("verify_matrix_conditions: rows 6..11 only");
  if (sig.n() > 8) throw std::invalid_argument("verify_matrix_conditions: n must be <= 8");
  CheckResult check;
  check.name = "matrix-conditions";
  MatrixPlan plan = make_plan(id, sig);
  if (plan.trivial) {
    check.passed = true;
    return check;
  }
  if (!plan_flags_ok(plan, &check.witness)) return check;

  double worst = 0.0;
  std::string worst_witness;
  for (std::size_t j = 0; j < plan.basis.size(); ++j) {
    const Multivector& x = plan.basis[j];
    if (plan.form == FormKind::GLParam) {
      ExactMatrix image = rep_apply(plan.rep, x);
      if (!is_block_diagonal(image)) {
        check.witness = "image of " + describe_element(x) + " is not block diagonal";
        return check;
      }
      continue;
    }
    double r = form_condition_residual(plan, transformed_image(plan, x));
    if (r > worst) {
      worst = r;
      worst_witness = describe_element(x);
    }
  }
  check.residual = worst;
  if (worst >= tol) {
    check.witness = "form condition fails on " + worst_witness;
    return check;
  }
  check.passed = true;
  return check;
}

CheckResult verify_rank(int id, Signature sig, double tol) {
  if (id < 1 || id > 11) throw std::invalid_argument("verify_rank: rows 1..11 only");
  if (sig.n() > 8) throw std::invalid_argument("verify_rank: n must be <= 8");
  CheckResult check;
  check.name = "rank";
  MatrixPlan plan = make_plan(id, sig);
  std::int64_t expected = lie_algebra_dim(id, sig.n());
  if (plan.trivial) {
    check.passed = expected == 0;
    return check;
  }
  if (!plan_flags_ok(plan, &check.witness)) return check;

  std::vector<std::vector<double>> rows;
  rows.reserve(plan.basis.size());
  for (const auto& x : plan.basis) {
    ComplexMatrix y = id <= 5 ? to_complex(rep_apply(plan.rep, x)) : transformed_image(plan, x);
    int lo = 0, hi = y.size();
    if (plan.form == FormKind::GLParam || plan.single_block) hi = y.size() / 2;
    std::vector<double> row;
    row.reserve(2 * std::size_t(hi - lo) * (hi - lo));
    for (int i = lo; i < hi; ++i)
      for (int j = lo; j < hi; ++j) {
        row.push_back(y.at(i, j).real());
        row.push_back(y.at(i, j).imag());
      }
    rows.push_back(std::move(row));
  }
  int rank = rank_real(std::move(rows), tol);
  check.residual = std::abs(double(rank) - double(expected));
  if (rank != expected) {
    check.witness = "rank " + std::to_string(rank) + " != dim " + std::to_string(expected);
    return check;
  }
  check.passed = true;
  return check;
}

CheckResult verify_group_exponentials(int id, Signature sig, int samples, std::uint64_t seed,
                                      double tol) {
  if (id < 6 || id > 11)
    throw std::invalid_argument("verify_group_exponentials: rows 6..11 only");
  if (sig.n() > 5) throw std::invalid_argument("verify_group_exponentials: n must be <= 5");
  if (samples < 1) throw std::invalid_argument("verify_group_exponentials: samples >= 1");
  CheckResult check;
  check.name = "group-exponentials";
  MatrixPlan plan = make_plan(id, sig);
  if (plan.trivial) {
    check.passed = true;
    return check;
  }
  if (!plan_flags_ok(plan, &check.witness)) return check;

  std::vector<Multivector> original_basis = subspace_basis(id, sig);
  auto rng = seeded_stream(seed, id, sig);
  double worst = 0.0;
  int worst_sample = -1;
  for (int s = 0; s < samples; ++s) {
    ApproxMultivector u(sig);
    for (const auto& b : original_basis) {
      double c = (2.0 * random_unit(rng) - 1.0) * 0.3;
      ApproxMultivector term = std::complex<double>(c) * b.to_approx();
      u = u + term;
    }
    ApproxMultivector big_u = exp_series(u, 1e-14);
    double r1 = group_residual(id, big_u);

    ApproxMultivector working_u = plan.reduced
                                      ? reduce_even_element_approx(big_u, plan.via_swap)
                                      : big_u;
    ComplexMatrix g = rep_apply_approx(plan.rep, working_u);
    if (plan.form != FormKind::GLParam)
      g = conj_transpose(plan.transform) * g * plan.transform;
    double r2 = group_form_residual(plan, g);
    double r = std::max(r1, r2);
    if (r > worst) {
      worst = r;
      worst_sample = s;
    }
  }
  check.residual = worst;
  if (worst >= tol) {
    check.witness = "sample " + std::to_string(worst_sample);
    return check;
  }
  check.passed = true;
  return check;
}

VerificationReport verify_signature(int id, Signature sig, const VerifyOptions& opt) {
  VerificationReport report;
  report.id = id;
  report.p = sig.p();
  report.q = sig.q();
  report.seed = opt.seed;
  report.tol_structural = opt.tol_structural;
  report.tol_exponential = opt.tol_exponential;

  if (sig.n() <= 9) {
    ClosureReport closure = closure_check(id, sig);
    CheckResult c;
    c.name = "closure";
    c.passed = closure.passed;
    if (!closure.passed && !closure.violations.empty())
      c.witness = "[" + describe_mask(closure.violations.front().first) + ", " +
                  describe_mask(closure.violations.front().second) + "]";
    report.checks.push_back(std::move(c));
  }
  if (sig.n() <= 12) report.checks.push_back(verify_dimensions(id, sig));
  if (id >= 1 && id <= 11 && sig.n() <= 8)
    report.checks.push_back(verify_rank(id, sig, opt.tol_structural));
  if (id >= 6 && id <= 11 && sig.n() <= 8)
    report.checks.push_back(verify_matrix_conditions(id, sig, opt.tol_structural));
  if (id >= 6 && id <= 11 && sig.n() <= 5)
    report.checks.push_back(
        verify_group_exponentials(id, sig, opt.samples, opt.seed, opt.tol_exponential));
  return report;
}

std::vector<VerificationReport> sweep(int max_n, const std::vector<int>& ids,
                                      const VerifyOptions& opt) {
  if (max_n < 1 || max_n > 12) throw std::invalid_argument("sweep: max_n must be 1..12");
  std::vector<VerificationReport> reports;
  for (int n = 1; n <= max_n; ++n) {
    for (int p = n; p >= 0; --p) {
      Signature sig(p, n - p);
      for (int id : ids) reports.push_back(verify_signature(id, sig, opt));
    }
  }
  return reports;
}

}  // namespace quatlie
