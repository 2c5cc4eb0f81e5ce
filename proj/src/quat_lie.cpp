#include "quatlie/quat_lie.hpp"

#include <cmath>
#include <stdexcept>

#include "quatlie/representation.hpp"

namespace quatlie {

SubspaceSpec SubspaceSpec::of(const std::string& real_types, const std::string& imag_types) {
  SubspaceSpec spec;
  for (char c : real_types) {
    if (c < '0' || c > '3') throw std::invalid_argument("SubspaceSpec: bad type digit");
    spec.allowed[c - '0'][0] = true;
  }
  for (char c : imag_types) {
    if (c < '0' || c > '3') throw std::invalid_argument("SubspaceSpec: bad type digit");
    spec.allowed[c - '0'][1] = true;
  }
  return spec;
}

SubspaceSpec SubspaceSpec::parse(const std::string& name) {
  auto pos = name.find('i');
  if (pos == std::string::npos) return of(name, "");
  return of(name.substr(0, pos), name.substr(pos + 1));
}

std::string SubspaceSpec::name() const {
  std::string real, imag;
  for (int s = 0; s < 4; ++s) {
    if (allowed[s][0]) real += char('0' + s);
    if (allowed[s][1]) imag += char('0' + s);
  }
  if (imag.empty()) return real;
  return real + "i" + imag;
}

namespace {

struct Catalog {
  std::array<AlgebraCatalogRow, 16> rows;

  Catalog() {
    auto row = [&](int id, const char* name, const char* group, const char* areal,
                   const char* aimag, ConditionKind kind, const char* creal,
                   const char* cimag) {
      rows[id - 1] = AlgebraCatalogRow{
          id, name, group, SubspaceSpec::of(areal, aimag),
          GroupCondition{kind, SubspaceSpec::of(creal, cimag)}};
    };
    // Carrier of rows 4 and 8 is the complexified even subalgebra; the group
    // names and the Lie algebra columns force that reading.
    row(1, "0123i0123", "(CxCl)^x", "0123", "0123", ConditionKind::Invertible, "0123", "0123");
    row(2, "0123", "Cl^x", "0123", "", ConditionKind::Invertible, "0123", "");
    row(3, "02", "Cl0^x", "02", "", ConditionKind::Invertible, "02", "");
    row(4, "02i02", "(CxCl0)^x", "02", "02", ConditionKind::Invertible, "02", "02");
    row(5, "02i13", "(Cl0+iCl1)^x", "02", "13", ConditionKind::Invertible, "02", "13");
    row(6, "23i01", "G{23i01}", "23", "01", ConditionKind::PseudoHermitian, "0123", "0123");
    row(7, "12i03", "G{12i03}", "12", "03", ConditionKind::GradedPseudoHermitian, "0123",
        "0123");
    row(8, "2i0", "G{2i0}", "2", "0", ConditionKind::PseudoHermitian, "02", "02");
    row(9, "23i23", "G{23i23}", "23", "23", ConditionKind::Reversion, "0123", "0123");
    row(10, "12i12", "G{12i12}", "12", "12", ConditionKind::GradedReversion, "0123", "0123");
    row(11, "2i2", "G{2i2}", "2", "2", ConditionKind::Reversion, "02", "02");
    row(12, "2i1", "G{2i1}", "2", "1", ConditionKind::PseudoHermitian, "02", "13");
    row(13, "2i3", "G{2i3}", "2", "3", ConditionKind::GradedPseudoHermitian, "02", "13");
    row(14, "23", "G{23}", "23", "", ConditionKind::Reversion, "0123", "");
    row(15, "12", "G{12}", "12", "", ConditionKind::GradedReversion, "0123", "");
    row(16, "2", "G{2}", "2", "", ConditionKind::Reversion, "02", "");
  }
};

const Catalog& catalog() {
  static const Catalog c;
  return c;
}

}  // namespace

const AlgebraCatalogRow& catalog_row(int id) {
  if (id < 1 || id > 16) throw std::out_of_range("catalog_row: id must be 1..16");
  return catalog().rows[id - 1];
}

int catalog_id_from_name(const std::string& name) {
  for (const auto& r : catalog().rows)
    if (name == r.name) return r.id;
  return 0;
}

double closed_form_dim(int id, int n) {
  const double pi = 3.14159265358979323846;
  double h = std::pow(2.0, n);
  switch (id) {
    case 1: return 2.0 * h;
    case 2: return h;
    case 3: return h / 2.0;
    case 4: return h;
    case 5: return h;
    case 6: return h;
    case 7: return h;
    case 8: return h / 2.0;
    case 9: return h - std::pow(2.0, (n + 1) / 2.0) * std::sin(pi * (n + 1) / 4.0);
    case 10: return h - std::pow(2.0, (n + 1) / 2.0) * std::cos(pi * (n + 1) / 4.0);
    case 11: return h / 2.0 - std::pow(2.0, n / 2.0) * std::cos(pi * n / 4.0);
    case 12: return h / 2.0 - std::pow(2.0, (n - 1) / 2.0) * std::cos(pi * (n + 1) / 4.0);
    case 13: return h / 2.0 - std::pow(2.0, (n - 1) / 2.0) * std::sin(pi * (n + 1) / 4.0);
    case 14: return h / 2.0 - std::pow(2.0, (n - 1) / 2.0) * std::sin(pi * (n + 1) / 4.0);
    case 15: return h / 2.0 - std::pow(2.0, (n - 1) / 2.0) * std::cos(pi * (n + 1) / 4.0);
    case 16: return h / 4.0 - std::pow(2.0, (n - 2) / 2.0) * std::cos(pi * n / 4.0);
    default: throw std::out_of_range("closed_form_dim: id must be 1..16");
  }
}

Multivector quat_projection(const Multivector& u, int s) {
  Multivector r(u.sig());
  for (const auto& [m, c] : u.terms())
    if (blade_quat_type(m) == (s & 3)) r.set(m, c);
  return r;
}

ApproxMultivector quat_projection(const ApproxMultivector& u, int s) {
  ApproxMultivector r(u.sig(), u.tol());
  for (const auto& [m, c] : u.terms())
    if (blade_quat_type(m) == (s & 3)) r.set(m, c);
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::array<std::int64_t, 4> quat_type_dims(int n) {
  if (n < 1 || n > 14) throw std::out_of_range("quat_type_dims: n must be 1..14");
  std::array<std::int64_t, 4> d{};
  for (int k = 0; k <= n; ++k) d[k & 3] += binomial(n, k);
  return d;
}

std::array<double, 4> quat_type_dims_closed(int n) {
  const double pi = 3.14159265358979323846;
  double base = std::pow(2.0, n - 2);
  double osc = std::pow(2.0, (n - 2) / 2.0);
  double c = std::cos(pi * n / 4.0);
  double s = std::sin(pi * n / 4.0);
  return {base + osc * c, base + osc * s, base - osc * c, base - osc * s};
}

std::int64_t subspace_dim(const SubspaceSpec& spec, int n) {
  auto d = quat_type_dims(n);
  std::int64_t total = 0;
  for (int s = 0; s < 4; ++s)
    for (int phase = 0; phase < 2; ++phase)
      if (spec.allowed[s][phase]) total += d[s];
  return total;
}

std::int64_t lie_algebra_dim(int id, int n) {
  if (n < 1 || n > 14) throw std::out_of_range("lie_algebra_dim: n must be 1..14");
  return subspace_dim(catalog_row(id).algebra, n);
}

std::vector<Multivector> subspace_basis(const SubspaceSpec& spec, Signature sig) {
  std::vector<Multivector> basis;
  const BladeMask count = BladeMask(1) << sig.n();
  for (int phase = 0; phase < 2; ++phase) {
    ExactComplex unit = phase == 0 ? ExactComplex::one() : ExactComplex::i();
    for (BladeMask m = 0; m < count; ++m)
      if (spec.allowed[blade_quat_type(m)][phase])
        basis.push_back(Multivector::blade(sig, m, unit));
  }
  return basis;
}

std::vector<Multivector> subspace_basis(int id, Signature sig) {
  return subspace_basis(catalog_row(id).algebra, sig);
}

bool contains(const SubspaceSpec& spec, const Multivector& u) {
  for (const auto& [m, c] : u.terms()) {
    int s = blade_quat_type(m);
    if (!spec.allowed[s][0] && !c.re.is_zero()) return false;
    if (!spec.allowed[s][1] && !c.im.is_zero()) return false;
  }
  return true;
}

bool contains(int id, const Multivector& u) { return contains(catalog_row(id).algebra, u); }

bool contains_approx(const SubspaceSpec& spec, const ApproxMultivector& u, double tol) {
  for (const auto& [m, c] : u.terms()) {
    int s = blade_quat_type(m);
    if (!spec.allowed[s][0] && std::abs(c.real()) >= tol) return false;
    if (!spec.allowed[s][1] && std::abs(c.imag()) >= tol) return false;
  }
  return true;
}

ClosureReport closure_check(const SubspaceSpec& spec, Signature sig, int report_id) {
  if (sig.n() > 9) throw std::invalid_argument("closure_check: n must be <= 9");
  ClosureReport report;
  report.id = report_id;
  report.p = sig.p();
  report.q = sig.q();
  auto basis = subspace_basis(spec, sig);
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      if (!contains(spec, commutator(a, b))) {
        report.violations.emplace_back(a.terms().begin()->first, b.terms().begin()->first);
      }
    }
  }
  report.passed = report.violations.empty();
  return report;
}

ClosureReport closure_check(int id, Signature sig) {
  return closure_check(catalog_row(id).algebra, sig, id);
}

bool CommutationTableReport::passed() const {
  for (const auto& r : relations)
    if (!r.passed) return false;
  return true;
}

CommutationTableReport commutation_table_check(Signature sig) {
  if (sig.n() > 9) throw std::invalid_argument("commutation_table_check: n must be <= 9");
  static constexpr int kRelations[][3] = {
      {0, 0, 2}, {1, 1, 2}, {2, 2, 2}, {3, 3, 2}, {0, 2, 0},
      {1, 2, 1}, {3, 2, 3}, {0, 1, 3}, {0, 3, 1}, {1, 3, 0},
  };
  CommutationTableReport report;
  report.p = sig.p();
  report.q = sig.q();
  const BladeMask count = BladeMask(1) << sig.n();
  for (const auto& rel : kRelations) {
    CommutationRelation r;
    r.s = rel[0];
    r.t = rel[1];
    r.target = rel[2];
    for (BladeMask a = 0; a < count; ++a) {
      if (blade_quat_type(a) != r.s) continue;
      for (BladeMask b = 0; b < count; ++b) {
        if (blade_quat_type(b) != r.t) continue;
        Multivector c =
            commutator(Multivector::blade(sig, a), Multivector::blade(sig, b));
        for (const auto& [m, coeff] : c.terms()) {
          if (blade_quat_type(m) != r.target) {
            r.violations.emplace_back(a, b);
            break;
          }
        }
      }
    }
    r.passed = r.violations.empty();
    report.relations.push_back(std::move(r));
  }
  return report;
}

double group_residual(int id, const ApproxMultivector& u) {
  const auto& row = catalog_row(id);
  if (row.condition.kind == ConditionKind::Invertible) {
    Representation rep = build_beta(u.sig());
    auto image = rep_apply_approx(rep, u);
    return std::abs(det(image)) > 1e-12 ? 0.0 : 1.0;
  }
  ApproxMultivector lhs(u.sig(), u.tol());
  switch (row.condition.kind) {
    case ConditionKind::PseudoHermitian: lhs = pseudo_hermitian(u) * u; break;
    case ConditionKind::GradedPseudoHermitian:
      lhs = pseudo_hermitian(grade_involution(u)) * u;
      break;
    case ConditionKind::Reversion: lhs = reversion(u) * u; break;
    case ConditionKind::GradedReversion:
      lhs = reversion(grade_involution(u)) * u;
      break;
    default: break;
  }
  return (lhs - approx_identity(u.sig())).norm_inf();
}

double group_residual(int id, const Multivector& u) {
  const auto& row = catalog_row(id);
  if (row.condition.kind == ConditionKind::Invertible) {
    Representation rep = build_beta(u.sig());
    return det_exact(rep_apply(rep, u)).is_zero() ? 1.0 : 0.0;
  }
  Multivector lhs(u.sig());
  switch (row.condition.kind) {
    case ConditionKind::PseudoHermitian: lhs = pseudo_hermitian(u) * u; break;
    case ConditionKind::GradedPseudoHermitian:
      lhs = pseudo_hermitian(grade_involution(u)) * u;
      break;
    case ConditionKind::Reversion: lhs = reversion(u) * u; break;
    case ConditionKind::GradedReversion:
      lhs = reversion(grade_involution(u)) * u;
      break;
    default: break;
  }
  Multivector diff = lhs - identity(u.sig());
  double worst = 0.0;
  for (const auto& [m, c] : diff.terms())
    worst = std::max({worst, std::abs(c.re.to_double()), std::abs(c.im.to_double())});
  return worst;
}

bool SpinChecksReport::passed() const {
  return grade2_in_type2 && bracket_closed && stabilizes_vectors && dim_coincidence &&
         traces_zero && violations.empty();
}

SpinChecksReport spin_lie_checks(Signature sig) {
  const int n = sig.n();
  if (n > 8) throw std::invalid_argument("spin_lie_checks: n must be <= 8");
  SpinChecksReport report;
  report.p = sig.p();
  report.q = sig.q();

  std::vector<BladeMask> grade2, grade1;
  const BladeMask count = BladeMask(1) << n;
  for (BladeMask m = 0; m < count; ++m) {
    if (blade_grade(m) == 2) grade2.push_back(m);
    if (blade_grade(m) == 1) grade1.push_back(m);
  }

  report.grade2_in_type2 = true;
  for (BladeMask m : grade2)
    if (blade_quat_type(m) != 2) report.grade2_in_type2 = false;

  // Basis of the complex span of the grade-2 blades.
  std::vector<Multivector> spin_basis;
  for (BladeMask m : grade2) spin_basis.push_back(Multivector::blade(sig, m));
  for (BladeMask m : grade2)
    spin_basis.push_back(Multivector::blade(sig, m, ExactComplex::i()));

  auto support_has_only_grade = [](const Multivector& u, int grade) {
    for (const auto& [m, c] : u.terms())
      if (blade_grade(m) != grade) return false;
    return true;
  };

  report.bracket_closed = true;
  for (const auto& a : spin_basis) {
    for (const auto& b : spin_basis) {
      if (!support_has_only_grade(commutator(a, b), 2)) {
        report.bracket_closed = false;
        report.violations.emplace_back(a.terms().begin()->first, b.terms().begin()->first);
      }
    }
  }

  std::vector<Multivector> vector_basis;
  for (BladeMask m : grade1) vector_basis.push_back(Multivector::blade(sig, m));
  for (BladeMask m : grade1)
    vector_basis.push_back(Multivector::blade(sig, m, ExactComplex::i()));

  report.stabilizes_vectors = true;
  for (const auto& a : spin_basis) {
    for (const auto& b : vector_basis) {
      if (!support_has_only_grade(commutator(a, b), 1)) {
        report.stabilizes_vectors = false;
        report.violations.emplace_back(a.terms().begin()->first, b.terms().begin()->first);
      }
    }
  }

  report.spin_algebra_dim = std::int64_t(n) * (n - 1);
  report.type2_complex_dim = 2 * quat_type_dims(n)[2];
  report.dim_coincidence =
      (report.spin_algebra_dim == report.type2_complex_dim) == (n <= 5);

  if (n == 6) {
    Representation rep = build_beta(sig);
    double max_trace = 0.0;
    for (const auto& b : spin_basis) {
      auto image = to_complex(rep_apply(rep, b));
      max_trace = std::max(max_trace, std::abs(trace(image)));
    }
    report.max_trace = max_trace;
    report.traces_zero = max_trace < 1e-10;
  }
  return report;
}

}  // namespace quatlie
