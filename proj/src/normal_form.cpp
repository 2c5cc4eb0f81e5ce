#include "quatlie/normal_form.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace quatlie {

namespace {

constexpr double kResidualBound = 1e-10;
constexpr double kNullThreshold = 1e-8;

using Column = std::vector<std::complex<double>>;

Column apply_matrix(const ComplexMatrix& m, const Column& v) {
  Column r(m.size(), 0.0);
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

std::complex<double> inner(const Column& a, const Column& b) {
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double column_norm(const Column& v) { return std::sqrt(std::abs(inner(v, v))); }

/// Modified Gram-Schmidt with one re-orthogonalization pass; returns the
/// normalized residual or nothing when it falls below the null threshold.
std::optional<Column> orthonormal_residual(Column v, const std::vector<Column>& basis) {
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis) {
      std::complex<double> c = inner(b, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
    }
  double norm = column_norm(v);
  if (norm < kNullThreshold) return std::nullopt;
  for (auto& x : v) x /= norm;
  return v;
}

ComplexMatrix columns_to_matrix(const std::vector<Column>& cols) {
  ComplexMatrix t(static_cast<int>(cols.size()));
  for (int j = 0; j < t.size(); ++j)
    for (int i = 0; i < t.size(); ++i) t.at(i, j) = cols[j][i];
  return t;
}

void check_transform(const ComplexMatrix& t, const ComplexMatrix& m,
                     const ComplexMatrix& target) {
  ComplexMatrix tt = conj_transpose(t);
  if (max_abs(tt * t - ComplexMatrix::identity(t.size())) > kResidualBound)
    throw std::runtime_error("involution_normal_form: transform not unitary");
  if (max_abs(tt * m * t - target) > kResidualBound)
    throw std::runtime_error("involution_normal_form: residual above bound");
}

}  // namespace

ComplexMatrix balanced_j(int size) {
  if (size % 2 != 0) throw std::invalid_argument("balanced_j: size must be even");
  ComplexMatrix j(size);
  for (int i = 0; i < size; ++i) j.at(i, i) = i < size / 2 ? 1.0 : -1.0;
  return j;
}

ComplexMatrix omega_form(int size) {
  if (size % 2 != 0) throw std::invalid_argument("omega_form: size must be even");
  ComplexMatrix w(size);
  const int h = size / 2;
  for (int i = 0; i < h; ++i) {
    w.at(i, h + i) = -1.0;
    w.at(h + i, i) = 1.0;
  }
  return w;
}

ComplexMatrix involution_normal_form_j(const ComplexMatrix& m) {
  const int n = m.size();
  if (n % 2 != 0) throw std::invalid_argument("involution_normal_form_j: odd size");
  if (max_abs(m * m - ComplexMatrix::identity(n)) > kResidualBound ||
      max_abs(m - conj_transpose(m)) > kResidualBound || std::abs(trace(m)) > kResidualBound)
    throw std::domain_error("involution_normal_form_j: precondition violated");

  ComplexMatrix id = ComplexMatrix::identity(n);
  std::vector<Column> cols;
  for (int sign = 0; sign < 2; ++sign) {
    std::vector<Column> eigen;
    for (int j = 0; j < n && static_cast<int>(eigen.size()) < n / 2; ++j) {
      Column v(n);
      for (int i = 0; i < n; ++i) {
        std::complex<double> proj = 0.5 * (sign == 0 ? (id.at(i, j) + m.at(i, j))
                                                     : (id.at(i, j) - m.at(i, j)));
        v[i] = proj;
      }
      std::vector<Column> against = cols;
      against.insert(against.end(), eigen.begin(), eigen.end());
      if (auto u = orthonormal_residual(std::move(v), against)) eigen.push_back(*u);
    }
    if (static_cast<int>(eigen.size()) != n / 2)
      throw std::runtime_error("involution_normal_form_j: projector rank deficiency");
    cols.insert(cols.end(), eigen.begin(), eigen.end());
  }
  ComplexMatrix t = columns_to_matrix(cols);
  check_transform(t, m, balanced_j(n));
  return t;
}

ComplexMatrix involution_normal_form_omega(const ComplexMatrix& m) {
  const int n = m.size();
  if (n % 2 != 0) throw std::invalid_argument("involution_normal_form_omega: odd size");
  double realness = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) realness = std::max(realness, std::abs(m.at(i, j).imag()));
  if (realness > kResidualBound ||
      max_abs(m * m + ComplexMatrix::identity(n)) > kResidualBound ||
      max_abs(m + transpose(m)) > kResidualBound)
    throw std::domain_error("involution_normal_form_omega: precondition violated");

  std::vector<Column> vs, ws;
  for (int j = 0; j < n && static_cast<int>(vs.size()) < n / 2; ++j) {
    Column candidate(n, 0.0);
    candidate[j] = 1.0;
    std::vector<Column> against = vs;
    against.insert(against.end(), ws.begin(), ws.end());
    auto v = orthonormal_residual(std::move(candidate), against);
    if (!v) continue;
    Column w = apply_matrix(m, *v);
    against.push_back(*v);
    auto wn = orthonormal_residual(std::move(w), against);
    if (!wn || column_norm(apply_matrix(m, *v)) < 0.5)
      throw std::runtime_error("involution_normal_form_omega: rank deficiency during pairing");
    vs.push_back(*v);
    ws.push_back(*wn);
  }
  if (static_cast<int>(vs.size()) != n / 2)
    throw std::runtime_error("involution_normal_form_omega: rank deficiency during pairing");

  std::vector<Column> cols = vs;
  cols.insert(cols.end(), ws.begin(), ws.end());
  ComplexMatrix t = columns_to_matrix(cols);
  check_transform(t, m, omega_form(n));
  return t;
}

namespace {

ExactMatrix exact_square(const ExactMatrix& m) { return m * m; }

struct ExactConjugatorChecks {
  ExactMatrix working;  // normalized blade image (block when blockwise)
  bool square_plus_one = false;
};

ExactConjugatorChecks normalized_working_matrix(const Representation& rep, BladeMask mask,
                                                const ExactComplex& unit, bool blockwise) {
  ExactMatrix image = blade_image(rep, mask);
  ExactMatrix m = (ExactComplex::one() / unit) * image;
  if (blockwise) {
    const int h = m.size() / 2;
    if (!is_block_diagonal(m) || block(m, 0, 0, h) != block(m, h, h, h))
      throw std::domain_error("normalize_blade_conjugator: conjugator not diag(D, D)");
    m = block(m, 0, 0, h);
  }
  ExactConjugatorChecks checks{m, false};
  ExactMatrix sq = exact_square(m);
  if (equals_scaled_identity(sq, ExactComplex::one()))
    checks.square_plus_one = true;
  else if (!equals_scaled_identity(sq, -ExactComplex::one()))
    throw std::domain_error("normalize_blade_conjugator: square is not +-identity");
  return checks;
}

}  // namespace

ConjugatorNormalForm normalize_blade_conjugator(const Representation& rep, BladeMask mask,
                                                const ExactComplex& unit, bool orthogonal_mode,
                                                bool blockwise) {
  ConjugatorNormalForm result;
  const int size = rep.matrix_size();
  if (mask == 0) {
    result.transform = ComplexMatrix::identity(size);
    result.form = ComplexMatrix::identity(size);
    return result;
  }

  auto checks = normalized_working_matrix(rep, mask, unit, blockwise);
  const ExactMatrix& w = checks.working;

  ComplexMatrix t_small;
  ComplexMatrix form_small;
  if (orthogonal_mode) {
    if (!is_real(w))
      throw std::domain_error("normalize_blade_conjugator: expected a real matrix");
    if (checks.square_plus_one) {
      if (!is_symmetric(w) || !trace(w).is_zero())
        throw std::domain_error("normalize_blade_conjugator: J case needs symmetric, trace 0");
      t_small = involution_normal_form_j(to_complex(w));
      form_small = balanced_j(w.size());
    } else {
      if (!is_skew_symmetric(w))
        throw std::domain_error("normalize_blade_conjugator: Omega case needs skew");
      t_small = involution_normal_form_omega(to_complex(w));
      form_small = omega_form(w.size());
      result.omega = true;
    }
  } else {
    if (!checks.square_plus_one || !is_hermitian(w) || !trace(w).is_zero())
      throw std::domain_error(
          "normalize_blade_conjugator: unitary case needs Hermitian, square I, trace 0");
    t_small = involution_normal_form_j(to_complex(w));
    form_small = balanced_j(w.size());
  }

  result.blockwise = blockwise;
  if (blockwise) {
    result.transform = block_diag_pair(t_small);
    result.form = block_diag_pair(form_small);
  } else {
    result.transform = t_small;
    result.form = form_small;
  }
  return result;
}

NormalFormedRep normal_form_rep(const Representation& rep, NormalFormKind kind) {
  const Signature& sig = rep.sig;
  const int n = sig.n();
  const int p = sig.p();
  const int q = sig.q();

  auto range_mask = [](int first, int last) {
    BladeMask m = 0;
    for (int a = first; a <= last; ++a) m |= BladeMask(1) << (a - 1);
    return m;
  };

  BladeMask mask = 0;
  ExactComplex unit = ExactComplex::one();
  bool blockwise = false;
  bool orthogonal = false;

  switch (kind) {
    case NormalFormKind::JFromP:
      if (n % 2 != 0 || p == 0)
        throw std::invalid_argument("normal_form_rep: J-from-p needs even n, p != 0");
      mask = range_mask(1, p);
      unit = alpha_factor(p);
      break;
    case NormalFormKind::JFromQ:
      if (n % 2 != 0 || q == 0)
        throw std::invalid_argument("normal_form_rep: J-from-q needs even n, q != 0");
      mask = range_mask(p + 1, n);
      unit = sigma_factor(q);
      break;
    case NormalFormKind::BlockJFromP:
      if (n % 2 != 1 || p == 0 || p % 2 != 0)
        throw std::invalid_argument("normal_form_rep: block J-from-p needs odd n, even p != 0");
      mask = range_mask(1, p);
      unit = alpha_factor(p);
      blockwise = true;
      break;
    case NormalFormKind::BlockJFromQ:
      if (n % 2 != 1 || q == 0 || q % 2 != 0)
        throw std::invalid_argument("normal_form_rep: block J-from-q needs odd n, even q != 0");
      mask = range_mask(p + 1, n);
      unit = sigma_factor(q);
      blockwise = true;
      break;
    case NormalFormKind::OrthJ:
    case NormalFormKind::OrthOmega: {
      AdditionalSignature as = additional_signature(rep);
      blockwise = (n % 2 == 1);
      const bool want_plus = kind == NormalFormKind::OrthJ;
      struct Candidate {
        BladeMask mask;
        ExactComplex unit;
        int count;
      };
      auto mask_of = [](const std::vector<int>& v) {
        BladeMask m = 0;
        for (int a : v) m |= BladeMask(1) << (a - 1);
        return m;
      };
      ExactComplex b_unit = (as.kq % 2) ? ExactComplex::i() : ExactComplex::one();
      ExactComplex c_unit = (as.lp % 2) ? ExactComplex::i() : ExactComplex::one();
      Candidate candidates[2] = {{mask_of(as.b_indices), b_unit, as.k},
                                 {mask_of(as.c_indices), c_unit, as.l}};
      bool found = false;
      for (const auto& cand : candidates) {
        if (cand.mask == 0) continue;
        if (blockwise && cand.count % 2 != 0) continue;
        // Sign of the normalized square decides J vs Omega.
        ExactComplex sq = ExactComplex(blade_square_sign(cand.mask, sig)) /
                          (cand.unit * cand.unit);
        bool plus = sq == ExactComplex::one();
        if (plus != want_plus) continue;
        mask = cand.mask;
        unit = cand.unit;
        orthogonal = true;
        found = true;
        break;
      }
      if (!found)
        throw std::invalid_argument("normal_form_rep: no real conjugator with the required square");
      break;
    }
  }

  ConjugatorNormalForm cnf = normalize_blade_conjugator(rep, mask, unit, orthogonal, blockwise);

  NormalFormedRep out(sig);
  out.kind = kind;
  out.transform = cnf.transform;
  out.conjugator_mask = mask;
  out.unit = {unit.re.to_double(), unit.im.to_double()};
  out.target = out.unit * cnf.form;

  ComplexMatrix t = cnf.transform;
  ComplexMatrix tt = conj_transpose(t);
  out.gens.reserve(rep.gens.size());
  for (const auto& g : rep.gens) out.gens.push_back(tt * to_complex(g) * t);

  // Contractual residuals: the conjugator image must hit the target, the
  // Hermiticity pattern must survive, and an orthogonal transform must keep
  // every generator in its symmetric or skew class.
  ComplexMatrix achieved = tt * to_complex(blade_image(rep, mask)) * t;
  if (max_abs(achieved - out.target) > kResidualBound)
    throw std::runtime_error("normal_form_rep: conjugator image missed the target form");
  for (std::size_t a = 0; a < out.gens.size(); ++a) {
    ComplexMatrix expected = std::complex<double>(sig.eta(static_cast<int>(a) + 1), 0.0) *
                             out.gens[a];
    if (max_abs(conj_transpose(out.gens[a]) - expected) > kResidualBound)
      throw std::runtime_error("normal_form_rep: Hermiticity pattern lost");
    if (orthogonal) {
      int sign = is_symmetric(rep.gens[a]) ? 1 : -1;
      ComplexMatrix mirrored = std::complex<double>(sign, 0.0) * out.gens[a];
      if (max_abs(transpose(out.gens[a]) - mirrored) > kResidualBound)
        throw std::runtime_error("normal_form_rep: symmetry class lost");
    }
  }
  return out;
}

}  // namespace quatlie
