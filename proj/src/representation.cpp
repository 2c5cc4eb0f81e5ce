#include "quatlie/representation.hpp"

#include <cmath>
#include <stdexcept>

namespace quatlie {

ExactComplex alpha_factor(int p) {
  int r = ((p % 4) + 4) % 4;
  return (r == 0 || r == 1) ? ExactComplex::one() : ExactComplex::i();
}

ExactComplex sigma_factor(int q) {
  int r = ((q % 4) + 4) % 4;
  return (r == 0 || r == 3) ? ExactComplex::one() : ExactComplex::i();
}

namespace {

ExactComplex i_unit_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return ExactComplex::one();
    case 1: return ExactComplex::i();
    case 2: return -ExactComplex::one();
    default: return -ExactComplex::i();
  }
}

ExactMatrix base_diag() {
  ExactMatrix m(2);
  m.at(0, 0) = ExactComplex(1);
  m.at(1, 1) = ExactComplex(-1);
  return m;
}

ExactMatrix base_swap() {
  ExactMatrix m(2);
  m.at(0, 1) = ExactComplex(1);
  m.at(1, 0) = ExactComplex(1);
  return m;
}

ExactMatrix sign_block_pair(const ExactMatrix& b) {
  const int h = b.size();
  ExactMatrix m(2 * h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      m.at(i, j) = b.at(i, j);
      m.at(h + i, h + j) = -b.at(i, j);
    }
  return m;
}

ExactMatrix anti_diag_identity(int half) {
  ExactMatrix m(2 * half);
  for (int i = 0; i < half; ++i) {
    m.at(i, half + i) = ExactComplex(1);
    m.at(half + i, i) = ExactComplex(1);
  }
  return m;
}

}  // namespace

Representation build_beta(Signature sig) {
  const int n = sig.n();
  std::vector<ExactMatrix> gens;
  gens.push_back(base_diag());
  if (n >= 2) gens.push_back(base_swap());

  int built = std::min(n, 2);
  while (built < n) {
    // built is even here; extend to built+1 by doubling.
    int k = built / 2;
    ExactMatrix product = gens[0];
    for (int a = 1; a < built; ++a) product = product * gens[a];
    for (auto& g : gens) g = sign_block_pair(g);
    gens.push_back(sign_block_pair(i_unit_power(k) * product));
    ++built;
    if (built < n) {
      gens.push_back(anti_diag_identity(gens.front().size() / 2));
      ++built;
    }
  }

  for (int a = sig.p() + 1; a <= n; ++a)
    gens[a - 1] = ExactComplex::i() * gens[a - 1];

  return Representation{sig, std::move(gens)};
}

ExactMatrix blade_image(const Representation& rep, BladeMask m) {
  if (m >> rep.sig.n()) throw std::invalid_argument("blade_image: blade out of range");
  ExactMatrix result = ExactMatrix::identity(rep.matrix_size());
  while (m != 0) {
    int a = std::countr_zero(m);
    result = result * rep.gens[a];
    m &= m - 1;
  }
  return result;
}

std::vector<ExactMatrix> all_blade_images(const Representation& rep) {
  const BladeMask count = BladeMask(1) << rep.sig.n();
  std::vector<ExactMatrix> images;
  images.reserve(count);
  images.push_back(ExactMatrix::identity(rep.matrix_size()));
  for (BladeMask m = 1; m < count; ++m) {
    int a = std::countr_zero(m);
    images.push_back(rep.gens[a] * images[m & (m - 1)]);
  }
  return images;
}

ExactMatrix rep_apply(const Representation& rep, const Multivector& u) {
  if (u.sig() != rep.sig) throw std::invalid_argument("rep_apply: signature mismatch");
  ExactMatrix result(rep.matrix_size());
  for (const auto& [m, c] : u.terms()) result = result + c * blade_image(rep, m);
  return result;
}

ComplexMatrix rep_apply_approx(const Representation& rep, const ApproxMultivector& u) {
  if (u.sig() != rep.sig) throw std::invalid_argument("rep_apply_approx: signature mismatch");
  ComplexMatrix result(rep.matrix_size());
  for (const auto& [m, c] : u.terms()) {
    ComplexMatrix img = to_complex(blade_image(rep, m));
    result = result + c * img;
  }
  return result;
}

ComplexMatrix rep_apply(const std::vector<ComplexMatrix>& gens, int matrix_size,
                        const ApproxMultivector& u) {
  ComplexMatrix result(matrix_size);
  for (const auto& [m, c] : u.terms()) {
    ComplexMatrix img = ComplexMatrix::identity(matrix_size);
    BladeMask rest = m;
    while (rest != 0) {
      int a = std::countr_zero(rest);
      img = img * gens[a];
      rest &= rest - 1;
    }
    result = result + c * img;
  }
  return result;
}

namespace {

ExactComplex frobenius_inner(const ExactMatrix& a, const ExactMatrix& b) {
  ExactComplex sum;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      const ExactComplex& x = a.at(i, j);
      if (x.is_zero()) continue;
      const ExactComplex& y = b.at(i, j);
      if (y.is_zero()) continue;
      sum += x.conj() * y;
    }
  return sum;
}

}  // namespace

RepresentationReport verify_representation(const Representation& rep) {
  RepresentationReport report;
  const int n = rep.sig.n();
  const int size = rep.matrix_size();

  report.anticommutation = true;
  for (int a = 0; a < n && report.anticommutation; ++a) {
    for (int b = 0; b < n; ++b) {
      ExactMatrix lhs = rep.gens[a] * rep.gens[b] + rep.gens[b] * rep.gens[a];
      ExactComplex expected =
          a == b ? ExactComplex(2 * rep.sig.eta(a + 1)) : ExactComplex();
      if (!equals_scaled_identity(lhs, expected)) {
        report.anticommutation = false;
        break;
      }
    }
  }

  report.hermiticity = true;
  for (int a = 0; a < n; ++a) {
    ExactMatrix expected = ExactComplex(rep.sig.eta(a + 1)) * rep.gens[a];
    if (conj_transpose(rep.gens[a]) != expected) {
      report.hermiticity = false;
      break;
    }
  }

  if (rep.odd_blocks()) {
    report.odd_block_structure = true;
    const int h = size / 2;
    for (const auto& g : rep.gens) {
      if (!is_block_diagonal(g)) {
        report.odd_block_structure = false;
        break;
      }
      if (block(g, h, h, h) != -block(g, 0, 0, h)) {
        report.odd_block_structure = false;
        break;
      }
    }
  }

  // Faithfulness: the blade images are pairwise Frobenius-orthogonal with
  // norm sqrt(size); orthogonal nonzero vectors are independent, so the span
  // has complex rank 2^n. For n <= 8 every pair is checked; above that the
  // equivalent trace test on single blades keeps the cost linear.
  auto images = all_blade_images(rep);
  report.faithful = true;
  if (n <= 8) {
    for (std::size_t a = 0; a < images.size() && report.faithful; ++a) {
      for (std::size_t b = a; b < images.size(); ++b) {
        ExactComplex g = frobenius_inner(images[a], images[b]);
        ExactComplex expected = a == b ? ExactComplex(size) : ExactComplex();
        if (g != expected) {
          report.faithful = false;
          break;
        }
      }
    }
  } else {
    for (std::size_t m = 1; m < images.size(); ++m) {
      if (!trace(images[m]).is_zero()) {
        report.faithful = false;
        break;
      }
    }
  }
  report.rank = report.faithful ? (std::int64_t(1) << n) : -1;
  return report;
}

bool additional_signature_allowed(int n, int k_mod4, int l_mod4) {
  static constexpr int kAllowed[8][2][2] = {
      {{0, 0}, {1, 3}}, {{1, 0}, {1, 0}}, {{1, 1}, {2, 0}}, {{2, 1}, {2, 1}},
      {{3, 1}, {2, 2}}, {{3, 2}, {3, 2}}, {{3, 3}, {0, 2}}, {{0, 3}, {0, 3}},
  };
  const auto& row = kAllowed[((n % 8) + 8) % 8];
  return (row[0][0] == k_mod4 && row[0][1] == l_mod4) ||
         (row[1][0] == k_mod4 && row[1][1] == l_mod4);
}

AdditionalSignature additional_signature(const Representation& rep) {
  AdditionalSignature as;
  const int n = rep.sig.n();
  const int p = rep.sig.p();
  for (int a = 1; a <= n; ++a) {
    const ExactMatrix& g = rep.gens[a - 1];
    if (is_symmetric(g)) {
      as.b_indices.push_back(a);
      ++as.k;
      (a <= p ? as.kp : as.kq) += 1;
    } else if (is_skew_symmetric(g)) {
      as.c_indices.push_back(a);
      ++as.l;
      (a <= p ? as.lp : as.lq) += 1;
    } else {
      throw std::domain_error("additional_signature: generator neither symmetric nor skew");
    }
  }
  as.table_ok = additional_signature_allowed(n, as.k % 4, as.l % 4);
  return as;
}

namespace {

BladeMask mask_from_indices(const std::vector<int>& indices) {
  BladeMask m = 0;
  for (int a : indices) m |= BladeMask(1) << (a - 1);
  return m;
}

BladeMask range_mask(int first, int last) {  // 1-based inclusive; empty if first > last
  BladeMask m = 0;
  for (int a = first; a <= last; ++a) m |= BladeMask(1) << (a - 1);
  return m;
}

/// (e_X)^{-1} V e_X as a multivector map.
Multivector conjugate_by_blade(const Multivector& v, BladeMask x, const Signature& sig) {
  Multivector bl = Multivector::blade(sig, x);
  Multivector inv = ExactComplex(blade_square_sign(x, sig)) * bl;
  return inv * v * bl;
}

}  // namespace

PullbackReport pullback_identity_check(const Representation& rep) {
  PullbackReport report;
  const Signature& sig = rep.sig;
  const int n = sig.n();
  AdditionalSignature as = additional_signature(rep);
  auto images = all_blade_images(rep);

  BladeMask b_mask = mask_from_indices(as.b_indices);
  BladeMask c_mask = mask_from_indices(as.c_indices);
  BladeMask p_mask = range_mask(1, sig.p());
  BladeMask q_mask = range_mask(sig.p() + 1, n);

  const bool b_hat = (as.k % 2) == 0;
  const bool c_hat = (as.l % 2) == 1;
  const bool p_hat = (sig.p() % 2) == 0;
  const bool q_hat = (sig.q() % 2) == 1;

  auto transpose_relation_holds = [&](BladeMask conj_mask, bool hat) {
    for (BladeMask m = 0; m < (BladeMask(1) << n); ++m) {
      Multivector u = Multivector::blade(sig, m);
      Multivector v = hat ? reversion(grade_involution(u)) : reversion(u);
      Multivector rhs = conjugate_by_blade(v, conj_mask, sig);
      if (transpose(images[m]) != rep_apply(rep, rhs)) return false;
    }
    return true;
  };

  auto dagger_relation_holds = [&](BladeMask conj_mask, bool hat) {
    for (BladeMask m = 0; m < (BladeMask(1) << n); ++m) {
      Multivector u = Multivector::blade(sig, m);
      Multivector v = hat ? pseudo_hermitian(grade_involution(u)) : pseudo_hermitian(u);
      if (hermitian_conjugation(u) != conjugate_by_blade(v, conj_mask, sig)) return false;
    }
    return true;
  };

  report.b_relation = transpose_relation_holds(b_mask, b_hat);
  report.c_relation = transpose_relation_holds(c_mask, c_hat);
  report.p_relation = dagger_relation_holds(p_mask, p_hat);
  report.q_relation = dagger_relation_holds(q_mask, q_hat);

  report.dagger_bridge = true;
  for (BladeMask m = 0; m < (BladeMask(1) << n); ++m) {
    Multivector u = Multivector::blade(sig, m);
    if (rep_apply(rep, hermitian_conjugation(u)) != conj_transpose(images[m])) {
      report.dagger_bridge = false;
      break;
    }
  }
  return report;
}

}  // namespace quatlie
