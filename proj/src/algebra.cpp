#include "quatlie/algebra.hpp"

#include <cmath>

namespace quatlie {

Multivector identity(Signature sig) { return Multivector::scalar(sig, ExactComplex::one()); }

ApproxMultivector Multivector::to_approx() const {
  ApproxMultivector r(sig_);
  for (const auto& [m, c] : terms_)
    r.set(m, std::complex<double>(c.re.to_double(), c.im.to_double()));
  return r;
}

Multivector grade_projection(const Multivector& u, int k) {
  if (k < 0 || k > u.sig().n()) throw std::out_of_range("grade_projection: grade out of range");
  Multivector r(u.sig());
  for (const auto& [m, c] : u.terms())
    if (blade_grade(m) == k) r.set(m, c);
  return r;
}

namespace {

template <typename MV>
MV map_blade_sign(const MV& u, int (*sign_of_grade)(int)) {
  MV r(u.sig());
  for (const auto& [m, c] : u.terms()) {
    if (sign_of_grade(blade_grade(m)) < 0)
      r.set(m, -c);
    else
      r.set(m, c);
  }
  return r;
}

}  // namespace

Multivector grade_involution(const Multivector& u) {
  return map_blade_sign(u, grade_involution_sign);
}

Multivector reversion(const Multivector& u) { return map_blade_sign(u, reversion_sign); }

Multivector complex_conjugation(const Multivector& u) {
  Multivector r(u.sig());
  for (const auto& [m, c] : u.terms()) r.set(m, c.conj());
  return r;
}

Multivector pseudo_hermitian(const Multivector& u) {
  return reversion(complex_conjugation(u));
}

Multivector hermitian_conjugation(const Multivector& u) {
  Multivector r(u.sig());
  for (const auto& [m, c] : u.terms()) {
    ExactComplex v = c.conj();
    if (blade_square_sign(m, u.sig()) < 0) v = -v;
    r.set(m, v);
  }
  return r;
}

Multivector commutator(const Multivector& u, const Multivector& v) { return u * v - v * u; }

Multivector even_iso(const Multivector& u) {
  Signature target(u.sig().p(), u.sig().q() + 1);
  BladeMask top = BladeMask(1) << (target.n() - 1);
  Multivector r(target);
  for (const auto& [m, c] : u.terms()) {
    BladeMask out = (blade_grade(m) & 1) ? (m | top) : m;
    r.set(out, c);
  }
  return r;
}

Multivector even_iso_inverse(const Multivector& u) {
  const Signature& s = u.sig();
  if (s.q() < 1) throw std::invalid_argument("even_iso_inverse: target needs q >= 1");
  Signature source(s.p(), s.q() - 1);
  BladeMask top = BladeMask(1) << (s.n() - 1);
  Multivector r(source);
  for (const auto& [m, c] : u.terms()) {
    if (blade_grade(m) & 1)
      throw std::invalid_argument("even_iso_inverse: element not in the even subalgebra");
    r.set(m & ~top, c);
  }
  return r;
}

namespace {

ExactComplex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return ExactComplex::one();
    case 1: return ExactComplex::i();
    case 2: return -ExactComplex::one();
    default: return -ExactComplex::i();
  }
}

}  // namespace

namespace {

// Generators are stored positives-first on both sides, so the source
// positives (which square to -e after the i factor) must land on the target's
// negative slots: an order-preserving block swap of the index ranges. Sorting
// the permuted factors back to ascending order costs one transposition per
// (positive factor, negative factor) pair.
struct SwappedBlade {
  BladeMask mask = 0;
  int sort_sign = 1;
};

SwappedBlade swap_blade(BladeMask m, int src_p) {
  SwappedBlade out;
  int pos_factors = 0, neg_factors = 0;
  for (int a = 1; m != 0; ++a, m >>= 1) {
    if (!(m & 1)) continue;
    if (a <= src_p) {
      ++pos_factors;
    } else {
      ++neg_factors;
    }
  }
  out.sort_sign = (pos_factors * neg_factors) % 2 ? -1 : 1;
  return out;
}

BladeMask swap_mask(BladeMask m, int src_p, int src_q) {
  BladeMask out = 0;
  for (int a = 1; m != 0; ++a, m >>= 1) {
    if (!(m & 1)) continue;
    int target = a <= src_p ? src_q + a : a - src_p;
    out |= BladeMask(1) << (target - 1);
  }
  return out;
}

}  // namespace

Multivector swap_iso(const Multivector& u) {
  const int p = u.sig().p();
  const int q = u.sig().q();
  Signature target(q, p);
  Multivector r(target);
  for (const auto& [m, c] : u.terms()) {
    int k = blade_grade(m);
    ExactComplex factor = i_power(k);
    if (swap_blade(m, p).sort_sign < 0) factor = -factor;
    r.set(swap_mask(m, p, q), factor * c);
  }
  return r;
}

Multivector swap_iso_inverse(const Multivector& u) {
  const int p = u.sig().p();
  const int q = u.sig().q();
  Signature source(q, p);
  Multivector r(source);
  for (const auto& [m, c] : u.terms()) {
    // Invert the block swap: target positives came from source negatives.
    BladeMask src_mask = swap_mask(m, p, q);
    int k = blade_grade(m);
    ExactComplex factor = i_power(-k);
    if (swap_blade(src_mask, q).sort_sign < 0) factor = -factor;
    r.set(src_mask, factor * c);
  }
  return r;
}

ApproxMultivector approx_identity(Signature sig) {
  return ApproxMultivector::scalar(sig, 1.0);
}

ApproxMultivector grade_involution(const ApproxMultivector& u) {
  return map_blade_sign(u, grade_involution_sign);
}

ApproxMultivector reversion(const ApproxMultivector& u) {
  return map_blade_sign(u, reversion_sign);
}

ApproxMultivector complex_conjugation(const ApproxMultivector& u) {
  ApproxMultivector r(u.sig(), u.tol());
  for (const auto& [m, c] : u.terms()) r.set(m, std::conj(c));
  return r;
}

ApproxMultivector pseudo_hermitian(const ApproxMultivector& u) {
  return reversion(complex_conjugation(u));
}

double ApproxMultivector::norm_inf() const {
  double r = 0.0;
  for (const auto& [m, c] : terms_) {
    double a = std::abs(c);
    if (std::isnan(a)) return a;
    r = std::max(r, a);
  }
  return r;
}

double ApproxMultivector::norm_one() const {
  double r = 0.0;
  for (const auto& [m, c] : terms_) r += std::abs(c);
  return r;
}

ApproxMultivector exp_series(const ApproxMultivector& u, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("exp_series: tol must be positive");
  int squarings = 0;
  ApproxMultivector v = u;
  double scale = u.norm_one();
  while (scale > 0.75 && squarings < 60) {
    v = std::complex<double>(0.5) * v;
    scale *= 0.5;
    ++squarings;
  }

  ApproxMultivector sum = approx_identity(u.sig());
  ApproxMultivector term = approx_identity(u.sig());
  for (int k = 1;; ++k) {
    if (k > 200) throw std::runtime_error("exp_series: no convergence within 200 terms");
    term = std::complex<double>(1.0 / k) * (term * v);
    sum = sum + term;
    if (term.norm_inf() < tol) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace quatlie
