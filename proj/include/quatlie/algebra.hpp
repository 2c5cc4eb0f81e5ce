#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "quatlie/rational.hpp"

namespace quatlie {

/// Generator signature (p, q): p generators square to +e, q to -e.
/// Generators are numbered 1..n with 1..p positive and p+1..n negative.
class Signature {
 public:
  Signature(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0) throw std::invalid_argument("Signature: negative count");
    int n = p + q;
    if (n < 1 || n > 14) throw std::invalid_argument("Signature: need 1 <= p+q <= 14");
  }

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }

  /// Metric eta_aa for the 1-based generator index a.
  int eta(int a) const {
    if (a < 1 || a > n()) throw std::out_of_range("Signature::eta: bad generator index");
    return a <= p_ ? 1 : -1;
  }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

 private:
  int p_;
  int q_;
};

/// A basis blade is an n-bit mask: bit a-1 set iff generator e_a is a factor.
/// Mask 0 is the identity element e.
using BladeMask = std::uint32_t;

inline int blade_grade(BladeMask m) { return std::popcount(m); }

/// Quaternion type of a blade: grade mod 4.
inline int blade_quat_type(BladeMask m) { return blade_grade(m) & 3; }

/// Sign from reordering the concatenation of two ascending index lists into
/// ascending order (popcount-prefix transposition count).
inline int reorder_sign(BladeMask a, BladeMask b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

/// Product of two basis blades: returns the sign (+1/-1) and the result mask
/// (a XOR b). Shared generators contract through the metric.
inline std::pair<int, BladeMask> blade_product_sign(BladeMask a, BladeMask b,
                                                    const Signature& sig) {
  if ((a | b) >> sig.n()) throw std::invalid_argument("blade out of range for signature");
  int s = reorder_sign(a, b);
  BladeMask common = a & b;
  while (common != 0) {
    int idx = std::countr_zero(common);
    s *= sig.eta(idx + 1);
    common &= common - 1;
  }
  return {s, a ^ b};
}

inline std::pair<ExactComplex, BladeMask> blade_product(BladeMask a, BladeMask b,
                                                        const Signature& sig) {
  auto [s, m] = blade_product_sign(a, b, sig);
  return {ExactComplex(s), m};
}

/// Sign flip of the grade-k part under grade involution: (-1)^k.
inline int grade_involution_sign(int k) { return (k & 1) ? -1 : 1; }

/// Sign flip of the grade-k part under reversion: (-1)^{k(k-1)/2}.
inline int reversion_sign(int k) { return ((k & 3) == 2 || (k & 3) == 3) ? -1 : 1; }

/// Sign of the square of a blade: e_A e_A = blade_square_sign * e.
inline int blade_square_sign(BladeMask m, const Signature& sig) {
  int s = reversion_sign(blade_grade(m));
  BladeMask rest = m;
  while (rest != 0) {
    int idx = std::countr_zero(rest);
    s *= sig.eta(idx + 1);
    rest &= rest - 1;
  }
  return s;
}

class ApproxMultivector;

/// Element of the complexified Clifford algebra with exact coefficients.
/// Stored as a sparse blade -> coefficient map; zero coefficients are never
/// kept, so equality of maps is equality of elements.
class Multivector {
 public:
  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector scalar(Signature sig, ExactComplex c) {
    Multivector u(sig);
    u.set(0, c);
    return u;
  }
  static Multivector blade(Signature sig, BladeMask m, ExactComplex c = ExactComplex::one()) {
    Multivector u(sig);
    u.set(m, c);
    return u;
  }

  const Signature& sig() const { return sig_; }
  const std::map<BladeMask, ExactComplex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ExactComplex coeff(BladeMask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ExactComplex() : it->second;
  }

  void set(BladeMask m, const ExactComplex& c) {
    if (m >> sig_.n()) throw std::invalid_argument("Multivector: blade out of range");
    if (c.is_zero())
      terms_.erase(m);
    else
      terms_[m] = c;
  }

  void add_term(BladeMask m, const ExactComplex& c) { set(m, coeff(m) + c); }

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    a.require_same_sig(b);
    Multivector r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend Multivector operator-(const Multivector& a, const Multivector& b) {
    a.require_same_sig(b);
    Multivector r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  friend Multivector operator*(const ExactComplex& s, const Multivector& a) {
    Multivector r(a.sig_);
    for (const auto& [m, c] : a.terms_) r.set(m, s * c);
    return r;
  }
  Multivector operator-() const {
    Multivector r(sig_);
    for (const auto& [m, c] : terms_) r.set(m, -c);
    return r;
  }

  /// Geometric product, the bilinear extension of the blade product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.require_same_sig(b);
    Multivector r(a.sig_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        auto [s, m] = blade_product_sign(ma, mb, a.sig_);
        ExactComplex c = ca * cb;
        if (s < 0) c = -c;
        r.add_term(m, c);
      }
    }
    return r;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  ApproxMultivector to_approx() const;

 private:
  void require_same_sig(const Multivector& o) const {
    if (sig_ != o.sig_) throw std::invalid_argument("Multivector: signature mismatch");
  }

  Signature sig_;
  std::map<BladeMask, ExactComplex> terms_;
};

Multivector identity(Signature sig);

Multivector grade_projection(const Multivector& u, int k);
Multivector grade_involution(const Multivector& u);
Multivector reversion(const Multivector& u);
Multivector complex_conjugation(const Multivector& u);
/// Pseudo-Hermitian conjugation: complex conjugation composed with reversion.
Multivector pseudo_hermitian(const Multivector& u);
/// Hermitian conjugation of elements: coefficient conjugated, blade replaced
/// by its inverse.
Multivector hermitian_conjugation(const Multivector& u);
Multivector commutator(const Multivector& u, const Multivector& v);

/// Even-subalgebra embedding e_a -> e_a e_n. Maps Cl(p,q) into the even part
/// of Cl(p,q+1); the image blade keeps coefficient +1 per basis blade.
Multivector even_iso(const Multivector& u);
/// Inverse of even_iso on the even part of Cl(p,q), q >= 1.
Multivector even_iso_inverse(const Multivector& u);

/// Signature-swapping embedding e_a -> i e_a. Maps Cl(q,p) into
/// Cl^(0) + i Cl^(1) of the complexified Cl(p,q).
Multivector swap_iso(const Multivector& u);
/// Inverse of swap_iso.
Multivector swap_iso_inverse(const Multivector& u);

/// Multivector with double-precision complex coefficients. Only the
/// exponential / residual paths use it; `tol` travels with the value as the
/// comparison tolerance of the context that produced it.
class ApproxMultivector {
 public:
  explicit ApproxMultivector(Signature sig, double tol = 1e-12) : sig_(sig), tol_(tol) {}

  static ApproxMultivector scalar(Signature sig, std::complex<double> c) {
    ApproxMultivector u(sig);
    u.set(0, c);
    return u;
  }

  const Signature& sig() const { return sig_; }
  double tol() const { return tol_; }
  const std::map<BladeMask, std::complex<double>>& terms() const { return terms_; }

  std::complex<double> coeff(BladeMask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? std::complex<double>(0.0) : it->second;
  }

  void set(BladeMask m, std::complex<double> c) {
    if (m >> sig_.n()) throw std::invalid_argument("ApproxMultivector: blade out of range");
    if (c == std::complex<double>(0.0))
      terms_.erase(m);
    else
      terms_[m] = c;
  }

  void add_term(BladeMask m, std::complex<double> c) { set(m, coeff(m) + c); }

  friend ApproxMultivector operator+(const ApproxMultivector& a, const ApproxMultivector& b) {
    a.require_same_sig(b);
    ApproxMultivector r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend ApproxMultivector operator-(const ApproxMultivector& a, const ApproxMultivector& b) {
    a.require_same_sig(b);
    ApproxMultivector r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  friend ApproxMultivector operator*(std::complex<double> s, const ApproxMultivector& a) {
    ApproxMultivector r(a.sig_, a.tol_);
    for (const auto& [m, c] : a.terms_) r.set(m, s * c);
    return r;
  }
  friend ApproxMultivector operator*(const ApproxMultivector& a, const ApproxMultivector& b) {
    a.require_same_sig(b);
    ApproxMultivector r(a.sig_, a.tol_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        auto [s, m] = blade_product_sign(ma, mb, a.sig_);
        r.add_term(m, double(s) * ca * cb);
      }
    }
    return r;
  }

  /// Largest coefficient magnitude.
  double norm_inf() const;
  /// Sum of coefficient magnitudes; bounds the operator norm of any matrix
  /// image since blade images are unitary.
  double norm_one() const;

 private:
  void require_same_sig(const ApproxMultivector& o) const {
    if (sig_ != o.sig_) throw std::invalid_argument("ApproxMultivector: signature mismatch");
  }

  Signature sig_;
  double tol_;
  std::map<BladeMask, std::complex<double>> terms_;
};

ApproxMultivector approx_identity(Signature sig);
ApproxMultivector grade_involution(const ApproxMultivector& u);
ApproxMultivector reversion(const ApproxMultivector& u);
ApproxMultivector complex_conjugation(const ApproxMultivector& u);
ApproxMultivector pseudo_hermitian(const ApproxMultivector& u);

/// Truncated exponential series with scaling and squaring. Terms are added
/// until the term inf-norm drops below tol; more than 200 terms throws.
ApproxMultivector exp_series(const ApproxMultivector& u, double tol = 1e-14);

}  // namespace quatlie
