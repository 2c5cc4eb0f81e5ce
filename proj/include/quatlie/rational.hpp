#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace quatlie {

/// Exact rational with checked 64-bit numerator/denominator.
///
/// Every value is stored normalized: gcd(num, den) = 1, den > 0. Arithmetic
/// runs through 128-bit intermediates and throws std::overflow_error if a
/// reduced result does not fit in 64 bits. The quantities handled by the
/// exact paths of this library (blade signs, binomial sums, traces) stay
/// tiny, so an overflow always indicates a logic error, never a legitimate
/// value.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT implicit
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    __int128 n = num;
    __int128 d = den;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    assign_reduced(n, d);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return Rational(n, d, from_i128{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return Rational(n, d, from_i128{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.num_;
    __int128 d = (__int128)a.den_ * b.den_;
    return Rational(n, d, from_i128{});
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    __int128 n = (__int128)a.num_ * b.den_;
    __int128 d = (__int128)a.den_ * b.num_;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rational(n, d, from_i128{});
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Renders as "num/den" with den > 0, e.g. "-3/2", "0/1".
  std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "num/den" or a bare integer "num".
  static Rational from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    std::int64_t n = std::stoll(s.substr(0, slash));
    std::int64_t d = std::stoll(s.substr(slash + 1));
    return Rational(n, d);
  }

 private:
  struct from_i128 {};
  Rational(__int128 n, __int128 d, from_i128) { assign_reduced(n, d); }

  void assign_reduced(__int128 n, __int128 d) {
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    n /= g;
    d /= g;
    constexpr __int128 kMax = INT64_MAX;
    constexpr __int128 kMin = INT64_MIN;
    if (n > kMax || n < kMin || d > kMax) throw std::overflow_error("Rational overflow");
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Exact complex number with rational real and imaginary parts.
struct ExactComplex {
  Rational re;
  Rational im;

  ExactComplex() = default;
  ExactComplex(Rational r) : re(r) {}  // NOLINT implicit
  ExactComplex(std::int64_t r) : re(r) {}  // NOLINT implicit
  ExactComplex(Rational r, Rational i) : re(r), im(i) {}

  static ExactComplex one() { return ExactComplex(1); }
  static ExactComplex i() { return ExactComplex(Rational(0), Rational(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  bool is_imaginary() const { return re.is_zero(); }

  ExactComplex conj() const { return ExactComplex(re, -im); }

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return ExactComplex(a.re + b.re, a.im + b.im);
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return ExactComplex(a.re - b.re, a.im - b.im);
  }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return ExactComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n.is_zero()) throw std::domain_error("ExactComplex: division by zero");
    return ExactComplex((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
  }
  ExactComplex operator-() const { return ExactComplex(-re, -im); }
  ExactComplex& operator+=(const ExactComplex& o) { return *this = *this + o; }
  ExactComplex& operator-=(const ExactComplex& o) { return *this = *this - o; }
  ExactComplex& operator*=(const ExactComplex& o) { return *this = *this * o; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }
};

inline ExactComplex conj(const ExactComplex& z) { return z.conj(); }

}  // namespace quatlie
