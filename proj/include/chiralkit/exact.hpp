#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chiralkit {

/// Exact rational over 64-bit integers, kept normalized: den > 0, gcd(|num|, den) = 1.
/// Entries in this project stay tiny (gamma-matrix algebra over {0, +-1, +-1/2}),
/// so 64-bit components with cross-reduction are ample.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator-(const Rational& a) { return raw(-a.num_, a.den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    long long g = std::gcd(a.den_, b.den_);
    long long bd = b.den_ / g;
    return {a.num_ * bd + b.num_ * (a.den_ / g), a.den_ * bd};
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    long long g1 = std::gcd(std::abs(a.num_), b.den_);
    long long g2 = std::gcd(std::abs(b.num_), a.den_);
    return raw((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den_, b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;

 private:
  static Rational raw(long long n, long long d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    r.normalize();
    return r;
  }
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(std::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_ = 0;
  long long den_ = 1;
};

/// Complex number with exact rational parts. Equality is exact; no tolerance anywhere.
struct ExactComplex {
  Rational re;
  Rational im;

  constexpr ExactComplex() = default;
  ExactComplex(long long r) : re(r) {}  // NOLINT: implicit by design
  ExactComplex(Rational r) : re(r) {}   // NOLINT: implicit by design
  ExactComplex(Rational r, Rational i) : re(r), im(i) {}

  static ExactComplex i_unit() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend ExactComplex operator-(const ExactComplex& z) { return {-z.re, -z.im}; }
  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    const Rational norm = b.re * b.re + b.im * b.im;
    if (norm.is_zero()) throw std::domain_error("ExactComplex: division by zero");
    const ExactComplex num = a * ExactComplex{b.re, -b.im};
    return {num.re / norm, num.im / norm};
  }
  ExactComplex& operator+=(const ExactComplex& o) { return *this = *this + o; }
  ExactComplex& operator*=(const ExactComplex& o) { return *this = *this * o; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) = default;

  std::string to_string() const;
};

inline ExactComplex conj(const ExactComplex& z) { return {z.re, -z.im}; }

inline std::string ExactComplex::to_string() const {
  if (im.is_zero()) return re.to_string();
  if (re.is_zero()) return im.to_string() + "i";
  return re.to_string() + (im.to_double() < 0 ? "" : "+") + im.to_string() + "i";
}

}  // namespace chiralkit
