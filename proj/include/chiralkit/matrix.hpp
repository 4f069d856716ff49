#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <stdexcept>

#include "chiralkit/exact.hpp"

namespace chiralkit {

/// 4x4 matrix over a complex scalar type S (ExactComplex or std::complex<double>).
template <class S>
struct Matrix4 {
  std::array<S, 16> e{};

  S& at(int r, int c) { return e[static_cast<std::size_t>(r * 4 + c)]; }
  const S& at(int r, int c) const { return e[static_cast<std::size_t>(r * 4 + c)]; }

  static Matrix4 zero() { return {}; }
  static Matrix4 identity() {
    Matrix4 m;
    for (int k = 0; k < 4; ++k) m.at(k, k) = S(1);
    return m;
  }

  friend Matrix4 operator+(const Matrix4& a, const Matrix4& b) {
    Matrix4 r;
    for (std::size_t k = 0; k < 16; ++k) r.e[k] = a.e[k] + b.e[k];
    return r;
  }
  friend Matrix4 operator-(const Matrix4& a, const Matrix4& b) {
    Matrix4 r;
    for (std::size_t k = 0; k < 16; ++k) r.e[k] = a.e[k] - b.e[k];
    return r;
  }
  friend Matrix4 operator*(const S& s, const Matrix4& a) {
    Matrix4 r;
    for (std::size_t k = 0; k < 16; ++k) r.e[k] = s * a.e[k];
    return r;
  }
  friend Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        S acc{};
        for (int k = 0; k < 4; ++k) acc = acc + a.at(i, k) * b.at(k, j);
        r.at(i, j) = acc;
      }
    return r;
  }

  friend bool operator==(const Matrix4& a, const Matrix4& b) = default;
};

/// Four-component spinor over scalar type S.
template <class S>
struct Bispinor {
  std::array<S, 4> c{};

  S& operator[](int k) { return c[static_cast<std::size_t>(k)]; }
  const S& operator[](int k) const { return c[static_cast<std::size_t>(k)]; }

  friend Bispinor operator+(const Bispinor& a, const Bispinor& b) {
    Bispinor r;
    for (int k = 0; k < 4; ++k) r[k] = a[k] + b[k];
    return r;
  }
  friend Bispinor operator-(const Bispinor& a, const Bispinor& b) {
    Bispinor r;
    for (int k = 0; k < 4; ++k) r[k] = a[k] - b[k];
    return r;
  }
  friend Bispinor operator*(const S& s, const Bispinor& a) {
    Bispinor r;
    for (int k = 0; k < 4; ++k) r[k] = s * a[k];
    return r;
  }

  friend bool operator==(const Bispinor& a, const Bispinor& b) = default;
};

template <class S>
Bispinor<S> operator*(const Matrix4<S>& m, const Bispinor<S>& v) {
  Bispinor<S> r;
  for (int i = 0; i < 4; ++i) {
    S acc{};
    for (int k = 0; k < 4; ++k) acc = acc + m.at(i, k) * v[k];
    r[i] = acc;
  }
  return r;
}

template <class S>
Bispinor<S> conjugated(const Bispinor<S>& v) {
  using std::conj;
  Bispinor<S> r;
  for (int k = 0; k < 4; ++k) r[k] = conj(v[k]);
  return r;
}

/// Hermitian inner product <a|b> = sum conj(a_k) b_k.
template <class S>
S inner(const Bispinor<S>& a, const Bispinor<S>& b) {
  using std::conj;
  S acc{};
  for (int k = 0; k < 4; ++k) acc = acc + conj(a[k]) * b[k];
  return acc;
}

using Matrix4Q = Matrix4<ExactComplex>;
using Matrix4C = Matrix4<std::complex<double>>;
using BispinorQ = Bispinor<ExactComplex>;
using BispinorC = Bispinor<std::complex<double>>;

inline std::complex<double> to_complex(const ExactComplex& z) {
  return {z.re.to_double(), z.im.to_double()};
}

inline Matrix4C to_double(const Matrix4Q& m) {
  Matrix4C r;
  for (std::size_t k = 0; k < 16; ++k) r.e[k] = to_complex(m.e[k]);
  return r;
}

inline BispinorC to_double(const BispinorQ& v) {
  BispinorC r;
  for (int k = 0; k < 4; ++k) r[k] = to_complex(v[k]);
  return r;
}

inline double max_abs_diff(const Matrix4C& a, const Matrix4C& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < 16; ++k) m = std::max(m, std::abs(a.e[k] - b.e[k]));
  return m;
}

inline double max_abs_diff(const BispinorC& a, const BispinorC& b) {
  double m = 0.0;
  for (int k = 0; k < 4; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace chiralkit
