#pragma once

#include <array>
#include <cmath>
#include <type_traits>

#include "icann/errors.hpp"

namespace icann {

// Symmetric 3x3 tensor, six stored components in the order
// (11, 22, 33, 12, 13, 23). This is also the Voigt order used throughout;
// off-diagonal entries carry no scaling factor.
template <class T>
struct Sym3 {
  T a11{}, a22{}, a33{}, a12{}, a13{}, a23{};

  static Sym3 identity() { return {T(1), T(1), T(1), T(0), T(0), T(0)}; }
  static Sym3 zero() { return {}; }

  T& operator[](int i) { return (&a11)[i]; }
  const T& operator[](int i) const { return (&a11)[i]; }
};

// General (not necessarily symmetric) 3x3 tensor, row-major.
template <class T>
struct Mat3 {
  std::array<T, 9> m{};

  static Mat3 identity() {
    Mat3 r;
    r.m = {T(1), T(0), T(0), T(0), T(1), T(0), T(0), T(0), T(1)};
    return r;
  }

  T& operator()(int i, int j) { return m[3 * i + j]; }
  const T& operator()(int i, int j) const { return m[3 * i + j]; }
};

using SymTensor3 = Sym3<double>;
using Tensor3 = Mat3<double>;

template <class T>
Sym3<T> operator+(const Sym3<T>& a, const Sym3<T>& b) {
  return {a.a11 + b.a11, a.a22 + b.a22, a.a33 + b.a33,
          a.a12 + b.a12, a.a13 + b.a13, a.a23 + b.a23};
}

template <class T>
Sym3<T> operator-(const Sym3<T>& a, const Sym3<T>& b) {
  return {a.a11 - b.a11, a.a22 - b.a22, a.a33 - b.a33,
          a.a12 - b.a12, a.a13 - b.a13, a.a23 - b.a23};
}

template <class T>
Sym3<T> operator*(const T& c, const Sym3<T>& a) {
  return {c * a.a11, c * a.a22, c * a.a33, c * a.a12, c * a.a13, c * a.a23};
}

template <class T>
  requires(!std::is_same_v<T, double>)
Sym3<T> operator*(double c, const Sym3<T>& a) {
  return T(c) * a;
}

template <class T>
T trace(const Sym3<T>& a) {
  return a.a11 + a.a22 + a.a33;
}

// double contraction a : b = a_ij b_ij
template <class T>
T ddot(const Sym3<T>& a, const Sym3<T>& b) {
  return a.a11 * b.a11 + a.a22 * b.a22 + a.a33 * b.a33 +
         T(2) * (a.a12 * b.a12 + a.a13 * b.a13 + a.a23 * b.a23);
}

template <class T>
T det(const Sym3<T>& a) {
  return a.a11 * (a.a22 * a.a33 - a.a23 * a.a23) -
         a.a12 * (a.a12 * a.a33 - a.a23 * a.a13) +
         a.a13 * (a.a12 * a.a23 - a.a22 * a.a13);
}

template <class T>
Sym3<T> deviator(const Sym3<T>& t) {
  T p = (t.a11 + t.a22 + t.a33) / T(3);
  return {t.a11 - p, t.a22 - p, t.a33 - p, t.a12, t.a13, t.a23};
}

// a * a, symmetric for symmetric a
template <class T>
Sym3<T> square(const Sym3<T>& a) {
  Sym3<T> r;
  r.a11 = a.a11 * a.a11 + a.a12 * a.a12 + a.a13 * a.a13;
  r.a22 = a.a12 * a.a12 + a.a22 * a.a22 + a.a23 * a.a23;
  r.a33 = a.a13 * a.a13 + a.a23 * a.a23 + a.a33 * a.a33;
  r.a12 = a.a11 * a.a12 + a.a12 * a.a22 + a.a13 * a.a23;
  r.a13 = a.a11 * a.a13 + a.a12 * a.a23 + a.a13 * a.a33;
  r.a23 = a.a12 * a.a13 + a.a22 * a.a23 + a.a23 * a.a33;
  return r;
}

template <class T>
Mat3<T> to_full(const Sym3<T>& a) {
  Mat3<T> r;
  r.m = {a.a11, a.a12, a.a13, a.a12, a.a22, a.a23, a.a13, a.a23, a.a33};
  return r;
}

template <class T>
Mat3<T> mul(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return r;
}

template <class T>
Sym3<T> sym(const Mat3<T>& a) {
  return {a(0, 0), a(1, 1), a(2, 2),
          (a(0, 1) + a(1, 0)) / T(2),
          (a(0, 2) + a(2, 0)) / T(2),
          (a(1, 2) + a(2, 1)) / T(2)};
}

// a * b * a for symmetric a, b; the product is symmetric and is symmetrized
// to scrub round-off.
template <class T>
Sym3<T> sandwich(const Sym3<T>& a, const Sym3<T>& b) {
  return sym(mul(mul(to_full(a), to_full(b)), to_full(a)));
}

// C = F^T F
template <class T>
Sym3<T> right_cauchy_green(const Mat3<T>& f) {
  Mat3<T> c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      c(i, j) = f(0, i) * f(0, j) + f(1, i) * f(1, j) + f(2, i) * f(2, j);
  return sym(c);
}

namespace detail {
template <class T>
double value_of(const T& x) {
  return x.value();
}
inline double value_of(double x) { return x; }
}  // namespace detail

// Sylvester test on the leading principal minors. Works on plain values so
// the check never touches a differentiation tape.
template <class T>
bool is_spd(const Sym3<T>& a) {
  SymTensor3 v{detail::value_of(a.a11), detail::value_of(a.a22),
               detail::value_of(a.a33), detail::value_of(a.a12),
               detail::value_of(a.a13), detail::value_of(a.a23)};
  double m2 = v.a11 * v.a22 - v.a12 * v.a12;
  return v.a11 > 0.0 && m2 > 0.0 && det(v) > 0.0;
}

// Inverse of a symmetric positive definite tensor via the adjugate.
template <class T>
Sym3<T> inverse_spd(const Sym3<T>& a) {
  if (!is_spd(a)) throw NotPositiveDefiniteError("inverse of non-SPD tensor");
  T d = det(a);
  Sym3<T> r;
  r.a11 = (a.a22 * a.a33 - a.a23 * a.a23) / d;
  r.a22 = (a.a11 * a.a33 - a.a13 * a.a13) / d;
  r.a33 = (a.a11 * a.a22 - a.a12 * a.a12) / d;
  r.a12 = (a.a13 * a.a23 - a.a12 * a.a33) / d;
  r.a13 = (a.a12 * a.a23 - a.a13 * a.a22) / d;
  r.a23 = (a.a12 * a.a13 - a.a11 * a.a23) / d;
  return r;
}

template <class T>
std::array<T, 6> to_voigt(const Sym3<T>& a) {
  return {a.a11, a.a22, a.a33, a.a12, a.a13, a.a23};
}

template <class T>
Sym3<T> from_voigt(const std::array<T, 6>& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

// Raw (un-smoothed) stress invariants.
// I1 = tr, J2 = 1/2 tr(dev^2), J3 = 1/3 tr(dev^3),
// I2 = 1/2 tr(t^2), I3 = 1/3 tr(t^3).
template <class T>
struct Invariants {
  T I1, J2, J3, I2, I3;
};

template <class T>
Invariants<T> invariants(const Sym3<T>& t) {
  Invariants<T> r;
  r.I1 = trace(t);
  Sym3<T> d = deviator(t);
  Sym3<T> d2 = square(d);
  r.J2 = trace(d2) / T(2);
  r.J3 = ddot(d2, d) / T(3);  // tr(d^3) = d^2 : d
  Sym3<T> t2 = square(t);
  r.I2 = trace(t2) / T(2);
  r.I3 = ddot(t2, t) / T(3);
  return r;
}

inline constexpr double kSmoothedRootEps = 0.01;

// sqrt(x) := x / (x + eps)^{1/2}, applied to non-negative invariants only.
template <class T>
T smoothed_sqrt(const T& x) {
  using std::sqrt;
  return x / sqrt(x + T(kSmoothedRootEps));
}

template <class T>
T smoothed_sqrt_deriv(const T& x) {
  using std::sqrt;
  T s = x + T(kSmoothedRootEps);
  return (x / T(2) + T(kSmoothedRootEps)) / (s * sqrt(s));
}

// cbrt(x) := x / (|x| + eps)^{2/3}, odd-symmetric.
template <class T>
T smoothed_cbrt(const T& x) {
  using std::abs;
  using std::pow;
  return x / pow(abs(x) + T(kSmoothedRootEps), 2.0 / 3.0);
}

template <class T>
T smoothed_cbrt_deriv(const T& x) {
  using std::abs;
  using std::pow;
  T a = abs(x) + T(kSmoothedRootEps);
  return (abs(x) / T(3) + T(kSmoothedRootEps)) / (a * pow(a, 2.0 / 3.0));
}

// Network inputs z of the dual potential: I1 and the smoothed roots of
// J2, J3, I2, I3. All five share the stress unit.
template <class T>
struct InvariantVector {
  std::array<T, 5> z{};
  T& operator[](int i) { return z[i]; }
  const T& operator[](int i) const { return z[i]; }
};

template <class T>
InvariantVector<T> invariant_vector(const Sym3<T>& t) {
  Invariants<T> inv = invariants(t);
  InvariantVector<T> r;
  r.z[0] = inv.I1;
  r.z[1] = smoothed_sqrt(inv.J2);
  r.z[2] = smoothed_cbrt(inv.J3);
  r.z[3] = smoothed_sqrt(inv.I2);
  r.z[4] = smoothed_cbrt(inv.I3);
  return r;
}

enum class MatrixFn { exp, log, sqrt };

// Spectral evaluation of exp/log/sqrt on a symmetric tensor. log and sqrt
// require an SPD argument (eigenvalues > kSpdTol relative to the largest).
SymTensor3 sym_matrix_function(const SymTensor3& t, MatrixFn kind);

inline constexpr double kSpdTol = 1e-12;

namespace detail {
// Eigendecomposition of a symmetric 3x3 matrix: analytic
// characteristic-polynomial solve with a cyclic-Jacobi fallback near
// degenerate eigenvalues. Eigenvalues ascending, rows of q are eigenvectors.
void eig_sym3(const SymTensor3& a, std::array<double, 3>& lam,
              std::array<std::array<double, 3>, 3>& q);

// f(A) together with the 6x6 Jacobian d voigt(f(A)) / d voigt(A), built from
// the spectral data via divided differences. Near-equal eigenvalue pairs fall
// back to f' at the midpoint, which keeps the Jacobian finite at degeneracies.
SymTensor3 sym_matrix_function_jacobian(const SymTensor3& t, MatrixFn kind,
                                        std::array<std::array<double, 6>, 6>* jac);
}  // namespace detail

}  // namespace icann
