#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "relaxkdv/core.hpp"

// Complete elliptic integrals and Jacobi elliptic functions by the
// arithmetic-geometric mean. All arguments use the modulus s (not the
// parameter m = s^2): K(s) = int_0^{pi/2} (1 - s^2 sin^2 t)^{-1/2} dt.

namespace relaxkdv {

namespace detail {

template <typename Scalar>
constexpr Scalar agm_tol() {
  return Scalar(4) * std::numeric_limits<Scalar>::epsilon();
}

}  // namespace detail

template <typename Scalar>
Scalar elliptic_K(Scalar s) {
  if (!(s >= 0 && s < 1)) throw DomainError("elliptic_K: modulus must lie in [0, 1)");
  Scalar a = 1, b = std::sqrt((Scalar(1) - s) * (Scalar(1) + s));
  while (std::abs(a - b) > detail::agm_tol<Scalar>() * a) {
    const Scalar an = Scalar(0.5) * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi_v<Scalar> / (Scalar(2) * a);
}

/// E(s) = K(s) (1 - sum_n 2^{n-1} c_n^2), c_0 = s.
template <typename Scalar>
Scalar elliptic_E(Scalar s) {
  if (!(s >= 0 && s <= 1)) throw DomainError("elliptic_E: modulus must lie in [0, 1]");
  if (s == 1) return Scalar(1);
  Scalar a = 1, b = std::sqrt((Scalar(1) - s) * (Scalar(1) + s));
  Scalar c = s;
  Scalar pow2 = Scalar(0.5);
  Scalar sum = pow2 * c * c;
  while (std::abs(c) > detail::agm_tol<Scalar>() * a) {
    const Scalar an = Scalar(0.5) * (a + b);
    c = Scalar(0.5) * (a - b);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2;
    sum += pow2 * c * c;
  }
  const Scalar K = std::numbers::pi_v<Scalar> / (Scalar(2) * a);
  return K * (Scalar(1) - sum);
}

template <typename Scalar>
struct JacobiTriple {
  Scalar sn, cn, dn;
};

/// sn, cn, dn by descending Landen transformation.
template <typename Scalar>
JacobiTriple<Scalar> jacobi_sncndn(Scalar x, Scalar s) {
  if (!(s >= 0 && s <= 1)) throw DomainError("jacobi_sncndn: modulus must lie in [0, 1]");
  if (s == 0) return {std::sin(x), std::cos(x), Scalar(1)};
  if (s == 1) {
    const Scalar sech = Scalar(1) / std::cosh(x);
    return {std::tanh(x), sech, sech};
  }
  constexpr int kMaxDepth = 64;
  std::array<Scalar, kMaxDepth> a{}, c{};
  a[0] = 1;
  Scalar b = std::sqrt((Scalar(1) - s) * (Scalar(1) + s));
  c[0] = s;
  int n = 0;
  while (std::abs(c[n]) > detail::agm_tol<Scalar>() * a[n] && n + 1 < kMaxDepth) {
    a[n + 1] = Scalar(0.5) * (a[n] + b);
    c[n + 1] = Scalar(0.5) * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  Scalar phi = std::ldexp(a[n] * x, n);
  Scalar phi_prev = phi;
  for (int j = n; j > 0; --j) {
    phi_prev = phi;
    phi = Scalar(0.5) * (phi + std::asin(c[j] / a[j] * std::sin(phi)));
  }
  // phi = phi_0, phi_prev = phi_1
  const Scalar sn = std::sin(phi), cn = std::cos(phi);
  const Scalar dn = n > 0 ? cn / std::cos(phi_prev - phi) : Scalar(1);
  return {sn, cn, dn};
}

template <typename Scalar>
Scalar jacobi_dn(Scalar x, Scalar s) {
  return jacobi_sncndn(x, s).dn;
}

}  // namespace relaxkdv
