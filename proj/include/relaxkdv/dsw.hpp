#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "relaxkdv/core.hpp"
#include "relaxkdv/special_functions.hpp"

// Gurevich-Pitaevskii asymptotics for the step 1 -> 0 under
// u_t + u u_x + delta u_xxx = 0 (delta = 1 unless given). The self-similar
// coordinate xi = x/t spans the fan [-1, 2/3].

namespace relaxkdv {

template <typename Scalar>
struct DswAsymptotics {
  static constexpr Scalar tau_minus = Scalar(-1);
  static constexpr Scalar tau_plus = Scalar(2) / Scalar(3);

  /// Left side of the modulus equation; increasing from -1 (s=0) to 2/3 (s=1).
  static Scalar speed_of_modulus(Scalar s) {
    if (!(s >= 0 && s <= 1)) throw DomainError("modulus must lie in [0, 1]");
    if (s == 1) return tau_plus;
    const Scalar s2 = s * s;
    const Scalar q = (Scalar(1) - s) * (Scalar(1) + s);
    const Scalar K = elliptic_K(s);
    // ratio = s^2 (1-s^2) K / (E - (1-s^2) K); the denominator cancels
    // catastrophically for small s, so it is summed as a series there.
    Scalar ratio;
    if (s < Scalar(0.5)) {
      ratio = q * K / (std::numbers::pi_v<Scalar> / Scalar(2) * reduced_gap_series(s2));
    } else {
      ratio = s2 * q * K / (elliptic_E(s) - q * K);
    }
    return (Scalar(1) + s2) / Scalar(3) - Scalar(2) / Scalar(3) * ratio;
  }

  /// (E - (1-m) K) / ((pi/2) m) = sum_{n>=1} a_{n-1} m^{n-1} / (2n),
  /// a_n = ((2n-1)!! / (2n)!!)^2, valid for m = s^2 < 1.
  static Scalar reduced_gap_series(Scalar m) {
    Scalar a = 1, mp = 1, sum = 0;
    for (int n = 1; n < 400; ++n) {
      const Scalar term = a * mp / Scalar(2 * n);
      sum += term;
      if (term < std::numeric_limits<Scalar>::epsilon() * sum) break;
      const Scalar r = Scalar(2 * n - 1) / Scalar(2 * n);
      a *= r * r;
      mp *= m;
    }
    return sum;
  }

  /// Root s of speed_of_modulus(s) = xi by bisection, iterated until the
  /// bracket stops shrinking.
  static Scalar modulus(Scalar xi) {
    if (!(xi >= tau_minus && xi <= tau_plus))
      throw DomainError("x/t lies outside the dispersive fan [-1, 2/3]");
    if (xi == tau_minus) return Scalar(0);
    if (xi == tau_plus) return Scalar(1);
    Scalar lo = 0, hi = 1;
    for (int it = 0; it < 200; ++it) {
      const Scalar mid = Scalar(0.5) * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (speed_of_modulus(mid) < xi)
        lo = mid;
      else
        hi = mid;
    }
    return Scalar(0.5) * (lo + hi);
  }
};

template <typename Scalar>
Scalar dsw_modulus(Scalar xi) {
  return DswAsymptotics<Scalar>::modulus(xi);
}

/// (A_minus, A_plus) = (1 - s^2, 1 + s^2).
template <typename Scalar>
std::pair<Scalar, Scalar> dsw_envelope(Scalar xi) {
  const Scalar s = dsw_modulus(xi);
  return {Scalar(1) - s * s, Scalar(1) + s * s};
}

/// 2 dn^2((x - (1+s^2) t/3) / sqrt(6 delta), s) - (1 - s^2).
template <typename Scalar>
Scalar dsw_solution(Scalar x, Scalar t, Scalar delta = Scalar(1)) {
  if (!(t > 0)) throw DomainError("dsw_solution: t must be positive");
  if (!(delta > 0)) throw DomainError("dsw_solution: delta must be positive");
  const Scalar s = dsw_modulus(x / t);
  const Scalar s2 = s * s;
  const Scalar arg = (x - (Scalar(1) + s2) * t / Scalar(3)) / std::sqrt(Scalar(6) * delta);
  const Scalar dn = jacobi_dn(arg, s);
  return Scalar(2) * dn * dn - (Scalar(1) - s2);
}

}  // namespace relaxkdv
