#pragma once

#include <algorithm>
#include <cmath>

#include "relaxkdv/core.hpp"
#include "relaxkdv/flux.hpp"

// Analytic structure of the relaxation system
//
//   U_t + f(U)_x = S U (+ D U_xx),   U = (u, psi, w, p).
//
// All functions are pure.

namespace relaxkdv {

template <typename Scalar>
StateVec<Scalar> flux_vector(const StateVec<Scalar>& U, const ModelParams<Scalar>& m,
                             const FluxModel<Scalar>& flux) {
  const Scalar g = flux.f(U[kU]) + m.sgn_gamma * U[kPsi];
  return StateVec<Scalar>(g, m.alpha * g, -m.v_beta * m.v_beta * U[kP], -U[kW]);
}

/// b(U) = S U.
template <typename Scalar>
StateVec<Scalar> source_vector(const StateVec<Scalar>& U, const ModelParams<Scalar>& m) {
  return StateVec<Scalar>(Scalar(0), -m.alpha * U[kW], U[kPsi] / m.beta, Scalar(0));
}

template <typename Scalar>
Mat4<Scalar> source_matrix(const ModelParams<Scalar>& m) {
  Mat4<Scalar> S = Mat4<Scalar>::Zero();
  S(kPsi, kW) = -m.alpha;
  S(kW, kPsi) = Scalar(1) / m.beta;
  return S;
}

template <typename Scalar>
Mat4<Scalar> jacobian(Scalar u, const ModelParams<Scalar>& m, const FluxModel<Scalar>& flux) {
  const Scalar d = flux.df(u);
  Mat4<Scalar> J = Mat4<Scalar>::Zero();
  J(0, 0) = d;
  J(0, 1) = m.sgn_gamma;
  J(1, 0) = m.alpha * d;
  J(1, 1) = m.alpha * m.sgn_gamma;
  J(2, 3) = -m.v_beta * m.v_beta;
  J(3, 2) = Scalar(-1);
  return J;
}

/// Columns r_1..r_4, matching the eigenvalue order of EigenSet.
template <typename Scalar>
Mat4<Scalar> right_eigenvectors(Scalar u, const ModelParams<Scalar>& m,
                                const FluxModel<Scalar>& flux) {
  Mat4<Scalar> R;
  // clang-format off
  R << Scalar(0),  -m.sgn_gamma, Scalar(0),  Scalar(1),
       Scalar(0),  flux.df(u),   Scalar(0),  m.alpha,
       m.v_beta,   Scalar(0),    -m.v_beta,  Scalar(0),
       Scalar(1),  Scalar(0),    Scalar(1),  Scalar(0);
  // clang-format on
  return R;
}

/// Rows l_1..l_4 (gradients of the Riemann invariants).
template <typename Scalar>
Mat4<Scalar> left_eigenvectors(Scalar u, const ModelParams<Scalar>& m,
                               const FluxModel<Scalar>& flux) {
  Mat4<Scalar> L;
  // clang-format off
  L << Scalar(0),                   Scalar(0),  Scalar(1), m.v_beta,
       m.alpha,                     Scalar(-1), Scalar(0), Scalar(0),
       Scalar(0),                   Scalar(0),  Scalar(1), -m.v_beta,
       m.sgn_gamma * flux.df(u),    Scalar(1),  Scalar(0), Scalar(0);
  // clang-format on
  return L;
}

template <typename Scalar>
struct EigenSet {
  enum class Ordering {
    AscendingWithFastLast,   // l1 < l2 < l3 < l4 (gamma > 0)
    FastFirstThenAscending,  // l4 < l1 < l2 < l3 (gamma < 0)
    NotStrict                // alpha too small for the observed u
  };

  Scalar lambda1, lambda2, lambda3, lambda4;
  Ordering ordering_tag;

  Eigen::Matrix<Scalar, 4, 1> values() const {
    return Eigen::Matrix<Scalar, 4, 1>(lambda1, lambda2, lambda3, lambda4);
  }
  Scalar max_abs() const {
    return std::max(std::abs(lambda4), std::max(std::abs(lambda1), std::abs(lambda3)));
  }
};

template <typename Scalar>
EigenSet<Scalar> eigenvalues(Scalar u, const ModelParams<Scalar>& m,
                             const FluxModel<Scalar>& flux) {
  using O = typename EigenSet<Scalar>::Ordering;
  EigenSet<Scalar> e{-m.v_beta, Scalar(0), m.v_beta, flux.df(u) + m.alpha * m.sgn_gamma,
                     O::NotStrict};
  if (e.lambda1 < e.lambda2 && e.lambda2 < e.lambda3) {
    if (e.lambda3 < e.lambda4)
      e.ordering_tag = O::AscendingWithFastLast;
    else if (e.lambda4 < e.lambda1)
      e.ordering_tag = O::FastFirstThenAscending;
  }
  return e;
}

/// max over cells and families of |lambda_k(U_i)|.
template <typename Scalar>
Scalar max_signal_speed(const CellArray<Scalar>& cells, const ModelParams<Scalar>& m,
                        const FluxModel<Scalar>& flux) {
  Scalar fast = 0;
  const Scalar shift = m.alpha * m.sgn_gamma;
  for (Eigen::Index i = 0; i < cells.cols(); ++i)
    fast = std::max(fast, std::abs(flux.df(cells(kU, i)) + shift));
  return std::max(fast, m.v_beta);
}

template <typename Scalar>
Scalar max_signal_speed(const Field<Scalar>& field, const ModelParams<Scalar>& m,
                        const FluxModel<Scalar>& flux) {
  return max_signal_speed(field.cells, m, flux);
}

template <typename Scalar>
StateVec<Scalar> riemann_invariants(const StateVec<Scalar>& U, const ModelParams<Scalar>& m,
                                    const FluxModel<Scalar>& flux) {
  return StateVec<Scalar>(U[kW] + m.v_beta * U[kP], m.alpha * U[kU] - U[kPsi],
                          U[kW] - m.v_beta * U[kP], m.sgn_gamma * flux.f(U[kU]) + U[kPsi]);
}

/// E = sgn(gamma) F(u) + |gamma| p^2/2 + psi^2/(2 alpha) + beta w^2/2.
template <typename Scalar>
Scalar entropy(const StateVec<Scalar>& U, const ModelParams<Scalar>& m,
               const FluxModel<Scalar>& flux) {
  return m.sgn_gamma * flux.F(U[kU]) + Scalar(0.5) * m.abs_gamma() * U[kP] * U[kP] +
         U[kPsi] * U[kPsi] / (Scalar(2) * m.alpha) + Scalar(0.5) * m.beta * U[kW] * U[kW];
}

/// Q = sgn(gamma) (f^2 + psi^2)/2 + f psi - |gamma| p w.
template <typename Scalar>
Scalar entropy_flux(const StateVec<Scalar>& U, const ModelParams<Scalar>& m,
                    const FluxModel<Scalar>& flux) {
  const Scalar fu = flux.f(U[kU]);
  const Scalar psi = U[kPsi];
  return m.sgn_gamma * Scalar(0.5) * (fu * fu + psi * psi) + fu * psi -
         m.abs_gamma() * U[kP] * U[kW];
}

template <typename Scalar>
StateVec<Scalar> entropy_gradient(const StateVec<Scalar>& U, const ModelParams<Scalar>& m,
                                  const FluxModel<Scalar>& flux) {
  return StateVec<Scalar>(m.sgn_gamma * flux.f(U[kU]), U[kPsi] / m.alpha, m.beta * U[kW],
                          m.abs_gamma() * U[kP]);
}

/// E(U) - E(Uref) - grad E(Uref) . (U - Uref), written out term by term.
template <typename Scalar>
Scalar relative_entropy(const StateVec<Scalar>& U, const StateVec<Scalar>& Uref,
                        const ModelParams<Scalar>& m, const FluxModel<Scalar>& flux) {
  const Scalar u = U[kU], ub = Uref[kU];
  const Scalar dp = U[kP] - Uref[kP];
  const Scalar dw = U[kW] - Uref[kW];
  const Scalar dpsi = U[kPsi] - Uref[kPsi];
  return m.sgn_gamma * (flux.F(u) - flux.F(ub) - flux.f(ub) * (u - ub)) +
         Scalar(0.5) * m.abs_gamma() * dp * dp + Scalar(0.5) * m.beta * dw * dw +
         dpsi * dpsi / (Scalar(2) * m.alpha);
}

}  // namespace relaxkdv
