#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "relaxkdv/core.hpp"
#include "relaxkdv/flux.hpp"
#include "relaxkdv/model.hpp"

// Semi-implicit two-step Lax-Wendroff integrator:
//
//   predictor   U_{i+1/2} = (I - dt/2 S)^{-1} [ (U_i + U_{i+1})/2 - dt/(2dx) (f(U_{i+1}) - f(U_i)) ]
//   corrector   U*_i = U_i - dt/dx (f(U_{i+1/2}) - f(U_{i-1/2})) + dt/2 S (U_{i+1/2} + U_{i-1/2})
//   diffusion   U^{n+1}_i = U*_i + dt/dx^2 D (U*_{i+1} - 2U*_i + U*_{i-1}),  D = diag(eps, eps, 0, eps)
//
// with dt = cfl dx / (lambda_max + 2 eps / dx). One ghost cell per side.

namespace relaxkdv {

template <typename Scalar>
struct StepReport {
  Scalar dt_used{};
  Scalar max_speed{};
  Scalar post_energy{};
};

template <typename Scalar>
Scalar cfl_dt(Scalar max_speed, Scalar epsilon, Scalar dx, Scalar cfl) {
  const Scalar denom = max_speed + Scalar(2) * epsilon / dx;
  if (!(denom > 0))
    throw DegenerateStateError("no wave speeds and no diffusion: cannot choose a time step");
  return cfl * dx / denom;
}

template <typename Scalar>
Scalar compute_dt(const Field<Scalar>& field, const ModelParams<Scalar>& m,
                  const FluxModel<Scalar>& flux) {
  return cfl_dt(max_signal_speed(field, m, flux), m.epsilon, field.grid.dx(), m.cfl);
}

/// Solves (I - dt/2 S) X = rhs. Only the (psi, w) block couples; its
/// determinant 1 + dt^2 alpha / (4 beta) is never below one.
template <typename Scalar>
StateVec<Scalar> implicit_source_solve(const StateVec<Scalar>& rhs, Scalar dt,
                                       const ModelParams<Scalar>& m) {
  const Scalar a = Scalar(0.5) * dt * m.alpha;  // psi + a w = r_psi
  const Scalar b = Scalar(0.5) * dt / m.beta;   // -b psi + w = r_w
  const Scalar inv_det = Scalar(1) / (Scalar(1) + a * b);
  StateVec<Scalar> x = rhs;
  x[kPsi] = (rhs[kPsi] - a * rhs[kW]) * inv_det;
  x[kW] = (rhs[kW] + b * rhs[kPsi]) * inv_det;
  return x;
}

/// Writes cells into out[:, 1..N] and the two ghost columns.
template <typename Scalar>
void fill_ghosts(const CellArray<Scalar>& cells, BoundaryKind boundary, CellArray<Scalar>& out) {
  const Eigen::Index n = cells.cols();
  out.resize(4, n + 2);
  out.middleCols(1, n) = cells;
  if (boundary == BoundaryKind::Periodic) {
    out.col(0) = cells.col(n - 1);
    out.col(n + 1) = cells.col(0);
  } else {
    // zero gradient for u, psi, w; odd reflection puts p = 0 on the wall
    out.col(0) = cells.col(0);
    out.col(n + 1) = cells.col(n - 1);
    out(kP, 0) = -cells(kP, 0);
    out(kP, n + 1) = -cells(kP, n - 1);
  }
}

template <typename Scalar>
CellArray<Scalar> fill_ghosts(const Field<Scalar>& field) {
  CellArray<Scalar> out;
  fill_ghosts(field.cells, field.boundary, out);
  return out;
}

/// Reusable scratch storage so the time loop does not allocate.
template <typename Scalar>
class Stepper {
 public:
  Stepper(ModelParams<Scalar> m, FluxModel<Scalar> flux)
      : m_(std::move(m)), flux_(std::move(flux)) {}

  const ModelParams<Scalar>& params() const { return m_; }
  const FluxModel<Scalar>& flux() const { return flux_; }

  /// Interface states from a ghost-extended array (N+2 columns -> N+1).
  void predictor(const CellArray<Scalar>& ext, Scalar dt, Scalar dx, CellArray<Scalar>& iface) {
    const Eigen::Index ne = ext.cols();
    ext_flux_.resize(4, ne);
    for (Eigen::Index j = 0; j < ne; ++j)
      ext_flux_.col(j) = flux_vector<Scalar>(ext.col(j), m_, flux_);
    iface.resize(4, ne - 1);
    const Scalar lam = Scalar(0.5) * dt / dx;
    for (Eigen::Index k = 0; k + 1 < ne; ++k) {
      const StateVec<Scalar> rhs = Scalar(0.5) * (ext.col(k) + ext.col(k + 1)) -
                                   lam * (ext_flux_.col(k + 1) - ext_flux_.col(k));
      iface.col(k) = implicit_source_solve<Scalar>(rhs, dt, m_);
    }
  }

  /// Hyperbolic-plus-source update of cells from N+1 interface states.
  void corrector(CellArray<Scalar>& cells, const CellArray<Scalar>& iface, Scalar dt, Scalar dx) {
    const Eigen::Index n = cells.cols();
    iface_flux_.resize(4, n + 1);
    for (Eigen::Index k = 0; k <= n; ++k)
      iface_flux_.col(k) = flux_vector<Scalar>(iface.col(k), m_, flux_);
    const Scalar lam = dt / dx;
    const Scalar half_dt = Scalar(0.5) * dt;
    for (Eigen::Index i = 0; i < n; ++i) {
      const StateVec<Scalar> sum = iface.col(i) + iface.col(i + 1);
      cells.col(i) += -lam * (iface_flux_.col(i + 1) - iface_flux_.col(i)) +
                      half_dt * source_vector<Scalar>(sum, m_);
    }
  }

  void diffusion(CellArray<Scalar>& cells, BoundaryKind boundary, Scalar dt, Scalar dx) {
    if (m_.epsilon == 0) return;
    fill_ghosts(cells, boundary, ext_);
    const Scalar mu = m_.epsilon * dt / (dx * dx);
    const Eigen::Index n = cells.cols();
    for (Eigen::Index i = 0; i < n; ++i) {
      const StateVec<Scalar> lap = ext_.col(i + 2) - Scalar(2) * ext_.col(i + 1) + ext_.col(i);
      cells(kU, i) += mu * lap[kU];
      cells(kPsi, i) += mu * lap[kPsi];
      cells(kP, i) += mu * lap[kP];
    }
  }

  /// One full update with a prescribed dt. Throws NumericalError on the
  /// first non-finite cell.
  void advance(Field<Scalar>& field, Scalar dt) {
    const Scalar dx = field.grid.dx();
    fill_ghosts(field.cells, field.boundary, ext_);
    predictor(ext_, dt, dx, iface_);
    corrector(field.cells, iface_, dt, dx);
    diffusion(field.cells, field.boundary, dt, dx);
    field.time += dt;
    check_finite(field);
  }

  /// CFL-limited step, optionally clipped to max_dt.
  StepReport<Scalar> step(Field<Scalar>& field,
                          Scalar max_dt = std::numeric_limits<Scalar>::infinity()) {
    StepReport<Scalar> r;
    r.max_speed = max_signal_speed(field, m_, flux_);
    r.dt_used = cfl_dt(r.max_speed, m_.epsilon, field.grid.dx(), m_.cfl);
    if (r.dt_used > max_dt) r.dt_used = max_dt;
    advance(field, r.dt_used);
    r.post_energy = total_entropy(field);
    return r;
  }

  Scalar total_entropy(const Field<Scalar>& field) const {
    Scalar s = 0;
    for (Eigen::Index i = 0; i < field.cells.cols(); ++i)
      s += entropy<Scalar>(field.cells.col(i), m_, flux_);
    return s * field.grid.dx();
  }

 private:
  static void check_finite(const Field<Scalar>& field) {
    if (field.cells.allFinite()) return;
    for (Eigen::Index i = 0; i < field.cells.cols(); ++i) {
      if (!field.cells.col(i).allFinite()) {
        std::ostringstream os;
        os << "non-finite state in cell " << i << " (x = " << field.grid.center(i)
           << ") at t = " << field.time;
        throw NumericalError(os.str());
      }
    }
  }

  ModelParams<Scalar> m_;
  FluxModel<Scalar> flux_;
  CellArray<Scalar> ext_, iface_, ext_flux_, iface_flux_;
};

// Value-semantics wrappers around Stepper.

template <typename Scalar>
CellArray<Scalar> predictor(const Field<Scalar>& field, Scalar dt, const ModelParams<Scalar>& m,
                            const FluxModel<Scalar>& flux) {
  Stepper<Scalar> s(m, flux);
  CellArray<Scalar> iface;
  s.predictor(fill_ghosts(field), dt, field.grid.dx(), iface);
  return iface;
}

template <typename Scalar>
Field<Scalar> corrector(const Field<Scalar>& field, const CellArray<Scalar>& iface, Scalar dt,
                        const ModelParams<Scalar>& m, const FluxModel<Scalar>& flux) {
  if (iface.cols() != field.size() + 1)
    throw ConfigError("corrector needs N+1 interface states");
  Stepper<Scalar> s(m, flux);
  Field<Scalar> out = field;
  s.corrector(out.cells, iface, dt, field.grid.dx());
  return out;
}

template <typename Scalar>
Field<Scalar> diffusion_step(const Field<Scalar>& field, Scalar dt, const ModelParams<Scalar>& m) {
  Stepper<Scalar> s(m, FluxModel<Scalar>::burgers());
  Field<Scalar> out = field;
  s.diffusion(out.cells, out.boundary, dt, field.grid.dx());
  return out;
}

template <typename Scalar>
std::pair<Field<Scalar>, StepReport<Scalar>> step(
    const Field<Scalar>& field, const ModelParams<Scalar>& m, const FluxModel<Scalar>& flux,
    Scalar max_dt = std::numeric_limits<Scalar>::infinity()) {
  Stepper<Scalar> s(m, flux);
  Field<Scalar> out = field;
  const StepReport<Scalar> r = s.step(out, max_dt);
  return {std::move(out), r};
}

}  // namespace relaxkdv
