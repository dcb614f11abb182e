#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace relaxkdv {

// Error taxonomy. The CLI maps each family onto an exit code.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateStateError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Per-cell unknowns, ordered (u, psi, w, p).
template <typename Scalar>
using StateVec = Eigen::Matrix<Scalar, 4, 1>;

template <typename Scalar>
using Mat4 = Eigen::Matrix<Scalar, 4, 4>;

/// One column per cell.
template <typename Scalar>
using CellArray = Eigen::Matrix<Scalar, 4, Eigen::Dynamic>;

enum Component : Eigen::Index { kU = 0, kPsi = 1, kW = 2, kP = 3 };

/// Relaxation and physics constants. Construct through make(); the fields are
/// public for reading but every instance produced by make() satisfies the
/// sign constraints and v_beta^2 * beta == |gamma|.
template <typename Scalar>
struct ModelParams {
  Scalar alpha{};
  Scalar beta{};
  Scalar gamma{};
  Scalar epsilon{};
  Scalar sgn_gamma{};
  Scalar v_beta{};
  Scalar cfl{};

  static ModelParams make(Scalar alpha, Scalar beta, Scalar gamma, Scalar epsilon,
                          Scalar cfl = Scalar(0.9)) {
    using std::isfinite;
    if (!(isfinite(alpha) && alpha > 0)) throw ConfigError("alpha must be positive");
    if (!(isfinite(beta) && beta > 0)) throw ConfigError("beta must be positive");
    if (!isfinite(gamma) || gamma == 0) throw ConfigError("gamma must be nonzero");
    if (!(isfinite(epsilon) && epsilon >= 0)) throw ConfigError("epsilon must be nonnegative");
    if (!(cfl > 0 && cfl <= 1)) throw ConfigError("cfl must lie in (0, 1]");
    ModelParams m;
    m.alpha = alpha;
    m.beta = beta;
    m.gamma = gamma;
    m.epsilon = epsilon;
    m.sgn_gamma = gamma > 0 ? Scalar(1) : Scalar(-1);
    m.v_beta = std::sqrt(std::abs(gamma) / beta);
    m.cfl = cfl;
    return m;
  }

  Scalar abs_gamma() const { return std::abs(gamma); }
};

enum class BoundaryKind { Periodic, PseudoNeumann };

inline std::string to_string(BoundaryKind b) {
  return b == BoundaryKind::Periodic ? "periodic" : "pseudo_neumann";
}

inline BoundaryKind boundary_from_string(const std::string& s) {
  if (s == "periodic") return BoundaryKind::Periodic;
  if (s == "pseudo_neumann" || s == "pseudo-neumann") return BoundaryKind::PseudoNeumann;
  throw ConfigError("unknown boundary kind '" + s + "'");
}

/// Uniform cell-centred grid on [x_left, x_right].
template <typename Scalar>
class Grid {
 public:
  Grid(Scalar x_left, Scalar x_right, Eigen::Index n_cells)
      : x_left_(x_left), x_right_(x_right), n_(n_cells) {
    if (!(x_right > x_left)) throw ConfigError("x_right must exceed x_left");
    if (n_cells < 4) throw ConfigError("n_cells must be at least 4");
    dx_ = (x_right - x_left) / static_cast<Scalar>(n_cells);
  }

  Scalar x_left() const { return x_left_; }
  Scalar x_right() const { return x_right_; }
  Scalar length() const { return x_right_ - x_left_; }
  Eigen::Index n_cells() const { return n_; }
  Scalar dx() const { return dx_; }
  Scalar center(Eigen::Index i) const {
    return x_left_ + (static_cast<Scalar>(i) + Scalar(0.5)) * dx_;
  }

  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> centers() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x(n_);
    for (Eigen::Index i = 0; i < n_; ++i) x[i] = center(i);
    return x;
  }

 private:
  Scalar x_left_;
  Scalar x_right_;
  Eigen::Index n_;
  Scalar dx_;
};

/// Evolving simulation state.
template <typename Scalar>
struct Field {
  Grid<Scalar> grid;
  CellArray<Scalar> cells;
  BoundaryKind boundary = BoundaryKind::Periodic;
  Scalar time = 0;

  Field(Grid<Scalar> g, BoundaryKind b)
      : grid(g), cells(CellArray<Scalar>::Zero(4, g.n_cells())), boundary(b) {}

  Field(Grid<Scalar> g, CellArray<Scalar> c, BoundaryKind b, Scalar t = 0)
      : grid(g), cells(std::move(c)), boundary(b), time(t) {
    if (cells.cols() != grid.n_cells())
      throw ConfigError("cell array length does not match the grid");
  }

  Eigen::Index size() const { return cells.cols(); }
  auto u() const { return cells.row(kU); }
  auto psi() const { return cells.row(kPsi); }
  auto w() const { return cells.row(kW); }
  auto p() const { return cells.row(kP); }
};

using StateVecd = StateVec<double>;
using ModelParamsd = ModelParams<double>;
using Gridd = Grid<double>;
using Fieldd = Field<double>;

}  // namespace relaxkdv
