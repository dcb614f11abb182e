#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "relaxkdv/config.hpp"
#include "relaxkdv/core.hpp"
#include "relaxkdv/flux.hpp"

namespace relaxkdv {

class LocateError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct InstantScalars {
  double dt = 0;  // step that landed on this instant (0 at t = 0)
  double max_speed = 0;
  double total_energy = 0;
  std::optional<double> e_a;
  std::optional<double> e_l2;           // unweighted cell sum
  std::optional<double> e_l2_weighted;  // sqrt(dx) times the above

  bool operator==(const InstantScalars&) const = default;
};

struct RunRecord {
  RunConfig config;
  std::vector<double> times;
  std::vector<Fieldd> snapshots;
  std::vector<InstantScalars> scalars;
  double max_abs_energy_error = 0;  // over every step, not only output instants
  long steps = 0;
};

/// Bitwise comparison of everything a run produces.
bool identical(const RunRecord& a, const RunRecord& b);

using ExactFn = std::function<double(double x, double t)>;

double total_energy(const Fieldd& field, const ModelParamsd& m, const FluxModeld& flux);

/// |max_i u_i - target|, raw grid maximum.
double amplitude_error(const Fieldd& field, double target);

/// sqrt(sum_i (u_i - exact(x_i, t))^2), no dx weight.
double l2_error(const Fieldd& field, const ExactFn& exact);
double l2_error_weighted(const Fieldd& field, const ExactFn& exact);

/// First crossing of (u_left + u_right)/2 scanning left to right, linearly
/// interpolated between cell centres.
double shock_position(const Fieldd& field, double u_left, double u_right);

/// order_k = log(e_k / e_{k+1}) / log(h_k / h_{k+1}).
std::vector<double> eoc(const std::vector<std::pair<double, double>>& pairs);

/// E(t_k) - E(0) over the recorded instants.
std::vector<double> energy_error_series(const RunRecord& record);

}  // namespace relaxkdv
