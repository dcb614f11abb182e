#include "relaxkdv/diagnostics.hpp"

#include <cmath>
#include <cstring>

#include "relaxkdv/model.hpp"

namespace relaxkdv {

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same_field(const Fieldd& a, const Fieldd& b) {
  if (a.size() != b.size() || a.boundary != b.boundary || !same_bits(a.time, b.time))
    return false;
  return std::memcmp(a.cells.data(), b.cells.data(), sizeof(double) * a.cells.size()) == 0;
}

}  // namespace

bool identical(const RunRecord& a, const RunRecord& b) {
  if (!(a.config == b.config) || a.steps != b.steps ||
      !same_bits(a.max_abs_energy_error, b.max_abs_energy_error))
    return false;
  if (a.times.size() != b.times.size() || a.snapshots.size() != b.snapshots.size() ||
      a.scalars.size() != b.scalars.size())
    return false;
  for (std::size_t k = 0; k < a.times.size(); ++k)
    if (!same_bits(a.times[k], b.times[k])) return false;
  for (std::size_t k = 0; k < a.snapshots.size(); ++k)
    if (!same_field(a.snapshots[k], b.snapshots[k])) return false;
  for (std::size_t k = 0; k < a.scalars.size(); ++k)
    if (!(a.scalars[k] == b.scalars[k])) return false;
  return true;
}

double total_energy(const Fieldd& field, const ModelParamsd& m, const FluxModeld& flux) {
  double s = 0;
  for (Eigen::Index i = 0; i < field.size(); ++i) s += entropy<double>(field.cells.col(i), m, flux);
  return s * field.grid.dx();
}

double amplitude_error(const Fieldd& field, double target) {
  return std::abs(field.u().maxCoeff() - target);
}

double l2_error(const Fieldd& field, const ExactFn& exact) {
  double s = 0;
  for (Eigen::Index i = 0; i < field.size(); ++i) {
    const double d = field.cells(kU, i) - exact(field.grid.center(i), field.time);
    s += d * d;
  }
  return std::sqrt(s);
}

double l2_error_weighted(const Fieldd& field, const ExactFn& exact) {
  return std::sqrt(field.grid.dx()) * l2_error(field, exact);
}

double shock_position(const Fieldd& field, double u_left, double u_right) {
  const double mid = 0.5 * (u_left + u_right);
  const auto u = field.u();
  for (Eigen::Index i = 0; i < field.size(); ++i) {
    const double a = u[i] - mid;
    if (a == 0) return field.grid.center(i);
    if (i + 1 == field.size()) break;
    const double b = u[i + 1] - mid;
    if ((a < 0) != (b < 0)) {
      const double x0 = field.grid.center(i);
      return x0 + field.grid.dx() * a / (a - b);
    }
  }
  throw LocateError("shock_position: u never crosses the mid-level");
}

std::vector<double> eoc(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 2) throw DomainError("eoc needs at least two pairs");
  for (const auto& [h, e] : pairs) {
    if (!(e > 0)) throw DomainError("eoc: errors must be positive");
    if (!(h > 0)) throw DomainError("eoc: parameters must be positive");
  }
  const bool increasing = pairs[1].first > pairs[0].first;
  std::vector<double> orders;
  for (std::size_t k = 0; k + 1 < pairs.size(); ++k) {
    const double h0 = pairs[k].first, h1 = pairs[k + 1].first;
    if (h0 == h1 || (h1 > h0) != increasing)
      throw DomainError("eoc: parameters must be strictly monotone");
    orders.push_back(std::log(pairs[k].second / pairs[k + 1].second) / std::log(h0 / h1));
  }
  return orders;
}

std::vector<double> energy_error_series(const RunRecord& record) {
  std::vector<double> out;
  if (record.scalars.empty()) return out;
  const double e0 = record.scalars.front().total_energy;
  for (const auto& s : record.scalars) out.push_back(s.total_energy - e0);
  return out;
}

}  // namespace relaxkdv
