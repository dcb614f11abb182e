#include "relaxkdv/oracles.hpp"

#include <cmath>

#include "relaxkdv/model.hpp"
#include "relaxkdv/scheme.hpp"

namespace relaxkdv {

double exact_traveling_wave(const Profile& profile, double x, double t,
                            std::optional<std::pair<double, double>> period) {
  if (!profile.speed)
    throw DomainError("exact_traveling_wave: profile '" + profile.name + "' has no wave speed");
  double xi = x - *profile.speed * t;
  if (period) {
    const auto [a, b] = *period;
    const double len = b - a;
    xi = a + std::fmod(xi - a, len);
    if (xi < a) xi += len;
    if (xi >= b) xi -= len;
  }
  return profile.eval(xi);
}

std::vector<double> energy_decay_reference(const RunRecord& record, const ModelParamsd& m,
                                           const FluxModeld& flux) {
  std::vector<double> out;
  if (record.snapshots.empty()) return out;
  double e = total_energy(record.snapshots.front(), m, flux);
  out.push_back(e);
  CellArray<double> ext;
  for (std::size_t k = 0; k + 1 < record.snapshots.size(); ++k) {
    const Fieldd& f = record.snapshots[k];
    const double dt = record.snapshots[k + 1].time - f.time;
    double rate = 0;
    if (m.epsilon > 0) {
      fill_ghosts(f.cells, f.boundary, ext);
      const double dx = f.grid.dx();
      double s = 0;
      for (Eigen::Index i = 0; i < f.size(); ++i) {
        const StateVecd d = (ext.col(i + 2) - ext.col(i)) / (2 * dx);
        const double u = f.cells(kU, i);
        s += m.sgn_gamma * flux.df(u) * d[kU] * d[kU] + m.abs_gamma() * d[kP] * d[kP] +
             d[kPsi] * d[kPsi] / m.alpha;
      }
      rate += m.epsilon * s * dx;
    }
    if (f.boundary == BoundaryKind::PseudoNeumann) {
      if (ext.cols() != f.size() + 2) fill_ghosts(f.cells, f.boundary, ext);
      const Eigen::Index n = f.size();
      const StateVecd left = 0.5 * (ext.col(0) + ext.col(1));
      const StateVecd right = 0.5 * (ext.col(n) + ext.col(n + 1));
      rate += entropy_flux<double>(right, m, flux) - entropy_flux<double>(left, m, flux);
    }
    e -= dt * rate;
    out.push_back(e);
  }
  return out;
}

std::optional<ExactFn> make_exact_solution(const RunConfig& config, const Profile& profile) {
  switch (config.oracle) {
    case OracleKind::TravelingWave: {
      std::optional<std::pair<double, double>> period;
      if (config.boundary == BoundaryKind::Periodic)
        period = std::make_pair(config.x_left, config.x_right);
      return ExactFn([profile, period](double x, double t) {
        return exact_traveling_wave(profile, x, t, period);
      });
    }
    case OracleKind::TwoSoliton: {
      auto get = [&](const char* k, double d) {
        auto it = config.case_params.find(k);
        return it == config.case_params.end() ? d : it->second;
      };
      const double v1 = get("v1", 4), v2 = get("v2", 1), x1 = get("x1", -9), x2 = get("x2", -2);
      return ExactFn([=](double x, double t) { return two_soliton_exact(x, t, v1, v2, x1, x2); });
    }
    case OracleKind::Dsw:
    case OracleKind::None:
      break;
  }
  return std::nullopt;
}

}  // namespace relaxkdv
