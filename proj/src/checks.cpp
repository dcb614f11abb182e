#include "relaxkdv/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "relaxkdv/dsw.hpp"
#include "relaxkdv/flux.hpp"
#include "relaxkdv/initial_data.hpp"
#include "relaxkdv/model.hpp"
#include "relaxkdv/scheme.hpp"
#include "relaxkdv/special_functions.hpp"

namespace relaxkdv {

namespace {

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(unsigned seed) : rng(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
  double log_uniform(double a, double b) {
    return std::exp(uniform(std::log(a), std::log(b)));
  }
  ModelParamsd params() {
    const double g = log_uniform(1e-4, 1.0) * (uniform(0, 1) < 0.5 ? -1 : 1);
    return ModelParamsd::make(log_uniform(1, 1e3), log_uniform(1e-6, 1), g, 0.0);
  }
  FluxModeld flux() {
    switch (static_cast<int>(uniform(0, 4))) {
      case 0: return FluxModeld::kdv6();
      case 1: return FluxModeld::burgers();
      case 2: return FluxModeld::cubic();
      default: return FluxModeld::gardner(1.0);
    }
  }
  StateVecd state() {
    return StateVecd(uniform(-2, 2), uniform(-2, 2), uniform(-2, 2), uniform(-2, 2));
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

CheckResult bounded(const std::string& name, double worst, double tol) {
  return {name, worst <= tol, "worst " + fmt(worst) + " (tolerance " + fmt(tol) + ")"};
}

template <typename Fn>
StateVecd fd_gradient(Fn&& fn, const StateVecd& U) {
  StateVecd g;
  for (int k = 0; k < 4; ++k) {
    const double h = 1e-6 * (1 + std::abs(U[k]));
    StateVecd a = U, b = U;
    a[k] += h;
    b[k] -= h;
    g[k] = (fn(a) - fn(b)) / (2 * h);
  }
  return g;
}

double trapezoid_elliptic(double s, bool first_kind) {
  const int n = 4000;
  const double h = std::numbers::pi / 2 / n;
  double sum = 0;
  for (int j = 0; j <= n; ++j) {
    const double st = std::sin(j * h);
    const double r = 1 - s * s * st * st;
    const double v = first_kind ? 1 / std::sqrt(r) : std::sqrt(r);
    sum += (j == 0 || j == n) ? 0.5 * v : v;
  }
  return sum * h;
}

/// sn' = cn dn, cn' = -sn dn, dn' = -s^2 sn cn from (0, 1, 1).
double rk4_dn(double x, double s) {
  const int n = std::max(1, static_cast<int>(std::ceil(std::abs(x) / 1e-3)));
  const double h = x / n;
  Eigen::Vector3d y(0, 1, 1);
  auto rhs = [s](const Eigen::Vector3d& v) {
    return Eigen::Vector3d(v[1] * v[2], -v[0] * v[2], -s * s * v[0] * v[1]);
  };
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d k1 = rhs(y), k2 = rhs(y + 0.5 * h * k1), k3 = rhs(y + 0.5 * h * k2),
                          k4 = rhs(y + h * k3);
    y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return y[2];
}

double dsw_residual(double xi) {
  const double s = dsw_modulus(xi);
  if (s == 0 || s == 1) return 0;
  const double K = elliptic_K(s), E = elliptic_E(s), q = 1 - s * s;
  return std::abs((1 + s * s) / 3 - 2.0 / 3 * s * s * q * K / (E - q * K) - xi);
}

}  // namespace

std::vector<CheckResult> run_property_checks(unsigned seed) {
  std::vector<CheckResult> out;
  Sampler rnd(seed);

  {
    double worst = 0;
    for (int t = 0; t < 1000; ++t) {
      const auto m = rnd.params();
      const auto fl = rnd.flux();
      const double u = rnd.uniform(-2, 2);
      Eigen::EigenSolver<Eigen::Matrix4d> es(jacobian(u, m, fl), false);
      std::array<double, 4> dense{}, ours{};
      for (int k = 0; k < 4; ++k) dense[k] = es.eigenvalues()[k].real();
      const auto ev = eigenvalues(u, m, fl).values();
      for (int k = 0; k < 4; ++k) ours[k] = ev[k];
      std::sort(dense.begin(), dense.end());
      std::sort(ours.begin(), ours.end());
      const double scale = std::max(1.0, std::abs(ours[0]) + std::abs(ours[3]));
      for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(dense[k] - ours[k]) / scale);
    }
    out.push_back(bounded("eigenvalues vs dense eigensolver", worst, 1e-9));
  }

  {
    double worst = 0;
    for (int t = 0; t < 200; ++t) {
      const auto m = rnd.params();
      const auto fl = rnd.flux();
      const StateVecd U = rnd.state();
      const StateVecd lhs = jacobian(U[kU], m, fl).transpose() * entropy_gradient(U, m, fl);
      const StateVecd rhs =
          fd_gradient([&](const StateVecd& V) { return entropy_flux(V, m, fl); }, U);
      worst = std::max(worst, (lhs - rhs).norm() / std::max(1.0, rhs.norm()));
    }
    out.push_back(bounded("entropy pair compatibility", worst, 1e-5));
  }

  {
    double worst = 0;
    for (int t = 0; t < 1000; ++t) {
      const auto m = rnd.params();
      const auto fl = rnd.flux();
      const StateVecd U = rnd.state();
      const StateVecd g = entropy_gradient(U, m, fl), s = source_vector(U, m);
      worst = std::max(worst, std::abs(g.dot(s)) / std::max(1e-300, g.norm() * s.norm()));
    }
    out.push_back(bounded("entropy gradient orthogonal to source", worst, 1e-14));
  }

  {
    double worst = 0;
    for (int t = 0; t < 200; ++t) {
      const auto m = rnd.params();
      const auto fl = rnd.flux();
      const StateVecd U = rnd.state();
      const Eigen::Matrix4d A = jacobian(U[kU], m, fl);
      const auto lam = eigenvalues(U[kU], m, fl).values();
      for (int k = 0; k < 4; ++k) {
        const StateVecd g = fd_gradient(
            [&](const StateVecd& V) { return riemann_invariants(V, m, fl)[k]; }, U);
        const StateVecd r = A.transpose() * g - lam[k] * g;
        const double scale = std::max(1.0, std::abs(lam[k])) * std::max(1.0, g.norm());
        worst = std::max(worst, r.norm() / scale);
      }
    }
    out.push_back(bounded("Riemann invariant gradients are left eigenvectors", worst, 1e-6));
  }

  {
    double worst = 0;
    for (int t = 0; t < 1000; ++t) {
      const auto m = rnd.params();
      const double dt = rnd.log_uniform(1e-8, 1e-1);
      const StateVecd rhs = rnd.state();
      const StateVecd x = implicit_source_solve(rhs, dt, m);
      const StateVecd res = x - 0.5 * dt * (source_matrix(m) * x) - rhs;
      worst = std::max(worst, res.norm() / std::max(1.0, rhs.norm() + x.norm()));
    }
    out.push_back(bounded("implicit source solve residual", worst, 1e-12));
  }

  {
    double worst = 0;
    const double h = 1e-5;
    for (const auto& fl : {FluxModeld::kdv6(), FluxModeld::burgers(), FluxModeld::cubic(),
                           FluxModeld::mkdv(), FluxModeld::gardner(1.0)}) {
      for (int t = 0; t < 100; ++t) {
        const double u = rnd.uniform(-2, 2);
        const double d1 = (fl.f(u + h) - fl.f(u - h)) / (2 * h);
        const double d0 = (fl.F(u + h) - fl.F(u - h)) / (2 * h);
        worst = std::max(worst, std::abs(d1 - fl.df(u)) / (1 + std::abs(fl.df(u))));
        worst = std::max(worst, std::abs(d0 - fl.f(u)) / (1 + std::abs(fl.f(u))));
      }
    }
    out.push_back(bounded("flux derivative consistency", worst, 1e-6));
  }

  {
    double worst = 0;
    for (int j = 1; j <= 9; ++j) {
      const double s = 0.1 * j;
      worst = std::max(worst, std::abs(elliptic_K(s) - trapezoid_elliptic(s, true)));
      worst = std::max(worst, std::abs(elliptic_E(s) - trapezoid_elliptic(s, false)));
    }
    out.push_back(bounded("K and E vs quadrature", worst, 1e-10));
  }

  {
    double worst = 0;
    for (double s : {0.3, 0.7, 0.95}) {
      for (double x : {0.25, 1.0, 2.5}) worst = std::max(worst, std::abs(jacobi_dn(x, s) - rk4_dn(x, s)));
    }
    out.push_back(bounded("dn vs ODE integration", worst, 1e-9));
  }

  {
    double worst = std::abs(dsw_modulus(-1.0)) + std::abs(dsw_modulus(2.0 / 3) - 1);
    for (int j = 1; j < 200; ++j) worst = std::max(worst, dsw_residual(-1 + (5.0 / 3) * j / 200));
    out.push_back(bounded("DSW modulus equation residual", worst, 1e-9));
  }

  {
    double worst = 0;
    const auto m = ModelParamsd::make(1e3, 1e-6, -1e-2, 1e-3);
    const auto fl = FluxModeld::kdv6();
    for (auto b : {BoundaryKind::Periodic, BoundaryKind::PseudoNeumann}) {
      Fieldd f(Gridd(-1, 1, 64), b);
      f.cells.row(kU).setConstant(0.3);
      Stepper<double> st(m, fl);
      for (int n = 0; n < 100; ++n) st.step(f);
      worst = std::max(worst, (f.u().array() - 0.3).abs().maxCoeff() + f.cells.bottomRows(3).cwiseAbs().maxCoeff());
    }
    out.push_back(bounded("equilibrium states are fixed points", worst, 1e-13));
  }

  {
    const auto m = ModelParamsd::make(1e3, 1e-6, -1e-2, 0.0);
    const auto fl = FluxModeld::kdv6();
    const Gridd g(-2, 2, 200);
    Fieldd f = prepare_initial(make_profile("soliton1", {{"gamma", -1e-2}}), g, m, fl);
    const double mass0 = f.u().sum() * g.dx();
    Stepper<double> st(m, fl);
    for (int n = 0; n < 2000; ++n) st.step(f);
    const double drift = std::abs(f.u().sum() * g.dx() - mass0) / std::abs(mass0);
    out.push_back(bounded("periodic mass conservation (2000 steps)", drift, 1e-10));
  }

  return out;
}

}  // namespace relaxkdv
