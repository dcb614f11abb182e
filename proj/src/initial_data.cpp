#include "relaxkdv/initial_data.hpp"

#include <cmath>
#include <set>

namespace relaxkdv {
namespace {

// Derivatives of sech^2(z) and tanh(z) in z.
struct SechSquared {
  static double v(double z) {
    const double s = 1.0 / std::cosh(z);
    return s * s;
  }
  static double d1(double z) {
    const double s = 1.0 / std::cosh(z), t = std::tanh(z);
    return -2.0 * s * s * t;
  }
  static double d2(double z) {
    const double s = 1.0 / std::cosh(z), t = std::tanh(z);
    return 2.0 * s * s * (3.0 * t * t - 1.0);
  }
  static double d3(double z) {
    const double s = 1.0 / std::cosh(z), t = std::tanh(z);
    return 8.0 * s * s * t * (2.0 - 3.0 * t * t);
  }
};

struct Tanh {
  static double v(double z) { return std::tanh(z); }
  static double d1(double z) { return SechSquared::v(z); }
  static double d2(double z) { return SechSquared::d1(z); }
  static double d3(double z) { return SechSquared::d2(z); }
};

class ParamReader {
 public:
  ParamReader(std::string profile, const ProfileParams& p, std::set<std::string> allowed)
      : profile_(std::move(profile)), p_(p) {
    for (const auto& [k, v] : p_)
      if (!allowed.count(k))
        throw ConfigError("profile '" + profile_ + "' has no parameter '" + k + "'");
  }
  double get(const std::string& key, double fallback) const {
    auto it = p_.find(key);
    return it == p_.end() ? fallback : it->second;
  }
  double require(const std::string& key) const {
    auto it = p_.find(key);
    if (it == p_.end())
      throw ConfigError("profile '" + profile_ + "' requires parameter '" + key + "'");
    return it->second;
  }

 private:
  std::string profile_;
  const ProfileParams& p_;
};

// a * g(kappa * (x - x0)) + c for one of the shape functions above.
template <typename Shape>
void set_scaled(Profile& pr, double a, double kappa, double c = 0.0) {
  pr.eval = [=](double x) { return c + a * Shape::v(kappa * x); };
  pr.d1 = [=](double x) { return a * kappa * Shape::d1(kappa * x); };
  pr.d2 = [=](double x) { return a * kappa * kappa * Shape::d2(kappa * x); };
  pr.d3 = [=](double x) { return a * kappa * kappa * kappa * Shape::d3(kappa * x); };
}

Profile soliton1(const ProfileParams& params) {
  ParamReader r("soliton1", params, {"speed", "gamma"});
  const double v = r.get("speed", 1.0);
  const double gamma = r.require("gamma");
  if (gamma == 0) throw ConfigError("soliton1: gamma must be nonzero");
  if (!(v > 0)) throw ConfigError("soliton1: speed must be positive");
  Profile pr;
  pr.name = "soliton1";
  set_scaled<SechSquared>(pr, 0.5 * v, std::sqrt(v / (4.0 * std::abs(gamma))));
  pr.speed = v;
  pr.meta = {{"speed", v}, {"gamma", gamma}, {"amplitude", 0.5 * v}};
  return pr;
}

Profile soliton2(const ProfileParams& params) {
  ParamReader r("soliton2", params, {"v1", "v2", "x1", "x2"});
  const double v1 = r.get("v1", 4.0), v2 = r.get("v2", 1.0);
  const double x1 = r.get("x1", -9.0), x2 = r.get("x2", -2.0);
  if (!(v1 > v2 && v2 > 0)) throw ConfigError("soliton2: need v1 > v2 > 0");
  Profile pr;
  pr.name = "soliton2";
  pr.eval = [=](double x) { return two_soliton_exact(x, 0.0, v1, v2, x1, x2); };
  pr.meta = {{"v1", v1}, {"v2", v2}, {"x1", x1}, {"x2", x2}};
  return pr;
}

Profile sech_hump(const ProfileParams& params) {
  ParamReader r("sech_hump", params, {"amplitude"});
  Profile pr;
  pr.name = "sech_hump";
  const double a = r.get("amplitude", 1.0);
  set_scaled<SechSquared>(pr, -a, 1.0);
  pr.meta = {{"amplitude", a}};
  return pr;
}

Profile smooth_step(const ProfileParams& params) {
  ParamReader r("smooth_step", params, {"omega"});
  const double omega = r.get("omega", 1e-3);
  if (!(omega > 0)) throw ConfigError("smooth_step: omega must be positive");
  Profile pr;
  pr.name = "smooth_step";
  set_scaled<Tanh>(pr, -0.5, 1.0 / omega, 0.5);
  pr.meta = {{"omega", omega}};
  return pr;
}

// u0 = -3 eps^2/(25 gamma) (2 + 2 tanh(z) + sech^2(z)),  z = eps x / (10 gamma)
Profile kdvb_tw(const ProfileParams& params) {
  ParamReader r("kdvb_tw", params, {"epsilon", "gamma"});
  const double eps = r.require("epsilon"), gamma = r.require("gamma");
  if (gamma == 0) throw ConfigError("kdvb_tw: gamma must be nonzero");
  if (!(eps > 0)) throw ConfigError("kdvb_tw: epsilon must be positive");
  const double c = -3.0 * eps * eps / (25.0 * gamma);
  const double k = eps / (10.0 * gamma);
  Profile pr;
  pr.name = "kdvb_tw";
  pr.eval = [=](double x) {
    return c * (2.0 + 2.0 * Tanh::v(k * x) + SechSquared::v(k * x));
  };
  pr.d1 = [=](double x) { return c * k * (2.0 * Tanh::d1(k * x) + SechSquared::d1(k * x)); };
  pr.d2 = [=](double x) {
    return c * k * k * (2.0 * Tanh::d2(k * x) + SechSquared::d2(k * x));
  };
  pr.d3 = [=](double x) {
    return c * k * k * k * (2.0 * Tanh::d3(k * x) + SechSquared::d3(k * x));
  };
  pr.speed = -6.0 * eps * eps / (25.0 * gamma);
  pr.meta = {{"epsilon", eps}, {"gamma", gamma}};
  return pr;
}

// Undercompressive front of u_t + (u^3)_x = eps u_xx + gamma u_xxx, gamma > 0.
Profile mkdvb_uc(const ProfileParams& params) {
  ParamReader r("mkdvb_uc", params, {"epsilon", "gamma", "literal"});
  const double eps = r.require("epsilon");
  const double g = std::abs(r.require("gamma"));
  if (g == 0) throw ConfigError("mkdvb_uc: gamma must be nonzero");
  if (!(eps > 0)) throw ConfigError("mkdvb_uc: epsilon must be positive");
  const bool literal = r.get("literal", 0.0) != 0.0;
  double um = -std::sqrt(2.0 * eps * eps / g);
  double up = -um - std::sqrt(2.0 * eps * eps / (9.0 * g));
  double v = (up * up * up - um * um * um) / (up - um);
  if (literal) {
    // printed reference values, not self-consistent with the formulas above
    um = -4.47;
    up = 3.97;
    v = 18.02;
  }
  const double a = (um - up) / (2.0 * std::sqrt(2.0));
  Profile pr;
  pr.name = "mkdvb_uc";
  set_scaled<Tanh>(pr, -0.5 * std::abs(up - um), a / std::sqrt(g), 0.5 * (up + um));
  pr.speed = v;
  pr.meta = {{"epsilon", eps}, {"gamma", g},     {"literal", literal ? 1.0 : 0.0},
             {"u_minus", um}, {"u_plus", up}, {"A", a}};
  return pr;
}

Profile gardner(const ProfileParams& params, bool dark) {
  const std::string name = dark ? "gardner_dark" : "gardner_bright";
  ParamReader r(name, params, {"k", "eps"});
  const double k = r.get("k", 1.0), e = r.get("eps", 1e-4);
  if (!(k > 0)) throw ConfigError(name + ": k must be positive");
  if (!(e > 0 && e < 0.5)) throw ConfigError(name + ": eps must lie in (0, 0.5)");
  double u1, u2, u3, u4;
  if (dark) {
    u1 = 0.0, u2 = e, u3 = 1.0 - e, u4 = 1.0 - e;
  } else {
    u1 = e, u2 = e, u3 = 1.0 - e, u4 = 1.0;
  }
  const double kth = 0.5 * std::sqrt(k * (u3 - u1) * (u4 - u2));
  Profile pr;
  pr.name = name;
  if (dark) {
    const double ratio = (u3 - u2) / (u3 - u1);
    pr.eval = [=](double x) {
      const double c = std::cosh(kth * x), s = std::sinh(kth * x);
      return u3 - (u3 - u2) / (c * c - ratio * s * s);
    };
  } else {
    const double ratio = (u3 - u2) / (u4 - u2);
    pr.eval = [=](double x) {
      const double c = std::cosh(kth * x), s = std::sinh(kth * x);
      return u2 + (u3 - u2) / (c * c - ratio * s * s);
    };
  }
  pr.speed = k * (u1 * u2 + u1 * u3 + u1 * u4 + u2 * u3 + u2 * u4 + u3 * u4);
  pr.meta = {{"k", k}, {"eps", e}, {"u1", u1}, {"u2", u2}, {"u3", u3}, {"u4", u4}};
  return pr;
}

}  // namespace

const std::vector<std::string>& profile_names() {
  static const std::vector<std::string> names = {
      "soliton1", "soliton2", "sech_hump",    "smooth_step",
      "kdvb_tw",  "mkdvb_uc", "gardner_dark", "gardner_bright"};
  return names;
}

Profile make_profile(const std::string& name, const ProfileParams& params) {
  if (name == "soliton1") return soliton1(params);
  if (name == "soliton2") return soliton2(params);
  if (name == "sech_hump") return sech_hump(params);
  if (name == "smooth_step") return smooth_step(params);
  if (name == "kdvb_tw") return kdvb_tw(params);
  if (name == "mkdvb_uc") return mkdvb_uc(params);
  if (name == "gardner_dark") return gardner(params, true);
  if (name == "gardner_bright") return gardner(params, false);
  throw ConfigError("unknown profile '" + name + "'");
}

double two_soliton_exact(double x, double t, double v1, double v2, double x1, double x2) {
  const double s1 = std::sqrt(v1), s2 = std::sqrt(v2);
  const double th1 = 0.5 * s1 * (x - x1 - v1 * t);
  const double th2 = 0.5 * s2 * (x - x2 - v2 * t);
  // Divide through by cosh(th1)^2 cosh(th2)^2 so large |theta| does not overflow.
  const double t1 = std::tanh(th1), t2 = std::tanh(th2);
  const double sech1 = 1.0 / std::cosh(th1), sech2 = 1.0 / std::cosh(th2);
  const double num = 2.0 * (v1 - v2) * (v1 * sech1 * sech1 + v2 * t1 * t1 * sech2 * sech2);
  // cosh(a -/+ b) / (cosh a cosh b) = 1 -/+ tanh a tanh b
  const double den = (s1 + s2) * (1.0 - t1 * t2) + (s1 - s2) * (1.0 + t1 * t2);
  return num / (den * den);
}

double central_derivative(const ScalarFn& f, double x, double h, int order) {
  switch (order) {
    case 1:
      return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
    case 2:
      return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
             (12 * h * h);
    case 3:
      return (-f(x + 3 * h) + 8 * f(x + 2 * h) - 13 * f(x + h) + 13 * f(x - h) -
              8 * f(x - 2 * h) + f(x - 3 * h)) /
             (8 * h * h * h);
    default:
      throw ConfigError("central_derivative: order must be 1, 2 or 3");
  }
}

Fieldd prepare_initial(const Profile& profile, const Gridd& grid, const ModelParamsd& params,
                       const FluxModeld& flux, BoundaryKind boundary) {
  Fieldd field(grid, boundary);
  const double h = grid.dx() / 4.0;
  auto deriv = [&](const ScalarFn& exact, double x, int order) {
    return exact ? exact(x) : central_derivative(profile.eval, x, h, order);
  };
  for (Eigen::Index i = 0; i < grid.n_cells(); ++i) {
    const double x = grid.center(i);
    const double u0 = profile.eval(x);
    const double ux = deriv(profile.d1, x, 1);
    const double uxx = deriv(profile.d2, x, 2);
    const double uxxx = deriv(profile.d3, x, 3);
    field.cells(kU, i) = u0;
    field.cells(kPsi, i) = -params.abs_gamma() * uxx;
    field.cells(kW, i) = -flux.df(u0) * ux + params.gamma * uxxx;
    field.cells(kP, i) = ux;
  }
  return field;
}

}  // namespace relaxkdv
