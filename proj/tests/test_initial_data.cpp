#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "relaxkdv/initial_data.hpp"

using namespace relaxkdv;
using doctest::Approx;

namespace {

ProfileParams params_for(const std::string& name) {
  if (name == "soliton1") return {{"gamma", -1e-2}};
  if (name == "kdvb_tw") return {{"gamma", 1e-4}, {"epsilon", 1e-2}};
  if (name == "mkdvb_uc") return {{"gamma", 1e-5}, {"epsilon", 1e-2}};
  return {};
}

double sample_scale(const std::string& name) {
  if (name == "smooth_step") return 5e-3;
  if (name == "mkdvb_uc") return 5e-3;
  if (name == "kdvb_tw") return 0.1;
  if (name == "soliton1") return 0.4;
  return 3.0;
}

}  // namespace

TEST_CASE("catalog profile values") {
  const auto s1 = make_profile("soliton1", {{"speed", 1}, {"gamma", -1e-2}});
  CHECK(s1.eval(0) == Approx(0.5));
  CHECK(*s1.speed == 1);

  const auto st = make_profile("smooth_step", {{"omega", 1e-3}});
  CHECK(st.eval(0) == Approx(0.5));
  CHECK(st.eval(-1) == Approx(1.0));
  CHECK(st.eval(1) == Approx(0.0));
  CHECK_FALSE(st.speed.has_value());

  const auto uc = make_profile("mkdvb_uc", {{"epsilon", 1e-2}, {"gamma", 1e-5}});
  CHECK(uc.meta.at("u_minus") == Approx(-std::sqrt(20.0)));
  CHECK(uc.meta.at("u_minus") == Approx(-4.4721).epsilon(1e-4));
  CHECK(uc.meta.at("u_plus") == Approx(2.9814).epsilon(1e-4));
  CHECK(uc.eval(-1) == Approx(uc.meta.at("u_minus")));
  CHECK(uc.eval(1) == Approx(uc.meta.at("u_plus")));
  const double um = uc.meta.at("u_minus"), up = uc.meta.at("u_plus");
  CHECK(*uc.speed == Approx((up * up * up - um * um * um) / (up - um)));

  const auto lit = make_profile("mkdvb_uc", {{"epsilon", 1e-2}, {"gamma", 1e-5}, {"literal", 1}});
  CHECK(lit.meta.at("u_minus") == -4.47);
  CHECK(lit.meta.at("u_plus") == 3.97);
  CHECK(*lit.speed == 18.02);
  // the printed speed is the Rankine-Hugoniot speed of the printed states
  CHECK((3.97 * 3.97 * 3.97 + 4.47 * 4.47 * 4.47) / (3.97 + 4.47) == Approx(18.02).epsilon(2e-3));

  const auto kd = make_profile("kdvb_tw", {{"epsilon", 1e-2}, {"gamma", 1e-4}});
  CHECK(*kd.speed == Approx(-0.24));
  CHECK(kd.eval(-10) == Approx(0.0));
  CHECK(kd.eval(10) == Approx(-0.48));

  const auto dark = make_profile("gardner_dark", {{"k", 1}, {"eps", 1e-4}});
  CHECK(dark.eval(-200) == Approx(1 - 1e-4));
  CHECK(dark.eval(200) == Approx(1 - 1e-4));
  const auto bright = make_profile("gardner_bright", {{"k", 1}, {"eps", 1e-4}});
  CHECK(bright.eval(200) == Approx(1e-4));
  double dmax = 0, bmax = 0;
  for (double x = -50; x <= 50; x += 0.01) {
    dmax = std::max(dmax, std::abs(dark.eval(x)));
    bmax = std::max(bmax, std::abs(bright.eval(x)));
  }
  CHECK(std::abs(dmax - (1 - 1e-4)) <= 1e-3);
  CHECK(std::abs(bmax - (1 - 1e-4)) <= 1e-3);
  CHECK(*dark.speed == Approx(1e-4 * (1 - 1e-4) + 0 + (1 - 1e-4) * (1 - 1e-4) + 1e-4 * (1 - 1e-4)));
}

TEST_CASE("analytic derivatives match finite differences") {
  for (const auto& name : profile_names()) {
    const Profile pr = make_profile(name, params_for(name));
    if (!pr.has_analytic_derivatives()) continue;
    CAPTURE(name);
    const double L = sample_scale(name);
    const double h = L * 1e-3;
    for (int j = -10; j <= 10; ++j) {
      const double x = L * j / 10.0 + 1e-3 * L;
      const ScalarFn d[3] = {pr.d1, pr.d2, pr.d3};
      const ScalarFn lower[3] = {pr.eval, pr.d1, pr.d2};
      for (int o = 0; o < 3; ++o) {
        const double fd = central_derivative(lower[o], x, h, 1);
        const double an = d[o](x);
        double scale = 0;
        for (int k = -10; k <= 10; ++k) scale = std::max(scale, std::abs(d[o](L * k / 10.0)));
        CHECK(std::abs(fd - an) <= 1e-5 * std::max(std::abs(an), 1e-3 * scale));
      }
    }
  }
}

TEST_CASE("central differences are fourth order") {
  const ScalarFn f = [](double x) { return std::sin(x); };
  for (int order = 1; order <= 3; ++order) {
    const double exact = order == 1 ? std::cos(0.7) : order == 2 ? -std::sin(0.7) : -std::cos(0.7);
    const double e1 = std::abs(central_derivative(f, 0.7, 0.1, order) - exact);
    const double e2 = std::abs(central_derivative(f, 0.7, 0.05, order) - exact);
    CHECK(std::log2(e1 / e2) == Approx(4).epsilon(0.05));
  }
  CHECK_THROWS_AS(central_derivative(f, 0, 0.1, 4), ConfigError);
}

TEST_CASE("prepare_initial of a constant") {
  Profile c;
  c.name = "const";
  c.eval = [](double) { return 0.75; };
  const auto fl = FluxModeld::kdv6();
  const auto f = prepare_initial(c, Gridd(0, 1, 16), ModelParamsd::make(10, 0.1, -1, 0), fl);
  CHECK((f.u().array() - 0.75).abs().maxCoeff() < 1e-12);
  CHECK(f.cells.bottomRows(3).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("prepare_initial of sin with zero flux") {
  Profile s;
  s.name = "sin";
  s.eval = [](double x) { return std::sin(x); };
  s.d1 = [](double x) { return std::cos(x); };
  s.d2 = [](double x) { return -std::sin(x); };
  s.d3 = [](double x) { return -std::cos(x); };
  const auto zero = FluxModeld::custom("zero", [](double) { return 0.0; }, [](double) { return 0.0; },
                                       [](double) { return 0.0; });
  const Gridd g(0, 2 * M_PI, 32);
  const auto f = prepare_initial(s, g, ModelParamsd::make(1, 1, -1, 0), zero);
  for (Eigen::Index i = 0; i < 32; ++i) {
    const double x = g.center(i);
    CHECK(f.cells(kPsi, i) == Approx(std::sin(x)));
    CHECK(f.cells(kW, i) == Approx(std::cos(x)));
    CHECK(f.cells(kP, i) == Approx(std::cos(x)));
  }
}

TEST_CASE("traveling waves start on the slow manifold") {
  const auto kdv6 = FluxModeld::kdv6();
  {
    const auto pr = make_profile("soliton1", {{"gamma", -1e-2}});
    const auto f = prepare_initial(pr, Gridd(-2, 2, 1000), ModelParamsd::make(1e3, 1e-6, -1e-2, 0), kdv6);
    const double scale = f.w().cwiseAbs().maxCoeff();
    CHECK((f.w() + *pr.speed * f.p()).cwiseAbs().maxCoeff() <= 1e-6 * scale);
  }
  for (const char* name : {"gardner_dark", "gardner_bright"}) {
    CAPTURE(name);
    const auto pr = make_profile(name, {{"k", 1}, {"eps", 1e-4}});
    const auto g = FluxModeld::gardner(1.0);
    const auto f = prepare_initial(pr, Gridd(-50, 50, 2000), ModelParamsd::make(1e3, 1e-6, -1, 0), g);
    const double scale = f.w().cwiseAbs().maxCoeff();
    CHECK((f.w() + *pr.speed * f.p()).cwiseAbs().maxCoeff() <= 1e-2 * scale);
  }
}

TEST_CASE("two-soliton formula") {
  const auto pr = make_profile("soliton2", {});
  for (double x : {-12.0, -9.0, -2.0, 0.0, 4.0}) CHECK(pr.eval(x) == two_soliton_exact(x, 0, 4, 1, -9, -2));
  CHECK(std::abs(two_soliton_exact(-200, 0, 4, 1, -9, -2)) < 1e-12);
  CHECK(std::abs(two_soliton_exact(200, 0, 4, 1, -9, -2)) < 1e-12);
  CHECK(std::isfinite(two_soliton_exact(1e4, 50, 4, 1, -9, -2)));

  // well separated: each peak is a one-soliton of height V/2
  auto peak_near = [](double x0, double t) {
    double best = 0;
    for (double x = x0 - 3; x <= x0 + 3; x += 1e-4)
      best = std::max(best, two_soliton_exact(x, t, 4, 1, -15, 15));
    return best;
  };
  CHECK(peak_near(-15, 0) == Approx(2.0).epsilon(1e-6));
  CHECK(peak_near(15, 0) == Approx(0.5).epsilon(1e-6));
  // after the interaction both amplitudes re-emerge
  CHECK(peak_near(-15 + 4 * 20, 20) == Approx(2.0).epsilon(1e-6));
}

TEST_CASE("profile errors") {
  CHECK_THROWS_AS(make_profile("nope", {}), ConfigError);
  CHECK_THROWS_AS(make_profile("soliton1", {}), ConfigError);
  CHECK_THROWS_AS(make_profile("soliton1", {{"gamma", 0}}), ConfigError);
  CHECK_THROWS_AS(make_profile("sech_hump", {{"omega", 1}}), ConfigError);
  CHECK_THROWS_AS(make_profile("soliton2", {{"v1", 1}, {"v2", 2}}), ConfigError);
  CHECK(profile_names().size() == 8);
}
