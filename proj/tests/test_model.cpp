#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include <Eigen/Eigenvalues>

#include "relaxkdv/model.hpp"

using namespace relaxkdv;
using doctest::Approx;

namespace {

const auto kdv6 = FluxModeld::kdv6();

StateVecd fd_grad(const std::function<double(const StateVecd&)>& fn, const StateVecd& U) {
  StateVecd g;
  for (int k = 0; k < 4; ++k) {
    const double h = 1e-5 * (1 + std::abs(U[k]));
    StateVecd a = U, b = U;
    a[k] += h;
    b[k] -= h;
    g[k] = (fn(a) - fn(b)) / (2 * h);
  }
  return g;
}

struct Rand {
  std::mt19937_64 rng{2024};
  double operator()(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
  StateVecd state() { return StateVecd((*this)(-2, 2), (*this)(-2, 2), (*this)(-2, 2), (*this)(-2, 2)); }
  ModelParamsd params(double sign) {
    return ModelParamsd::make(std::exp((*this)(0, 7)), std::exp((*this)(-14, 0)),
                              sign * std::exp((*this)(-9, 0)), 0.0);
  }
};

}  // namespace

TEST_CASE("flux vector examples") {
  const StateVecd U(1, 2, 3, 4);
  const auto mp = ModelParamsd::make(10, 1e-2, 1, 0);
  const StateVecd a = flux_vector(U, mp, kdv6);
  CHECK(a[0] == Approx(5));
  CHECK(a[1] == Approx(50));
  CHECK(a[2] == Approx(-400));
  CHECK(a[3] == Approx(-3));
  const StateVecd b = flux_vector(U, ModelParamsd::make(10, 1e-2, -1, 0), kdv6);
  CHECK(b[0] == Approx(1));
  CHECK(b[1] == Approx(10));
  CHECK(b[2] == Approx(-400));
  CHECK(flux_vector(StateVecd::Zero().eval(), mp, kdv6).isZero());
}

TEST_CASE("source vector examples") {
  const auto m = ModelParamsd::make(10, 0.5, 1, 0);
  CHECK(source_vector(StateVecd(5, 0, 0, 7), m).isZero());
  const StateVecd s = source_vector(StateVecd(0, 2, 3, 0), m);
  CHECK(s == StateVecd(0, -30, 4, 0));
  const StateVecd U(1, 2, 3, 4);
  CHECK(entropy_gradient(U, m, kdv6).dot(source_vector(U, m)) == 0.0);
  CHECK((source_matrix(m) * U - source_vector(U, m)).isZero());
}

TEST_CASE("jacobian example and eigenvectors") {
  const auto m = ModelParamsd::make(10, 1e-2, 1, 0);
  Mat4<double> expect;
  expect << 0, 1, 0, 0, 0, 10, 0, 0, 0, 0, 0, -100, 0, 0, -1, 0;
  CHECK(jacobian(0.0, m, kdv6) == expect);

  Rand r;
  for (double sign : {1.0, -1.0}) {
    for (int t = 0; t < 200; ++t) {
      const auto mp = r.params(sign);
      const double u = r(-2, 2);
      const Mat4<double> A = jacobian(u, mp, kdv6);
      const Mat4<double> R = right_eigenvectors(u, mp, kdv6);
      const Mat4<double> L = left_eigenvectors(u, mp, kdv6);
      const auto lam = eigenvalues(u, mp, kdv6).values();
      const double scale = A.norm();
      for (int k = 0; k < 4; ++k) {
        CHECK((A * R.col(k) - lam[k] * R.col(k)).norm() <= 1e-12 * scale * R.col(k).norm());
        CHECK((L.row(k) * A - lam[k] * L.row(k)).norm() <= 1e-12 * scale * L.row(k).norm());
      }
    }
  }
}

TEST_CASE("eigenvalue examples") {
  const auto e1 = eigenvalues(0.0, ModelParamsd::make(1e3, 1e-6, -1e-2, 0), kdv6);
  CHECK(e1.lambda1 == Approx(-100));
  CHECK(e1.lambda2 == 0);
  CHECK(e1.lambda3 == Approx(100));
  CHECK(e1.lambda4 == Approx(-1000));
  CHECK(e1.ordering_tag == EigenSet<double>::Ordering::FastFirstThenAscending);
  const auto e2 = eigenvalues(1.0, ModelParamsd::make(1e3, 1e-6, 1e-2, 0), kdv6);
  CHECK(e2.lambda4 == Approx(1006));
  CHECK(e2.ordering_tag == EigenSet<double>::Ordering::AscendingWithFastLast);
  const auto e3 = eigenvalues(5.0, ModelParamsd::make(1, 1e-6, 1e-2, 0), kdv6);
  CHECK(e3.ordering_tag == EigenSet<double>::Ordering::NotStrict);
}

TEST_CASE("eigenvalues agree with a dense eigensolver") {
  Rand r;
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto mp = r.params(t % 2 ? 1.0 : -1.0);
    const double u = r(-3, 3);
    Eigen::EigenSolver<Eigen::Matrix4d> es(jacobian(u, mp, kdv6), false);
    std::array<double, 4> a{}, b{};
    const auto v = eigenvalues(u, mp, kdv6).values();
    for (int k = 0; k < 4; ++k) {
      a[k] = es.eigenvalues()[k].real();
      b[k] = v[k];
      CHECK(std::abs(es.eigenvalues()[k].imag()) <= 1e-9 * std::max(1.0, v.cwiseAbs().maxCoeff()));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int k = 0; k < 4; ++k)
      worst = std::max(worst, std::abs(a[k] - b[k]) / std::max(1.0, std::abs(b[k])));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("strict ordering when alpha dominates f' and v_beta") {
  Rand r;
  for (int t = 0; t < 1000; ++t) {
    const double sign = t % 2 ? 1.0 : -1.0;
    const double u = r(-2, 2);
    const double alpha = r(13, 1e3), gamma = sign * std::exp(r(-9, 0));
    // v_beta must also stay below alpha - max|f'| = alpha - 12
    const double beta_min = std::abs(gamma) / ((alpha - 12) * (alpha - 12)) * 1.01;
    const auto mp = ModelParamsd::make(alpha, std::exp(r(std::log(beta_min), std::log(beta_min) + 10)),
                                       gamma, 0);
    const auto e = eigenvalues(u, mp, kdv6);
    if (sign > 0) {
      CHECK(e.ordering_tag == EigenSet<double>::Ordering::AscendingWithFastLast);
    } else {
      CHECK(e.ordering_tag == EigenSet<double>::Ordering::FastFirstThenAscending);
    }
  }
}

TEST_CASE("max signal speed examples") {
  const Gridd g(0, 1, 4);
  Fieldd f(g, BoundaryKind::Periodic);
  CHECK(max_signal_speed(f, ModelParamsd::make(1e3, 1e-6, -1e-2, 0), kdv6) == Approx(1000));
  CHECK(max_signal_speed(f, ModelParamsd::make(50, 1e-6, -1e-2, 0), kdv6) == Approx(100));
  f.cells.row(kU).setConstant(2);
  const auto m = ModelParamsd::make(1e3, 1e-6, 1, 0);
  CHECK(max_signal_speed(f, m, kdv6) == Approx(std::max(1012.0, m.v_beta)));
}

TEST_CASE("riemann invariants") {
  const auto m = ModelParamsd::make(10, 1e-2, 1, 0);
  const StateVecd R = riemann_invariants(StateVecd(1, 2, 3, 4), m, kdv6);
  CHECK(R[0] == Approx(43));
  CHECK(R[1] == Approx(8));
  CHECK(R[2] == Approx(-37));
  CHECK(R[3] == Approx(5));
  CHECK(riemann_invariants(StateVecd::Zero().eval(), m, kdv6).isZero());

  Rand r;
  for (double sign : {1.0, -1.0}) {
    for (int t = 0; t < 100; ++t) {
      const auto mp = r.params(sign);
      const StateVecd U = r.state();
      const Mat4<double> A = jacobian(U[kU], mp, kdv6);
      const auto lam = eigenvalues(U[kU], mp, kdv6).values();
      for (int k = 0; k < 4; ++k) {
        const StateVecd g =
            fd_grad([&](const StateVecd& V) { return riemann_invariants(V, mp, kdv6)[k]; }, U);
        const double scale = std::max(1.0, std::abs(lam[k])) * g.norm();
        CHECK((A.transpose() * g - lam[k] * g).norm() <= 1e-6 * scale);
      }
    }
  }
}

TEST_CASE("entropy examples") {
  CHECK(entropy(StateVecd::Zero().eval(), ModelParamsd::make(1, 1, 1, 0), kdv6) == 0);
  CHECK(entropy(StateVecd(0, 2, 0, 0), ModelParamsd::make(1, 1, 1, 0), kdv6) == Approx(2));
  CHECK(entropy(StateVecd(1, 0, 2, 3), ModelParamsd::make(1, 0.5, -2, 0), kdv6) == Approx(9));
}

TEST_CASE("entropy flux examples and compatibility") {
  CHECK(entropy_flux(StateVecd::Zero().eval(), ModelParamsd::make(1, 1, 1, 0), kdv6) == 0);
  CHECK(entropy_flux(StateVecd(0, 0, 3, 4), ModelParamsd::make(1, 1, -2, 0), kdv6) == Approx(-24));
  Rand r;
  for (const auto& fl : {FluxModeld::kdv6(), FluxModeld::cubic(), FluxModeld::gardner(1.0)}) {
    for (double sign : {1.0, -1.0}) {
      for (int t = 0; t < 100; ++t) {
        const auto mp = r.params(sign);
        const StateVecd U = r.state();
        const StateVecd lhs = jacobian(U[kU], mp, fl).transpose() * entropy_gradient(U, mp, fl);
        const StateVecd rhs = fd_grad([&](const StateVecd& V) { return entropy_flux(V, mp, fl); }, U);
        for (int k = 0; k < 4; ++k)
          CHECK(std::abs(lhs[k] - rhs[k]) <= 1e-5 * std::max(1.0, std::abs(rhs[k])));
      }
    }
  }
}

TEST_CASE("entropy gradient") {
  const StateVecd g = entropy_gradient(StateVecd(1, 2, 3, 4), ModelParamsd::make(2, 0.5, -1, 0), kdv6);
  CHECK(g[0] == Approx(-3));
  CHECK(g[1] == Approx(1));
  CHECK(g[2] == Approx(1.5));
  CHECK(g[3] == Approx(4));
  CHECK(entropy_gradient(StateVecd::Zero().eval(), ModelParamsd::make(2, 0.5, -1, 0), kdv6).isZero());
  Rand r;
  for (int t = 0; t < 100; ++t) {
    const auto mp = r.params(t % 2 ? 1.0 : -1.0);
    const StateVecd U = r.state();
    const StateVecd fd = fd_grad([&](const StateVecd& V) { return entropy(V, mp, kdv6); }, U);
    const StateVecd an = entropy_gradient(U, mp, kdv6);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(fd[k] - an[k]) <= 1e-6 * std::max(1.0, std::abs(an[k])));
  }
}

TEST_CASE("source orthogonality for random states") {
  Rand r;
  for (int t = 0; t < 1000; ++t) {
    const auto mp = r.params(t % 2 ? 1.0 : -1.0);
    const StateVecd U = r.state();
    const StateVecd g = entropy_gradient(U, mp, kdv6), s = source_vector(U, mp);
    const double terms = std::abs(g[kPsi] * s[kPsi]) + std::abs(g[kW] * s[kW]);
    CHECK(std::abs(g.dot(s)) <= 1e-14 * (1 + terms));
  }
}

TEST_CASE("relative entropy") {
  const auto m = ModelParamsd::make(1, 1, 1, 0);
  const StateVecd U(0.3, -1, 2, 0.5);
  CHECK(relative_entropy(U, U, m, kdv6) == 0);
  CHECK(relative_entropy(StateVecd(0, 2, 0, 0), StateVecd::Zero().eval(), m, kdv6) == Approx(2));
  Rand r;
  const auto cubic = FluxModeld::cubic();
  for (int t = 0; t < 1000; ++t) {
    const auto mp = r.params(1.0);
    const StateVecd a = r.state(), b = r.state();
    CHECK(relative_entropy(a, b, mp, cubic) >= -1e-14);
  }
}

TEST_CASE("templates instantiate for long double") {
  const auto m = ModelParams<long double>::make(10, 0.01L, 1, 0);
  const auto fl = FluxModel<long double>::kdv6();
  const StateVec<long double> U(1, 2, 3, 4);
  CHECK(static_cast<double>(flux_vector(U, m, fl)[1]) == Approx(50));
  CHECK(static_cast<double>(entropy(U, m, fl)) > 0);
}
