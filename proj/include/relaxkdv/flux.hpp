#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "relaxkdv/core.hpp"

namespace relaxkdv {

/// Scalar flux f with derivative f' and primitive F (F(0) = 0).
///
/// Built-ins are dispatched through a switch so the stencil loops stay
/// inlinable; `custom` wraps arbitrary callables.
///
///   kdv6     f = 3u^2             u_t + 6 u u_x
///   burgers  f = u^2 / 2          u_t + u u_x
///   cubic    f = u^3 / 3          u_t + u^2 u_x
///   mkdv     f = u^3              u_t + 3 u^2 u_x
///   gardner  f = 3u^2 - 2k u^3    u_t + 6 (u - k u^2) u_x
template <typename Scalar>
class FluxModel {
 public:
  enum class Kind { Kdv6, Burgers, Cubic, Mkdv, Gardner, Custom };
  using Fn = std::function<Scalar(Scalar)>;

  static FluxModel kdv6() { return FluxModel(Kind::Kdv6, "kdv6"); }
  static FluxModel burgers() { return FluxModel(Kind::Burgers, "burgers"); }
  static FluxModel cubic() { return FluxModel(Kind::Cubic, "cubic"); }
  static FluxModel mkdv() { return FluxModel(Kind::Mkdv, "mkdv"); }
  static FluxModel gardner(Scalar k) {
    FluxModel m(Kind::Gardner, "gardner");
    m.k_ = k;
    return m;
  }
  static FluxModel custom(std::string name, Fn f, Fn df, Fn primitive) {
    FluxModel m(Kind::Custom, std::move(name));
    m.f_ = std::move(f);
    m.df_ = std::move(df);
    m.F_ = std::move(primitive);
    return m;
  }

  Scalar f(Scalar u) const {
    switch (kind_) {
      case Kind::Kdv6: return Scalar(3) * u * u;
      case Kind::Burgers: return Scalar(0.5) * u * u;
      case Kind::Cubic: return u * u * u / Scalar(3);
      case Kind::Mkdv: return u * u * u;
      case Kind::Gardner: return Scalar(3) * u * u - Scalar(2) * k_ * u * u * u;
      case Kind::Custom: return f_(u);
    }
    return Scalar(0);
  }

  Scalar df(Scalar u) const {
    switch (kind_) {
      case Kind::Kdv6: return Scalar(6) * u;
      case Kind::Burgers: return u;
      case Kind::Cubic: return u * u;
      case Kind::Mkdv: return Scalar(3) * u * u;
      case Kind::Gardner: return Scalar(6) * u - Scalar(6) * k_ * u * u;
      case Kind::Custom: return df_(u);
    }
    return Scalar(0);
  }

  /// Primitive with F(0) = 0.
  Scalar F(Scalar u) const {
    switch (kind_) {
      case Kind::Kdv6: return u * u * u;
      case Kind::Burgers: return u * u * u / Scalar(6);
      case Kind::Cubic: return u * u * u * u / Scalar(12);
      case Kind::Mkdv: return u * u * u * u / Scalar(4);
      case Kind::Gardner: return u * u * u - k_ * u * u * u * u / Scalar(2);
      case Kind::Custom: return F_(u) - F_(Scalar(0));
    }
    return Scalar(0);
  }

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::optional<Scalar> k() const {
    return kind_ == Kind::Gardner ? std::optional<Scalar>(k_) : std::nullopt;
  }

 private:
  FluxModel(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
  Scalar k_ = 0;
  Fn f_, df_, F_;
};

template <typename Scalar = double>
FluxModel<Scalar> make_flux_model(const std::string& name, std::optional<Scalar> k = std::nullopt) {
  using M = FluxModel<Scalar>;
  if (name == "gardner") {
    if (!k) throw ConfigError("flux 'gardner' requires parameter k");
    return M::gardner(*k);
  }
  if (k) throw ConfigError("flux '" + name + "' takes no parameter k");
  if (name == "kdv6") return M::kdv6();
  if (name == "burgers") return M::burgers();
  if (name == "cubic") return M::cubic();
  if (name == "mkdv") return M::mkdv();
  throw ConfigError("unknown flux '" + name + "'");
}

using FluxModeld = FluxModel<double>;

}  // namespace relaxkdv
