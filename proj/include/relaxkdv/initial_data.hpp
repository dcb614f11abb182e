#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relaxkdv/core.hpp"
#include "relaxkdv/flux.hpp"

namespace relaxkdv {

using ScalarFn = std::function<double(double)>;
using ProfileParams = std::map<std::string, double>;

/// Closed-form initial profile u0(x). Derivatives that are left empty are
/// evaluated by 4th-order central differences with h = dx/4 when the profile
/// is lifted onto a grid.
struct Profile {
  std::string name;
  ScalarFn eval;
  ScalarFn d1, d2, d3;
  std::optional<double> speed;  // traveling-wave velocity
  ProfileParams meta;

  bool has_analytic_derivatives() const { return d1 && d2 && d3; }
};

/// Catalog ids: soliton1, soliton2, sech_hump, smooth_step, kdvb_tw,
/// mkdvb_uc, gardner_dark, gardner_bright.
const std::vector<std::string>& profile_names();

/// Parameter keys per profile (unlisted keys take their defaults):
///   soliton1        speed (1), gamma (required)
///   soliton2        v1 (4), v2 (1), x1 (-9), x2 (-2)
///   sech_hump       amplitude (1)
///   smooth_step     omega (1e-3)
///   kdvb_tw         epsilon, gamma (required)
///   mkdvb_uc        epsilon, gamma (required; |gamma| used), literal (0)
///   gardner_*       k (1), eps (1e-4)
Profile make_profile(const std::string& name, const ProfileParams& params);

/// Two-soliton KdV solution (u_t + 6 u u_x + u_xxx = 0); time enters through
/// x_j -> x_j + V_j t.
double two_soliton_exact(double x, double t, double v1, double v2, double x1, double x2);

/// Fourth-order central differences of order 1..3 with step h.
double central_derivative(const ScalarFn& f, double x, double h, int order);

/// Lifts u0 onto the grid: (u0, -|gamma| u0'', -f'(u0) u0' + gamma u0''', u0').
Fieldd prepare_initial(const Profile& profile, const Gridd& grid, const ModelParamsd& params,
                       const FluxModeld& flux,
                       BoundaryKind boundary = BoundaryKind::Periodic);

}  // namespace relaxkdv
