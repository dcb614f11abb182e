#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "relaxkdv/diagnostics.hpp"
#include "relaxkdv/dsw.hpp"
#include "relaxkdv/initial_data.hpp"
#include "relaxkdv/special_functions.hpp"

namespace relaxkdv {

/// u0(x - V t). With `period` = (a, b) the shifted abscissa is wrapped into [a, b).
double exact_traveling_wave(const Profile& profile, double x, double t,
                            std::optional<std::pair<double, double>> period = std::nullopt);

/// Explicit Euler integration of the entropy dissipation identity over the
/// recorded instants, starting from the measured total entropy:
///   E(t_{k+1}) = E(t_k) - dt_k * eps * sum_i (sgn(gamma) f'(u) (Dx u)^2
///                + |gamma| (Dx p)^2 + (Dx psi)^2 / alpha) dx - dt_k * [Q]
/// Dx is the central difference over ghost-extended cells. [Q] is the net
/// entropy flux through the walls; it vanishes on periodic grids.
std::vector<double> energy_decay_reference(const RunRecord& record, const ModelParamsd& m,
                                           const FluxModeld& flux);

/// Exact solution selected by config.oracle, if it has one in closed form.
std::optional<ExactFn> make_exact_solution(const RunConfig& config, const Profile& profile);

}  // namespace relaxkdv
