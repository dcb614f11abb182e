#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relaxkdv/core.hpp"
#include "relaxkdv/flux.hpp"
#include "relaxkdv/initial_data.hpp"

namespace relaxkdv {

enum class CadenceKind { Time, Steps };

struct Cadence {
  CadenceKind kind = CadenceKind::Time;
  double dt_out = 0.0;  // Time: output every dt_out (0 -> only t=0 and t=T)
  long every = 0;       // Steps: output every `every` steps

  bool operator==(const Cadence&) const = default;
};

/// Parses "0.01", "dt:0.01" or "steps:100".
Cadence parse_cadence(const std::string& text);
std::string render_cadence(const Cadence& c);

enum class OracleKind { None, TravelingWave, TwoSoliton, Dsw };

OracleKind oracle_from_string(const std::string& s);
std::string to_string(OracleKind o);

/// Declarative experiment description. Every field is filled after
/// parse_config; missing keys come from the catalog preset.
struct RunConfig {
  std::string case_name;    // catalog id or "custom"
  std::string profile;      // make_profile id
  ProfileParams case_params;  // extra profile parameters (speed, v1, omega, eps, ...)
  std::string uc_mode = "formula";  // mkdvb_uc only: formula | literal

  double x_left = 0, x_right = 1;
  long n_cells = 0;
  BoundaryKind boundary = BoundaryKind::Periodic;

  std::string flux = "kdv6";
  std::optional<double> flux_k;
  double alpha = 0, beta = 0, gamma = 0, epsilon = 0, cfl = 0.9;
  bool beta_auto = false;  // beta = |gamma| / alpha

  double t_final = 0;

  Cadence cadence;
  std::string out_dir = "out";
  bool write_snapshots = true;

  OracleKind oracle = OracleKind::None;
  std::optional<double> target_amplitude;

  bool operator==(const RunConfig&) const = default;

  ModelParamsd model_params() const;
  FluxModeld flux_model() const;
  Gridd grid() const;
  Profile make_case_profile() const;
  /// Throws ConfigError naming the first violated constraint.
  void validate() const;
};

const std::vector<std::string>& catalog_names();

/// Default parameters for a catalog case.
RunConfig catalog_preset(const std::string& name);

/// Flat sectioned key = value text ([case], [domain], [model], [time],
/// [output], [oracle]). Unknown keys are rejected.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string render_config(const RunConfig& config);

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

}  // namespace relaxkdv
