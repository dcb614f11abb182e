#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "relaxkdv/config.hpp"
#include "relaxkdv/diagnostics.hpp"

namespace relaxkdv {

/// Advances the prepared initial data to config.t_final, landing exactly on
/// every output instant. Step errors are rethrown with the step count and time.
RunRecord run(const RunConfig& config);

enum class SweepAxis { Alpha, Beta, NCells, AlphaWithScaledBeta };

SweepAxis sweep_axis_from_string(const std::string& s);
std::string to_string(SweepAxis a);

/// base with the axis parameter replaced by value.
RunConfig sweep_member(const RunConfig& base, SweepAxis axis, double value);

/// Convergence parameter h of a member: dx for n_cells, 1/alpha for the
/// alpha axes, beta for beta.
double sweep_h(const RunConfig& member, SweepAxis axis);

struct EocRow {
  double axis_value;
  std::string error_name;
  double error_value;
  std::optional<double> order;
};

/// Errors tracked across sweep members: energy_sup (max |E - E0| over all
/// steps) and, when the oracle provides them, e_l2_paper and e_l2_weighted
/// at T.
std::vector<EocRow> eoc_table(const std::vector<RunRecord>& records, SweepAxis axis);

/// Runs members on up to `workers` threads. When out_dir is set each finished
/// member is written to out_dir/<axis>_<index> immediately; the first failure
/// stops the sweep and is rethrown once running members have finished.
std::vector<RunRecord> sweep(const RunConfig& base, SweepAxis axis,
                             const std::vector<double>& values, int workers = 1,
                             const std::optional<std::filesystem::path>& out_dir = std::nullopt);

// CSV artifacts. Numbers use the shortest round-trip decimal; absent values
// are empty cells.
void write_snapshots_csv(const RunRecord& record, const std::filesystem::path& path);
void write_scalars_csv(const RunRecord& record, const std::filesystem::path& path);
void write_eoc_csv(const std::vector<EocRow>& rows, const std::filesystem::path& path);
/// time, x, xi, modulus, a_minus, a_plus for every cell inside the fan.
void write_envelope_csv(const RunRecord& record, const std::filesystem::path& path);

/// config.ini, scalars.csv and, as configured, snapshots.csv and envelope.csv.
void write_run(const RunRecord& record, const std::filesystem::path& dir);

}  // namespace relaxkdv
