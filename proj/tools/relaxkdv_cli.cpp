#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relaxkdv/checks.hpp"
#include "relaxkdv/config.hpp"
#include "relaxkdv/runner.hpp"

using namespace relaxkdv;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitDomain = 4;

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("--values: cannot parse '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("--values: empty list");
  return out;
}

RunConfig load_with_overrides(const std::string& path, const std::string& out,
                              const std::string& cadence) {
  RunConfig c = load_config(path);
  if (!out.empty()) c.out_dir = out;
  if (!cadence.empty()) c.cadence = parse_cadence(cadence);
  c.validate();
  return c;
}

void print_summary(const RunRecord& r, const std::filesystem::path& dir) {
  const auto& last = r.scalars.back();
  std::printf("%s: %ld steps to t = %s, energy drift sup %s", r.config.case_name.c_str(), r.steps,
              format_double(r.times.back()).c_str(),
              format_double(r.max_abs_energy_error).c_str());
  if (last.e_a) std::printf(", e_a %s", format_double(*last.e_a).c_str());
  if (last.e_l2) std::printf(", e_l2 %s", format_double(*last.e_l2).c_str());
  std::printf("\n  wrote %s\n", dir.string().c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relaxation solver for dispersive and diffusive-dispersive balance laws"};
  app.require_subcommand(1);

  std::string config_path, out_dir, cadence, axis, values;
  int workers = 1;

  auto* run_cmd = app.add_subcommand("run", "run one experiment config");
  run_cmd->add_option("config", config_path, "config file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--out", out_dir, "output directory");
  run_cmd->add_option("--cadence", cadence, "output cadence: dt_out, dt:<x> or steps:<n>");

  auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep with an EOC table");
  sweep_cmd->add_option("config", config_path, "base config file")->required()->check(CLI::ExistingFile);
  sweep_cmd->add_option("--axis", axis, "alpha | beta | n_cells | alpha_with_scaled_beta")->required();
  sweep_cmd->add_option("--values", values, "comma separated values")->required();
  sweep_cmd->add_option("--out", out_dir, "output directory");
  sweep_cmd->add_option("--workers", workers, "concurrent runs")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--cadence", cadence, "output cadence: dt_out, dt:<x> or steps:<n>");

  auto* cases_cmd = app.add_subcommand("cases", "list the catalog");
  auto* check_cmd = app.add_subcommand("check", "run the property checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      const RunConfig c = load_with_overrides(config_path, out_dir, cadence);
      const RunRecord r = run(c);
      write_run(r, c.out_dir);
      print_summary(r, c.out_dir);
    } else if (*sweep_cmd) {
      const RunConfig c = load_with_overrides(config_path, out_dir, cadence);
      const SweepAxis ax = sweep_axis_from_string(axis);
      const auto recs = sweep(c, ax, parse_values(values), workers, std::filesystem::path(c.out_dir));
      for (const auto& row : eoc_table(recs, ax)) {
        std::printf("%-12s %-14s %-24s %s\n", format_double(row.axis_value).c_str(),
                    row.error_name.c_str(), format_double(row.error_value).c_str(),
                    row.order ? format_double(*row.order).c_str() : "");
      }
    } else if (*cases_cmd) {
      for (const auto& name : catalog_names()) {
        const RunConfig c = catalog_preset(name);
        std::printf("%-15s profile=%s flux=%s [%s, %s] N=%ld T=%s\n", name.c_str(),
                    c.profile.c_str(), c.flux.c_str(), format_double(c.x_left).c_str(),
                    format_double(c.x_right).c_str(), c.n_cells,
                    format_double(c.t_final).c_str());
      }
    } else if (*check_cmd) {
      int failed = 0;
      for (const auto& r : run_property_checks()) {
        std::printf("%s  %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        failed += r.passed ? 0 : 1;
      }
      return failed == 0 ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
