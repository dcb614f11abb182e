#include "relaxkdv/runner.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "relaxkdv/initial_data.hpp"
#include "relaxkdv/model.hpp"
#include "relaxkdv/oracles.hpp"
#include "relaxkdv/scheme.hpp"

namespace relaxkdv {

namespace {

InstantScalars measure(const Fieldd& f, double dt, const RunConfig& cfg, const ModelParamsd& m,
                       const FluxModeld& flux, const std::optional<ExactFn>& exact) {
  InstantScalars s;
  s.dt = dt;
  s.max_speed = max_signal_speed(f, m, flux);
  s.total_energy = total_energy(f, m, flux);
  if (cfg.target_amplitude) s.e_a = amplitude_error(f, *cfg.target_amplitude);
  if (exact) {
    s.e_l2 = l2_error(f, *exact);
    s.e_l2_weighted = std::sqrt(f.grid.dx()) * *s.e_l2;
  }
  return s;
}

template <typename E>
[[noreturn]] void rethrow_with_context(const E& e, long steps, double t) {
  std::ostringstream os;
  os << e.what() << " [step " << steps << ", t = " << t << "]";
  throw E(os.str());
}

}  // namespace

RunRecord run(const RunConfig& config) {
  config.validate();
  const ModelParamsd m = config.model_params();
  const FluxModeld flux = config.flux_model();
  const Profile profile = config.make_case_profile();
  const std::optional<ExactFn> exact = make_exact_solution(config, profile);

  RunRecord rec;
  rec.config = config;
  Fieldd f = prepare_initial(profile, config.grid(), m, flux, config.boundary);
  Stepper<double> stepper(m, flux);

  auto record = [&](double dt) {
    rec.times.push_back(f.time);
    rec.snapshots.push_back(f);
    rec.scalars.push_back(measure(f, dt, config, m, flux, exact));
  };
  record(0.0);
  const double e0 = rec.scalars.front().total_energy;
  const double T = config.t_final;
  if (T == 0) return rec;

  const bool by_time = config.cadence.kind == CadenceKind::Time && config.cadence.dt_out > 0;
  long next_k = 1;
  auto next_output = [&]() {
    if (!by_time) return T;
    const double t = static_cast<double>(next_k) * config.cadence.dt_out;
    return t < T * (1 - 1e-12) ? t : T;
  };

  double target = next_output();
  while (true) {
    const double t_start = f.time;
    const double remaining = target - t_start;
    StepReport<double> r;
    try {
      r = stepper.step(f, remaining);
    } catch (const DegenerateStateError& e) {
      rethrow_with_context(e, rec.steps, t_start);
    } catch (const NumericalError& e) {
      rethrow_with_context(e, rec.steps, t_start);
    } catch (const DomainError& e) {
      rethrow_with_context(e, rec.steps, t_start);
    }
    ++rec.steps;
    const bool landed = r.dt_used == remaining;
    if (landed) f.time = target;
    rec.max_abs_energy_error = std::max(rec.max_abs_energy_error, std::abs(r.post_energy - e0));
    if (landed) {
      record(r.dt_used);
      if (target == T) break;
      if (by_time) ++next_k;
      target = next_output();
    } else if (!by_time && config.cadence.kind == CadenceKind::Steps &&
               rec.steps % config.cadence.every == 0) {
      record(r.dt_used);
    }
  }
  return rec;
}

SweepAxis sweep_axis_from_string(const std::string& s) {
  if (s == "alpha") return SweepAxis::Alpha;
  if (s == "beta") return SweepAxis::Beta;
  if (s == "n_cells") return SweepAxis::NCells;
  if (s == "alpha_with_scaled_beta") return SweepAxis::AlphaWithScaledBeta;
  throw ConfigError("unknown sweep axis '" + s +
                    "' (alpha, beta, n_cells, alpha_with_scaled_beta)");
}

std::string to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::Alpha: return "alpha";
    case SweepAxis::Beta: return "beta";
    case SweepAxis::NCells: return "n_cells";
    case SweepAxis::AlphaWithScaledBeta: return "alpha_with_scaled_beta";
  }
  return "alpha";
}

RunConfig sweep_member(const RunConfig& base, SweepAxis axis, double value) {
  RunConfig c = base;
  switch (axis) {
    case SweepAxis::Alpha:
      c.alpha = value;
      if (c.beta_auto) c.beta = std::abs(c.gamma) / value;
      break;
    case SweepAxis::Beta:
      c.beta = value;
      c.beta_auto = false;
      break;
    case SweepAxis::NCells:
      if (value != std::floor(value)) throw ConfigError("n_cells values must be integers");
      c.n_cells = static_cast<long>(value);
      break;
    case SweepAxis::AlphaWithScaledBeta:
      c.alpha = value;
      c.beta_auto = true;
      c.beta = std::abs(c.gamma) / value;
      break;
  }
  c.validate();
  return c;
}

double sweep_h(const RunConfig& c, SweepAxis axis) {
  switch (axis) {
    case SweepAxis::NCells: return (c.x_right - c.x_left) / static_cast<double>(c.n_cells);
    case SweepAxis::Alpha:
    case SweepAxis::AlphaWithScaledBeta: return 1.0 / c.alpha;
    case SweepAxis::Beta: return c.beta;
  }
  return 0;
}

namespace {

double axis_value(const RunConfig& c, SweepAxis axis) {
  switch (axis) {
    case SweepAxis::NCells: return static_cast<double>(c.n_cells);
    case SweepAxis::Alpha:
    case SweepAxis::AlphaWithScaledBeta: return c.alpha;
    case SweepAxis::Beta: return c.beta;
  }
  return 0;
}

}  // namespace

std::vector<EocRow> eoc_table(const std::vector<RunRecord>& records, SweepAxis axis) {
  std::vector<EocRow> rows;
  auto add = [&](const std::string& name, auto get) {
    std::vector<std::pair<double, double>> pairs;
    for (const auto& r : records) {
      const std::optional<double> e = get(r);
      if (!e) return;
      pairs.emplace_back(sweep_h(r.config, axis), *e);
    }
    std::vector<double> orders;
    bool usable = pairs.size() >= 2;
    for (const auto& [h, e] : pairs) usable = usable && e > 0;
    if (usable) {
      try {
        orders = eoc(pairs);
      } catch (const DomainError&) {
        orders.clear();
      }
    }
    for (std::size_t k = 0; k < records.size(); ++k) {
      EocRow row{axis_value(records[k].config, axis), name, pairs[k].second, std::nullopt};
      if (k > 0 && orders.size() == records.size() - 1) row.order = orders[k - 1];
      rows.push_back(row);
    }
  };
  add("energy_sup", [](const RunRecord& r) { return std::optional<double>(r.max_abs_energy_error); });
  add("e_l2_paper", [](const RunRecord& r) { return r.scalars.back().e_l2; });
  add("e_l2_weighted", [](const RunRecord& r) { return r.scalars.back().e_l2_weighted; });
  add("e_a", [](const RunRecord& r) { return r.scalars.back().e_a; });
  return rows;
}

std::vector<RunRecord> sweep(const RunConfig& base, SweepAxis axis,
                             const std::vector<double>& values, int workers,
                             const std::optional<std::filesystem::path>& out_dir) {
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  std::vector<RunConfig> members;
  for (double v : values) members.push_back(sweep_member(base, axis, v));

  std::vector<std::optional<RunRecord>> results(members.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    while (!failed.load()) {
      const std::size_t k = next.fetch_add(1);
      if (k >= members.size()) return;
      try {
        RunRecord r = run(members[k]);
        if (out_dir) write_run(r, *out_dir / (to_string(axis) + "_" + std::to_string(k)));
        results[k] = std::move(r);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed = true;
      }
    }
  };
  const int n = std::max(1, std::min<int>(workers, static_cast<int>(members.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::vector<RunRecord> out;
  for (auto& r : results) out.push_back(std::move(*r));
  if (out_dir) write_eoc_csv(eoc_table(out, axis), *out_dir / "eoc.csv");
  return out;
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot write '" + path.string() + "'");
  return os;
}

}  // namespace

void write_snapshots_csv(const RunRecord& record, const std::filesystem::path& path) {
  auto os = open_out(path);
  os << "time,cell_index,x,u,psi,w,p\n";
  for (const auto& f : record.snapshots) {
    const std::string t = format_double(f.time);
    for (Eigen::Index i = 0; i < f.size(); ++i) {
      os << t << ',' << i << ',' << format_double(f.grid.center(i));
      for (int c = 0; c < 4; ++c) os << ',' << format_double(f.cells(c, i));
      os << '\n';
    }
  }
}

void write_scalars_csv(const RunRecord& record, const std::filesystem::path& path) {
  auto os = open_out(path);
  os << "time,dt,max_speed,total_energy,energy_error,e_a,e_l2_paper,e_l2_weighted\n";
  const auto err = energy_error_series(record);
  for (std::size_t k = 0; k < record.times.size(); ++k) {
    const auto& s = record.scalars[k];
    os << format_double(record.times[k]) << ',' << format_double(s.dt) << ','
       << format_double(s.max_speed) << ',' << format_double(s.total_energy) << ','
       << format_double(err[k]) << ',' << cell(s.e_a) << ',' << cell(s.e_l2) << ','
       << cell(s.e_l2_weighted) << '\n';
  }
}

void write_eoc_csv(const std::vector<EocRow>& rows, const std::filesystem::path& path) {
  auto os = open_out(path);
  os << "axis_value,error_name,error_value,order\n";
  for (const auto& r : rows)
    os << format_double(r.axis_value) << ',' << r.error_name << ','
       << format_double(r.error_value) << ',' << cell(r.order) << '\n';
}

void write_envelope_csv(const RunRecord& record, const std::filesystem::path& path) {
  auto os = open_out(path);
  os << "time,x,xi,modulus,a_minus,a_plus\n";
  for (const auto& f : record.snapshots) {
    if (!(f.time > 0)) continue;
    const std::string t = format_double(f.time);
    for (Eigen::Index i = 0; i < f.size(); ++i) {
      const double x = f.grid.center(i);
      const double xi = x / f.time;
      if (xi < DswAsymptotics<double>::tau_minus || xi > DswAsymptotics<double>::tau_plus)
        continue;
      const double s = dsw_modulus(xi);
      os << t << ',' << format_double(x) << ',' << format_double(xi) << ',' << format_double(s)
         << ',' << format_double(1 - s * s) << ',' << format_double(1 + s * s) << '\n';
    }
  }
}

void write_run(const RunRecord& record, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    auto os = open_out(dir / "config.ini");
    os << render_config(record.config);
  }
  write_scalars_csv(record, dir / "scalars.csv");
  if (record.config.write_snapshots) write_snapshots_csv(record, dir / "snapshots.csv");
  if (record.config.oracle == OracleKind::Dsw) write_envelope_csv(record, dir / "envelope.csv");
}

}  // namespace relaxkdv
