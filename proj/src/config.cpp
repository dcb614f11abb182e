#include "relaxkdv/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace relaxkdv {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& key, const std::string& text) {
  double v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last)
    throw ConfigError("key '" + key + "': expected a number, got '" + text + "'");
  return v;
}

long parse_long(const std::string& key, const std::string& text) {
  long v = 0;
  const char* last = text.data() + text.size();
  auto res = std::from_chars(text.data(), last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    // accept integral values written in float notation, e.g. 1e3
    const double d = parse_double(key, text);
    if (d != std::floor(d)) throw ConfigError("key '" + key + "': expected an integer");
    return static_cast<long>(d);
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("key '" + key + "': expected true or false");
}

RunConfig base_case(const std::string& name, const std::string& profile, double xl, double xr,
                    long n, BoundaryKind b, const std::string& flux, double alpha, double beta,
                    double gamma, double eps, double t_final, double dt_out, OracleKind oracle) {
  RunConfig c;
  c.case_name = name;
  c.profile = profile;
  c.x_left = xl;
  c.x_right = xr;
  c.n_cells = n;
  c.boundary = b;
  c.flux = flux;
  c.alpha = alpha;
  c.beta = beta;
  c.gamma = gamma;
  c.epsilon = eps;
  c.t_final = t_final;
  c.cadence = Cadence{CadenceKind::Time, dt_out, 0};
  c.oracle = oracle;
  return c;
}

const std::set<std::string> kReservedCaseKeys = {"gamma", "epsilon", "literal", "k"};

}  // namespace

Cadence parse_cadence(const std::string& text) {
  Cadence c;
  if (text.rfind("steps:", 0) == 0) {
    c.kind = CadenceKind::Steps;
    c.every = parse_long("cadence", text.substr(6));
    if (c.every < 1) throw ConfigError("cadence: steps must be at least 1");
    return c;
  }
  const std::string num = text.rfind("dt:", 0) == 0 ? text.substr(3) : text;
  c.kind = CadenceKind::Time;
  c.dt_out = parse_double("cadence", num);
  if (!(c.dt_out >= 0)) throw ConfigError("cadence: dt_out must be nonnegative");
  return c;
}

std::string render_cadence(const Cadence& c) {
  return c.kind == CadenceKind::Steps ? "steps:" + std::to_string(c.every)
                                      : "dt:" + format_double(c.dt_out);
}

OracleKind oracle_from_string(const std::string& s) {
  if (s == "none") return OracleKind::None;
  if (s == "traveling_wave") return OracleKind::TravelingWave;
  if (s == "two_soliton") return OracleKind::TwoSoliton;
  if (s == "dsw") return OracleKind::Dsw;
  throw ConfigError("unknown oracle '" + s + "'");
}

std::string to_string(OracleKind o) {
  switch (o) {
    case OracleKind::None: return "none";
    case OracleKind::TravelingWave: return "traveling_wave";
    case OracleKind::TwoSoliton: return "two_soliton";
    case OracleKind::Dsw: return "dsw";
  }
  return "none";
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "soliton1", "soliton2", "sech_dsw",     "riemann_dsw",
      "kdvb_tw",  "mkdvb_uc", "gardner_dark", "gardner_bright"};
  return names;
}

RunConfig catalog_preset(const std::string& name) {
  using B = BoundaryKind;
  using O = OracleKind;
  if (name == "soliton1") {
    auto c = base_case(name, "soliton1", -2, 2, 1000, B::Periodic, "kdv6", 1e3, 1e-6, -1e-2, 0,
                       100, 0.5, O::TravelingWave);
    c.case_params = {{"speed", 1.0}};
    c.target_amplitude = 0.5;
    return c;
  }
  if (name == "soliton2") {
    auto c = base_case(name, "soliton2", -15, 15, 1000, B::Periodic, "kdv6", 4e3, 1e-6, -1, 0,
                       60, 0.5, O::TwoSoliton);
    c.case_params = {{"v1", 4.0}, {"v2", 1.0}, {"x1", -9.0}, {"x2", -2.0}};
    return c;
  }
  if (name == "sech_dsw")
    return base_case(name, "sech_hump", -5, 5, 8000, B::Periodic, "kdv6", 1e3, 1e-7, -1e-4, 0,
                     0.4, 0.02, O::None);
  if (name == "riemann_dsw") {
    auto c = base_case(name, "smooth_step", -8, 2, 10000, B::PseudoNeumann, "burgers", 1e3,
                       1e-7, -1e-4, 0, 3, 0.05, O::Dsw);
    c.case_params = {{"omega", 1e-3}};
    return c;
  }
  if (name == "kdvb_tw")
    return base_case(name, "kdvb_tw", -3, 1, 2000, B::PseudoNeumann, "burgers", 2e3, 1e-6, 1e-4,
                     1e-2, 10, 0.1, O::TravelingWave);
  if (name == "mkdvb_uc")
    return base_case(name, "mkdvb_uc", -0.1, 2, 10000, B::PseudoNeumann, "mkdv", 1e3, 1e-6,
                     1e-5, 1e-2, 0.1, 0.005, O::TravelingWave);
  if (name == "gardner_dark" || name == "gardner_bright") {
    auto c = base_case(name, name, -50, 50, 2000, B::Periodic, "gardner", 1e3, 1e-6, -1, 0, 0,
                       5, O::TravelingWave);
    c.flux_k = 1.0;
    c.case_params = {{"eps", 1e-4}};
    const double e = 1e-4;
    c.t_final = 500.0 / (1.0 - e * e);  // five whole transits at V = 1 - eps^2
    return c;
  }
  throw ConfigError("unknown case '" + name + "'");
}

ModelParamsd RunConfig::model_params() const {
  return ModelParamsd::make(alpha, beta, gamma, epsilon, cfl);
}

FluxModeld RunConfig::flux_model() const { return make_flux_model<double>(flux, flux_k); }

Gridd RunConfig::grid() const { return Gridd(x_left, x_right, n_cells); }

Profile RunConfig::make_case_profile() const {
  ProfileParams p = case_params;
  if (profile == "soliton1") {
    p["gamma"] = gamma;
  } else if (profile == "kdvb_tw") {
    p["gamma"] = gamma;
    p["epsilon"] = epsilon;
  } else if (profile == "mkdvb_uc") {
    p["gamma"] = gamma;
    p["epsilon"] = epsilon;
    p["literal"] = uc_mode == "literal" ? 1.0 : 0.0;
  } else if (profile == "gardner_dark" || profile == "gardner_bright") {
    if (flux_k) p["k"] = *flux_k;
  }
  return make_profile(profile, p);
}

void RunConfig::validate() const {
  if (n_cells < 4) throw ConfigError("n_cells must be at least 4");
  if (!(x_right > x_left)) throw ConfigError("x_right must exceed x_left");
  model_params();
  flux_model();
  if (!(t_final >= 0) || !std::isfinite(t_final))
    throw ConfigError("t_final must be finite and nonnegative");
  if (uc_mode != "formula" && uc_mode != "literal")
    throw ConfigError("uc_mode must be 'formula' or 'literal'");
  for (const auto& [k, v] : case_params)
    if (kReservedCaseKeys.count(k))
      throw ConfigError("case parameter '" + k + "' is derived from [model]; set it there");
  const Profile pr = make_case_profile();
  if (cadence.kind == CadenceKind::Steps && cadence.every < 1)
    throw ConfigError("cadence: steps must be at least 1");
  if (cadence.kind == CadenceKind::Time && !(cadence.dt_out >= 0))
    throw ConfigError("cadence: dt_out must be nonnegative");
  if (oracle == OracleKind::TravelingWave && !pr.speed)
    throw ConfigError("oracle traveling_wave needs a profile with a wave speed");
  if (oracle == OracleKind::TwoSoliton && profile != "soliton2")
    throw ConfigError("oracle two_soliton needs profile soliton2");
  if (oracle == OracleKind::Dsw && profile != "smooth_step")
    throw ConfigError("oracle dsw needs profile smooth_step");
}

RunConfig parse_config(const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    std::istringstream is(text);
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.message() + " (line " +
                      std::to_string(e.line()) + ")");
  }

  std::string name;
  if (auto c = tree.get_child_optional("case"))
    if (auto n = c->get_optional<std::string>("name")) name = *n;
  if (name.empty()) throw ConfigError("missing [case] name");

  RunConfig cfg;
  if (name == "custom") {
    cfg.case_name = "custom";
  } else {
    cfg = catalog_preset(name);
  }

  std::optional<std::string> beta_text;
  for (const auto& [section, body] : tree) {
    if (!body.data().empty() && body.empty())
      throw ConfigError("unknown key '" + section + "' outside any section");
    for (const auto& [key, node] : body) {
      const std::string v = node.data();
      const std::string full = section + "." + key;
      if (section == "case") {
        if (key == "name") continue;
        if (key == "profile") cfg.profile = v;
        else if (key == "uc_mode") cfg.uc_mode = v;
        else {
          if (kReservedCaseKeys.count(key))
            throw ConfigError("unknown key '" + full + "' (set it in [model])");
          cfg.case_params[key] = parse_double(full, v);
        }
      } else if (section == "domain") {
        if (key == "x_left") cfg.x_left = parse_double(full, v);
        else if (key == "x_right") cfg.x_right = parse_double(full, v);
        else if (key == "n_cells") cfg.n_cells = parse_long(full, v);
        else if (key == "boundary") cfg.boundary = boundary_from_string(v);
        else throw ConfigError("unknown key '" + full + "'");
      } else if (section == "model") {
        if (key == "flux") cfg.flux = v;
        else if (key == "k") cfg.flux_k = parse_double(full, v);
        else if (key == "alpha") cfg.alpha = parse_double(full, v);
        else if (key == "beta") beta_text = v;
        else if (key == "gamma") cfg.gamma = parse_double(full, v);
        else if (key == "epsilon") cfg.epsilon = parse_double(full, v);
        else if (key == "cfl") cfg.cfl = parse_double(full, v);
        else throw ConfigError("unknown key '" + full + "'");
      } else if (section == "time") {
        if (key == "t_final") cfg.t_final = parse_double(full, v);
        else throw ConfigError("unknown key '" + full + "'");
      } else if (section == "output") {
        if (key == "cadence") cfg.cadence = parse_cadence(v);
        else if (key == "directory") cfg.out_dir = v;
        else if (key == "snapshots") cfg.write_snapshots = parse_bool(full, v);
        else throw ConfigError("unknown key '" + full + "'");
      } else if (section == "oracle") {
        if (key == "exact") cfg.oracle = oracle_from_string(v);
        else if (key == "target_amplitude") cfg.target_amplitude = parse_double(full, v);
        else throw ConfigError("unknown key '" + full + "'");
      } else {
        throw ConfigError("unknown section '[" + section + "]'");
      }
    }
  }

  if (beta_text) {
    if (*beta_text == "auto") {
      cfg.beta_auto = true;
    } else {
      cfg.beta_auto = false;
      cfg.beta = parse_double("model.beta", *beta_text);
    }
  }
  if (cfg.profile.empty()) throw ConfigError("custom case needs [case] profile");
  if (cfg.alpha <= 0) throw ConfigError("alpha must be positive");
  if (cfg.beta_auto) cfg.beta = std::abs(cfg.gamma) / cfg.alpha;
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string render_config(const RunConfig& c) {
  std::ostringstream os;
  os << "[case]\n";
  os << "name = " << c.case_name << "\n";
  os << "profile = " << c.profile << "\n";
  os << "uc_mode = " << c.uc_mode << "\n";
  for (const auto& [k, v] : c.case_params) os << k << " = " << format_double(v) << "\n";
  os << "\n[domain]\n";
  os << "x_left = " << format_double(c.x_left) << "\n";
  os << "x_right = " << format_double(c.x_right) << "\n";
  os << "n_cells = " << c.n_cells << "\n";
  os << "boundary = " << to_string(c.boundary) << "\n";
  os << "\n[model]\n";
  os << "flux = " << c.flux << "\n";
  if (c.flux_k) os << "k = " << format_double(*c.flux_k) << "\n";
  os << "alpha = " << format_double(c.alpha) << "\n";
  os << "beta = " << (c.beta_auto ? std::string("auto") : format_double(c.beta)) << "\n";
  os << "gamma = " << format_double(c.gamma) << "\n";
  os << "epsilon = " << format_double(c.epsilon) << "\n";
  os << "cfl = " << format_double(c.cfl) << "\n";
  os << "\n[time]\n";
  os << "t_final = " << format_double(c.t_final) << "\n";
  os << "\n[output]\n";
  os << "cadence = " << render_cadence(c.cadence) << "\n";
  os << "directory = " << c.out_dir << "\n";
  os << "snapshots = " << (c.write_snapshots ? "true" : "false") << "\n";
  os << "\n[oracle]\n";
  os << "exact = " << to_string(c.oracle) << "\n";
  if (c.target_amplitude) os << "target_amplitude = " << format_double(*c.target_amplitude) << "\n";
  return os.str();
}

}  // namespace relaxkdv
