#include "zeno/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "zeno/error.hpp"
#include "zeno/io.hpp"

namespace zeno {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& prefix,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) throw Error("cli-io", "unknown config key: " + prefix + item.key());
  }
}

double get_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw Error("cli-io", key + " must be a number");
  return v.get<double>();
}

int get_int(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw Error("cli-io", key + " must be an integer");
  return v.get<int>();
}

bool get_bool(const json& v, const std::string& key) {
  if (!v.is_boolean()) throw Error("cli-io", key + " must be a boolean");
  return v.get<bool>();
}

std::string get_string(const json& v, const std::string& key) {
  if (!v.is_string()) throw Error("cli-io", key + " must be a string");
  return v.get<std::string>();
}

const json* subobject(const json& j, const char* key) {
  if (!j.contains(key)) return nullptr;
  const json& v = j.at(key);
  if (!v.is_object()) throw Error("cli-io", std::string(key) + " must be an object");
  return &v;
}

double parse_double(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const double parsed = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw Error("cli-io", "invalid number for " + key + ": " + value);
  }
}

int parse_int(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const long parsed = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return static_cast<int>(parsed);
  } catch (const std::exception&) {
    throw Error("cli-io", "invalid integer for " + key + ": " + value);
  }
}

bool parse_bool(const std::string& value, const std::string& key) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw Error("cli-io", "invalid boolean for " + key + ": " + value);
}

std::vector<int> parse_int_list(const std::string& value, const std::string& key) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= value.size()) {
    const std::size_t comma = value.find(',', pos);
    const std::string item =
        value.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    out.push_back(parse_int(item, key));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

double RunConfig::resolved_sample_dt() const {
  return sample_dt > 0.0 ? sample_dt : model.delta_t / 200.0;
}

void RunConfig::validate() const {
  model.validate();
  qfi.validate();
  search.validate();
  if (sample_dt < 0.0) throw Error("cli-io", "sample_dt must be >= 0");
  if (!(tau > 0.0)) throw Error("cli-io", "tau must be > 0");
  if (n_list.empty()) throw Error("cli-io", "n_list must not be empty");
  for (int n : n_list)
    if (n < 1) throw Error("cli-io", "n_list entries must be >= 1");
  if (output_dir.empty()) throw Error("cli-io", "output_dir must not be empty");
  if (!(sweep.r_min >= 0.0 && sweep.r_max >= sweep.r_min && sweep.r_step > 0.0))
    throw Error("cli-io", "invalid sweep range");
  if (!(ropt.r_lo >= 0.0 && ropt.r_hi > ropt.r_lo))
    throw Error("cli-io", "invalid ropt bracket");
  if (!(rcrit.r_lo >= 0.0 && rcrit.r_hi > rcrit.r_lo))
    throw Error("cli-io", "invalid rcrit bracket");
  if (!(grid.r_min >= 0.0 && grid.r_max > grid.r_min))
    throw Error("cli-io", "invalid grid r range");
  if (!(grid.tau_lo >= 0.0 && grid.tau_hi > grid.tau_lo))
    throw Error("cli-io", "invalid grid tau range");
  if (grid.n_r < 2 || grid.n_tau < 2) throw Error("cli-io", "grid resolution too small");
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw Error("cli-io", "config must be a JSON object");
  check_keys(j, "", {"model", "qfi", "search", "sample_dt", "tau", "n_list", "sweep", "ropt",
                     "rcrit", "grid", "output_dir", "seedless"});
  RunConfig cfg;

  if (const json* m = subobject(j, "model")) {
    check_keys(*m, "model.", {"nu", "n_memory", "omega", "r", "delta_t"});
    if (m->contains("nu")) cfg.model.nu = get_number(m->at("nu"), "model.nu");
    if (m->contains("n_memory")) cfg.model.n_memory = get_int(m->at("n_memory"), "model.n_memory");
    if (m->contains("omega")) cfg.model.omega = get_number(m->at("omega"), "model.omega");
    if (m->contains("r")) cfg.model.r = get_number(m->at("r"), "model.r");
    if (m->contains("delta_t")) cfg.model.delta_t = get_number(m->at("delta_t"), "model.delta_t");
  }
  if (const json* q = subobject(j, "qfi")) {
    check_keys(*q, "qfi.", {"eig_floor", "fd_step"});
    if (q->contains("eig_floor")) cfg.qfi.eig_floor = get_number(q->at("eig_floor"), "qfi.eig_floor");
    if (q->contains("fd_step")) cfg.qfi.fd_step = get_number(q->at("fd_step"), "qfi.fd_step");
  }
  if (const json* s = subobject(j, "search")) {
    check_keys(*s, "search.",
               {"erasure_tol", "dt_scan_max", "dt_scan_points", "refine_tol", "jump_threshold"});
    if (s->contains("erasure_tol"))
      cfg.search.erasure_tol = get_number(s->at("erasure_tol"), "search.erasure_tol");
    if (s->contains("dt_scan_max"))
      cfg.search.dt_scan_max = get_number(s->at("dt_scan_max"), "search.dt_scan_max");
    if (s->contains("dt_scan_points"))
      cfg.search.dt_scan_points = get_int(s->at("dt_scan_points"), "search.dt_scan_points");
    if (s->contains("refine_tol"))
      cfg.search.refine_tol = get_number(s->at("refine_tol"), "search.refine_tol");
    if (s->contains("jump_threshold"))
      cfg.search.jump_threshold = get_number(s->at("jump_threshold"), "search.jump_threshold");
  }
  if (j.contains("sample_dt")) cfg.sample_dt = get_number(j.at("sample_dt"), "sample_dt");
  if (j.contains("tau")) cfg.tau = get_number(j.at("tau"), "tau");
  if (j.contains("n_list")) {
    const json& list = j.at("n_list");
    if (!list.is_array()) throw Error("cli-io", "n_list must be an array");
    cfg.n_list.clear();
    for (const json& v : list) cfg.n_list.push_back(get_int(v, "n_list entry"));
  }
  if (const json* s = subobject(j, "sweep")) {
    check_keys(*s, "sweep.", {"r_min", "r_max", "r_step", "asymptote"});
    if (s->contains("r_min")) cfg.sweep.r_min = get_number(s->at("r_min"), "sweep.r_min");
    if (s->contains("r_max")) cfg.sweep.r_max = get_number(s->at("r_max"), "sweep.r_max");
    if (s->contains("r_step")) cfg.sweep.r_step = get_number(s->at("r_step"), "sweep.r_step");
    if (s->contains("asymptote"))
      cfg.sweep.asymptote = get_bool(s->at("asymptote"), "sweep.asymptote");
  }
  if (const json* b = subobject(j, "ropt")) {
    check_keys(*b, "ropt.", {"r_lo", "r_hi"});
    if (b->contains("r_lo")) cfg.ropt.r_lo = get_number(b->at("r_lo"), "ropt.r_lo");
    if (b->contains("r_hi")) cfg.ropt.r_hi = get_number(b->at("r_hi"), "ropt.r_hi");
  }
  if (const json* b = subobject(j, "rcrit")) {
    check_keys(*b, "rcrit.", {"r_lo", "r_hi"});
    if (b->contains("r_lo")) cfg.rcrit.r_lo = get_number(b->at("r_lo"), "rcrit.r_lo");
    if (b->contains("r_hi")) cfg.rcrit.r_hi = get_number(b->at("r_hi"), "rcrit.r_hi");
  }
  if (const json* g = subobject(j, "grid")) {
    check_keys(*g, "grid.", {"r_min", "r_max", "tau_lo", "tau_hi", "n_r", "n_tau"});
    if (g->contains("r_min")) cfg.grid.r_min = get_number(g->at("r_min"), "grid.r_min");
    if (g->contains("r_max")) cfg.grid.r_max = get_number(g->at("r_max"), "grid.r_max");
    if (g->contains("tau_lo")) cfg.grid.tau_lo = get_number(g->at("tau_lo"), "grid.tau_lo");
    if (g->contains("tau_hi")) cfg.grid.tau_hi = get_number(g->at("tau_hi"), "grid.tau_hi");
    if (g->contains("n_r")) cfg.grid.n_r = get_int(g->at("n_r"), "grid.n_r");
    if (g->contains("n_tau")) cfg.grid.n_tau = get_int(g->at("n_tau"), "grid.n_tau");
  }
  if (j.contains("output_dir")) cfg.output_dir = get_string(j.at("output_dir"), "output_dir");
  if (j.contains("seedless") && !(j.at("seedless").is_boolean() && j.at("seedless").get<bool>()))
    throw Error("cli-io", "seedless must be true");
  return cfg;
}

json config_to_json(const RunConfig& cfg) {
  json j;
  j["model"] = {{"nu", cfg.model.nu},
                {"n_memory", cfg.model.n_memory},
                {"omega", cfg.model.omega},
                {"r", cfg.model.r},
                {"delta_t", cfg.model.delta_t}};
  j["qfi"] = {{"eig_floor", cfg.qfi.eig_floor}, {"fd_step", cfg.qfi.fd_step}};
  j["search"] = {{"erasure_tol", cfg.search.erasure_tol},
                 {"dt_scan_max", cfg.search.dt_scan_max},
                 {"dt_scan_points", cfg.search.dt_scan_points},
                 {"refine_tol", cfg.search.refine_tol},
                 {"jump_threshold", cfg.search.jump_threshold}};
  j["sample_dt"] = cfg.sample_dt;
  j["tau"] = cfg.tau;
  j["n_list"] = cfg.n_list;
  j["sweep"] = {{"r_min", cfg.sweep.r_min},
                {"r_max", cfg.sweep.r_max},
                {"r_step", cfg.sweep.r_step},
                {"asymptote", cfg.sweep.asymptote}};
  j["ropt"] = {{"r_lo", cfg.ropt.r_lo}, {"r_hi", cfg.ropt.r_hi}};
  j["rcrit"] = {{"r_lo", cfg.rcrit.r_lo}, {"r_hi", cfg.rcrit.r_hi}};
  j["grid"] = {{"r_min", cfg.grid.r_min},
               {"r_max", cfg.grid.r_max},
               {"tau_lo", cfg.grid.tau_lo},
               {"tau_hi", cfg.grid.tau_hi},
               {"n_r", cfg.grid.n_r},
               {"n_tau", cfg.grid.n_tau}};
  j["output_dir"] = cfg.output_dir;
  j["seedless"] = true;
  return j;
}

RunConfig load_config(const std::filesystem::path& file) {
  json j;
  try {
    j = json::parse(read_text_file(file));
  } catch (const json::exception& e) {
    throw Error("cli-io", "invalid JSON in " + file.string() + ": " + e.what());
  }
  return config_from_json(j);
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw Error("cli-io", "override must look like key=value: " + assignment);
  std::string key = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);

  if (key.find('.') == std::string::npos) {
    // Bare keys resolve to their unique section.
    static const std::map<std::string, std::string> sections = {
        {"nu", "model"},           {"n_memory", "model"},
        {"omega", "model"},        {"r", "model"},
        {"delta_t", "model"},      {"eig_floor", "qfi"},
        {"fd_step", "qfi"},        {"erasure_tol", "search"},
        {"dt_scan_max", "search"}, {"dt_scan_points", "search"},
        {"refine_tol", "search"},  {"jump_threshold", "search"},
        {"r_min", "sweep"},        {"r_max", "sweep"},
        {"r_step", "sweep"},       {"asymptote", "sweep"},
        {"tau_lo", "grid"},        {"tau_hi", "grid"},
        {"n_r", "grid"},           {"n_tau", "grid"}};
    if (key == "r_lo" || key == "r_hi")
      throw Error("cli-io", "ambiguous key " + key + "; use ropt." + key + " or rcrit." + key);
    const auto it = sections.find(key);
    if (it != sections.end()) key = it->second + "." + key;
  }

  if (key == "sample_dt") cfg.sample_dt = parse_double(value, key);
  else if (key == "tau") cfg.tau = parse_double(value, key);
  else if (key == "output_dir") cfg.output_dir = value;
  else if (key == "n_list") cfg.n_list = parse_int_list(value, key);
  else if (key == "model.nu") cfg.model.nu = parse_double(value, key);
  else if (key == "model.n_memory") cfg.model.n_memory = parse_int(value, key);
  else if (key == "model.omega") cfg.model.omega = parse_double(value, key);
  else if (key == "model.r") cfg.model.r = parse_double(value, key);
  else if (key == "model.delta_t") cfg.model.delta_t = parse_double(value, key);
  else if (key == "qfi.eig_floor") cfg.qfi.eig_floor = parse_double(value, key);
  else if (key == "qfi.fd_step") cfg.qfi.fd_step = parse_double(value, key);
  else if (key == "search.erasure_tol") cfg.search.erasure_tol = parse_double(value, key);
  else if (key == "search.dt_scan_max") cfg.search.dt_scan_max = parse_double(value, key);
  else if (key == "search.dt_scan_points") cfg.search.dt_scan_points = parse_int(value, key);
  else if (key == "search.refine_tol") cfg.search.refine_tol = parse_double(value, key);
  else if (key == "search.jump_threshold") cfg.search.jump_threshold = parse_double(value, key);
  else if (key == "sweep.r_min") cfg.sweep.r_min = parse_double(value, key);
  else if (key == "sweep.r_max") cfg.sweep.r_max = parse_double(value, key);
  else if (key == "sweep.r_step") cfg.sweep.r_step = parse_double(value, key);
  else if (key == "sweep.asymptote") cfg.sweep.asymptote = parse_bool(value, key);
  else if (key == "ropt.r_lo") cfg.ropt.r_lo = parse_double(value, key);
  else if (key == "ropt.r_hi") cfg.ropt.r_hi = parse_double(value, key);
  else if (key == "rcrit.r_lo") cfg.rcrit.r_lo = parse_double(value, key);
  else if (key == "rcrit.r_hi") cfg.rcrit.r_hi = parse_double(value, key);
  else if (key == "grid.r_min") cfg.grid.r_min = parse_double(value, key);
  else if (key == "grid.r_max") cfg.grid.r_max = parse_double(value, key);
  else if (key == "grid.tau_lo") cfg.grid.tau_lo = parse_double(value, key);
  else if (key == "grid.tau_hi") cfg.grid.tau_hi = parse_double(value, key);
  else if (key == "grid.n_r") cfg.grid.n_r = parse_int(value, key);
  else if (key == "grid.n_tau") cfg.grid.n_tau = parse_int(value, key);
  else throw Error("cli-io", "unknown config key: " + key);
}

void merge_landmarks(const std::filesystem::path& dir,
                     const std::map<std::string, double>& values) {
  const std::filesystem::path file = dir / "landmarks.json";
  json obj = json::object();
  if (std::filesystem::exists(file)) {
    try {
      obj = json::parse(read_text_file(file));
    } catch (const json::exception& e) {
      throw Error("cli-io", "invalid JSON in " + file.string() + ": " + e.what());
    }
    if (!obj.is_object()) throw Error("cli-io", file.string() + " must hold a JSON object");
  }
  for (const auto& [key, value] : values) obj[key] = value;
  write_text_file(file, obj.dump(2) + "\n");
}

json run_manifest(const std::string& command, const RunConfig& cfg) {
  json j;
  j["artifact"] = "zeno-lab";
  j["version"] = "0.1.0";
  j["command"] = command;
  j["config"] = config_to_json(cfg);
  return j;
}

}  // namespace zeno
