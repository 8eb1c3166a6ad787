#include "excivib/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "excivib/errors.hpp"

namespace excivib {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const KeyValueMap& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw ValidationError("missing config key '" + key + "'");
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ValidationError("config key '" + key + "' is not a number: '" +
                          it->second + "'");
  }
}

int parse_int(const KeyValueMap& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw ValidationError("missing config key '" + key + "'");
  try {
    std::size_t pos = 0;
    const int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ValidationError("config key '" + key + "' is not an integer: '" +
                          it->second + "'");
  }
}

std::string get_or(const KeyValueMap& kv, const std::string& key,
                   const std::string& fallback) {
  const auto it = kv.find(key);
  return it == kv.end() ? fallback : it->second;
}

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& key) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ValidationError("config key '" + key + "' has a bad entry: '" +
                            item + "'");
    }
  }
  return values;
}

std::string render_double_list(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += format_sci(values[i]);
  }
  return out;
}

}  // namespace

KeyValueMap parse_key_values(std::istream& in) {
  KeyValueMap kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("config line " + std::to_string(lineno) +
                            " has no '=': '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ValidationError("config line " + std::to_string(lineno) +
                            " has an empty key");
    }
    kv[key] = value;
  }
  return kv;
}

KeyValueMap parse_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  return parse_key_values(in);
}

ModelSpec spec_from_config(const KeyValueMap& kv) {
  ModelSpec spec;
  spec.lattice.site_count = parse_int(kv, "lattice.n");
  spec.lattice.lattice_constant = parse_double(kv, "lattice.a_angstrom");
  spec.lattice.boundary =
      boundary_from_string(get_or(kv, "lattice.boundary", "open"));

  spec.atom.omega_a = parse_double(kv, "atom.omega_a_ev");
  spec.atom.dipole = parse_double(kv, "atom.mu_e_angstrom");
  spec.atom.theta = deg_to_rad(parse_double(kv, "atom.theta_deg"));
  spec.atom.rest_mass_energy = parse_double(kv, "atom.mc2_ev");

  spec.vib.omega_g = parse_double(kv, "vib.omega_g_ev");
  spec.vib.omega_e = parse_double(kv, "vib.omega_e_ev");
  spec.vib.n_max = parse_int(kv, "vib.n_max");
  spec.vib.q_max = parse_int(kv, "vib.q_max");

  spec.onsite.mode = onsite_mode_from_string(get_or(kv, "onsite.mode", "direct"));
  if (spec.onsite.mode == OnSiteMode::Direct) {
    spec.onsite.m_g = kv.count("onsite.m_g_ev") ? parse_double(kv, "onsite.m_g_ev") : 0.0;
    spec.onsite.m_e = kv.count("onsite.m_e_ev") ? parse_double(kv, "onsite.m_e_ev") : 0.0;
  } else {
    const auto git = kv.find("onsite.dg_coeffs");
    const auto eit = kv.find("onsite.de_coeffs");
    if (git == kv.end() || eit == kv.end()) {
      throw ValidationError(
          "polynomial onsite mode needs onsite.dg_coeffs and onsite.de_coeffs");
    }
    spec.onsite.d_g_coeffs = parse_double_list(git->second, "onsite.dg_coeffs");
    spec.onsite.d_e_coeffs = parse_double_list(eit->second, "onsite.de_coeffs");
  }

  return validate_spec(spec);
}

KeyValueMap config_from_spec(const ModelSpec& spec) {
  KeyValueMap kv;
  kv["lattice.n"] = std::to_string(spec.lattice.site_count);
  kv["lattice.a_angstrom"] = format_sci(spec.lattice.lattice_constant);
  kv["lattice.boundary"] = to_string(spec.lattice.boundary);
  kv["atom.omega_a_ev"] = format_sci(spec.atom.omega_a);
  kv["atom.mu_e_angstrom"] = format_sci(spec.atom.dipole);
  kv["atom.theta_deg"] = format_sci(rad_to_deg(spec.atom.theta));
  kv["atom.mc2_ev"] = format_sci(spec.atom.rest_mass_energy);
  kv["vib.omega_g_ev"] = format_sci(spec.vib.omega_g);
  kv["vib.omega_e_ev"] = format_sci(spec.vib.omega_e);
  kv["vib.n_max"] = std::to_string(spec.vib.n_max);
  kv["vib.q_max"] = std::to_string(spec.vib.q_max);
  kv["onsite.mode"] = to_string(spec.onsite.mode);
  if (spec.onsite.mode == OnSiteMode::Direct) {
    kv["onsite.m_g_ev"] = format_sci(spec.onsite.m_g);
    kv["onsite.m_e_ev"] = format_sci(spec.onsite.m_e);
  } else {
    kv["onsite.dg_coeffs"] = render_double_list(spec.onsite.d_g_coeffs);
    kv["onsite.de_coeffs"] = render_double_list(spec.onsite.d_e_coeffs);
  }
  return kv;
}

std::string render_config(const KeyValueMap& kv) {
  std::string out;
  for (const auto& [key, value] : kv) {
    out += key;
    out += " = ";
    out += value;
    out += "\n";
  }
  return out;
}

std::string format_sci(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", value);
  return buf;
}

}  // namespace excivib
