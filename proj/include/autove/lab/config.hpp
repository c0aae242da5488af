// Copyright 2026 The AutoVE Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUTOVE_LAB_CONFIG_HPP_
#define AUTOVE_LAB_CONFIG_HPP_

// Flat `key = value` experiment configuration. `#` starts a comment. The
// profile key (desk or paper) sets every default first, then the remaining
// keys override it, whatever their order in the file.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "autove/csv.hpp"
#include "autove/qd.hpp"
#include "autove/vae.hpp"

namespace autove::lab {

inline constexpr int kConfigVersion = 1;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Profile { kDesk, kPaper };

struct LabConfig {
  Profile profile = Profile::kDesk;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "runs";
  int repetitions = 5;

  std::vector<int> base_shapes = {0};

  Architecture architecture = Architecture::kDenseReference;
  std::vector<int> latent_dims = {8};
  int dense_hidden = 256;
  int filter_multiplier = 1;
  double beta = 4.0;
  double gamma_max = 5.0;
  double learning_rate = 0.001;
  int batch_size = 128;
  int epochs = 300;
  double validation_fraction = 0.1;
  Reduction reconstruction = Reduction::kPixelSum;

  std::size_t capacity = 64;
  int generations = 128;
  int children_per_gen = 32;
  double mutation_sigma = 0.1;
  int tournament_size = 0;
  bool reencode_latent = false;

  // VAE used by the expansion experiment. The dense decoder copies
  // irregular training shapes pixel for pixel, so latent search would be
  // compared against a decoder without the conv one's smoothing.
  Architecture expansion_architecture = Architecture::kConvPaper;
  std::vector<int> expansion_latent_dims = {8};
  int expansion_filter_multiplier = 1;

  double alpha = 0.01;
  bool galleries = true;
  bool save_models = true;

  VaeConfig vae(int latent_dim, std::uint64_t vae_seed) const {
    VaeConfig c;
    c.latent_dim = latent_dim;
    c.architecture = architecture;
    c.dense_hidden = dense_hidden;
    c.filter_multiplier = filter_multiplier;
    c.beta = beta;
    c.gamma_max = gamma_max;
    c.learning_rate = learning_rate;
    c.batch_size = batch_size;
    c.epochs = epochs;
    c.validation_fraction = validation_fraction;
    c.reconstruction = reconstruction;
    c.seed = vae_seed;
    return c;
  }

  VaeConfig expansion_vae(int latent_dim, std::uint64_t vae_seed) const {
    VaeConfig c = vae(latent_dim, vae_seed);
    c.architecture = expansion_architecture;
    c.filter_multiplier = expansion_filter_multiplier;
    return c;
  }

  QdConfig qd(SearchSpace space, std::uint64_t qd_seed) const {
    QdConfig c;
    c.generations = generations;
    c.children_per_gen = children_per_gen;
    c.mutation_sigma = mutation_sigma;
    c.capacity = capacity;
    c.search_space = space;
    c.seed = qd_seed;
    c.tournament_size = tournament_size;
    c.reencode_latent = reencode_latent;
    return c;
  }
};

inline LabConfig desk_profile() { return LabConfig{}; }

inline LabConfig paper_profile() {
  LabConfig c;
  c.profile = Profile::kPaper;
  c.repetitions = 10;
  c.base_shapes = {0, 1, 2, 3, 4};
  c.architecture = Architecture::kConvPaper;
  c.latent_dims = {4, 8, 16};
  c.epochs = 3000;
  c.capacity = 512;
  c.generations = 1024;
  c.expansion_architecture = Architecture::kConvPaper;
  c.expansion_latent_dims = {8, 16, 32};
  c.expansion_filter_multiplier = 4;
  return c;
}

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline long parse_int(const std::string& key, const std::string& v, long lo, long hi) {
  std::size_t used = 0;
  long out = 0;
  try {
    out = std::stol(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw ConfigError(key + ": not an integer: '" + v + "'");
  if (out < lo || out > hi) {
    throw ConfigError(key + ": " + v + " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  return out;
}

inline double parse_double(const std::string& key, const std::string& v, double lo, double hi,
                           bool open_low = false) {
  double out = 0.0;
  try {
    out = parse_real(v);
  } catch (const std::exception&) {
    throw ConfigError(key + ": not a number: '" + v + "'");
  }
  if (!(out <= hi) || !(open_low ? out > lo : out >= lo)) {
    throw ConfigError(key + ": " + v + " out of range");
  }
  return out;
}

inline bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError(key + ": expected true or false, got '" + v + "'");
}

inline std::vector<int> parse_int_list(const std::string& key, const std::string& v, long lo,
                                       long hi) {
  std::vector<int> out;
  for (const auto& part : split(v, ',')) out.push_back(static_cast<int>(parse_int(key, trim(part), lo, hi)));
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

inline Architecture parse_arch(const std::string& key, const std::string& v) {
  try {
    return parse_architecture(v);
  } catch (const std::exception&) {
    throw ConfigError(key + ": unknown architecture '" + v + "'");
  }
}

inline Reduction parse_reduce(const std::string& key, const std::string& v) {
  try {
    return parse_reduction(v);
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected sum or mean, got '" + v + "'");
  }
}

inline std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

using Setter = std::function<void(LabConfig&, const std::string&, const std::string&)>;

inline const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"seed", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.seed = static_cast<std::uint64_t>(parse_int(k, v, 0, 1L << 62));
       }},
      {"output_dir", [](LabConfig& c, const std::string&, const std::string& v) { c.output_dir = v; }},
      {"repetitions", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.repetitions = static_cast<int>(parse_int(k, v, 1, 1000));
       }},
      {"dataset.base_shapes", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.base_shapes = parse_int_list(k, v, 0, 4);
       }},
      {"vae.architecture", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.architecture = parse_arch(k, v);
       }},
      {"vae.latent_dims", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.latent_dims = parse_int_list(k, v, 1, 256);
       }},
      {"vae.dense_hidden", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.dense_hidden = static_cast<int>(parse_int(k, v, 1, 65536));
       }},
      {"vae.filter_multiplier", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.filter_multiplier = static_cast<int>(parse_int(k, v, 1, 64));
       }},
      {"vae.beta", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.beta = parse_double(k, v, 0.0, 1e6);
       }},
      {"vae.gamma_max", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.gamma_max = parse_double(k, v, 0.0, 1e6);
       }},
      {"vae.learning_rate", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.learning_rate = parse_double(k, v, 0.0, 10.0, true);
       }},
      {"vae.batch_size", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.batch_size = static_cast<int>(parse_int(k, v, 1, 1 << 20));
       }},
      {"vae.epochs", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.epochs = static_cast<int>(parse_int(k, v, 1, 1 << 24));
       }},
      {"vae.validation_fraction", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.validation_fraction = parse_double(k, v, 0.0, 0.99, true);
       }},
      {"vae.reconstruction", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.reconstruction = parse_reduce(k, v);
       }},
      {"qd.capacity", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.capacity = static_cast<std::size_t>(parse_int(k, v, 2, 1 << 20));
       }},
      {"qd.generations", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.generations = static_cast<int>(parse_int(k, v, 0, 1 << 24));
       }},
      {"qd.children_per_gen", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.children_per_gen = static_cast<int>(parse_int(k, v, 1, 1 << 20));
       }},
      {"qd.mutation_sigma", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.mutation_sigma = parse_double(k, v, 0.0, 100.0, true);
       }},
      {"qd.tournament_size", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.tournament_size = static_cast<int>(parse_int(k, v, 0, 1 << 20));
       }},
      {"qd.reencode_latent", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.reencode_latent = parse_bool(k, v);
       }},
      {"expansion.architecture", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.expansion_architecture = parse_arch(k, v);
       }},
      {"expansion.latent_dims", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.expansion_latent_dims = parse_int_list(k, v, 1, 256);
       }},
      {"expansion.filter_multiplier", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.expansion_filter_multiplier = static_cast<int>(parse_int(k, v, 1, 64));
       }},
      {"report.alpha", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.alpha = parse_double(k, v, 0.0, 1.0, true);
       }},
      {"report.galleries", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.galleries = parse_bool(k, v);
       }},
      {"report.save_models", [](LabConfig& c, const std::string& k, const std::string& v) {
         c.save_models = parse_bool(k, v);
       }},
  };
  return table;
}

}  // namespace detail

// Applies one key on top of `c`; unknown keys are errors.
inline void set_value(LabConfig& c, const std::string& key, const std::string& value) {
  const auto& table = detail::setters();
  const auto it = table.find(key);
  if (it == table.end()) throw ConfigError("unknown configuration key '" + key + "'");
  it->second(c, key, value);
}

inline LabConfig parse_config(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::map<std::string, int> line_of;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = detail::trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = detail::trim(std::string_view(t).substr(0, eq));
    std::string value = detail::trim(std::string_view(t).substr(eq + 1));
    if (line_of.count(key)) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    line_of[key] = line_no;
    entries.emplace_back(std::move(key), std::move(value));
  }

  LabConfig c = desk_profile();
  bool versioned = false;
  for (const auto& [k, v] : entries) {
    if (k == "profile") {
      if (v == "desk") c = desk_profile();
      else if (v == "paper") c = paper_profile();
      else throw ConfigError("profile: expected desk or paper, got '" + v + "'");
    }
  }
  for (const auto& [k, v] : entries) {
    if (k == "profile") continue;
    if (k == "config_version") {
      if (detail::parse_int(k, v, 0, 1 << 20) != kConfigVersion) {
        throw ConfigError("config_version " + v + " is not supported (expected " +
                          std::to_string(kConfigVersion) + ")");
      }
      versioned = true;
      continue;
    }
    try {
      set_value(c, k, v);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_of[k]) + ": " + e.what());
    }
  }
  if (!versioned) throw ConfigError("missing config_version");
  return c;
}

inline LabConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read configuration file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

// Fully resolved configuration; parse_config(to_text(c)) reproduces c.
inline std::string to_text(const LabConfig& c) {
  std::ostringstream o;
  const auto b = [](bool v) { return v ? "true" : "false"; };
  o << "config_version = " << kConfigVersion << '\n'
    << "profile = " << (c.profile == Profile::kPaper ? "paper" : "desk") << '\n'
    << "seed = " << c.seed << '\n'
    << "output_dir = " << c.output_dir.string() << '\n'
    << "repetitions = " << c.repetitions << '\n'
    << "dataset.base_shapes = " << detail::join(c.base_shapes) << '\n'
    << "vae.architecture = " << to_string(c.architecture) << '\n'
    << "vae.latent_dims = " << detail::join(c.latent_dims) << '\n'
    << "vae.dense_hidden = " << c.dense_hidden << '\n'
    << "vae.filter_multiplier = " << c.filter_multiplier << '\n'
    << "vae.beta = " << format_real(c.beta) << '\n'
    << "vae.gamma_max = " << format_real(c.gamma_max) << '\n'
    << "vae.learning_rate = " << format_real(c.learning_rate) << '\n'
    << "vae.batch_size = " << c.batch_size << '\n'
    << "vae.epochs = " << c.epochs << '\n'
    << "vae.validation_fraction = " << format_real(c.validation_fraction) << '\n'
    << "vae.reconstruction = " << to_string(c.reconstruction) << '\n'
    << "qd.capacity = " << c.capacity << '\n'
    << "qd.generations = " << c.generations << '\n'
    << "qd.children_per_gen = " << c.children_per_gen << '\n'
    << "qd.mutation_sigma = " << format_real(c.mutation_sigma) << '\n'
    << "qd.tournament_size = " << c.tournament_size << '\n'
    << "qd.reencode_latent = " << b(c.reencode_latent) << '\n'
    << "expansion.architecture = " << to_string(c.expansion_architecture) << '\n'
    << "expansion.latent_dims = " << detail::join(c.expansion_latent_dims) << '\n'
    << "expansion.filter_multiplier = " << c.expansion_filter_multiplier << '\n'
    << "report.alpha = " << format_real(c.alpha) << '\n'
    << "report.galleries = " << b(c.galleries) << '\n'
    << "report.save_models = " << b(c.save_models) << '\n';
  return o.str();
}

}  // namespace autove::lab

#endif  // AUTOVE_LAB_CONFIG_HPP_
