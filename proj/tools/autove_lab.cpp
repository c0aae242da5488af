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

// autove_lab: dataset generation, VAE training, QD search and the
// experiment tasks from one configuration file.
//
// Exit codes: 0 success, 1 configuration or usage error, 2 runtime failure.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "autove/dataset.hpp"
#include "autove/lab/config.hpp"
#include "autove/lab/experiments.hpp"
#include "autove/lab/report.hpp"
#include "autove/qd_io.hpp"
#include "autove/vae_io.hpp"

namespace {

using namespace autove;
using namespace autove::lab;

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> overrides;
  bool quiet = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("-c,--config", c.config, "configuration file")->required()->check(CLI::ExistingFile);
  cmd->add_option("-s,--seed", c.seed, "override the configured seed");
  cmd->add_option("--set", c.overrides, "extra key=value override (repeatable)");
  cmd->add_flag("-q,--quiet", c.quiet, "no progress output");
}

LabConfig resolve(const Common& c) {
  LabConfig cfg = load_config(c.config);
  for (const auto& kv : c.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
    set_value(cfg, lab::detail::trim(kv.substr(0, eq)), lab::detail::trim(kv.substr(eq + 1)));
  }
  if (c.seed) cfg.seed = *c.seed;
  return cfg;
}

std::ostream* progress(const Common& c) { return c.quiet ? nullptr : &std::clog; }

int gen_dataset(const Common& c, const std::string& task, std::string out) {
  const LabConfig cfg = resolve(c);
  const Task t = parse_task(task);
  if (t == Task::kExpansion) throw ConfigError("gen-dataset: task e has no fixed dataset");
  const auto dir = out.empty() ? run_directory(cfg, std::string("dataset_") + task_letter(t))
                               : std::filesystem::path(out);
  prepare_run_directory(dir, cfg);
  for (int shape : cfg.base_shapes) {
    DatasetSpec spec;
    spec.base_shape_id = shape;
    if (t != Task::kBaseline) spec.holdout_mask = build_holdout(t);
    write_dataset(dir / ("shape" + std::to_string(shape)), shape, make_dataset(spec));
  }
  write_manifest(dir);
  std::cout << dir.string() << '\n';
  return 0;
}

int train_vae(const Common& c, const std::string& data, std::optional<int> latent, std::string out) {
  const LabConfig cfg = resolve(c);
  std::vector<Bitmap> bitmaps;
  if (data.empty()) {
    DatasetSpec spec;
    spec.base_shape_id = cfg.base_shapes.front();
    bitmaps = bitmaps_of(make_dataset(spec), false);
  } else {
    bitmaps = bitmaps_of(read_dataset(data), false);
  }
  const int d = latent.value_or(cfg.latent_dims.front());
  const auto dir = out.empty() ? run_directory(cfg, "vae_z" + std::to_string(d))
                               : std::filesystem::path(out);
  prepare_run_directory(dir, cfg);
  const TrainResult r = train(cfg.vae(d, cfg.seed), bitmaps);
  write_model(dir / "model.bin", r.model);
  write_training_log(dir / "training_log.csv", r.log);
  write_manifest(dir);
  if (auto* log = progress(c)) {
    *log << "trained " << bitmaps.size() << " items, best epoch " << r.best_epoch
         << ", validation total " << format_real(r.log[static_cast<std::size_t>(r.best_epoch)].validation.total)
         << '\n';
  }
  std::cout << dir.string() << '\n';
  return 0;
}

int run_qd_verb(const Common& c, const std::string& model_path, const std::string& space,
                std::string out) {
  const LabConfig cfg = resolve(c);
  SearchSpace s;
  if (space == "PS") s = SearchSpace::kParameter;
  else if (space == "LS") s = SearchSpace::kLatent;
  else throw ConfigError("--space must be PS or LS");
  const auto dir = out.empty() ? run_directory(cfg, "qd_" + space) : std::filesystem::path(out);
  prepare_run_directory(dir, cfg);

  const std::vector<Genome> genomes = initial_genomes(static_cast<int>(cfg.capacity), 0);
  std::vector<Bitmap> bitmaps;
  for (const auto& g : genomes) bitmaps.push_back(genome_to_bitmap(g));
  VaeModel vae;
  if (model_path.empty()) {
    vae = train(cfg.vae(cfg.latent_dims.front(), derive_seed(cfg.seed, 1)), bitmaps).model;
    if (cfg.save_models) write_model(dir / "vae.bin", vae);
  } else {
    vae = read_model(model_path, cfg.vae(cfg.latent_dims.front(), cfg.seed));
  }
  const QdConfig qc = cfg.qd(s, derive_seed(cfg.seed, 2));
  if (s == SearchSpace::kParameter) {
    const auto r = run_qd(qc, ParameterDomain{&vae}, std::span<const Genome>(genomes));
    write_archive(dir, r.archive, cfg.galleries);
    write_generation_stats(dir / "stats.csv", r.stats);
  } else {
    const auto init = encode_means(vae, bitmaps);
    const auto r = run_qd(qc, LatentDomain{&vae, cfg.reencode_latent}, std::span<const LatentCode>(init));
    write_archive(dir, r.archive, cfg.galleries);
    write_generation_stats(dir / "stats.csv", r.stats);
  }
  write_manifest(dir);
  std::cout << dir.string() << '\n';
  return 0;
}

int run_task_verb(const Common& c, const std::string& task) {
  const LabConfig cfg = resolve(c);
  if (task == "all") {
    const auto r = run_all_tasks(cfg, progress(c));
    std::cout << r.dir.string() << '\n';
    return 0;
  }
  const Task t = parse_task(task);
  if (t == Task::kExpansion) throw ConfigError("task e runs through run-expansion");
  const auto r = run_task(cfg, t, progress(c));
  std::cout << r.dir.string() << '\n';
  return 0;
}

int run_expansion_verb(const Common& c) {
  const LabConfig cfg = resolve(c);
  const auto r = run_expansion(cfg, progress(c));
  std::cout << r.dir.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AutoVE lab: quality-diversity search with VAE niching"};
  app.require_subcommand(1);

  Common common;
  std::string task = "a", out, data, model, space = "PS", run_dir;
  std::optional<int> latent;

  auto* gen = app.add_subcommand("gen-dataset", "render a scale x rotation dataset");
  add_common(gen, common);
  gen->add_option("--task", task, "a, b, c or d (selects the holdout)");
  gen->add_option("-o,--out", out, "output directory");

  auto* tv = app.add_subcommand("train-vae", "train a VAE on a dataset manifest");
  add_common(tv, common);
  tv->add_option("--data", data, "manifest.csv from gen-dataset (default: baseline set)");
  tv->add_option("--latent-dim", latent, "latent size (default: first of vae.latent_dims)");
  tv->add_option("-o,--out", out, "output directory");

  auto* qd = app.add_subcommand("run-qd", "one Voronoi-Elites run from Sobol genomes");
  add_common(qd, common);
  qd->add_option("--model", model, "trained model file (default: train one on the initial set)");
  qd->add_option("--space", space, "PS or LS");
  qd->add_option("-o,--out", out, "output directory");

  auto* rt = app.add_subcommand("run-task", "tasks a-d: reconstruction of held-out variations");
  add_common(rt, common);
  rt->add_option("--task", task, "a, b, c, d or all")->required();

  auto* re = app.add_subcommand("run-expansion", "task e: PS vs LS under configurations R and C");
  add_common(re, common);

  auto* rep = app.add_subcommand("report", "recompute significance and summary of a run directory");
  rep->add_option("run", run_dir, "run directory")->required()->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*gen) return gen_dataset(common, task, out);
    if (*tv) return train_vae(common, data, latent, out);
    if (*qd) return run_qd_verb(common, model, space, out);
    if (*rt) return run_task_verb(common, task);
    if (*re) return run_expansion_verb(common);
    if (*rep) {
      std::cout << emit_report(run_dir);
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
