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

#ifndef AUTOVE_LAB_EXPERIMENTS_HPP_
#define AUTOVE_LAB_EXPERIMENTS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "autove/base_shapes.hpp"
#include "autove/csv.hpp"
#include "autove/dataset.hpp"
#include "autove/lab/config.hpp"
#include "autove/metrics.hpp"
#include "autove/qd.hpp"
#include "autove/qd_io.hpp"
#include "autove/sobol.hpp"
#include "autove/vae.hpp"
#include "autove/vae_io.hpp"

namespace autove::lab {

enum class Task { kBaseline, kRecombination, kInterpolation, kExtrapolation, kExpansion };

inline char task_letter(Task t) { return static_cast<char>('a' + static_cast<int>(t)); }

inline std::string_view task_name(Task t) {
  switch (t) {
    case Task::kBaseline: return "baseline";
    case Task::kRecombination: return "recombination";
    case Task::kInterpolation: return "interpolation";
    case Task::kExtrapolation: return "extrapolation";
    case Task::kExpansion: return "expansion";
  }
  return "";
}

inline Task parse_task(std::string_view s) {
  for (int i = 0; i < 5; ++i) {
    const Task t = static_cast<Task>(i);
    if (s.size() == 1 && s[0] == task_letter(t)) return t;
    if (s == task_name(t)) return t;
  }
  throw ConfigError("unknown task '" + std::string(s) + "' (expected a, b, c, d or e)");
}

// Hold-out cells over the scale x rotation grid, indexed [scale * steps + rot].
// b: central 6x6 block of both factors. c: central 6 rotations across all
// scales. d: the 4 largest scales across all rotations.
inline std::vector<bool> build_holdout(Task task, int scale_steps = 16, int rotation_steps = 16) {
  if (task == Task::kBaseline || task == Task::kExpansion) {
    throw std::invalid_argument("no holdout for task " + std::string(1, task_letter(task)));
  }
  if (scale_steps < 8 || rotation_steps < 8) {
    throw std::invalid_argument("holdout geometry needs at least 8 steps per factor");
  }
  std::vector<bool> mask(static_cast<std::size_t>(scale_steps * rotation_steps), false);
  const int s0 = (scale_steps - 6) / 2, r0 = (rotation_steps - 6) / 2;
  for (int s = 0; s < scale_steps; ++s) {
    for (int r = 0; r < rotation_steps; ++r) {
      bool h = false;
      if (task == Task::kRecombination) h = s >= s0 && s < s0 + 6 && r >= r0 && r < r0 + 6;
      if (task == Task::kInterpolation) h = r >= r0 && r < r0 + 6;
      if (task == Task::kExtrapolation) h = s >= scale_steps - 4;
      mask[static_cast<std::size_t>(s * rotation_steps + r)] = h;
    }
  }
  return mask;
}

// Independent per-purpose seeds from one user seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t repetition_seed(const LabConfig& c, int rep) {
  return c.seed + static_cast<std::uint64_t>(rep);
}

inline std::filesystem::path run_directory(const LabConfig& c, std::string_view name) {
  return c.output_dir / (std::string(name) + "_s" + std::to_string(c.seed));
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

// manifest.csv: every file under `dir` (relative path, bytes), sorted.
inline void write_manifest(const std::filesystem::path& dir) {
  std::vector<std::pair<std::string, std::uintmax_t>> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const std::string rel = std::filesystem::relative(e.path(), dir).generic_string();
    if (rel == "manifest.csv") continue;
    files.emplace_back(rel, e.file_size());
  }
  std::sort(files.begin(), files.end());
  CsvWriter csv(dir / "manifest.csv", {"file", "bytes"});
  for (const auto& [f, n] : files) {
    csv << f << static_cast<unsigned long>(n);
    csv.end_row();
  }
}

inline void prepare_run_directory(const std::filesystem::path& dir, const LabConfig& c) {
  std::filesystem::create_directories(dir);
  write_text(dir / "config.txt", to_text(c));
}

inline double mean_of(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? std::numeric_limits<double>::quiet_NaN() : s / static_cast<double>(v.size());
}

// One row of a significance table.
struct Comparison {
  std::string family;
  std::string metric;
  std::string group_a;
  std::string group_b;
  std::vector<double> a;
  std::vector<double> b;
};

struct ComparisonResult {
  Comparison cmp;
  double mean_a = 0.0;
  double mean_b = 0.0;
  bool tested = false;  // false when a sample is too small or constant
  TTestResult test;
  bool significant = false;
};

inline ComparisonResult compare(Comparison c, double alpha) {
  ComparisonResult r;
  r.mean_a = mean_of(c.a);
  r.mean_b = mean_of(c.b);
  try {
    r.test = welch_t_test(c.a, c.b);
    r.tested = true;
    r.significant = r.test.p < alpha;
  } catch (const std::invalid_argument&) {
    r.tested = false;
  }
  r.cmp = std::move(c);
  return r;
}

inline void write_significance(const std::filesystem::path& path,
                               std::span<const ComparisonResult> rows, double alpha) {
  CsvWriter csv(path, {"family", "metric", "group_a", "group_b", "n_a", "n_b", "mean_a",
                       "mean_b", "t", "df", "p", "alpha", "significant"});
  for (const auto& r : rows) {
    csv << r.cmp.family << r.cmp.metric << r.cmp.group_a << r.cmp.group_b
        << static_cast<unsigned long>(r.cmp.a.size()) << static_cast<unsigned long>(r.cmp.b.size())
        << r.mean_a << r.mean_b;
    if (r.tested) {
      csv << r.test.t << r.test.df << r.test.p;
    } else {
      csv << "nan" << "nan" << "nan";
    }
    csv << alpha << r.significant;
    csv.end_row();
  }
}

// ---- tasks a-d ----

struct TaskRun {
  Task task = Task::kBaseline;
  int shape = 0;
  int latent_dim = 0;
  int repetition = 0;
  std::uint64_t seed = 0;
  std::vector<double> train_errors;  // items the VAE was trained on
  std::vector<double> eval_errors;   // full set for a, held-out items otherwise
  LatentDistanceStats distances;     // within training codes; training vs held-out
  double distance_median = 0.0;      // within for a, cross otherwise
  int best_epoch = 0;
};

inline std::string task_run_name(int shape, int latent_dim, int rep) {
  return "shape" + std::to_string(shape) + "_z" + std::to_string(latent_dim) + "_r" +
         std::to_string(rep);
}

inline void write_latent_csv(const std::filesystem::path& path,
                             const std::vector<DatasetItem>& items,
                             const std::vector<LatentCode>& codes,
                             const std::vector<double>& errors) {
  std::vector<std::string> header = {"scale_index", "rotation_index", "held_out",
                                     "reconstruction_error"};
  const std::size_t d = codes.empty() ? 0 : codes[0].size();
  for (std::size_t i = 0; i < d; ++i) header.push_back("z" + std::to_string(i));
  CsvWriter csv(path, header);
  for (std::size_t i = 0; i < items.size(); ++i) {
    csv << items[i].scale_index << items[i].rotation_index << items[i].held_out << errors[i];
    for (double v : codes[i]) csv << v;
    csv.end_row();
  }
}

// Trains one VAE on the non-held-out items and scores it; writes the run's
// files under `dir`.
inline TaskRun run_task_instance(const LabConfig& cfg, Task task, int shape, int latent_dim,
                                 int rep, const std::filesystem::path& dir,
                                 std::ostream* log = nullptr) {
  DatasetSpec spec;
  spec.base_shape_id = shape;
  if (task != Task::kBaseline) spec.holdout_mask = build_holdout(task);
  const std::vector<DatasetItem> items = make_dataset(spec);
  const std::vector<Bitmap> train_set = bitmaps_of(items, false);
  std::vector<Bitmap> all;
  for (const auto& it : items) all.push_back(it.bitmap);

  TaskRun run;
  run.task = task;
  run.shape = shape;
  run.latent_dim = latent_dim;
  run.repetition = rep;
  run.seed = derive_seed(repetition_seed(cfg, rep),
                         static_cast<std::uint64_t>(100 * shape + latent_dim));
  const TrainResult trained = train(cfg.vae(latent_dim, run.seed), train_set);
  run.best_epoch = trained.best_epoch;
  const VaeModel& model = trained.model;

  const std::vector<double> errors = reconstruction_errors(model, all);
  const std::vector<LatentCode> codes = encode_means(model, all);
  std::vector<LatentCode> train_codes, held_codes;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].held_out) {
      held_codes.push_back(codes[i]);
      run.eval_errors.push_back(errors[i]);
    } else {
      train_codes.push_back(codes[i]);
      run.train_errors.push_back(errors[i]);
    }
  }
  if (task == Task::kBaseline) {
    run.eval_errors = errors;
    run.distances = latent_distance_stats<LatentCode>(train_codes, train_codes);
    run.distance_median = run.distances.within.median;
  } else {
    run.distances = latent_distance_stats<LatentCode>(train_codes, held_codes);
    run.distance_median = run.distances.cross.median;
  }

  std::filesystem::create_directories(dir);
  write_training_log(dir / "training_log.csv", trained.log);
  write_latent_csv(dir / "latent.csv", items, codes, errors);
  {
    CsvWriter csv(dir / "distance_histogram.csv",
                  {"set", "bin_low", "bin_high", "count"});
    for (const auto* s : {&run.distances.within, &run.distances.cross}) {
      const std::string name = s == &run.distances.within ? "within_training" : "training_vs_heldout";
      for (std::size_t k = 0; k < s->histogram.size(); ++k) {
        csv << name << s->bin_width * static_cast<double>(k)
            << s->bin_width * static_cast<double>(k + 1)
            << static_cast<unsigned long>(s->histogram[k]);
        csv.end_row();
      }
    }
  }
  if (cfg.save_models) write_model(dir / "model.bin", model);
  if (cfg.galleries) {
    std::filesystem::create_directories(dir / "reconstructions");
    const nn::Matrix recon = model.decode(model.encode(VaeModel::to_matrix(all)).mu);
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (task != Task::kBaseline && !items[i].held_out) continue;
      const Bitmap b = binarize(std::span<const double>(
          recon.col(static_cast<Eigen::Index>(i)).data(), kPixelCount));
      write_pgm(dir / "reconstructions" /
                    dataset_item_name(shape, items[i].scale_index, items[i].rotation_index),
                b);
    }
  }
  if (log) {
    *log << "[task " << task_letter(task) << "] " << task_run_name(shape, latent_dim, rep)
         << " train_error " << format_real(mean_of(run.train_errors)) << " eval_error "
         << format_real(mean_of(run.eval_errors)) << " latent_median "
         << format_real(run.distance_median) << '\n';
  }
  return run;
}

inline const std::vector<std::string>& task_metrics_header() {
  static const std::vector<std::string> h = {
      "task", "shape", "latent_dim", "repetition", "seed", "best_epoch", "n_train", "n_eval",
      "train_error_mean", "eval_error_mean", "latent_within_median", "latent_cross_median",
      "distance_median"};
  return h;
}

inline void write_task_metrics(const std::filesystem::path& path, std::span<const TaskRun> runs) {
  CsvWriter csv(path, task_metrics_header());
  for (const auto& r : runs) {
    csv << std::string(1, task_letter(r.task)) << r.shape << r.latent_dim << r.repetition
        << static_cast<unsigned long>(r.seed) << r.best_epoch
        << static_cast<unsigned long>(r.train_errors.size())
        << static_cast<unsigned long>(r.eval_errors.size()) << mean_of(r.train_errors)
        << mean_of(r.eval_errors) << r.distances.within.median << r.distances.cross.median
        << r.distance_median;
    csv.end_row();
  }
}

// Training vs evaluation errors of each run; skipped for the baseline,
// whose evaluation set contains the training set.
inline std::vector<ComparisonResult> task_significance(std::span<const TaskRun> runs, double alpha) {
  std::vector<ComparisonResult> out;
  for (const auto& r : runs) {
    if (r.task == Task::kBaseline) continue;
    out.push_back(compare({task_run_name(r.shape, r.latent_dim, r.repetition),
                           "reconstruction_error", "training", std::string(task_name(r.task)),
                           r.train_errors, r.eval_errors},
                          alpha));
  }
  return out;
}

struct TaskReport {
  std::filesystem::path dir;
  std::vector<TaskRun> runs;
  std::vector<ComparisonResult> significance;
};

inline TaskReport run_task(const LabConfig& cfg, Task task, std::ostream* log = nullptr,
                           std::filesystem::path dir = {}) {
  if (task == Task::kExpansion) throw std::invalid_argument("task e runs through run_expansion");
  if (dir.empty()) dir = run_directory(cfg, std::string("task_") + task_letter(task));
  prepare_run_directory(dir, cfg);
  TaskReport rep;
  rep.dir = dir;
  for (int shape : cfg.base_shapes)
    for (int d : cfg.latent_dims)
      for (int r = 0; r < cfg.repetitions; ++r)
        rep.runs.push_back(run_task_instance(cfg, task, shape, d, r,
                                             dir / task_run_name(shape, d, r), log));
  write_task_metrics(dir / "metrics.csv", rep.runs);
  rep.significance = task_significance(rep.runs, cfg.alpha);
  write_significance(dir / "significance.csv", rep.significance, cfg.alpha);
  write_manifest(dir);
  return rep;
}

// One line of the a-d comparison: same shape, latent size and repetition.
struct TaskComparisonRow {
  int shape = 0;
  int latent_dim = 0;
  int repetition = 0;
  double error[4] = {};            // a (full data), b, c, d (held out)
  double distance_median[4] = {};  // a within training, b-d training vs held out
};

inline bool directional_errors(const TaskComparisonRow& r) {
  return r.error[0] < r.error[1] && r.error[0] < r.error[2] && r.error[3] > r.error[1];
}

inline double distance_median_spread(const TaskComparisonRow& r) {
  const auto [lo, hi] = std::minmax_element(std::begin(r.distance_median), std::end(r.distance_median));
  if (*hi == 0.0) return 1.0;
  return *lo > 0.0 ? *hi / *lo : std::numeric_limits<double>::infinity();
}

struct AllTasksReport {
  std::filesystem::path dir;
  TaskReport tasks[4];
  std::vector<TaskComparisonRow> rows;
  std::vector<ComparisonResult> significance;
};

inline AllTasksReport run_all_tasks(const LabConfig& cfg, std::ostream* log = nullptr) {
  AllTasksReport out;
  out.dir = run_directory(cfg, "task_all");
  prepare_run_directory(out.dir, cfg);
  for (int t = 0; t < 4; ++t) {
    const Task task = static_cast<Task>(t);
    out.tasks[t] = run_task(cfg, task, log, out.dir / (std::string("task_") + task_letter(task)));
  }
  const std::size_t n = out.tasks[0].runs.size();
  CsvWriter csv(out.dir / "comparison.csv",
                {"shape", "latent_dim", "repetition", "error_a", "error_b", "error_c", "error_d",
                 "distance_median_a", "distance_median_b", "distance_median_c",
                 "distance_median_d", "directional", "distance_median_spread"});
  for (std::size_t i = 0; i < n; ++i) {
    TaskComparisonRow row;
    row.shape = out.tasks[0].runs[i].shape;
    row.latent_dim = out.tasks[0].runs[i].latent_dim;
    row.repetition = out.tasks[0].runs[i].repetition;
    for (int t = 0; t < 4; ++t) {
      row.error[t] = mean_of(out.tasks[t].runs[i].eval_errors);
      row.distance_median[t] = out.tasks[t].runs[i].distance_median;
    }
    csv << row.shape << row.latent_dim << row.repetition;
    for (double e : row.error) csv << e;
    for (double d : row.distance_median) csv << d;
    csv << directional_errors(row) << distance_median_spread(row);
    csv.end_row();
    const std::string family = task_run_name(row.shape, row.latent_dim, row.repetition);
    for (int t = 1; t < 4; ++t) {
      out.significance.push_back(
          compare({family, "reconstruction_error", "baseline",
                   std::string(task_name(static_cast<Task>(t))), out.tasks[0].runs[i].eval_errors,
                   out.tasks[t].runs[i].eval_errors},
                  cfg.alpha));
    }
    out.rows.push_back(row);
  }
  write_significance(out.dir / "significance.csv", out.significance, cfg.alpha);
  write_manifest(out.dir);
  return out;
}

// ---- task e ----

struct ExpansionRun {
  char configuration = 'R';
  SearchSpace space = SearchSpace::kParameter;
  int latent_dim = 0;
  int repetition = 0;
  std::uint64_t seed = 0;
  DiversityReport diversity;
  double total_fitness = 0.0;
  double mean_fitness = 0.0;
  std::size_t archive_size = 0;
  std::size_t discarded = 0;
};

// Distinct Sobol blocks per repetition: repetition r takes points
// [r*n, (r+1)*n) of the 16-dimensional sequence.
inline std::vector<Genome> initial_genomes(int n, int rep) {
  const auto pts = sobol_init(kGeneCount, n * (rep + 1));
  std::vector<Genome> out;
  for (int i = n * rep; i < n * (rep + 1); ++i) out.emplace_back(pts[static_cast<std::size_t>(i)]);
  return out;
}

template <class G>
ExpansionRun summarize_run(const QdResult<G>& r, char configuration, SearchSpace space,
                           int latent_dim, int rep, std::uint64_t seed) {
  ExpansionRun out;
  out.configuration = configuration;
  out.space = space;
  out.latent_dim = latent_dim;
  out.repetition = rep;
  out.seed = seed;
  std::vector<Bitmap> bitmaps;
  for (const auto& e : r.archive.elites()) {
    bitmaps.push_back(e.bitmap);
    out.total_fitness += e.fitness;
  }
  out.archive_size = bitmaps.size();
  out.mean_fitness = out.total_fitness / static_cast<double>(bitmaps.size());
  out.diversity = pure_diversity(bitmaps);
  out.discarded = r.discarded_children;
  return out;
}

// Encoder means and reconstruction errors of PS elites.
inline void write_elite_latents(const std::filesystem::path& path, const VaeModel& m,
                                const Archive<Genome>& a) {
  std::vector<Bitmap> bitmaps;
  for (const auto& e : a.elites()) bitmaps.push_back(e.bitmap);
  const auto codes = encode_means(m, bitmaps);
  const auto errors = reconstruction_errors(m, bitmaps);
  std::vector<std::string> header = {"id", "fitness", "reconstruction_error"};
  for (int i = 0; i < m.latent_dim(); ++i) header.push_back("z" + std::to_string(i));
  CsvWriter csv(path, header);
  for (std::size_t i = 0; i < bitmaps.size(); ++i) {
    csv << static_cast<unsigned long>(a[i].id) << a[i].fitness << errors[i];
    for (double v : codes[i]) csv << v;
    csv.end_row();
  }
}

struct ExpansionReport {
  std::filesystem::path dir;
  std::vector<ExpansionRun> runs;
  std::vector<ComparisonResult> significance;
};

inline std::string expansion_run_name(int latent_dim, int rep) {
  return "z" + std::to_string(latent_dim) + "_r" + std::to_string(rep);
}

inline void write_expansion_metrics(const std::filesystem::path& path,
                                    std::span<const ExpansionRun> runs) {
  CsvWriter csv(path, {"configuration", "space", "latent_dim", "repetition", "seed",
                       "archive_size", "discarded_children", "pd", "log_pd", "total_fitness",
                       "mean_fitness"});
  for (const auto& r : runs) {
    csv << std::string(1, r.configuration) << to_string(r.space) << r.latent_dim << r.repetition
        << static_cast<unsigned long>(r.seed) << static_cast<unsigned long>(r.archive_size)
        << static_cast<unsigned long>(r.discarded) << r.diversity.pd_value
        << r.diversity.log_pd_value << r.total_fitness << r.mean_fitness;
    csv.end_row();
  }
}

// Welch tests across repetitions. PD spans many orders of magnitude (h^10),
// so it is compared in the log domain.
inline std::vector<ComparisonResult> expansion_significance(std::span<const ExpansionRun> runs,
                                                            std::span<const int> latent_dims,
                                                            double alpha) {
  const auto sample = [&](int d, char conf, SearchSpace s, bool pd) {
    std::vector<double> v;
    for (const auto& r : runs)
      if (r.latent_dim == d && r.configuration == conf && r.space == s)
        v.push_back(pd ? r.diversity.log_pd_value : r.mean_fitness);
    return v;
  };
  std::vector<ComparisonResult> out;
  for (int d : latent_dims) {
    const std::string z = "z" + std::to_string(d);
    for (bool pd : {true, false}) {
      const std::string metric = pd ? "log_pd" : "mean_fitness";
      for (char conf : {'R', 'C'}) {
        out.push_back(compare({z + "_" + conf, metric, std::string(1, conf) + "-PS",
                               std::string(1, conf) + "-LS",
                               sample(d, conf, SearchSpace::kParameter, pd),
                               sample(d, conf, SearchSpace::kLatent, pd)},
                              alpha));
      }
      for (SearchSpace s : {SearchSpace::kParameter, SearchSpace::kLatent}) {
        const std::string sp(to_string(s));
        out.push_back(compare({z + "_" + sp, metric, "R-" + sp, "C-" + sp,
                               sample(d, 'R', s, pd), sample(d, 'C', s, pd)},
                              alpha));
      }
    }
  }
  return out;
}

inline ExpansionReport run_expansion(const LabConfig& cfg, std::ostream* log = nullptr) {
  ExpansionReport rep;
  rep.dir = run_directory(cfg, "expansion");
  prepare_run_directory(rep.dir, cfg);
  const int n = static_cast<int>(cfg.capacity);
  for (int d : cfg.expansion_latent_dims) {
    for (int r = 0; r < cfg.repetitions; ++r) {
      const std::uint64_t base = repetition_seed(cfg, r);
      const std::uint64_t z = static_cast<std::uint64_t>(d) << 8;
      const auto dir = rep.dir / expansion_run_name(d, r);
      std::filesystem::create_directories(dir);

      // R: Sobol genomes -> VAE -> PS and LS from the same phenotypes.
      const std::vector<Genome> genomes = initial_genomes(n, r);
      std::vector<Bitmap> bitmaps;
      for (const auto& g : genomes) bitmaps.push_back(genome_to_bitmap(g));
      const TrainResult vae_r = train(cfg.expansion_vae(d, derive_seed(base, z | 1)), bitmaps);
      const auto ps_r = run_qd(cfg.qd(SearchSpace::kParameter, derive_seed(base, z | 2)),
                               ParameterDomain{&vae_r.model}, std::span<const Genome>(genomes));
      const auto ls_init_r = encode_means(vae_r.model, bitmaps);
      const auto ls_r = run_qd(cfg.qd(SearchSpace::kLatent, derive_seed(base, z | 3)),
                               LatentDomain{&vae_r.model, cfg.reencode_latent},
                               std::span<const LatentCode>(ls_init_r));

      // C: fresh VAE on the R-PS archive, searches restart from that archive.
      std::vector<Genome> c_genomes;
      std::vector<Bitmap> c_bitmaps;
      for (const auto& e : ps_r.archive.elites()) {
        c_genomes.push_back(e.genome);
        c_bitmaps.push_back(e.bitmap);
      }
      if (c_bitmaps.size() < 10) {
        throw std::runtime_error("configuration C needs at least 10 R-PS elites to train on, got " +
                                 std::to_string(c_bitmaps.size()) +
                                 " (collapsed descriptors merge duplicates)");
      }
      const TrainResult vae_c = train(cfg.expansion_vae(d, derive_seed(base, z | 4)), c_bitmaps);
      const auto ps_c = run_qd(cfg.qd(SearchSpace::kParameter, derive_seed(base, z | 5)),
                               ParameterDomain{&vae_c.model}, std::span<const Genome>(c_genomes));
      const auto ls_init_c = encode_means(vae_c.model, c_bitmaps);
      const auto ls_c = run_qd(cfg.qd(SearchSpace::kLatent, derive_seed(base, z | 6)),
                               LatentDomain{&vae_c.model, cfg.reencode_latent},
                               std::span<const LatentCode>(ls_init_c));

      write_archive(dir / "R_PS", ps_r.archive, cfg.galleries);
      write_archive(dir / "R_LS", ls_r.archive, cfg.galleries);
      write_archive(dir / "C_PS", ps_c.archive, cfg.galleries);
      write_archive(dir / "C_LS", ls_c.archive, cfg.galleries);
      write_generation_stats(dir / "R_PS" / "stats.csv", ps_r.stats);
      write_generation_stats(dir / "R_LS" / "stats.csv", ls_r.stats);
      write_generation_stats(dir / "C_PS" / "stats.csv", ps_c.stats);
      write_generation_stats(dir / "C_LS" / "stats.csv", ls_c.stats);
      write_training_log(dir / "vae_R_training_log.csv", vae_r.log);
      write_training_log(dir / "vae_C_training_log.csv", vae_c.log);
      if (cfg.save_models) {
        write_model(dir / "vae_R.bin", vae_r.model);
        write_model(dir / "vae_C.bin", vae_c.model);
      }
      write_elite_latents(dir / "R_PS_latent.csv", vae_r.model, ps_r.archive);
      write_elite_latents(dir / "C_PS_latent.csv", vae_c.model, ps_c.archive);

      const ExpansionRun runs[] = {
          summarize_run(ps_r, 'R', SearchSpace::kParameter, d, r, base),
          summarize_run(ls_r, 'R', SearchSpace::kLatent, d, r, base),
          summarize_run(ps_c, 'C', SearchSpace::kParameter, d, r, base),
          summarize_run(ls_c, 'C', SearchSpace::kLatent, d, r, base)};
      for (const auto& x : runs) {
        rep.runs.push_back(x);
        if (log) {
          *log << "[expansion] " << expansion_run_name(d, r) << ' ' << x.configuration << '-'
               << to_string(x.space) << " log_pd " << format_real(x.diversity.log_pd_value)
               << " mean_fitness " << format_real(x.mean_fitness) << '\n';
        }
      }
    }
  }
  write_expansion_metrics(rep.dir / "metrics.csv", rep.runs);
  rep.significance = expansion_significance(rep.runs, cfg.expansion_latent_dims, cfg.alpha);
  write_significance(rep.dir / "significance.csv", rep.significance, cfg.alpha);
  write_manifest(rep.dir);
  return rep;
}

}  // namespace autove::lab

#endif  // AUTOVE_LAB_EXPERIMENTS_HPP_
