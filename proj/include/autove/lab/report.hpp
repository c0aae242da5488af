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

#ifndef AUTOVE_LAB_REPORT_HPP_
#define AUTOVE_LAB_REPORT_HPP_

// Rebuilds significance tables and a text summary from the CSVs a run left
// on disk, without retraining anything.

#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "autove/csv.hpp"
#include "autove/lab/config.hpp"
#include "autove/lab/experiments.hpp"

namespace autove::lab {

enum class RunKind { kTask, kAllTasks, kExpansion };

inline RunKind detect_run_kind(const std::filesystem::path& dir) {
  if (std::filesystem::exists(dir / "comparison.csv")) return RunKind::kAllTasks;
  if (!std::filesystem::exists(dir / "metrics.csv")) {
    throw IoError("not a run directory (no metrics.csv): " + dir.string());
  }
  const CsvTable t = read_csv(dir / "metrics.csv");
  if (!t.header.empty() && t.header[0] == "task") return RunKind::kTask;
  if (!t.header.empty() && t.header[0] == "configuration") return RunKind::kExpansion;
  throw IoError("unrecognized metrics.csv in " + dir.string());
}

// Per-item errors from a task run's latent.csv: (training items, evaluation items).
inline std::pair<std::vector<double>, std::vector<double>> stored_errors(
    const std::filesystem::path& run_dir, bool baseline) {
  const CsvTable t = read_csv(run_dir / "latent.csv");
  const auto h = t.column("held_out");
  const auto e = t.column("reconstruction_error");
  std::vector<double> train, eval;
  for (const auto& row : t.rows) {
    const double err = parse_real(row[e]);
    const bool held = row[h] == "1";
    if (held) eval.push_back(err);
    else train.push_back(err);
    if (baseline) eval.push_back(err);
  }
  return {train, eval};
}

struct TaskRow {
  Task task;
  int shape, latent_dim, repetition;
};

inline std::vector<TaskRow> stored_task_rows(const std::filesystem::path& dir) {
  const CsvTable t = read_csv(dir / "metrics.csv");
  std::vector<TaskRow> out;
  for (const auto& row : t.rows) {
    out.push_back({parse_task(row[t.column("task")]), std::stoi(row[t.column("shape")]),
                   std::stoi(row[t.column("latent_dim")]), std::stoi(row[t.column("repetition")])});
  }
  return out;
}

inline std::vector<ComparisonResult> recompute_task(const std::filesystem::path& dir, double alpha) {
  std::vector<ComparisonResult> out;
  for (const auto& r : stored_task_rows(dir)) {
    if (r.task == Task::kBaseline) continue;
    auto [train, eval] =
        stored_errors(dir / task_run_name(r.shape, r.latent_dim, r.repetition), false);
    out.push_back(compare({task_run_name(r.shape, r.latent_dim, r.repetition),
                           "reconstruction_error", "training", std::string(task_name(r.task)),
                           std::move(train), std::move(eval)},
                          alpha));
  }
  return out;
}

inline std::vector<ComparisonResult> recompute_all_tasks(const std::filesystem::path& dir,
                                                         double alpha) {
  std::vector<ComparisonResult> out;
  const auto rows = stored_task_rows(dir / "task_a");
  for (const auto& r : rows) {
    const std::string name = task_run_name(r.shape, r.latent_dim, r.repetition);
    const auto base = stored_errors(dir / "task_a" / name, true).second;
    for (int t = 1; t < 4; ++t) {
      const Task task = static_cast<Task>(t);
      const auto held =
          stored_errors(dir / (std::string("task_") + task_letter(task)) / name, false).second;
      out.push_back(compare({name, "reconstruction_error", "baseline",
                             std::string(task_name(task)), base, held},
                            alpha));
    }
  }
  return out;
}

inline std::vector<ComparisonResult> recompute_expansion(const std::filesystem::path& dir,
                                                         double alpha) {
  const CsvTable t = read_csv(dir / "metrics.csv");
  std::vector<ExpansionRun> runs;
  std::vector<int> dims;
  for (const auto& row : t.rows) {
    ExpansionRun r;
    r.configuration = row[t.column("configuration")].at(0);
    r.space = row[t.column("space")] == "LS" ? SearchSpace::kLatent : SearchSpace::kParameter;
    r.latent_dim = std::stoi(row[t.column("latent_dim")]);
    r.diversity.log_pd_value = parse_real(row[t.column("log_pd")]);
    r.mean_fitness = parse_real(row[t.column("mean_fitness")]);
    if (std::find(dims.begin(), dims.end(), r.latent_dim) == dims.end()) dims.push_back(r.latent_dim);
    runs.push_back(r);
  }
  return expansion_significance(runs, dims, alpha);
}

inline std::string format_significance(std::span<const ComparisonResult> rows) {
  std::ostringstream o;
  for (const auto& r : rows) {
    o << r.cmp.family << "  " << r.cmp.metric << "  " << r.cmp.group_a << " "
      << format_real(r.mean_a) << " vs " << r.cmp.group_b << " " << format_real(r.mean_b);
    if (r.tested) {
      o << "  t=" << format_real(r.test.t) << " p=" << format_real(r.test.p)
        << (r.significant ? "  *" : "");
    } else {
      o << "  (not testable)";
    }
    o << '\n';
  }
  return o.str();
}

// Rewrites significance.csv from stored samples and writes summary.txt;
// returns the summary text.
inline std::string emit_report(const std::filesystem::path& dir) {
  const LabConfig cfg = load_config(dir / "config.txt");
  std::vector<ComparisonResult> rows;
  std::ostringstream o;
  switch (detect_run_kind(dir)) {
    case RunKind::kTask:
      rows = recompute_task(dir, cfg.alpha);
      o << "run: " << dir.filename().string() << " (single task)\n";
      break;
    case RunKind::kAllTasks: {
      rows = recompute_all_tasks(dir, cfg.alpha);
      o << "run: " << dir.filename().string() << " (tasks a-d)\n";
      const CsvTable c = read_csv(dir / "comparison.csv");
      int directional = 0;
      for (const auto& row : c.rows) directional += row[c.column("directional")] == "1";
      o << "directional error ordering held in " << directional << "/" << c.rows.size()
        << " repetitions\n";
      for (const auto& row : c.rows) {
        o << "  shape " << row[0] << " z" << row[1] << " rep " << row[2] << ": error a/b/c/d "
          << row[3] << " " << row[4] << " " << row[5] << " " << row[6] << ", median spread "
          << row[c.column("distance_median_spread")] << '\n';
      }
      break;
    }
    case RunKind::kExpansion: {
      rows = recompute_expansion(dir, cfg.alpha);
      o << "run: " << dir.filename().string() << " (expansion)\n";
      const CsvTable m = read_csv(dir / "metrics.csv");
      for (const auto& row : m.rows) {
        o << "  " << row[m.column("configuration")] << "-" << row[m.column("space")] << " z"
          << row[m.column("latent_dim")] << " rep " << row[m.column("repetition")] << ": log_pd "
          << row[m.column("log_pd")] << " mean_fitness " << row[m.column("mean_fitness")] << '\n';
      }
      break;
    }
  }
  write_significance(dir / "significance.csv", rows, cfg.alpha);
  o << "significance (Welch, alpha " << format_real(cfg.alpha) << "):\n" << format_significance(rows);
  write_text(dir / "summary.txt", o.str());
  write_manifest(dir);
  return o.str();
}

}  // namespace autove::lab

#endif  // AUTOVE_LAB_REPORT_HPP_
