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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "autove/lab/config.hpp"
#include "autove/lab/experiments.hpp"
#include "autove/lab/report.hpp"
#include "autove/qd_io.hpp"
#include "autove/vae_io.hpp"

namespace autove::lab {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("autove_lab_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Relative path -> bytes of every CSV under `dir`.
std::map<std::string, std::string> csv_files(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".csv")
      out[fs::relative(e.path(), dir).generic_string()] = slurp(e.path());
  return out;
}

LabConfig tiny(const fs::path& out) {
  LabConfig c = parse_config(
      "config_version = 1\n"
      "repetitions = 2\n"
      "vae.latent_dims = 4\n"
      "vae.dense_hidden = 16\n"
      "vae.epochs = 20\n"
      "qd.capacity = 12\n"
      "qd.generations = 3\n"
      "qd.children_per_gen = 8\n"
      "expansion.latent_dims = 4\n"
      "expansion.architecture = dense_reference\n");
  c.output_dir = out;
  return c;
}

TEST(Config, DefaultsAreTheDeskProfile) {
  const LabConfig c = parse_config("config_version = 1\n");
  EXPECT_EQ(to_text(c), to_text(desk_profile()));
  EXPECT_EQ(c.architecture, Architecture::kDenseReference);
  EXPECT_EQ(c.latent_dims, std::vector<int>{8});
  EXPECT_EQ(c.epochs, 300);
  EXPECT_EQ(c.capacity, 64u);
  EXPECT_EQ(c.generations, 128);
  EXPECT_EQ(c.repetitions, 5);
  EXPECT_EQ(c.reconstruction, Reduction::kPixelSum);
  EXPECT_EQ(c.expansion_architecture, Architecture::kConvPaper);
  EXPECT_EQ(c.expansion_filter_multiplier, 1);
}

TEST(Config, PaperProfileDiffersOnlyInScale) {
  const LabConfig p = parse_config("config_version = 1\nprofile = paper\n");
  EXPECT_EQ(p.epochs, 3000);
  EXPECT_EQ(p.capacity, 512u);
  EXPECT_EQ(p.generations, 1024);
  EXPECT_EQ(p.repetitions, 10);
  EXPECT_EQ(p.architecture, Architecture::kConvPaper);
  EXPECT_EQ(p.latent_dims, (std::vector<int>{4, 8, 16}));
  EXPECT_EQ(p.expansion_latent_dims, (std::vector<int>{8, 16, 32}));
  EXPECT_EQ(p.expansion_filter_multiplier, 4);
  const LabConfig d = desk_profile();
  EXPECT_EQ(p.beta, d.beta);
  EXPECT_EQ(p.gamma_max, d.gamma_max);
  EXPECT_EQ(p.learning_rate, d.learning_rate);
  EXPECT_EQ(p.batch_size, d.batch_size);
  EXPECT_EQ(p.children_per_gen, d.children_per_gen);
  EXPECT_EQ(p.mutation_sigma, d.mutation_sigma);
}

TEST(Config, ProfileAppliesBeforeOtherKeysInAnyOrder) {
  const LabConfig c = parse_config("vae.epochs = 7\nconfig_version = 1\nprofile = paper\n");
  EXPECT_EQ(c.epochs, 7);
  EXPECT_EQ(c.capacity, 512u);
}

TEST(Config, TextRoundTrips) {
  LabConfig c = paper_profile();
  c.seed = 99;
  c.output_dir = "some/where";
  c.base_shapes = {1, 3};
  c.mutation_sigma = 0.125;
  c.reconstruction = Reduction::kPixelMean;
  c.reencode_latent = true;
  const std::string text = to_text(c);
  EXPECT_EQ(to_text(parse_config(text)), text);
  EXPECT_NE(text.find("config_version = 1"), std::string::npos);
}

TEST(Config, ErrorsNameTheLine) {
  try {
    parse_config("config_version = 1\n\n# note\nvae.epoks = 3\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("vae.epoks"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_config("config_version = 1\nseed = 1\nseed = 2\n"), ConfigError);
  EXPECT_THROW(parse_config("config_version = 1\njust words\n"), ConfigError);
}

TEST(Config, VersionIsRequiredAndChecked) {
  EXPECT_THROW(parse_config("seed = 3\n"), ConfigError);
  EXPECT_THROW(parse_config("config_version = 2\n"), ConfigError);
  EXPECT_NO_THROW(parse_config("config_version = 1  # current\n"));
}

TEST(Config, RejectsBadValues) {
  for (const char* line : {"vae.architecture = mlp", "vae.reconstruction = max", "vae.epochs = 0",
                           "vae.epochs = 1.5", "vae.latent_dims = 4,,8",
                           "vae.validation_fraction = 1", "qd.mutation_sigma = -0.1",
                           "qd.reencode_latent = maybe", "profile = laptop", "report.alpha = x"}) {
    EXPECT_THROW(parse_config(std::string("config_version = 1\n") + line + "\n"), ConfigError)
        << line;
  }
}

TEST(Config, SetValueAndLoad) {
  LabConfig c;
  set_value(c, "vae.latent_dims", "4, 16");
  EXPECT_EQ(c.latent_dims, (std::vector<int>{4, 16}));
  EXPECT_THROW(set_value(c, "nope", "1"), ConfigError);
  EXPECT_THROW(load_config(scratch("missing") / "none.cfg"), ConfigError);
  const fs::path dir = scratch("load");
  fs::create_directories(dir);
  write_text(dir / "x.cfg", "config_version = 1\nseed = 12\n");
  EXPECT_EQ(load_config(dir / "x.cfg").seed, 12u);
}

TEST(Tasks, NamesParse) {
  EXPECT_EQ(parse_task("a"), Task::kBaseline);
  EXPECT_EQ(parse_task("d"), Task::kExtrapolation);
  EXPECT_EQ(parse_task("e"), Task::kExpansion);
  EXPECT_EQ(task_letter(Task::kInterpolation), 'c');
  EXPECT_THROW(parse_task("f"), ConfigError);
}

int count(const std::vector<bool>& m) { return static_cast<int>(std::count(m.begin(), m.end(), true)); }

TEST(Holdout, Geometry) {
  const auto b = build_holdout(Task::kRecombination);
  const auto c = build_holdout(Task::kInterpolation);
  const auto d = build_holdout(Task::kExtrapolation);
  EXPECT_EQ(count(b), 36);
  EXPECT_EQ(count(c), 96);
  EXPECT_EQ(count(d), 64);
  std::set<int> b_scales, b_rots, c_scales, c_rots, d_scales;
  for (int s = 0; s < 16; ++s) {
    for (int r = 0; r < 16; ++r) {
      const std::size_t i = static_cast<std::size_t>(s * 16 + r);
      if (b[i]) b_scales.insert(s), b_rots.insert(r);
      if (c[i]) c_scales.insert(s), c_rots.insert(r);
      if (d[i]) d_scales.insert(s);
    }
  }
  // b is interior in both factors, so each held-out factor value is seen in training
  EXPECT_EQ(b_scales.size(), 6u);
  EXPECT_GT(*b_scales.begin(), 0);
  EXPECT_LT(*b_scales.rbegin(), 15);
  EXPECT_GT(*b_rots.begin(), 0);
  EXPECT_LT(*b_rots.rbegin(), 15);
  // c removes an interior band of rotations at every scale
  EXPECT_EQ(c_scales.size(), 16u);
  EXPECT_EQ(c_rots.size(), 6u);
  EXPECT_GT(*c_rots.begin(), 0);
  EXPECT_LT(*c_rots.rbegin(), 15);
  // d removes the largest scales, outside the training range
  EXPECT_EQ(d_scales, (std::set<int>{12, 13, 14, 15}));
  EXPECT_THROW(build_holdout(Task::kBaseline), std::invalid_argument);
  EXPECT_THROW(build_holdout(Task::kExpansion), std::invalid_argument);
}

TEST(Seeds, DerivedStreamsDiffer) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t base : {1, 2, 3})
    for (std::uint64_t s = 0; s < 50; ++s) seen.insert(derive_seed(base, s));
  EXPECT_EQ(seen.size(), 150u);
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(Significance, RowsCarryTheTest) {
  const auto r = compare({"f", "m", "x", "y", {1.0, 1.1, 0.9, 1.05}, {2.0, 2.1, 1.9, 2.2}}, 0.01);
  EXPECT_TRUE(r.tested);
  EXPECT_LT(r.test.p, 0.01);
  EXPECT_TRUE(r.significant);
  const auto u = compare({"f", "m", "x", "y", {1.0}, {2.0, 3.0}}, 0.01);
  EXPECT_FALSE(u.tested);
  EXPECT_FALSE(u.significant);
}

TEST(RunTask, WritesSnapshotMetricsAndManifest) {
  const fs::path root = scratch("task") / "nested" / "out";
  LabConfig c = tiny(root);
  c.repetitions = 1;
  const TaskReport r = run_task(c, Task::kRecombination);
  ASSERT_TRUE(fs::exists(r.dir));
  EXPECT_EQ(r.dir, root / "task_b_s1");
  for (const char* f : {"config.txt", "metrics.csv", "manifest.csv", "significance.csv"})
    EXPECT_TRUE(fs::exists(r.dir / f)) << f;
  EXPECT_EQ(to_text(load_config(r.dir / "config.txt")), to_text(c));
  ASSERT_EQ(r.runs.size(), 1u);
  EXPECT_EQ(r.runs[0].eval_errors.size(), 36u);
  EXPECT_EQ(r.runs[0].train_errors.size(), 220u);

  const CsvTable m = read_csv(r.dir / "manifest.csv");
  std::set<std::string> listed;
  for (const auto& row : m.rows) listed.insert(row[0]);
  EXPECT_TRUE(listed.count("metrics.csv"));
  EXPECT_TRUE(listed.count("config.txt"));
  for (const auto& row : m.rows)
    EXPECT_EQ(std::to_string(fs::file_size(r.dir / row[0])), row[1]) << row[0];
}

TEST(RunTask, ExpansionIsNotATask) {
  EXPECT_THROW(run_task(tiny(scratch("e")), Task::kExpansion), std::invalid_argument);
}

TEST(RunAllTasks, RerunIsByteIdenticalAndReportRecomputes) {
  const fs::path a = scratch("all_a"), b = scratch("all_b");
  const AllTasksReport ra = run_all_tasks(tiny(a));
  ASSERT_EQ(ra.rows.size(), 2u);
  EXPECT_EQ(ra.significance.size(), 6u);
  for (const auto& row : ra.rows) {
    for (double e : row.error) {
      EXPECT_GE(e, 0.0);
      EXPECT_LE(e, 1.0);
    }
  }
  run_all_tasks(tiny(b));
  const auto fa = csv_files(ra.dir), fb = csv_files(b / "task_all_s1");
  ASSERT_FALSE(fa.empty());
  EXPECT_EQ(fa.size(), fb.size());
  for (const auto& [name, bytes] : fa) {
    ASSERT_TRUE(fb.count(name)) << name;
    EXPECT_TRUE(bytes == fb.at(name)) << name;
  }

  const std::string before = slurp(ra.dir / "significance.csv");
  const std::string summary = emit_report(ra.dir);
  EXPECT_EQ(slurp(ra.dir / "significance.csv"), before);
  EXPECT_TRUE(fs::exists(ra.dir / "summary.txt"));
  EXPECT_NE(summary.find("directional"), std::string::npos);
  EXPECT_EQ(detect_run_kind(ra.dir), RunKind::kAllTasks);

  // other seed, other directory and other numbers
  LabConfig other = tiny(a);
  other.seed = 2;
  const AllTasksReport ro = run_all_tasks(other);
  EXPECT_EQ(ro.dir, a / "task_all_s2");
  EXPECT_NE(slurp(ro.dir / "comparison.csv"), slurp(ra.dir / "comparison.csv"));
}

TEST(RunExpansion, FourFamiliesAndSharedPsArchive) {
  const fs::path out = scratch("exp");
  const LabConfig c = tiny(out);
  const ExpansionReport r = run_expansion(c);
  ASSERT_EQ(r.runs.size(), 8u);
  std::set<std::string> families;
  for (const auto& x : r.runs) {
    families.insert(std::string(1, x.configuration) + "-" + std::string(to_string(x.space)));
    EXPECT_EQ(x.archive_size, c.capacity);
  }
  EXPECT_EQ(families, (std::set<std::string>{"R-PS", "R-LS", "C-PS", "C-LS"}));
  for (const char* f : {"config.txt", "metrics.csv", "manifest.csv", "significance.csv"})
    EXPECT_TRUE(fs::exists(r.dir / f)) << f;

  const fs::path run = r.dir / expansion_run_name(4, 0);
  for (const char* f : {"R_PS/archive.csv", "R_LS/stats.csv", "C_PS/archive.csv",
                        "C_LS/archive.csv", "R_PS_latent.csv", "vae_R.bin", "vae_C.bin"})
    EXPECT_TRUE(fs::exists(run / f)) << f;

  // C trains on the dumped R-PS bitmaps: retraining on the PGMs read back
  // reproduces the stored C model exactly.
  const CsvTable archive = read_csv(run / "R_PS" / "archive.csv");
  std::vector<Bitmap> dumped;
  for (const auto& row : archive.rows)
    dumped.push_back(read_pgm(run / "R_PS" / "elites" /
                              elite_file_name(std::stoull(row[archive.column("id")]))));
  ASSERT_EQ(dumped.size(), c.capacity);
  const std::uint64_t base = repetition_seed(c, 0);
  const TrainResult again = train(c.expansion_vae(4, derive_seed(base, (4u << 8) | 4)), dumped);
  const VaeModel stored = read_model(run / "vae_C.bin");
  EXPECT_TRUE(stored.parameters() == again.model.parameters());

  const std::string before = slurp(r.dir / "significance.csv");
  emit_report(r.dir);
  EXPECT_EQ(slurp(r.dir / "significance.csv"), before);
  EXPECT_EQ(detect_run_kind(r.dir), RunKind::kExpansion);
}

TEST(RunExpansion, RerunIsByteIdentical) {
  const fs::path a = scratch("exp_a"), b = scratch("exp_b");
  LabConfig c = tiny(a);
  c.repetitions = 1;
  run_expansion(c);
  c.output_dir = b;
  run_expansion(c);
  const auto fa = csv_files(a), fb = csv_files(b);
  ASSERT_FALSE(fa.empty());
  EXPECT_TRUE(fa == fb);
  EXPECT_EQ(slurp(a / "expansion_s1" / "z4_r0" / "vae_C.bin"),
            slurp(b / "expansion_s1" / "z4_r0" / "vae_C.bin"));
}

}  // namespace
}  // namespace autove::lab
