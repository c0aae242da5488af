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

#ifndef AUTOVE_QD_IO_HPP_
#define AUTOVE_QD_IO_HPP_

#include <cstdio>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "autove/archive.hpp"
#include "autove/csv.hpp"
#include "autove/qd.hpp"

namespace autove {

inline std::vector<double> genome_values(const Genome& g) {
  return {g.genes().begin(), g.genes().end()};
}
inline std::vector<double> genome_values(const LatentCode& z) { return z; }

inline std::string elite_file_name(std::uint64_t id) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "elite_%06llu.pgm", static_cast<unsigned long long>(id));
  return buf;
}

// archive.csv (id, fitness, d*, g*) and, with `bitmaps`, one PGM per elite
// under elites/.
template <class G>
void write_archive(const std::filesystem::path& dir, const Archive<G>& a, bool bitmaps = true) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> header = {"id", "fitness"};
  const std::size_t dd = a.size() ? a[0].descriptor.size() : 0;
  const std::size_t gd = a.size() ? genome_values(a[0].genome).size() : 0;
  for (std::size_t i = 0; i < dd; ++i) header.push_back("d" + std::to_string(i));
  for (std::size_t i = 0; i < gd; ++i) header.push_back("g" + std::to_string(i));
  CsvWriter csv(dir / "archive.csv", header);
  if (bitmaps) std::filesystem::create_directories(dir / "elites");
  for (const auto& e : a.elites()) {
    csv << static_cast<unsigned long>(e.id) << e.fitness;
    for (double v : e.descriptor) csv << v;
    for (double v : genome_values(e.genome)) csv << v;
    csv.end_row();
    if (bitmaps) write_pgm(dir / "elites" / elite_file_name(e.id), e.bitmap);
  }
}

inline void write_generation_stats(const std::filesystem::path& path,
                                   std::span<const GenerationStats> stats) {
  CsvWriter csv(path, {"generation", "archive_size", "mean_fitness", "max_fitness",
                       "descriptor_distance_variance"});
  for (const auto& s : stats) {
    csv << s.generation << static_cast<unsigned long>(s.archive_size) << s.mean_fitness
        << s.max_fitness << s.descriptor_distance_variance;
    csv.end_row();
  }
}

}  // namespace autove

#endif  // AUTOVE_QD_IO_HPP_
