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

#ifndef AUTOVE_DATASET_HPP_
#define AUTOVE_DATASET_HPP_

#include <cstdio>
#include <filesystem>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "autove/base_shapes.hpp"
#include "autove/bitmap.hpp"
#include "autove/csv.hpp"
#include "autove/shape_gen.hpp"

namespace autove {

// Scale x rotation grid over one base shape. The holdout mask is indexed
// [scale_index * rotation_steps + rotation_index].
struct DatasetSpec {
  int base_shape_id = 0;
  int scale_steps = 16;
  int rotation_steps = 16;
  double scale_min = 0.1;
  double scale_max = 1.0;
  double rotation_min = 0.0;
  double rotation_max = std::numbers::pi / 2.0;
  std::vector<bool> holdout_mask;  // empty means nothing held out

  void validate() const {
    if (scale_steps < 1 || rotation_steps < 1) {
      throw std::invalid_argument("dataset grid needs at least one step per factor");
    }
    if (!holdout_mask.empty() &&
        holdout_mask.size() !=
            static_cast<std::size_t>(scale_steps * rotation_steps)) {
      throw std::invalid_argument("holdout mask does not match the factor grid");
    }
  }

  double scale(int index) const {
    return scale_steps == 1 ? scale_max
                            : scale_min + (scale_max - scale_min) * index /
                                              (scale_steps - 1);
  }
  double rotation(int index) const {
    return rotation_steps == 1
               ? rotation_min
               : rotation_min + (rotation_max - rotation_min) * index /
                                    (rotation_steps - 1);
  }
  bool held_out(int scale_index, int rotation_index) const {
    return !holdout_mask.empty() &&
           holdout_mask[static_cast<std::size_t>(scale_index * rotation_steps +
                                                 rotation_index)];
  }
};

struct DatasetItem {
  Bitmap bitmap;
  int scale_index = 0;
  int rotation_index = 0;
  bool held_out = false;
};

inline Bitmap render_transformed(const Genome& g, double scale, double rotation) {
  return express_polygon(to_cartesian(transform(decode_polar(g), scale, rotation)));
}

inline std::vector<DatasetItem> make_dataset(const DatasetSpec& spec) {
  spec.validate();
  const Genome base = base_shape(spec.base_shape_id);
  std::vector<DatasetItem> items;
  items.reserve(static_cast<std::size_t>(spec.scale_steps * spec.rotation_steps));
  for (int s = 0; s < spec.scale_steps; ++s) {
    for (int r = 0; r < spec.rotation_steps; ++r) {
      items.push_back({render_transformed(base, spec.scale(s), spec.rotation(r)),
                       s, r, spec.held_out(s, r)});
    }
  }
  return items;
}

inline std::vector<Bitmap> bitmaps_of(const std::vector<DatasetItem>& items,
                                      bool held_out) {
  std::vector<Bitmap> out;
  for (const auto& it : items)
    if (it.held_out == held_out) out.push_back(it.bitmap);
  return out;
}

inline std::string dataset_item_name(int shape_id, int scale_index,
                                     int rotation_index) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "shape%d_s%02d_r%02d.pgm", shape_id,
                scale_index, rotation_index);
  return buf;
}

// One PGM per item under `dir`, plus manifest.csv listing them.
inline void write_dataset(const std::filesystem::path& dir, int shape_id,
                          const std::vector<DatasetItem>& items) {
  std::filesystem::create_directories(dir);
  CsvWriter manifest(dir / "manifest.csv",
                     {"shape_id", "scale_index", "rotation_index", "held_out",
                      "file"});
  for (const auto& it : items) {
    const std::string name =
        dataset_item_name(shape_id, it.scale_index, it.rotation_index);
    write_pgm(dir / name, it.bitmap);
    manifest << shape_id << it.scale_index << it.rotation_index << it.held_out
             << name;
    manifest.end_row();
  }
}

// Relative file paths are resolved against the manifest's directory.
inline std::vector<DatasetItem> read_dataset(const std::filesystem::path& manifest) {
  const CsvTable t = read_csv(manifest);
  const auto cs = t.column("scale_index");
  const auto cr = t.column("rotation_index");
  const auto ch = t.column("held_out");
  const auto cf = t.column("file");
  std::vector<DatasetItem> items;
  for (const auto& row : t.rows) {
    std::filesystem::path file = row.at(cf);
    if (file.is_relative()) file = manifest.parent_path() / file;
    items.push_back({read_pgm(file), std::stoi(row.at(cs)), std::stoi(row.at(cr)),
                     row.at(ch) == "1"});
  }
  return items;
}

}  // namespace autove

#endif  // AUTOVE_DATASET_HPP_
