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

#ifndef AUTOVE_VAE_IO_HPP_
#define AUTOVE_VAE_IO_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "autove/bitmap.hpp"
#include "autove/csv.hpp"
#include "autove/vae.hpp"

namespace autove {

// Model file, version 1. All integers and reals little-endian:
//   char[4]  magic "AVAE"
//   u32      format version
//   u32      architecture tag (0 dense_reference, 1 conv_paper)
//   u32      latent_dim
//   u32      filter_multiplier
//   u32      dense_hidden
//   u32      trained epochs
//   u64      parameter count
//   f64[]    parameters, tensors in declaration order
inline constexpr std::array<char, 4> kModelMagic = {'A', 'V', 'A', 'E'};
inline constexpr std::uint32_t kModelVersion = 1;

namespace detail {

inline void put_le(std::ostream& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline std::uint64_t get_le(std::istream& in, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw IoError("model file truncated");
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return v;
}

}  // namespace detail

inline void write_model(const std::filesystem::path& path, const VaeModel& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out.write(kModelMagic.data(), kModelMagic.size());
  const auto& c = m.config();
  detail::put_le(out, kModelVersion, 4);
  detail::put_le(out, static_cast<std::uint32_t>(c.architecture), 4);
  detail::put_le(out, static_cast<std::uint32_t>(c.latent_dim), 4);
  detail::put_le(out, static_cast<std::uint32_t>(c.filter_multiplier), 4);
  detail::put_le(out, static_cast<std::uint32_t>(c.dense_hidden), 4);
  detail::put_le(out, static_cast<std::uint32_t>(m.trained_epochs()), 4);
  const auto& p = m.parameters();
  detail::put_le(out, static_cast<std::uint64_t>(p.size()), 8);
  for (Eigen::Index i = 0; i < p.size(); ++i)
    detail::put_le(out, std::bit_cast<std::uint64_t>(p[i]), 8);
  if (!out) throw IoError("write failed: " + path.string());
}

// Training hyperparameters are not stored; `base` supplies them.
inline VaeModel read_model(const std::filesystem::path& path, VaeConfig base = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kModelMagic) throw IoError("not a model file: " + path.string());
  const auto version = detail::get_le(in, 4);
  if (version != kModelVersion) {
    throw IoError("unsupported model version " + std::to_string(version));
  }
  const auto arch = detail::get_le(in, 4);
  if (arch > 1) throw IoError("unknown architecture tag in " + path.string());
  base.architecture = static_cast<Architecture>(arch);
  base.latent_dim = static_cast<int>(detail::get_le(in, 4));
  base.filter_multiplier = static_cast<int>(detail::get_le(in, 4));
  base.dense_hidden = static_cast<int>(detail::get_le(in, 4));
  const int epochs = static_cast<int>(detail::get_le(in, 4));
  const auto count = detail::get_le(in, 8);
  VaeModel m(base);
  if (count != static_cast<std::uint64_t>(m.parameters().size())) {
    throw IoError("parameter count does not match architecture in " + path.string());
  }
  for (Eigen::Index i = 0; i < m.parameters().size(); ++i)
    m.parameters()[i] = std::bit_cast<double>(detail::get_le(in, 8));
  m.set_trained_epochs(epochs);
  return m;
}

inline void write_training_log(const std::filesystem::path& path,
                               std::span<const EpochRecord> log) {
  CsvWriter csv(path, {"epoch", "gamma", "train_reconstruction", "train_kl",
                       "train_total", "val_reconstruction", "val_kl", "val_total"});
  for (const auto& r : log) {
    csv << r.epoch << r.gamma << r.train.reconstruction << r.train.kl << r.train.total
        << r.validation.reconstruction << r.validation.kl << r.validation.total;
    csv.end_row();
  }
}

}  // namespace autove

#endif  // AUTOVE_VAE_IO_HPP_
