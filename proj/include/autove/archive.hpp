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

#ifndef AUTOVE_ARCHIVE_HPP_
#define AUTOVE_ARCHIVE_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "autove/bitmap.hpp"

namespace autove {

using Descriptor = std::vector<double>;

template <class G>
struct Elite {
  G genome;
  Bitmap bitmap;
  Descriptor descriptor;
  double fitness = 0.0;
  std::uint64_t id = 0;  // insertion order; smaller is older
};

struct EvictionEvent {
  std::uint64_t removed_id = 0;
  std::uint64_t partner_id = 0;
  double distance = 0.0;
  double removed_fitness = 0.0;
  double partner_fitness = 0.0;
};

inline double squared_distance(const Descriptor& a, const Descriptor& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

// Voronoi-Elites archive. Elites are added freely; once the count exceeds
// the capacity, the closest pair in descriptor space competes and the member
// with lower fitness (the older one on a tie) is dropped, repeated until the
// capacity holds. An exact descriptor duplicate competes with its twin as
// soon as it is added.
template <class G>
class Archive {
 public:
  explicit Archive(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) throw std::invalid_argument("archive capacity must be >= 1");
  }

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return elites_.size(); }
  const std::vector<Elite<G>>& elites() const { return elites_; }
  const Elite<G>& operator[](std::size_t i) const { return elites_[i]; }

  // Overwrites elite.id with the next insertion number.
  void add(Elite<G> elite, std::vector<EvictionEvent>* log = nullptr) {
    for (double v : elite.descriptor)
      if (!std::isfinite(v)) throw std::invalid_argument("descriptor must be finite");
    if (!elites_.empty() && elite.descriptor.size() != elites_.front().descriptor.size()) {
      throw std::invalid_argument("descriptor dimension mismatch");
    }
    elite.id = next_id_++;
    const std::size_t self = elites_.size();
    elites_.push_back(std::move(elite));
    nn_.push_back(kNone);
    nn_dist_.push_back(std::numeric_limits<double>::infinity());
    for (std::size_t j = 0; j < self; ++j) {
      const double d = squared_distance(elites_[self].descriptor, elites_[j].descriptor);
      offer(self, j, d);
      offer(j, self, d);
    }
    if (nn_[self] != kNone && nn_dist_[self] == 0.0) compete(self, nn_[self], log);
  }

  // Returns the number of elites removed.
  std::size_t evict_to_capacity(std::vector<EvictionEvent>* log = nullptr) {
    std::size_t removed = 0;
    while (elites_.size() > capacity_) {
      std::size_t best = 0;
      auto best_key = pair_key(0);
      for (std::size_t i = 1; i < elites_.size(); ++i) {
        const auto key = pair_key(i);
        if (key < best_key) {
          best_key = key;
          best = i;
        }
      }
      compete(best, nn_[best], log);
      ++removed;
    }
    return removed;
  }

  void insert(Elite<G> elite, std::vector<EvictionEvent>* log = nullptr) {
    add(std::move(elite), log);
    evict_to_capacity(log);
  }

  // Euclidean distance from elite i to its nearest neighbour.
  double nearest_distance(std::size_t i) const { return std::sqrt(nn_dist_[i]); }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  // Closest-pair ordering: distance, then the older id, then the newer.
  std::tuple<double, std::uint64_t, std::uint64_t> pair_key(std::size_t i) const {
    const std::uint64_t a = elites_[i].id;
    const std::uint64_t b = nn_[i] == kNone ? std::numeric_limits<std::uint64_t>::max()
                                            : elites_[nn_[i]].id;
    return {nn_dist_[i], std::min(a, b), std::max(a, b)};
  }

  void offer(std::size_t i, std::size_t j, double d) {
    if (nn_[i] == kNone || d < nn_dist_[i] ||
        (d == nn_dist_[i] && elites_[j].id < elites_[nn_[i]].id)) {
      nn_[i] = j;
      nn_dist_[i] = d;
    }
  }

  void compete(std::size_t a, std::size_t b, std::vector<EvictionEvent>* log) {
    const auto& ea = elites_[a];
    const auto& eb = elites_[b];
    const bool drop_a = ea.fitness < eb.fitness ||
                        (ea.fitness == eb.fitness && ea.id < eb.id);
    const std::size_t loser = drop_a ? a : b;
    const std::size_t winner = drop_a ? b : a;
    if (log) {
      log->push_back({elites_[loser].id, elites_[winner].id,
                      std::sqrt(squared_distance(ea.descriptor, eb.descriptor)),
                      elites_[loser].fitness, elites_[winner].fitness});
    }
    remove(loser);
  }

  void remove(std::size_t r) {
    elites_.erase(elites_.begin() + static_cast<std::ptrdiff_t>(r));
    nn_.erase(nn_.begin() + static_cast<std::ptrdiff_t>(r));
    nn_dist_.erase(nn_dist_.begin() + static_cast<std::ptrdiff_t>(r));
    for (std::size_t i = 0; i < elites_.size(); ++i) {
      if (nn_[i] == r) {
        nn_[i] = kNone;
        nn_dist_[i] = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < elites_.size(); ++j)
          if (j != i) offer(i, j, squared_distance(elites_[i].descriptor, elites_[j].descriptor));
      } else if (nn_[i] != kNone && nn_[i] > r) {
        --nn_[i];
      }
    }
  }

  std::size_t capacity_;
  std::vector<Elite<G>> elites_;
  std::vector<std::size_t> nn_;
  std::vector<double> nn_dist_;
  std::uint64_t next_id_ = 0;
};

}  // namespace autove

#endif  // AUTOVE_ARCHIVE_HPP_
