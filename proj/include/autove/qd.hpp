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

#ifndef AUTOVE_QD_HPP_
#define AUTOVE_QD_HPP_

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "autove/archive.hpp"
#include "autove/bitmap.hpp"
#include "autove/shape_gen.hpp"
#include "autove/symmetry_fitness.hpp"
#include "autove/vae.hpp"

namespace autove {

enum class SearchSpace { kParameter, kLatent };

inline std::string_view to_string(SearchSpace s) {
  return s == SearchSpace::kLatent ? "LS" : "PS";
}

struct QdConfig {
  int generations = 1024;
  int children_per_gen = 32;
  double mutation_sigma = 0.1;
  std::size_t capacity = 512;
  SearchSpace search_space = SearchSpace::kParameter;
  std::uint64_t seed = 1;
  int tournament_size = 0;   // 0 or 1: uniform random parents
  bool reencode_latent = false;

  void validate() const {
    if (generations < 0) throw std::invalid_argument("generations must be >= 0");
    if (children_per_gen < 1 || capacity < 1) {
      throw std::invalid_argument("children_per_gen and capacity must be >= 1");
    }
    if (!(mutation_sigma > 0.0)) throw std::invalid_argument("mutation_sigma must be > 0");
    if (tournament_size < 0) throw std::invalid_argument("tournament_size must be >= 0");
  }
};

// Gaussian perturbation of every gene; parameter-space genes are clamped back
// into [0,1] by the Genome constructor.
inline Genome mutate(const Genome& parent, double sigma, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, sigma);
  std::array<double, kGeneCount> g;
  for (int i = 0; i < kGeneCount; ++i) g[i] = parent[i] + n(rng);
  return Genome(g);
}

inline LatentCode mutate(const LatentCode& parent, double sigma, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, sigma);
  LatentCode z = parent;
  for (double& v : z) v += n(rng);
  return z;
}

// A search space: how genomes become bitmaps, where they sit in the niching
// space, and how they vary.
template <class D>
concept SearchDomain = requires(const D d, const typename D::GenomeType& g,
                                const Bitmap& b, std::mt19937_64& rng) {
  { d.express(g) } -> std::same_as<Bitmap>;
  { d.describe(g, b) } -> std::same_as<Descriptor>;
  { d.vary(g, 0.1, rng) } -> std::same_as<typename D::GenomeType>;
};

// Genes are rendered by the shape generator; the VAE encoder mean is the
// niching descriptor.
struct ParameterDomain {
  using GenomeType = Genome;
  const VaeModel* vae = nullptr;

  Bitmap express(const Genome& g) const { return genome_to_bitmap(g); }
  Descriptor describe(const Genome&, const Bitmap& b) const { return vae->encode(b).first; }
  Genome vary(const Genome& g, double sigma, std::mt19937_64& rng) const {
    return mutate(g, sigma, rng);
  }
};

// Latent codes are decoded and thresholded at 0.5; the code itself is the
// descriptor unless re-encoding is requested.
struct LatentDomain {
  using GenomeType = LatentCode;
  const VaeModel* vae = nullptr;
  bool reencode = false;

  // Decoded speckles are dropped like spline artifacts, so phenotypes of
  // both spaces are one 4-connected piece.
  Bitmap express(const LatentCode& z) const {
    Bitmap b = largest_component(binarize(vae->decode(z)));
    if (b.empty()) throw ShapeError("empty shape");
    return b;
  }
  Descriptor describe(const LatentCode& z, const Bitmap& b) const {
    return reencode ? vae->encode(b).first : z;
  }
  LatentCode vary(const LatentCode& z, double sigma, std::mt19937_64& rng) const {
    return mutate(z, sigma, rng);
  }
};

struct GenerationStats {
  int generation = 0;
  std::size_t archive_size = 0;
  double mean_fitness = 0.0;
  double max_fitness = 0.0;
  // Variance of the elites' nearest-neighbour descriptor distances.
  double descriptor_distance_variance = 0.0;
};

template <class G>
struct QdResult {
  Archive<G> archive;
  std::vector<GenerationStats> stats;
  std::size_t discarded_children = 0;
};

template <class G>
GenerationStats summarize(const Archive<G>& a, int generation) {
  GenerationStats s;
  s.generation = generation;
  s.archive_size = a.size();
  if (a.size() == 0) return s;
  s.max_fitness = a[0].fitness;
  double nn_sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s.mean_fitness += a[i].fitness;
    s.max_fitness = std::max(s.max_fitness, a[i].fitness);
  }
  s.mean_fitness /= static_cast<double>(a.size());
  if (a.size() < 2) return s;
  std::vector<double> nn(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) nn_sum += nn[i] = a.nearest_distance(i);
  const double mean = nn_sum / static_cast<double>(a.size());
  for (double d : nn) s.descriptor_distance_variance += (d - mean) * (d - mean);
  s.descriptor_distance_variance /= static_cast<double>(a.size());
  return s;
}

// Expresses and scores a genome; nullopt when the phenotype is unusable.
template <SearchDomain D>
std::optional<Elite<typename D::GenomeType>> evaluate(const D& domain,
                                                      typename D::GenomeType genome) {
  try {
    Bitmap b = domain.express(genome);
    const double f = fitness(b);
    Descriptor desc = domain.describe(genome, b);
    return Elite<typename D::GenomeType>{std::move(genome), b, std::move(desc), f, 0};
  } catch (const ShapeError&) {
    return std::nullopt;
  }
}

// Voronoi-Elites loop shared by both search spaces: seed the archive with
// the evaluated initial population, then each generation pick parents at
// random, mutate, evaluate, add all children and evict down to capacity.
template <SearchDomain D>
QdResult<typename D::GenomeType> run_qd(const QdConfig& config, const D& domain,
                                        std::span<const typename D::GenomeType> init) {
  using G = typename D::GenomeType;
  config.validate();
  QdResult<G> result{Archive<G>(config.capacity), {}, 0};
  auto& archive = result.archive;
  for (const G& g : init) {
    if (auto e = evaluate(domain, g)) {
      archive.add(std::move(*e));
    } else {
      ++result.discarded_children;
    }
  }
  archive.evict_to_capacity();
  if (archive.size() == 0) throw ShapeError("no usable phenotype in the initial population");
  result.stats.push_back(summarize(archive, 0));

  std::mt19937_64 rng(config.seed);
  const auto pick_parent = [&]() -> const G& {
    std::uniform_int_distribution<std::size_t> u(0, archive.size() - 1);
    std::size_t best = u(rng);
    for (int k = 1; k < config.tournament_size; ++k) {
      const std::size_t c = u(rng);
      if (archive[c].fitness > archive[best].fitness) best = c;
    }
    return archive[best].genome;
  };

  std::vector<G> children;
  for (int gen = 1; gen <= config.generations; ++gen) {
    children.clear();
    for (int c = 0; c < config.children_per_gen; ++c)
      children.push_back(domain.vary(pick_parent(), config.mutation_sigma, rng));
    for (G& child : children) {
      if (auto e = evaluate(domain, std::move(child))) {
        archive.add(std::move(*e));
      } else {
        ++result.discarded_children;
      }
    }
    archive.evict_to_capacity();
    result.stats.push_back(summarize(archive, gen));
  }
  return result;
}

}  // namespace autove

#endif  // AUTOVE_QD_HPP_
