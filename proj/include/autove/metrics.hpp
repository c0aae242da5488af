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

#ifndef AUTOVE_METRICS_HPP_
#define AUTOVE_METRICS_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "autove/bitmap.hpp"

namespace autove {

inline constexpr double kFractionalNorm = 0.1;

// (sum |a_i - b_i|^p)^(1/p); quasi-norm for p < 1.
inline double fractional_distance(std::span<const double> a, std::span<const double> b,
                                  double p = kFractionalNorm) {
  if (a.size() != b.size()) throw std::invalid_argument("fractional_distance: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::pow(std::abs(a[i] - b[i]), p);
  return std::pow(s, 1.0 / p);
}

// For binary grids every differing pixel contributes 1 to the inner sum, so
// the L^0.1 distance is the Hamming distance to the 10th power.
inline double fractional_distance(const Bitmap& a, const Bitmap& b) {
  return std::pow(static_cast<double>(hamming_distance(a, b)), 1.0 / kFractionalNorm);
}

inline double min_dissimilarity(const Bitmap& s, std::span<const Bitmap> set) {
  if (set.empty()) throw std::invalid_argument("min_dissimilarity: empty set");
  double best = std::numeric_limits<double>::infinity();
  for (const Bitmap& t : set) best = std::min(best, fractional_distance(s, t));
  return best;
}

// Pairwise L^0.1 distances; also keeps Hamming counts for log-domain sums.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::span<const Bitmap> set) : n_(set.size()) {
    hamming_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        hamming_[i * n_ + j] = hamming_[j * n_ + i] = hamming_distance(set[i], set[j]);
    dist_.resize(n_ * n_);
    for (std::size_t k = 0; k < dist_.size(); ++k)
      dist_[k] = std::pow(static_cast<double>(hamming_[k]), 1.0 / kFractionalNorm);
  }

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  int hamming(std::size_t i, std::size_t j) const { return hamming_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<int> hamming_;
  std::vector<double> dist_;
};

// A PD value is a sum of n-1 min-dissimilarities. `order` lists the set in
// reverse removal order: element k contributed its distance to elements 0..k-1.
struct PdEvaluation {
  double value = 0.0;
  std::vector<std::size_t> order;
};

inline double order_value(const DistanceMatrix& d, std::span<const std::size_t> order) {
  double total = 0.0;
  for (std::size_t k = 1; k < order.size(); ++k) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < k; ++j) m = std::min(m, d(order[k], order[j]));
    total += m;
  }
  return total;
}

// The recursion PD(X) = max_s PD(X - s) + d(s, X - s) by dynamic programming
// over subsets. Exponential; sets above 20 members are refused.
inline PdEvaluation pure_diversity_exact(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  if (n > 20) throw std::invalid_argument("exact pure diversity limited to 20 members");
  if (n <= 1) return {0.0, std::vector<std::size_t>(n, 0)};
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<double> best(full + 1u, 0.0);
  std::vector<std::uint8_t> removed(full + 1u, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    double top = -1.0;
    for (std::size_t s = 0; s < n; ++s) {
      if (!(mask >> s & 1u)) continue;
      const std::uint32_t rest = mask & ~(1u << s);
      double m = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n; ++j)
        if (rest >> j & 1u) m = std::min(m, d(s, j));
      const double v = best[rest] + m;
      if (v > top) {
        top = v;
        removed[mask] = static_cast<std::uint8_t>(s);
      }
    }
    best[mask] = top;
  }
  PdEvaluation out{best[full], {}};
  std::uint32_t mask = full;
  while (std::popcount(mask) > 1) {
    out.order.push_back(removed[mask]);
    mask &= ~(1u << removed[mask]);
  }
  out.order.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
  std::reverse(out.order.begin(), out.order.end());
  return out;
}

// Beam search over insertion orders. A partial order's future gains depend
// only on which members it holds, so beams with the same member set keep just
// the best prefix. Width 1 from every start is farthest-point insertion.
inline PdEvaluation pure_diversity_beam(const DistanceMatrix& d, std::size_t width = 16) {
  const std::size_t n = d.size();
  if (n <= 1) return {0.0, std::vector<std::size_t>(n, 0)};
  struct Beam {
    std::vector<std::size_t> order;
    std::vector<bool> members;
    std::vector<double> nearest;  // distance of each non-member to the members
    double value = 0.0;
  };
  std::vector<Beam> beams;
  for (std::size_t s = 0; s < n; ++s) {
    Beam b{{s}, std::vector<bool>(n, false), std::vector<double>(n), 0.0};
    b.members[s] = true;
    for (std::size_t j = 0; j < n; ++j) b.nearest[j] = d(s, j);
    beams.push_back(std::move(b));
  }
  struct Candidate {
    double value;
    std::size_t beam;
    std::size_t add;
  };
  std::vector<Candidate> cands;
  for (std::size_t step = 1; step < n; ++step) {
    cands.clear();
    for (std::size_t bi = 0; bi < beams.size(); ++bi)
      for (std::size_t j = 0; j < n; ++j)
        if (!beams[bi].members[j]) cands.push_back({beams[bi].value + beams[bi].nearest[j], bi, j});
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
    std::vector<Beam> next;
    for (const Candidate& c : cands) {
      if (next.size() >= width) break;
      std::vector<bool> members = beams[c.beam].members;
      members[c.add] = true;
      const bool seen = std::any_of(next.begin(), next.end(),
                                    [&](const Beam& b) { return b.members == members; });
      if (seen) continue;
      Beam b{beams[c.beam].order, std::move(members), beams[c.beam].nearest, c.value};
      b.order.push_back(c.add);
      for (std::size_t j = 0; j < n; ++j) b.nearest[j] = std::min(b.nearest[j], d(c.add, j));
      next.push_back(std::move(b));
    }
    beams = std::move(next);
  }
  return {beams.front().value, std::move(beams.front().order)};
}

inline constexpr std::size_t kExactPdLimit = 16;

struct DiversityReport {
  double pd_value = 0.0;        // raw sum
  double log_pd_value = 0.0;    // natural log, accumulated in the log domain
  std::size_t set_size = 0;
  double norm_exponent = kFractionalNorm;
};

// Exact for sets of up to 16 bitmaps, beam search above that.
inline DiversityReport pure_diversity(std::span<const Bitmap> set) {
  if (set.empty()) throw std::invalid_argument("pure_diversity: empty set");
  const DistanceMatrix d(set);
  const PdEvaluation e =
      set.size() <= kExactPdLimit ? pure_diversity_exact(d) : pure_diversity_beam(d);
  DiversityReport r;
  r.pd_value = e.value;
  r.set_size = set.size();
  // log sum_k h_k^10 via log-sum-exp over 10 * ln h_k.
  std::vector<double> logs;
  for (std::size_t k = 1; k < e.order.size(); ++k) {
    int h = std::numeric_limits<int>::max();
    for (std::size_t j = 0; j < k; ++j) h = std::min(h, d.hamming(e.order[k], e.order[j]));
    if (h > 0) logs.push_back(std::log(static_cast<double>(h)) / kFractionalNorm);
  }
  if (logs.empty()) {
    r.log_pd_value = -std::numeric_limits<double>::infinity();
  } else {
    const double top = *std::max_element(logs.begin(), logs.end());
    double s = 0.0;
    for (double l : logs) s += std::exp(l - top);
    r.log_pd_value = top + std::log(s);
  }
  return r;
}

// Regularized incomplete beta I_x(a, b) by Lentz's continued fraction.
inline double regularized_incomplete_beta(double a, double b, double x) {
  if (x < 0.0 || x > 1.0 || a <= 0.0 || b <= 0.0) {
    throw std::domain_error("incomplete beta arguments out of range");
  }
  if (x == 0.0 || x == 1.0) return x;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  // The continued fraction converges fast for x < (a+1)/(a+b+2).
  if (x > (a + 1.0) / (a + b + 2.0)) return 1.0 - regularized_incomplete_beta(b, a, 1.0 - x);
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  double c = 1.0;
  double dd = 1.0 - (a + b) * x / (a + 1.0);
  if (std::abs(dd) < kTiny) dd = kTiny;
  dd = 1.0 / dd;
  double f = dd;
  for (int m = 1; m <= 10000; ++m) {
    const double m2 = 2.0 * m;
    double num = m * (b - m) * x / ((a + m2 - 1.0) * (a + m2));
    dd = 1.0 + num * dd;
    if (std::abs(dd) < kTiny) dd = kTiny;
    c = 1.0 + num / c;
    if (std::abs(c) < kTiny) c = kTiny;
    dd = 1.0 / dd;
    f *= dd * c;
    num = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1.0));
    dd = 1.0 + num * dd;
    if (std::abs(dd) < kTiny) dd = kTiny;
    c = 1.0 + num / c;
    if (std::abs(c) < kTiny) c = kTiny;
    dd = 1.0 / dd;
    const double delta = dd * c;
    f *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return std::exp(log_front) * f / a;
}

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // two-sided
};

// Welch's unequal-variance t-test with Welch-Satterthwaite degrees of freedom.
inline TTestResult welch_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw std::invalid_argument("welch_t_test needs >= 2 values per sample");
  const auto moments = [](std::span<const double> s) {
    const double n = static_cast<double>(s.size());
    const double mean = std::accumulate(s.begin(), s.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : s) ss += (v - mean) * (v - mean);
    return std::pair{mean, ss / (n - 1.0)};
  };
  const auto [ma, va] = moments(a);
  const auto [mb, vb] = moments(b);
  if (!(va > 0.0) || !(vb > 0.0)) throw std::invalid_argument("welch_t_test: degenerate variance");
  const double qa = va / static_cast<double>(a.size());
  const double qb = vb / static_cast<double>(b.size());
  TTestResult r;
  r.t = (ma - mb) / std::sqrt(qa + qb);
  r.df = (qa + qb) * (qa + qb) /
         (qa * qa / (static_cast<double>(a.size()) - 1.0) +
          qb * qb / (static_cast<double>(b.size()) - 1.0));
  r.p = regularized_incomplete_beta(0.5 * r.df, 0.5, r.df / (r.df + r.t * r.t));
  return r;
}

struct DistanceSummary {
  std::size_t count = 0;
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
  double bin_width = 0.0;
  std::vector<std::size_t> histogram;
};

struct LatentDistanceStats {
  DistanceSummary within;  // pairs inside the first set
  DistanceSummary cross;   // first set against second set
};

inline double euclidean(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("euclidean: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

inline DistanceSummary summarize_distances(std::vector<double> d, double hist_max,
                                           std::size_t bins) {
  DistanceSummary s;
  s.count = d.size();
  s.histogram.assign(bins, 0);
  s.bin_width = hist_max > 0.0 ? hist_max / static_cast<double>(bins) : 0.0;
  if (d.empty()) return s;
  std::sort(d.begin(), d.end());
  s.min = d.front();
  s.max = d.back();
  const std::size_t mid = d.size() / 2;
  s.median = d.size() % 2 ? d[mid] : 0.5 * (d[mid - 1] + d[mid]);
  for (double v : d) {
    std::size_t k = s.bin_width > 0.0 ? static_cast<std::size_t>(v / s.bin_width) : 0;
    s.histogram[std::min(k, bins - 1)]++;
  }
  return s;
}

template <class Code>
LatentDistanceStats latent_distance_stats(std::span<const Code> a, std::span<const Code> b,
                                          std::size_t bins = 10) {
  if (a.empty() || b.empty()) throw std::invalid_argument("latent_distance_stats: empty set");
  std::vector<double> within, cross;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) within.push_back(euclidean(a[i], a[j]));
  for (const auto& x : a)
    for (const auto& y : b) cross.push_back(euclidean(x, y));
  double top = 0.0;
  for (double v : within) top = std::max(top, v);
  for (double v : cross) top = std::max(top, v);
  return {summarize_distances(std::move(within), top, bins),
          summarize_distances(std::move(cross), top, bins)};
}

}  // namespace autove

#endif  // AUTOVE_METRICS_HPP_
