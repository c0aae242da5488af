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

#ifndef AUTOVE_VAE_HPP_
#define AUTOVE_VAE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autove/bitmap.hpp"
#include "autove/nn.hpp"

namespace autove {

using LatentCode = std::vector<double>;

enum class Architecture : std::uint32_t { kDenseReference = 0, kConvPaper = 1 };

inline std::string_view to_string(Architecture a) {
  return a == Architecture::kConvPaper ? "conv_paper" : "dense_reference";
}

inline Architecture parse_architecture(std::string_view s) {
  if (s == "conv_paper") return Architecture::kConvPaper;
  if (s == "dense_reference") return Architecture::kDenseReference;
  throw std::invalid_argument("unknown architecture: " + std::string(s));
}

// How per-pixel cross-entropy is combined per image. kPixelMean makes the
// reconstruction term 4096 times weaker against KL; at beta = 4 the
// posterior collapses to the prior.
enum class Reduction : std::uint32_t { kPixelSum = 0, kPixelMean = 1 };

inline std::string_view to_string(Reduction r) {
  return r == Reduction::kPixelMean ? "mean" : "sum";
}

inline Reduction parse_reduction(std::string_view s) {
  if (s == "sum") return Reduction::kPixelSum;
  if (s == "mean") return Reduction::kPixelMean;
  throw std::invalid_argument("unknown reconstruction reduction: " + std::string(s));
}

struct VaeConfig {
  int latent_dim = 8;
  Architecture architecture = Architecture::kDenseReference;
  int dense_hidden = 256;      // hidden width of dense_reference
  int filter_multiplier = 1;   // conv_paper filter scaling
  double beta = 4.0;
  double gamma_max = 5.0;      // gamma rises linearly from 0 over training
  double learning_rate = 0.001;
  int batch_size = 128;
  int epochs = 300;
  double validation_fraction = 0.1;
  Reduction reconstruction = Reduction::kPixelSum;
  std::uint64_t seed = 1;

  void validate() const {
    if (latent_dim < 1) throw std::invalid_argument("latent_dim must be >= 1");
    if (!(validation_fraction > 0.0 && validation_fraction < 1.0)) {
      throw std::invalid_argument("validation_fraction must be in (0,1)");
    }
    if (dense_hidden < 1 || filter_multiplier < 1 || batch_size < 1 || epochs < 1) {
      throw std::invalid_argument("VAE sizes and counts must be >= 1");
    }
  }
};

struct LossTerms {
  double total = 0.0;
  double reconstruction = 0.0;
  double kl = 0.0;
};

inline constexpr double kOutputClamp = 1e-7;

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// z = mu + exp(logvar / 2) * noise, elementwise.
inline LatentCode reparameterize(std::span<const double> mu,
                                 std::span<const double> logvar,
                                 std::span<const double> noise) {
  if (mu.size() != logvar.size() || mu.size() != noise.size()) {
    throw std::invalid_argument("reparameterize: dimension mismatch");
  }
  LatentCode z(mu.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    z[i] = mu[i] + std::exp(0.5 * logvar[i]) * noise[i];
  return z;
}

inline double reconstruction_scale(Reduction r, Eigen::Index pixels) {
  return r == Reduction::kPixelMean ? 1.0 / static_cast<double>(pixels) : 1.0;
}

// Batch ELBO with annealing: binary cross-entropy per image (summed or
// averaged over pixels) plus beta * (KL - gamma), KL summed over latent
// dimensions. Both terms are averaged over the batch. Columns are batch
// items; predictions are clamped into [1e-7, 1 - 1e-7].
inline LossTerms elbo_loss(const nn::Matrix& x, const nn::Matrix& x_hat,
                           const nn::Matrix& mu, const nn::Matrix& logvar,
                           double beta, double gamma,
                           Reduction reduction = Reduction::kPixelSum) {
  const double batch = static_cast<double>(x.cols());
  const auto p = x_hat.array().max(kOutputClamp).min(1.0 - kOutputClamp);
  const double bce =
      -(x.array() * p.log() + (1.0 - x.array()) * (1.0 - p).log()).sum();
  LossTerms t;
  t.reconstruction = bce * reconstruction_scale(reduction, x.rows()) / batch;
  t.kl = 0.5 *
         (mu.array().square() + logvar.array().exp() - logvar.array() - 1.0).sum() /
         batch;
  t.total = t.reconstruction + beta * (t.kl - gamma);
  return t;
}

struct Encoding {
  nn::Matrix mu;      // latent_dim x batch
  nn::Matrix logvar;  // latent_dim x batch
};

class VaeModel {
 public:
  VaeModel() = default;

  // Builds the network for `config` with Glorot-initialized weights drawn
  // from `config.seed`.
  explicit VaeModel(const VaeConfig& config) : config_(config) {
    config_.validate();
    build();
    std::mt19937_64 rng(config_.seed);
    params_ = layout_.glorot_init(rng);
  }

  const VaeConfig& config() const { return config_; }
  int latent_dim() const { return config_.latent_dim; }
  const nn::ParameterLayout& layout() const { return layout_; }
  const nn::Vector& parameters() const { return params_; }
  nn::Vector& parameters() { return params_; }
  int trained_epochs() const { return trained_epochs_; }
  void set_trained_epochs(int e) { trained_epochs_ = e; }

  // Columns of `x` are flattened bitmaps.
  Encoding encode(const nn::Matrix& x) const {
    const nn::Matrix h = encoder_.forward(layout_, params_, x);
    const int d = config_.latent_dim;
    return {h.topRows(d), h.bottomRows(d)};
  }

  std::pair<LatentCode, LatentCode> encode(const Bitmap& b) const {
    const Encoding e = encode(to_matrix(std::span<const Bitmap>(&b, 1)));
    return {LatentCode(e.mu.data(), e.mu.data() + e.mu.size()),
            LatentCode(e.logvar.data(), e.logvar.data() + e.logvar.size())};
  }

  // Sigmoid outputs, 4096 x batch.
  nn::Matrix decode(const nn::Matrix& z) const {
    return decoder_.forward(layout_, params_, z).unaryExpr(&sigmoid);
  }

  std::vector<double> decode(std::span<const double> z) const {
    if (z.size() != static_cast<std::size_t>(config_.latent_dim)) {
      throw std::invalid_argument("decode: latent code has wrong dimension");
    }
    const nn::Matrix zm = Eigen::Map<const nn::Matrix>(z.data(), latent_dim(), 1);
    const nn::Matrix out = decode(zm);
    return {out.data(), out.data() + out.size()};
  }

  // Loss for batch `x` with reparameterization noise `noise` (one column per
  // item). Adds d(total)/d(params) into `grad` when it is non-null.
  LossTerms loss_and_gradient(const nn::Matrix& x, const nn::Matrix& noise,
                              double beta, double gamma,
                              nn::Vector* grad) const {
    return loss_and_gradient(params_, x, noise, beta, gamma, grad);
  }

  LossTerms loss_and_gradient(const nn::Vector& params, const nn::Matrix& x,
                              const nn::Matrix& noise, double beta, double gamma,
                              nn::Vector* grad) const {
    const int d = config_.latent_dim;
    const double batch = static_cast<double>(x.cols());
    std::vector<nn::Matrix> enc_trace, dec_trace;
    const nn::Matrix h = encoder_.forward(layout_, params, x, grad ? &enc_trace : nullptr);
    const nn::Matrix mu = h.topRows(d);
    const nn::Matrix logvar = h.bottomRows(d);
    const nn::Matrix stddev = (0.5 * logvar.array()).exp().matrix();
    const nn::Matrix z = mu + stddev.cwiseProduct(noise);
    const nn::Matrix logits = decoder_.forward(layout_, params, z, grad ? &dec_trace : nullptr);
    const nn::Matrix p = logits.unaryExpr(&sigmoid);
    const LossTerms terms =
        elbo_loss(x, p, mu, logvar, beta, gamma, config_.reconstruction);
    if (!grad) return terms;

    // d(BCE)/d(logit) is (p - x) times the reduction scale over the batch
    // while p is inside the clamp window, zero where the clamp is active.
    const double scale = reconstruction_scale(config_.reconstruction, x.rows()) / batch;
    const nn::Matrix dlogits =
        ((p.array() > kOutputClamp) && (p.array() < 1.0 - kOutputClamp))
            .select((p - x) * scale, 0.0);
    const nn::Matrix dz = decoder_.backward(layout_, params, *grad, dec_trace, dlogits, true);
    nn::Matrix dh(2 * d, x.cols());
    dh.topRows(d) = dz + (beta / batch) * mu;
    dh.bottomRows(d) =
        (0.5 * dz.array() * noise.array() * stddev.array() +
         (0.5 * beta / batch) * (logvar.array().exp() - 1.0)).matrix();
    encoder_.backward(layout_, params, *grad, enc_trace, dh, false);
    return terms;
  }

  static nn::Matrix to_matrix(std::span<const Bitmap> bitmaps) {
    nn::Matrix x(kPixelCount, static_cast<Eigen::Index>(bitmaps.size()));
    for (std::size_t i = 0; i < bitmaps.size(); ++i) {
      auto px = bitmaps[i].pixels();
      for (int j = 0; j < kPixelCount; ++j)
        x(j, static_cast<Eigen::Index>(i)) = px[static_cast<std::size_t>(j)];
    }
    return x;
  }

 private:
  void build() {
    const int d = config_.latent_dim;
    if (config_.architecture == Architecture::kDenseReference) {
      const int hidden = config_.dense_hidden;
      encoder_.push(nn::Dense(layout_, "encoder.fc1", kPixelCount, hidden));
      encoder_.push(nn::Relu{hidden});
      encoder_.push(nn::Dense(layout_, "encoder.fc2", hidden, 2 * d));
      decoder_.push(nn::Dense(layout_, "decoder.fc1", d, hidden));
      decoder_.push(nn::Relu{hidden});
      decoder_.push(nn::Dense(layout_, "decoder.fc2", hidden, kPixelCount));
      return;
    }
    // conv_paper: 64 -> 32 -> 16 -> 8 -> 4 with 7x7 stride-2 kernels, then
    // a linear head; the decoder mirrors it from a 14x14 kernel on 1x1.
    const int m = config_.filter_multiplier;
    const int enc_filters[4] = {8 * m, 16 * m, 32 * m, 64 * m};
    int channels = 1;
    int size = kGridSize;
    for (int i = 0; i < 4; ++i) {
      nn::ConvGeometry g{channels, size, size, 7, 2, 3};
      nn::Conv2d conv(layout_, "encoder.conv" + std::to_string(i + 1), g, enc_filters[i]);
      encoder_.push(conv);
      channels = enc_filters[i];
      size = g.out_height();
      encoder_.push(nn::Relu{channels * size * size});
    }
    encoder_.push(nn::Dense(layout_, "encoder.fc", channels * size * size, 2 * d));

    const int dec_filters[5] = {64 * m, 32 * m, 16 * m, 8 * m, 1};
    decoder_.push(nn::ConvTranspose2d(layout_, "decoder.deconv1", d, 1,
                                      dec_filters[0], 14, 2, 5, 0));
    int dsize = 4;
    for (int i = 1; i < 5; ++i) {
      decoder_.push(nn::Relu{dec_filters[i - 1] * dsize * dsize});
      decoder_.push(nn::ConvTranspose2d(layout_, "decoder.deconv" + std::to_string(i + 1),
                                        dec_filters[i - 1], dsize, dec_filters[i],
                                        7, 2, 3, 1));
      dsize *= 2;
    }
    if (decoder_.output_size() != kPixelCount) {
      throw std::logic_error("conv_paper decoder must emit 64x64");
    }
  }

  VaeConfig config_;
  nn::ParameterLayout layout_;
  nn::Sequential encoder_;
  nn::Sequential decoder_;
  nn::Vector params_;
  int trained_epochs_ = 0;
};

// Binarized (threshold 0.5) decode of the encoder mean, compared by Hamming
// distance and normalized by the pixel count.
inline double reconstruction_error(const VaeModel& m, const Bitmap& b) {
  const auto [mu, logvar] = m.encode(b);
  return static_cast<double>(hamming_distance(b, binarize(m.decode(mu)))) /
         kPixelCount;
}

inline std::vector<double> reconstruction_errors(const VaeModel& m,
                                                 std::span<const Bitmap> bitmaps) {
  std::vector<double> out;
  out.reserve(bitmaps.size());
  constexpr std::size_t kChunk = 128;
  for (std::size_t start = 0; start < bitmaps.size(); start += kChunk) {
    const auto chunk = bitmaps.subspan(start, std::min(kChunk, bitmaps.size() - start));
    const nn::Matrix recon = m.decode(m.encode(VaeModel::to_matrix(chunk)).mu);
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      const Bitmap rb = binarize(std::span<const double>(
          recon.col(static_cast<Eigen::Index>(i)).data(), kPixelCount));
      out.push_back(static_cast<double>(hamming_distance(chunk[i], rb)) / kPixelCount);
    }
  }
  return out;
}

// Encoder means, one code per bitmap.
inline std::vector<LatentCode> encode_means(const VaeModel& m,
                                            std::span<const Bitmap> bitmaps) {
  std::vector<LatentCode> out;
  out.reserve(bitmaps.size());
  constexpr std::size_t kChunk = 128;
  for (std::size_t start = 0; start < bitmaps.size(); start += kChunk) {
    const auto chunk = bitmaps.subspan(start, std::min(kChunk, bitmaps.size() - start));
    const nn::Matrix mu = m.encode(VaeModel::to_matrix(chunk)).mu;
    for (Eigen::Index i = 0; i < mu.cols(); ++i)
      out.emplace_back(mu.col(i).data(), mu.col(i).data() + mu.rows());
  }
  return out;
}

// Adam with bias correction.
class Adam {
 public:
  Adam(Eigen::Index size, double learning_rate, double beta1 = 0.9,
       double beta2 = 0.999, double epsilon = 1e-8)
      : lr_(learning_rate), b1_(beta1), b2_(beta2), eps_(epsilon),
        m_(nn::Vector::Zero(size)), v_(nn::Vector::Zero(size)) {}

  void step(nn::Vector& params, const nn::Vector& grad) {
    ++t_;
    m_ = b1_ * m_ + (1.0 - b1_) * grad;
    v_ = b2_ * v_ + (1.0 - b2_) * grad.cwiseProduct(grad);
    const double c1 = 1.0 - std::pow(b1_, t_);
    const double c2 = 1.0 - std::pow(b2_, t_);
    params.array() -= lr_ * (m_.array() / c1) / ((v_.array() / c2).sqrt() + eps_);
  }

  long steps() const { return t_; }
  const nn::Vector& first_moment() const { return m_; }
  const nn::Vector& second_moment() const { return v_; }

 private:
  double lr_, b1_, b2_, eps_;
  nn::Vector m_, v_;
  long t_ = 0;
};

struct EpochRecord {
  int epoch = 0;
  double gamma = 0.0;
  LossTerms train;
  LossTerms validation;
};

struct TrainResult {
  VaeModel model;  // parameters of the epoch with the lowest validation total
  std::vector<EpochRecord> log;
  int best_epoch = 0;
  std::vector<std::size_t> train_indices;
  std::vector<std::size_t> validation_indices;
};

inline double annealed_gamma(const VaeConfig& c, int epoch) {
  return c.epochs <= 1 ? 0.0 : c.gamma_max * epoch / (c.epochs - 1);
}

// Adam training with a held-back validation split. Validation losses use the
// encoder mean (no sampling noise) so model selection is deterministic.
inline TrainResult train(const VaeConfig& config, std::span<const Bitmap> data) {
  config.validate();
  if (data.size() < 10) throw std::invalid_argument("train: dataset needs at least 10 items");

  TrainResult result{VaeModel(config), {}, 0, {}, {}};
  VaeModel& model = result.model;
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);

  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  const auto n_val = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::llround(config.validation_fraction * data.size())),
      1, data.size() - 1);
  result.validation_indices.assign(order.begin(), order.begin() + n_val);
  result.train_indices.assign(order.begin() + n_val, order.end());

  const auto gather = [&](std::span<const std::size_t> idx) {
    nn::Matrix x(kPixelCount, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      auto px = data[idx[i]].pixels();
      for (int j = 0; j < kPixelCount; ++j)
        x(j, static_cast<Eigen::Index>(i)) = px[static_cast<std::size_t>(j)];
    }
    return x;
  };
  const nn::Matrix x_val = gather(result.validation_indices);
  const nn::Matrix zero_noise = nn::Matrix::Zero(config.latent_dim, x_val.cols());

  Adam adam(model.layout().total(), config.learning_rate);
  std::normal_distribution<double> normal(0.0, 1.0);
  const std::size_t batch = std::min<std::size_t>(config.batch_size, result.train_indices.size());
  std::vector<std::size_t> train_order = result.train_indices;
  nn::Vector grad(model.layout().total());
  nn::Vector best_params = model.parameters();
  double best_val = std::numeric_limits<double>::infinity();

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    const double gamma = annealed_gamma(config, epoch);
    std::shuffle(train_order.begin(), train_order.end(), rng);
    EpochRecord rec;
    rec.epoch = epoch;
    rec.gamma = gamma;
    for (std::size_t start = 0; start < train_order.size(); start += batch) {
      const std::size_t len = std::min(batch, train_order.size() - start);
      const nn::Matrix x = gather(std::span(train_order).subspan(start, len));
      nn::Matrix noise(config.latent_dim, static_cast<Eigen::Index>(len));
      for (Eigen::Index i = 0; i < noise.size(); ++i) noise.data()[i] = normal(rng);
      grad.setZero();
      const LossTerms t = model.loss_and_gradient(x, noise, config.beta, gamma, &grad);
      adam.step(model.parameters(), grad);
      const double w = static_cast<double>(len) / train_order.size();
      rec.train.total += w * t.total;
      rec.train.reconstruction += w * t.reconstruction;
      rec.train.kl += w * t.kl;
    }
    rec.validation = model.loss_and_gradient(x_val, zero_noise, config.beta, gamma, nullptr);
    if (rec.validation.total < best_val) {
      best_val = rec.validation.total;
      best_params = model.parameters();
      result.best_epoch = epoch;
    }
    result.log.push_back(rec);
  }
  model.parameters() = best_params;
  model.set_trained_epochs(config.epochs);
  return result;
}

}  // namespace autove

#endif  // AUTOVE_VAE_HPP_
