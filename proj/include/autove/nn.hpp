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

#ifndef AUTOVE_NN_HPP_
#define AUTOVE_NN_HPP_

// Minimal batched layers with hand-written backward passes. Activations are
// stored one column per batch item; convolutional tensors are flattened in
// (row, col, channel) order with the channel index fastest.

#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace autove::nn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using MatrixMap = Eigen::Map<Matrix>;
using ConstMatrixMap = Eigen::Map<const Matrix>;

struct TensorSlot {
  std::string name;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  Eigen::Index offset = 0;
  int fan_in = 0;
  int fan_out = 0;
  bool is_bias = false;

  Eigen::Index size() const { return rows * cols; }
};

// All trainable tensors packed in declaration order into one flat vector, so
// optimizers and serialization see a single array.
class ParameterLayout {
 public:
  int add(std::string name, Eigen::Index rows, Eigen::Index cols, int fan_in,
          int fan_out, bool is_bias) {
    slots_.push_back({std::move(name), rows, cols, total_, fan_in, fan_out, is_bias});
    total_ += rows * cols;
    return static_cast<int>(slots_.size()) - 1;
  }

  const std::vector<TensorSlot>& slots() const { return slots_; }
  Eigen::Index total() const { return total_; }

  MatrixMap view(Vector& flat, int slot) const {
    const auto& s = slots_[static_cast<std::size_t>(slot)];
    return {flat.data() + s.offset, s.rows, s.cols};
  }
  ConstMatrixMap view(const Vector& flat, int slot) const {
    const auto& s = slots_[static_cast<std::size_t>(slot)];
    return {flat.data() + s.offset, s.rows, s.cols};
  }

  // Glorot-uniform weights, zero biases.
  Vector glorot_init(std::mt19937_64& rng) const {
    Vector flat = Vector::Zero(total_);
    for (const auto& s : slots_) {
      if (s.is_bias) continue;
      const double limit = std::sqrt(6.0 / (s.fan_in + s.fan_out));
      std::uniform_real_distribution<double> u(-limit, limit);
      for (Eigen::Index i = 0; i < s.size(); ++i) flat[s.offset + i] = u(rng);
    }
    return flat;
  }

 private:
  std::vector<TensorSlot> slots_;
  Eigen::Index total_ = 0;
};

// Geometry of a strided convolution from a (height x width x channels)
// image to its feature map. Reused by the transposed layer with the two
// sides swapped.
struct ConvGeometry {
  int channels = 1;
  int height = 0;
  int width = 0;
  int kernel = 1;
  int stride = 1;
  int padding = 0;

  int out_height() const { return (height + 2 * padding - kernel) / stride + 1; }
  int out_width() const { return (width + 2 * padding - kernel) / stride + 1; }
  int patch_size() const { return channels * kernel * kernel; }
  int image_size() const { return channels * height * width; }
};

// Unfolds one image (column vector) into patches: one column per output
// position, rows ordered (channel fastest, then kernel column, kernel row).
inline Matrix im2col(const double* image, const ConvGeometry& g) {
  const int oh = g.out_height();
  const int ow = g.out_width();
  Matrix col = Matrix::Zero(g.patch_size(), oh * ow);
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double* dst = col.col(y * ow + x).data();
      for (int ky = 0; ky < g.kernel; ++ky) {
        const int iy = y * g.stride - g.padding + ky;
        if (iy < 0 || iy >= g.height) continue;
        for (int kx = 0; kx < g.kernel; ++kx) {
          const int ix = x * g.stride - g.padding + kx;
          if (ix < 0 || ix >= g.width) continue;
          const double* src = image + (iy * g.width + ix) * g.channels;
          double* d = dst + (ky * g.kernel + kx) * g.channels;
          for (int c = 0; c < g.channels; ++c) d[c] = src[c];
        }
      }
    }
  }
  return col;
}

// Adjoint of im2col: scatters patch columns back, accumulating overlaps.
inline void col2im(const Matrix& col, const ConvGeometry& g, double* image) {
  const int oh = g.out_height();
  const int ow = g.out_width();
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      const double* src = col.col(y * ow + x).data();
      for (int ky = 0; ky < g.kernel; ++ky) {
        const int iy = y * g.stride - g.padding + ky;
        if (iy < 0 || iy >= g.height) continue;
        for (int kx = 0; kx < g.kernel; ++kx) {
          const int ix = x * g.stride - g.padding + kx;
          if (ix < 0 || ix >= g.width) continue;
          double* dst = image + (iy * g.width + ix) * g.channels;
          const double* s = src + (ky * g.kernel + kx) * g.channels;
          for (int c = 0; c < g.channels; ++c) dst[c] += s[c];
        }
      }
    }
  }
}

struct Dense {
  int in = 0;
  int out = 0;
  int weight = -1;
  int bias = -1;

  Dense(ParameterLayout& layout, const std::string& name, int in_features,
        int out_features)
      : in(in_features), out(out_features) {
    weight = layout.add(name + ".weight", out, in, in, out, false);
    bias = layout.add(name + ".bias", out, 1, in, out, true);
  }

  int input_size() const { return in; }
  int output_size() const { return out; }

  Matrix forward(const ParameterLayout& l, const Vector& p, const Matrix& x) const {
    Matrix y = l.view(p, weight) * x;
    y.colwise() += l.view(p, bias).col(0);
    return y;
  }

  Matrix backward(const ParameterLayout& l, const Vector& p, Vector& grad,
                  const Matrix& x, const Matrix& dy, bool need_input_grad) const {
    l.view(grad, weight).noalias() += dy * x.transpose();
    l.view(grad, bias).col(0) += dy.rowwise().sum();
    if (!need_input_grad) return {};
    return l.view(p, weight).transpose() * dy;
  }
};

struct Conv2d {
  ConvGeometry geom;
  int out_channels = 0;
  int weight = -1;
  int bias = -1;

  Conv2d(ParameterLayout& layout, const std::string& name, ConvGeometry g,
         int filters)
      : geom(g), out_channels(filters) {
    const int k2 = g.kernel * g.kernel;
    weight = layout.add(name + ".weight", filters, g.patch_size(),
                        g.channels * k2, filters * k2, false);
    bias = layout.add(name + ".bias", filters, 1, 0, 0, true);
  }

  int input_size() const { return geom.image_size(); }
  int output_size() const { return out_channels * geom.out_height() * geom.out_width(); }

  Matrix forward(const ParameterLayout& l, const Vector& p, const Matrix& x) const {
    const auto w = l.view(p, weight);
    const auto b = l.view(p, bias).col(0);
    const int positions = geom.out_height() * geom.out_width();
    Matrix y(output_size(), x.cols());
    for (Eigen::Index i = 0; i < x.cols(); ++i) {
      const Matrix col = im2col(x.col(i).data(), geom);
      MatrixMap yi(y.col(i).data(), out_channels, positions);
      yi.noalias() = w * col;
      yi.colwise() += b;
    }
    return y;
  }

  Matrix backward(const ParameterLayout& l, const Vector& p, Vector& grad,
                  const Matrix& x, const Matrix& dy, bool need_input_grad) const {
    const auto w = l.view(p, weight);
    auto gw = l.view(grad, weight);
    auto gb = l.view(grad, bias);
    const int positions = geom.out_height() * geom.out_width();
    Matrix dx;
    if (need_input_grad) dx = Matrix::Zero(input_size(), x.cols());
    for (Eigen::Index i = 0; i < x.cols(); ++i) {
      const Matrix col = im2col(x.col(i).data(), geom);
      ConstMatrixMap dyi(dy.col(i).data(), out_channels, positions);
      gw.noalias() += dyi * col.transpose();
      gb.col(0) += dyi.rowwise().sum();
      if (need_input_grad) {
        const Matrix dcol = w.transpose() * dyi;
        col2im(dcol, geom, dx.col(i).data());
      }
    }
    return dx;
  }
};

// Transposed convolution: the adjoint of a Conv2d whose input is this layer's
// output. `big` describes the output image seen as the convolution's input.
struct ConvTranspose2d {
  ConvGeometry big;
  int in_channels = 0;
  int weight = -1;
  int bias = -1;

  ConvTranspose2d(ParameterLayout& layout, const std::string& name,
                  int in_ch, int in_size, int filters, int kernel, int stride,
                  int padding, int output_padding)
      : in_channels(in_ch) {
    const int out_size = (in_size - 1) * stride - 2 * padding + kernel + output_padding;
    big = {filters, out_size, out_size, kernel, stride, padding};
    if (big.out_height() != in_size) {
      throw std::invalid_argument("transposed conv geometry does not round-trip");
    }
    const int k2 = kernel * kernel;
    weight = layout.add(name + ".weight", big.patch_size(), in_ch,
                        in_ch * k2, filters * k2, false);
    bias = layout.add(name + ".bias", filters, 1, 0, 0, true);
  }

  int positions_in() const { return big.out_height() * big.out_width(); }
  int input_size() const { return in_channels * positions_in(); }
  int output_size() const { return big.image_size(); }

  Matrix forward(const ParameterLayout& l, const Vector& p, const Matrix& x) const {
    const auto w = l.view(p, weight);
    const auto b = l.view(p, bias).col(0);
    Matrix y = Matrix::Zero(output_size(), x.cols());
    for (Eigen::Index i = 0; i < x.cols(); ++i) {
      ConstMatrixMap xi(x.col(i).data(), in_channels, positions_in());
      const Matrix col = w * xi;
      col2im(col, big, y.col(i).data());
      MatrixMap yi(y.col(i).data(), big.channels, big.height * big.width);
      yi.colwise() += b;
    }
    return y;
  }

  Matrix backward(const ParameterLayout& l, const Vector& p, Vector& grad,
                  const Matrix& x, const Matrix& dy, bool need_input_grad) const {
    const auto w = l.view(p, weight);
    auto gw = l.view(grad, weight);
    auto gb = l.view(grad, bias);
    Matrix dx;
    if (need_input_grad) dx = Matrix(input_size(), x.cols());
    for (Eigen::Index i = 0; i < x.cols(); ++i) {
      ConstMatrixMap xi(x.col(i).data(), in_channels, positions_in());
      ConstMatrixMap dyi(dy.col(i).data(), big.channels, big.height * big.width);
      gb.col(0) += dyi.rowwise().sum();
      const Matrix dcol = im2col(dy.col(i).data(), big);
      gw.noalias() += dcol * xi.transpose();
      if (need_input_grad) {
        MatrixMap dxi(dx.col(i).data(), in_channels, positions_in());
        dxi.noalias() = w.transpose() * dcol;
      }
    }
    return dx;
  }
};

struct Relu {
  int size = 0;

  int input_size() const { return size; }
  int output_size() const { return size; }

  Matrix forward(const ParameterLayout&, const Vector&, const Matrix& x) const {
    return x.cwiseMax(0.0);
  }
  Matrix backward(const ParameterLayout&, const Vector&, Vector&, const Matrix& x,
                  const Matrix& dy, bool) const {
    return (x.array() > 0.0).select(dy, 0.0);
  }
};

using Layer = std::variant<Dense, Conv2d, ConvTranspose2d, Relu>;

inline int output_size(const Layer& layer) {
  return std::visit([](const auto& l) { return l.output_size(); }, layer);
}

class Sequential {
 public:
  void push(Layer layer) {
    if (!layers_.empty() && nn::output_size(layers_.back()) !=
                                std::visit([](const auto& l) { return l.input_size(); }, layer)) {
      throw std::invalid_argument("layer sizes do not chain");
    }
    layers_.push_back(std::move(layer));
  }

  int input_size() const {
    return std::visit([](const auto& l) { return l.input_size(); }, layers_.front());
  }
  int output_size() const { return nn::output_size(layers_.back()); }

  // Inputs of every layer are kept in `trace` for the backward pass.
  Matrix forward(const ParameterLayout& l, const Vector& p, const Matrix& x,
                 std::vector<Matrix>* trace = nullptr) const {
    if (trace) trace->clear();
    Matrix h = x;
    for (const auto& layer : layers_) {
      Matrix next = std::visit([&](const auto& ly) { return ly.forward(l, p, h); }, layer);
      if (trace) trace->push_back(std::move(h));
      h = std::move(next);
    }
    return h;
  }

  Matrix backward(const ParameterLayout& l, const Vector& p, Vector& grad,
                  const std::vector<Matrix>& trace, Matrix dy,
                  bool need_input_grad) const {
    for (std::size_t i = layers_.size(); i-- > 0;) {
      const bool need = need_input_grad || i > 0;
      dy = std::visit(
          [&](const auto& ly) { return ly.backward(l, p, grad, trace[i], dy, need); },
          layers_[i]);
    }
    return dy;
  }

 private:
  std::vector<Layer> layers_;
};

}  // namespace autove::nn

#endif  // AUTOVE_NN_HPP_
