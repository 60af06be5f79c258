#pragma once

#include <vector>

#include "boneage/nn/tensor.hpp"

namespace boneage::nn {

/// All ops take NCHW activations ({N,C,H,W}) or feature matrices ({N,F}).
/// Passing tape == nullptr runs forward-only.

Tensor conv2d(Tape* tape, const Tensor& x, const Tensor& w, const Tensor& b,
              int stride = 1, int pad = 0, int dilation = 1, int groups = 1);
Tensor linear(Tape* tape, const Tensor& x, const Tensor& w, const Tensor& b);

Tensor relu(Tape* tape, const Tensor& x);
Tensor sigmoid(Tape* tape, const Tensor& x);
Tensor add(Tape* tape, const Tensor& a, const Tensor& b);
Tensor add_scaled(Tape* tape, const Tensor& a, const Tensor& b, double alpha, double beta);
Tensor scale(Tape* tape, const Tensor& a, double s);

Tensor concat_channels(Tape* tape, const std::vector<Tensor>& xs);
Tensor concat_features(Tape* tape, const std::vector<Tensor>& xs);
/// Appends one constant (non-learned) feature column, e.g. the sex scalar.
Tensor append_feature(Tape* tape, const Tensor& x, const std::vector<double>& column);

Tensor global_avg_pool(Tape* tape, const Tensor& x);
Tensor avg_pool2(Tape* tape, const Tensor& x);
/// Adaptive average pooling to out_side x out_side (input side must divide).
Tensor avg_pool_to(Tape* tape, const Tensor& x, int out_side);
Tensor upsample_nearest2(Tape* tape, const Tensor& x);
Tensor flatten(Tape* tape, const Tensor& x);

/// Normalized fast-attention fusion: y = sum_i relu(w_i) x_i / (sum relu(w) + eps).
Tensor weighted_fuse(Tape* tape, const std::vector<Tensor>& xs, const Tensor& weights,
                     double eps = 1e-4);

Tensor mse_loss(Tape* tape, const Tensor& pred, const Tensor& target);
Tensor l1_loss(Tape* tape, const Tensor& pred, const Tensor& target);
Tensor bce_with_logits_loss(Tape* tape, const Tensor& logits, const Tensor& target);
/// 1 - soft Dice of sigmoid(logits) against a binary target.
Tensor dice_loss_with_logits(Tape* tape, const Tensor& logits, const Tensor& target,
                             double eps = 1.0);

}  // namespace boneage::nn
