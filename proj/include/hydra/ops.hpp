#pragma once

#include "hydra/tensor.hpp"

// Differentiable operations. Structured ops accept either the documented
// unbatched shape or the same shape with one leading batch dimension;
// elementwise ops require exact shape agreement (no general broadcasting).

namespace hydra::ops {

// elementwise
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double factor);
Tensor mul_scalar(const Tensor& x, const Tensor& s);  // s has shape {1}
Tensor relu(const Tensor& x);
Tensor gelu(const Tensor& x);
Tensor sigmoid(const Tensor& x);
Tensor exp(const Tensor& x);
Tensor neg(const Tensor& x);

// reductions / reshapes
Tensor sum(const Tensor& x);
Tensor mean(const Tensor& x);
Tensor reshape(const Tensor& x, Shape shape);
Tensor transpose2(const Tensor& x);  // [a x b] -> [b x a]

// 1-D network ops; input [cin x l] or [n x cin x l]
Tensor conv1d(const Tensor& x, const Tensor& w, const Tensor& b,
              int stride = 1, int padding = 0);
Tensor maxpool1d(const Tensor& x, int window);
Tensor upsample1d_nearest(const Tensor& x, int factor);
Tensor global_avg_pool1d(const Tensor& x);           // -> [n x c]
Tensor scale_channels(const Tensor& x, const Tensor& a);  // a: [n x c]

// dense layer; x [in] or [n x in], w [out x in], b [out]
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b);

// 2-D network ops; input [c x h x w]
Tensor conv2d_pointwise(const Tensor& x, const Tensor& w, const Tensor& b,
                        int stride = 1);
Tensor conv2d_depthwise(const Tensor& x, const Tensor& w);  // 3x3, pad 1
Tensor upsample2d_nearest(const Tensor& x, int factor);

// normalizations
Tensor layernorm(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                 double eps = 1e-6);  // channel dim 0, per position
Tensor softmax(const Tensor& x, int axis);

// matrix products; [m x k] or [b x m x k]; an unbatched side broadcasts
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor matmul_nt(const Tensor& a, const Tensor& b);  // a * b^T

// losses (mean over elements)
Tensor huber_loss(const Tensor& pred, const Tensor& target, double delta);
Tensor mae_loss(const Tensor& pred, const Tensor& target);
Tensor mse_loss(const Tensor& pred, const Tensor& target);

}  // namespace hydra::ops
