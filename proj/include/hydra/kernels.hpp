#pragma once

#include <cstdint>

// OpenMP compute kernels. Every kernel writes each output element from
// exactly one thread with a fixed inner accumulation order, so results are
// bit-identical for any thread count and bit-identical to the serial
// reference implementations in kernels_ref.hpp (same per-element order).
//
// Layouts are row-major:
//   1-D activations  x[(n*c + ci)*l + li]
//   conv1d weights   w[(co*cin + ci)*k + kk]
//   2-D activations  x[(c*h + hi)*w + wi]
//   matrices         a[row*cols + col]

namespace hydra::kernels {

// --- 1-D (batched over n) ---------------------------------------------

void conv1d_fwd(int n, int cin, int lin, int cout, int k, int stride, int pad,
                const double* x, const double* w, const double* b, double* y);
void conv1d_bwd_x(int n, int cin, int lin, int cout, int k, int stride,
                  int pad, const double* dy, const double* w, double* dx);
void conv1d_bwd_w(int n, int cin, int lin, int cout, int k, int stride,
                  int pad, const double* dy, const double* x, double* dw);
void conv1d_bwd_b(int n, int cout, int lout, const double* dy, double* db);

void maxpool1d_fwd(int n, int c, int lin, int window, const double* x,
                   double* y, int* argmax);
void maxpool1d_bwd(int n, int c, int lin, int window, const double* dy,
                   const int* argmax, double* dx);

void upsample1d_fwd(int n, int c, int lin, int factor, const double* x,
                    double* y);
void upsample1d_bwd(int n, int c, int lin, int factor, const double* dy,
                    double* dx);

void gap1d_fwd(int n, int c, int l, const double* x, double* y);
void gap1d_bwd(int n, int c, int l, const double* dy, double* dx);

void scale_channels_fwd(int n, int c, int l, const double* x, const double* a,
                        double* y);
void scale_channels_bwd_x(int n, int c, int l, const double* dy,
                          const double* a, double* dx);
void scale_channels_bwd_a(int n, int c, int l, const double* dy,
                          const double* x, double* da);

// --- dense layers ------------------------------------------------------

// y[nn,o] = b[o] + sum_i x[nn,i] * w[o,i]
void linear_fwd(int n, int in, int out, const double* x, const double* w,
                const double* b, double* y);
void linear_bwd_x(int n, int in, int out, const double* dy, const double* w,
                  double* dx);
void linear_bwd_w(int n, int in, int out, const double* dy, const double* x,
                  double* dw);
void linear_bwd_b(int n, int out, const double* dy, double* db);

// --- 2-D (single image) ------------------------------------------------

void conv2d_pw_fwd(int cin, int h, int w, int cout, int stride,
                   const double* x, const double* wgt, const double* b,
                   double* y);
void conv2d_pw_bwd_x(int cin, int h, int w, int cout, int stride,
                     const double* dy, const double* wgt, double* dx);
void conv2d_pw_bwd_w(int cin, int h, int w, int cout, int stride,
                     const double* dy, const double* x, double* dw);
void conv2d_pw_bwd_b(int cout, int hout, int wout, const double* dy,
                     double* db);

// 3x3 depthwise, stride 1, zero padding 1; spatial shape preserved.
void conv2d_dw3_fwd(int c, int h, int w, const double* x, const double* wgt,
                    double* y);
void conv2d_dw3_bwd_x(int c, int h, int w, const double* dy,
                      const double* wgt, double* dx);
void conv2d_dw3_bwd_w(int c, int h, int w, const double* dy, const double* x,
                      double* dw);

void upsample2d_fwd(int c, int h, int w, int factor, const double* x,
                    double* y);
void upsample2d_bwd(int c, int h, int w, int factor, const double* dy,
                    double* dx);

// --- matrix products (optionally batched; stride 0 broadcasts) ----------

// y[b,m,n] = sum_k a[b,m,k] * bb[b,k,n]
void matmul_nn(int batch, int m, int k, int n, const double* a,
               std::int64_t stride_a, const double* bb, std::int64_t stride_b,
               double* y);
// y[b,m,n] = sum_k a[b,m,k] * bb[b,n,k]
void matmul_nt(int batch, int m, int k, int n, const double* a,
               std::int64_t stride_a, const double* bb, std::int64_t stride_b,
               double* y);
// y[b,m,n] = sum_k a[b,k,m] * bb[b,k,n]
void matmul_tn(int batch, int m, int k, int n, const double* a,
               std::int64_t stride_a, const double* bb, std::int64_t stride_b,
               double* y);

// --- normalizations ------------------------------------------------------

// Channel layernorm over dim 0 of an [c x r] view (r = positions).
// Saves xhat and inv_sigma for the backward pass.
void layernorm_fwd(int c, int r, double eps, const double* x,
                   const double* gamma, const double* beta, double* y,
                   double* xhat, double* inv_sigma);
void layernorm_bwd_x(int c, int r, const double* dy, const double* gamma,
                     const double* xhat, const double* inv_sigma, double* dx);
void layernorm_bwd_gb(int c, int r, const double* dy, const double* xhat,
                      double* dgamma, double* dbeta);

// Softmax along the middle extent of an [outer x axis x inner] view,
// stabilized by max subtraction.
void softmax_fwd(int outer, int axis, int inner, const double* x, double* y);
void softmax_bwd(int outer, int axis, int inner, const double* dy,
                 const double* y, double* dx);

}  // namespace hydra::kernels
