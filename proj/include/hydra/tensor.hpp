#pragma once

#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "hydra/common.hpp"

namespace hydra {

namespace detail {
struct TensorImpl;
}

// Dense 64-bit tensor with reverse-mode gradient tracking. Copies are
// shallow (shared buffer); values are immutable after construction except
// through mut_data(), which is reserved for leaf parameters between
// graph builds. The operation record behind each non-leaf tensor forms an
// acyclic graph that backward() walks exactly once per node.
class Tensor {
public:
    Tensor() = default;

    static Tensor zeros(Shape shape, bool requires_grad = false);
    static Tensor full(Shape shape, double value, bool requires_grad = false);
    static Tensor from_data(Shape shape, std::vector<double> values,
                            bool requires_grad = false);
    static Tensor scalar(double value, bool requires_grad = false);
    static Tensor uniform(Shape shape, double lo, double hi,
                          std::mt19937_64& rng, bool requires_grad = false);

    bool defined() const { return impl_ != nullptr; }
    const Shape& shape() const;
    int ndim() const;
    int dim(int i) const;
    std::int64_t size() const;

    const std::vector<double>& data() const;
    std::vector<double>& mut_data();
    double value() const;  // scalar only
    double at(const std::vector<int>& index) const;

    bool requires_grad() const;
    void set_requires_grad(bool v);

    // Gradient buffer; zero-filled on first access for requires_grad leaves.
    const std::vector<double>& grad() const;
    bool has_grad() const;
    void zero_grad();

    // Reverse-mode pass from a scalar. Throws ContractError on non-scalar
    // output and NumericError if any produced gradient is non-finite.
    void backward() const;

    std::shared_ptr<detail::TensorImpl> impl() const { return impl_; }
    explicit Tensor(std::shared_ptr<detail::TensorImpl> impl)
        : impl_(std::move(impl)) {}

private:
    std::shared_ptr<detail::TensorImpl> impl_;
};

// Thread-local switch: when disabled, ops run forward-only and record no
// graph (inference paths, target precomputation).
struct GradMode {
    static bool enabled();
    static void set_enabled(bool v);
};

struct NoGradGuard {
    NoGradGuard() : prev_(GradMode::enabled()) { GradMode::set_enabled(false); }
    ~NoGradGuard() { GradMode::set_enabled(prev_); }
    NoGradGuard(const NoGradGuard&) = delete;
    NoGradGuard& operator=(const NoGradGuard&) = delete;

private:
    bool prev_;
};

namespace detail {

struct GradFn {
    std::vector<std::shared_ptr<TensorImpl>> inputs;
    // Reads out.grad, accumulates into inputs' grads.
    std::function<void(const TensorImpl& out)> apply;
    const char* op_name = "";
};

struct TensorImpl {
    Shape shape;
    std::vector<double> data;
    bool requires_grad = false;
    std::vector<double> grad;
    std::shared_ptr<GradFn> grad_fn;

    void ensure_grad();
};

// Central op constructor: validates finiteness of the produced values
// (non-finite forward output is an error state, never silent) and wires the
// backward record when gradients are enabled and some input needs them.
Tensor make_op_output(Shape shape, std::vector<double> data,
                      const std::vector<Tensor>& inputs,
                      std::function<void(const TensorImpl&)> backward,
                      const char* op_name);

void accumulate(TensorImpl& target, const std::vector<double>& contribution);

}  // namespace detail

}  // namespace hydra
