#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace boneage::nn {

/// Dense double-precision tensor with a lazily allocated gradient buffer.
/// Tensors are cheap shared handles; ops on a Tape record backward closures
/// that accumulate into `grad`.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape, bool requires_grad = false);

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
  static Tensor scalar(double v);

  bool defined() const { return static_cast<bool>(d_); }
  const std::vector<int>& shape() const { return d_->shape; }
  int dim(int i) const { return d_->shape[static_cast<size_t>(i)]; }
  int ndim() const { return static_cast<int>(d_->shape.size()); }
  int64_t size() const { return static_cast<int64_t>(d_->value.size()); }

  double* data() { return d_->value.data(); }
  const double* data() const { return d_->value.data(); }
  std::vector<double>& value() { return d_->value; }
  const std::vector<double>& value() const { return d_->value; }

  bool requires_grad() const { return d_->requires_grad; }
  void set_requires_grad(bool rg) { d_->requires_grad = rg; }

  /// Allocates (zero-filled) on first touch.
  std::vector<double>& grad();
  const std::vector<double>& grad() const;
  bool has_grad() const { return !d_->grad.empty(); }
  void zero_grad();

  double item() const { return d_->value.at(0); }

  /// Identity of the underlying storage; used by the optimizer state map.
  const void* key() const { return d_.get(); }

  bool same_shape(const Tensor& o) const { return d_->shape == o.d_->shape; }

 private:
  struct Data {
    std::vector<int> shape;
    std::vector<double> value;
    std::vector<double> grad;
    bool requires_grad = false;
  };
  std::shared_ptr<Data> d_;
};

int64_t numel(const std::vector<int>& shape);

/// Records backward closures during forward evaluation. Passing a null Tape
/// to ops runs forward-only inference with no graph bookkeeping.
class Tape {
 public:
  void record(std::function<void()> backward) { nodes_.push_back(std::move(backward)); }

  /// Seeds d(loss)/d(loss) = 1 and runs the recorded closures in reverse.
  void backward(Tensor& loss);

  size_t size() const { return nodes_.size(); }
  void clear() { nodes_.clear(); }

 private:
  std::vector<std::function<void()>> nodes_;
};

}  // namespace boneage::nn
