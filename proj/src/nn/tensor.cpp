#include "boneage/nn/tensor.hpp"

#include <stdexcept>

namespace boneage::nn {

int64_t numel(const std::vector<int>& shape) {
  int64_t n = 1;
  for (int d : shape) n *= d;
  return n;
}

Tensor::Tensor(std::vector<int> shape, bool requires_grad) : d_(std::make_shared<Data>()) {
  d_->shape = std::move(shape);
  d_->value.assign(static_cast<size_t>(numel(d_->shape)), 0.0);
  d_->requires_grad = requires_grad;
}

Tensor Tensor::scalar(double v) {
  Tensor t(std::vector<int>{1});
  t.value()[0] = v;
  return t;
}

std::vector<double>& Tensor::grad() {
  if (d_->grad.empty()) d_->grad.assign(d_->value.size(), 0.0);
  return d_->grad;
}

const std::vector<double>& Tensor::grad() const {
  if (d_->grad.empty()) d_->grad.assign(d_->value.size(), 0.0);
  return d_->grad;
}

void Tensor::zero_grad() {
  if (!d_->grad.empty()) d_->grad.assign(d_->value.size(), 0.0);
}

void Tape::backward(Tensor& loss) {
  if (loss.size() != 1) throw std::logic_error("backward expects a scalar loss");
  loss.grad()[0] = 1.0;
  for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) (*it)();
}

}  // namespace boneage::nn
