#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fdglab/errors.hpp"

namespace fdglab {

// Dense shape of rank <= 4. Activation tensors are laid out B x C x W x H.
class Shape {
 public:
  Shape() : rank_(0), dims_{} {}

  Shape(std::initializer_list<int> dims) : Shape(dims.begin(), dims.end()) {}

  explicit Shape(const std::vector<int>& dims)
      : Shape(dims.begin(), dims.end()) {}

  template <typename It>
  Shape(It first, It last) : rank_(0), dims_{} {
    for (It it = first; it != last; ++it) {
      if (rank_ >= kMaxRank)
        throw ShapeError("tensor rank exceeds maximum of 4");
      if (*it < 0)
        throw ShapeError("negative extent on axis " + std::to_string(rank_),
                         rank_);
      dims_[rank_++] = *it;
    }
  }

  int rank() const noexcept { return rank_; }

  int extent(int axis) const {
    if (axis < 0 || axis >= rank_)
      throw ShapeError("axis " + std::to_string(axis) + " out of range for rank " +
                           std::to_string(rank_),
                       axis);
    return dims_[axis];
  }

  std::int64_t numel() const noexcept {
    std::int64_t n = 1;
    for (int i = 0; i < rank_; ++i) n *= dims_[i];
    return n;
  }

  bool operator==(const Shape& o) const noexcept {
    if (rank_ != o.rank_) return false;
    for (int i = 0; i < rank_; ++i)
      if (dims_[i] != o.dims_[i]) return false;
    return true;
  }
  bool operator!=(const Shape& o) const noexcept { return !(*this == o); }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < rank_; ++i) {
      if (i) s += ",";
      s += std::to_string(dims_[i]);
    }
    return s + "]";
  }

  static constexpr int kMaxRank = 4;

 private:
  int rank_;
  std::array<int, kMaxRank> dims_;
};

// Dense 64-bit float tensor. Copies are shallow (shared storage); ops treat
// tensors as immutable values, while sanctioned in-place mutation (SGD steps,
// running-statistic updates) writes through `data()` and is visible to every
// copy. `node` is the tape handle, -1 when the tensor is not on a tape.
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(Shape shape)
      : shape_(shape),
        buf_(std::make_shared<std::vector<double>>(
            static_cast<std::size_t>(shape.numel()), 0.0)) {}

  Tensor(Shape shape, std::vector<double> data)
      : shape_(shape),
        buf_(std::make_shared<std::vector<double>>(std::move(data))) {
    if (static_cast<std::int64_t>(buf_->size()) != shape_.numel())
      throw ShapeError("data length " + std::to_string(buf_->size()) +
                       " does not match shape " + shape_.to_string());
  }

  static Tensor scalar(double v) { return Tensor(Shape{}, {v}); }

  static Tensor full(Shape shape, double v) {
    Tensor t(shape);
    for (double& x : *t.buf_) x = v;
    return t;
  }

  bool defined() const noexcept { return buf_ != nullptr; }
  const Shape& shape() const noexcept { return shape_; }
  int rank() const noexcept { return shape_.rank(); }
  std::int64_t size() const noexcept { return shape_.numel(); }
  int extent(int axis) const { return shape_.extent(axis); }

  std::span<const double> data() const { return {buf_->data(), buf_->size()}; }
  std::span<double> data() { return {buf_->data(), buf_->size()}; }

  double item() const {
    if (size() != 1)
      throw ValueError("item() requires a single-element tensor, got shape " +
                       shape_.to_string());
    return (*buf_)[0];
  }

  // Deep copy with the tape handle cleared.
  Tensor clone() const {
    Tensor t;
    t.shape_ = shape_;
    t.buf_ = std::make_shared<std::vector<double>>(*buf_);
    t.grad_enabled = grad_enabled;
    return t;
  }

  // Same storage under a different shape.
  Tensor view(Shape new_shape) const {
    if (new_shape.numel() != shape_.numel())
      throw ShapeError("cannot view " + shape_.to_string() + " as " +
                       new_shape.to_string());
    Tensor t = *this;
    t.shape_ = new_shape;
    t.node = -1;
    return t;
  }

  bool shares_storage(const Tensor& o) const noexcept { return buf_ == o.buf_; }

  bool grad_enabled = false;
  int node = -1;

 private:
  Shape shape_;
  std::shared_ptr<std::vector<double>> buf_;
};

inline bool bitwise_equal(const Tensor& a, const Tensor& b) {
  if (a.shape() != b.shape()) return false;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (std::memcmp(&da[i], &db[i], sizeof(double)) != 0) return false;
  }
  return true;
}

}  // namespace fdglab
