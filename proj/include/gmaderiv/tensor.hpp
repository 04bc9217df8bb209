/* Copyright (C) 2026 The gmaderiv authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "gmaderiv/field.hpp"

namespace gmaderiv {

/// Dense order-3 tensor of exact field elements. Used for structure
/// constants (d x d x d), module actions and bilinear pairings; any
/// dimension may be zero.
class Tensor3 {
 public:
  Tensor3(const Field& f, std::size_t d0, std::size_t d1, std::size_t d2)
      : field_(f), d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, Scalar::zero(f)) {}

  const Field& field() const { return field_; }
  std::size_t dim0() const { return d0_; }
  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }

  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d1_ + j) * d2_ + k];
  }

  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
    if (i >= d0_ || j >= d1_ || k >= d2_) throw DimensionError("tensor index out of range");
    if (value.field() != field_)
      throw FieldMismatchError("entry over " + value.field().name() + " in tensor over " +
                               field_.name());
    data_[(i * d1_ + j) * d2_ + k] = value;
  }

  bool is_zero() const {
    for (const auto& s : data_)
      if (!s.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    if (a.field_ != b.field_ || a.d0_ != b.d0_ || a.d1_ != b.d1_ || a.d2_ != b.d2_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (a.data_[i] != b.data_[i]) return false;
    return true;
  }
  friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t d0_, d1_, d2_;
  std::vector<Scalar> data_;
};

}  // namespace gmaderiv
