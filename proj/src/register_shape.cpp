// Copyright 2026 the sqgsim authors
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

#include "sqg/register_shape.hpp"

#include <stdexcept>

namespace sqg {

RegisterShape::RegisterShape(std::vector<int> dims, std::vector<std::string> labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
  if (dims_.empty()) throw std::invalid_argument("RegisterShape: no sites");
  for (int d : dims_) {
    if (d < 2) throw std::invalid_argument("RegisterShape: site dimension must be >= 2");
  }
  if (labels_.empty()) {
    labels_.reserve(dims_.size());
    for (size_t i = 0; i < dims_.size(); ++i) labels_.push_back("q" + std::to_string(i));
  }
  if (labels_.size() != dims_.size()) {
    throw std::invalid_argument("RegisterShape: label count mismatch");
  }
  strides_.assign(dims_.size(), 1);
  total_ = 1;
  for (int i = static_cast<int>(dims_.size()) - 1; i >= 0; --i) {
    strides_[i] = total_;
    total_ *= dims_[i];
  }
}

RegisterShape RegisterShape::qubits(int n) {
  return RegisterShape(std::vector<int>(n, 2));
}

RegisterShape RegisterShape::qutrits(int n) {
  return RegisterShape(std::vector<int>(n, 3));
}

Eigen::Index RegisterShape::index(std::span<const int> digits) const {
  if (digits.size() != dims_.size()) throw std::invalid_argument("index: digit count mismatch");
  Eigen::Index ix = 0;
  for (size_t i = 0; i < dims_.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= dims_[i]) throw std::out_of_range("index: digit out of range");
    ix += digits[i] * strides_[i];
  }
  return ix;
}

std::vector<int> RegisterShape::digits(Eigen::Index index) const {
  std::vector<int> out(dims_.size());
  digits_into(index, out);
  return out;
}

void RegisterShape::digits_into(Eigen::Index index, std::span<int> out) const {
  if (index < 0 || index >= total_) throw std::out_of_range("digits: index out of range");
  for (size_t i = 0; i < dims_.size(); ++i) {
    out[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
}

Eigen::Index RegisterShape::index_of_label(const std::string& digit_string) const {
  if (digit_string.size() != dims_.size()) {
    throw std::invalid_argument("index_of_label: expected one digit per site");
  }
  std::vector<int> d(dims_.size());
  for (size_t i = 0; i < dims_.size(); ++i) {
    if (digit_string[i] < '0' || digit_string[i] > '9') {
      throw std::invalid_argument("index_of_label: non-digit character");
    }
    d[i] = digit_string[i] - '0';
  }
  return index(d);
}

}  // namespace sqg
