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

#pragma once

#include <span>
#include <string>
#include <vector>

#include "sqg/types.hpp"

namespace sqg {

/// Ordered register of d-level systems. Site 0 is the slowest index, so a
/// basis label |n0 n1 n2> maps to index n0*d1*d2 + n1*d2 + n2, matching the
/// |q0 q1 q2> labelling used throughout.
class RegisterShape {
 public:
  RegisterShape() = default;
  explicit RegisterShape(std::vector<int> dims, std::vector<std::string> labels = {});

  static RegisterShape qubits(int n);
  static RegisterShape qutrits(int n);

  int num_sites() const { return static_cast<int>(dims_.size()); }
  int dim(int site) const { return dims_[site]; }
  const std::vector<int>& dims() const { return dims_; }
  const std::string& label(int site) const { return labels_[site]; }
  const std::vector<std::string>& labels() const { return labels_; }
  Eigen::Index total_dim() const { return total_; }
  Eigen::Index stride(int site) const { return strides_[site]; }

  Eigen::Index index(std::span<const int> digits) const;
  std::vector<int> digits(Eigen::Index index) const;
  void digits_into(Eigen::Index index, std::span<int> out) const;

  /// Index of the basis state written as a digit string, e.g. "110".
  Eigen::Index index_of_label(const std::string& digit_string) const;

  bool operator==(const RegisterShape& other) const { return dims_ == other.dims_; }
  bool operator!=(const RegisterShape& other) const { return !(*this == other); }

 private:
  std::vector<int> dims_;
  std::vector<std::string> labels_;
  std::vector<Eigen::Index> strides_;
  Eigen::Index total_ = 0;
};

}  // namespace sqg
