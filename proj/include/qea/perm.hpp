/* Copyright 2026 The qesplit Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef QEA_PERM_HPP
#define QEA_PERM_HPP

#include <string>
#include <utility>
#include <vector>

namespace qea {

/// Finite permutation: a bijection on {0..bound-1}, extended as the identity
/// above its bound. Two permutations are equal when they are equal as
/// functions on all naturals.
class Perm {
 public:
  Perm() = default;
  static Perm identity(int n);
  static Perm transposition(int n, int i, int j);
  explicit Perm(std::vector<int> mapping);  // validates bijection

  int bound() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const {
    return i < bound() ? map_[static_cast<std::size_t>(i)] : i;
  }

  // (a * b)(i) = a(b(i)); b is applied first.
  friend Perm operator*(const Perm& a, const Perm& b);
  Perm inverse() const;
  bool is_identity() const;

  // Largest moved index + 1; 0 for the identity.
  int support() const;

  // Canonical decomposition into transpositions composing (left to right,
  // rightmost applied first) back to this permutation. Empty for identity.
  std::vector<std::pair<int, int>> transpositions() const;

  bool operator==(const Perm& o) const;
  bool operator<(const Perm& o) const;  // by function values, for ordering

  std::string to_string() const;  // "[0,1][1,2]", "id" for identity

 private:
  std::vector<int> map_;
};

/// All permutations of {0..n-1} in lexicographic order of their mapping
/// vectors; the identity comes first. n! entries; n = 0 gives {identity}.
std::vector<Perm> symmetric_group(int n);

}  // namespace qea

#endif  // QEA_PERM_HPP
