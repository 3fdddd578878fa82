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

#ifndef QEA_BITS_HPP
#define QEA_BITS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qea {

/// Fixed-width dynamic bitset. Elements of every algebra in the toolkit are
/// stored as one of these: point sets for concrete set algebras, atom sets
/// for abstract ones.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bits ones(std::size_t n);
  static Bits single(std::size_t n, std::size_t i);

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  Bits& operator|=(const Bits& o);
  Bits& operator&=(const Bits& o);
  Bits& operator^=(const Bits& o);
  Bits& subtract(const Bits& o);  // this &= ~o

  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }
  Bits minus(const Bits& o) const;

  bool none() const;
  bool any() const { return !none(); }
  std::size_t count() const;
  bool subset_of(const Bits& o) const;
  bool intersects(const Bits& o) const;

  // First set bit, or -1; next set bit strictly after i, or -1.
  int first() const;
  int next(int i) const;

  bool operator==(const Bits&) const = default;
  bool operator<(const Bits& o) const;  // by width, then word content
  std::size_t hash() const;
  std::string to_string() const;  // e.g. "{0,3,17}"

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace qea

#endif  // QEA_BITS_HPP
