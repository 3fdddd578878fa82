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

#include "qea/bits.hpp"

#include <bit>
#include <cassert>

namespace qea {

namespace {
std::uint64_t tail_mask(std::size_t n) {
  const std::size_t rem = n & 63;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}
}  // namespace

Bits Bits::ones(std::size_t n) {
  Bits b(n);
  if (n == 0) return b;
  for (auto& w : b.w_) w = ~std::uint64_t{0};
  b.w_.back() &= tail_mask(n);
  return b;
}

Bits Bits::single(std::size_t n, std::size_t i) {
  Bits b(n);
  b.set(i);
  return b;
}

Bits& Bits::operator|=(const Bits& o) {
  assert(n_ == o.n_);
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  return *this;
}

Bits& Bits::operator&=(const Bits& o) {
  assert(n_ == o.n_);
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
  return *this;
}

Bits& Bits::operator^=(const Bits& o) {
  assert(n_ == o.n_);
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  return *this;
}

Bits& Bits::subtract(const Bits& o) {
  assert(n_ == o.n_);
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
  return *this;
}

Bits Bits::minus(const Bits& o) const {
  Bits r = *this;
  r.subtract(o);
  return r;
}

bool Bits::none() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

std::size_t Bits::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

bool Bits::subset_of(const Bits& o) const {
  assert(n_ == o.n_);
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (w_[k] & ~o.w_[k]) return false;
  return true;
}

bool Bits::intersects(const Bits& o) const {
  assert(n_ == o.n_);
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (w_[k] & o.w_[k]) return true;
  return false;
}

int Bits::first() const {
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
  return -1;
}

int Bits::next(int i) const {
  std::size_t j = static_cast<std::size_t>(i) + 1;
  if (j >= n_) return -1;
  std::size_t k = j >> 6;
  std::uint64_t w = w_[k] & (~std::uint64_t{0} << (j & 63));
  while (true) {
    if (w) return static_cast<int>(k * 64 + std::countr_zero(w));
    if (++k == w_.size()) return -1;
    w = w_[k];
  }
}

bool Bits::operator<(const Bits& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return w_ < o.w_;
}

std::size_t Bits::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
  for (auto w : w_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string Bits::to_string() const {
  std::string s = "{";
  bool sep = false;
  for (int i = first(); i >= 0; i = next(i)) {
    if (sep) s += ',';
    s += std::to_string(i);
    sep = true;
  }
  s += '}';
  return s;
}

}  // namespace qea
