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

#include "qea/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qea {

Perm Perm::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  Perm p;
  p.map_ = std::move(m);
  return p;
}

Perm Perm::transposition(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw std::out_of_range("transposition index out of bound");
  Perm p = identity(n);
  std::swap(p.map_[static_cast<std::size_t>(i)],
            p.map_[static_cast<std::size_t>(j)]);
  return p;
}

Perm::Perm(std::vector<int> mapping) : map_(std::move(mapping)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= bound() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("mapping is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm operator*(const Perm& a, const Perm& b) {
  const int n = std::max(a.bound(), b.bound());
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = a(b(i));
  Perm p;
  p.map_ = std::move(m);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> m(map_.size());
  for (int i = 0; i < bound(); ++i)
    m[static_cast<std::size_t>(map_[static_cast<std::size_t>(i)])] = i;
  Perm p;
  p.map_ = std::move(m);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < bound(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

int Perm::support() const {
  for (int i = bound() - 1; i >= 0; --i)
    if ((*this)(i) != i) return i + 1;
  return 0;
}

std::vector<std::pair<int, int>> Perm::transpositions() const {
  // Cycle (a1 a2 .. al) equals [a1,a2][a2,a3]..[a_{l-1},a_l] under
  // rightmost-first composition.
  std::vector<std::pair<int, int>> out;
  const int n = bound();
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (done[static_cast<std::size_t>(start)] || (*this)(start) == start)
      continue;
    std::vector<int> cycle;
    int cur = start;
    while (!done[static_cast<std::size_t>(cur)]) {
      done[static_cast<std::size_t>(cur)] = true;
      cycle.push_back(cur);
      cur = (*this)(cur);
    }
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
      out.emplace_back(cycle[k], cycle[k + 1]);
  }
  return out;
}

bool Perm::operator==(const Perm& o) const {
  const int n = std::max(bound(), o.bound());
  for (int i = 0; i < n; ++i)
    if ((*this)(i) != o(i)) return false;
  return true;
}

bool Perm::operator<(const Perm& o) const {
  const int n = std::max(bound(), o.bound());
  for (int i = 0; i < n; ++i) {
    if ((*this)(i) != o(i)) return (*this)(i) < o(i);
  }
  return false;
}

std::string Perm::to_string() const {
  if (is_identity()) return "id";
  std::string s;
  for (auto [i, j] : transpositions()) {
    s += '[';
    s += std::to_string(i);
    s += ',';
    s += std::to_string(j);
    s += ']';
  }
  return s;
}

std::vector<Perm> symmetric_group(int n) {
  if (n < 0) throw std::invalid_argument("negative group bound");
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  std::vector<Perm> g;
  do {
    g.push_back(Perm(m));
  } while (std::next_permutation(m.begin(), m.end()));
  return g;
}

}  // namespace qea
