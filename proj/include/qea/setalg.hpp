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

#ifndef QEA_SETALG_HPP
#define QEA_SETALG_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qea/algebra.hpp"
#include "qea/bits.hpp"
#include "qea/perm.hpp"

namespace qea {

/// A base set of `universe` points partitioned into `dim` pairwise-disjoint
/// nonempty blocks; block b occupies the contiguous label range
/// [offset(b), offset(b)+sizes[b]).
struct BaseSpec {
  std::vector<int> sizes;

  explicit BaseSpec(std::vector<int> block_sizes);
  static BaseSpec uniform(int d, int size);

  int dim() const { return static_cast<int>(sizes.size()); }
  int universe() const;
  int offset(int b) const;
  int block_of(int label) const;
  std::vector<int> block(int b) const;                // labels of block b
  std::vector<std::vector<int>> block_lists() const;  // all blocks
};

/// The space of all length-dim sequences over a base of `base` points, with
/// the fixed lexicographic enumeration (coordinate 0 most significant).
/// Subsets of the space are Bits of width points().
class SeqSpace {
 public:
  SeqSpace(int dim, int base);

  int dim() const { return dim_; }
  int base() const { return base_; }
  std::size_t points() const { return points_; }

  std::size_t encode(std::span<const int> seq) const;
  std::vector<int> decode(std::size_t p) const;
  int coord(std::size_t p, int i) const;

  Bits empty_set() const { return Bits(points_); }
  Bits full_set() const { return Bits::ones(points_); }
  Bits point_set(std::span<const int> seq) const;

  Bits cyl(int i, const Bits& x) const;
  Bits diag(int i, int j) const;
  Bits subst(const Perm& p, const Bits& x) const;
  Bits replacement(int i, int j, const Bits& x) const;

 private:
  const std::vector<std::uint32_t>& point_map(const std::vector<int>& key,
                                              const Perm* p, int ri,
                                              int rj) const;

  int dim_, base_;
  std::size_t points_;
  std::vector<std::size_t> stride_;
  // Lazily built point maps for substitutions and replacements; guarded so
  // shared spaces stay safe to use concurrently.
  mutable std::mutex cache_mu_;
  mutable std::map<std::vector<int>, std::vector<std::uint32_t>> map_cache_;
};

/// {s : s_i in factors[i] for every i}.
Bits product_of_blocks(const SeqSpace& sp,
                       const std::vector<std::vector<int>>& factors);

/// The generator set R: block i of the base at coordinate i.
Bits product_r(const SeqSpace& sp, const BaseSpec& base);

/// Full powerset algebra over a sequence space; atoms are singletons.
class PowersetAlgebra final : public Algebra {
 public:
  PowersetAlgebra(std::shared_ptr<const SeqSpace> sp, int subst_bound);

  int dim() const override { return sp_->dim(); }
  int subst_bound() const override { return n_; }
  std::size_t width() const override { return sp_->points(); }
  Bits top() const override { return sp_->full_set(); }
  Bits cyl(int i, const Bits& x) const override;
  Bits diag(int i, int j) const override;
  Bits subst(const Perm& p, const Bits& x) const override;
  Bits replacement(int i, int j, const Bits& x) const override;
  std::size_t atom_count() const override { return sp_->points(); }
  Bits atom(std::size_t k) const override;
  bool contains(const Bits& x) const override { return x.size() == width(); }
  std::string describe() const override;

  const SeqSpace& space() const { return *sp_; }
  std::shared_ptr<const SeqSpace> space_ptr() const { return sp_; }

 private:
  std::shared_ptr<const SeqSpace> sp_;
  int n_;
};

/// Subalgebra of a powerset algebra generated by a finite family, presented
/// by its atom partition. The closure is computed by partition refinement:
/// the coarsest partition of the space in which every generator and diagonal
/// is a union of parts and every cylindrification, substitution and
/// replacement image of a part is again a union of parts. The element family
/// (all unions of atoms) is never materialized; its size is 2^atom_count.
class GeneratedAlgebra final : public Algebra {
 public:
  static std::shared_ptr<const GeneratedAlgebra> generate(
      std::shared_ptr<const SeqSpace> sp, int subst_bound,
      std::vector<Bits> generators, std::size_t atom_cap = 100000);

  int dim() const override { return sp_->dim(); }
  int subst_bound() const override { return n_; }
  std::size_t width() const override { return sp_->points(); }
  Bits top() const override { return sp_->full_set(); }
  Bits cyl(int i, const Bits& x) const override;
  Bits diag(int i, int j) const override;
  Bits subst(const Perm& p, const Bits& x) const override;
  Bits replacement(int i, int j, const Bits& x) const override;
  std::size_t atom_count() const override { return atoms_.size(); }
  Bits atom(std::size_t k) const override { return atoms_[k]; }
  bool contains(const Bits& x) const override;
  std::string describe() const override;

  const SeqSpace& space() const { return *sp_; }
  std::shared_ptr<const SeqSpace> space_ptr() const { return sp_; }
  const std::vector<Bits>& atoms() const { return atoms_; }
  const std::vector<Bits>& generators() const { return gens_; }

  /// True iff x is an element and a minimal nonzero one. Throws if x is not
  /// an element of this algebra.
  bool is_atom_of(const Bits& x) const;

  /// Element -> set of atom indices; throws if x is not an element.
  Bits atom_mask(const Bits& x) const;
  Bits from_atom_mask(const Bits& mask) const;

  /// Enumerates the whole element family; throws CapExceeded when
  /// 2^atom_count exceeds the cap.
  std::vector<Bits> all_elements(std::size_t cap = 1u << 16) const;

 private:
  GeneratedAlgebra() = default;
  std::shared_ptr<const SeqSpace> sp_;
  int n_ = 0;
  std::vector<Bits> atoms_;
  std::vector<Bits> gens_;
  std::vector<Perm> group_;
};

/// Operator-law suite for a sequence space: cylindrification laws (normal,
/// additive, increasing, idempotent, commuting), substitution laws (group
/// action, Boolean endomorphism, diagonal image), checked on a supplied atom
/// base (complete for all unions of those atoms, all operators being
/// additive) plus seeded random subsets of the space.
struct LawEntry {
  std::string law;
  bool pass;
  std::string witness;
};
struct LawReport {
  std::vector<LawEntry> entries;
  bool ok() const;
};
LawReport operator_law_suite(const SeqSpace& sp, int subst_bound,
                             const std::vector<Bits>& atom_base,
                             int random_elements, std::uint64_t seed);

}  // namespace qea

#endif  // QEA_SETALG_HPP
