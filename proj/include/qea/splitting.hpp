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

#ifndef QEA_SPLITTING_HPP
#define QEA_SPLITTING_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qea/bao.hpp"
#include "qea/setalg.hpp"

namespace qea {

/// Parameters of the atom-splitting construction: a generated set algebra, an
/// atom R of it, the split count m (producing parts R_0..R_m), and the
/// substitution bound n of the result. k records how many generators the
/// small-subalgebra machinery is meant to support; the classical guarantee
/// asks m >= 2^(k*n!+1), smaller m still builds and is merely flagged.
struct SplitSpec {
  std::shared_ptr<const GeneratedAlgebra> base;
  Bits r;
  int m = 1;
  int n = 1;
  int k = 1;
};

/// The algebra obtained by replacing each atom s_tau(R), tau in the bound-n
/// substitution group, with m+1 abstract atoms carrying identical
/// cylindrification behaviour. Elements are arbitrary sets of atoms; the
/// original algebra embeds via expand().
class SplitAlgebra final : public Algebra {
 public:
  int dim() const override { return bao_->dim(); }
  int subst_bound() const override { return spec_.n; }
  std::size_t width() const override { return bao_->width(); }
  Bits top() const override { return bao_->top(); }
  Bits cyl(int i, const Bits& x) const override { return bao_->cyl(i, x); }
  Bits diag(int i, int j) const override { return bao_->diag(i, j); }
  Bits subst(const Perm& p, const Bits& x) const override {
    return bao_->subst(p, x);
  }
  Bits replacement(int i, int j, const Bits& x) const override {
    return bao_->replacement(i, j, x);
  }
  std::size_t atom_count() const override { return bao_->atom_count(); }
  Bits atom(std::size_t k) const override { return bao_->atom(k); }
  bool contains(const Bits& x) const override { return x.size() == width(); }
  std::string describe() const override;

  const SplitSpec& spec() const { return spec_; }
  const FiniteBAO& bao() const { return *bao_; }
  const GeneratedAlgebra& base() const { return *spec_.base; }
  const std::vector<Perm>& group() const { return bao_->group(); }

  std::size_t old_atom_count() const { return old_atoms_.size(); }
  bool is_named(std::size_t atom) const;
  /// Index of the abstract atom named (tau, j).
  std::size_t named_atom(int perm_idx, int j) const;
  /// (perm index, j) of a named atom.
  std::pair<int, int> name_of(std::size_t atom) const;
  /// Base-algebra atom index of an unsplit atom.
  std::size_t base_atom_of(std::size_t atom) const;
  /// Base-algebra atom index of s_tau(R).
  std::size_t split_source(int perm_idx) const;

  /// Image of a base-algebra element under the canonical embedding: each
  /// unsplit atom maps to itself, each s_tau(R) to the join of its parts.
  Bits expand(const Bits& base_element) const;
  Bits expand_mask(const Bits& base_atom_mask) const;

  /// Writes x as expand(a) + (a set of named atoms), with a the join of all
  /// base atoms fully contained in x; complete part groups re-fuse into a.
  std::pair<Bits, std::vector<std::size_t>> decompose(const Bits& x) const;

 private:
  friend std::shared_ptr<const SplitAlgebra> split(
      const SplitSpec&, std::optional<std::uint64_t>);
  SplitSpec spec_;
  std::unique_ptr<FiniteBAO> bao_;
  std::vector<std::size_t> old_atoms_;   // split atom -> base atom, old part
  std::vector<int> base_to_split_;       // base atom -> split atom or -1
  std::vector<std::size_t> source_;      // perm idx -> base atom of s_tau R
  std::vector<std::size_t> named_base_;  // (perm idx)*(m+1)+j -> split atom
};

/// Builds the split algebra; atom enumeration order may be shuffled with a
/// seed (the result is isomorphic whatever the order).
std::shared_ptr<const SplitAlgebra> split(
    const SplitSpec& spec,
    std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// The canonical embedding of the base algebra into the split algebra.
Homomorphism embed_old_hom(std::shared_ptr<const SplitAlgebra> s);

/// The provenance bijection between two builds of the same spec.
Homomorphism split_isomorphism(std::shared_ptr<const SplitAlgebra> s1,
                               std::shared_ptr<const SplitAlgebra> s2);

/// Re-derives every structural property of the construction from the base
/// algebra: part sums, equal cylindrifications across parts, the
/// substitution action on named atoms, diagonal-freeness of named atoms, and
/// the embedding of the base algebra.
VerificationRecord verify_split(std::shared_ptr<const SplitAlgebra> s);

/// x <= -d_ij implies the replacement of x moving j onto i vanishes; checked
/// for every atom below every -d_ij, which by additivity covers every
/// element.
VerificationRecord diag_quasi_persistence(const SplitAlgebra& s);

// ---------------------------------------------------------------------------
// The small-subalgebra machinery.

/// Partition of the part index set {0..m} induced by a generator family G:
/// two parts are equivalent when exactly the same generators contain their
/// tau-copies, for every tau. At most 2^(|G|*n!) blocks.
struct EquivPartition {
  std::vector<Bits> gens;
  std::vector<std::vector<int>> blocks;  // sorted by smallest member
  bool over_declared_k = false;
  int p() const { return static_cast<int>(blocks.size()); }
  int block_of(int j) const;
};

EquivPartition equiv_blocks(const SplitAlgebra& s, std::vector<Bits> gens);

/// Core of equiv_blocks on raw membership tables: column j's signature is
/// membership[.][j]; columns with equal signatures share a block. Usable
/// without any concrete algebra.
std::vector<std::vector<int>> signature_blocks(
    int parts, const std::vector<std::vector<bool>>& membership);

/// The subalgebra of elements whose named-atom content respects a part
/// partition: minimal elements are the unsplit atoms and the merged chunks
/// {(tau, j) : j in block}.
class MergedSubalgebra final : public Algebra {
 public:
  MergedSubalgebra(std::shared_ptr<const SplitAlgebra> s,
                   EquivPartition part);

  int dim() const override { return s_->dim(); }
  int subst_bound() const override { return s_->subst_bound(); }
  std::size_t width() const override { return s_->width(); }
  Bits top() const override { return s_->top(); }
  Bits cyl(int i, const Bits& x) const override { return s_->cyl(i, x); }
  Bits diag(int i, int j) const override { return s_->diag(i, j); }
  Bits subst(const Perm& p, const Bits& x) const override {
    return s_->subst(p, x);
  }
  Bits replacement(int i, int j, const Bits& x) const override {
    return s_->replacement(i, j, x);
  }
  std::size_t atom_count() const override { return minimal_.size(); }
  Bits atom(std::size_t k) const override { return minimal_[k]; }
  std::string describe() const override;

  const SplitAlgebra& split_algebra() const { return *s_; }
  std::shared_ptr<const SplitAlgebra> split_ptr() const { return s_; }
  const EquivPartition& partition() const { return part_; }
  const std::vector<Bits>& minimal_elements() const { return minimal_; }
  /// The merged sum y_l = sum of parts in block l (an element, as atom set).
  Bits merged_part(int l) const;

 private:
  std::shared_ptr<const SplitAlgebra> s_;
  EquivPartition part_;
  std::vector<Bits> minimal_;
};

/// Builds the subalgebra and checks its closure properties: contains the
/// generators, the embedded base algebra and all diagonals; closed under
/// complement, cylindrifications and substitutions; merged parts y_l lie in
/// it with c_i(y_l) = c_i(R).
std::pair<std::shared_ptr<const MergedSubalgebra>, VerificationRecord>
small_subalgebra(std::shared_ptr<const SplitAlgebra> s,
                 EquivPartition part);

// ---------------------------------------------------------------------------
// Real partitions.

/// A partition of a product set into q pieces whose cylindrifications all
/// equal that of the whole target, built from onto labelings of each factor
/// into Z_q summed coordinatewise.
struct RealPartition {
  std::vector<std::vector<int>> factors;
  int q = 0;
  Bits target;
  std::vector<Bits> pieces;
  std::vector<std::vector<int>> labelings;  // per coordinate, label of factor element
  VerificationRecord checks;
};

RealPartition real_partition(
    const SeqSpace& sp, const std::vector<std::vector<int>>& factors, int q,
    std::optional<std::vector<std::vector<int>>> labelings = std::nullopt);

// ---------------------------------------------------------------------------
// Embeddings.

/// The representation of the merged subalgebra inside the concrete algebra
/// generated by a real partition of R into m pieces: unsplit atoms map to
/// themselves, the chunk (tau, block l) to s_tau of the l-th piece (the last
/// merged block absorbing the remaining pieces). Identity on the embedded
/// base algebra. The target is normally the subalgebra generated by the
/// pieces; every image is checked to be one of its elements (a powerset
/// target accepts anything, the structural argument being that images are
/// substitution copies of piece joins).
Homomorphism embed_small(std::shared_ptr<const MergedSubalgebra> b,
                         const RealPartition& rp,
                         std::shared_ptr<const Algebra> target);

/// Contiguous near-equal ranges partitioning {0..m2} into m1+1 groups.
std::vector<std::vector<int>> default_chi(int m1, int m2);

/// Embedding of a coarser splitting into the bound-n1 substitution reduct of
/// a finer one over the same base and R: part j of the source fans out to
/// the parts chi[j] of the target.
Homomorphism embed_split(std::shared_ptr<const SplitAlgebra> s1,
                         std::shared_ptr<const SplitAlgebra> s2,
                         const std::vector<std::vector<int>>& chi);

}  // namespace qea

#endif  // QEA_SPLITTING_HPP
