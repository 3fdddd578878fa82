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

#ifndef QEA_BAO_HPP
#define QEA_BAO_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qea/algebra.hpp"
#include "qea/setalg.hpp"

namespace qea {

struct VerificationEntry {
  std::string law;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct VerificationRecord {
  std::vector<VerificationEntry> entries;
  bool ok() const;
  bool passed(const std::string& law) const;  // all entries matching prefix
  std::string first_failure() const;
  void add(std::string law, bool pass, std::string witness = "");
  void merge(const VerificationRecord& other, const std::string& prefix);
};

/// Finite atomic Boolean algebra with operators, given by its operator action
/// on atoms. Elements are arbitrary atom sets; all operators extend
/// additively. Atoms carry names for reporting.
class FiniteBAO final : public Algebra {
 public:
  FiniteBAO(int dim, int subst_bound, std::vector<std::string> atom_names);

  // Construction-time mutators; the algebra is immutable once in use.
  void set_cyl(int i, std::size_t atom, Bits image);
  void set_subst(const Perm& p, std::size_t atom, std::size_t image);
  void set_diag(int i, int j, Bits atoms);

  int dim() const override { return d_; }
  int subst_bound() const override { return n_; }
  std::size_t width() const override { return names_.size(); }
  Bits top() const override { return Bits::ones(names_.size()); }
  Bits cyl(int i, const Bits& x) const override;
  Bits diag(int i, int j) const override;
  Bits subst(const Perm& p, const Bits& x) const override;
  Bits replacement(int i, int j, const Bits& x) const override;
  std::size_t atom_count() const override { return names_.size(); }
  Bits atom(std::size_t k) const override {
    return Bits::single(names_.size(), k);
  }
  bool contains(const Bits& x) const override { return x.size() == width(); }
  std::string describe() const override;

  const std::vector<Perm>& group() const { return group_; }
  int perm_index(const Perm& p) const;
  int compose_index(int a, int b) const;  // index of group[a] * group[b]
  const std::string& atom_name(std::size_t k) const { return names_[k]; }
  const Bits& cyl_action(int i, std::size_t atom) const;
  std::size_t subst_action(int perm_idx, std::size_t atom) const;

 private:
  int d_, n_;
  std::vector<std::string> names_;
  std::vector<Perm> group_;
  std::vector<std::vector<Bits>> cyl_;        // [i][atom]
  std::vector<std::vector<std::size_t>> sub_; // [perm][atom]
  std::vector<std::vector<Bits>> diag_;       // [i][j]
};

/// Rebuilds any algebra presented by its minimal nonzero elements as a
/// FiniteBAO on those atoms; operator actions are computed in the source and
/// decomposed back. Requires the source to be closed (every operator image
/// of an atom a union of atoms) and substitutions to act atomwise.
FiniteBAO atomize(const Algebra& a);

/// Abstracts a generated set algebra into a FiniteBAO whose atom k is the
/// k-th atom of the source.
FiniteBAO from_concrete(const GeneratedAlgebra& a);

/// Checks every FiniteBAO law exhaustively over atoms and operator indices:
/// cylindrifications increasing and idempotent atomwise, substitutions a
/// group action by Boolean bijections, diag(i,i) the unit. Failures are data,
/// not errors.
VerificationRecord verify_bao(const FiniteBAO& b);

// ---------------------------------------------------------------------------
// Homomorphisms.

/// The operations a homomorphism is declared to preserve.
struct OpSubset {
  bool booleans = true;
  std::vector<int> cyls;
  bool diags = false;
  std::vector<Perm> substs;
  std::vector<std::pair<int, int>> replacements;

  static OpSubset full(int dim, int subst_bound);
  static OpSubset cylindric(int dim);         // booleans + all cyls + diags
  static OpSubset boolean_only();
  std::string to_string() const;
};

/// A map between algebras, stored on the minimal nonzero elements of its
/// domain (the domain's atoms, or the minimal elements of a subalgebra) and
/// extended additively. Whether it actually is a homomorphism for the
/// declared operations is what verify_hom decides.
struct Homomorphism {
  std::shared_ptr<const Algebra> source;
  std::shared_ptr<const Algebra> target;
  std::vector<Bits> domain_atoms;  // minimal elements of the domain
  std::vector<Bits> images;        // their images, one per domain atom
  OpSubset ops;
  bool injective = true;  // declared; verified on demand
  std::string label;

  /// Additive extension; throws if x is not a union of domain atoms.
  Bits apply(const Bits& x) const;
};

struct HomExhaustive {
  // When 2^{#domain atoms} is at most element_cap the checker also literally
  // enumerates elements (and pairs, capped separately); the atom-level pass
  // alone is already complete for additively extended maps.
  std::size_t element_cap = 1u << 10;
  std::size_t pair_cap = 1u << 14;
};
struct HomSampled {
  int count = 200;
  std::uint64_t seed = 0;
};
using HomMode = std::variant<HomExhaustive, HomSampled>;

/// Verifies h(op(x)) = op(h(x)) for every declared operation.
///
/// In exhaustive mode the checks quantify over every domain atom (and every
/// atom pair where relevant). For a map stored on atoms and extended
/// additively this is a complete proof over the whole domain: joins are
/// preserved by construction, meets and complements reduce to disjointness
/// of atom images together with preservation of the unit, and the remaining
/// operators are additive, so agreement on atoms lifts to all elements.
VerificationRecord verify_hom(const Homomorphism& h,
                              const HomMode& mode = HomExhaustive{});

/// g after f; requires f's images to decompose over g's domain atoms.
Homomorphism compose(const Homomorphism& f, const Homomorphism& g);

}  // namespace qea

#endif  // QEA_BAO_HPP
