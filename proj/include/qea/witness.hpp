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

#ifndef QEA_WITNESS_HPP
#define QEA_WITNESS_HPP

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "qea/splitting.hpp"

namespace qea {

/// The witness term
///   tau(x) = prod_{i<=m} s_i^0(c_1 .. c_m x) * prod_{i<j<=m} -d_ij
/// with s_i^0 the derived replacement moving coordinate 0's constraint onto
/// coordinate i. Its value at R vanishes precisely because block 0 is too
/// small to seat m+1 pairwise distinct points; any representation of an
/// algebra splitting R into m+1 parts is forced to produce such points.
struct WitnessTerm {
  int m = 1;
  Term term;
};

/// Requires m >= 1 and dim >= m+1 (the term uses c_1..c_m and d_ij, i,j <= m).
WitnessTerm witness_term(int m, int dim);

struct TauValue {
  bool zero = false;
  Bits value;  // the evaluated witness value; a point of it refutes zero
  explicit operator bool() const { return zero; }
};

/// Evaluates the witness term at x = r in the given algebra.
TauValue witness_vanishes(const Algebra& a, const Bits& r, int m);

// ---------------------------------------------------------------------------
// Refutation of purported representations.

/// A concrete operation-preservation failure of a candidate map, checkable
/// from the data alone.
struct HomViolation {
  enum class Kind { RCollapsed, PartsOverlap, CylGap };
  Kind kind = Kind::RCollapsed;
  std::string detail;
  int part_i = -1, part_j = -1;    // PartsOverlap: the overlapping parts
  std::vector<int> witness_point;  // a sequence witnessing the failure
};

/// A verified point of the witness-term value at h(R): the sequence z built
/// from a seed s in h(R) and pairwise distinct base points w_0..w_m, each
/// membership re-checked extensionally in the target.
struct RefutationCertificate {
  int m = 1;
  std::vector<int> s;
  std::vector<int> w;
  std::vector<int> z;
  VerificationRecord checks;
};

using RefuteOutcome = std::variant<RefutationCertificate, HomViolation>;

/// Runs the representation contradiction against a candidate map from a
/// split algebra into a concrete powerset algebra (declared to preserve the
/// Boolean operations, cylindrifications and diagonals). Produces exactly
/// one of: a violation showing the candidate was never a homomorphism, or a
/// certificate showing the witness-term value at h(R) is nonempty even
/// though it is the image of zero.
RefuteOutcome refute_representation(const SplitAlgebra& s,
                                    const Homomorphism& h);

/// Re-derives every assertion of an outcome from scratch.
bool reverify(const RefutationCertificate& c, const SplitAlgebra& s,
              const Homomorphism& h);
bool reverify(const HomViolation& v, const SplitAlgebra& s,
              const Homomorphism& h);

// ---------------------------------------------------------------------------
// Bounded complete search for representations.

struct SearchOutcome {
  enum class Status { Found, ExhaustedNone, BudgetExceeded };
  Status status = Status::ExhaustedNone;
  std::optional<Homomorphism> hom;  // Found only; verify_hom already passed
  std::shared_ptr<const PowersetAlgebra> target;  // Found only
  std::uint64_t nodes = 0;
  std::string coverage;  // what the search space covered
};

/// Complete backtracking search for an injective homomorphism of an abstract
/// atomic algebra (width == atom count) into a powerset algebra over a base
/// of at most max_base points, preserving the given operations. Points are
/// colored by atoms; diagonals pin each point's color to its equality
/// pattern, substitutions link colors along point orbits, and
/// cylindrification coherence is enforced per axis line. Base-relabeling
/// symmetry is broken by lexicographic pruning. ExhaustedNone means no such
/// homomorphism exists within the declared bounds.
SearchOutcome search_representation(std::shared_ptr<const Algebra> a,
                                    const OpSubset& ops, int max_base,
                                    std::uint64_t budget);

}  // namespace qea

#endif  // QEA_WITNESS_HPP
