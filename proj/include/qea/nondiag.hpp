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

#ifndef QEA_NONDIAG_HPP
#define QEA_NONDIAG_HPP

#include <memory>

#include "qea/splitting.hpp"

namespace qea {

/// A base properly enlarged in block 0: W adds `extra` fresh points to U,
/// all retracting onto the first element of block 0. Sequence spaces over W
/// support the preimage lift of subsets of the U-space, which preserves every
/// operation except the diagonals.
struct EnlargedBase {
  BaseSpec original;
  int extra = 1;

  EnlargedBase(BaseSpec base, int extra_points);

  BaseSpec enlarged() const;                  // W blocks
  int enlarged_universe() const;              // |W|
  std::vector<int> retraction() const;        // W label -> U label
};

/// The preimage of x under the coordinatewise retraction: the set of
/// W-sequences whose retract lies in x.
Bits lift(const SeqSpace& wspace, const EnlargedBase& eb,
          const SeqSpace& uspace, const Bits& x);

struct DiagonalFreeRep {
  Homomorphism hom;  // diagonals declared so their failure is recorded
  RealPartition partition;
  std::shared_ptr<const PowersetAlgebra> target;
  std::shared_ptr<const SeqSpace> wspace;
};

/// Represents a split algebra over the enlarged base preserving the Boolean
/// operations, all cylindrifications, all substitutions and all derived
/// replacements, but not the diagonals: embedded base elements map to their
/// lifts, the part (tau, j) to s_tau of the j-th piece of a real partition
/// of the lifted R into m+1 pieces. Such a partition exists because every
/// enlarged block has at least m+1 points. Requires |W_i| >= m+1 for all i.
DiagonalFreeRep diagonal_free_representation(
    std::shared_ptr<const SplitAlgebra> s, const EnlargedBase& eb);

}  // namespace qea

#endif  // QEA_NONDIAG_HPP
