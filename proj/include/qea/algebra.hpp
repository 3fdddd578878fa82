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

#ifndef QEA_ALGEBRA_HPP
#define QEA_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qea/bits.hpp"
#include "qea/perm.hpp"
#include "qea/term.hpp"

namespace qea {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  std::size_t reached;
  CapExceeded(const std::string& what, std::size_t n)
      : std::runtime_error(what + " (size reached: " + std::to_string(n) + ")"),
        reached(n) {}
};

/// A finite atomic algebra of the quasipolyadic-equality signature.
///
/// Elements are Bits of a fixed width; the element universe is the set of
/// unions of the algebra's atoms (for powerset-style algebras the atoms are
/// singletons and every Bits of the right width is an element). All
/// implementations are immutable after construction and freely shareable.
class Algebra {
 public:
  virtual ~Algebra() = default;

  virtual int dim() const = 0;
  virtual int subst_bound() const = 0;
  virtual std::size_t width() const = 0;
  virtual Bits top() const = 0;

  virtual Bits cyl(int i, const Bits& x) const = 0;
  virtual Bits diag(int i, int j) const = 0;
  virtual Bits subst(const Perm& p, const Bits& x) const = 0;

  /// The replacement operation moving coordinate j's value onto coordinate i.
  /// Term-definable as c_i(d_ij * x) wherever diagonals exist; concrete set
  /// algebras implement it directly so it survives diagonal-free reducts.
  virtual Bits replacement(int i, int j, const Bits& x) const = 0;

  virtual std::size_t atom_count() const = 0;
  virtual Bits atom(std::size_t k) const = 0;

  virtual bool contains(const Bits& x) const;

  virtual std::string describe() const = 0;

  Bits bottom() const { return Bits(width()); }
  Bits complement(const Bits& x) const { return top().minus(x); }

  void check_dim_index(int i) const;
  void check_subst(const Perm& p) const;
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bottom-up term evaluation; pure and deterministic.
Bits eval(const Term& t, std::span<const Bits> assignment, const Algebra& a);

// ---------------------------------------------------------------------------
// Equation checking.

struct Exhaustive {
  std::uint64_t cap = std::uint64_t{1} << 20;  // max assignments
};
struct Sampled {
  int count = 200;
  std::uint64_t seed = 0;
};
using Strategy = std::variant<Exhaustive, Sampled>;

struct Verdict {
  bool holds = false;
  bool exhaustive = false;  // sampled verdicts are labeled non-exhaustive
  std::uint64_t cases = 0;
  std::vector<Bits> counter;  // a falsifying assignment when !holds
};

/// Checks lhs = rhs over assignments of algebra elements to variables.
/// Exhaustive mode enumerates every assignment (elements = atom subsets) and
/// throws CapExceeded when |algebra|^vars exceeds the configured cap.
Verdict check_equation(const Term& lhs, const Term& rhs, const Algebra& a,
                       const Strategy& strategy);

/// Quasi-equation as a pair of inequalities: whenever pl <= pr, require
/// cl <= cr. An inequality u <= v is the equation u*v = u.
Verdict check_quasi(const Term& pl, const Term& pr, const Term& cl,
                    const Term& cr, const Algebra& a,
                    const Strategy& strategy);

}  // namespace qea

#endif  // QEA_ALGEBRA_HPP
