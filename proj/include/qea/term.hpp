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

#ifndef QEA_TERM_HPP
#define QEA_TERM_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qea/perm.hpp"

namespace qea {

/// Term over the quasipolyadic-equality signature:
/// variables, 0, 1, d_ij, +, *, complement, c_i, s_tau (tau a finite
/// permutation). Terms are immutable values.
struct Term {
  enum class Kind { Var, Zero, One, Diag, Compl, Cyl, Subst, Plus, Times };

  Kind kind = Kind::Zero;
  int a = 0;  // variable index, diag i, cyl i
  int b = 0;  // diag j
  Perm perm;  // Subst only
  std::vector<Term> kids;

  static Term var(int v);
  static Term zero();
  static Term one();
  static Term diag(int i, int j);
  static Term complement(Term t);
  static Term cyl(int i, Term t);
  static Term subst(Perm p, Term t);
  static Term plus(Term l, Term r);
  static Term times(Term l, Term r);

  bool operator==(const Term& o) const;

  int max_dim_index() const;   // largest i used by any d_ij / c_i / s_tau
  int variable_count() const;  // 1 + largest variable index (0 if none)
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
};

/// Parses the concrete grammar
///   expr   := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | atom
///   atom   := '0' | '1' | 'x' nat | 'd(' i ',' j ')' | 'c' i '(' expr ')'
///           | 's' ('[' i ',' j ']')+ '(' expr ')' | '(' expr ')'
/// Whitespace is insignificant; '*' binds tighter than '+'. A transposition
/// list s[a,b][c,d](t) denotes a single substitution by the composite
/// permutation (rightmost transposition applied first). Indices of d and c
/// must lie below `dimension`; transposition entries below `bound`.
Term parse_term(std::string_view text, int dimension, int bound);

/// Canonical printing; parse_term(to_string(t)) == t whenever t contains no
/// identity substitution node (the printer drops those).
std::string to_string(const Term& t);

/// The replacement substitution as a derived term: c_i(d_ij * body) for
/// i != j, body itself for i == j. Evaluated on a set algebra this is
/// {s : s with coordinate i overwritten by s_j lies in the body's value}.
Term replacement_term(int i, int j, Term body);

}  // namespace qea

#endif  // QEA_TERM_HPP
