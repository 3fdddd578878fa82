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

#include "qea/algebra.hpp"

#include <random>

namespace qea {

bool Algebra::contains(const Bits& x) const {
  if (x.size() != width()) return false;
  Bits acc(width());
  for (std::size_t k = 0; k < atom_count(); ++k) {
    Bits a = atom(k);
    if (a.intersects(x)) {
      if (!a.subset_of(x)) return false;
      acc |= a;
    }
  }
  return acc == x;
}

void Algebra::check_dim_index(int i) const {
  if (i < 0 || i >= dim())
    throw DimensionError("index " + std::to_string(i) +
                         " not below dimension " + std::to_string(dim()));
}

void Algebra::check_subst(const Perm& p) const {
  if (p.support() > subst_bound())
    throw DimensionError("permutation " + p.to_string() +
                         " exceeds substitution bound " +
                         std::to_string(subst_bound()));
}

Bits eval(const Term& t, std::span<const Bits> assignment, const Algebra& a) {
  switch (t.kind) {
    case Term::Kind::Var: {
      if (t.a < 0 || static_cast<std::size_t>(t.a) >= assignment.size())
        throw EvalError("variable x" + std::to_string(t.a) + " unassigned");
      const Bits& v = assignment[static_cast<std::size_t>(t.a)];
      if (v.size() != a.width())
        throw EvalError("assigned element width mismatch for x" +
                        std::to_string(t.a));
      return v;
    }
    case Term::Kind::Zero:
      return a.bottom();
    case Term::Kind::One:
      return a.top();
    case Term::Kind::Diag:
      return a.diag(t.a, t.b);
    case Term::Kind::Compl:
      return a.complement(eval(t.kids[0], assignment, a));
    case Term::Kind::Cyl:
      return a.cyl(t.a, eval(t.kids[0], assignment, a));
    case Term::Kind::Subst:
      return a.subst(t.perm, eval(t.kids[0], assignment, a));
    case Term::Kind::Plus:
      return eval(t.kids[0], assignment, a) | eval(t.kids[1], assignment, a);
    case Term::Kind::Times:
      return eval(t.kids[0], assignment, a) & eval(t.kids[1], assignment, a);
  }
  throw EvalError("corrupt term");
}

namespace {

Bits element_from_mask(const Algebra& a, std::uint64_t mask) {
  Bits x(a.width());
  for (std::size_t k = 0; k < a.atom_count(); ++k)
    if ((mask >> k) & 1u) x |= a.atom(k);
  return x;
}

Bits random_element(const Algebra& a, std::mt19937_64& rng) {
  Bits x(a.width());
  for (std::size_t k = 0; k < a.atom_count(); ++k)
    if (rng() & 1u) x |= a.atom(k);
  return x;
}

template <typename Pred>
Verdict run_check(const Algebra& a, int vars, const Strategy& strategy,
                  Pred&& holds_at) {
  Verdict v;
  if (vars == 0) {
    // Constant terms: a single evaluation decides.
    std::vector<Bits> none;
    v.exhaustive = true;
    v.cases = 1;
    v.holds = holds_at(none);
    return v;
  }
  if (std::holds_alternative<Exhaustive>(strategy)) {
    const auto cap = std::get<Exhaustive>(strategy).cap;
    const std::size_t atoms = a.atom_count();
    if (atoms * static_cast<std::size_t>(vars) >= 63)
      throw CapExceeded("exhaustive equation check infeasible", atoms);
    std::uint64_t total = 1;
    for (int i = 0; i < vars; ++i) total <<= atoms;
    if (total > cap)
      throw CapExceeded("exhaustive equation check over cap",
                        static_cast<std::size_t>(total));
    std::vector<Bits> asg(static_cast<std::size_t>(vars));
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (int i = 0; i < vars; ++i) {
        asg[static_cast<std::size_t>(i)] =
            element_from_mask(a, c & ((std::uint64_t{1} << atoms) - 1));
        c >>= atoms;
      }
      ++v.cases;
      if (!holds_at(asg)) {
        v.holds = false;
        v.counter = asg;
        return v;
      }
    }
    v.holds = true;
    v.exhaustive = true;
    return v;
  }
  const auto& s = std::get<Sampled>(strategy);
  std::mt19937_64 rng(s.seed);
  std::vector<Bits> asg(static_cast<std::size_t>(vars));
  for (int it = 0; it < s.count; ++it) {
    for (int i = 0; i < vars; ++i)
      asg[static_cast<std::size_t>(i)] = random_element(a, rng);
    ++v.cases;
    if (!holds_at(asg)) {
      v.holds = false;
      v.counter = asg;
      return v;
    }
  }
  v.holds = true;
  v.exhaustive = false;
  return v;
}

}  // namespace

Verdict check_equation(const Term& lhs, const Term& rhs, const Algebra& a,
                       const Strategy& strategy) {
  const int vars = std::max(lhs.variable_count(), rhs.variable_count());
  return run_check(a, vars, strategy, [&](std::span<const Bits> asg) {
    return eval(lhs, asg, a) == eval(rhs, asg, a);
  });
}

Verdict check_quasi(const Term& pl, const Term& pr, const Term& cl,
                    const Term& cr, const Algebra& a,
                    const Strategy& strategy) {
  int vars = std::max(pl.variable_count(), pr.variable_count());
  vars = std::max(vars, cl.variable_count());
  vars = std::max(vars, cr.variable_count());
  return run_check(a, vars, strategy, [&](std::span<const Bits> asg) {
    Bits l = eval(pl, asg, a);
    if (!l.subset_of(eval(pr, asg, a))) return true;  // premise fails
    return eval(cl, asg, a).subset_of(eval(cr, asg, a));
  });
}

}  // namespace qea
