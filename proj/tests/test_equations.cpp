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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qea/splitting.hpp"
#include "qea/witness.hpp"

using namespace qea;

namespace {

const Term x0 = Term::var(0);

std::shared_ptr<const GeneratedAlgebra> diag_algebra() {
  // d=3 over a 4-point base: the diagonal-generated subalgebra of a 64-point
  // space; 5 atoms, 32 elements, small enough for exhaustive checks.
  BaseSpec base({2, 1, 1});
  auto sp = std::make_shared<const SeqSpace>(3, base.universe());
  return GeneratedAlgebra::generate(sp, 2, {});
}

}  // namespace

TEST_CASE("meet idempotence holds everywhere") {
  auto a = diag_algebra();
  Verdict v = check_equation(Term::times(x0, x0), x0, *a, Exhaustive{});
  CHECK(v.holds);
  CHECK(v.exhaustive);
  CHECK(v.cases == 32);
}

TEST_CASE("cylindrification idempotence, exhaustively, against brute force") {
  auto a = diag_algebra();
  // Independent route: extensional double application on every element.
  for (const Bits& x : a->all_elements()) {
    CHECK(a->cyl(0, a->cyl(0, x)) == a->cyl(0, x));
  }
  Verdict v = check_equation(Term::cyl(0, Term::cyl(0, x0)),
                             Term::cyl(0, x0), *a, Exhaustive{});
  CHECK(v.holds);
  CHECK(v.exhaustive);
}

TEST_CASE("a failing equation returns a counter-assignment") {
  auto a = diag_algebra();
  Verdict v = check_equation(Term::cyl(0, x0), x0, *a, Exhaustive{});
  CHECK(!v.holds);
  REQUIRE(v.counter.size() == 1);
  // The counterexample really falsifies the equation.
  CHECK(a->cyl(0, v.counter[0]) != v.counter[0]);
}

TEST_CASE("constant equations evaluate once") {
  auto a = diag_algebra();
  Verdict v =
      check_equation(Term::diag(0, 0), Term::one(), *a, Exhaustive{});
  CHECK(v.holds);
  CHECK(v.cases == 1);
}

TEST_CASE("exhaustive checking respects the cap") {
  BaseSpec base({2, 2, 2});
  auto sp = std::make_shared<const SeqSpace>(3, base.universe());
  auto a = GeneratedAlgebra::generate(sp, 2, {product_r(*sp, base)});
  // 2^54 assignments per variable: must refuse, not grind.
  CHECK_THROWS_AS(check_equation(x0, x0, *a, Exhaustive{}), CapExceeded);
}

TEST_CASE("sampled verdicts are labeled non-exhaustive") {
  BaseSpec base({2, 2, 2});
  auto sp = std::make_shared<const SeqSpace>(3, base.universe());
  auto a = GeneratedAlgebra::generate(sp, 2, {product_r(*sp, base)});
  Verdict v = check_equation(Term::times(x0, x0), x0, *a, Sampled{50, 9});
  CHECK(v.holds);
  CHECK(!v.exhaustive);
  CHECK(v.cases == 50);
}

TEST_CASE("quasi-equation on the split algebra") {
  BaseSpec base({2, 2, 2});
  auto sp = std::make_shared<const SeqSpace>(3, base.universe());
  Bits r = product_r(*sp, base);
  auto a = GeneratedAlgebra::generate(sp, 2, {r});
  auto s = split(SplitSpec{a, r, 2, 2, 1});

  // x <= -d(0,1) forces the replacement moving 1 onto 0 to vanish.
  Verdict v = check_quasi(x0, Term::complement(Term::diag(0, 1)),
                          replacement_term(1, 0, x0), Term::zero(), *s,
                          Sampled{300, 11});
  CHECK(v.holds);

  // The same premise does not force x itself to vanish; the checker can
  // falsify quasi-equations too (exhaustively, on a small algebra where
  // premise-satisfying nonzero elements exist).
  auto d = diag_algebra();
  Verdict w = check_quasi(x0, Term::complement(Term::diag(0, 1)), x0,
                          Term::zero(), *d, Exhaustive{});
  CHECK(!w.holds);
  REQUIRE(w.counter.size() == 1);
  CHECK(w.counter[0].any());
}

TEST_CASE("substitution composition at term level matches the algebra") {
  BaseSpec base({2, 2, 2});
  auto sp = std::make_shared<const SeqSpace>(3, base.universe());
  PowersetAlgebra alg(sp, 3);
  const auto group = symmetric_group(3);
  std::mt19937_64 rng(77);
  for (const Perm& s : group)
    for (const Perm& t : group) {
      const Term nested = Term::subst(s, Term::subst(t, x0));
      const Term flat = Term::subst(s * t, x0);
      for (int it = 0; it < 6; ++it) {
        Bits x(sp->points());
        for (std::size_t p = 0; p < sp->points(); ++p)
          if (rng() & 1u) x.set(p);
        std::vector<Bits> asg{x};
        CHECK(eval(nested, asg, alg) == eval(flat, asg, alg));
      }
    }
}
