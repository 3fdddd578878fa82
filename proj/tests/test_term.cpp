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

#include "qea/setalg.hpp"
#include "qea/term.hpp"

using namespace qea;

TEST_CASE("constants and leaves") {
  CHECK(parse_term("d(0,1)", 3, 2) == Term::diag(0, 1));
  CHECK(parse_term("0", 3, 2) == Term::zero());
  CHECK(parse_term("1", 3, 2) == Term::one());
  CHECK(parse_term("x7", 3, 2) == Term::var(7));
}

TEST_CASE("the derived replacement body parses") {
  const Term t = parse_term("c0(x0 * -d(0,1))", 3, 2);
  const Term expect = Term::cyl(
      0, Term::times(Term::var(0), Term::complement(Term::diag(0, 1))));
  CHECK(t == expect);
}

TEST_CASE("precedence and parentheses") {
  // '*' binds tighter than '+'; '-' tighter than both.
  const Term t = parse_term("x0 + x1 * -x2", 3, 2);
  CHECK(t == Term::plus(Term::var(0),
                        Term::times(Term::var(1),
                                    Term::complement(Term::var(2)))));
  const Term u = parse_term("(x0 + x1) * x2", 3, 2);
  CHECK(u == Term::times(Term::plus(Term::var(0), Term::var(1)),
                         Term::var(2)));
}

TEST_CASE("transposition lists compose") {
  const Term t = parse_term("s[0,1][1,2](x0)", 3, 3);
  const Perm expect =
      Perm::transposition(3, 0, 1) * Perm::transposition(3, 1, 2);
  CHECK(t.kind == Term::Kind::Subst);
  CHECK(t.perm == expect);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_term("x0 +", 3, 2), ParseError);
  CHECK_THROWS_AS(parse_term("c5(x0)", 3, 2), ParseError);   // index >= dim
  CHECK_THROWS_AS(parse_term("d(0,3)", 3, 2), ParseError);   // index >= dim
  CHECK_THROWS_AS(parse_term("s[0,2](x0)", 3, 2), ParseError);  // perm bound
  CHECK_THROWS_AS(parse_term("x0 x1", 3, 2), ParseError);
  try {
    parse_term("c0(x0", 3, 2);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 5);  // end of input
  }
}

TEST_CASE("double transposition evaluates to the argument") {
  BaseSpec base({2, 2});
  auto sp = std::make_shared<const SeqSpace>(2, base.universe());
  PowersetAlgebra alg(sp, 2);
  const Term twice = parse_term("s[0,1](s[0,1](x0))", 2, 2);
  const Term x0 = Term::var(0);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 32; ++it) {
    Bits x(sp->points());
    for (std::size_t p = 0; p < sp->points(); ++p)
      if (rng() & 1u) x.set(p);
    std::vector<Bits> asg{x};
    CHECK(eval(twice, asg, alg) == eval(x0, asg, alg));
  }
}

TEST_CASE("replacement term shapes") {
  CHECK(replacement_term(1, 0, Term::var(0)) ==
        Term::cyl(1, Term::times(Term::diag(1, 0), Term::var(0))));
  CHECK(replacement_term(2, 2, Term::var(0)) == Term::var(0));
}

TEST_CASE("replacement term matches the concrete preimage") {
  // Against the brute-force definition: the set of sequences landing in x
  // once coordinate 1 is overwritten by coordinate 0's value.
  BaseSpec base({2, 1, 1});
  auto sp = std::make_shared<const SeqSpace>(3, base.universe());
  PowersetAlgebra alg(sp, 2);
  std::mt19937_64 rng(13);
  const Term repl = replacement_term(1, 0, Term::var(0));
  for (int it = 0; it < 32; ++it) {
    Bits x(sp->points());
    for (std::size_t p = 0; p < sp->points(); ++p)
      if (rng() & 1u) x.set(p);
    std::vector<Bits> asg{x};
    const Bits got = eval(repl, asg, alg);
    Bits expect(sp->points());
    for (std::size_t p = 0; p < sp->points(); ++p) {
      auto seq = sp->decode(p);
      seq[1] = seq[0];
      if (x.test(sp->encode(seq))) expect.set(p);
    }
    CHECK(got == expect);
  }
}

namespace {

Term random_term(std::mt19937_64& rng, int depth, int dim, int bound) {
  const int pick = depth <= 0 ? static_cast<int>(rng() % 4)
                              : static_cast<int>(rng() % 9);
  switch (pick) {
    case 0:
      return Term::var(static_cast<int>(rng() % 3));
    case 1:
      return Term::zero();
    case 2:
      return Term::one();
    case 3: {
      const int i = static_cast<int>(rng() % dim);
      const int j = static_cast<int>(rng() % dim);
      return Term::diag(i, j);
    }
    case 4:
      return Term::complement(random_term(rng, depth - 1, dim, bound));
    case 5:
      return Term::cyl(static_cast<int>(rng() % dim),
                       random_term(rng, depth - 1, dim, bound));
    case 6: {
      const auto g = symmetric_group(bound);
      // Printing drops identity substitutions, so generate moved perms only.
      const Perm p = g[1 + rng() % (g.size() - 1)];
      return Term::subst(p, random_term(rng, depth - 1, dim, bound));
    }
    case 7:
      return Term::plus(random_term(rng, depth - 1, dim, bound),
                        random_term(rng, depth - 1, dim, bound));
    default:
      return Term::times(random_term(rng, depth - 1, dim, bound),
                         random_term(rng, depth - 1, dim, bound));
  }
}

}  // namespace

TEST_CASE("print/parse round-trip on generated terms") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 500; ++it) {
    const Term t = random_term(rng, 5, 4, 3);
    const std::string s = to_string(t);
    CAPTURE(s);
    CHECK(parse_term(s, 4, 3) == t);
  }
}

TEST_CASE("evaluation is a homomorphism in the boolean connectives") {
  BaseSpec base({2, 2});
  auto sp = std::make_shared<const SeqSpace>(2, base.universe());
  PowersetAlgebra alg(sp, 2);
  std::mt19937_64 rng(99);
  const Term sum = Term::plus(Term::var(0), Term::var(1));
  for (int it = 0; it < 32; ++it) {
    Bits x(sp->points()), y(sp->points());
    for (std::size_t p = 0; p < sp->points(); ++p) {
      if (rng() & 1u) x.set(p);
      if (rng() & 1u) y.set(p);
    }
    std::vector<Bits> asg{x, y};
    CHECK(eval(sum, asg, alg) == (x | y));
  }
}

TEST_CASE("evaluation errors") {
  BaseSpec base({2, 2});
  auto sp = std::make_shared<const SeqSpace>(2, base.universe());
  PowersetAlgebra alg(sp, 1);
  std::vector<Bits> empty_asg;
  CHECK_THROWS_AS(eval(Term::var(0), empty_asg, alg), EvalError);
  std::vector<Bits> asg{sp->full_set()};
  // Substitution beyond the algebra's bound.
  const Term t = Term::subst(Perm::transposition(2, 0, 1), Term::var(0));
  CHECK_THROWS_AS(eval(t, asg, alg), DimensionError);
  // Top evaluates with no assignment.
  CHECK(eval(Term::one(), empty_asg, alg) == sp->full_set());
}
