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

#include "qea/nondiag.hpp"

using namespace qea;

namespace {

struct Setup {
  BaseSpec base{std::vector<int>{2, 3, 3}};  // block 0 of size m, others m+1
  std::shared_ptr<const SeqSpace> usp;
  Bits r;
  std::shared_ptr<const GeneratedAlgebra> a;
  std::shared_ptr<const SplitAlgebra> s;
  EnlargedBase eb{BaseSpec{std::vector<int>{2, 3, 3}}, 1};
  std::shared_ptr<const SeqSpace> wsp;

  Setup() {
    usp = std::make_shared<const SeqSpace>(3, base.universe());
    r = product_r(*usp, base);
    a = GeneratedAlgebra::generate(usp, 2, {r});
    s = split(SplitSpec{a, r, 2, 2, 1});
    wsp = std::make_shared<const SeqSpace>(3, eb.enlarged_universe());
  }
};

}  // namespace

TEST_CASE("enlargement layout and retraction") {
  EnlargedBase eb(BaseSpec({2, 3, 3}), 1);
  CHECK(eb.enlarged_universe() == 9);
  const BaseSpec w = eb.enlarged();
  CHECK(w.sizes == std::vector<int>{3, 3, 3});
  const auto t = eb.retraction();
  // Identity on the original labels (shifted blocks), fresh points onto the
  // first element of block 0.
  CHECK(t[0] == 0);
  CHECK(t[1] == 1);
  CHECK(t[2] == 0);   // the fresh point
  CHECK(t[3] == 2);   // first element of block 1, shifted by one
  CHECK(t[8] == 7);
}

TEST_CASE("lift basics") {
  Setup st;
  CHECK(lift(*st.wsp, st.eb, *st.usp, st.usp->empty_set()).none());
  CHECK(lift(*st.wsp, st.eb, *st.usp, st.usp->full_set()) ==
        st.wsp->full_set());

  // The lift of the block product is the product of the enlarged blocks.
  const Bits lifted_r = lift(*st.wsp, st.eb, *st.usp, st.r);
  CHECK(lifted_r == product_of_blocks(*st.wsp, st.eb.enlarged().block_lists()));
  CHECK(lifted_r.count() == 27);
}

TEST_CASE("lift preserves operations but not diagonals") {
  Setup st;
  std::mt19937_64 rng(17);
  for (int it = 0; it < 12; ++it) {
    Bits x(st.usp->points());
    for (std::size_t p = 0; p < st.usp->points(); ++p)
      if (rng() & 1u) x.set(p);
    const Bits lx = lift(*st.wsp, st.eb, *st.usp, x);
    for (int i = 0; i < 3; ++i)
      CHECK(lift(*st.wsp, st.eb, *st.usp, st.usp->cyl(i, x)) ==
            st.wsp->cyl(i, lx));
    const Perm t01 = Perm::transposition(2, 0, 1);
    CHECK(lift(*st.wsp, st.eb, *st.usp, st.usp->subst(t01, x)) ==
          st.wsp->subst(t01, lx));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(lift(*st.wsp, st.eb, *st.usp, st.usp->replacement(i, j, x)) ==
              st.wsp->replacement(i, j, lx));
  }

  // The lifted diagonal strictly exceeds the target diagonal: a fresh point
  // and its retract are distinct but identified by the retraction.
  const Bits ld = lift(*st.wsp, st.eb, *st.usp, st.usp->diag(0, 1));
  const Bits wd = st.wsp->diag(0, 1);
  CHECK(ld != wd);
  CHECK(wd.subset_of(ld));
  const Bits extra = ld.minus(wd);
  CHECK(extra.any());
  const auto pt = st.wsp->decode(static_cast<std::size_t>(extra.first()));
  CHECK(pt[0] != pt[1]);
  const auto t = st.eb.retraction();
  CHECK(t[static_cast<std::size_t>(pt[0])] ==
        t[static_cast<std::size_t>(pt[1])]);
}

TEST_CASE("diagonal-free representation at tiny parameters") {
  Setup st;
  DiagonalFreeRep rep = diagonal_free_representation(st.s, st.eb);
  VerificationRecord rec = verify_hom(rep.hom);

  CHECK(rec.passed("domain"));
  CHECK(rec.passed("boolean"));
  CHECK(rec.passed("injective"));
  CHECK(rec.passed("cyl["));
  CHECK(rec.passed("subst["));
  CHECK(rec.passed("repl["));

  int diag_failures = 0;
  for (const auto& e : rec.entries)
    if (e.law.rfind("diag[", 0) == 0 && !e.pass) ++diag_failures;
  CHECK(diag_failures > 0);

  // The embedded base maps to its lift; the parts map to substitution
  // copies of the pieces.
  for (const Bits& atom : st.a->atoms())
    CHECK(rep.hom.apply(st.s->expand(atom)) ==
          lift(*st.wsp, st.eb, *st.usp, atom));
  const auto& group = st.s->group();
  for (std::size_t pi = 0; pi < group.size(); ++pi)
    for (int j = 0; j <= 2; ++j) {
      Bits part(st.s->width());
      part.set(st.s->named_atom(static_cast<int>(pi), j));
      CHECK(rep.hom.apply(part) ==
            st.wsp->subst(group[pi],
                          rep.partition.pieces[static_cast<std::size_t>(j)]));
    }
}

TEST_CASE("replacement vanishes on parts and lifts on base elements") {
  Setup st;
  DiagonalFreeRep rep = diagonal_free_representation(st.s, st.eb);
  // Parts sit below every complemented diagonal, so the replacement kills
  // them on both sides.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Bits part(st.s->width());
      part.set(st.s->named_atom(0, 0));
      CHECK(st.s->replacement(i, j, part).none());
      CHECK(st.wsp->replacement(i, j, rep.hom.apply(part)).none());
    }
  // On embedded base elements the two routes agree.
  for (const Bits& atom : st.a->atoms()) {
    const Bits img = rep.hom.apply(st.s->expand(atom));
    CHECK(rep.hom.apply(st.s->replacement(1, 0, st.s->expand(atom))) ==
          st.wsp->replacement(1, 0, img));
  }
}

TEST_CASE("additivity spot check") {
  Setup st;
  DiagonalFreeRep rep = diagonal_free_representation(st.s, st.eb);
  std::mt19937_64 rng(23);
  for (int it = 0; it < 24; ++it) {
    Bits x(st.s->width()), y(st.s->width());
    for (std::size_t a = 0; a < st.s->atom_count(); ++a) {
      if (rng() & 1u) x.set(a);
      if (rng() & 1u) y.set(a);
    }
    CHECK(rep.hom.apply(x | y) == (rep.hom.apply(x) | rep.hom.apply(y)));
  }
}

TEST_CASE("blocks below m+1 are rejected") {
  BaseSpec small({2, 2, 3});  // block 1 too small for m+1 = 3 pieces
  auto usp = std::make_shared<const SeqSpace>(3, small.universe());
  Bits r = product_r(*usp, small);
  auto a = GeneratedAlgebra::generate(usp, 2, {r});
  auto s = split(SplitSpec{a, r, 2, 2, 1});
  CHECK_THROWS(diagonal_free_representation(s, EnlargedBase(small, 1)));
}
