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

#include "qea/nondiag.hpp"

#include <stdexcept>

namespace qea {

EnlargedBase::EnlargedBase(BaseSpec base, int extra_points)
    : original(std::move(base)), extra(extra_points) {
  if (extra < 0) throw std::invalid_argument("negative enlargement");
}

BaseSpec EnlargedBase::enlarged() const {
  std::vector<int> sizes = original.sizes;
  sizes[0] += extra;
  return BaseSpec(sizes);
}

int EnlargedBase::enlarged_universe() const {
  return original.universe() + extra;
}

std::vector<int> EnlargedBase::retraction() const {
  // W's labels: block 0 keeps U_0's labels first, then the fresh points,
  // then every remaining block shifted by `extra`. Fresh points retract
  // onto the first element of block 0.
  std::vector<int> t(static_cast<std::size_t>(enlarged_universe()));
  const int u0 = original.sizes[0];
  for (int wl = 0; wl < enlarged_universe(); ++wl) {
    if (wl < u0)
      t[static_cast<std::size_t>(wl)] = wl;
    else if (wl < u0 + extra)
      t[static_cast<std::size_t>(wl)] = 0;
    else
      t[static_cast<std::size_t>(wl)] = wl - extra;
  }
  return t;
}

Bits lift(const SeqSpace& wspace, const EnlargedBase& eb,
          const SeqSpace& uspace, const Bits& x) {
  if (x.size() != uspace.points())
    throw DimensionError("lift argument lives in the wrong space");
  if (wspace.dim() != uspace.dim())
    throw DimensionError("spaces differ in dimension");
  const std::vector<int> t = eb.retraction();
  Bits out(wspace.points());
  std::vector<int> seq(static_cast<std::size_t>(wspace.dim()));
  for (std::size_t p = 0; p < wspace.points(); ++p) {
    for (int i = 0; i < wspace.dim(); ++i)
      seq[static_cast<std::size_t>(i)] =
          t[static_cast<std::size_t>(wspace.coord(p, i))];
    if (x.test(uspace.encode(seq))) out.set(p);
  }
  return out;
}

DiagonalFreeRep diagonal_free_representation(
    std::shared_ptr<const SplitAlgebra> s, const EnlargedBase& eb) {
  const int m = s->spec().m;
  const BaseSpec wbase = eb.enlarged();
  for (int b = 0; b < wbase.dim(); ++b)
    if (wbase.sizes[static_cast<std::size_t>(b)] < m + 1)
      throw std::invalid_argument(
          "every enlarged block needs at least m+1 points");
  if (wbase.dim() != s->dim())
    throw DimensionError("enlarged base has the wrong dimension");

  const SeqSpace& usp = s->base().space();
  auto wsp = std::make_shared<const SeqSpace>(wbase.dim(), wbase.universe());
  auto tgt = std::make_shared<const PowersetAlgebra>(wsp, s->subst_bound());

  // A real partition of the lifted R into m+1 pieces with full
  // cylindrifications; its substitution copies partition every lifted
  // s_tau(R) the same way.
  RealPartition rp = real_partition(*wsp, wbase.block_lists(), m + 1);

  const auto& group = s->group();
  Homomorphism h;
  h.source = s;
  h.target = tgt;
  for (std::size_t a = 0; a < s->atom_count(); ++a) {
    h.domain_atoms.push_back(s->atom(a));
    if (s->is_named(a)) {
      auto [pi, j] = s->name_of(a);
      h.images.push_back(wsp->subst(
          group[static_cast<std::size_t>(pi)],
          rp.pieces[static_cast<std::size_t>(j)]));
    } else {
      h.images.push_back(
          lift(*wsp, eb, usp, s->base().atoms()[s->base_atom_of(a)]));
    }
  }
  OpSubset ops = OpSubset::full(s->dim(), s->subst_bound());
  for (int i = 0; i < s->dim(); ++i)
    for (int j = 0; j < s->dim(); ++j)
      if (i != j) ops.replacements.emplace_back(i, j);
  h.ops = ops;  // diagonals stay declared: their failure is the point
  h.injective = true;
  h.label = "diagonal-free representation";

  DiagonalFreeRep rep;
  rep.hom = std::move(h);
  rep.partition = std::move(rp);
  rep.target = tgt;
  rep.wspace = wsp;
  return rep;
}

}  // namespace qea
