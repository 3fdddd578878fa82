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

#include "qea/splitting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qea {

// ---------------------------------------------------------------------------
// SplitAlgebra

std::string SplitAlgebra::describe() const {
  return "split algebra, " + std::to_string(atom_count()) + " atoms (m=" +
         std::to_string(spec_.m) + ", n=" + std::to_string(spec_.n) + ")";
}

bool SplitAlgebra::is_named(std::size_t atom) const {
  return old_atoms_[atom] == static_cast<std::size_t>(-1);
}

std::size_t SplitAlgebra::named_atom(int perm_idx, int j) const {
  return named_base_[static_cast<std::size_t>(perm_idx) *
                         static_cast<std::size_t>(spec_.m + 1) +
                     static_cast<std::size_t>(j)];
}

std::pair<int, int> SplitAlgebra::name_of(std::size_t atom) const {
  for (std::size_t idx = 0; idx < named_base_.size(); ++idx)
    if (named_base_[idx] == atom)
      return {static_cast<int>(idx / static_cast<std::size_t>(spec_.m + 1)),
              static_cast<int>(idx % static_cast<std::size_t>(spec_.m + 1))};
  throw std::invalid_argument("atom is not a named part");
}

std::size_t SplitAlgebra::base_atom_of(std::size_t atom) const {
  if (is_named(atom)) throw std::invalid_argument("atom is a named part");
  return old_atoms_[atom];
}

std::size_t SplitAlgebra::split_source(int perm_idx) const {
  return source_[static_cast<std::size_t>(perm_idx)];
}

Bits SplitAlgebra::expand_mask(const Bits& base_atom_mask) const {
  Bits out(width());
  for (int a = base_atom_mask.first(); a >= 0; a = base_atom_mask.next(a)) {
    const int s = base_to_split_[static_cast<std::size_t>(a)];
    if (s >= 0) {
      out.set(static_cast<std::size_t>(s));
      continue;
    }
    // A split source expands to all of its parts.
    for (std::size_t pi = 0; pi < source_.size(); ++pi)
      if (source_[pi] == static_cast<std::size_t>(a))
        for (int j = 0; j <= spec_.m; ++j)
          out.set(named_atom(static_cast<int>(pi), j));
  }
  return out;
}

Bits SplitAlgebra::expand(const Bits& base_element) const {
  return expand_mask(spec_.base->atom_mask(base_element));
}

std::pair<Bits, std::vector<std::size_t>> SplitAlgebra::decompose(
    const Bits& x) const {
  Bits base_mask(spec_.base->atom_count());
  std::vector<std::size_t> leftover;
  for (std::size_t a = 0; a < atom_count(); ++a) {
    if (!x.test(a) || is_named(a)) continue;
    base_mask.set(old_atoms_[a]);
  }
  for (std::size_t pi = 0; pi < source_.size(); ++pi) {
    bool full = true;
    for (int j = 0; j <= spec_.m; ++j)
      if (!x.test(named_atom(static_cast<int>(pi), j))) full = false;
    if (full) {
      base_mask.set(source_[pi]);
    } else {
      for (int j = 0; j <= spec_.m; ++j) {
        const std::size_t na = named_atom(static_cast<int>(pi), j);
        if (x.test(na)) leftover.push_back(na);
      }
    }
  }
  return {spec_.base->from_atom_mask(base_mask), leftover};
}

std::shared_ptr<const SplitAlgebra> split(
    const SplitSpec& spec, std::optional<std::uint64_t> shuffle_seed) {
  const GeneratedAlgebra& base = *spec.base;
  if (spec.m < 0) throw std::invalid_argument("negative split count");
  if (spec.n < 0 || spec.n > base.subst_bound())
    throw DimensionError(
        "split substitution bound exceeds the base algebra's");
  if (!base.is_atom_of(spec.r))
    throw std::invalid_argument("the split target is not an atom");

  const auto group = symmetric_group(spec.n);
  std::vector<std::size_t> source;
  std::vector<Bits> copies;
  for (const Perm& t : group) {
    Bits st = base.subst(t, spec.r);
    for (const Bits& prev : copies)
      if (prev.intersects(st))
        throw std::invalid_argument(
            "substitution copies of the split target are not disjoint");
    Bits mask = base.atom_mask(st);
    if (mask.count() != 1)
      throw std::invalid_argument(
          "a substitution copy of the split target is not an atom");
    source.push_back(static_cast<std::size_t>(mask.first()));
    copies.push_back(std::move(st));
  }

  auto alg = std::shared_ptr<SplitAlgebra>(new SplitAlgebra());
  alg->spec_ = spec;
  alg->source_ = source;

  // Atom enumeration: unsplit base atoms first, then the named parts
  // (group-major, part-minor), optionally shuffled.
  const std::size_t parts =
      group.size() * static_cast<std::size_t>(spec.m + 1);
  std::vector<int> is_source(base.atom_count(), -1);
  for (std::size_t pi = 0; pi < source.size(); ++pi)
    is_source[source[pi]] = static_cast<int>(pi);
  const std::size_t total =
      base.atom_count() - source.size() + parts;

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  alg->old_atoms_.assign(total, static_cast<std::size_t>(-1));
  alg->base_to_split_.assign(base.atom_count(), -1);
  alg->named_base_.assign(parts, 0);
  std::vector<std::string> names(total);
  std::size_t slot = 0;
  for (std::size_t a = 0; a < base.atom_count(); ++a) {
    if (is_source[a] >= 0) continue;
    const std::size_t at = order[slot++];
    alg->old_atoms_[at] = a;
    alg->base_to_split_[a] = static_cast<int>(at);
    names[at] = "a" + std::to_string(a);
  }
  for (std::size_t pi = 0; pi < group.size(); ++pi)
    for (int j = 0; j <= spec.m; ++j) {
      const std::size_t at = order[slot++];
      alg->named_base_[pi * static_cast<std::size_t>(spec.m + 1) +
                       static_cast<std::size_t>(j)] = at;
      names[at] = "s" + group[pi].to_string() + "R" + std::to_string(j);
    }

  alg->bao_ = std::make_unique<FiniteBAO>(base.dim(), spec.n, names);
  FiniteBAO* bao = alg->bao_.get();

  // Operator actions. Parts inherit the cylindrification of their source;
  // everything else is computed in the base algebra and expanded.
  for (int i = 0; i < base.dim(); ++i) {
    for (std::size_t at = 0; at < total; ++at) {
      std::size_t base_atom =
          alg->old_atoms_[at] != static_cast<std::size_t>(-1)
              ? alg->old_atoms_[at]
              : source[static_cast<std::size_t>(alg->name_of(at).first)];
      Bits img = alg->expand_mask(
          base.atom_mask(base.cyl(i, base.atoms()[base_atom])));
      bao->set_cyl(i, at, std::move(img));
    }
  }
  for (std::size_t pi = 0; pi < group.size(); ++pi) {
    const Perm& t = group[pi];
    for (std::size_t at = 0; at < total; ++at) {
      if (alg->old_atoms_[at] != static_cast<std::size_t>(-1)) {
        Bits img = base.atom_mask(
            base.subst(t, base.atoms()[alg->old_atoms_[at]]));
        const int ia = img.first();
        const int st = alg->base_to_split_[static_cast<std::size_t>(ia)];
        if (st < 0)
          throw std::logic_error(
              "substitution image of an unsplit atom is split");
        bao->set_subst(t, at, static_cast<std::size_t>(st));
      } else {
        auto [qi, j] = alg->name_of(at);
        // s_t(s_q R_j) = s_{t*q} R_j.
        const Perm composed = t * group[static_cast<std::size_t>(qi)];
        int ci = -1;
        for (std::size_t g = 0; g < group.size(); ++g)
          if (group[g] == composed) ci = static_cast<int>(g);
        bao->set_subst(t, at, alg->named_atom(ci, j));
      }
    }
  }
  for (int i = 0; i < base.dim(); ++i)
    for (int j = 0; j < base.dim(); ++j)
      bao->set_diag(i, j,
                    alg->expand_mask(base.atom_mask(base.diag(i, j))));

  return alg;
}

Homomorphism embed_old_hom(std::shared_ptr<const SplitAlgebra> s) {
  Homomorphism h;
  h.source = s->spec().base;
  h.target = s;
  for (const Bits& a : s->base().atoms()) {
    h.domain_atoms.push_back(a);
    h.images.push_back(s->expand(a));
  }
  h.ops = OpSubset::full(s->dim(), s->subst_bound());
  h.injective = true;
  h.label = "base embedding";
  return h;
}

Homomorphism split_isomorphism(std::shared_ptr<const SplitAlgebra> s1,
                               std::shared_ptr<const SplitAlgebra> s2) {
  if (s1->spec().base != s2->spec().base || !(s1->spec().r == s2->spec().r) ||
      s1->spec().m != s2->spec().m || s1->spec().n != s2->spec().n)
    throw std::invalid_argument("split algebras built from different specs");
  Homomorphism h;
  h.source = s1;
  h.target = s2;
  for (std::size_t a = 0; a < s1->atom_count(); ++a) {
    h.domain_atoms.push_back(s1->atom(a));
    if (s1->is_named(a)) {
      auto [pi, j] = s1->name_of(a);
      h.images.push_back(
          Bits::single(s2->width(), s2->named_atom(pi, j)));
    } else {
      const int at = static_cast<int>(s1->base_atom_of(a));
      Bits img(s2->width());
      img.set(static_cast<std::size_t>(
          s2->expand_mask(Bits::single(s1->base().atom_count(),
                                       static_cast<std::size_t>(at)))
              .first()));
      h.images.push_back(std::move(img));
    }
  }
  h.ops = OpSubset::full(s1->dim(), s1->subst_bound());
  h.injective = true;
  h.label = "atom-order isomorphism";
  return h;
}

VerificationRecord verify_split(std::shared_ptr<const SplitAlgebra> s) {
  VerificationRecord rec;
  const GeneratedAlgebra& base = s->base();
  const auto& group = s->group();
  const int m = s->spec().m;

  rec.merge(verify_bao(s->bao()), "bao.");

  // R equals the sum of its parts.
  {
    Bits parts(s->width());
    for (int j = 0; j <= m; ++j) parts.set(s->named_atom(0, j));
    rec.add("parts.sum", s->expand(s->spec().r) == parts,
            "expansion of R differs from the join of its parts");
  }

  // Named atoms are pairwise distinct and diagonal-free.
  {
    bool distinct = true;
    std::vector<bool> seen(s->atom_count(), false);
    for (std::size_t pi = 0; pi < group.size() && distinct; ++pi)
      for (int j = 0; j <= m; ++j) {
        const std::size_t at = s->named_atom(static_cast<int>(pi), j);
        if (seen[at]) distinct = false;
        seen[at] = true;
      }
    rec.add("parts.distinct", distinct, "");
    bool diag_free = true;
    std::string w;
    for (int i = 0; i < s->dim() && diag_free; ++i)
      for (int j2 = 0; j2 < s->dim() && diag_free; ++j2) {
        if (i == j2) continue;
        Bits d = s->diag(i, j2);
        for (std::size_t pi = 0; pi < group.size() && diag_free; ++pi)
          for (int j = 0; j <= m; ++j)
            if (d.test(s->named_atom(static_cast<int>(pi), j))) {
              diag_free = false;
              w = "part below d(" + std::to_string(i) + "," +
                  std::to_string(j2) + ")";
            }
      }
    rec.add("parts.diagonal_free", diag_free, w);
  }

  // Every part inherits the cylindrification of its source:
  // c_i(s_tau R_j) = c_i(s_tau R), re-derived from the base algebra.
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < s->dim() && ok; ++i)
      for (std::size_t pi = 0; pi < group.size() && ok; ++pi) {
        Bits expect = s->expand(
            base.cyl(i, base.atoms()[s->split_source(static_cast<int>(pi))]));
        for (int j = 0; j <= m && ok; ++j) {
          Bits got =
              s->cyl(i, s->atom(s->named_atom(static_cast<int>(pi), j)));
          if (got != expect) {
            ok = false;
            w = "c" + std::to_string(i) + " of part (" +
                group[pi].to_string() + "," + std::to_string(j) + ")";
          }
        }
      }
    rec.add("parts.cyl_inherited", ok, w);
  }

  // Substitutions permute the parts: s_sigma(s_tau R_j) = s_{sigma tau} R_j.
  {
    bool ok = true;
    std::string w;
    for (std::size_t si = 0; si < group.size() && ok; ++si)
      for (std::size_t pi = 0; pi < group.size() && ok; ++pi)
        for (int j = 0; j <= m && ok; ++j) {
          Bits got = s->subst(
              group[si], s->atom(s->named_atom(static_cast<int>(pi), j)));
          const Perm comp = group[si] * group[pi];
          int ci = -1;
          for (std::size_t g = 0; g < group.size(); ++g)
            if (group[g] == comp) ci = static_cast<int>(g);
          if (got != s->atom(s->named_atom(ci, j))) {
            ok = false;
            w = group[si].to_string() + " on part (" + group[pi].to_string() +
                "," + std::to_string(j) + ")";
          }
        }
    rec.add("parts.subst_action", ok, w);
  }

  // The base algebra embeds; complete over its atoms.
  rec.merge(verify_hom(embed_old_hom(s)), "embed.");

  // Decomposition is exact on a spread of elements: every atom set splits
  // into a base element plus named parts and recombines.
  {
    bool ok = true;
    std::string w;
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 64 && ok; ++it) {
      Bits x(s->width());
      for (std::size_t a = 0; a < s->atom_count(); ++a)
        if (rng() & 1u) x.set(a);
      auto [a, leftover] = s->decompose(x);
      Bits back = s->expand(a);
      for (std::size_t na : leftover) back.set(na);
      if (back != x) {
        ok = false;
        w = "element " + x.to_string();
      }
    }
    rec.add("decompose.recompose", ok, w);
  }
  return rec;
}

VerificationRecord diag_quasi_persistence(const SplitAlgebra& s) {
  VerificationRecord rec;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) {
      if (i == j) continue;
      // For every atom a <= -d_ij the replacement moving j onto i kills a;
      // additivity extends this to every element below -d_ij.
      Bits allowed = s.complement(s.diag(i, j));
      bool ok = true;
      std::string w;
      for (int a = allowed.first(); a >= 0; a = allowed.next(a)) {
        if (!s.replacement(i, j, s.atom(static_cast<std::size_t>(a))).none()) {
          ok = false;
          w = "atom " + s.bao().atom_name(static_cast<std::size_t>(a));
          break;
        }
      }
      rec.add("quasi.repl[" + std::to_string(i) + "," + std::to_string(j) +
                  "]",
              ok, w);
    }
  return rec;
}

// ---------------------------------------------------------------------------
// Equivalence partition and the merged subalgebra.

int EquivPartition::block_of(int j) const {
  for (std::size_t l = 0; l < blocks.size(); ++l)
    for (int v : blocks[l])
      if (v == j) return static_cast<int>(l);
  throw std::out_of_range("part index outside the partition");
}

std::vector<std::vector<int>> signature_blocks(
    int parts, const std::vector<std::vector<bool>>& membership) {
  std::map<std::vector<bool>, std::vector<int>> by_sig;
  for (int j = 0; j < parts; ++j) {
    std::vector<bool> sig;
    sig.reserve(membership.size());
    for (const auto& row : membership) sig.push_back(row[static_cast<std::size_t>(j)]);
    by_sig[sig].push_back(j);
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [sig, js] : by_sig) blocks.push_back(std::move(js));
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return blocks;
}

EquivPartition equiv_blocks(const SplitAlgebra& s, std::vector<Bits> gens) {
  const int m = s.spec().m;
  const auto& group = s.group();
  std::vector<std::vector<bool>> membership;
  for (const Bits& g : gens) {
    if (g.size() != s.width())
      throw std::invalid_argument("generator does not live in the algebra");
    for (std::size_t pi = 0; pi < group.size(); ++pi) {
      std::vector<bool> row(static_cast<std::size_t>(m + 1));
      for (int j = 0; j <= m; ++j)
        row[static_cast<std::size_t>(j)] =
            g.test(s.named_atom(static_cast<int>(pi), j));
      membership.push_back(std::move(row));
    }
  }
  EquivPartition part;
  part.gens = std::move(gens);
  part.blocks = signature_blocks(m + 1, membership);
  part.over_declared_k =
      static_cast<int>(part.gens.size()) > s.spec().k;
  return part;
}

MergedSubalgebra::MergedSubalgebra(std::shared_ptr<const SplitAlgebra> s,
                                   EquivPartition part)
    : s_(std::move(s)), part_(std::move(part)) {
  for (std::size_t a = 0; a < s_->atom_count(); ++a)
    if (!s_->is_named(a)) minimal_.push_back(Bits::single(s_->width(), a));
  const auto& group = s_->group();
  for (std::size_t pi = 0; pi < group.size(); ++pi)
    for (const auto& block : part_.blocks) {
      Bits chunk(s_->width());
      for (int j : block) chunk.set(s_->named_atom(static_cast<int>(pi), j));
      minimal_.push_back(std::move(chunk));
    }
}

std::string MergedSubalgebra::describe() const {
  return "merged subalgebra, " + std::to_string(minimal_.size()) +
         " minimal elements, " + std::to_string(part_.p()) + " blocks";
}

Bits MergedSubalgebra::merged_part(int l) const {
  Bits y(s_->width());
  for (int j : part_.blocks[static_cast<std::size_t>(l)])
    y.set(s_->named_atom(0, j));
  return y;
}

std::pair<std::shared_ptr<const MergedSubalgebra>, VerificationRecord>
small_subalgebra(std::shared_ptr<const SplitAlgebra> s, EquivPartition part) {
  auto b = std::make_shared<const MergedSubalgebra>(s, std::move(part));
  VerificationRecord rec;

  bool has_gens = true;
  for (const Bits& g : b->partition().gens)
    if (!b->contains(g)) has_gens = false;
  rec.add("contains.generators", has_gens, "");

  {
    bool ok = true;
    for (const Bits& a : s->base().atoms())
      if (!b->contains(s->expand(a))) ok = false;
    rec.add("contains.base_algebra", ok, "");
  }
  {
    bool ok = true;
    for (int i = 0; i < s->dim() && ok; ++i)
      for (int j = 0; j < s->dim() && ok; ++j)
        if (!b->contains(s->diag(i, j))) ok = false;
    rec.add("contains.diagonals", ok, "");
  }

  // Closure, complete over minimal elements by additivity.
  {
    bool ok = true;
    std::string w;
    for (const Bits& x : b->minimal_elements()) {
      if (!b->contains(s->complement(x))) {
        ok = false;
        w = "complement of " + x.to_string();
        break;
      }
      for (int i = 0; i < s->dim() && ok; ++i)
        if (!b->contains(s->cyl(i, x))) {
          ok = false;
          w = "c" + std::to_string(i) + " of " + x.to_string();
        }
      for (const Perm& t : s->group())
        if (ok && !b->contains(s->subst(t, x))) {
          ok = false;
          w = "s" + t.to_string() + " of " + x.to_string();
        }
      if (!ok) break;
    }
    rec.add("closed.operations", ok, w);
  }

  // Merged parts behave like the original atom under cylindrification.
  {
    bool ok = true;
    std::string w;
    Bits r_exp = s->expand(s->spec().r);
    for (int l = 0; l < b->partition().p() && ok; ++l) {
      Bits y = b->merged_part(l);
      if (!b->contains(y)) {
        ok = false;
        w = "y" + std::to_string(l) + " outside the subalgebra";
        break;
      }
      for (int i = 0; i < s->dim() && ok; ++i)
        if (s->cyl(i, y) != s->cyl(i, r_exp)) {
          ok = false;
          w = "c" + std::to_string(i) + " of y" + std::to_string(l);
        }
    }
    rec.add("merged.cyl_full", ok, w);
  }
  return {b, rec};
}

// ---------------------------------------------------------------------------
// Real partitions.

RealPartition real_partition(
    const SeqSpace& sp, const std::vector<std::vector<int>>& factors, int q,
    std::optional<std::vector<std::vector<int>>> labelings) {
  if (q < 1) throw std::invalid_argument("piece count must be >= 1");
  if (static_cast<int>(factors.size()) != sp.dim())
    throw DimensionError("one factor per coordinate required");
  for (const auto& f : factors)
    if (static_cast<int>(f.size()) < q)
      throw std::invalid_argument(
          "factor of size " + std::to_string(f.size()) +
          " admits no onto labeling into " + std::to_string(q) + " classes");

  RealPartition rp;
  rp.factors = factors;
  rp.q = q;
  rp.target = product_of_blocks(sp, factors);

  if (labelings) {
    rp.labelings = std::move(*labelings);
    if (rp.labelings.size() != factors.size())
      throw std::invalid_argument("one labeling per coordinate required");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (rp.labelings[i].size() != factors[i].size())
        throw std::invalid_argument("labeling length mismatch");
      std::vector<bool> hit(static_cast<std::size_t>(q), false);
      for (int v : rp.labelings[i]) {
        if (v < 0 || v >= q)
          throw std::invalid_argument("labeling value outside Z_q");
        hit[static_cast<std::size_t>(v)] = true;
      }
      for (bool h : hit)
        if (!h) throw std::invalid_argument("labeling not onto Z_q");
    }
  } else {
    // Canonical onto labeling: position mod q; the representative (first
    // element of each factor) is labeled 0.
    for (const auto& f : factors) {
      std::vector<int> lab(f.size());
      for (std::size_t idx = 0; idx < f.size(); ++idx)
        lab[idx] = static_cast<int>(idx) % q;
      rp.labelings.push_back(std::move(lab));
    }
  }

  rp.pieces.assign(static_cast<std::size_t>(q), Bits(sp.points()));
  for (int p = rp.target.first(); p >= 0; p = rp.target.next(p)) {
    int sum = 0;
    for (int i = 0; i < sp.dim(); ++i) {
      const int v = sp.coord(static_cast<std::size_t>(p), i);
      const auto& f = factors[static_cast<std::size_t>(i)];
      const auto it = std::find(f.begin(), f.end(), v);
      sum += rp.labelings[static_cast<std::size_t>(i)]
                         [static_cast<std::size_t>(it - f.begin())];
    }
    rp.pieces[static_cast<std::size_t>(sum % q)].set(
        static_cast<std::size_t>(p));
  }

  // The partition and cylindrification conditions are verified, not assumed.
  Bits un(sp.points());
  bool disjoint = true;
  for (const Bits& piece : rp.pieces) {
    if (un.intersects(piece)) disjoint = false;
    un |= piece;
  }
  rp.checks.add("pieces.partition", disjoint && un == rp.target, "");
  bool nonempty = true;
  for (const Bits& piece : rp.pieces)
    if (piece.none()) nonempty = false;
  rp.checks.add("pieces.nonempty", nonempty, "");
  bool cylfull = true;
  std::string w;
  for (int i = 0; i < sp.dim() && cylfull; ++i) {
    Bits whole = sp.cyl(i, rp.target);
    for (int j = 0; j < q && cylfull; ++j)
      if (sp.cyl(i, rp.pieces[static_cast<std::size_t>(j)]) != whole) {
        cylfull = false;
        w = "c" + std::to_string(i) + " piece " + std::to_string(j);
      }
  }
  rp.checks.add("pieces.cyl_full", cylfull, w);
  if (!rp.checks.ok())
    throw std::logic_error("real partition failed verification: " +
                           rp.checks.first_failure());
  return rp;
}

// ---------------------------------------------------------------------------
// Embeddings.

Homomorphism embed_small(std::shared_ptr<const MergedSubalgebra> b,
                         const RealPartition& rp,
                         std::shared_ptr<const Algebra> target) {
  const SplitAlgebra& s = b->split_algebra();
  const int m = s.spec().m;
  const int p = b->partition().p();
  if (rp.q != m)
    throw std::invalid_argument("real partition must have m pieces");
  if (p > m)
    throw std::invalid_argument("cannot merge " + std::to_string(p) +
                                " blocks into " + std::to_string(m) +
                                " pieces");
  const SeqSpace& sp = s.base().space();
  if (sp.points() != target->width())
    throw DimensionError("target lives in a different space");

  // Piece l for block l, the last block absorbing the remaining pieces.
  std::vector<Bits> piece_of_block;
  for (int l = 0; l < p; ++l) {
    if (l < p - 1) {
      piece_of_block.push_back(rp.pieces[static_cast<std::size_t>(l)]);
    } else {
      Bits rest(sp.points());
      for (int j = p - 1; j < m; ++j)
        rest |= rp.pieces[static_cast<std::size_t>(j)];
      piece_of_block.push_back(std::move(rest));
    }
  }

  const auto& group = s.group();
  Homomorphism h;
  h.source = b;
  h.target = target;
  std::size_t min_idx = 0;
  for (std::size_t a = 0; a < s.atom_count(); ++a) {
    if (s.is_named(a)) continue;
    h.domain_atoms.push_back(b->atom(min_idx++));
    h.images.push_back(s.base().atoms()[s.base_atom_of(a)]);
  }
  for (std::size_t pi = 0; pi < group.size(); ++pi)
    for (int l = 0; l < p; ++l) {
      h.domain_atoms.push_back(b->atom(min_idx++));
      h.images.push_back(
          sp.subst(group[pi], piece_of_block[static_cast<std::size_t>(l)]));
    }
  h.ops = OpSubset::full(s.dim(), s.subst_bound());
  h.injective = true;
  h.label = "merged subalgebra representation";

  for (const Bits& img : h.images)
    if (!target->contains(img))
      throw std::logic_error("image escapes the target algebra");
  return h;
}

std::vector<std::vector<int>> default_chi(int m1, int m2) {
  if (m1 >= m2) throw std::invalid_argument("need m1 < m2");
  const int groups = m1 + 1, items = m2 + 1;
  std::vector<std::vector<int>> chi(static_cast<std::size_t>(groups));
  int next = 0;
  for (int g = 0; g < groups; ++g) {
    int take = items / groups + (g < items % groups ? 1 : 0);
    for (int t = 0; t < take; ++t)
      chi[static_cast<std::size_t>(g)].push_back(next++);
  }
  return chi;
}

Homomorphism embed_split(std::shared_ptr<const SplitAlgebra> s1,
                         std::shared_ptr<const SplitAlgebra> s2,
                         const std::vector<std::vector<int>>& chi) {
  if (s1->spec().base != s2->spec().base || !(s1->spec().r == s2->spec().r))
    throw std::invalid_argument(
        "embeddings require the same base algebra and split target");
  const int m1 = s1->spec().m, m2 = s2->spec().m;
  const int n1 = s1->spec().n, n2 = s2->spec().n;
  if (m1 >= m2 || n1 > n2)
    throw std::invalid_argument("need m1 < m2 and n1 <= n2");
  if (static_cast<int>(chi.size()) != m1 + 1)
    throw std::invalid_argument("chi must cover every source part");
  std::vector<bool> hit(static_cast<std::size_t>(m2 + 1), false);
  for (const auto& grp : chi) {
    if (grp.empty()) throw std::invalid_argument("chi has an empty group");
    for (int v : grp) {
      if (v < 0 || v > m2 || hit[static_cast<std::size_t>(v)])
        throw std::invalid_argument("chi groups must be disjoint in range");
      hit[static_cast<std::size_t>(v)] = true;
    }
  }
  for (bool hv : hit)
    if (!hv) throw std::invalid_argument("chi does not cover every target part");

  const auto& g1 = s1->group();
  const auto& g2 = s2->group();
  auto index2 = [&](const Perm& t) {
    for (std::size_t g = 0; g < g2.size(); ++g)
      if (g2[g] == t) return static_cast<int>(g);
    throw std::logic_error("source substitution missing from the target");
  };

  Homomorphism h;
  h.source = s1;
  h.target = s2;
  for (std::size_t a = 0; a < s1->atom_count(); ++a) {
    h.domain_atoms.push_back(s1->atom(a));
    if (s1->is_named(a)) {
      auto [pi, j] = s1->name_of(a);
      Bits img(s2->width());
      const int pi2 = index2(g1[static_cast<std::size_t>(pi)]);
      for (int i : chi[static_cast<std::size_t>(j)])
        img.set(s2->named_atom(pi2, i));
      h.images.push_back(std::move(img));
    } else {
      // An unsplit source atom: if the finer algebra splits it, it maps to
      // the join of all of its parts, otherwise to itself.
      const std::size_t ba = s1->base_atom_of(a);
      h.images.push_back(s2->expand_mask(
          Bits::single(s1->base().atom_count(), ba)));
    }
  }
  OpSubset ops;
  ops.booleans = true;
  for (int i = 0; i < s1->dim(); ++i) ops.cyls.push_back(i);
  ops.diags = true;
  ops.substs = symmetric_group(n1);
  h.ops = ops;
  h.injective = true;
  h.label = "splitting refinement embedding";
  return h;
}

}  // namespace qea
