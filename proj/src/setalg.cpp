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

#include "qea/setalg.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qea {

// ---------------------------------------------------------------------------
// BaseSpec

BaseSpec::BaseSpec(std::vector<int> block_sizes) : sizes(std::move(block_sizes)) {
  if (sizes.empty()) throw std::invalid_argument("base needs at least 1 block");
  for (int s : sizes)
    if (s <= 0) throw std::invalid_argument("blocks must be nonempty");
}

BaseSpec BaseSpec::uniform(int d, int size) {
  return BaseSpec(std::vector<int>(static_cast<std::size_t>(d), size));
}

int BaseSpec::universe() const {
  int u = 0;
  for (int s : sizes) u += s;
  return u;
}

int BaseSpec::offset(int b) const {
  int o = 0;
  for (int i = 0; i < b; ++i) o += sizes[static_cast<std::size_t>(i)];
  return o;
}

int BaseSpec::block_of(int label) const {
  int o = 0;
  for (int b = 0; b < dim(); ++b) {
    o += sizes[static_cast<std::size_t>(b)];
    if (label < o) return b;
  }
  throw std::out_of_range("label outside universe");
}

std::vector<int> BaseSpec::block(int b) const {
  std::vector<int> labels;
  const int o = offset(b);
  for (int i = 0; i < sizes[static_cast<std::size_t>(b)]; ++i)
    labels.push_back(o + i);
  return labels;
}

std::vector<std::vector<int>> BaseSpec::block_lists() const {
  std::vector<std::vector<int>> all;
  for (int b = 0; b < dim(); ++b) all.push_back(block(b));
  return all;
}

// ---------------------------------------------------------------------------
// SeqSpace

SeqSpace::SeqSpace(int dim, int base) : dim_(dim), base_(base) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  if (base < 1) throw std::invalid_argument("base must be nonempty");
  std::size_t p = 1;
  for (int i = 0; i < dim; ++i) {
    if (p > (std::size_t{1} << 26) / static_cast<std::size_t>(base))
      throw CapExceeded("sequence space too large", p);
    p *= static_cast<std::size_t>(base);
  }
  points_ = p;
  stride_.resize(static_cast<std::size_t>(dim));
  std::size_t s = 1;
  for (int i = dim - 1; i >= 0; --i) {
    stride_[static_cast<std::size_t>(i)] = s;
    s *= static_cast<std::size_t>(base);
  }
}

std::size_t SeqSpace::encode(std::span<const int> seq) const {
  std::size_t p = 0;
  for (int i = 0; i < dim_; ++i)
    p += static_cast<std::size_t>(seq[static_cast<std::size_t>(i)]) *
         stride_[static_cast<std::size_t>(i)];
  return p;
}

std::vector<int> SeqSpace::decode(std::size_t p) const {
  std::vector<int> seq(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    seq[static_cast<std::size_t>(i)] =
        static_cast<int>((p / stride_[static_cast<std::size_t>(i)]) %
                         static_cast<std::size_t>(base_));
  }
  return seq;
}

int SeqSpace::coord(std::size_t p, int i) const {
  return static_cast<int>((p / stride_[static_cast<std::size_t>(i)]) %
                          static_cast<std::size_t>(base_));
}

Bits SeqSpace::point_set(std::span<const int> seq) const {
  return Bits::single(points_, encode(seq));
}

Bits SeqSpace::cyl(int i, const Bits& x) const {
  if (i < 0 || i >= dim_) throw DimensionError("cyl index out of dimension");
  // Line id: the point with coordinate i collapsed out; dense in
  // [0, points/base).
  const std::size_t st = stride_[static_cast<std::size_t>(i)];
  std::vector<bool> line(points_ / static_cast<std::size_t>(base_), false);
  auto line_id = [&](std::size_t p) {
    const std::size_t hi = p / (st * static_cast<std::size_t>(base_));
    const std::size_t lo = p % st;
    return hi * st + lo;
  };
  for (int p = x.first(); p >= 0; p = x.next(p))
    line[line_id(static_cast<std::size_t>(p))] = true;
  Bits out(points_);
  for (std::size_t p = 0; p < points_; ++p)
    if (line[line_id(p)]) out.set(p);
  return out;
}

Bits SeqSpace::diag(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
    throw DimensionError("diag index out of dimension");
  Bits out(points_);
  for (std::size_t p = 0; p < points_; ++p)
    if (coord(p, i) == coord(p, j)) out.set(p);
  return out;
}

const std::vector<std::uint32_t>& SeqSpace::point_map(
    const std::vector<int>& key, const Perm* p, int ri, int rj) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto it = map_cache_.find(key);
  if (it != map_cache_.end()) return it->second;
  std::vector<std::uint32_t> pm(points_);
  std::vector<int> seq(static_cast<std::size_t>(dim_));
  for (std::size_t q = 0; q < points_; ++q) {
    if (p != nullptr) {
      for (int i = 0; i < dim_; ++i)
        seq[static_cast<std::size_t>(i)] = coord(q, (*p)(i));
    } else {
      for (int i = 0; i < dim_; ++i)
        seq[static_cast<std::size_t>(i)] = coord(q, i);
      seq[static_cast<std::size_t>(ri)] = seq[static_cast<std::size_t>(rj)];
    }
    pm[q] = static_cast<std::uint32_t>(encode(seq));
  }
  return map_cache_.emplace(key, std::move(pm)).first->second;
}

Bits SeqSpace::subst(const Perm& p, const Bits& x) const {
  if (p.support() > dim_)
    throw DimensionError("permutation exceeds dimension");
  // q is in the result iff q composed with the permutation lies in x.
  std::vector<int> key(static_cast<std::size_t>(dim_ + 1));
  key[0] = -1;
  for (int i = 0; i < dim_; ++i) key[static_cast<std::size_t>(i + 1)] = p(i);
  const auto& pm = point_map(key, &p, 0, 0);
  Bits out(points_);
  for (std::size_t q = 0; q < points_; ++q)
    if (x.test(pm[q])) out.set(q);
  return out;
}

Bits SeqSpace::replacement(int i, int j, const Bits& x) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
    throw DimensionError("replacement index out of dimension");
  if (i == j) return x;
  const std::vector<int> key{-2, i, j};
  const auto& pm = point_map(key, nullptr, i, j);
  Bits out(points_);
  for (std::size_t q = 0; q < points_; ++q)
    if (x.test(pm[q])) out.set(q);
  return out;
}

Bits product_of_blocks(const SeqSpace& sp,
                       const std::vector<std::vector<int>>& factors) {
  if (static_cast<int>(factors.size()) != sp.dim())
    throw DimensionError("product needs one factor per coordinate");
  Bits out(sp.points());
  for (std::size_t p = 0; p < sp.points(); ++p) {
    bool in = true;
    for (int i = 0; i < sp.dim() && in; ++i) {
      const auto& f = factors[static_cast<std::size_t>(i)];
      in = std::find(f.begin(), f.end(), sp.coord(p, i)) != f.end();
    }
    if (in) out.set(p);
  }
  return out;
}

Bits product_r(const SeqSpace& sp, const BaseSpec& base) {
  if (base.dim() != sp.dim() || base.universe() != sp.base())
    throw DimensionError("base does not match sequence space");
  return product_of_blocks(sp, base.block_lists());
}

// ---------------------------------------------------------------------------
// PowersetAlgebra

PowersetAlgebra::PowersetAlgebra(std::shared_ptr<const SeqSpace> sp,
                                 int subst_bound)
    : sp_(std::move(sp)), n_(subst_bound) {
  if (n_ < 0 || n_ > sp_->dim())
    throw DimensionError("substitution bound must lie within the dimension");
}

Bits PowersetAlgebra::cyl(int i, const Bits& x) const { return sp_->cyl(i, x); }
Bits PowersetAlgebra::diag(int i, int j) const { return sp_->diag(i, j); }

Bits PowersetAlgebra::subst(const Perm& p, const Bits& x) const {
  check_subst(p);
  return sp_->subst(p, x);
}

Bits PowersetAlgebra::replacement(int i, int j, const Bits& x) const {
  check_dim_index(i);
  check_dim_index(j);
  return sp_->replacement(i, j, x);
}

Bits PowersetAlgebra::atom(std::size_t k) const {
  return Bits::single(sp_->points(), k);
}

std::string PowersetAlgebra::describe() const {
  return "powerset set algebra, dim " + std::to_string(dim()) + ", base " +
         std::to_string(sp_->base());
}

// ---------------------------------------------------------------------------
// GeneratedAlgebra

namespace {

// Splits every part along x in place (part indices are stable; new halves
// are appended). Split part indices are reported to the caller.
void refine_by(std::vector<Bits>& parts, const Bits& x, std::size_t cap,
               std::vector<std::size_t>* split_out) {
  const std::size_t before = parts.size();
  for (std::size_t i = 0; i < before; ++i) {
    Bits& p = parts[i];
    if (!p.intersects(x) || p.subset_of(x)) continue;
    Bits in = p & x;
    Bits out = p.minus(x);
    p = std::move(in);
    parts.push_back(std::move(out));
    if (split_out) {
      split_out->push_back(i);
      split_out->push_back(parts.size() - 1);
    }
  }
  if (parts.size() > cap)
    throw CapExceeded("subalgebra closure over cap", parts.size());
}

}  // namespace

std::shared_ptr<const GeneratedAlgebra> GeneratedAlgebra::generate(
    std::shared_ptr<const SeqSpace> sp, int subst_bound,
    std::vector<Bits> generators, std::size_t atom_cap) {
  if (subst_bound < 0 || subst_bound > sp->dim())
    throw DimensionError("substitution bound must lie within the dimension");
  for (const Bits& g : generators)
    if (g.size() != sp->points())
      throw DimensionError("generator does not live in the space");

  auto alg = std::shared_ptr<GeneratedAlgebra>(new GeneratedAlgebra());
  alg->sp_ = sp;
  alg->n_ = subst_bound;
  alg->gens_ = generators;
  alg->group_ = symmetric_group(subst_bound);

  std::vector<Bits> parts{sp->full_set()};
  for (const Bits& g : generators) refine_by(parts, g, atom_cap, nullptr);
  for (int i = 0; i < sp->dim(); ++i)
    for (int j = i + 1; j < sp->dim(); ++j)
      refine_by(parts, sp->diag(i, j), atom_cap, nullptr);

  // Worklist fixpoint: operator images of parts must be unions of parts.
  // Once a part is processed its images stay unions under any further
  // refinement, so a part needs reprocessing only when it splits.
  std::vector<std::size_t> queue(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) queue[i] = i;
  std::vector<bool> queued(parts.size(), true);
  while (!queue.empty()) {
    const std::size_t id = queue.back();
    queue.pop_back();
    queued[id] = false;
    const Bits p = parts[id];  // copy: parts may reallocate below
    std::vector<std::size_t> split_ids;
    for (int i = 0; i < sp->dim(); ++i)
      refine_by(parts, sp->cyl(i, p), atom_cap, &split_ids);
    for (const Perm& t : alg->group_) {
      if (t.is_identity()) continue;
      refine_by(parts, sp->subst(t, p), atom_cap, &split_ids);
    }
    // Replacements need no closure pass of their own: c_i(d_ij * x) is
    // already covered by the diagonal refinement and the cyl pass.
    queued.resize(parts.size(), false);
    for (std::size_t sid : split_ids)
      if (!queued[sid]) {
        queued[sid] = true;
        queue.push_back(sid);
      }
  }

  std::sort(parts.begin(), parts.end(),
            [](const Bits& a, const Bits& b) { return a.first() < b.first(); });
  alg->atoms_ = std::move(parts);
  return alg;
}

Bits GeneratedAlgebra::cyl(int i, const Bits& x) const {
  check_dim_index(i);
  return sp_->cyl(i, x);
}

Bits GeneratedAlgebra::diag(int i, int j) const {
  check_dim_index(i);
  check_dim_index(j);
  return sp_->diag(i, j);
}

Bits GeneratedAlgebra::subst(const Perm& p, const Bits& x) const {
  check_subst(p);
  return sp_->subst(p, x);
}

Bits GeneratedAlgebra::replacement(int i, int j, const Bits& x) const {
  check_dim_index(i);
  check_dim_index(j);
  return sp_->replacement(i, j, x);
}

bool GeneratedAlgebra::contains(const Bits& x) const {
  if (x.size() != width()) return false;
  for (const Bits& a : atoms_)
    if (a.intersects(x) && !a.subset_of(x)) return false;
  return true;
}

std::string GeneratedAlgebra::describe() const {
  return "generated subalgebra with " + std::to_string(atoms_.size()) +
         " atoms over dim " + std::to_string(dim()) + ", base " +
         std::to_string(sp_->base());
}

bool GeneratedAlgebra::is_atom_of(const Bits& x) const {
  if (!contains(x))
    throw std::invalid_argument("element is not in the algebra");
  return atom_mask(x).count() == 1;
}

Bits GeneratedAlgebra::atom_mask(const Bits& x) const {
  Bits mask(atoms_.size());
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    if (atoms_[k].intersects(x)) {
      if (!atoms_[k].subset_of(x))
        throw std::invalid_argument("element is not in the algebra");
      mask.set(k);
    }
  }
  return mask;
}

Bits GeneratedAlgebra::from_atom_mask(const Bits& mask) const {
  Bits x(width());
  for (int k = mask.first(); k >= 0; k = mask.next(k))
    x |= atoms_[static_cast<std::size_t>(k)];
  return x;
}

std::vector<Bits> GeneratedAlgebra::all_elements(std::size_t cap) const {
  if (atoms_.size() >= 63 || (std::size_t{1} << atoms_.size()) > cap)
    throw CapExceeded("element family enumeration over cap", atoms_.size());
  const std::size_t total = std::size_t{1} << atoms_.size();
  std::vector<Bits> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    Bits x(width());
    for (std::size_t k = 0; k < atoms_.size(); ++k)
      if ((code >> k) & 1u) x |= atoms_[k];
    out.push_back(std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operator-law suite

bool LawReport::ok() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

LawReport operator_law_suite(const SeqSpace& sp, int subst_bound,
                             const std::vector<Bits>& atom_base,
                             int random_elements, std::uint64_t seed) {
  LawReport rep;
  auto record = [&](const std::string& law, bool pass,
                    const std::string& witness) {
    rep.entries.push_back({law, pass, pass ? "" : witness});
  };

  std::vector<Bits> elems = atom_base;
  std::mt19937_64 rng(seed);
  for (int r = 0; r < random_elements; ++r) {
    Bits x(sp.points());
    for (std::size_t p = 0; p < sp.points(); ++p)
      if (rng() & 1u) x.set(p);
    elems.push_back(std::move(x));
  }
  const auto group = symmetric_group(subst_bound);

  // Unary cylindrification laws, quantified over the element pool. All
  // operators are additive, so passing on an atom base proves the law for
  // every union of those atoms.
  for (int i = 0; i < sp.dim(); ++i) {
    const std::string si = std::to_string(i);
    bool normal = sp.cyl(i, sp.empty_set()).none();
    record("cyl" + si + ".normal", normal, "c(empty) nonempty");
    bool incr = true, idem = true;
    std::size_t at = 0;
    for (std::size_t e = 0; e < elems.size() && (incr && idem); ++e) {
      Bits c = sp.cyl(i, elems[e]);
      if (!elems[e].subset_of(c)) incr = false;
      if (sp.cyl(i, c) != c) idem = false;
      at = e;
    }
    record("cyl" + si + ".increasing", incr, "element #" + std::to_string(at));
    record("cyl" + si + ".idempotent", idem, "element #" + std::to_string(at));
  }
  {
    bool additive = true, comm = true;
    std::string w;
    // All atom pairs while quadratic stays cheap, a seeded sample beyond.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (atom_base.size() * atom_base.size() <= 4096) {
      for (std::size_t e = 0; e + 1 < atom_base.size(); ++e)
        for (std::size_t f = e + 1; f < atom_base.size(); ++f)
          pairs.emplace_back(e, f);
    } else {
      for (int it = 0; it < 2000; ++it)
        pairs.emplace_back(rng() % atom_base.size(),
                           rng() % atom_base.size());
    }
    for (int i = 0; i < sp.dim() && additive; ++i) {
      for (auto [e, f] : pairs) {
        if (sp.cyl(i, atom_base[e] | atom_base[f]) !=
            (sp.cyl(i, atom_base[e]) | sp.cyl(i, atom_base[f]))) {
          additive = false;
          w = "cyl" + std::to_string(i);
          break;
        }
      }
    }
    record("cyl.additive", additive, w);
    for (int i = 0; i < sp.dim() && comm; ++i)
      for (int j = i + 1; j < sp.dim() && comm; ++j)
        for (std::size_t e = 0; e < elems.size() && comm; ++e) {
          if (sp.cyl(i, sp.cyl(j, elems[e])) !=
              sp.cyl(j, sp.cyl(i, elems[e]))) {
            comm = false;
            w = "c" + std::to_string(i) + "/c" + std::to_string(j) +
                " element #" + std::to_string(e);
          }
        }
    record("cyl.commuting", comm, w);
  }

  // Substitution laws.
  {
    bool action = true;
    std::string w;
    for (const Perm& s : group)
      for (const Perm& t : group) {
        for (std::size_t e = 0; e < elems.size() && action; ++e) {
          if (sp.subst(s, sp.subst(t, elems[e])) !=
              sp.subst(s * t, elems[e])) {
            action = false;
            w = s.to_string() + " after " + t.to_string();
          }
        }
        if (!action) break;
      }
    record("subst.group_action", action, w);
  }
  {
    bool boole = true;
    std::string w;
    for (const Perm& t : group) {
      for (std::size_t e = 0; e < elems.size() && boole; ++e) {
        if (sp.subst(t, sp.full_set().minus(elems[e])) !=
            sp.full_set().minus(sp.subst(t, elems[e]))) {
          boole = false;
          w = t.to_string() + " complement";
        }
        std::size_t f = (e + 1) % elems.size();
        if (boole && sp.subst(t, elems[e] | elems[f]) !=
                         (sp.subst(t, elems[e]) | sp.subst(t, elems[f]))) {
          boole = false;
          w = t.to_string() + " join";
        }
        if (boole && sp.subst(t, elems[e] & elems[f]) !=
                         (sp.subst(t, elems[e]) & sp.subst(t, elems[f]))) {
          boole = false;
          w = t.to_string() + " meet";
        }
      }
      if (!boole) break;
    }
    record("subst.boolean_endomorphism", boole, w);
  }
  {
    // The image of a diagonal under a substitution is again a diagonal:
    // s_t(d_ij) = d_{t(i) t(j)}.
    bool diag_ok = true;
    std::string w;
    for (const Perm& t : group)
      for (int i = 0; i < sp.dim() && diag_ok; ++i)
        for (int j = 0; j < sp.dim() && diag_ok; ++j) {
          if (sp.subst(t, sp.diag(i, j)) != sp.diag(t(i), t(j))) {
            diag_ok = false;
            w = t.to_string() + " d(" + std::to_string(i) + "," +
                std::to_string(j) + ")";
          }
        }
    record("subst.diagonal_image", diag_ok, w);
  }
  return rep;
}

}  // namespace qea
