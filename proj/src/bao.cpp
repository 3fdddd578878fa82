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

#include "qea/bao.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qea {

// ---------------------------------------------------------------------------
// VerificationRecord

bool VerificationRecord::ok() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

bool VerificationRecord::passed(const std::string& law) const {
  bool seen = false;
  for (const auto& e : entries) {
    if (e.law.rfind(law, 0) == 0) {
      seen = true;
      if (!e.pass) return false;
    }
  }
  return seen;
}

std::string VerificationRecord::first_failure() const {
  for (const auto& e : entries)
    if (!e.pass) return e.law + (e.witness.empty() ? "" : ": " + e.witness);
  return "";
}

void VerificationRecord::add(std::string law, bool pass, std::string witness) {
  entries.push_back({std::move(law), pass, pass ? "" : std::move(witness)});
}

void VerificationRecord::merge(const VerificationRecord& other,
                               const std::string& prefix) {
  for (const auto& e : other.entries)
    entries.push_back({prefix + e.law, e.pass, e.witness});
}

// ---------------------------------------------------------------------------
// FiniteBAO

FiniteBAO::FiniteBAO(int dim, int subst_bound,
                     std::vector<std::string> atom_names)
    : d_(dim), n_(subst_bound), names_(std::move(atom_names)) {
  if (d_ < 1) throw DimensionError("dimension must be >= 1");
  if (n_ < 0 || n_ > d_)
    throw DimensionError("substitution bound must lie within the dimension");
  group_ = symmetric_group(n_);
  const std::size_t k = names_.size();
  cyl_.assign(static_cast<std::size_t>(d_), std::vector<Bits>(k, Bits(k)));
  sub_.assign(group_.size(), std::vector<std::size_t>(k, 0));
  for (auto& row : sub_)
    for (std::size_t a = 0; a < k; ++a) row[a] = a;
  diag_.assign(static_cast<std::size_t>(d_),
               std::vector<Bits>(static_cast<std::size_t>(d_), Bits(k)));
  for (int i = 0; i < d_; ++i)
    diag_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        Bits::ones(k);
}

void FiniteBAO::set_cyl(int i, std::size_t atom, Bits image) {
  check_dim_index(i);
  cyl_[static_cast<std::size_t>(i)][atom] = std::move(image);
}

void FiniteBAO::set_subst(const Perm& p, std::size_t atom, std::size_t image) {
  sub_[static_cast<std::size_t>(perm_index(p))][atom] = image;
}

void FiniteBAO::set_diag(int i, int j, Bits atoms) {
  check_dim_index(i);
  check_dim_index(j);
  diag_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
      std::move(atoms);
}

Bits FiniteBAO::cyl(int i, const Bits& x) const {
  check_dim_index(i);
  Bits out(width());
  for (int a = x.first(); a >= 0; a = x.next(a))
    out |= cyl_[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
  return out;
}

Bits FiniteBAO::diag(int i, int j) const {
  check_dim_index(i);
  check_dim_index(j);
  return diag_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

Bits FiniteBAO::subst(const Perm& p, const Bits& x) const {
  const auto& row = sub_[static_cast<std::size_t>(perm_index(p))];
  Bits out(width());
  for (int a = x.first(); a >= 0; a = x.next(a))
    out.set(row[static_cast<std::size_t>(a)]);
  return out;
}

Bits FiniteBAO::replacement(int i, int j, const Bits& x) const {
  if (i == j) return x;
  return cyl(i, diag(i, j) & x);
}

std::string FiniteBAO::describe() const {
  return "finite BAO with " + std::to_string(width()) + " atoms, dim " +
         std::to_string(d_) + ", substitution bound " + std::to_string(n_);
}

int FiniteBAO::perm_index(const Perm& p) const {
  check_subst(p);
  for (std::size_t k = 0; k < group_.size(); ++k)
    if (group_[k] == p) return static_cast<int>(k);
  throw DimensionError("permutation not in the substitution group");
}

int FiniteBAO::compose_index(int a, int b) const {
  return perm_index(group_[static_cast<std::size_t>(a)] *
                    group_[static_cast<std::size_t>(b)]);
}

const Bits& FiniteBAO::cyl_action(int i, std::size_t atom) const {
  return cyl_[static_cast<std::size_t>(i)][atom];
}

std::size_t FiniteBAO::subst_action(int perm_idx, std::size_t atom) const {
  return sub_[static_cast<std::size_t>(perm_idx)][atom];
}

FiniteBAO atomize(const Algebra& a) {
  const std::size_t n = a.atom_count();
  std::vector<Bits> atoms;
  atoms.reserve(n);
  for (std::size_t k = 0; k < n; ++k) atoms.push_back(a.atom(k));
  auto mask_of = [&](const Bits& x) {
    Bits mask(n);
    Bits acc(a.width());
    for (std::size_t k = 0; k < n; ++k)
      if (atoms[k].intersects(x)) {
        if (!atoms[k].subset_of(x))
          throw std::invalid_argument(
              "operator image does not decompose over the atoms");
        mask.set(k);
        acc |= atoms[k];
      }
    if (!(acc == x))
      throw std::invalid_argument(
          "operator image does not decompose over the atoms");
    return mask;
  };

  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    names.push_back("a" + std::to_string(k));
  FiniteBAO b(a.dim(), a.subst_bound(), std::move(names));
  for (int i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < n; ++k)
      b.set_cyl(i, k, mask_of(a.cyl(i, atoms[k])));
  for (const Perm& t : b.group())
    for (std::size_t k = 0; k < n; ++k) {
      Bits img = mask_of(a.subst(t, atoms[k]));
      if (img.count() != 1)
        throw std::invalid_argument(
            "substitution image of an atom not an atom");
      b.set_subst(t, k, static_cast<std::size_t>(img.first()));
    }
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      b.set_diag(i, j, mask_of(a.diag(i, j)));
  return b;
}

FiniteBAO from_concrete(const GeneratedAlgebra& a) { return atomize(a); }

VerificationRecord verify_bao(const FiniteBAO& b) {
  VerificationRecord rec;
  const std::size_t k = b.atom_count();

  bool incr = true;
  std::string w;
  for (int i = 0; i < b.dim() && incr; ++i)
    for (std::size_t a = 0; a < k && incr; ++a)
      if (!b.cyl_action(i, a).test(a)) {
        incr = false;
        w = "atom " + b.atom_name(a) + ", c" + std::to_string(i);
      }
  rec.add("cyl.increasing", incr, w);

  bool idem = true;
  w.clear();
  for (int i = 0; i < b.dim() && idem; ++i)
    for (std::size_t a = 0; a < k && idem; ++a) {
      const Bits& c = b.cyl_action(i, a);
      if (b.cyl(i, c) != c) {
        idem = false;
        w = "atom " + b.atom_name(a) + ", c" + std::to_string(i);
      }
    }
  rec.add("cyl.idempotent", idem, w);

  const auto& g = b.group();
  bool bij = true;
  w.clear();
  for (std::size_t p = 0; p < g.size() && bij; ++p) {
    std::vector<bool> hit(k, false);
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t img = b.subst_action(static_cast<int>(p), a);
      if (hit[img]) {
        bij = false;
        w = g[p].to_string() + " not injective at " + b.atom_name(a);
        break;
      }
      hit[img] = true;
    }
  }
  rec.add("subst.bijective", bij, w);

  bool ident = true;
  w.clear();
  for (std::size_t a = 0; a < k; ++a)
    if (b.subst_action(b.perm_index(Perm::identity(b.subst_bound())), a) != a) {
      ident = false;
      w = "atom " + b.atom_name(a);
      break;
    }
  rec.add("subst.identity", ident, w);

  bool comp = true;
  w.clear();
  for (std::size_t p = 0; p < g.size() && comp; ++p)
    for (std::size_t q = 0; q < g.size() && comp; ++q) {
      const int pq = b.compose_index(static_cast<int>(p), static_cast<int>(q));
      for (std::size_t a = 0; a < k; ++a) {
        if (b.subst_action(static_cast<int>(p),
                           b.subst_action(static_cast<int>(q), a)) !=
            b.subst_action(pq, a)) {
          comp = false;
          w = g[p].to_string() + " after " + g[q].to_string() + " at " +
              b.atom_name(a);
          break;
        }
      }
    }
  rec.add("subst.composition", comp, w);

  bool du = true;
  w.clear();
  for (int i = 0; i < b.dim(); ++i)
    if (b.diag(i, i) != Bits::ones(k)) {
      du = false;
      w = "d(" + std::to_string(i) + "," + std::to_string(i) + ")";
      break;
    }
  rec.add("diag.unit", du, w);
  return rec;
}

// ---------------------------------------------------------------------------
// Homomorphisms

OpSubset OpSubset::full(int dim, int subst_bound) {
  OpSubset s;
  s.booleans = true;
  for (int i = 0; i < dim; ++i) s.cyls.push_back(i);
  s.diags = true;
  s.substs = symmetric_group(subst_bound);
  return s;
}

OpSubset OpSubset::cylindric(int dim) {
  OpSubset s;
  s.booleans = true;
  for (int i = 0; i < dim; ++i) s.cyls.push_back(i);
  s.diags = true;
  return s;
}

OpSubset OpSubset::boolean_only() { return OpSubset{}; }

std::string OpSubset::to_string() const {
  std::string s;
  if (booleans) s += "booleans";
  if (!cyls.empty()) s += s.empty() ? "cyls" : ",cyls";
  if (diags) s += s.empty() ? "diags" : ",diags";
  if (!substs.empty()) s += s.empty() ? "substs" : ",substs";
  if (!replacements.empty()) s += s.empty() ? "repls" : ",repls";
  return s;
}

Bits Homomorphism::apply(const Bits& x) const {
  Bits out(target->width());
  Bits seen(x.size());
  for (std::size_t k = 0; k < domain_atoms.size(); ++k) {
    const Bits& a = domain_atoms[k];
    if (a.intersects(x)) {
      if (!a.subset_of(x))
        throw std::invalid_argument(
            "element is not a union of the domain's minimal elements");
      out |= images[k];
      seen |= a;
    }
  }
  if (!(seen == x))
    throw std::invalid_argument(
        "element is not a union of the domain's minimal elements");
  return out;
}

namespace {

struct HomChecker {
  const Homomorphism& h;
  VerificationRecord rec;

  const Algebra& src() const { return *h.source; }
  const Algebra& tgt() const { return *h.target; }

  std::string atom_desc(std::size_t k) const {
    return "domain atom #" + std::to_string(k) + " " +
           h.domain_atoms[k].to_string();
  }

  void check_domain() {
    Bits acc(src().width());
    bool disjoint = true;
    std::string w;
    for (std::size_t k = 0; k < h.domain_atoms.size() && disjoint; ++k) {
      if (h.domain_atoms[k].none()) {
        disjoint = false;
        w = atom_desc(k) + " empty";
      } else if (acc.intersects(h.domain_atoms[k])) {
        disjoint = false;
        w = atom_desc(k) + " overlaps earlier atoms";
      }
      acc |= h.domain_atoms[k];
    }
    rec.add("domain.partition", disjoint && acc == src().top(),
            disjoint ? "atoms do not cover the unit" : w);
  }

  void check_booleans() {
    if (!h.ops.booleans) return;
    // Joins are preserved by construction. Meets and complements of an
    // additively extended map reduce to: images of distinct atoms are
    // disjoint, and the unit maps to the unit.
    bool disjoint = true;
    std::string w;
    Bits acc(tgt().width());
    for (std::size_t k = 0; k < h.images.size(); ++k) {
      if (acc.intersects(h.images[k])) {
        disjoint = false;
        w = atom_desc(k) + " image overlaps earlier images";
        break;
      }
      acc |= h.images[k];
    }
    rec.add("boolean.meet", disjoint, w);
    rec.add("boolean.top", !disjoint || acc == tgt().top(),
            "unit does not map onto the unit");
    if (h.injective) {
      bool inj = true;
      for (std::size_t k = 0; k < h.images.size(); ++k)
        if (h.images[k].none()) {
          inj = false;
          w = atom_desc(k) + " maps to zero";
          break;
        }
      rec.add("injective", disjoint && inj, w);
    }
  }

  // Unary operator check on every domain atom: complete for all elements by
  // additivity of the operator on both sides.
  template <typename SrcOp, typename TgtOp>
  void check_unary(const std::string& law, SrcOp&& src_op, TgtOp&& tgt_op) {
    for (std::size_t k = 0; k < h.domain_atoms.size(); ++k) {
      Bits lhs, rhs;
      try {
        lhs = h.apply(src_op(h.domain_atoms[k]));
      } catch (const std::invalid_argument& e) {
        rec.add(law, false, atom_desc(k) + ": domain not closed (" +
                                std::string(e.what()) + ")");
        return;
      }
      rhs = tgt_op(h.images[k]);
      if (lhs != rhs) {
        Bits d = lhs ^ rhs;
        rec.add(law, false,
                atom_desc(k) + ", difference " + d.to_string());
        return;
      }
    }
    rec.add(law, true);
  }

  void check_constants() {
    if (!h.ops.diags) return;
    for (int i = 0; i < src().dim(); ++i)
      for (int j = 0; j < src().dim(); ++j) {
        const std::string law =
            "diag[" + std::to_string(i) + "," + std::to_string(j) + "]";
        Bits lhs;
        try {
          lhs = h.apply(src().diag(i, j));
        } catch (const std::invalid_argument&) {
          rec.add(law, false, "diagonal not in the domain");
          continue;
        }
        Bits rhs = tgt().diag(i, j);
        if (lhs != rhs) {
          Bits d = lhs ^ rhs;
          rec.add(law, false, "difference " + d.to_string());
        } else {
          rec.add(law, true);
        }
      }
  }

  void check_ops() {
    for (int i : h.ops.cyls)
      check_unary(
          "cyl[" + std::to_string(i) + "]",
          [&](const Bits& x) { return src().cyl(i, x); },
          [&](const Bits& x) { return tgt().cyl(i, x); });
    for (const Perm& t : h.ops.substs)
      check_unary(
          "subst[" + t.to_string() + "]",
          [&](const Bits& x) { return src().subst(t, x); },
          [&](const Bits& x) { return tgt().subst(t, x); });
    for (auto [i, j] : h.ops.replacements)
      check_unary(
          "repl[" + std::to_string(i) + "," + std::to_string(j) + "]",
          [&](const Bits& x) { return src().replacement(i, j, x); },
          [&](const Bits& x) { return tgt().replacement(i, j, x); });
    check_constants();
  }

  Bits element_from_mask(std::uint64_t mask) const {
    Bits x(src().width());
    for (std::size_t k = 0; k < h.domain_atoms.size(); ++k)
      if ((mask >> k) & 1u) x |= h.domain_atoms[k];
    return x;
  }

  // Literal element-level spot check, used when the domain is small and in
  // sampled mode.
  bool elements_agree(const Bits& x, const Bits& y, std::string& w) {
    const Bits hx = h.apply(x), hy = h.apply(y);
    if (h.ops.booleans) {
      if (h.apply(x | y) != (hx | hy)) {
        w = "join at " + x.to_string() + ", " + y.to_string();
        return false;
      }
      if (h.apply(x & y) != (hx & hy)) {
        w = "meet at " + x.to_string() + ", " + y.to_string();
        return false;
      }
      if (h.apply(src().complement(x)) != tgt().complement(hx)) {
        w = "complement at " + x.to_string();
        return false;
      }
    }
    for (int i : h.ops.cyls)
      if (h.apply(src().cyl(i, x)) != tgt().cyl(i, hx)) {
        w = "cyl" + std::to_string(i) + " at " + x.to_string();
        return false;
      }
    for (const Perm& t : h.ops.substs)
      if (h.apply(src().subst(t, x)) != tgt().subst(t, hx)) {
        w = "subst " + t.to_string() + " at " + x.to_string();
        return false;
      }
    for (auto [i, j] : h.ops.replacements)
      if (h.apply(src().replacement(i, j, x)) != tgt().replacement(i, j, hx)) {
        w = "repl[" + std::to_string(i) + "," + std::to_string(j) + "] at " +
            x.to_string();
        return false;
      }
    return true;
  }

  void run_exhaustive(const HomExhaustive& mode) {
    check_domain();
    check_booleans();
    check_ops();
    const std::size_t n = h.domain_atoms.size();
    if (n < 63 && (std::uint64_t{1} << n) <= mode.element_cap) {
      const std::uint64_t total = std::uint64_t{1} << n;
      bool pass = true;
      std::string w;
      std::uint64_t pairs = 0;
      for (std::uint64_t mx = 0; mx < total && pass; ++mx) {
        Bits x = element_from_mask(mx);
        for (std::uint64_t my = 0; my < total && pass; ++my) {
          if (++pairs > mode.pair_cap) {
            my = total;  // pair budget spent; atom-level pass is complete
            continue;
          }
          pass = elements_agree(x, element_from_mask(my), w);
        }
      }
      rec.add("elements.literal", pass, w);
    }
  }

  void run_sampled(const HomSampled& mode) {
    check_domain();
    check_booleans();
    std::mt19937_64 rng(mode.seed);
    bool pass = true;
    std::string w;
    const std::size_t n = h.domain_atoms.size();
    for (int it = 0; it < mode.count && pass; ++it) {
      Bits x(src().width()), y(src().width());
      for (std::size_t k = 0; k < n; ++k) {
        if (rng() & 1u) x |= h.domain_atoms[k];
        if (rng() & 1u) y |= h.domain_atoms[k];
      }
      pass = elements_agree(x, y, w);
      if (pass && h.ops.diags) {
        for (int i = 0; i < src().dim() && pass; ++i)
          for (int j = 0; j < src().dim() && pass; ++j)
            if (h.apply(src().diag(i, j)) != tgt().diag(i, j)) {
              pass = false;
              w = "diag(" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
      }
    }
    rec.add("elements.sampled", pass, w);
    rec.entries.back().witness += pass ? "" : " (non-exhaustive)";
  }
};

}  // namespace

VerificationRecord verify_hom(const Homomorphism& h, const HomMode& mode) {
  if (h.domain_atoms.size() != h.images.size())
    throw std::invalid_argument("domain atoms and images differ in length");
  HomChecker checker{h, {}};
  if (std::holds_alternative<HomExhaustive>(mode))
    checker.run_exhaustive(std::get<HomExhaustive>(mode));
  else
    checker.run_sampled(std::get<HomSampled>(mode));
  return checker.rec;
}

Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
  Homomorphism h;
  h.source = f.source;
  h.target = g.target;
  h.domain_atoms = f.domain_atoms;
  h.images.reserve(f.images.size());
  for (const Bits& img : f.images) h.images.push_back(g.apply(img));
  h.ops = f.ops;
  h.injective = f.injective && g.injective;
  h.label = f.label + " then " + g.label;
  return h;
}

}  // namespace qea
