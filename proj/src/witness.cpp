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

#include "qea/witness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qea {

WitnessTerm witness_term(int m, int dim) {
  if (m < 1)
    throw std::invalid_argument(
        "witness term needs m >= 1 (no diagonal factor otherwise)");
  if (dim < m + 1)
    throw DimensionError("witness term needs dimension >= m+1");
  Term body = Term::var(0);
  for (int i = m; i >= 1; --i) body = Term::cyl(i, std::move(body));
  Term t = body;  // i = 0 factor: the identity replacement
  for (int i = 1; i <= m; ++i)
    t = Term::times(std::move(t), replacement_term(0, i, body));
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      t = Term::times(std::move(t), Term::complement(Term::diag(i, j)));
  return WitnessTerm{m, std::move(t)};
}

TauValue witness_vanishes(const Algebra& a, const Bits& r, int m) {
  WitnessTerm wt = witness_term(m, a.dim());
  std::vector<Bits> asg{r};
  TauValue out;
  out.value = eval(wt.term, asg, a);
  out.zero = out.value.none();
  return out;
}

// ---------------------------------------------------------------------------
// Refutation engine.

namespace {

const PowersetAlgebra& concrete_target(const Homomorphism& h) {
  const auto* t = dynamic_cast<const PowersetAlgebra*>(h.target.get());
  if (t == nullptr)
    throw std::invalid_argument(
        "refutation needs a concrete powerset target");
  return *t;
}

Bits part_image(const SplitAlgebra& s, const Homomorphism& h, int j) {
  return h.apply(s.atom(s.named_atom(0, j)));
}

}  // namespace

RefuteOutcome refute_representation(const SplitAlgebra& s,
                                    const Homomorphism& h) {
  const PowersetAlgebra& tgt = concrete_target(h);
  const SeqSpace& w = tgt.space();
  const int m = s.spec().m;
  if (s.dim() < m + 1)
    throw DimensionError("refutation needs dimension >= m+1");

  const Bits h_r = h.apply(s.expand(s.spec().r));
  if (h_r.none()) {
    HomViolation v;
    v.kind = HomViolation::Kind::RCollapsed;
    v.detail = "nonzero R maps to the empty set";
    return v;
  }

  // Distinct parts must keep disjoint images; a meet failure refutes h
  // directly.
  std::vector<Bits> h_parts;
  for (int j = 0; j <= m; ++j) h_parts.push_back(part_image(s, h, j));
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (h_parts[static_cast<std::size_t>(i)].intersects(
              h_parts[static_cast<std::size_t>(j)])) {
        HomViolation v;
        v.kind = HomViolation::Kind::PartsOverlap;
        v.part_i = i;
        v.part_j = j;
        Bits common = h_parts[static_cast<std::size_t>(i)] &
                      h_parts[static_cast<std::size_t>(j)];
        v.witness_point = w.decode(static_cast<std::size_t>(common.first()));
        v.detail = "images of disjoint parts R_" + std::to_string(i) +
                   ", R_" + std::to_string(j) + " share a point";
        return v;
      }

  const std::vector<int> seed =
      w.decode(static_cast<std::size_t>(h_r.first()));

  // R lies below c_0(R_j) for every part, so a homomorphic image must offer
  // a base point w_j with seed(0|w_j) in h(R_j).
  std::vector<int> ws;
  for (int j = 0; j <= m; ++j) {
    int found = -1;
    std::vector<int> probe = seed;
    for (int u = 0; u < w.base() && found < 0; ++u) {
      probe[0] = u;
      if (h_parts[static_cast<std::size_t>(j)].test(w.encode(probe)))
        found = u;
    }
    if (found < 0) {
      HomViolation v;
      v.kind = HomViolation::Kind::CylGap;
      v.part_j = j;
      v.witness_point = seed;
      v.detail = "h(c0 R_" + std::to_string(j) +
                 ") contains the seed point but c0 h(R_" + std::to_string(j) +
                 ") does not";
      return v;
    }
    ws.push_back(found);
  }

  RefutationCertificate cert;
  cert.m = m;
  cert.s = seed;
  cert.w = ws;
  cert.z = seed;
  for (int i = 0; i <= m; ++i)
    cert.z[static_cast<std::size_t>(i)] = ws[static_cast<std::size_t>(i)];

  // All memberships are established extensionally in the target.
  bool distinct = true;
  for (int i = 0; i <= m && distinct; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (ws[static_cast<std::size_t>(i)] == ws[static_cast<std::size_t>(j)])
        distinct = false;
  cert.checks.add("w.pairwise_distinct", distinct, "");

  const std::size_t zp = w.encode(cert.z);
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      cert.checks.add(
          "z.outside_diag[" + std::to_string(i) + "," + std::to_string(j) +
              "]",
          !w.diag(i, j).test(zp), "");

  Bits c_all = h_r;
  for (int l = 1; l <= m; ++l) c_all = w.cyl(l, c_all);
  for (int i = 0; i <= m; ++i) {
    Bits factor = i == 0 ? c_all : w.replacement(0, i, c_all);
    cert.checks.add("z.in_repl_factor[" + std::to_string(i) + "]",
                    factor.test(zp), "");
  }
  {
    TauValue tv = witness_vanishes(tgt, h_r, m);
    cert.checks.add("z.in_tau_of_hR", tv.value.test(zp), "");
    Bits zero_img = h.apply(Bits(s.width()));
    cert.checks.add("h.zero_to_zero", zero_img.none(), "");
  }
  if (!cert.checks.ok())
    throw std::logic_error("refutation certificate failed self-check: " +
                           cert.checks.first_failure());
  return cert;
}

bool reverify(const RefutationCertificate& c, const SplitAlgebra& s,
              const Homomorphism& h) {
  const PowersetAlgebra& tgt = concrete_target(h);
  const SeqSpace& w = tgt.space();
  const int m = c.m;
  if (static_cast<int>(c.w.size()) != m + 1) return false;
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (c.w[static_cast<std::size_t>(i)] == c.w[static_cast<std::size_t>(j)])
        return false;
  for (int i = 0; i <= m; ++i)
    if (c.z[static_cast<std::size_t>(i)] != c.w[static_cast<std::size_t>(i)])
      return false;
  for (std::size_t i = static_cast<std::size_t>(m) + 1; i < c.z.size(); ++i)
    if (c.z[i] != c.s[i]) return false;

  const Bits h_r = h.apply(s.expand(s.spec().r));
  if (!h_r.test(w.encode(c.s))) return false;
  const std::size_t zp = w.encode(c.z);
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (w.diag(i, j).test(zp)) return false;
  TauValue tv = witness_vanishes(tgt, h_r, m);
  return tv.value.test(zp) && h.apply(Bits(s.width())).none();
}

bool reverify(const HomViolation& v, const SplitAlgebra& s,
              const Homomorphism& h) {
  const PowersetAlgebra& tgt = concrete_target(h);
  const SeqSpace& w = tgt.space();
  switch (v.kind) {
    case HomViolation::Kind::RCollapsed:
      return h.apply(s.expand(s.spec().r)).none();
    case HomViolation::Kind::PartsOverlap: {
      if (v.part_i < 0 || v.part_j < 0) return false;
      const Bits a = part_image(s, h, v.part_i);
      const Bits b = part_image(s, h, v.part_j);
      return a.test(w.encode(v.witness_point)) &&
             b.test(w.encode(v.witness_point));
    }
    case HomViolation::Kind::CylGap: {
      const Bits hp = part_image(s, h, v.part_j);
      const Bits lhs = h.apply(s.cyl(0, s.atom(s.named_atom(0, v.part_j))));
      const Bits rhs = w.cyl(0, hp);
      const std::size_t sp = w.encode(v.witness_point);
      return lhs.test(sp) && !rhs.test(sp);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Bounded representation search.
//
// A representation colors every point of the target space with an atom;
// the constraints below characterize "injective homomorphism" exactly:
//   - diagonals: a point's color pattern of equal coordinates must match the
//     point's own pattern;
//   - substitutions: color(p) = action(color(p composed with the perm));
//   - cylindrifications: along every axis-i line, the colors present must
//     coincide with the set of atoms whose c_i contains any of them (so all
//     colors on a line share one "line type" and realize it exactly);
//   - injectivity: every atom is used.

namespace {

struct SearchContext {
  const Algebra& a;
  const OpSubset& ops;
  int d;
  int kcount;

  std::vector<bool> axis_active;
  std::vector<Bits> cyl_pre;                // [i*K+a] atoms b with a <= c_i(b)
  std::vector<std::vector<int>> subst_act;  // per used perm, atom -> atom
  std::vector<Perm> used_perms;
  std::vector<std::uint32_t> diag_pattern;

  SearchContext(const Algebra& alg, const OpSubset& o)
      : a(alg),
        ops(o),
        d(alg.dim()),
        kcount(static_cast<int>(alg.atom_count())) {
    const std::size_t K = static_cast<std::size_t>(kcount);
    axis_active.assign(static_cast<std::size_t>(d), false);
    for (int i : ops.cyls) axis_active[static_cast<std::size_t>(i)] = true;
    cyl_pre.assign(static_cast<std::size_t>(d) * K, Bits(K));
    for (int i : ops.cyls)
      for (std::size_t at = 0; at < K; ++at) {
        Bits img = a.cyl(i, a.atom(at));
        for (int b = img.first(); b >= 0; b = img.next(b))
          cyl_pre[static_cast<std::size_t>(i) * K + static_cast<std::size_t>(b)]
              .set(at);
      }
    for (const Perm& t : ops.substs) {
      if (t.is_identity()) continue;
      used_perms.push_back(t);
      std::vector<int> act(K);
      for (std::size_t at = 0; at < K; ++at)
        act[at] = a.subst(t, a.atom(at)).first();
      subst_act.push_back(std::move(act));
    }
    diag_pattern.assign(K, 0);
    if (ops.diags) {
      int bit = 0;
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j, ++bit) {
          Bits dg = a.diag(i, j);
          for (std::size_t at = 0; at < K; ++at)
            if (dg.test(at)) diag_pattern[at] |= std::uint32_t{1} << bit;
        }
    }
  }
};

struct BaseSearch {
  const SearchContext& cx;
  SeqSpace sp;
  std::uint64_t& nodes;
  std::uint64_t budget;
  bool budget_hit = false;

  std::size_t P;
  int K;
  std::vector<int> color;
  std::vector<Bits> cand;
  std::vector<std::uint32_t> point_pattern;
  std::vector<std::vector<int>> perm_map;
  std::vector<std::vector<int>> line_id;                 // per axis
  std::vector<std::vector<std::vector<int>>> line_pts;   // per axis, per line
  std::vector<std::vector<int>> line_type;               // -1 until fixed
  std::vector<std::vector<Bits>> line_present;
  std::vector<std::vector<int>> line_left;
  std::vector<std::vector<int>> type_of_color;  // per axis
  std::vector<std::vector<Bits>> type_mask;     // colors of a type
  std::vector<std::vector<Bits>> type_atoms;    // the type's atom set
  std::vector<int> used;
  int unused_colors;
  std::size_t assigned = 0;
  std::vector<std::vector<int>> sym_maps;

  struct Trail {
    std::vector<std::pair<std::size_t, Bits>> cand_saved;
    std::vector<std::pair<int, int>> types_set;    // (axis, line)
    std::vector<std::pair<int, int>> present_set;  // (axis, line*K+color)
    std::vector<std::pair<int, int>> left_dec;     // (axis, line)
  };

  BaseSearch(const SearchContext& c, int b, std::uint64_t& node_counter,
             std::uint64_t budget_limit)
      : cx(c),
        sp(c.d, b),
        nodes(node_counter),
        budget(budget_limit),
        P(sp.points()),
        K(c.kcount) {
    color.assign(P, -1);
    point_pattern.assign(P, 0);
    int bit = 0;
    for (int i = 0; i < cx.d; ++i)
      for (int j = i + 1; j < cx.d; ++j, ++bit)
        for (std::size_t p = 0; p < P; ++p)
          if (sp.coord(p, i) == sp.coord(p, j))
            point_pattern[p] |= std::uint32_t{1} << bit;

    cand.assign(P, Bits(static_cast<std::size_t>(K)));
    for (std::size_t p = 0; p < P; ++p)
      for (int at = 0; at < K; ++at)
        if (!cx.ops.diags ||
            cx.diag_pattern[static_cast<std::size_t>(at)] == point_pattern[p])
          cand[p].set(static_cast<std::size_t>(at));

    for (const Perm& t : cx.used_perms) {
      std::vector<int> pm(P);
      std::vector<int> seq(static_cast<std::size_t>(cx.d));
      for (std::size_t p = 0; p < P; ++p) {
        for (int i = 0; i < cx.d; ++i)
          seq[static_cast<std::size_t>(i)] = sp.coord(p, t(i));
        pm[p] = static_cast<int>(sp.encode(seq));
      }
      perm_map.push_back(std::move(pm));
    }

    line_id.resize(static_cast<std::size_t>(cx.d));
    line_pts.resize(static_cast<std::size_t>(cx.d));
    line_type.resize(static_cast<std::size_t>(cx.d));
    line_present.resize(static_cast<std::size_t>(cx.d));
    line_left.resize(static_cast<std::size_t>(cx.d));
    type_of_color.resize(static_cast<std::size_t>(cx.d));
    type_mask.resize(static_cast<std::size_t>(cx.d));
    type_atoms.resize(static_cast<std::size_t>(cx.d));
    for (int i = 0; i < cx.d; ++i) {
      const std::size_t ax = static_cast<std::size_t>(i);
      if (!cx.axis_active[ax]) continue;
      const std::size_t lines = P / static_cast<std::size_t>(b);
      line_id[ax].assign(P, 0);
      std::size_t st = 1;
      for (int q = cx.d - 1; q > i; --q) st *= static_cast<std::size_t>(b);
      for (std::size_t p = 0; p < P; ++p) {
        const std::size_t hi = p / (st * static_cast<std::size_t>(b));
        const std::size_t lo = p % st;
        line_id[ax][p] = static_cast<int>(hi * st + lo);
      }
      line_pts[ax].assign(lines, {});
      for (std::size_t p = 0; p < P; ++p)
        line_pts[ax][static_cast<std::size_t>(line_id[ax][p])].push_back(
            static_cast<int>(p));
      line_type[ax].assign(lines, -1);
      line_present[ax].assign(lines, Bits(static_cast<std::size_t>(K)));
      line_left[ax].assign(lines, b);

      auto& toc = type_of_color[ax];
      toc.assign(static_cast<std::size_t>(K), -1);
      std::map<Bits, int> ids;
      for (int at = 0; at < K; ++at) {
        const Bits& pre = cx.cyl_pre[ax * static_cast<std::size_t>(K) +
                                     static_cast<std::size_t>(at)];
        auto [it, fresh] = ids.try_emplace(pre, static_cast<int>(ids.size()));
        if (fresh) {
          type_mask[ax].push_back(Bits(static_cast<std::size_t>(K)));
          type_atoms[ax].push_back(pre);
        }
        toc[static_cast<std::size_t>(at)] = it->second;
        type_mask[ax][static_cast<std::size_t>(it->second)].set(
            static_cast<std::size_t>(at));
      }
    }

    used.assign(static_cast<std::size_t>(K), 0);
    unused_colors = K;

    for (int u = 0; u < b; ++u)
      for (int v = u + 1; v < b; ++v) {
        std::vector<int> pm(P);
        std::vector<int> seq(static_cast<std::size_t>(cx.d));
        for (std::size_t p = 0; p < P; ++p) {
          for (int i = 0; i < cx.d; ++i) {
            const int cv = sp.coord(p, i);
            seq[static_cast<std::size_t>(i)] = cv == u ? v : (cv == v ? u : cv);
          }
          pm[p] = static_cast<int>(sp.encode(seq));
        }
        sym_maps.push_back(std::move(pm));
      }
  }

  bool pattern_feasible() const {
    if (!cx.ops.diags) return static_cast<std::size_t>(K) <= P;
    std::map<std::uint32_t, std::pair<std::size_t, std::size_t>> cnt;
    for (int at = 0; at < K; ++at)
      cnt[cx.diag_pattern[static_cast<std::size_t>(at)]].first++;
    for (std::size_t p = 0; p < P; ++p) {
      auto it = cnt.find(point_pattern[p]);
      if (it != cnt.end()) it->second.second++;
    }
    for (const auto& [pat, c] : cnt)
      if (c.first > c.second) return false;
    return true;
  }

  bool narrow(std::size_t q, const Bits& mask, Trail& tr) {
    Bits nb = cand[q] & mask;
    if (nb == cand[q]) return nb.any();
    tr.cand_saved.emplace_back(q, cand[q]);
    cand[q] = std::move(nb);
    return cand[q].any();
  }

  bool assign(std::size_t p, int c, Trail& tr) {
    color[p] = c;
    ++assigned;
    if (used[static_cast<std::size_t>(c)]++ == 0) --unused_colors;
    if (!narrow(p, Bits::single(static_cast<std::size_t>(K),
                                static_cast<std::size_t>(c)),
                tr))
      return false;

    for (std::size_t t = 0; t < cx.used_perms.size(); ++t) {
      const std::size_t q = static_cast<std::size_t>(perm_map[t][p]);
      Bits allowed(static_cast<std::size_t>(K));
      for (int at = 0; at < K; ++at)
        if (cx.subst_act[t][static_cast<std::size_t>(at)] == c)
          allowed.set(static_cast<std::size_t>(at));
      if (!narrow(q, allowed, tr)) return false;
    }

    for (int i = 0; i < cx.d; ++i) {
      const std::size_t ax = static_cast<std::size_t>(i);
      if (!cx.axis_active[ax]) continue;
      const int L = line_id[ax][p];
      const int ty = type_of_color[ax][static_cast<std::size_t>(c)];
      int& slot = line_type[ax][static_cast<std::size_t>(L)];
      if (slot == -1) {
        slot = ty;
        tr.types_set.push_back({i, L});
        const Bits allowed = type_mask[ax][static_cast<std::size_t>(ty)] &
                             type_atoms[ax][static_cast<std::size_t>(ty)];
        for (int q : line_pts[ax][static_cast<std::size_t>(L)])
          if (static_cast<std::size_t>(q) != p)
            if (!narrow(static_cast<std::size_t>(q), allowed, tr))
              return false;
      } else if (slot != ty) {
        return false;
      }
      Bits& present = line_present[ax][static_cast<std::size_t>(L)];
      if (!present.test(static_cast<std::size_t>(c))) {
        present.set(static_cast<std::size_t>(c));
        tr.present_set.push_back({i, L * K + c});
      }
      --line_left[ax][static_cast<std::size_t>(L)];
      tr.left_dec.push_back({i, L});
      const Bits& need = type_atoms[ax][static_cast<std::size_t>(slot)];
      const std::size_t missing = need.minus(present).count();
      if (line_left[ax][static_cast<std::size_t>(L)] == 0) {
        if (missing != 0 || !present.subset_of(need)) return false;
      } else if (missing >
                 static_cast<std::size_t>(
                     line_left[ax][static_cast<std::size_t>(L)])) {
        return false;
      }
    }
    return static_cast<std::size_t>(unused_colors) <= P - assigned;
  }

  void undo(std::size_t p, int c, Trail& tr) {
    for (auto it = tr.present_set.rbegin(); it != tr.present_set.rend(); ++it)
      line_present[static_cast<std::size_t>(it->first)]
                  [static_cast<std::size_t>(it->second / K)]
                      .reset(static_cast<std::size_t>(it->second % K));
    for (auto it = tr.types_set.rbegin(); it != tr.types_set.rend(); ++it)
      line_type[static_cast<std::size_t>(it->first)]
               [static_cast<std::size_t>(it->second)] = -1;
    for (auto it = tr.left_dec.rbegin(); it != tr.left_dec.rend(); ++it)
      ++line_left[static_cast<std::size_t>(it->first)]
                 [static_cast<std::size_t>(it->second)];
    for (auto it = tr.cand_saved.rbegin(); it != tr.cand_saved.rend(); ++it)
      cand[it->first] = std::move(it->second);
    if (--used[static_cast<std::size_t>(c)] == 0) ++unused_colors;
    --assigned;
    color[p] = -1;
  }

  bool lex_ok(std::size_t upto) const {
    for (const auto& pm : sym_maps) {
      for (std::size_t q = 0; q <= upto; ++q) {
        const int orig = color[q];
        const int mapped = color[static_cast<std::size_t>(pm[q])];
        if (orig < 0 || mapped < 0) break;
        if (mapped < orig) return false;
        if (mapped > orig) break;
      }
    }
    return true;
  }

  bool dfs(std::size_t p) {
    while (p < P && color[p] >= 0) ++p;
    if (p == P) return unused_colors == 0;
    if (++nodes > budget) {
      budget_hit = true;
      return false;
    }
    const Bits options = cand[p];
    for (int c = options.first(); c >= 0; c = options.next(c)) {
      if (used[static_cast<std::size_t>(c)] > 0 &&
          static_cast<std::size_t>(unused_colors) == P - assigned)
        continue;  // the rest must all cover fresh colors
      Trail tr;
      const bool ok = assign(p, c, tr) && lex_ok(p) && dfs(p + 1);
      if (ok) return true;
      undo(p, c, tr);
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace

SearchOutcome search_representation(std::shared_ptr<const Algebra> alg,
                                    const OpSubset& ops, int max_base,
                                    std::uint64_t budget) {
  const Algebra& a = *alg;
  if (a.width() != a.atom_count())
    throw std::invalid_argument(
        "search needs an abstract atomic algebra (width == atom count)");
  SearchContext cx(a, ops);
  SearchOutcome out;
  std::string coverage;
  for (int b = 1; b <= max_base; ++b) {
    std::size_t pts = 1;
    bool overflow = false;
    for (int i = 0; i < a.dim(); ++i) {
      pts *= static_cast<std::size_t>(b);
      if (pts > (std::size_t{1} << 24)) overflow = true;
    }
    if (overflow) {
      coverage += "base " + std::to_string(b) + ": skipped (too large); ";
      continue;
    }
    if (pts < a.atom_count()) {
      coverage += "base " + std::to_string(b) + ": excluded by counting; ";
      continue;
    }
    BaseSearch bs(cx, b, out.nodes, budget);
    if (!bs.pattern_feasible()) {
      coverage +=
          "base " + std::to_string(b) + ": excluded by pattern counting; ";
      continue;
    }
    if (bs.dfs(0)) {
      auto spw = std::make_shared<const SeqSpace>(a.dim(), b);
      auto tgt = std::make_shared<const PowersetAlgebra>(
          spw, std::min(a.subst_bound(), a.dim()));
      Homomorphism h;
      h.source = alg;
      h.target = tgt;
      for (std::size_t at = 0; at < a.atom_count(); ++at) {
        h.domain_atoms.push_back(a.atom(at));
        Bits img(spw->points());
        for (std::size_t p = 0; p < spw->points(); ++p)
          if (bs.color[p] == static_cast<int>(at)) img.set(p);
        h.images.push_back(std::move(img));
      }
      h.ops = ops;
      h.injective = true;
      h.label = "found representation on base " + std::to_string(b);
      out.status = SearchOutcome::Status::Found;
      out.hom = std::move(h);
      out.target = tgt;
      out.coverage = coverage + "base " + std::to_string(b) + ": found";
      return out;
    }
    if (bs.budget_hit) {
      out.status = SearchOutcome::Status::BudgetExceeded;
      out.coverage =
          coverage + "base " + std::to_string(b) + ": budget exceeded";
      return out;
    }
    coverage += "base " + std::to_string(b) + ": exhausted; ";
  }
  out.status = SearchOutcome::Status::ExhaustedNone;
  out.coverage = coverage;
  return out;
}

}  // namespace qea
