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

// End-to-end acceptance suite. Each criterion prints one pass/fail line and
// enforces its own wall-clock bound; the process exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "qea/nondiag.hpp"
#include "qea/runner.hpp"
#include "qea/witness.hpp"

using namespace qea;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string name;
  double seconds_limit;
  std::function<bool(std::string&)> body;
};

struct TinyWorld {
  BaseSpec base{std::vector<int>{2, 2, 2}};
  std::shared_ptr<const SeqSpace> sp;
  Bits r;
  std::shared_ptr<const GeneratedAlgebra> a;
  std::shared_ptr<const SplitAlgebra> s;
  TinyWorld() {
    sp = std::make_shared<const SeqSpace>(3, base.universe());
    r = product_r(*sp, base);
    a = GeneratedAlgebra::generate(sp, 2, {r});
    s = split(SplitSpec{a, r, 2, 2, 1});
  }
};

TinyWorld& tiny() {
  static TinyWorld w;
  return w;
}

bool criterion_operator_laws(std::string& detail) {
  // Full powerset algebra at d=3, |U|=6. The law quantifiers run over the
  // atoms of the generated subalgebra of R (complete for the whole
  // subalgebra, every operator being additive) and 1000 seeded random
  // elements of the powerset.
  TinyWorld& t = tiny();
  LawReport rep = operator_law_suite(*t.sp, 2, t.a->atoms(), 1000, 2026);
  for (const auto& e : rep.entries)
    if (!e.pass) {
      detail = e.law + " " + e.witness;
      return false;
    }
  detail = std::to_string(rep.entries.size()) + " laws";
  return true;
}

bool criterion_atomhood(std::string& detail) {
  BaseSpec base({2, 2, 2});
  auto sp = std::make_shared<const SeqSpace>(3, base.universe());
  Bits r = product_r(*sp, base);
  auto a = GeneratedAlgebra::generate(sp, 2, {r}, 100000);
  const Perm t01 = Perm::transposition(2, 0, 1);
  const Bits copy = a->subst(t01, r);
  if (!a->is_atom_of(r) || !a->is_atom_of(copy)) {
    detail = "substitution copies are not atoms";
    return false;
  }
  if (r.intersects(copy)) {
    detail = "copies intersect";
    return false;
  }
  detail = std::to_string(a->atom_count()) + " atoms, below cap";
  return true;
}

bool criterion_witness_vanishing(std::string& detail) {
  TinyWorld& t = tiny();
  if (!witness_vanishes(*t.a, t.r, 2).zero) {
    detail = "witness value nonzero over the small block";
    return false;
  }
  BaseSpec big({3, 2, 2});
  auto bsp = std::make_shared<const SeqSpace>(3, big.universe());
  PowersetAlgebra bpow(bsp, 2);
  TauValue control = witness_vanishes(bpow, product_r(*bsp, big), 2);
  if (control.zero) {
    detail = "control with the enlarged block still vanishes";
    return false;
  }
  std::string pt;
  for (int v : bsp->decode(static_cast<std::size_t>(control.value.first())))
    pt += std::to_string(v) + " ";
  detail = "control witness point: " + pt;
  return true;
}

bool criterion_split_laws(std::string& detail) {
  TinyWorld& t = tiny();
  VerificationRecord rec = verify_split(t.s);
  if (!rec.ok()) {
    detail = rec.first_failure();
    return false;
  }
  // 18 cylindrification triples (3 axes x 2 substitutions x 3 parts) are
  // covered by the re-derivation inside verify_split; the witness term
  // vanishes in the split algebra as well.
  if (!witness_vanishes(*t.s, t.s->expand(t.r), 2).zero) {
    detail = "witness value nonzero in the split algebra";
    return false;
  }
  detail = std::to_string(rec.entries.size()) + " structural checks";
  return true;
}

bool criterion_refutation(std::string& detail) {
  TinyWorld& t = tiny();
  std::mt19937_64 rng(20260808);
  int certs = 0, viols = 0;
  for (int it = 0; it < 100; ++it) {
    const int wb = 3 + static_cast<int>(rng() % 4);  // |W| in {3..6}
    auto wsp = std::make_shared<const SeqSpace>(3, wb);
    auto wpow = std::make_shared<const PowersetAlgebra>(wsp, 2);
    Homomorphism h;
    h.source = t.s;
    h.target = wpow;
    h.ops = OpSubset::cylindric(3);
    for (std::size_t a = 0; a < t.s->atom_count(); ++a) {
      h.domain_atoms.push_back(t.s->atom(a));
      h.images.push_back(Bits(wsp->points()));
    }
    const int kind = static_cast<int>(rng() % 3);
    std::vector<int> tail{0, static_cast<int>(rng() % wb),
                          static_cast<int>(rng() % wb)};
    if (kind == 0) {
      // Locally consistent: disjoint singleton part images along one
      // coordinate-0 line. The engine must extract a certificate.
      for (int j = 0; j <= 2; ++j) {
        tail[0] = j;
        h.images[t.s->named_atom(0, j)].set(wsp->encode(tail));
      }
    } else if (kind == 1) {
      // Two parts share a point.
      const std::size_t p = rng() % wsp->points();
      h.images[t.s->named_atom(0, 0)].set(p);
      h.images[t.s->named_atom(0, 1)].set(p);
      h.images[t.s->named_atom(0, 2)].set(rng() % wsp->points());
    } else {
      // Mixed tails guarantee a missing coordinate-0 witness somewhere.
      tail[0] = 0;
      h.images[t.s->named_atom(0, 0)].set(wsp->encode(tail));
      h.images[t.s->named_atom(0, 1)].set(
          wsp->encode(std::vector<int>{1, tail[1], tail[2]}));
      std::vector<int> other{2, (tail[1] + 1) % wb, tail[2]};
      h.images[t.s->named_atom(0, 2)].set(wsp->encode(other));
    }
    if (h.apply(t.s->expand(t.r)).none()) {
      detail = "generator produced a collapsed candidate";
      return false;
    }
    RefuteOutcome out = refute_representation(*t.s, h);
    if (const auto* cert = std::get_if<RefutationCertificate>(&out)) {
      ++certs;
      if (!reverify(*cert, *t.s, h)) {
        detail = "certificate failed re-verification";
        return false;
      }
      if (static_cast<int>(cert->w.size()) != 3) {
        detail = "certificate misses base points";
        return false;
      }
    } else {
      ++viols;
      if (!reverify(std::get<HomViolation>(out), *t.s, h)) {
        detail = "violation failed re-verification";
        return false;
      }
    }
    if (kind == 0 && !std::holds_alternative<RefutationCertificate>(out)) {
      detail = "locally consistent candidate did not yield a certificate";
      return false;
    }
  }
  if (certs + viols != 100) {
    detail = "an outcome went missing";
    return false;
  }
  detail = std::to_string(certs) + " certificates, " +
           std::to_string(viols) + " violations";
  return true;
}

bool criterion_search(std::string& detail) {
  TinyWorld& t = tiny();
  SearchOutcome none =
      search_representation(t.s, OpSubset::cylindric(3), 4, 1u << 24);
  if (none.status != SearchOutcome::Status::ExhaustedNone) {
    detail = "split reduct search did not exhaust: " + none.coverage;
    return false;
  }
  auto bao = std::make_shared<const FiniteBAO>(from_concrete(*t.a));
  SearchOutcome found =
      search_representation(bao, OpSubset::full(3, 2), 6, 1u << 26);
  if (found.status != SearchOutcome::Status::Found || !found.hom) {
    detail = "no representation found for the base algebra";
    return false;
  }
  VerificationRecord rec = verify_hom(*found.hom);
  if (!rec.ok()) {
    detail = "found map fails verification: " + rec.first_failure();
    return false;
  }
  detail = "exhausted to base 4; found at base 6 in " +
           std::to_string(found.nodes) + " nodes";
  return true;
}

bool criterion_block_bound(std::string& detail) {
  std::mt19937_64 rng(515151);
  const struct {
    int k, n, m;
  } cases[] = {{1, 1, 4}, {1, 2, 8}, {2, 2, 16}};
  for (const auto& c : cases) {
    const std::size_t rows =
        static_cast<std::size_t>(c.k) * symmetric_group(c.n).size();
    const std::uint64_t bound = std::uint64_t{1} << rows;
    for (int it = 0; it < 500; ++it) {
      std::vector<std::vector<bool>> table(
          rows, std::vector<bool>(static_cast<std::size_t>(c.m + 1)));
      for (auto& row : table)
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = rng() & 1u;
      const auto blocks = signature_blocks(c.m + 1, table);
      if (static_cast<std::uint64_t>(blocks.size()) > bound) {
        detail = "bound broken at k=" + std::to_string(c.k) +
                 " n=" + std::to_string(c.n) + " m=" + std::to_string(c.m);
        return false;
      }
    }
  }
  detail = "1500 samples within 2^(k*n!)";
  return true;
}

bool criterion_real_partition(std::string& detail) {
  {
    BaseSpec base({2, 2, 2});
    auto sp = std::make_shared<const SeqSpace>(3, base.universe());
    RealPartition rp = real_partition(*sp, base.block_lists(), 2);
    if (!rp.checks.ok()) {
      detail = "q=2: " + rp.checks.first_failure();
      return false;
    }
  }
  {
    BaseSpec base({3, 3, 3});
    auto sp = std::make_shared<const SeqSpace>(3, base.universe());
    RealPartition rp = real_partition(*sp, base.block_lists(), 3);
    if (!rp.checks.ok()) {
      detail = "q=3: " + rp.checks.first_failure();
      return false;
    }
  }
  detail = "pieces disjoint, covering, cylindrification-full";
  return true;
}

bool criterion_small_subalgebra(std::string& detail) {
  TinyWorld& t = tiny();
  // Seeded single-generator family whose induced partition merges into the
  // m real pieces.
  std::mt19937_64 rng(606060);
  EquivPartition part;
  bool found = false;
  for (int attempt = 0; attempt < 1024 && !found; ++attempt) {
    Bits g(t.s->width());
    for (std::size_t a = 0; a < t.s->atom_count(); ++a)
      if (rng() & 1u) g.set(a);
    part = equiv_blocks(*t.s, {g});
    found = part.p() <= 2;
  }
  if (!found) {
    detail = "no mergeable generator found";
    return false;
  }
  auto [b, brec] = small_subalgebra(t.s, part);
  if (!brec.ok()) {
    detail = brec.first_failure();
    return false;
  }
  RealPartition rp = real_partition(*t.sp, t.base.block_lists(), 2);
  auto a2 = GeneratedAlgebra::generate(t.sp, 2, rp.pieces);
  Homomorphism h = embed_small(b, rp, a2);
  VerificationRecord rec = verify_hom(h);
  if (!rec.ok()) {
    detail = rec.first_failure();
    return false;
  }
  detail = "p = " + std::to_string(part.p()) + ", " +
           std::to_string(b->atom_count()) + " minimal elements, full signature";
  return true;
}

bool criterion_embed_split(std::string& detail) {
  TinyWorld& t = tiny();
  auto s1 = split(SplitSpec{t.a, t.r, 2, 1, 1});
  auto s2 = split(SplitSpec{t.a, t.r, 4, 2, 1});
  Homomorphism h = embed_split(s1, s2, default_chi(2, 4));
  VerificationRecord rec = verify_hom(h);
  if (!rec.ok()) {
    detail = "first embedding: " + rec.first_failure();
    return false;
  }
  auto s3 = split(SplitSpec{t.a, t.r, 9, 2, 1});
  Homomorphism h2 = embed_split(s2, s3, default_chi(4, 9));
  VerificationRecord rec2 = verify_hom(h2);
  if (!rec2.ok()) {
    detail = "second embedding: " + rec2.first_failure();
    return false;
  }
  VerificationRecord recc = verify_hom(compose(h, h2));
  if (!recc.ok()) {
    detail = "composition: " + recc.first_failure();
    return false;
  }
  detail = "both embeddings and their composition verify";
  return true;
}

bool criterion_nondiag(std::string& detail) {
  BaseSpec base({2, 3, 3});
  auto usp = std::make_shared<const SeqSpace>(3, base.universe());
  Bits r = product_r(*usp, base);
  auto a = GeneratedAlgebra::generate(usp, 2, {r});
  auto s = split(SplitSpec{a, r, 2, 2, 1});
  DiagonalFreeRep rep = diagonal_free_representation(s, EnlargedBase(base, 1));
  VerificationRecord rec = verify_hom(rep.hom);
  if (!rec.passed("domain") || !rec.passed("boolean") ||
      !rec.passed("injective")) {
    detail = "boolean structure: " + rec.first_failure();
    return false;
  }
  if (!rec.passed("cyl[") || !rec.passed("subst[") || !rec.passed("repl[")) {
    detail = "an operator fails: " + rec.first_failure();
    return false;
  }
  for (const auto& e : rec.entries)
    if (e.law.rfind("diag[", 0) == 0 && !e.pass) {
      detail = "diagonal failure recorded at " + e.law + " (" + e.witness +
               ")";
      return true;
    }
  detail = "no diagonal failed";
  return false;
}

bool criterion_quasi_persistence(std::string& detail) {
  TinyWorld& t = tiny();
  // Complete over every element: both sides are additive in x, so the atoms
  // below each complemented diagonal decide the whole element family.
  VerificationRecord rec = diag_quasi_persistence(*t.s);
  if (!rec.ok()) {
    detail = rec.first_failure();
    return false;
  }
  detail = std::to_string(rec.entries.size()) + " ordered index pairs";
  return true;
}

bool criterion_determinism(std::string& detail) {
#ifndef QESPLIT_BIN_PATH
  detail = "driver binary path not wired in";
  return false;
#else
  const std::string bin = QESPLIT_BIN_PATH;
  const std::string r1 = "/tmp/qesplit_accept_1.json";
  const std::string r2 = "/tmp/qesplit_accept_2.json";
  for (const std::string& r : {r1, r2}) {
    const std::string cmd =
        bin + " run --preset tiny --report " + r + " >/dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) {
      detail = "driver run failed";
      return false;
    }
  }
  auto strip = [](const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
      if (line.find("\"millis\"") == std::string::npos) out << line << '\n';
    return out.str();
  };
  const std::string a = strip(r1), b = strip(r2);
  if (a.empty() || a != b) {
    detail = "reports differ beyond timing fields";
    return false;
  }
  std::remove(r1.c_str());
  std::remove(r2.c_str());
  detail = "byte-identical modulo millis";
  return true;
#endif
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"operator-law suite (d=3, |U|=6)", 5.0, criterion_operator_laws},
      {"atomhood and disjointness of substitution copies", 5.0,
       criterion_atomhood},
      {"witness vanishing and its control", 2.0, criterion_witness_vanishing},
      {"split construction laws", 5.0, criterion_split_laws},
      {"refutation engine on 100 seeded candidates", 10.0,
       criterion_refutation},
      {"bounded representation search", 60.0, criterion_search},
      {"block-count bound on 500 seeded generator sets", 5.0,
       criterion_block_bound},
      {"real partitions at q=2 and q=3", 2.0, criterion_real_partition},
      {"merged-subalgebra representability", 10.0,
       criterion_small_subalgebra},
      {"refinement embeddings between splittings", 10.0,
       criterion_embed_split},
      {"diagonal-free representation", 10.0, criterion_nondiag},
      {"quasi-inequality persistence in the split algebra", 5.0,
       criterion_quasi_persistence},
      {"end-to-end determinism of the tiny preset", 60.0,
       criterion_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > criteria[i].seconds_limit) {
      ok = false;
      detail += " [over the " + std::to_string(criteria[i].seconds_limit) +
                "s budget]";
    }
    std::printf("[%2zu] %-52s %s (%.2fs)%s%s\n", i + 1,
                criteria[i].name.c_str(), ok ? "PASS" : "FAIL", secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
  if (failures) {
    std::printf("%d of %zu acceptance criteria failed\n", failures,
                criteria.size());
    return 1;
  }
  std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return 0;
}
