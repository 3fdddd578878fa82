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

#include "qea/term.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace qea {

Term Term::var(int v) {
  Term t;
  t.kind = Kind::Var;
  t.a = v;
  return t;
}

Term Term::zero() {
  Term t;
  t.kind = Kind::Zero;
  return t;
}

Term Term::one() {
  Term t;
  t.kind = Kind::One;
  return t;
}

Term Term::diag(int i, int j) {
  Term t;
  t.kind = Kind::Diag;
  t.a = i;
  t.b = j;
  return t;
}

Term Term::complement(Term c) {
  Term t;
  t.kind = Kind::Compl;
  t.kids.push_back(std::move(c));
  return t;
}

Term Term::cyl(int i, Term c) {
  Term t;
  t.kind = Kind::Cyl;
  t.a = i;
  t.kids.push_back(std::move(c));
  return t;
}

Term Term::subst(Perm p, Term c) {
  Term t;
  t.kind = Kind::Subst;
  t.perm = std::move(p);
  t.kids.push_back(std::move(c));
  return t;
}

Term Term::plus(Term l, Term r) {
  Term t;
  t.kind = Kind::Plus;
  t.kids.push_back(std::move(l));
  t.kids.push_back(std::move(r));
  return t;
}

Term Term::times(Term l, Term r) {
  Term t;
  t.kind = Kind::Times;
  t.kids.push_back(std::move(l));
  t.kids.push_back(std::move(r));
  return t;
}

bool Term::operator==(const Term& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Var:
      return a == o.a;
    case Kind::Zero:
    case Kind::One:
      return true;
    case Kind::Diag:
      return a == o.a && b == o.b;
    case Kind::Cyl:
      if (a != o.a) return false;
      break;
    case Kind::Subst:
      if (!(perm == o.perm)) return false;
      break;
    default:
      break;
  }
  return kids == o.kids;
}

int Term::max_dim_index() const {
  int m = -1;
  switch (kind) {
    case Kind::Diag:
      m = std::max(a, b);
      break;
    case Kind::Cyl:
      m = a;
      break;
    case Kind::Subst:
      m = perm.support() - 1;
      break;
    default:
      break;
  }
  for (const Term& k : kids) m = std::max(m, k.max_dim_index());
  return m;
}

int Term::variable_count() const {
  int m = 0;
  if (kind == Kind::Var) m = a + 1;
  for (const Term& k : kids) m = std::max(m, k.variable_count());
  return m;
}

Term replacement_term(int i, int j, Term body) {
  if (i < 0 || j < 0) throw std::out_of_range("replacement index negative");
  if (i == j) return body;
  return Term::cyl(i, Term::times(Term::diag(i, j), std::move(body)));
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int dim, int bound)
      : s_(text), d_(dim), n_(bound) {}

  Term run() {
    Term t = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int d_, n_;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool eat(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  int nat() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected a number");
    long v = 0;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) fail("index too large");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  int dim_index() {
    const std::size_t at = pos_;
    int v = nat();
    if (v >= d_)
      throw ParseError("index " + std::to_string(v) + " not below dimension " +
                           std::to_string(d_),
                       at);
    return v;
  }

  Term expr() {
    Term t = term();
    while (eat('+')) t = Term::plus(std::move(t), term());
    return t;
  }

  Term term() {
    Term t = factor();
    while (eat('*')) t = Term::times(std::move(t), factor());
    return t;
  }

  Term factor() {
    if (eat('-')) return Term::complement(factor());
    return atom();
  }

  Perm transposition_list() {
    Perm p = Perm::identity(n_);
    bool got = false;
    while (peek_is('[')) {
      expect('[');
      const std::size_t at = pos_;
      int i = nat();
      expect(',');
      int j = nat();
      expect(']');
      if (i >= n_ || j >= n_)
        throw ParseError("transposition [" + std::to_string(i) + "," +
                             std::to_string(j) + "] not within bound " +
                             std::to_string(n_),
                         at);
      p = p * Perm::transposition(n_, i, j);
      got = true;
    }
    if (!got) fail("expected '['");
    return p;
  }

  Term atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Term t = expr();
      expect(')');
      return t;
    }
    if (c == '0') {
      ++pos_;
      return Term::zero();
    }
    if (c == '1') {
      ++pos_;
      return Term::one();
    }
    if (c == 'x') {
      ++pos_;
      return Term::var(nat());
    }
    if (c == 'd') {
      ++pos_;
      expect('(');
      int i = dim_index();
      expect(',');
      int j = dim_index();
      expect(')');
      return Term::diag(i, j);
    }
    if (c == 'c') {
      ++pos_;
      int i = dim_index();
      expect('(');
      Term t = expr();
      expect(')');
      return Term::cyl(i, std::move(t));
    }
    if (c == 's') {
      ++pos_;
      Perm p = transposition_list();
      expect('(');
      Term t = expr();
      expect(')');
      return Term::subst(std::move(p), std::move(t));
    }
    fail("unexpected character");
  }
};

void print(const Term& t, std::string& out) {
  switch (t.kind) {
    case Term::Kind::Var:
      out += 'x';
      out += std::to_string(t.a);
      return;
    case Term::Kind::Zero:
      out += '0';
      return;
    case Term::Kind::One:
      out += '1';
      return;
    case Term::Kind::Diag:
      out += "d(";
      out += std::to_string(t.a);
      out += ',';
      out += std::to_string(t.b);
      out += ')';
      return;
    case Term::Kind::Compl:
      out += '-';
      if (t.kids[0].kind == Term::Kind::Plus ||
          t.kids[0].kind == Term::Kind::Times) {
        out += '(';
        print(t.kids[0], out);
        out += ')';
      } else {
        print(t.kids[0], out);
      }
      return;
    case Term::Kind::Cyl:
      out += 'c';
      out += std::to_string(t.a);
      out += '(';
      print(t.kids[0], out);
      out += ')';
      return;
    case Term::Kind::Subst: {
      if (t.perm.is_identity()) {
        print(t.kids[0], out);
        return;
      }
      out += 's';
      for (auto [i, j] : t.perm.transpositions()) {
        out += '[';
        out += std::to_string(i);
        out += ',';
        out += std::to_string(j);
        out += ']';
      }
      out += '(';
      print(t.kids[0], out);
      out += ')';
      return;
    }
    case Term::Kind::Plus: {
      // The grammar is left-associative; parenthesize a right-nested sum.
      print(t.kids[0], out);
      out += " + ";
      if (t.kids[1].kind == Term::Kind::Plus) {
        out += '(';
        print(t.kids[1], out);
        out += ')';
      } else {
        print(t.kids[1], out);
      }
      return;
    }
    case Term::Kind::Times: {
      if (t.kids[0].kind == Term::Kind::Plus) {
        out += '(';
        print(t.kids[0], out);
        out += ')';
      } else {
        print(t.kids[0], out);
      }
      out += " * ";
      if (t.kids[1].kind == Term::Kind::Plus ||
          t.kids[1].kind == Term::Kind::Times) {
        out += '(';
        print(t.kids[1], out);
        out += ')';
      } else {
        print(t.kids[1], out);
      }
      return;
    }
  }
}

}  // namespace

Term parse_term(std::string_view text, int dimension, int bound) {
  return Parser(text, dimension, bound).run();
}

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

}  // namespace qea
