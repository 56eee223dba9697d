// Copyright 2026 paralog contributors
#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "paralog/error.hpp"
#include "paralog/heyting.hpp"
#include "paralog/rng.hpp"

using namespace paralog;
using heyting::FiniteHeyting;
using heyting::LatticeTables;
using heyting::PairAlgebra;
using heyting::Poset;

namespace {

// Exhaustive law check used against every algebra the suite constructs.
void check_heyting_laws(const FiniteHeyting& h) {
  const int n = h.size();
  for (int a = 0; a < n; ++a) {
    CHECK(h.leq(h.bottom(), a));
    CHECK(h.leq(a, h.top()));
    CHECK(h.meet(a, a) == a);
    CHECK(h.join(a, a) == a);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      CHECK(h.meet(a, b) == h.meet(b, a));
      CHECK(h.join(a, b) == h.join(b, a));
      // adjunction: c <= a -> b iff c & a <= b
      for (int c = 0; c < n; ++c) {
        CHECK(h.leq(c, h.imp(a, b)) == h.leq(h.meet(c, a), b));
        CHECK(h.meet(a, h.join(b, c)) ==
              h.join(h.meet(a, b), h.meet(a, c)));
      }
    }
}

}  // namespace

TEST_SUITE("heyting") {

TEST_CASE("chains") {
  auto h = FiniteHeyting::chain(3);
  CHECK(h.size() == 3);
  CHECK(h.bottom() == 0);
  CHECK(h.top() == 2);
  CHECK(h.meet(1, 2) == 1);
  CHECK(h.join(1, 2) == 2);
  CHECK(h.imp(2, 1) == 1);   // top -> b collapses to b
  CHECK(h.imp(1, 2) == 2);   // a <= b gives top
  CHECK(h.compl_of(0) == 2);
  CHECK(h.compl_of(1) == 0);  // mid element has trivial pseudo-complement
  CHECK(h.compl_of(2) == 0);
  check_heyting_laws(h);
  CHECK_THROWS_AS(FiniteHeyting::chain(0), ValidationError);
}

TEST_CASE("boolean2 is classical") {
  auto h = FiniteHeyting::boolean2();
  CHECK(h.size() == 2);
  CHECK(h.compl_of(h.bottom()) == h.top());
  CHECK(h.compl_of(h.top()) == h.bottom());
  // double complement is the identity only in the Boolean case
  for (int a = 0; a < 2; ++a) CHECK(h.compl_of(h.compl_of(a)) == a);
  check_heyting_laws(h);
}

TEST_CASE("downsets of an antichain form a power set") {
  Poset p({"x", "y"}, {});
  auto h = FiniteHeyting::downsets(p);
  CHECK(h.size() == 4);
  CHECK(h.label(h.bottom()) == "{}");
  CHECK(h.label(h.top()) == "{x,y}");
  // complement behaves classically on a Boolean algebra
  for (int a = 0; a < 4; ++a) CHECK(h.compl_of(h.compl_of(a)) == a);
  check_heyting_laws(h);
}

TEST_CASE("downsets of a chain poset form a chain") {
  Poset p({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.leq(p.index_of("a"), p.index_of("c")));  // closure
  CHECK_FALSE(p.leq(p.index_of("c"), p.index_of("a")));
  auto h = FiniteHeyting::downsets(p);
  CHECK(h.size() == 4);
  int chain_len = 0;
  for (int a = 0; a < h.size(); ++a)
    chain_len += h.leq(h.bottom(), a) ? 1 : 0;
  CHECK(chain_len == 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK((h.leq(a, b) || h.leq(b, a)));
  check_heyting_laws(h);
}

TEST_CASE("poset input validation") {
  CHECK_THROWS_AS(Poset({"a", "a"}, {}), ValidationError);
  CHECK_THROWS_AS(Poset({"a", "b"}, {{"a", "z"}}), ValidationError);
  CHECK_THROWS_AS(Poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                  ValidationError);
  Poset ok({"a"}, {});
  CHECK_THROWS_AS(ok.index_of("missing"), ValidationError);
}

// The pentagon N5 is a bounded lattice but not distributive, so it cannot
// carry a Heyting implication; validate must say so rather than accept it.
TEST_CASE("validate rejects the pentagon") {
  // 0 < a(1) < c(2) < top(4), 0 < b(3) < top(4)
  const int n = 5;
  auto lt = [](int x, int y) {
    auto in = [](int v, std::initializer_list<int> s) {
      return std::find(s.begin(), s.end(), v) != s.end();
    };
    if (x == y) return true;
    if (x == 0) return true;
    if (y == 4) return true;
    return x == 1 && in(y, {2});
  };
  LatticeTables t;
  t.n = n;
  t.bottom = 0;
  t.top = 4;
  t.leq.assign(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.leq[a * n + b] = lt(a, b) ? 1 : 0;
  t.meet.assign(n * n, 0);
  t.join.assign(n * n, 0);
  t.imp.assign(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // glb and lub exist in N5; find them by scanning
      int m = 0, j = 4;
      for (int c = 0; c < n; ++c) {
        if (lt(c, a) && lt(c, b) && lt(m, c)) m = c;
        if (lt(a, c) && lt(b, c) && lt(c, j)) j = c;
      }
      t.meet[a * n + b] = m;
      t.join[a * n + b] = j;
      int imp = 0;
      for (int c = 0; c < n; ++c) {
        int mc = 0;
        for (int d = 0; d < n; ++d)
          if (lt(d, c) && lt(d, a) && lt(mc, d)) mc = d;
        if (lt(mc, b) && lt(imp, c)) imp = c;
      }
      t.imp[a * n + b] = imp;
    }
  auto report = FiniteHeyting::validate(t);
  CHECK_FALSE(report.ok());
  bool distributivity_flagged = false;
  for (const auto& v : report.violations)
    if (v.law == "distributivity") distributivity_flagged = true;
  CHECK(distributivity_flagged);
  CHECK_THROWS_AS(FiniteHeyting::from_tables(t), ValidationError);
}

TEST_CASE("from_tables accepts what downsets builds") {
  Poset p({"x", "y", "z"}, {{"x", "z"}});
  auto h = FiniteHeyting::downsets(p);
  auto h2 = FiniteHeyting::from_tables(h.tables());
  CHECK(h2.size() == h.size());
  CHECK(FiniteHeyting::validate(h.tables()).ok());
}

TEST_CASE("random downset algebras satisfy residuation") {
  std::mt19937_64 g(2026);
  for (int round = 0; round < 25; ++round) {
    int n = 2 + static_cast<int>(bounded_draw(g, 4));  // 2..5 elements
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (bounded_draw(g, 3) == 0) covers.emplace_back(names[i], names[j]);
    auto h = FiniteHeyting::downsets(Poset(names, covers));
    check_heyting_laws(h);
    CHECK(FiniteHeyting::validate(h.tables()).ok());
  }
}

TEST_CASE("pair algebra structure") {
  PairAlgebra pa(FiniteHeyting::chain(3));
  CHECK(pa.size() == 9);
  // id/element round trip
  for (std::size_t i = 0; i < pa.size(); ++i) CHECK(pa.id(pa.element(i)) == i);
  // units pairwise distinct over any base with at least two elements
  std::vector<PairAlgebra::Elem> units = {pa.unit_true(), pa.unit_false(),
                                          pa.unit_neither(), pa.unit_both()};
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = i + 1; j < units.size(); ++j)
      CHECK_FALSE(units[i] == units[j]);
  CHECK(pa.label(pa.unit_true()) == "(2,0)");
  // negation swaps coordinates and is involutive over any base
  for (std::size_t i = 0; i < pa.size(); ++i) {
    auto e = pa.element(i);
    CHECK(pa.neg(pa.neg(e)) == e);
    CHECK(pa.designated(e) == (e.pos == pa.base().top()));
    // tensor keeps unit_both as its unit beyond the Boolean case
    CHECK(pa.tensor(e, pa.unit_both()) == e);
    CHECK(pa.tensor(pa.unit_both(), e) == e);
  }
  // the demi 4-cycle is a Boolean-base privilege; chain(3) breaks it
  PairAlgebra::Elem mid{1, 1};
  CHECK_FALSE(pa.demi(pa.demi(pa.demi(pa.demi(mid)))) == mid);
}

TEST_CASE("pair algebra deduction law over a non-boolean base") {
  PairAlgebra pa(FiniteHeyting::chain(3));
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = 0; j < pa.size(); ++j)
      for (std::size_t k = 0; k < pa.size(); ++k) {
        auto a = pa.element(i), b = pa.element(j), c = pa.element(k);
        CHECK(pa.strong_imp(pa.tensor(a, b), c) ==
              pa.strong_imp(a, pa.strong_imp(b, c)));
      }
}

}  // TEST_SUITE
