// Copyright 2026 paralog contributors
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "paralog/error.hpp"
#include "paralog/fca.hpp"
#include "paralog/rng.hpp"

using namespace paralog;
using namespace paralog::fca;

namespace {

FormalContext crisp_ctx(int n_obj, int n_prop, const std::vector<int>& ones) {
  FormalContext c;
  c.mode = Mode::Crisp;
  for (int i = 0; i < n_obj; ++i) c.objects.push_back("o" + std::to_string(i));
  for (int j = 0; j < n_prop; ++j)
    c.properties.push_back("p" + std::to_string(j));
  c.inc.assign(n_obj * n_prop, PBit::F);
  for (int cell : ones) c.inc[cell] = PBit::T;
  return c;
}

FormalContext random_ctx(std::mt19937_64& g, Mode mode) {
  FormalContext c;
  c.mode = mode;
  int n_obj = 1 + static_cast<int>(bounded_draw(g, 5));
  int n_prop = 1 + static_cast<int>(bounded_draw(g, 5));
  for (int i = 0; i < n_obj; ++i) c.objects.push_back("o" + std::to_string(i));
  for (int j = 0; j < n_prop; ++j)
    c.properties.push_back("p" + std::to_string(j));
  for (int i = 0; i < n_obj * n_prop; ++i) {
    if (mode == Mode::Crisp)
      c.inc.push_back(bounded_draw(g, 2) ? PBit::T : PBit::F);
    else
      c.inc.push_back(static_cast<PBit>(bounded_draw(g, 4)));
  }
  return c;
}

FormalContext random_fuzzy_ctx(std::mt19937_64& g, int grades,
                               Residuum r = Residuum::Goedel) {
  FormalContext c;
  c.mode = Mode::Fuzzy;
  c.grades = grades;
  c.residuum = r;
  int n_obj = 1 + static_cast<int>(bounded_draw(g, 3));
  int n_prop = 1 + static_cast<int>(bounded_draw(g, 3));
  for (int i = 0; i < n_obj; ++i) c.objects.push_back("o" + std::to_string(i));
  for (int j = 0; j < n_prop; ++j)
    c.properties.push_back("p" + std::to_string(j));
  for (int i = 0; i < n_obj * n_prop; ++i) {
    c.inc_pos.push_back(static_cast<int>(bounded_draw(g, grades + 1)));
    c.inc_neg.push_back(static_cast<int>(bounded_draw(g, grades + 1)));
  }
  return c;
}

std::vector<SetConcept> set_concepts(const ConceptLattice& l) {
  std::vector<SetConcept> out;
  for (const auto& c : l.concepts) out.push_back(std::get<SetConcept>(c));
  return out;
}

}  // namespace

TEST_SUITE("fca") {

TEST_CASE("diagonal context") {
  // two objects, each with its own property
  auto ctx = crisp_ctx(2, 2, {0, 3});
  auto l = enumerate_concepts(ctx);
  auto cs = set_concepts(l);
  REQUIRE(cs.size() == 4);
  // sorted by extent: {}, {0}, {1}, {0,1}
  CHECK(cs[0].extent.empty());
  CHECK(cs[0].intent == std::vector<int>{0, 1});
  CHECK(cs[1].extent == std::vector<int>{0});
  CHECK(cs[1].intent == std::vector<int>{0});
  CHECK(cs[2].extent == std::vector<int>{0, 1});
  CHECK(cs[2].intent.empty());
  CHECK(cs[3].extent == std::vector<int>{1});
  CHECK(cs[3].intent == std::vector<int>{1});
  CHECK(verify_lattice(l).empty());
}

TEST_CASE("full and empty contexts collapse") {
  auto full = crisp_ctx(2, 2, {0, 1, 2, 3});
  auto lf = enumerate_concepts(full);
  REQUIRE(lf.concepts.size() == 1);
  CHECK(std::get<SetConcept>(lf.concepts[0]).extent ==
        std::vector<int>{0, 1});
  CHECK(std::get<SetConcept>(lf.concepts[0]).intent ==
        std::vector<int>{0, 1});
  auto empty = crisp_ctx(2, 2, {});
  auto le = enumerate_concepts(empty);
  REQUIRE(le.concepts.size() == 2);  // top and bottom only
  CHECK(verify_lattice(le).empty());
}

TEST_CASE("para derivations read the designated bit") {
  FormalContext ctx;
  ctx.mode = Mode::Para;
  ctx.objects = {"o"};
  ctx.properties = {"p1", "p2"};
  ctx.inc = {PBit::B, PBit::F};
  // B carries the positive bit, F does not
  CHECK(derive_properties(ctx, {0}) == std::vector<int>{0});
  CHECK(derive_objects(ctx, {0}) == std::vector<int>{0});
  CHECK(derive_objects(ctx, {1}).empty());
  // the negative variant keys on the absence of the positive bit
  CHECK(derive_objects_negative(ctx, {1}) == std::vector<int>{0});
  CHECK(derive_objects_negative(ctx, {0}).empty());
}

TEST_CASE("para lattice equals the positive projection's crisp lattice") {
  std::mt19937_64 g(77);
  for (int round = 0; round < 60; ++round) {
    auto para = random_ctx(g, Mode::Para);
    FormalContext crisp = para;
    crisp.mode = Mode::Crisp;
    for (auto& v : crisp.inc) v = pos_bit(v) ? PBit::T : PBit::F;
    auto lp = enumerate_concepts(para);
    auto lc = enumerate_concepts(crisp);
    REQUIRE(lp.concepts.size() == lc.concepts.size());
    for (std::size_t i = 0; i < lp.concepts.size(); ++i)
      CHECK(std::get<SetConcept>(lp.concepts[i]) ==
            std::get<SetConcept>(lc.concepts[i]));
  }
}

TEST_CASE("enumeration matches the brute closure scan") {
  std::mt19937_64 g(78);
  for (int round = 0; round < 100; ++round) {
    auto ctx = random_ctx(g, round % 2 ? Mode::Crisp : Mode::Para);
    auto fast = enumerate_concepts(ctx).concepts;
    auto brute = enumerate_concepts_brute(ctx);
    REQUIRE(fast.size() == brute.size());
    for (std::size_t i = 0; i < fast.size(); ++i)
      CHECK(std::get<SetConcept>(fast[i]) == std::get<SetConcept>(brute[i]));
  }
}

TEST_CASE("derivations form a Galois connection") {
  std::mt19937_64 g(79);
  for (int round = 0; round < 50; ++round) {
    auto ctx = random_ctx(g, Mode::Para);
    int nO = ctx.n_objects();
    // random object set
    std::vector<int> objs;
    for (int i = 0; i < nO; ++i)
      if (bounded_draw(g, 2)) objs.push_back(i);
    auto props = derive_properties(ctx, objs);
    auto closure = derive_objects(ctx, props);
    // extensivity
    CHECK(std::includes(closure.begin(), closure.end(), objs.begin(),
                        objs.end()));
    // antitone in the object set
    std::vector<int> smaller;
    for (int o : objs)
      if (bounded_draw(g, 2)) smaller.push_back(o);
    auto props_small = derive_properties(ctx, smaller);
    CHECK(std::includes(props_small.begin(), props_small.end(), props.begin(),
                        props.end()));
    // idempotence of the closure
    auto props2 = derive_properties(ctx, closure);
    CHECK(props2 == props);
    auto closure2 = derive_objects(ctx, props2);
    CHECK(closure2 == closure);
  }
}

TEST_CASE("negative derivation is not the Galois partner") {
  // one property held by nobody: the negative variant returns everything,
  // composing to a strictly smaller property set than the closure demands
  auto ctx = crisp_ctx(2, 2, {0, 2});  // p0 held by both, p1 by nobody
  CHECK(derive_objects(ctx, {1}).empty());
  CHECK(derive_objects_negative(ctx, {1}) == std::vector<int>{0, 1});
  CHECK(derive_objects_negative(ctx, {0}).empty());
}

TEST_CASE("verify_lattice flags doctored lattices") {
  auto ctx = crisp_ctx(2, 2, {0, 3});
  auto l = enumerate_concepts(ctx);
  CHECK(verify_lattice(l).empty());
  // dropping the bottom concept breaks meet closure for {0} and {1}
  ConceptLattice broken = l;
  broken.concepts.erase(broken.concepts.begin());
  auto v = verify_lattice(broken);
  REQUIRE_FALSE(v.empty());
  bool meet_issue = false;
  for (const auto& viol : v)
    if (viol.kind == "meet-missing" || viol.kind == "meet-not-closed")
      meet_issue = true;
  CHECK(meet_issue);
  // duplicating a concept is reported as a duplicate extent
  ConceptLattice dup = l;
  dup.concepts.push_back(dup.concepts[1]);
  auto v2 = verify_lattice(dup);
  bool dup_issue = false;
  for (const auto& viol : v2)
    if (viol.kind == "duplicate-extent") dup_issue = true;
  CHECK(dup_issue);
}

TEST_CASE("residuated implications on the chain") {
  // Goedel: full credit when a <= b, else b
  CHECK(residuum_impl(Residuum::Goedel, 4, 1, 3) == 4);
  CHECK(residuum_impl(Residuum::Goedel, 4, 3, 1) == 1);
  CHECK(residuum_impl(Residuum::Goedel, 4, 0, 0) == 4);
  // Lukasiewicz: graded shortfall g - a + b capped at g
  CHECK(residuum_impl(Residuum::Lukasiewicz, 4, 3, 1) == 2);
  CHECK(residuum_impl(Residuum::Lukasiewicz, 4, 1, 3) == 4);
  CHECK(residuum_impl(Residuum::Lukasiewicz, 4, 4, 0) == 0);
  // adjointness on the whole chain, both systems: min(a,c)<=b iff c<=impl(a,b)
  for (auto r : {Residuum::Goedel, Residuum::Lukasiewicz})
    for (int g = 1; g <= 5; ++g)
      for (int a = 0; a <= g; ++a)
        for (int b = 0; b <= g; ++b)
          for (int c = 0; c <= g; ++c) {
            bool lhs = r == Residuum::Goedel
                           ? std::min(a, c) <= b
                           : std::max(0, a + c - g) <= b;
            CHECK(lhs == (c <= residuum_impl(r, g, a, b)));
          }
}

TEST_CASE("fuzzy derivations and the two-sided product lattice") {
  FormalContext ctx;
  ctx.mode = Mode::Fuzzy;
  ctx.grades = 4;
  ctx.residuum = Residuum::Goedel;
  ctx.objects = {"o1", "o2"};
  ctx.properties = {"p1"};
  ctx.inc_pos = {3, 2};  // 0.75, 0.5
  ctx.inc_neg = {1, 4};  // 0.25, 1.0
  // full extent: intent = componentwise inf of incidences
  DegreePair full{{4, 4}, {4, 4}};
  auto intent = fuzzy_derive_properties(ctx, full);
  CHECK(intent.pos == std::vector<int>{2});
  CHECK(intent.neg == std::vector<int>{1});
  // derive back: impl(intent, incidence) per object
  auto extent = fuzzy_derive_objects(ctx, intent);
  CHECK(extent.pos == std::vector<int>{4, 4});
  CHECK(extent.neg == std::vector<int>{4, 4});
  auto l = enumerate_concepts(ctx);
  // three positive fixpoints times two negative fixpoints
  CHECK(l.concepts.size() == 6);
  auto brute = enumerate_concepts_brute(ctx);
  REQUIRE(brute.size() == l.concepts.size());
  for (std::size_t i = 0; i < brute.size(); ++i)
    CHECK(std::get<FuzzyConcept>(brute[i]) ==
          std::get<FuzzyConcept>(l.concepts[i]));
  CHECK(verify_lattice(l).empty());
}

TEST_CASE("fuzzy enumeration matches brute force on random contexts") {
  std::mt19937_64 g(80);
  for (int round = 0; round < 40; ++round) {
    auto ctx = random_fuzzy_ctx(g, 1 + static_cast<int>(bounded_draw(g, 3)),
                                round % 2 ? Residuum::Goedel
                                          : Residuum::Lukasiewicz);
    auto fast = enumerate_concepts(ctx).concepts;
    auto brute = enumerate_concepts_brute(ctx);
    REQUIRE(fast.size() == brute.size());
    for (std::size_t i = 0; i < fast.size(); ++i)
      CHECK(std::get<FuzzyConcept>(fast[i]) ==
            std::get<FuzzyConcept>(brute[i]));
    CHECK(verify_lattice(enumerate_concepts(ctx)).empty());
  }
}

TEST_CASE("two-grade fuzzy contexts degenerate to the para lattice") {
  std::mt19937_64 g(81);
  for (int round = 0; round < 50; ++round) {
    auto para = random_ctx(g, Mode::Para);
    FormalContext fuzzy;
    fuzzy.mode = Mode::Fuzzy;
    fuzzy.grades = 1;
    fuzzy.residuum = Residuum::Goedel;
    fuzzy.objects = para.objects;
    fuzzy.properties = para.properties;
    for (PBit v : para.inc) {
      fuzzy.inc_pos.push_back(pos_bit(v) ? 1 : 0);
      fuzzy.inc_neg.push_back(neg_bit(v) ? 1 : 0);
    }
    auto lp = enumerate_concepts(para);
    auto lf = enumerate_concepts(fuzzy);
    // the para lattice reads only the positive bit, so compare against the
    // positive system: every para extent appears as a 0/1 positive extent
    // with the full negative column
    std::set<std::vector<int>> fuzzy_pos_extents;
    for (const auto& c : lf.concepts) {
      const auto& fc = std::get<FuzzyConcept>(c);
      bool neg_full = true;
      for (int d : fc.extent.neg) neg_full &= d == 1;
      if (neg_full) fuzzy_pos_extents.insert(fc.extent.pos);
    }
    std::set<std::vector<int>> para_extents;
    for (const auto& c : lp.concepts) {
      const auto& sc = std::get<SetConcept>(c);
      std::vector<int> chi(para.objects.size(), 0);
      for (int o : sc.extent) chi[o] = 1;
      para_extents.insert(chi);
    }
    CHECK(fuzzy_pos_extents == para_extents);
  }
}

TEST_CASE("extent order and covers") {
  auto ctx = crisp_ctx(2, 2, {0, 3});
  auto l = enumerate_concepts(ctx);
  // order: bottom {} under both singletons under top {0,1}
  CHECK(extent_leq(l.concepts[0], l.concepts[1]));
  CHECK(extent_leq(l.concepts[1], l.concepts[2]));
  CHECK_FALSE(extent_leq(l.concepts[1], l.concepts[3]));
  CHECK_FALSE(extent_leq(l.concepts[3], l.concepts[1]));
  auto cov = covers(l);
  // diamond: 4 covering pairs
  REQUIRE(cov.size() == 4);
  for (auto [lo, hi] : cov) CHECK(extent_leq(l.concepts[lo], l.concepts[hi]));
  auto dot = to_dot(l);
  CHECK(dot.find("digraph concepts") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  // one node per concept, one edge per cover
  for (int i = 0; i < 4; ++i)
    CHECK(dot.find("n" + std::to_string(i) + " [label=") != std::string::npos);
  std::size_t edges = 0, at = 0;
  while ((at = dot.find(" -> ", at)) != std::string::npos) {
    ++edges;
    at += 4;
  }
  CHECK(edges == cov.size());
}

TEST_CASE("context validation and capacity") {
  FormalContext bad;
  bad.mode = Mode::Crisp;
  bad.objects = {"o"};
  bad.properties = {"p"};
  bad.inc = {PBit::B};  // out of crisp range
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad.inc = {PBit::T, PBit::T};  // wrong shape
  CHECK_THROWS_AS(validate(bad), ValidationError);
  FormalContext fz;
  fz.mode = Mode::Fuzzy;
  fz.objects = {"o"};
  fz.properties = {"p"};
  fz.grades = 4;
  fz.inc_pos = {5};  // above the chain
  fz.inc_neg = {0};
  CHECK_THROWS_AS(validate(fz), ValidationError);
  fz.inc_pos = {-1};
  CHECK_THROWS_AS(validate(fz), ValidationError);
  fz.grades = 0;
  fz.inc_pos = {0};
  CHECK_THROWS_AS(validate(fz), ValidationError);
  // object capacity for set enumeration
  FormalContext big;
  big.mode = Mode::Crisp;
  for (int i = 0; i < kMaxObjects + 1; ++i)
    big.objects.push_back("o" + std::to_string(i));
  big.properties = {"p"};
  big.inc.assign(big.objects.size(), PBit::F);
  CHECK_THROWS_AS(enumerate_concepts(big), CapacityError);
  // fuzzy sweep capacity: (4+1)^10 > 2^20
  FormalContext wide;
  wide.mode = Mode::Fuzzy;
  wide.grades = 4;
  for (int i = 0; i < 10; ++i) wide.objects.push_back("o" + std::to_string(i));
  wide.properties = {"p"};
  wide.inc_pos.assign(10, 0);
  wide.inc_neg.assign(10, 0);
  CHECK_THROWS_AS(enumerate_concepts(wide), CapacityError);
}

TEST_CASE("blending strategies") {
  PropertyMap a;
  a.properties = {"warm", "large"};
  a.values = {{1.0, 0.0}, {1.0, 0.0}};
  PropertyMap b;
  b.properties = {"warm", "large"};
  b.values = {{1.0, 0.0}, {0.5, 0.25}};
  auto first = blend(a, b, BlendStrategy::SelectFirst);
  CHECK(first.values == a.values);
  auto second = blend(a, b, BlendStrategy::SelectSecond);
  CHECK(second.values == b.values);
  auto avg = blend(a, b, BlendStrategy::Average);
  CHECK(avg.values[0] == std::pair<double, double>{1.0, 0.0});
  CHECK(avg.values[1] == std::pair<double, double>{0.75, 0.125});
  // sampling: equal values pass through untouched regardless of seed
  auto s1 = blend(a, b, BlendStrategy::Sample, 1);
  auto s2 = blend(a, b, BlendStrategy::Sample, 1);
  CHECK(s1.values == s2.values);
  CHECK(s1.values[0] == std::pair<double, double>{1.0, 0.0});
  // general disagreement picks one of the two inputs
  bool saw_a = false, saw_b = false;
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    auto s = blend(a, b, BlendStrategy::Sample, seed);
    if (s.values[1] == a.values[1]) saw_a = true;
    if (s.values[1] == b.values[1]) saw_b = true;
    CHECK((s.values[1] == a.values[1] || s.values[1] == b.values[1]));
  }
  CHECK(saw_a);
  CHECK(saw_b);
  // a true-false clash draws from all four unit pairs
  PropertyMap t, f;
  t.properties = f.properties = {"q"};
  t.values = {{1.0, 0.0}};
  f.values = {{0.0, 1.0}};
  std::set<std::pair<double, double>> seen;
  for (std::uint64_t seed = 0; seed < 64; ++seed)
    seen.insert(blend(t, f, BlendStrategy::Sample, seed).values[0]);
  CHECK(seen == std::set<std::pair<double, double>>{
                    {0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}});
  // the draw sequence is the documented one
  std::mt19937_64 g(9);
  auto s = blend(t, f, BlendStrategy::Sample, 9);
  const std::pair<double, double> units[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {0.0, 0.0}};
  CHECK(s.values[0] == units[bounded_draw(g, 4)]);
  // mismatched vocabularies are rejected
  PropertyMap other;
  other.properties = {"warm"};
  other.values = {{1.0, 0.0}};
  CHECK_THROWS_AS(blend(a, other, BlendStrategy::Average), ValidationError);
  PropertyMap ragged;
  ragged.properties = {"warm", "large"};
  ragged.values = {{1.0, 0.0}};
  CHECK_THROWS_AS(blend(a, ragged, BlendStrategy::Average), ValidationError);
}

}  // TEST_SUITE
