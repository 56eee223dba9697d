// Copyright 2026 paralog contributors
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "paralog/cdlang.hpp"
#include "paralog/error.hpp"
#include "paralog/probabilize.hpp"
#include "paralog/rng.hpp"

using namespace paralog;
using namespace paralog::prob;

namespace {

SituationEnsemble single_atom(std::vector<PBit> column) {
  SituationEnsemble e;
  e.atoms = {"A"};
  for (PBit v : column) e.situations.push_back({v});
  return e;
}

SituationEnsemble random_ensemble(std::mt19937_64& g, int atoms, int rows) {
  SituationEnsemble e;
  for (int j = 0; j < atoms; ++j) e.atoms.push_back("A" + std::to_string(j));
  for (int i = 0; i < rows; ++i) {
    std::vector<PBit> row;
    for (int j = 0; j < atoms; ++j)
      row.push_back(static_cast<PBit>(bounded_draw(g, 4)));
    e.situations.push_back(row);
  }
  return e;
}

JointTable make_joint(const double (&m)[4][4]) {
  JointTable j;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) j.p[a][b] = m[a][b];
  return j;
}

double h2(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace

TEST_SUITE("probabilize") {

TEST_CASE("evidence counts over one atom") {
  auto ens = single_atom({PBit::T, PBit::T, PBit::B, PBit::N, PBit::F});
  auto c = aggregate(ens, *cdlang::parse("A"));
  CHECK(c.n_pos == 3);  // two T plus one B
  CHECK(c.n_neg == 2);  // one F plus one B
  CHECK(c.n_total == 5);
  auto tv = to_para(c);
  CHECK(tv.w_pos == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(tv.w_neg == doctest::Approx(0.4).epsilon(1e-12));
  auto [np, nn] = to_pln(c);
  CHECK(np == 3);
  CHECK(nn == 2);
  auto stv = to_stv(c);
  CHECK(stv.strength == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(stv.count == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(confidence(stv.count, 20.0) == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("compound propositions count row by row") {
  SituationEnsemble e;
  e.atoms = {"A", "X"};
  e.situations = {{PBit::T, PBit::T}, {PBit::T, PBit::F}, {PBit::B, PBit::B}};
  auto c = aggregate(e, *cdlang::parse("A & X"));
  // rows evaluate to T, F, B
  CHECK(c.n_pos == 2);
  CHECK(c.n_neg == 2);
  CHECK(c.n_total == 3);
  // an open-world row can leave an atom out of the vocabulary
  e.open_world = true;
  auto c2 = aggregate(e, *cdlang::parse("A & Unknown"));
  // meet with N: T&N=N, T&N=N, B&N=F
  CHECK(c2.n_pos == 0);
  CHECK(c2.n_neg == 1);
  e.open_world = false;
  CHECK_THROWS_AS(aggregate(e, *cdlang::parse("A & Unknown")), EvalError);
  // errors carry the offending row index
  try {
    aggregate(e, *cdlang::parse("Zz"));
  } catch (const EvalError& err) {
    CHECK(std::string(err.what()).find("situation 0") != std::string::npos);
  }
}

TEST_CASE("counts are additive over ensemble splits") {
  std::mt19937_64 g(41);
  for (int round = 0; round < 20; ++round) {
    auto e = random_ensemble(g, 2, 12);
    auto prop = cdlang::parse("A0 | ~A1");
    auto whole = aggregate(e, *prop);
    std::size_t cut = 1 + bounded_draw(g, e.situations.size() - 1);
    SituationEnsemble lo, hi;
    lo.atoms = hi.atoms = e.atoms;
    lo.situations.assign(e.situations.begin(), e.situations.begin() + cut);
    hi.situations.assign(e.situations.begin() + cut, e.situations.end());
    auto sum = aggregate(lo, *prop) + aggregate(hi, *prop);
    CHECK(whole.n_pos == sum.n_pos);
    CHECK(whole.n_neg == sum.n_neg);
    CHECK(whole.n_total == sum.n_total);
  }
}

TEST_CASE("para and pln views agree through the counts") {
  std::mt19937_64 g(42);
  for (int round = 0; round < 50; ++round) {
    std::size_t rows = 1 + bounded_draw(g, 400);
    std::vector<PBit> col;
    for (std::size_t i = 0; i < rows; ++i)
      col.push_back(static_cast<PBit>(bounded_draw(g, 4)));
    auto c = aggregate(single_atom(col), *cdlang::parse("A"));
    auto tv = to_para(c);
    auto [np, nn] = to_pln(c);
    // the exact rational identity: same integer counts, same divisor
    CHECK(tv.w_pos == static_cast<double>(np) / static_cast<double>(c.n_total));
    CHECK(tv.w_neg == static_cast<double>(nn) / static_cast<double>(c.n_total));
    if (np + nn > 0) {
      auto s = to_stv(c);
      CHECK(s.count == static_cast<double>(np + nn));
      CHECK(s.strength ==
            static_cast<double>(np) / static_cast<double>(np + nn));
    }
  }
}

TEST_CASE("degenerate evidence raises") {
  SituationEnsemble empty;
  empty.atoms = {"A"};
  CHECK_THROWS_AS(to_para(aggregate(empty, *cdlang::parse("A"))), Error);
  auto all_n = single_atom({PBit::N, PBit::N});
  CHECK_THROWS_AS(to_stv(aggregate(all_n, *cdlang::parse("A"))), Error);
  // but the para view of all-N evidence is fine: (0, 0)
  auto tv = to_para(aggregate(all_n, *cdlang::parse("A")));
  CHECK(tv.w_pos == 0.0);
  CHECK(tv.w_neg == 0.0);
}

TEST_CASE("independent conjunction") {
  Stv a{0.5, 10.0}, b{0.5, 10.0};
  auto c = conj_independent(a, b, 100.0);
  CHECK(c.strength == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(c.count == doctest::Approx(19.0).epsilon(1e-12));
  Stv d{0.6, 5.0}, e{0.5, 5.0};
  auto f = conj_independent(d, e, 10.0);
  CHECK(f.strength == doctest::Approx(0.30).epsilon(1e-12));
  CHECK(f.count == doctest::Approx(7.5).epsilon(1e-12));
  // count never exceeds the universe and is monotone in both inputs
  CHECK_THROWS_AS(conj_independent(a, b, 0.0), Error);
  CHECK_THROWS_AS(conj_independent(Stv{0.5, 200.0}, b, 100.0), Error);
}

TEST_CASE("subsampling is a seeded filter") {
  std::mt19937_64 g(7);
  auto e = random_ensemble(g, 3, 60);
  auto s1 = subsample(e, 0.4, 2026);
  auto s2 = subsample(e, 0.4, 2026);
  REQUIRE(s1.situations.size() == s2.situations.size());
  for (std::size_t i = 0; i < s1.situations.size(); ++i)
    CHECK(s1.situations[i] == s2.situations[i]);
  // kept rows appear in original order as a subsequence
  std::size_t at = 0;
  for (const auto& row : s1.situations) {
    while (at < e.situations.size() && !(e.situations[at] == row)) ++at;
    REQUIRE(at < e.situations.size());
    ++at;
  }
  // rate edges keep everything or nothing
  CHECK(subsample(e, 0.0, 1).situations.size() == e.situations.size());
  CHECK(subsample(e, 1.0, 1).situations.empty());
  CHECK_THROWS_AS(subsample(e, -0.1, 1), Error);
  CHECK_THROWS_AS(subsample(e, 1.5, 1), Error);
  // the keep decision reproduces the documented draw sequence
  std::mt19937_64 d(2026);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < e.situations.size(); ++i)
    if (unit_draw(d) >= 0.4) ++kept;
  CHECK(kept == s1.situations.size());
}

TEST_CASE("dependency statistics on pinned joints") {
  // perfectly coupled: value pairs (N,B),(T,F),(F,T),(B,N) each two ways
  const double coupled[4][4] = {{0.125, 0, 0, 0.125},
                                {0, 0.125, 0.125, 0},
                                {0, 0.125, 0.125, 0},
                                {0.125, 0, 0, 0.125}};
  auto s = dependency_stats(make_joint(coupled));
  CHECK(s.mi_pbit == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(s.mi_pos == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(s.mi_neg == doctest::Approx(0.0).epsilon(1e-9));
  // independent uniform: all three vanish
  const double uniform[4][4] = {{0.0625, 0.0625, 0.0625, 0.0625},
                                {0.0625, 0.0625, 0.0625, 0.0625},
                                {0.0625, 0.0625, 0.0625, 0.0625},
                                {0.0625, 0.0625, 0.0625, 0.0625}};
  auto u = dependency_stats(make_joint(uniform));
  CHECK(u.mi_pbit == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(u.mi_pos == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(u.mi_neg == doctest::Approx(0.0).epsilon(1e-9));
  // diagonal: identical values, 2 bits of p-bit information, 1 bit per bit
  const double diag[4][4] = {{0.25, 0, 0, 0},
                             {0, 0.25, 0, 0},
                             {0, 0, 0.25, 0},
                             {0, 0, 0, 0.25}};
  auto dd = dependency_stats(make_joint(diag));
  CHECK(dd.mi_pbit == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(dd.mi_pos == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(dd.mi_neg == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("dependency statistics against an entropy oracle") {
  std::mt19937_64 g(99);
  for (int round = 0; round < 30; ++round) {
    // random product joint: mi_pbit must vanish, bit mi too
    double px[4], py[4], sx = 0, sy = 0;
    for (int i = 0; i < 4; ++i) {
      px[i] = 0.05 + unit_draw(g);
      py[i] = 0.05 + unit_draw(g);
      sx += px[i];
      sy += py[i];
    }
    JointTable j;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) j.p[a][b] = (px[a] / sx) * (py[b] / sy);
    auto s = dependency_stats(j);
    CHECK(std::abs(s.mi_pbit) < 1e-9);
    CHECK(std::abs(s.mi_pos) < 1e-9);
    CHECK(std::abs(s.mi_neg) < 1e-9);
  }
  // H(X) + H(Y) - H(X,Y) oracle on random normalized joints
  for (int round = 0; round < 30; ++round) {
    JointTable j;
    double total = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) total += j.p[a][b] = 0.01 + unit_draw(g);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) j.p[a][b] /= total;
    double hx = 0, hy = 0, hxy = 0;
    double mx[4] = {0, 0, 0, 0}, my[4] = {0, 0, 0, 0};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        mx[a] += j.p[a][b];
        my[b] += j.p[a][b];
        hxy -= j.p[a][b] * std::log2(j.p[a][b]);
      }
    for (int i = 0; i < 4; ++i) {
      hx -= mx[i] * std::log2(mx[i]);
      hy -= my[i] * std::log2(my[i]);
    }
    auto s = dependency_stats(j);
    CHECK(s.mi_pbit == doctest::Approx(hx + hy - hxy).epsilon(1e-9));
    // data processing: a bit view never shows more information
    CHECK(s.mi_pos <= s.mi_pbit + 1e-12);
    CHECK(s.mi_neg <= s.mi_pbit + 1e-12);
    CHECK(s.mi_pos >= -1e-12);
    CHECK(s.mi_neg >= -1e-12);
    // positive-bit mi oracle via the induced two-by-two marginal
    double q11 = 0;
    double qx = 0, qy = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        bool pa = pos_bit(static_cast<PBit>(a));
        bool pb = pos_bit(static_cast<PBit>(b));
        if (pa) qx += j.p[a][b];
        if (pb) qy += j.p[a][b];
        if (pa && pb) q11 += j.p[a][b];
      }
    double q10 = qx - q11, q01 = qy - q11, q00 = 1 - qx - qy + q11;
    auto plog = [](double p) { return p > 0 ? p * std::log2(p) : 0.0; };
    double hj = -(plog(q00) + plog(q01) + plog(q10) + plog(q11));
    double mi_pos = h2(qx) + h2(qy) - hj;
    CHECK(s.mi_pos == doctest::Approx(mi_pos).epsilon(1e-9));
  }
}

TEST_CASE("joint table validation") {
  JointTable j;
  j.p[0][0] = 0.5;  // sums to 0.5, not 1
  CHECK_THROWS_AS(dependency_stats(j), ValidationError);
  JointTable k;
  k.p[0][0] = 1.5;
  k.p[1][1] = -0.5;
  CHECK_THROWS_AS(dependency_stats(k), ValidationError);
}

}  // TEST_SUITE
