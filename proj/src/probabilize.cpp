// Copyright 2026 paralog contributors
#include "paralog/probabilize.hpp"

#include <cmath>

#include "paralog/error.hpp"
#include "paralog/rng.hpp"

namespace paralog::prob {

cdlang::Valuation SituationEnsemble::row_valuation(std::size_t i) const {
  cdlang::Valuation v;
  v.open_world = open_world;
  for (std::size_t j = 0; j < atoms.size(); ++j)
    v.atoms.emplace(atoms[j], situations[i][j]);
  return v;
}

EvidenceCounts aggregate(const SituationEnsemble& ens, const cdlang::Expr& prop) {
  EvidenceCounts c;
  c.n_total = static_cast<long long>(ens.situations.size());
  for (std::size_t i = 0; i < ens.situations.size(); ++i) {
    PBit b;
    try {
      b = cdlang::evaluate(prop, ens.row_valuation(i));
    } catch (const EvalError& e) {
      throw EvalError("situation " + std::to_string(i) + ": " + e.what());
    }
    if (pos_bit(b)) ++c.n_pos;
    if (neg_bit(b)) ++c.n_neg;
  }
  return c;
}

ParaTv to_para(const EvidenceCounts& c) {
  if (c.n_total <= 0) throw ValidationError("empty ensemble has no evidence pair");
  return {static_cast<double>(c.n_pos) / static_cast<double>(c.n_total),
          static_cast<double>(c.n_neg) / static_cast<double>(c.n_total)};
}

std::pair<long long, long long> to_pln(const EvidenceCounts& c) {
  return {c.n_pos, c.n_neg};
}

Stv to_stv(const EvidenceCounts& c) {
  long long n = c.n_pos + c.n_neg;
  if (n <= 0)
    throw ValidationError("no evidence either way; strength is undefined");
  return {static_cast<double>(c.n_pos) / static_cast<double>(n),
          static_cast<double>(n)};
}

double confidence(double n, double k) {
  if (!(k > 0)) throw ValidationError("confidence needs k > 0");
  if (n < 0) throw ValidationError("confidence needs n >= 0");
  return n / (n + k);
}

Stv conj_independent(const Stv& a, const Stv& b, double universe) {
  if (!(universe > 0)) throw ValidationError("universe size must be positive");
  for (const Stv* s : {&a, &b}) {
    if (s->strength < 0 || s->strength > 1)
      throw ValidationError("strength outside [0,1]");
    if (s->count < 0) throw ValidationError("negative evidence count");
    if (s->count > universe)
      throw ValidationError("evidence count exceeds the universe size");
  }
  return {a.strength * b.strength,
          a.count + b.count - a.count * b.count / universe};
}

SituationEnsemble subsample(const SituationEnsemble& ens, double drop_rate,
                            std::uint64_t seed) {
  if (drop_rate < 0 || drop_rate > 1)
    throw ValidationError("drop rate outside [0,1]");
  SituationEnsemble out;
  out.atoms = ens.atoms;
  out.open_world = ens.open_world;
  std::mt19937_64 g(seed);
  for (const auto& row : ens.situations)
    if (unit_draw(g) >= drop_rate) out.situations.push_back(row);
  return out;
}

namespace {

// MI as sum p log2(p / (p_row * p_col)); zero-mass cells contribute nothing.
template <std::size_t K>
double mutual_information(const std::array<std::array<double, K>, K>& j) {
  std::array<double, K> row{}, col{};
  for (std::size_t a = 0; a < K; ++a)
    for (std::size_t b = 0; b < K; ++b) {
      row[a] += j[a][b];
      col[b] += j[a][b];
    }
  double mi = 0.0;
  for (std::size_t a = 0; a < K; ++a)
    for (std::size_t b = 0; b < K; ++b)
      if (j[a][b] > 0) mi += j[a][b] * std::log2(j[a][b] / (row[a] * col[b]));
  return mi;
}

}  // namespace

DependencyStats dependency_stats(const JointTable& joint) {
  double total = 0.0;
  for (const auto& r : joint.p)
    for (double x : r) {
      if (x < 0) throw ValidationError("joint table has a negative entry");
      total += x;
    }
  if (std::abs(total - 1.0) > 1e-9)
    throw ValidationError("joint table does not sum to 1");

  std::array<std::array<double, 2>, 2> pos{}, neg{};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      PBit x = static_cast<PBit>(a), y = static_cast<PBit>(b);
      pos[pos_bit(x)][pos_bit(y)] += joint.p[a][b];
      neg[neg_bit(x)][neg_bit(y)] += joint.p[a][b];
    }
  DependencyStats s;
  s.mi_pbit = mutual_information(joint.p);
  s.mi_pos = mutual_information(pos);
  s.mi_neg = mutual_information(neg);
  return s;
}

}  // namespace paralog::prob
