// Copyright 2026 paralog contributors
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "paralog/cdlang.hpp"
#include "paralog/pbit.hpp"

namespace paralog::prob {

/** A finite collection of situations over a fixed atom vocabulary.
 *
 * Row i assigns values[i][j] to atoms[j]. The loader fills unlisted atoms
 * with N when open_world is set and rejects them otherwise; open_world also
 * carries into expression evaluation over each row.
 */
struct SituationEnsemble {
  std::vector<std::string> atoms;
  std::vector<std::vector<PBit>> situations;
  bool open_world = false;

  cdlang::Valuation row_valuation(std::size_t i) const;
};

// Positive/negative evidence tallies over an ensemble. A row counts toward
// n_pos when the proposition's value carries the positive bit ({T,B}) and
// toward n_neg when it carries the negative bit ({F,B}); B counts in both
// and N in neither, so n_pos + n_neg can exceed or fall short of n_total.
struct EvidenceCounts {
  long long n_pos = 0;
  long long n_neg = 0;
  long long n_total = 0;

  friend EvidenceCounts operator+(EvidenceCounts a, EvidenceCounts b) {
    return {a.n_pos + b.n_pos, a.n_neg + b.n_neg, a.n_total + b.n_total};
  }
};

// Normalized evidence pair (n_pos/N, n_neg/N). The components need not sum
// to 1.
struct ParaTv {
  double w_pos = 0.0;
  double w_neg = 0.0;
};

// PLN-style simple truth value.
struct Stv {
  double strength = 0.0;  // n_pos / (n_pos + n_neg)
  double count = 0.0;     // n_pos + n_neg
};

EvidenceCounts aggregate(const SituationEnsemble& ens, const cdlang::Expr& prop);

ParaTv to_para(const EvidenceCounts& c);          // error on empty ensemble
std::pair<long long, long long> to_pln(const EvidenceCounts& c);
Stv to_stv(const EvidenceCounts& c);              // error when n_pos+n_neg = 0

// n / (n + k); requires n >= 0 and k > 0.
double confidence(double n, double k);

// Independence-assuming conjunction over a universe of the given size:
// strength multiplies, counts combine as n1 + n2 - n1*n2/universe.
// Requires universe > 0 and both counts within it.
Stv conj_independent(const Stv& a, const Stv& b, double universe);

// Keeps each situation with probability 1 - drop_rate, deciding rows in
// order with one unit_draw each (row kept iff draw >= drop_rate).
SituationEnsemble subsample(const SituationEnsemble& ens, double drop_rate,
                            std::uint64_t seed);

// Joint distribution over pairs of p-bit values, indexed by the PBit
// encoding. Entries must be nonnegative and sum to 1 within 1e-9.
struct JointTable {
  std::array<std::array<double, 4>, 4> p{};
};

struct DependencyStats {
  double mi_pbit = 0.0;  // mutual information of the full 4x4 joint, bits
  double mi_pos = 0.0;   // induced joint of the positive bits
  double mi_neg = 0.0;   // induced joint of the negative bits
};

DependencyStats dependency_stats(const JointTable& joint);

}  // namespace paralog::prob
