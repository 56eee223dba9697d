// Copyright 2026 paralog contributors
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "paralog/cdlang.hpp"
#include "paralog/pbit.hpp"
#include "paralog/probabilize.hpp"

namespace paralog::sorites {

/** A predicate over an ordered series of individuals.
 *
 * psi gives the 4-valued predicate per individual; less gives explicit
 * 4-valued order entries. Pairs without an entry read as F. With transitive
 * set, the T entries are closed transitively first; closure never overrides
 * an explicit entry.
 */
struct SeriesModel {
  std::vector<std::string> domain;
  std::map<std::string, PBit> psi;
  std::map<std::pair<std::string, std::string>, PBit> less;
  bool transitive = true;
};

// Materializes the model as a closed-world valuation: Psi entries, a total
// order table (defaults filled with F), the closure applied. Individuals
// missing from psi are an error.
cdlang::Valuation to_valuation(const SeriesModel& m);

// The boundary test at z: z itself fails the predicate while everything
// strictly below z satisfies it,
//   ~Psi(z) & all y. (y < z -> Psi(y)).
// Built as a cdlang expression and evaluated over to_valuation(m).
PBit cutoff_value(const SeriesModel& m, const std::string& z);

// Join of cutoff_value over the whole domain; errors on an empty domain.
// Its negation answers "there is no boundary".
PBit existential_cutoff(const SeriesModel& m);

enum class CaseLabel { High, NotHigh, Cutoff };

struct WeightedCase {
  CaseLabel label;
  double weight = 0.0;
};

// A borderline individual with weighted classification outcomes.
struct SituationClassification {
  std::string focus;
  std::vector<WeightedCase> cases;
};

// Positive weight = share labeled High or Cutoff; negative weight = share
// labeled NotHigh or Cutoff; returned normalized so the pair sums to 1.
// Errors: empty or zero-total cases, negative weights.
prob::ParaTv fuzzy_boundary(const SituationClassification& c);

}  // namespace paralog::sorites
