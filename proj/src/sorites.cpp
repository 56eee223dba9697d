// Copyright 2026 paralog contributors
#include "paralog/sorites.hpp"

#include <algorithm>

#include "paralog/error.hpp"

namespace paralog::sorites {

cdlang::Valuation to_valuation(const SeriesModel& m) {
  cdlang::Valuation v;
  v.domain = m.domain;
  for (const std::string& d : m.domain) {
    auto it = m.psi.find(d);
    if (it == m.psi.end())
      throw ValidationError("no Psi value for individual '" + d + "'");
    v.preds.emplace(std::make_pair(std::string("Psi"), d), it->second);
  }
  for (const auto& [pair, val] : m.less) {
    auto known = [&](const std::string& x) {
      return std::find(m.domain.begin(), m.domain.end(), x) != m.domain.end();
    };
    if (!known(pair.first) || !known(pair.second))
      throw ValidationError("order entry mentions unknown individual '" +
                            (known(pair.first) ? pair.second : pair.first) + "'");
  }

  const int n = static_cast<int>(m.domain.size());
  std::vector<std::uint8_t> t(static_cast<std::size_t>(n) * n, 0);
  auto ix = [&](const std::string& name) {
    return static_cast<int>(std::find(m.domain.begin(), m.domain.end(), name) -
                            m.domain.begin());
  };
  for (const auto& [pair, val] : m.less)
    if (val == PBit::T) t[ix(pair.first) * n + ix(pair.second)] = 1;
  if (m.transitive) {
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < n; ++a)
        if (t[a * n + k])
          for (int b = 0; b < n; ++b)
            if (t[k * n + b]) t[a * n + b] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto key = std::make_pair(m.domain[a], m.domain[b]);
      auto it = m.less.find(key);
      // explicit entry wins; closure fills gaps; everything else is F
      PBit val = it != m.less.end() ? it->second
                                    : (t[a * n + b] ? PBit::T : PBit::F);
      v.less.emplace(std::move(key), val);
    }
  return v;
}

namespace {

cdlang::ExprPtr cutoff_expr(const std::string& z) {
  using namespace cdlang;
  return bin(BinaryOp::Meet, un(UnaryOp::Neg, pred("Psi", z)),
             forall("y", bin(BinaryOp::Arrow, less("y", z), pred("Psi", "y"))));
}

}  // namespace

PBit cutoff_value(const SeriesModel& m, const std::string& z) {
  if (std::find(m.domain.begin(), m.domain.end(), z) == m.domain.end())
    throw ValidationError("unknown individual '" + z + "'");
  return cdlang::evaluate(*cutoff_expr(z), to_valuation(m));
}

PBit existential_cutoff(const SeriesModel& m) {
  if (m.domain.empty())
    throw ValidationError("existential boundary needs a nonempty domain");
  cdlang::Valuation v = to_valuation(m);
  PBit acc = PBit::F;
  for (const std::string& z : m.domain)
    acc = join(acc, cdlang::evaluate(*cutoff_expr(z), v));
  return acc;
}

prob::ParaTv fuzzy_boundary(const SituationClassification& c) {
  if (c.cases.empty()) throw ValidationError("no classified cases");
  double total = 0.0, w_pos = 0.0, w_neg = 0.0;
  for (const WeightedCase& wc : c.cases) {
    if (wc.weight < 0) throw ValidationError("negative case weight");
    total += wc.weight;
    if (wc.label == CaseLabel::High || wc.label == CaseLabel::Cutoff)
      w_pos += wc.weight;
    if (wc.label == CaseLabel::NotHigh || wc.label == CaseLabel::Cutoff)
      w_neg += wc.weight;
  }
  if (total <= 0) throw ValidationError("total case weight is zero");
  double denom = w_pos + w_neg;
  if (denom <= 0)
    throw ValidationError("no case carries any classification weight");
  return {w_pos / denom, w_neg / denom};
}

}  // namespace paralog::sorites
