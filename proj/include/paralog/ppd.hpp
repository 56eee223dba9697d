// Copyright 2026 paralog contributors
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace paralog::ppd {

/** A paraconsistent probability distribution: one distribution of positive
 * evidence and one of negative evidence over the same outcomes. The two are
 * independent of each other; each must sum to 1 (within 1e-9, entries
 * nonnegative).
 */
struct Ppd {
  std::vector<std::string> outcomes;
  std::vector<double> pos, neg;
};

void validate(const Ppd& d);  // throws ValidationError

// Shannon entropies of the two components, in bits (0 log 0 = 0).
std::pair<double, double> entropy_components(const Ppd& d);
// Total entropy: sum of the two components. Equals the entropy of the
// product distribution of the pair.
double entropy(const Ppd& d);

// Componentwise KL divergence KL(a.pos || b.pos) + KL(a.neg || b.neg), in
// bits. a and b must have identical outcome sequences. eps smooths the
// denominator only: each b component gets eps added to every entry and is
// renormalized. With eps = 0, a positive a-entry over a zero b-entry raises
// ValidationError naming the outcome.
double relative_entropy(const Ppd& a, const Ppd& b, double eps = 1e-9);

/** Raw evidence weights per instance; not yet normalized. Both components
 * must carry some weight before normalizing.
 */
struct InstanceEvidence {
  std::vector<std::string> instances;
  std::vector<double> w_pos, w_neg;
};

// How specific x is relative to the broader context: both evidence maps are
// normalized into distributions over the context's full instance sequence
// (x's weights land on its own instances, zero elsewhere), then compared by
// relative_entropy. Requires every x instance to appear in the context and
// each component of each side to carry positive total weight.
double intension_degree(const InstanceEvidence& x, const InstanceEvidence& context,
                        double eps = 1e-9);

}  // namespace paralog::ppd
