// Copyright 2026 paralog contributors
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "paralog/pbit.hpp"

namespace paralog::fca {

enum class Mode { Crisp, Para, Fuzzy };
enum class Residuum { Goedel, Lukasiewicz };

// Enumeration works on bitmask extents; beyond this it refuses.
inline constexpr int kMaxObjects = 20;
// Fuzzy enumeration sweeps (grades+1)^|objects| candidate extents per
// component; refuse beyond this many.
inline constexpr std::uint64_t kMaxFuzzySweep = std::uint64_t{1} << 20;

/** An incidence table between objects and properties.
 *
 * Crisp mode restricts entries to {T, F}. Para mode allows all four values;
 * derivations read the designated (positive) bit on both sides. Fuzzy mode
 * carries a pair of degrees per cell on the finite chain {0, 1/g, ..., 1},
 * stored as integer numerators.
 */
struct FormalContext {
  Mode mode = Mode::Crisp;
  std::vector<std::string> objects, properties;
  std::vector<PBit> inc;                // crisp/para, row-major o*|P|+p
  std::vector<int> inc_pos, inc_neg;    // fuzzy numerators, same layout
  int grades = 4;                       // fuzzy chain resolution g
  Residuum residuum = Residuum::Goedel;

  int n_objects() const { return static_cast<int>(objects.size()); }
  int n_properties() const { return static_cast<int>(properties.size()); }
  PBit at(int o, int p) const { return inc[o * properties.size() + p]; }
  int pos_grade(int o, int p) const { return inc_pos[o * properties.size() + p]; }
  int neg_grade(int o, int p) const { return inc_neg[o * properties.size() + p]; }
};

// Shape and mode checks; throws ValidationError. Every entry point below
// validates its context first.
void validate(const FormalContext& ctx);

// ---- crisp / para derivations (sets as sorted index vectors) --------------

// Properties shared by every object in objs under the designated reading:
// the positive bit of the incidence must be set.
std::vector<int> derive_properties(const FormalContext& ctx,
                                   const std::vector<int>& objs);
// Objects carrying every property in props, same reading.
std::vector<int> derive_objects(const FormalContext& ctx,
                                const std::vector<int>& props);
// Variant that selects objects whose incidence has NO positive bit for each
// given property. Does not pair with derive_properties into a Galois
// connection; kept for comparison only.
std::vector<int> derive_objects_negative(const FormalContext& ctx,
                                         const std::vector<int>& props);

// ---- fuzzy derivations (degree vectors, numerators on the chain) ----------

struct DegreePair {
  std::vector<int> pos, neg;
  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

// Residuated implication on chain numerators.
int residuum_impl(Residuum r, int g, int a, int b);

// intent(p) = inf over objects of impl(extent(o), I(o,p)), componentwise:
// the positive component reads the positive incidence, the negative one the
// negative incidence.
DegreePair fuzzy_derive_properties(const FormalContext& ctx, const DegreePair& extent);
DegreePair fuzzy_derive_objects(const FormalContext& ctx, const DegreePair& intent);

// ---- concepts --------------------------------------------------------------

struct SetConcept {
  std::vector<int> extent, intent;
  friend bool operator==(const SetConcept&, const SetConcept&) = default;
};
struct FuzzyConcept {
  DegreePair extent, intent;
  friend bool operator==(const FuzzyConcept&, const FuzzyConcept&) = default;
};
using Concept = std::variant<SetConcept, FuzzyConcept>;

/** All formal concepts of a context, sorted by extent (lexicographic on the
 * extent's index sequence; on the concatenated pos/neg grade vectors in
 * fuzzy mode). Immutable after construction.
 */
struct ConceptLattice {
  FormalContext context;
  std::vector<Concept> concepts;
};

// extent(a) contained in extent(b): subset for sets, pointwise <= on both
// grade components for fuzzy concepts.
bool extent_leq(const Concept& a, const Concept& b);

// Crisp/para: every closed intersection of attribute extents, found by the
// single-pass product sweep. Fuzzy: fixpoint sweep over all candidate degree
// maps per component; a fuzzy concept pairs one positive-system fixpoint
// with one negative-system fixpoint, so the result is the product of the two
// systems.
ConceptLattice enumerate_concepts(const FormalContext& ctx);

// Reference implementation: test every candidate extent for closure
// (2^|objects| subsets, or every degree map in fuzzy mode). Slow; exists to
// check enumerate_concepts against.
std::vector<Concept> enumerate_concepts_brute(const FormalContext& ctx);

struct LatticeViolation {
  std::string kind;  // duplicate-extent | meet-not-closed | meet-missing |
                     // join-not-closed | join-missing
  int i = -1, j = -1;
};

// Pairwise meet/join existence check: the extent-intersection and
// intent-intersection of every concept pair must close onto a concept that
// is present in the list. Empty report on a correctly enumerated lattice.
std::vector<LatticeViolation> verify_lattice(const ConceptLattice& l);

// Covering pairs (lower index, upper index) of the extent order.
std::vector<std::pair<int, int>> covers(const ConceptLattice& l);

// Hasse diagram as a DOT digraph; one node per concept labeled
// "extent|intent", one edge per covering pair, drawn bottom-up.
std::string to_dot(const ConceptLattice& l);

// ---- blending ---------------------------------------------------------------

/** A concept-shaped property map: one evidence-weight pair per property.
 * P-bit values embed as the four unit pairs.
 */
struct PropertyMap {
  std::vector<std::string> properties;
  std::vector<std::pair<double, double>> values;
};

enum class BlendStrategy { SelectFirst, SelectSecond, Average, Sample };

// Combines two maps over the same property sequence. select_first/second
// copy one side; average is the componentwise mean. sample keeps agreeing
// values; a (1,0) against a (0,1) draws uniformly from the four unit pairs
// (T, F, B, N order); any other disagreement draws uniformly between the two
// given pairs. One draw per property that needs one, in property order.
PropertyMap blend(const PropertyMap& a, const PropertyMap& b, BlendStrategy s,
                  std::uint64_t seed = 0);

}  // namespace paralog::fca
