// Copyright 2026 paralog contributors
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "paralog/pbit.hpp"

namespace paralog::heyting {

// Hard cap on carrier sizes. Every table below is materialized n*n, and
// validation runs O(n^3) exhaustive law checks, so keep n small.
inline constexpr int kMaxElements = 256;

/** A finite poset given by cover pairs.
 *
 * The constructor computes the reflexive-transitive closure of the covers and
 * rejects cyclic input (a cycle makes two distinct elements comparable both
 * ways, which breaks antisymmetry).
 */
class Poset {
 public:
  Poset(std::vector<std::string> elements,
        const std::vector<std::pair<std::string, std::string>>& covers);

  int size() const { return n_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of(const std::string& name) const;  // throws on unknown name
  bool leq(int a, int b) const { return leq_[a * n_ + b] != 0; }

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
};

/** Raw candidate tables for a bounded lattice with implication.
 *
 * This is the exchange format for validate(): it carries no invariants of its
 * own. Row-major indexing: leq[a * n + b] means a <= b.
 */
struct LatticeTables {
  int n = 0;
  std::vector<std::string> labels;  // optional; empty means e0, e1, ...
  std::vector<std::uint8_t> leq;
  std::vector<int> meet, join, imp;
  int bottom = 0, top = 0;
};

struct LawViolation {
  std::string law;           // e.g. "distributivity"
  std::vector<int> witness;  // offending element ids, law-specific arity
};

struct ValidationReport {
  std::vector<LawViolation> violations;
  bool ok() const { return violations.empty(); }
};

/** A finite Heyting algebra with every operation precomputed.
 *
 * Elements are dense ints 0..size()-1; labels are a side table for printing.
 * Instances are immutable after construction and safe to share across
 * threads. imp is the relative pseudo-complement: imp(a,b) is the largest c
 * with meet(c, a) <= b.
 */
class FiniteHeyting {
 public:
  // The algebra of downward-closed subsets of a poset. Every finite
  // distributive lattice arises this way. Throws CapacityError when the
  // downset count exceeds kMaxElements.
  static FiniteHeyting downsets(const Poset& p);
  // Total order 0 < 1 < ... < n-1.
  static FiniteHeyting chain(int n);
  // The two-element Boolean algebra; the base used everywhere downstream.
  static FiniteHeyting boolean2();
  // Adopts candidate tables after a full validate(); throws ValidationError
  // quoting the first violated law otherwise.
  static FiniteHeyting from_tables(LatticeTables t);

  // Checks partial-order axioms, glb/lub correctness of the meet/join
  // tables, bounds, distributivity, and the residuation law
  //   c <= imp(a,b)  iff  meet(c,a) <= b.
  // Reports one witness per violated law. Throws CapacityError for
  // n > kMaxElements and ValidationError for malformed table shapes.
  static ValidationReport validate(const LatticeTables& t);

  int size() const { return t_.n; }
  bool leq(int a, int b) const { return t_.leq[a * t_.n + b] != 0; }
  int meet(int a, int b) const { return t_.meet[a * t_.n + b]; }
  int join(int a, int b) const { return t_.join[a * t_.n + b]; }
  int imp(int a, int b) const { return t_.imp[a * t_.n + b]; }
  // Pseudo-complement imp(a, bottom); classical negation on boolean2().
  int compl_of(int a) const { return imp(a, t_.bottom); }
  int bottom() const { return t_.bottom; }
  int top() const { return t_.top; }
  const std::string& label(int i) const { return t_.labels[i]; }
  const LatticeTables& tables() const { return t_; }

 private:
  explicit FiniteHeyting(LatticeTables t) : t_(std::move(t)) {}
  LatticeTables t_;
};

/** The pair construction H x H^op with componentwise structure.
 *
 * An element is a pair (pos, neg) of base elements; the negative coordinate
 * lives in the dual algebra, which is realized implicitly by reading the base
 * tables with the roles of meet and join swapped. Over boolean2() the 2x2 = 4
 * elements reproduce the PBit tables exactly (tests enforce this).
 */
class PairAlgebra {
 public:
  explicit PairAlgebra(FiniteHeyting base);

  struct Elem {
    int pos = 0;
    int neg = 0;
    friend bool operator==(Elem, Elem) = default;
  };

  const FiniteHeyting& base() const { return base_; }
  std::size_t size() const;  // |H|^2
  Elem element(std::size_t id) const;
  std::size_t id(Elem e) const;
  std::string label(Elem e) const;  // "(pos,neg)" using base labels

  // The four distinguished constants. Pairwise distinct whenever |H| >= 2.
  Elem unit_true() const;     // (top, bottom)
  Elem unit_false() const;    // (bottom, top)
  Elem unit_neither() const;  // (bottom, bottom)
  Elem unit_both() const;     // (top, top)

  Elem meet(Elem a, Elem b) const;   // (x ^ y, x' v y')
  Elem join(Elem a, Elem b) const;   // (x v y, x' ^ y')
  Elem arrow(Elem a, Elem b) const;  // (x -> y, x ^ y') twist form
  Elem arrow_conj(Elem a, Elem b) const;  // (x -> y, x' ^ y') variant
  Elem strong_imp(Elem a, Elem b) const;  // arrow both ways
  Elem tensor(Elem a, Elem b) const;      // ~(a => ~b)
  Elem par(Elem a, Elem b) const;         // ~(~a (*) ~b)
  Elem neg(Elem a) const;                 // swap coordinates
  // (~x', x) with ~ the base pseudo-complement. A 4-cycle only over a
  // Boolean base; over other bases it is merely a unary operation.
  Elem demi(Elem a) const;
  Elem bang(Elem a) const;        // meet with unit_both: (x, top)
  Elem gamma(Elem a) const;       // join with unit_both: (top, x')
  Elem weak_bang(Elem a) const;   // meet with unit_neither: (bottom, x')
  Elem weak_gamma(Elem a) const;  // join with unit_neither: (x, bottom)

  bool truth_leq(Elem a, Elem b) const;      // pos up, neg down
  bool knowledge_leq(Elem a, Elem b) const;  // both up
  bool designated(Elem a) const;             // pos == top

 private:
  FiniteHeyting base_;
};

}  // namespace paralog::heyting
