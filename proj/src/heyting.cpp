// Copyright 2026 paralog contributors
#include "paralog/heyting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "paralog/error.hpp"

namespace paralog::heyting {

namespace {

std::string default_label(int i) { return "e" + std::to_string(i); }

}  // namespace

Poset::Poset(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& covers)
    : n_(static_cast<int>(elements.size())), labels_(std::move(elements)) {
  if (n_ > kMaxElements)
    throw CapacityError("poset has " + std::to_string(n_) +
                        " elements, limit is " + std::to_string(kMaxElements));
  std::unordered_map<std::string, int> ix;
  for (int i = 0; i < n_; ++i) {
    if (!ix.emplace(labels_[i], i).second)
      throw ValidationError("duplicate poset element '" + labels_[i] + "'");
  }
  leq_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i) leq_[i * n_ + i] = 1;
  for (const auto& [lo, hi] : covers) {
    auto a = ix.find(lo), b = ix.find(hi);
    if (a == ix.end()) throw ValidationError("unknown poset element '" + lo + "'");
    if (b == ix.end()) throw ValidationError("unknown poset element '" + hi + "'");
    leq_[a->second * n_ + b->second] = 1;
  }
  // Warshall closure, then antisymmetry = acyclicity of the cover relation.
  for (int k = 0; k < n_; ++k)
    for (int a = 0; a < n_; ++a)
      if (leq_[a * n_ + k])
        for (int b = 0; b < n_; ++b)
          if (leq_[k * n_ + b]) leq_[a * n_ + b] = 1;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (leq_[a * n_ + b] && leq_[b * n_ + a])
        throw ValidationError("covers contain a cycle through '" + labels_[a] +
                              "' and '" + labels_[b] + "'");
}

int Poset::index_of(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == name) return i;
  throw ValidationError("unknown poset element '" + name + "'");
}

FiniteHeyting FiniteHeyting::downsets(const Poset& p) {
  const int k = p.size();
  if (k > 64)
    throw CapacityError("downset construction supports posets up to 64 elements");
  // strict lower sets; a set D is downward closed iff for every x in D,
  // lower[x] is contained in D.
  std::vector<std::uint64_t> lower(k, 0);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (y != x && p.leq(y, x)) lower[x] |= std::uint64_t{1} << y;

  // Grow downsets one element at a time; every downset is reachable from the
  // empty set along a linear extension.
  std::vector<std::uint64_t> sets;
  std::unordered_map<std::uint64_t, int> seen;
  sets.push_back(0);
  seen.emplace(0, 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::uint64_t d = sets[i];
    for (int x = 0; x < k; ++x) {
      if (d & (std::uint64_t{1} << x)) continue;
      if ((lower[x] & ~d) != 0) continue;
      std::uint64_t nd = d | (std::uint64_t{1} << x);
      if (seen.emplace(nd, 0).second) {
        sets.push_back(nd);
        if (sets.size() > static_cast<std::size_t>(kMaxElements))
          throw CapacityError("downset lattice exceeds " +
                              std::to_string(kMaxElements) + " elements");
      }
    }
  }
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  const int n = static_cast<int>(sets.size());
  std::unordered_map<std::uint64_t, int> id;
  for (int i = 0; i < n; ++i) id[sets[i]] = i;

  LatticeTables t;
  t.n = n;
  t.labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::string s = "{";
    bool first = true;
    for (int x = 0; x < k; ++x)
      if (sets[i] & (std::uint64_t{1} << x)) {
        if (!first) s += ",";
        s += p.label(x);
        first = false;
      }
    s += "}";
    t.labels.push_back(std::move(s));
  }
  t.leq.assign(static_cast<std::size_t>(n) * n, 0);
  t.meet.assign(static_cast<std::size_t>(n) * n, 0);
  t.join.assign(static_cast<std::size_t>(n) * n, 0);
  t.imp.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t.leq[a * n + b] = (sets[a] & ~sets[b]) == 0;
      t.meet[a * n + b] = id.at(sets[a] & sets[b]);
      t.join[a * n + b] = id.at(sets[a] | sets[b]);
    }
  // imp(a,b) = union of all c with c ^ a <= b; downsets are closed under
  // union, so the scan lands back in the carrier.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::uint64_t u = 0;
      for (int c = 0; c < n; ++c)
        if ((sets[c] & sets[a] & ~sets[b]) == 0) u |= sets[c];
      t.imp[a * n + b] = id.at(u);
    }
  t.bottom = 0;
  t.top = n - 1;
  return FiniteHeyting(std::move(t));
}

FiniteHeyting FiniteHeyting::chain(int n) {
  if (n < 1) throw ValidationError("chain needs at least one element");
  if (n > kMaxElements)
    throw CapacityError("chain length exceeds " + std::to_string(kMaxElements));
  LatticeTables t;
  t.n = n;
  for (int i = 0; i < n; ++i) t.labels.push_back(std::to_string(i));
  t.leq.assign(static_cast<std::size_t>(n) * n, 0);
  t.meet.assign(static_cast<std::size_t>(n) * n, 0);
  t.join.assign(static_cast<std::size_t>(n) * n, 0);
  t.imp.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t.leq[a * n + b] = a <= b;
      t.meet[a * n + b] = std::min(a, b);
      t.join[a * n + b] = std::max(a, b);
      t.imp[a * n + b] = a <= b ? n - 1 : b;
    }
  t.bottom = 0;
  t.top = n - 1;
  return FiniteHeyting(std::move(t));
}

FiniteHeyting FiniteHeyting::boolean2() { return chain(2); }

FiniteHeyting FiniteHeyting::from_tables(LatticeTables t) {
  auto report = validate(t);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    std::string w;
    for (int e : v.witness) w += " " + std::to_string(e);
    throw ValidationError("law '" + v.law + "' fails at witness" + w);
  }
  if (t.labels.empty())
    for (int i = 0; i < t.n; ++i) t.labels.push_back(default_label(i));
  return FiniteHeyting(std::move(t));
}

ValidationReport FiniteHeyting::validate(const LatticeTables& t) {
  const int n = t.n;
  if (n < 1) throw ValidationError("empty carrier");
  if (n > kMaxElements)
    throw CapacityError("carrier has " + std::to_string(n) +
                        " elements, limit is " + std::to_string(kMaxElements));
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  if (t.leq.size() != nn || t.meet.size() != nn || t.join.size() != nn ||
      t.imp.size() != nn)
    throw ValidationError("table sizes do not match carrier size");
  if (t.bottom < 0 || t.bottom >= n || t.top < 0 || t.top >= n)
    throw ValidationError("bottom/top out of range");
  for (std::size_t i = 0; i < nn; ++i)
    if (t.meet[i] < 0 || t.meet[i] >= n || t.join[i] < 0 || t.join[i] >= n ||
        t.imp[i] < 0 || t.imp[i] >= n)
      throw ValidationError("table entry out of range");

  ValidationReport rep;
  auto leq = [&](int a, int b) { return t.leq[a * n + b] != 0; };
  auto flag = [&](const char* law, std::vector<int> w) {
    rep.violations.push_back({law, std::move(w)});
  };

  for (int a = 0; a < n; ++a)
    if (!leq(a, a)) {
      flag("reflexivity", {a});
      break;
    }
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && leq(a, b) && leq(b, a)) {
          flag("antisymmetry", {a, b});
          return;
        }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (leq(a, b))
          for (int c = 0; c < n; ++c)
            if (leq(b, c) && !leq(a, c)) {
              flag("transitivity", {a, b, c});
              return;
            }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      if (!leq(t.bottom, a)) {
        flag("bottom", {a});
        return;
      }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      if (!leq(a, t.top)) {
        flag("top", {a});
        return;
      }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int m = t.meet[a * n + b];
        if (!leq(m, a) || !leq(m, b)) {
          flag("meet-lower-bound", {a, b});
          return;
        }
      }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (leq(c, a) && leq(c, b) && !leq(c, t.meet[a * n + b])) {
            flag("meet-greatest", {a, b, c});
            return;
          }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int j = t.join[a * n + b];
        if (!leq(a, j) || !leq(b, j)) {
          flag("join-upper-bound", {a, b});
          return;
        }
      }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (leq(a, c) && leq(b, c) && !leq(t.join[a * n + b], c)) {
            flag("join-least", {a, b, c});
            return;
          }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int lhs = t.meet[a * n + t.join[b * n + c]];
          int rhs = t.join[t.meet[a * n + b] * n + t.meet[a * n + c]];
          if (lhs != rhs) {
            flag("distributivity", {a, b, c});
            return;
          }
        }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          bool below = leq(c, t.imp[a * n + b]);
          bool residual = leq(t.meet[c * n + a], b);
          if (below != residual) {
            flag("residuation", {a, b, c});
            return;
          }
        }
  }();
  return rep;
}

PairAlgebra::PairAlgebra(FiniteHeyting base) : base_(std::move(base)) {}

std::size_t PairAlgebra::size() const {
  return static_cast<std::size_t>(base_.size()) * base_.size();
}

PairAlgebra::Elem PairAlgebra::element(std::size_t id) const {
  int n = base_.size();
  return {static_cast<int>(id) / n, static_cast<int>(id) % n};
}

std::size_t PairAlgebra::id(Elem e) const {
  return static_cast<std::size_t>(e.pos) * base_.size() + e.neg;
}

std::string PairAlgebra::label(Elem e) const {
  return "(" + base_.label(e.pos) + "," + base_.label(e.neg) + ")";
}

PairAlgebra::Elem PairAlgebra::unit_true() const {
  return {base_.top(), base_.bottom()};
}
PairAlgebra::Elem PairAlgebra::unit_false() const {
  return {base_.bottom(), base_.top()};
}
PairAlgebra::Elem PairAlgebra::unit_neither() const {
  return {base_.bottom(), base_.bottom()};
}
PairAlgebra::Elem PairAlgebra::unit_both() const {
  return {base_.top(), base_.top()};
}

PairAlgebra::Elem PairAlgebra::meet(Elem a, Elem b) const {
  return {base_.meet(a.pos, b.pos), base_.join(a.neg, b.neg)};
}
PairAlgebra::Elem PairAlgebra::join(Elem a, Elem b) const {
  return {base_.join(a.pos, b.pos), base_.meet(a.neg, b.neg)};
}
PairAlgebra::Elem PairAlgebra::arrow(Elem a, Elem b) const {
  return {base_.imp(a.pos, b.pos), base_.meet(a.pos, b.neg)};
}
PairAlgebra::Elem PairAlgebra::arrow_conj(Elem a, Elem b) const {
  return {base_.imp(a.pos, b.pos), base_.meet(a.neg, b.neg)};
}
PairAlgebra::Elem PairAlgebra::strong_imp(Elem a, Elem b) const {
  return meet(arrow(a, b), arrow(neg(b), neg(a)));
}
PairAlgebra::Elem PairAlgebra::tensor(Elem a, Elem b) const {
  return neg(strong_imp(a, neg(b)));
}
PairAlgebra::Elem PairAlgebra::par(Elem a, Elem b) const {
  return neg(tensor(neg(a), neg(b)));
}
PairAlgebra::Elem PairAlgebra::neg(Elem a) const { return {a.neg, a.pos}; }
PairAlgebra::Elem PairAlgebra::demi(Elem a) const {
  return {base_.compl_of(a.neg), a.pos};
}
PairAlgebra::Elem PairAlgebra::bang(Elem a) const {
  return meet(a, unit_both());
}
PairAlgebra::Elem PairAlgebra::gamma(Elem a) const {
  return join(a, unit_both());
}
PairAlgebra::Elem PairAlgebra::weak_bang(Elem a) const {
  return meet(a, unit_neither());
}
PairAlgebra::Elem PairAlgebra::weak_gamma(Elem a) const {
  return join(a, unit_neither());
}

bool PairAlgebra::truth_leq(Elem a, Elem b) const {
  return base_.leq(a.pos, b.pos) && base_.leq(b.neg, a.neg);
}
bool PairAlgebra::knowledge_leq(Elem a, Elem b) const {
  return base_.leq(a.pos, b.pos) && base_.leq(a.neg, b.neg);
}
bool PairAlgebra::designated(Elem a) const { return a.pos == base_.top(); }

}  // namespace paralog::heyting
