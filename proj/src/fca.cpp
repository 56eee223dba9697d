// Copyright 2026 paralog contributors
#include "paralog/fca.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <unordered_map>
#include <unordered_set>

#include "paralog/error.hpp"
#include "paralog/rng.hpp"

namespace paralog::fca {

namespace {

using Mask = std::uint32_t;

std::vector<int> mask_to_vec(Mask m, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (m & (Mask{1} << i)) out.push_back(i);
  return out;
}

Mask vec_to_mask(const std::vector<int>& v, int n, const char* what) {
  Mask m = 0;
  for (int i : v) {
    if (i < 0 || i >= n)
      throw ValidationError(std::string(what) + " index out of range");
    m |= Mask{1} << i;
  }
  return m;
}

bool designated_at(const FormalContext& ctx, int o, int p) {
  return pos_bit(ctx.at(o, p));
}

// Attribute extent under the designated reading.
Mask attr_extent(const FormalContext& ctx, int p) {
  Mask m = 0;
  for (int o = 0; o < ctx.n_objects(); ++o)
    if (designated_at(ctx, o, p)) m |= Mask{1} << o;
  return m;
}

std::vector<int> derive_properties_impl(const FormalContext& ctx,
                                        const std::vector<int>& objs) {
  std::vector<int> out;
  for (int p = 0; p < ctx.n_properties(); ++p) {
    bool all = true;
    for (int o : objs)
      if (!designated_at(ctx, o, p)) {
        all = false;
        break;
      }
    if (all) out.push_back(p);
  }
  return out;
}

std::vector<int> derive_objects_impl(const FormalContext& ctx,
                                     const std::vector<int>& props) {
  std::vector<int> out;
  for (int o = 0; o < ctx.n_objects(); ++o) {
    bool all = true;
    for (int p : props)
      if (!designated_at(ctx, o, p)) {
        all = false;
        break;
      }
    if (all) out.push_back(o);
  }
  return out;
}

}  // namespace

void validate(const FormalContext& ctx) {
  const std::size_t cells =
      static_cast<std::size_t>(ctx.objects.size()) * ctx.properties.size();
  if (ctx.mode == Mode::Fuzzy) {
    if (ctx.inc_pos.size() != cells || ctx.inc_neg.size() != cells)
      throw ValidationError("fuzzy incidence size does not match the context");
    if (ctx.grades < 1) throw ValidationError("grade chain needs g >= 1");
    for (std::size_t i = 0; i < cells; ++i)
      if (ctx.inc_pos[i] < 0 || ctx.inc_pos[i] > ctx.grades ||
          ctx.inc_neg[i] < 0 || ctx.inc_neg[i] > ctx.grades)
        throw ValidationError("incidence degree off the grade chain");
  } else {
    if (ctx.inc.size() != cells)
      throw ValidationError("incidence size does not match the context");
    if (ctx.mode == Mode::Crisp)
      for (PBit b : ctx.inc)
        if (b != PBit::T && b != PBit::F)
          throw ValidationError(
              "crisp incidence entries must be T or F; found " + to_string(b));
  }
}

std::vector<int> derive_properties(const FormalContext& ctx,
                                   const std::vector<int>& objs) {
  validate(ctx);
  if (ctx.mode == Mode::Fuzzy)
    throw ValidationError("set derivation on a fuzzy context");
  (void)vec_to_mask(objs, ctx.n_objects(), "object");
  return derive_properties_impl(ctx, objs);
}

std::vector<int> derive_objects(const FormalContext& ctx,
                                const std::vector<int>& props) {
  validate(ctx);
  if (ctx.mode == Mode::Fuzzy)
    throw ValidationError("set derivation on a fuzzy context");
  (void)vec_to_mask(props, ctx.n_properties(), "property");
  return derive_objects_impl(ctx, props);
}

std::vector<int> derive_objects_negative(const FormalContext& ctx,
                                         const std::vector<int>& props) {
  validate(ctx);
  if (ctx.mode == Mode::Fuzzy)
    throw ValidationError("set derivation on a fuzzy context");
  (void)vec_to_mask(props, ctx.n_properties(), "property");
  std::vector<int> out;
  for (int o = 0; o < ctx.n_objects(); ++o) {
    bool none = true;
    for (int p : props)
      if (designated_at(ctx, o, p)) {
        none = false;
        break;
      }
    if (none) out.push_back(o);
  }
  return out;
}

int residuum_impl(Residuum r, int g, int a, int b) {
  switch (r) {
    case Residuum::Goedel:
      return a <= b ? g : b;
    case Residuum::Lukasiewicz:
      return std::min(g, g - a + b);
  }
  return g;
}

namespace {

void check_degrees(const FormalContext& ctx, const std::vector<int>& d,
                   std::size_t expect, const char* what) {
  if (d.size() != expect)
    throw ValidationError(std::string(what) + " degree vector has wrong size");
  for (int x : d)
    if (x < 0 || x > ctx.grades)
      throw ValidationError(std::string(what) + " degree off the grade chain");
}

}  // namespace

DegreePair fuzzy_derive_properties(const FormalContext& ctx,
                                   const DegreePair& extent) {
  validate(ctx);
  if (ctx.mode != Mode::Fuzzy)
    throw ValidationError("fuzzy derivation on a non-fuzzy context");
  check_degrees(ctx, extent.pos, ctx.objects.size(), "extent");
  check_degrees(ctx, extent.neg, ctx.objects.size(), "extent");
  DegreePair out;
  out.pos.assign(ctx.properties.size(), ctx.grades);
  out.neg.assign(ctx.properties.size(), ctx.grades);
  for (int p = 0; p < ctx.n_properties(); ++p)
    for (int o = 0; o < ctx.n_objects(); ++o) {
      out.pos[p] = std::min(out.pos[p], residuum_impl(ctx.residuum, ctx.grades,
                                                      extent.pos[o],
                                                      ctx.pos_grade(o, p)));
      out.neg[p] = std::min(out.neg[p], residuum_impl(ctx.residuum, ctx.grades,
                                                      extent.neg[o],
                                                      ctx.neg_grade(o, p)));
    }
  return out;
}

DegreePair fuzzy_derive_objects(const FormalContext& ctx,
                                const DegreePair& intent) {
  validate(ctx);
  if (ctx.mode != Mode::Fuzzy)
    throw ValidationError("fuzzy derivation on a non-fuzzy context");
  check_degrees(ctx, intent.pos, ctx.properties.size(), "intent");
  check_degrees(ctx, intent.neg, ctx.properties.size(), "intent");
  DegreePair out;
  out.pos.assign(ctx.objects.size(), ctx.grades);
  out.neg.assign(ctx.objects.size(), ctx.grades);
  for (int o = 0; o < ctx.n_objects(); ++o)
    for (int p = 0; p < ctx.n_properties(); ++p) {
      out.pos[o] = std::min(out.pos[o], residuum_impl(ctx.residuum, ctx.grades,
                                                      intent.pos[p],
                                                      ctx.pos_grade(o, p)));
      out.neg[o] = std::min(out.neg[o], residuum_impl(ctx.residuum, ctx.grades,
                                                      intent.neg[p],
                                                      ctx.neg_grade(o, p)));
    }
  return out;
}

// ---- enumeration ------------------------------------------------------------

namespace {

std::vector<int> extent_sort_key(const Concept& c) {
  if (const auto* s = std::get_if<SetConcept>(&c)) return s->extent;
  const auto& f = std::get<FuzzyConcept>(c);
  std::vector<int> key = f.extent.pos;
  key.insert(key.end(), f.extent.neg.begin(), f.extent.neg.end());
  return key;
}

void sort_concepts(std::vector<Concept>& cs) {
  std::sort(cs.begin(), cs.end(), [](const Concept& a, const Concept& b) {
    return extent_sort_key(a) < extent_sort_key(b);
  });
}

void check_object_capacity(const FormalContext& ctx) {
  if (ctx.n_objects() > kMaxObjects)
    throw CapacityError("context has " + std::to_string(ctx.n_objects()) +
                        " objects; enumeration supports at most " +
                        std::to_string(kMaxObjects));
}

std::vector<Concept> set_concepts_from_extents(const FormalContext& ctx,
                                               std::vector<Mask> extents) {
  std::sort(extents.begin(), extents.end());
  extents.erase(std::unique(extents.begin(), extents.end()), extents.end());
  std::vector<Concept> out;
  out.reserve(extents.size());
  for (Mask e : extents) {
    SetConcept c;
    c.extent = mask_to_vec(e, ctx.n_objects());
    c.intent = derive_properties_impl(ctx, c.extent);
    out.push_back(std::move(c));
  }
  return out;
}

// One component of the fuzzy system: all (extent, intent) fixpoints over the
// given incidence selector.
std::vector<std::pair<std::vector<int>, std::vector<int>>> fuzzy_component(
    const FormalContext& ctx, bool positive) {
  const int nO = ctx.n_objects(), nP = ctx.n_properties(), g = ctx.grades;
  auto inc = [&](int o, int p) {
    return positive ? ctx.pos_grade(o, p) : ctx.neg_grade(o, p);
  };
  auto derive_p = [&](const std::vector<int>& ext) {
    std::vector<int> out(nP, g);
    for (int p = 0; p < nP; ++p)
      for (int o = 0; o < nO; ++o)
        out[p] = std::min(out[p],
                          residuum_impl(ctx.residuum, g, ext[o], inc(o, p)));
    return out;
  };
  auto derive_o = [&](const std::vector<int>& intent) {
    std::vector<int> out(nO, g);
    for (int o = 0; o < nO; ++o)
      for (int p = 0; p < nP; ++p)
        out[o] = std::min(out[o],
                          residuum_impl(ctx.residuum, g, intent[p], inc(o, p)));
    return out;
  };

  double sweep = std::pow(static_cast<double>(g) + 1, nO);
  if (sweep > static_cast<double>(kMaxFuzzySweep))
    throw CapacityError("fuzzy enumeration would sweep " +
                        std::to_string(static_cast<std::uint64_t>(sweep)) +
                        " candidate extents; the limit is " +
                        std::to_string(kMaxFuzzySweep));

  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  std::vector<int> ext(nO, 0);
  while (true) {
    std::vector<int> intent = derive_p(ext);
    if (derive_o(intent) == ext) out.emplace_back(ext, std::move(intent));
    int i = nO - 1;
    for (; i >= 0; --i) {
      if (++ext[i] <= g) break;
      ext[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace

ConceptLattice enumerate_concepts(const FormalContext& ctx) {
  validate(ctx);
  ConceptLattice l;
  l.context = ctx;
  if (ctx.mode == Mode::Fuzzy) {
    auto pos = fuzzy_component(ctx, true);
    auto neg = fuzzy_component(ctx, false);
    std::uint64_t product =
        static_cast<std::uint64_t>(pos.size()) * neg.size();
    if (product > kMaxFuzzySweep)
      throw CapacityError("fuzzy concept product has " +
                          std::to_string(product) + " elements; the limit is " +
                          std::to_string(kMaxFuzzySweep));
    for (const auto& [pe, pi] : pos)
      for (const auto& [ne, ni] : neg) {
        FuzzyConcept c;
        c.extent = {pe, ne};
        c.intent = {pi, ni};
        l.concepts.emplace_back(std::move(c));
      }
  } else {
    check_object_capacity(ctx);
    const int nO = ctx.n_objects();
    const Mask full = nO == 32 ? ~Mask{0} : (Mask{1} << nO) - 1;
    // every closed extent is an intersection of attribute extents (the empty
    // intersection being the full object set)
    std::vector<Mask> family = {full};
    std::unordered_set<Mask> seen = {full};
    for (int p = 0; p < ctx.n_properties(); ++p) {
      Mask am = attr_extent(ctx, p);
      std::size_t fixed = family.size();
      for (std::size_t i = 0; i < fixed; ++i) {
        Mask m = family[i] & am;
        if (seen.insert(m).second) family.push_back(m);
      }
    }
    l.concepts = set_concepts_from_extents(ctx, std::move(family));
  }
  sort_concepts(l.concepts);
  return l;
}

std::vector<Concept> enumerate_concepts_brute(const FormalContext& ctx) {
  validate(ctx);
  std::vector<Concept> out;
  if (ctx.mode == Mode::Fuzzy) {
    // the product of the two systems, assembled from scratch
    auto pos = fuzzy_component(ctx, true);
    auto neg = fuzzy_component(ctx, false);
    for (const auto& [pe, pi] : pos)
      for (const auto& [ne, ni] : neg)
        out.push_back(FuzzyConcept{{pe, ne}, {pi, ni}});
  } else {
    check_object_capacity(ctx);
    const int nO = ctx.n_objects();
    for (Mask m = 0; m < (Mask{1} << nO); ++m) {
      std::vector<int> ext = mask_to_vec(m, nO);
      std::vector<int> intent = derive_properties_impl(ctx, ext);
      if (derive_objects_impl(ctx, intent) == ext)
        out.push_back(SetConcept{std::move(ext), std::move(intent)});
    }
  }
  sort_concepts(out);
  return out;
}

bool extent_leq(const Concept& a, const Concept& b) {
  if (const auto* sa = std::get_if<SetConcept>(&a)) {
    const auto& sb = std::get<SetConcept>(b);
    return std::includes(sb.extent.begin(), sb.extent.end(),
                         sa->extent.begin(), sa->extent.end());
  }
  const auto& fa = std::get<FuzzyConcept>(a);
  const auto& fb = std::get<FuzzyConcept>(b);
  for (std::size_t i = 0; i < fa.extent.pos.size(); ++i)
    if (fa.extent.pos[i] > fb.extent.pos[i]) return false;
  for (std::size_t i = 0; i < fa.extent.neg.size(); ++i)
    if (fa.extent.neg[i] > fb.extent.neg[i]) return false;
  return true;
}

namespace {

std::string extent_key(const Concept& c) {
  std::string k;
  for (int x : extent_sort_key(c)) {
    k += std::to_string(x);
    k += ',';
  }
  return k;
}

std::vector<int> set_intersect(const std::vector<int>& a,
                               const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

DegreePair pair_min(const DegreePair& a, const DegreePair& b) {
  DegreePair out = a;
  for (std::size_t i = 0; i < out.pos.size(); ++i)
    out.pos[i] = std::min(out.pos[i], b.pos[i]);
  for (std::size_t i = 0; i < out.neg.size(); ++i)
    out.neg[i] = std::min(out.neg[i], b.neg[i]);
  return out;
}

}  // namespace

std::vector<LatticeViolation> verify_lattice(const ConceptLattice& l) {
  validate(l.context);
  std::vector<LatticeViolation> out;
  std::unordered_map<std::string, int> by_extent;
  for (std::size_t i = 0; i < l.concepts.size(); ++i) {
    auto [it, fresh] =
        by_extent.emplace(extent_key(l.concepts[i]), static_cast<int>(i));
    if (!fresh)
      out.push_back({"duplicate-extent", it->second, static_cast<int>(i)});
  }

  const bool fuzzy = l.context.mode == Mode::Fuzzy;
  auto has_extent = [&](const Concept& c) {
    return by_extent.count(extent_key(c)) != 0;
  };

  for (std::size_t i = 0; i < l.concepts.size(); ++i)
    for (std::size_t j = i + 1; j < l.concepts.size(); ++j) {
      const Concept &a = l.concepts[i], &b = l.concepts[j];
      if (!fuzzy) {
        const auto &sa = std::get<SetConcept>(a), &sb = std::get<SetConcept>(b);
        // meet: intersect extents, close
        std::vector<int> me = set_intersect(sa.extent, sb.extent);
        std::vector<int> mp = derive_properties_impl(l.context, me);
        if (derive_objects_impl(l.context, mp) != me) {
          out.push_back({"meet-not-closed", static_cast<int>(i),
                         static_cast<int>(j)});
        } else if (!has_extent(SetConcept{me, mp})) {
          out.push_back(
              {"meet-missing", static_cast<int>(i), static_cast<int>(j)});
        }
        // join: intersect intents, close
        std::vector<int> jp = set_intersect(sa.intent, sb.intent);
        std::vector<int> je = derive_objects_impl(l.context, jp);
        if (derive_properties_impl(l.context, je) != jp) {
          out.push_back({"join-not-closed", static_cast<int>(i),
                         static_cast<int>(j)});
        } else if (!has_extent(SetConcept{je, jp})) {
          out.push_back(
              {"join-missing", static_cast<int>(i), static_cast<int>(j)});
        }
      } else {
        const auto &fa = std::get<FuzzyConcept>(a), &fb = std::get<FuzzyConcept>(b);
        DegreePair me = pair_min(fa.extent, fb.extent);
        DegreePair mp = fuzzy_derive_properties(l.context, me);
        if (!(fuzzy_derive_objects(l.context, mp) == me)) {
          out.push_back({"meet-not-closed", static_cast<int>(i),
                         static_cast<int>(j)});
        } else if (!has_extent(FuzzyConcept{me, mp})) {
          out.push_back(
              {"meet-missing", static_cast<int>(i), static_cast<int>(j)});
        }
        DegreePair jp = pair_min(fa.intent, fb.intent);
        DegreePair je = fuzzy_derive_objects(l.context, jp);
        if (!(fuzzy_derive_properties(l.context, je) == jp)) {
          out.push_back({"join-not-closed", static_cast<int>(i),
                         static_cast<int>(j)});
        } else if (!has_extent(FuzzyConcept{je, jp})) {
          out.push_back(
              {"join-missing", static_cast<int>(i), static_cast<int>(j)});
        }
      }
    }
  return out;
}

std::vector<std::pair<int, int>> covers(const ConceptLattice& l) {
  const int n = static_cast<int>(l.concepts.size());
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!extent_leq(l.concepts[i], l.concepts[j])) continue;
      bool covering = true;
      for (int k = 0; k < n && covering; ++k) {
        if (k == i || k == j) continue;
        if (extent_leq(l.concepts[i], l.concepts[k]) &&
            extent_leq(l.concepts[k], l.concepts[j]))
          covering = false;
      }
      if (covering) out.emplace_back(i, j);
    }
  return out;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

std::string format_grade(int num, int g) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f",
                static_cast<double>(num) / static_cast<double>(g));
  return buf;
}

std::string concept_label(const ConceptLattice& l, const Concept& c) {
  const auto& ctx = l.context;
  std::string s = "{";
  if (const auto* sc = std::get_if<SetConcept>(&c)) {
    for (std::size_t i = 0; i < sc->extent.size(); ++i) {
      if (i) s += ",";
      s += ctx.objects[sc->extent[i]];
    }
    s += "}|{";
    for (std::size_t i = 0; i < sc->intent.size(); ++i) {
      if (i) s += ",";
      s += ctx.properties[sc->intent[i]];
    }
  } else {
    const auto& fc = std::get<FuzzyConcept>(c);
    for (std::size_t i = 0; i < ctx.objects.size(); ++i) {
      if (i) s += ",";
      s += ctx.objects[i] + ":" + format_grade(fc.extent.pos[i], ctx.grades) +
           "/" + format_grade(fc.extent.neg[i], ctx.grades);
    }
    s += "}|{";
    for (std::size_t i = 0; i < ctx.properties.size(); ++i) {
      if (i) s += ",";
      s += ctx.properties[i] + ":" +
           format_grade(fc.intent.pos[i], ctx.grades) + "/" +
           format_grade(fc.intent.neg[i], ctx.grades);
    }
  }
  s += "}";
  return s;
}

}  // namespace

std::string to_dot(const ConceptLattice& l) {
  std::string out = "digraph concepts {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < l.concepts.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=" +
           dot_quote(concept_label(l, l.concepts[i])) + "];\n";
  for (auto [lo, hi] : covers(l))
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

PropertyMap blend(const PropertyMap& a, const PropertyMap& b, BlendStrategy s,
                  std::uint64_t seed) {
  if (a.properties != b.properties)
    throw ValidationError("blend inputs have different property sequences");
  if (a.values.size() != a.properties.size() ||
      b.values.size() != b.properties.size())
    throw ValidationError("property map values do not match its properties");
  PropertyMap out;
  out.properties = a.properties;
  out.values.reserve(a.values.size());
  std::mt19937_64 g(seed);
  // unit pairs in T, F, B, N order
  static constexpr std::pair<double, double> kUnits[4] = {
      {1, 0}, {0, 1}, {1, 1}, {0, 0}};
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    auto va = a.values[i], vb = b.values[i];
    switch (s) {
      case BlendStrategy::SelectFirst: out.values.push_back(va); break;
      case BlendStrategy::SelectSecond: out.values.push_back(vb); break;
      case BlendStrategy::Average:
        out.values.emplace_back((va.first + vb.first) / 2,
                                (va.second + vb.second) / 2);
        break;
      case BlendStrategy::Sample: {
        if (va == vb) {
          out.values.push_back(va);
        } else if ((va == std::pair<double, double>{1, 0} &&
                    vb == std::pair<double, double>{0, 1}) ||
                   (va == std::pair<double, double>{0, 1} &&
                    vb == std::pair<double, double>{1, 0})) {
          out.values.push_back(kUnits[bounded_draw(g, 4)]);
        } else {
          out.values.push_back(bounded_draw(g, 2) == 0 ? va : vb);
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace paralog::fca
