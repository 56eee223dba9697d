// Copyright 2026 paralog contributors
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace paralog {

/** A paraconsistent bit: a pair of independent evidence bits.
 *
 * `pos` records support for the statement, `neg` support against it. The two
 * bits never constrain each other, which yields four values:
 *
 *   T = (1,0)   verified only
 *   F = (0,1)   falsified only
 *   B = (1,1)   both (contradictory evidence)
 *   N = (0,0)   neither (no evidence)
 *
 * Encoding: pos | neg << 1. Keep it stable; tables below index by it.
 */
enum class PBit : std::uint8_t {
  N = 0,
  T = 1,
  F = 2,
  B = 3,
};

constexpr bool pos_bit(PBit a) { return static_cast<unsigned>(a) & 1u; }
constexpr bool neg_bit(PBit a) { return (static_cast<unsigned>(a) >> 1) & 1u; }
constexpr PBit make_pbit(bool pos, bool neg) {
  return static_cast<PBit>(static_cast<unsigned>(pos) |
                           (static_cast<unsigned>(neg) << 1));
}

constexpr std::array<PBit, 4> kAllPBits = {PBit::N, PBit::T, PBit::F, PBit::B};

enum class UnaryOp : std::uint8_t { Neg, Demi, Bang, Gamma, WeakBang, WeakGamma };
enum class BinaryOp : std::uint8_t { Meet, Join, Arrow, StrongImp, Tensor, Par };

namespace detail {

// Formula-level definitions. The public entry points read tables generated
// from these; tests re-derive the tables through an unrelated code path.
constexpr bool bool_imp(bool x, bool y) { return !x || y; }

constexpr PBit meet_f(PBit a, PBit b) {
  return make_pbit(pos_bit(a) && pos_bit(b), neg_bit(a) || neg_bit(b));
}
constexpr PBit join_f(PBit a, PBit b) {
  return make_pbit(pos_bit(a) || pos_bit(b), neg_bit(a) && neg_bit(b));
}
// Twist form: negative evidence needs the antecedent verified and the
// consequent falsified.
constexpr PBit arrow_f(PBit a, PBit b) {
  return make_pbit(bool_imp(pos_bit(a), pos_bit(b)), pos_bit(a) && neg_bit(b));
}
// Variant with the negative coordinate taken as the conjunction of the two
// negative coordinates. Kept for comparison; modus ponens still holds but
// arrow_conj(T, F) = N instead of F.
constexpr PBit arrow_conj_f(PBit a, PBit b) {
  return make_pbit(bool_imp(pos_bit(a), pos_bit(b)), neg_bit(a) && neg_bit(b));
}
constexpr PBit neg_f(PBit a) { return make_pbit(neg_bit(a), pos_bit(a)); }
// Quarter-turn negation: N -> T -> B -> F -> N. Applying it twice restricted
// to {T, F} is classical negation.
constexpr PBit demi_f(PBit a) { return make_pbit(!neg_bit(a), pos_bit(a)); }
constexpr PBit bang_f(PBit a) { return meet_f(a, PBit::B); }        // (x, 1)
constexpr PBit gamma_f(PBit a) { return join_f(a, PBit::B); }       // (1, x')
constexpr PBit weak_bang_f(PBit a) { return meet_f(a, PBit::N); }   // (0, x')
constexpr PBit weak_gamma_f(PBit a) { return join_f(a, PBit::N); }  // (x, 0)
constexpr PBit strong_imp_f(PBit a, PBit b) {
  return meet_f(arrow_f(a, b), arrow_f(neg_f(b), neg_f(a)));
}
constexpr PBit tensor_f(PBit a, PBit b) {
  return neg_f(strong_imp_f(a, neg_f(b)));
}
constexpr PBit par_f(PBit a, PBit b) {
  return neg_f(tensor_f(neg_f(a), neg_f(b)));
}

constexpr std::size_t idx(PBit a) { return static_cast<std::size_t>(a); }
constexpr std::size_t idx(PBit a, PBit b) { return idx(a) * 4 + idx(b); }

template <typename Fn>
constexpr std::array<PBit, 4> gen1(Fn f) {
  std::array<PBit, 4> t{};
  for (PBit a : kAllPBits) t[idx(a)] = f(a);
  return t;
}
template <typename Fn>
constexpr std::array<PBit, 16> gen2(Fn f) {
  std::array<PBit, 16> t{};
  for (PBit a : kAllPBits)
    for (PBit b : kAllPBits) t[idx(a, b)] = f(a, b);
  return t;
}

inline constexpr auto kMeet = gen2(meet_f);
inline constexpr auto kJoin = gen2(join_f);
inline constexpr auto kArrow = gen2(arrow_f);
inline constexpr auto kArrowConj = gen2(arrow_conj_f);
inline constexpr auto kStrongImp = gen2(strong_imp_f);
inline constexpr auto kTensor = gen2(tensor_f);
inline constexpr auto kPar = gen2(par_f);
inline constexpr auto kNeg = gen1(neg_f);
inline constexpr auto kDemi = gen1(demi_f);
inline constexpr auto kBang = gen1(bang_f);
inline constexpr auto kGamma = gen1(gamma_f);
inline constexpr auto kWeakBang = gen1(weak_bang_f);
inline constexpr auto kWeakGamma = gen1(weak_gamma_f);

}  // namespace detail

constexpr PBit meet(PBit a, PBit b) { return detail::kMeet[detail::idx(a, b)]; }
constexpr PBit join(PBit a, PBit b) { return detail::kJoin[detail::idx(a, b)]; }
constexpr PBit arrow(PBit a, PBit b) { return detail::kArrow[detail::idx(a, b)]; }
constexpr PBit arrow_conj(PBit a, PBit b) {
  return detail::kArrowConj[detail::idx(a, b)];
}
constexpr PBit strong_imp(PBit a, PBit b) {
  return detail::kStrongImp[detail::idx(a, b)];
}
constexpr PBit tensor(PBit a, PBit b) {
  return detail::kTensor[detail::idx(a, b)];
}
constexpr PBit par(PBit a, PBit b) { return detail::kPar[detail::idx(a, b)]; }
constexpr PBit neg(PBit a) { return detail::kNeg[detail::idx(a)]; }
constexpr PBit demi(PBit a) { return detail::kDemi[detail::idx(a)]; }
constexpr PBit bang(PBit a) { return detail::kBang[detail::idx(a)]; }
constexpr PBit gamma(PBit a) { return detail::kGamma[detail::idx(a)]; }
constexpr PBit weak_bang(PBit a) { return detail::kWeakBang[detail::idx(a)]; }
constexpr PBit weak_gamma(PBit a) {
  return detail::kWeakGamma[detail::idx(a)];
}

constexpr PBit apply(UnaryOp op, PBit a) {
  switch (op) {
    case UnaryOp::Neg: return neg(a);
    case UnaryOp::Demi: return demi(a);
    case UnaryOp::Bang: return bang(a);
    case UnaryOp::Gamma: return gamma(a);
    case UnaryOp::WeakBang: return weak_bang(a);
    case UnaryOp::WeakGamma: return weak_gamma(a);
  }
  return PBit::N;
}
constexpr PBit apply(BinaryOp op, PBit a, PBit b) {
  switch (op) {
    case BinaryOp::Meet: return meet(a, b);
    case BinaryOp::Join: return join(a, b);
    case BinaryOp::Arrow: return arrow(a, b);
    case BinaryOp::StrongImp: return strong_imp(a, b);
    case BinaryOp::Tensor: return tensor(a, b);
    case BinaryOp::Par: return par(a, b);
  }
  return PBit::N;
}

// A value counts as asserted when it carries positive evidence: {T, B}.
constexpr bool is_designated(PBit a) { return pos_bit(a); }

// Information order: N at the bottom, B at the top.
constexpr bool knowledge_leq(PBit a, PBit b) {
  return pos_bit(a) <= pos_bit(b) && neg_bit(a) <= neg_bit(b);
}
// Truth order: F at the bottom, T at the top. meet/join above are the lattice
// operations of this order.
constexpr bool truth_leq(PBit a, PBit b) {
  return pos_bit(a) <= pos_bit(b) && neg_bit(a) >= neg_bit(b);
}

// Placement on the Kleene compass: T=(1,0), N=(0,1), B=(-1,0), F=(0,-1).
// demi steps one quarter turn counterclockwise through N, T, B, F.
struct KcPoint {
  int x = 0;
  int y = 0;
  friend constexpr bool operator==(KcPoint, KcPoint) = default;
};
constexpr KcPoint to_kc(PBit a) {
  switch (a) {
    case PBit::T: return {1, 0};
    case PBit::N: return {0, 1};
    case PBit::B: return {-1, 0};
    case PBit::F: return {0, -1};
  }
  return {0, 0};
}
// Inverse of to_kc. Throws ValidationError off the four compass points.
PBit from_kc(KcPoint p);

// Proof-trace view: pos says the positive trace set is nonempty, neg the
// negative one.
struct TraceStatus {
  bool positive_nonempty = false;
  bool negative_nonempty = false;
  friend constexpr bool operator==(TraceStatus, TraceStatus) = default;
};
constexpr TraceStatus trace_status(PBit a) {
  return {pos_bit(a), neg_bit(a)};
}

char to_char(PBit a);
std::string to_string(PBit a);
// Accepts the letter form "T" and the pair form "(1,0)" (spaces allowed
// after commas and parens). Returns nullopt on anything else.
std::optional<PBit> pbit_from_string(std::string_view s);

}  // namespace paralog
