// Copyright 2026 paralog contributors
#include "paralog/pbit.hpp"

#include <cctype>

#include "paralog/error.hpp"

namespace paralog {

PBit from_kc(KcPoint p) {
  for (PBit a : kAllPBits)
    if (to_kc(a) == p) return a;
  throw ValidationError("not a compass point: (" + std::to_string(p.x) + "," +
                        std::to_string(p.y) + ")");
}

char to_char(PBit a) {
  switch (a) {
    case PBit::T: return 'T';
    case PBit::F: return 'F';
    case PBit::B: return 'B';
    case PBit::N: return 'N';
  }
  return '?';
}

std::string to_string(PBit a) { return std::string(1, to_char(a)); }

std::optional<PBit> pbit_from_string(std::string_view s) {
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (s.size() == 1) {
    switch (s[0]) {
      case 'T': return PBit::T;
      case 'F': return PBit::F;
      case 'B': return PBit::B;
      case 'N': return PBit::N;
      default: return std::nullopt;
    }
  }
  // pair form "(p,n)" with p, n in {0,1}
  std::string compact;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.size() == 5 && compact[0] == '(' && compact[2] == ',' &&
      compact[4] == ')') {
    char p = compact[1], n = compact[3];
    if ((p == '0' || p == '1') && (n == '0' || n == '1'))
      return make_pbit(p == '1', n == '1');
  }
  return std::nullopt;
}

}  // namespace paralog
