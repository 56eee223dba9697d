// Copyright 2026 paralog contributors
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "paralog/error.hpp"
#include "paralog/pbit.hpp"

namespace paralog::cdlang {

// ASCII connective syntax, loosest to tightest:
//   =>  ->                 (right-associative)
//   |   (+)
//   &   (*)
//   ~  %  !  ?  !-  ?-     (prefix)
//   atoms, T F B N, Psi(x), x < y, ( ... )
// Binders "all x. e" and "ex x. e" take the longest body they can and are
// accepted anywhere an operand is expected; parenthesize to cut the scope.
// T, F, B, N are reserved constant names.

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  struct Atom {
    std::string name;
  };
  struct Const {
    PBit value;
  };
  struct Pred {
    std::string name;
    std::string term;  // a bound variable or an individual
  };
  struct Less {
    std::string lhs, rhs;
  };
  struct Unary {
    UnaryOp op;
    ExprPtr arg;
  };
  struct Binary {
    BinaryOp op;
    ExprPtr lhs, rhs;
  };
  struct Quant {
    bool forall = true;
    std::string var;
    ExprPtr body;
  };
  std::variant<Atom, Const, Pred, Less, Unary, Binary, Quant> node;
};

ExprPtr atom(std::string name);
ExprPtr lit(PBit v);
ExprPtr pred(std::string name, std::string term);
ExprPtr less(std::string lhs, std::string rhs);
ExprPtr un(UnaryOp op, ExprPtr e);
ExprPtr bin(BinaryOp op, ExprPtr l, ExprPtr r);
ExprPtr forall(std::string var, ExprPtr body);
ExprPtr exists(std::string var, ExprPtr body);

bool equal(const Expr& a, const Expr& b);

struct ParseError : Error {
  ParseError(std::string msg, int line, int col)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line = 0, col = 0;
};

// Binder references are resolved during parsing; terms not bound by an
// enclosing binder are free individual references, looked up in the
// valuation's domain at evaluation time.
ExprPtr parse(std::string_view text);
// Same, but free terms must appear in declared_free; otherwise ParseError.
ExprPtr parse(std::string_view text, const std::set<std::string>& declared_free);

// Re-parseable rendering; parse(to_string(e)) is structurally equal to e.
std::string to_string(const Expr& e);

struct Valuation {
  std::vector<std::string> domain;  // individuals, in declaration order
  std::map<std::string, PBit> atoms;
  std::map<std::pair<std::string, std::string>, PBit> preds;  // (pred, individual)
  std::map<std::pair<std::string, std::string>, PBit> less;   // (lhs, rhs)
  // When set, missing atom/pred/order entries and unknown individuals
  // evaluate to N instead of raising EvalError.
  bool open_world = false;
};

// Binders take meets (all) and joins (ex) over the valuation's domain; an
// empty domain yields the respective unit (T for all, F for ex).
PBit evaluate(const Expr& e, const Valuation& v);

// Atom names of a connective-only expression, sorted. Throws ValidationError
// when e contains binders, predicates or order atoms.
std::vector<std::string> free_atoms(const Expr& e);

inline constexpr int kMaxDerivabilityAtoms = 12;

struct DerivabilityResult {
  bool derivable = false;
  // A failing assignment, aligned with the sorted atom list, present iff
  // derivable is false.
  std::vector<std::pair<std::string, PBit>> witness;
};

// True iff e evaluates to a designated value ({T, B}) under every assignment
// of the four values to its atoms. Propositional expressions only; at most
// kMaxDerivabilityAtoms distinct atoms (CapacityError beyond).
DerivabilityResult is_derivable(const Expr& e);

}  // namespace paralog::cdlang
