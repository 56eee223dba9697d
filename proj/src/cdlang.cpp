// Copyright 2026 paralog contributors
#include "paralog/cdlang.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>

namespace paralog::cdlang {

ExprPtr atom(std::string name) {
  return std::make_shared<Expr>(Expr{Expr::Atom{std::move(name)}});
}
ExprPtr lit(PBit v) { return std::make_shared<Expr>(Expr{Expr::Const{v}}); }
ExprPtr pred(std::string name, std::string term) {
  return std::make_shared<Expr>(Expr{Expr::Pred{std::move(name), std::move(term)}});
}
ExprPtr less(std::string lhs, std::string rhs) {
  return std::make_shared<Expr>(Expr{Expr::Less{std::move(lhs), std::move(rhs)}});
}
ExprPtr un(UnaryOp op, ExprPtr e) {
  return std::make_shared<Expr>(Expr{Expr::Unary{op, std::move(e)}});
}
ExprPtr bin(BinaryOp op, ExprPtr l, ExprPtr r) {
  return std::make_shared<Expr>(Expr{Expr::Binary{op, std::move(l), std::move(r)}});
}
ExprPtr forall(std::string var, ExprPtr body) {
  return std::make_shared<Expr>(Expr{Expr::Quant{true, std::move(var), std::move(body)}});
}
ExprPtr exists(std::string var, ExprPtr body) {
  return std::make_shared<Expr>(Expr{Expr::Quant{false, std::move(var), std::move(body)}});
}

bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Expr::Atom>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Expr::Const>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, Expr::Pred>) {
          return x.name == y.name && x.term == y.term;
        } else if constexpr (std::is_same_v<T, Expr::Less>) {
          return x.lhs == y.lhs && x.rhs == y.rhs;
        } else if constexpr (std::is_same_v<T, Expr::Unary>) {
          return x.op == y.op && equal(*x.arg, *y.arg);
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          return x.op == y.op && equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
        } else {
          return x.forall == y.forall && x.var == y.var && equal(*x.body, *y.body);
        }
      },
      a.node);
}

// ---- lexer ----------------------------------------------------------------

namespace {

enum class Tok {
  Ident, ConstVal, All, Ex,
  Arrow, StrongImp, Pipe, ParOp, Amp, TensorOp,
  Tilde, Percent, Bang, Question, BangDash, QuestionDash,
  LParen, RParen, Dot, Lt, End,
};

struct Token {
  Tok kind;
  std::string text;
  PBit value = PBit::N;
  int line = 1, col = 1;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::ConstVal: return "constant";
    case Tok::All: return "'all'";
    case Tok::Ex: return "'ex'";
    case Tok::Arrow: return "'->'";
    case Tok::StrongImp: return "'=>'";
    case Tok::Pipe: return "'|'";
    case Tok::ParOp: return "'(+)'";
    case Tok::Amp: return "'&'";
    case Tok::TensorOp: return "'(*)'";
    case Tok::Tilde: return "'~'";
    case Tok::Percent: return "'%'";
    case Tok::Bang: return "'!'";
    case Tok::Question: return "'?'";
    case Tok::BangDash: return "'!-'";
    case Tok::QuestionDash: return "'?-'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Dot: return "'.'";
    case Tok::Lt: return "'<'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string text, int l, int c) {
    out.push_back({k, std::move(text), PBit::N, l, c});
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    int l = line, co = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_'))
        ++j;
      std::string word(s.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      if (word == "all") {
        push(Tok::All, word, l, co);
      } else if (word == "ex") {
        push(Tok::Ex, word, l, co);
      } else if (word.size() == 1 && (word == "T" || word == "F" ||
                                      word == "B" || word == "N")) {
        Token t{Tok::ConstVal, word, *pbit_from_string(word), l, co};
        out.push_back(t);
      } else {
        push(Tok::Ident, word, l, co);
      }
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < s.size() && s[i + 1] == b;
    };
    if (two('-', '>')) { push(Tok::Arrow, "->", l, co); i += 2; col += 2; continue; }
    if (two('=', '>')) { push(Tok::StrongImp, "=>", l, co); i += 2; col += 2; continue; }
    if (two('!', '-')) { push(Tok::BangDash, "!-", l, co); i += 2; col += 2; continue; }
    if (two('?', '-')) { push(Tok::QuestionDash, "?-", l, co); i += 2; col += 2; continue; }
    if (c == '(' && i + 2 < s.size() && s[i + 2] == ')' &&
        (s[i + 1] == '*' || s[i + 1] == '+')) {
      push(s[i + 1] == '*' ? Tok::TensorOp : Tok::ParOp,
           s[i + 1] == '*' ? "(*)" : "(+)", l, co);
      i += 3;
      col += 3;
      continue;
    }
    switch (c) {
      case '|': push(Tok::Pipe, "|", l, co); break;
      case '&': push(Tok::Amp, "&", l, co); break;
      case '~': push(Tok::Tilde, "~", l, co); break;
      case '%': push(Tok::Percent, "%", l, co); break;
      case '!': push(Tok::Bang, "!", l, co); break;
      case '?': push(Tok::Question, "?", l, co); break;
      case '(': push(Tok::LParen, "(", l, co); break;
      case ')': push(Tok::RParen, ")", l, co); break;
      case '.': push(Tok::Dot, ".", l, co); break;
      case '<': push(Tok::Lt, "<", l, co); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l, co);
    }
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", PBit::N, line, col});
  return out;
}

// ---- parser ---------------------------------------------------------------

class Parser {
 public:
  Parser(std::string_view text, const std::set<std::string>* declared_free)
      : toks_(lex(text)), declared_free_(declared_free) {}

  ExprPtr run() {
    ExprPtr e = parse_imp();
    if (peek().kind != Tok::End)
      fail("expected operator or end of input, found " +
           std::string(tok_name(peek().kind)));
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().col);
  }

  bool bound(const std::string& name) const {
    return std::find(scope_.rbegin(), scope_.rend(), name) != scope_.rend();
  }

  void check_term(const std::string& name) const {
    if (bound(name)) return;
    if (declared_free_ && !declared_free_->count(name))
      fail("unbound term '" + name + "'");
  }

  ExprPtr parse_imp() {
    ExprPtr l = parse_or();
    if (peek().kind == Tok::Arrow || peek().kind == Tok::StrongImp) {
      BinaryOp op = take().kind == Tok::Arrow ? BinaryOp::Arrow : BinaryOp::StrongImp;
      return bin(op, std::move(l), parse_imp());  // right-associative
    }
    return l;
  }

  ExprPtr parse_or() {
    ExprPtr l = parse_and();
    while (peek().kind == Tok::Pipe || peek().kind == Tok::ParOp) {
      BinaryOp op = take().kind == Tok::Pipe ? BinaryOp::Join : BinaryOp::Par;
      l = bin(op, std::move(l), parse_and());
    }
    return l;
  }

  ExprPtr parse_and() {
    ExprPtr l = parse_unary();
    while (peek().kind == Tok::Amp || peek().kind == Tok::TensorOp) {
      BinaryOp op = take().kind == Tok::Amp ? BinaryOp::Meet : BinaryOp::Tensor;
      l = bin(op, std::move(l), parse_unary());
    }
    return l;
  }

  ExprPtr parse_unary() {
    switch (peek().kind) {
      case Tok::Tilde: take(); return un(UnaryOp::Neg, parse_unary());
      case Tok::Percent: take(); return un(UnaryOp::Demi, parse_unary());
      case Tok::Bang: take(); return un(UnaryOp::Bang, parse_unary());
      case Tok::Question: take(); return un(UnaryOp::Gamma, parse_unary());
      case Tok::BangDash: take(); return un(UnaryOp::WeakBang, parse_unary());
      case Tok::QuestionDash: take(); return un(UnaryOp::WeakGamma, parse_unary());
      default: return parse_primary();
    }
  }

  ExprPtr parse_quant(bool is_forall) {
    if (peek().kind != Tok::Ident)
      fail(std::string("expected identifier after ") + (is_forall ? "'all'" : "'ex'"));
    std::string var = take().text;
    if (peek().kind != Tok::Dot) fail("expected '.' after binder variable");
    take();
    scope_.push_back(var);
    ExprPtr body = parse_imp();  // maximal scope
    scope_.pop_back();
    return is_forall ? forall(std::move(var), std::move(body))
                     : exists(std::move(var), std::move(body));
  }

  ExprPtr parse_primary() {
    switch (peek().kind) {
      case Tok::All: take(); return parse_quant(true);
      case Tok::Ex: take(); return parse_quant(false);
      case Tok::ConstVal: return lit(take().value);
      case Tok::LParen: {
        take();
        ExprPtr e = parse_imp();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        take();
        return e;
      }
      case Tok::Ident: {
        std::string name = take().text;
        if (peek().kind == Tok::LParen) {
          if (bound(name))
            fail("variable '" + name + "' used as a predicate");
          take();
          if (peek().kind != Tok::Ident)
            fail("expected term inside '" + name + "(...)'");
          std::string term = take().text;
          check_term(term);
          if (peek().kind != Tok::RParen) fail("expected ')'");
          take();
          return pred(std::move(name), std::move(term));
        }
        if (peek().kind == Tok::Lt) {
          take();
          if (peek().kind != Tok::Ident) fail("expected term after '<'");
          std::string rhs = take().text;
          check_term(name);
          check_term(rhs);
          return less(std::move(name), std::move(rhs));
        }
        if (bound(name))
          fail("variable '" + name + "' used as a proposition");
        return atom(std::move(name));
      }
      default:
        fail("expected expression, found " + std::string(tok_name(peek().kind)));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
  const std::set<std::string>* declared_free_;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text, nullptr).run(); }
ExprPtr parse(std::string_view text, const std::set<std::string>& declared_free) {
  return Parser(text, &declared_free).run();
}

// ---- printer --------------------------------------------------------------

namespace {

// Precedence for printing: binder 0, -> => 1, | (+) 2, & (*) 3, prefix 4,
// leaf 5.
int level_of(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Quant>) return 0;
        else if constexpr (std::is_same_v<T, Expr::Binary>) {
          switch (n.op) {
            case BinaryOp::Arrow:
            case BinaryOp::StrongImp: return 1;
            case BinaryOp::Join:
            case BinaryOp::Par: return 2;
            default: return 3;
          }
        } else if constexpr (std::is_same_v<T, Expr::Unary>) return 4;
        else return 5;
      },
      e.node);
}

const char* op_str(BinaryOp op) {
  switch (op) {
    case BinaryOp::Meet: return "&";
    case BinaryOp::Join: return "|";
    case BinaryOp::Arrow: return "->";
    case BinaryOp::StrongImp: return "=>";
    case BinaryOp::Tensor: return "(*)";
    case BinaryOp::Par: return "(+)";
  }
  return "?";
}

const char* op_str(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg: return "~";
    case UnaryOp::Demi: return "%";
    case UnaryOp::Bang: return "!";
    case UnaryOp::Gamma: return "?";
    case UnaryOp::WeakBang: return "!-";
    case UnaryOp::WeakGamma: return "?-";
  }
  return "?";
}

void print(const Expr& e, int min_level, std::string& out) {
  bool wrap = level_of(e) < min_level;
  if (wrap) out += "(";
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Atom>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, Expr::Const>) {
          out += to_char(n.value);
        } else if constexpr (std::is_same_v<T, Expr::Pred>) {
          out += n.name;
          out += "(";
          out += n.term;
          out += ")";
        } else if constexpr (std::is_same_v<T, Expr::Less>) {
          out += n.lhs;
          out += " < ";
          out += n.rhs;
        } else if constexpr (std::is_same_v<T, Expr::Unary>) {
          out += op_str(n.op);
          print(*n.arg, 4, out);
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          int lvl = level_of(e);
          bool right_assoc = lvl == 1;
          print(*n.lhs, right_assoc ? lvl + 1 : lvl, out);
          out += " ";
          out += op_str(n.op);
          out += " ";
          print(*n.rhs, right_assoc ? lvl : lvl + 1, out);
        } else {
          out += n.forall ? "all " : "ex ";
          out += n.var;
          out += ". ";
          print(*n.body, 0, out);
        }
      },
      e.node);
  if (wrap) out += ")";
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print(e, 0, out);
  return out;
}

// ---- evaluation -----------------------------------------------------------

namespace {

struct Env {
  // Active binder assignments, innermost last.
  std::vector<std::pair<std::string, std::string>> vars;
  const std::string* find(const std::string& name) const {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }
};

PBit eval_node(const Expr& e, const Valuation& v, Env& env);

// Resolves a term to an individual, or to nullopt under open-world when the
// name is unknown.
std::optional<std::string> resolve(const std::string& term, const Valuation& v,
                                   const Env& env) {
  if (const std::string* bound = env.find(term)) return *bound;
  if (std::find(v.domain.begin(), v.domain.end(), term) != v.domain.end())
    return term;
  if (v.open_world) return std::nullopt;
  throw EvalError("unknown individual '" + term + "'");
}

PBit eval_node(const Expr& e, const Valuation& v, Env& env) {
  return std::visit(
      [&](const auto& n) -> PBit {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Atom>) {
          auto it = v.atoms.find(n.name);
          if (it != v.atoms.end()) return it->second;
          if (v.open_world) return PBit::N;
          throw EvalError("no value for atom '" + n.name + "'");
        } else if constexpr (std::is_same_v<T, Expr::Const>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, Expr::Pred>) {
          auto ind = resolve(n.term, v, env);
          if (!ind) return PBit::N;
          auto it = v.preds.find({n.name, *ind});
          if (it != v.preds.end()) return it->second;
          if (v.open_world) return PBit::N;
          throw EvalError("no value for " + n.name + "(" + *ind + ")");
        } else if constexpr (std::is_same_v<T, Expr::Less>) {
          auto a = resolve(n.lhs, v, env);
          auto b = resolve(n.rhs, v, env);
          if (!a || !b) return PBit::N;
          auto it = v.less.find({*a, *b});
          if (it != v.less.end()) return it->second;
          if (v.open_world) return PBit::N;
          throw EvalError("no value for " + *a + " < " + *b);
        } else if constexpr (std::is_same_v<T, Expr::Unary>) {
          return apply(n.op, eval_node(*n.arg, v, env));
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          return apply(n.op, eval_node(*n.lhs, v, env),
                       eval_node(*n.rhs, v, env));
        } else {
          PBit acc = n.forall ? PBit::T : PBit::F;
          env.vars.emplace_back(n.var, "");
          for (const std::string& d : v.domain) {
            env.vars.back().second = d;
            PBit x = eval_node(*n.body, v, env);
            acc = n.forall ? meet(acc, x) : join(acc, x);
          }
          env.vars.pop_back();
          return acc;
        }
      },
      e.node);
}

}  // namespace

PBit evaluate(const Expr& e, const Valuation& v) {
  Env env;
  return eval_node(e, v, env);
}

// ---- derivability ---------------------------------------------------------

namespace {

void collect_atoms(const Expr& e, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Atom>) {
          out.push_back(n.name);
        } else if constexpr (std::is_same_v<T, Expr::Const>) {
        } else if constexpr (std::is_same_v<T, Expr::Pred>) {
          throw ValidationError("expression is not propositional: predicate '" +
                                n.name + "'");
        } else if constexpr (std::is_same_v<T, Expr::Less>) {
          throw ValidationError("expression is not propositional: order atom");
        } else if constexpr (std::is_same_v<T, Expr::Unary>) {
          collect_atoms(*n.arg, out);
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          collect_atoms(*n.lhs, out);
          collect_atoms(*n.rhs, out);
        } else {
          throw ValidationError("expression is not propositional: binder '" +
                                n.var + "'");
        }
      },
      e.node);
}

// Flattened expression with atom references resolved to indices; avoids map
// lookups in the 4^k assignment sweep.
struct Compiled {
  // kind 0: atom, 1: const, 2: unary, 3: binary
  struct Node {
    int kind;
    int a = 0, b = 0;
    UnaryOp uop = UnaryOp::Neg;
    BinaryOp bop = BinaryOp::Meet;
    PBit c = PBit::N;
  };
  std::vector<Node> nodes;
  int root = 0;

  int build(const Expr& e, const std::vector<std::string>& names) {
    int id = std::visit(
        [&](const auto& n) -> int {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Expr::Atom>) {
            int ix = static_cast<int>(
                std::lower_bound(names.begin(), names.end(), n.name) -
                names.begin());
            nodes.push_back({0, ix});
            return static_cast<int>(nodes.size()) - 1;
          } else if constexpr (std::is_same_v<T, Expr::Const>) {
            nodes.push_back({1});
            nodes.back().c = n.value;
            return static_cast<int>(nodes.size()) - 1;
          } else if constexpr (std::is_same_v<T, Expr::Unary>) {
            int a = build(*n.arg, names);
            nodes.push_back({2, a});
            nodes.back().uop = n.op;
            return static_cast<int>(nodes.size()) - 1;
          } else if constexpr (std::is_same_v<T, Expr::Binary>) {
            int a = build(*n.lhs, names);
            int b = build(*n.rhs, names);
            nodes.push_back({3, a, b});
            nodes.back().bop = n.op;
            return static_cast<int>(nodes.size()) - 1;
          } else {
            throw ValidationError("not propositional");
          }
        },
        e.node);
    return id;
  }

  PBit eval(int id, const std::vector<PBit>& assign) const {
    const Node& n = nodes[id];
    switch (n.kind) {
      case 0: return assign[n.a];
      case 1: return n.c;
      case 2: return apply(n.uop, eval(n.a, assign));
      default: return apply(n.bop, eval(n.a, assign), eval(n.b, assign));
    }
  }
};

}  // namespace

std::vector<std::string> free_atoms(const Expr& e) {
  std::vector<std::string> out;
  collect_atoms(e, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DerivabilityResult is_derivable(const Expr& e) {
  std::vector<std::string> names = free_atoms(e);
  const int k = static_cast<int>(names.size());
  if (k > kMaxDerivabilityAtoms)
    throw CapacityError("expression has " + std::to_string(k) +
                        " atoms; derivability supports at most " +
                        std::to_string(kMaxDerivabilityAtoms));
  Compiled comp;
  comp.root = comp.build(e, names);

  // Base-4 odometer, last atom fastest; the first failing assignment is the
  // witness.
  std::vector<PBit> assign(k, PBit::N);
  std::vector<int> code(k, 0);
  std::size_t total = std::size_t{1} << (2 * k);  // 4^k
  for (std::size_t it = 0; it < total; ++it) {
    for (int i = 0; i < k; ++i) assign[i] = static_cast<PBit>(code[i]);
    if (!is_designated(comp.eval(comp.root, assign))) {
      DerivabilityResult r;
      r.derivable = false;
      for (int i = 0; i < k; ++i) r.witness.emplace_back(names[i], assign[i]);
      return r;
    }
    for (int i = k - 1; i >= 0; --i) {
      if (++code[i] < 4) break;
      code[i] = 0;
    }
  }
  return {true, {}};
}

}  // namespace paralog::cdlang
