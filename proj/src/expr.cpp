#include "hnc/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>

namespace hnc {

namespace {

enum class Tok { Number, Name, Deriv, Plus, Minus, Star, Slash, Caret, LParen, RParen, Dot, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, pos, line, col);
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (true) {
      while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
      if (i >= text_.size()) {
        out.push_back({Tok::End, "", i});
        return out;
      }
      char c = text_[i];
      std::size_t start = i;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
        out.push_back({Tok::Number, std::string(text_.substr(start, i - start)), start});
        continue;
      }
      if (c == 'd' && text_.substr(i, 3) == "d/d" && i + 3 < text_.size() && name_start(text_[i + 3])) {
        i += 3;
        std::size_t ns = i;
        while (i < text_.size() && name_char(text_[i])) ++i;
        out.push_back({Tok::Deriv, std::string(text_.substr(ns, i - ns)), start});
        continue;
      }
      if (name_start(c)) {
        while (i < text_.size() && name_char(text_[i])) ++i;
        out.push_back({Tok::Name, std::string(text_.substr(start, i - start)), start});
        continue;
      }
      Tok k;
      switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '.': k = Tok::Dot; break;
        default: fail(std::string("unexpected character '") + c + "'", i);
      }
      out.push_back({k, std::string(1, c), start});
      ++i;
    }
  }

 private:
  std::string_view text_;
};

enum class Kind { Number, Name, Deriv, Add, Sub, Mul, Div, Neg, Pow, Compose };

struct Node {
  Kind kind;
  std::size_t pos = 0;
  Rational value;     // Number
  std::string name;   // Name / Deriv
  unsigned exponent = 0;  // Pow
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Kind k, std::size_t pos, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->pos = pos;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text), toks_(lexer_.run()) {}

  NodePtr parse() {
    auto n = sum();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek().pos);
    return n;
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t pos) const { lexer_.fail(msg, pos); }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }

  NodePtr sum() {
    auto lhs = product();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      auto rhs = product();
      lhs = make(op.kind == Tok::Plus ? Kind::Add : Kind::Sub, op.pos, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  NodePtr product() {
    auto lhs = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = next();
      auto rhs = unary();
      lhs = make(op.kind == Tok::Star ? Kind::Mul : Kind::Div, op.pos, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  NodePtr unary() {
    if (peek().kind == Tok::Minus) {
      std::size_t pos = next().pos;
      return make(Kind::Neg, pos, unary());
    }
    if (accept(Tok::Plus)) return unary();
    return compose();
  }

  NodePtr compose() {
    auto lhs = power();
    while (peek().kind == Tok::Dot) {
      std::size_t pos = next().pos;
      auto rhs = power();
      lhs = make(Kind::Compose, pos, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  NodePtr power() {
    auto base = primary();
    if (peek().kind == Tok::Caret) {
      std::size_t pos = next().pos;
      auto n = make(Kind::Pow, pos, std::move(base));
      n->exponent = exponent();
      return n;
    }
    return base;
  }

  unsigned exponent() {
    const Token& t = peek();
    if (t.kind == Tok::Minus) fail("negative exponent", t.pos);
    Rational e;
    if (t.kind == Tok::Number) {
      next();
      e = Rational(Integer(t.text, 10));
    } else if (t.kind == Tok::LParen) {
      next();
      auto inner = sum();
      if (!accept(Tok::RParen)) fail("expected ')'", peek().pos);
      e = constant_value(*inner);
    } else {
      fail("expected an exponent", t.pos);
    }
    if (sgn(e) < 0) fail("negative exponent", t.pos);
    if (e.get_den() != 1) fail("fractional exponent", t.pos);
    if (e > 4096) fail("exponent too large", t.pos);
    return static_cast<unsigned>(e.get_num().get_ui());
  }

  Rational constant_value(const Node& n) {
    switch (n.kind) {
      case Kind::Number: return n.value;
      case Kind::Neg: return -constant_value(*n.lhs);
      case Kind::Add: return constant_value(*n.lhs) + constant_value(*n.rhs);
      case Kind::Sub: return constant_value(*n.lhs) - constant_value(*n.rhs);
      case Kind::Mul: return constant_value(*n.lhs) * constant_value(*n.rhs);
      case Kind::Div: {
        Rational d = constant_value(*n.rhs);
        if (is_zero(d)) fail("division by zero", n.pos);
        return constant_value(*n.lhs) / d;
      }
      default: fail("exponent must be a constant", n.pos);
    }
  }

  NodePtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        auto n = make(Kind::Number, t.pos);
        n->value = Rational(Integer(t.text, 10));
        return n;
      }
      case Tok::Name: {
        next();
        auto n = make(Kind::Name, t.pos);
        n->name = t.text;
        return n;
      }
      case Tok::Deriv: {
        next();
        auto n = make(Kind::Deriv, t.pos);
        n->name = t.text;
        return n;
      }
      case Tok::LParen: {
        next();
        auto n = sum();
        if (!accept(Tok::RParen)) fail("expected ')'", peek().pos);
        return n;
      }
      case Tok::End: fail("unexpected end of input", t.pos);
      default: fail("unexpected '" + t.text + "'", t.pos);
    }
  }

  Lexer lexer_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

std::optional<std::size_t> index_of(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

// --- polynomial evaluation -------------------------------------------------

class PolyEval {
 public:
  PolyEval(const Parser& parser, const std::vector<std::string>& vars) : parser_(parser), vars_(vars) {}

  Polynomial eval(const Node& n) const {
    const std::size_t nv = vars_.size();
    switch (n.kind) {
      case Kind::Number: return Polynomial::constant(nv, n.value);
      case Kind::Name: {
        auto idx = index_of(vars_, n.name);
        if (!idx) parser_.fail("unknown variable '" + n.name + "'", n.pos);
        return Polynomial::variable(nv, *idx);
      }
      case Kind::Deriv: parser_.fail("derivative not allowed in a polynomial", n.pos);
      case Kind::Compose: parser_.fail("'.' composition not allowed in a polynomial", n.pos);
      case Kind::Neg: return -eval(*n.lhs);
      case Kind::Add: return eval(*n.lhs) + eval(*n.rhs);
      case Kind::Sub: return eval(*n.lhs) - eval(*n.rhs);
      case Kind::Mul: return eval(*n.lhs) * eval(*n.rhs);
      case Kind::Div: {
        Polynomial d = eval(*n.rhs);
        if (!d.is_constant() || d.is_zero()) parser_.fail("division only by nonzero constants", n.pos);
        return eval(*n.lhs) * (Rational(1) / d.constant_term());
      }
      case Kind::Pow: return eval(*n.lhs).pow(n.exponent);
    }
    parser_.fail("internal parser error", n.pos);
  }

 private:
  const Parser& parser_;
  const std::vector<std::string>& vars_;
};

// --- vector field evaluation -----------------------------------------------

struct FieldValue {
  Polynomial scalar;
  std::optional<PolyVectorField> field;
};

class FieldEval {
 public:
  FieldEval(const Parser& parser, const std::vector<std::string>& vars) : parser_(parser), vars_(vars), poly_(parser, vars) {}

  FieldValue eval(const Node& n) const {
    const std::size_t nv = vars_.size();
    switch (n.kind) {
      case Kind::Deriv: {
        auto idx = index_of(vars_, n.name);
        if (!idx) parser_.fail("derivative with respect to undeclared variable '" + n.name + "'", n.pos);
        PolyVectorField x(nv);
        x[*idx] = Polynomial::constant(nv, 1);
        return {Polynomial(nv), std::move(x)};
      }
      case Kind::Neg: {
        auto v = eval(*n.lhs);
        v.scalar = -v.scalar;
        if (v.field) *v.field = Polynomial::constant(nv, -1) * *v.field;
        return v;
      }
      case Kind::Add:
      case Kind::Sub: {
        auto a = eval(*n.lhs);
        auto b = eval(*n.rhs);
        if (n.kind == Kind::Sub) {
          b.scalar = -b.scalar;
          if (b.field) *b.field = Polynomial::constant(nv, -1) * *b.field;
        }
        if (a.field.has_value() != b.field.has_value()) {
          const FieldValue& s = a.field ? b : a;
          if (!s.scalar.is_zero()) parser_.fail("cannot add a function and a vector field", n.pos);
          return a.field ? a : b;
        }
        if (!a.field) return {a.scalar + b.scalar, std::nullopt};
        return {Polynomial(nv), *a.field + *b.field};
      }
      case Kind::Mul: {
        auto a = eval(*n.lhs);
        auto b = eval(*n.rhs);
        if (a.field && b.field) parser_.fail("product of two vector fields", n.pos);
        if (a.field) parser_.fail("coefficient must precede d/d", n.pos);
        if (b.field) return {Polynomial(nv), a.scalar * *b.field};
        return {a.scalar * b.scalar, std::nullopt};
      }
      case Kind::Div: {
        auto a = eval(*n.lhs);
        Polynomial d = poly_.eval(*n.rhs);
        if (!d.is_constant() || d.is_zero()) parser_.fail("division only by nonzero constants", n.pos);
        Rational inv = Rational(1) / d.constant_term();
        a.scalar *= inv;
        if (a.field) *a.field = Polynomial::constant(nv, inv) * *a.field;
        return a;
      }
      case Kind::Compose: parser_.fail("'.' composition not allowed in a vector field", n.pos);
      default: return {poly_.eval(n), std::nullopt};
    }
  }

 private:
  const Parser& parser_;
  const std::vector<std::string>& vars_;
  PolyEval poly_;
};

// --- operator evaluation ---------------------------------------------------

using Word = std::vector<std::size_t>;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using OpValue = std::map<Word, Polynomial, WordLess>;

class OperatorEval {
 public:
  OperatorEval(const Parser& parser, const std::vector<std::string>& gens, const std::vector<std::string>& vars)
      : parser_(parser), gens_(gens), vars_(vars) {}

  OpValue eval(const Node& n) const {
    const std::size_t nv = vars_.size();
    switch (n.kind) {
      case Kind::Number: return scalar(Polynomial::constant(nv, n.value));
      case Kind::Name: {
        if (auto g = index_of(gens_, n.name)) {
          OpValue v;
          v.emplace(Word{*g}, Polynomial::constant(nv, 1));
          return v;
        }
        if (auto x = index_of(vars_, n.name)) return scalar(Polynomial::variable(nv, *x));
        parser_.fail("unknown generator '" + n.name + "'", n.pos);
      }
      case Kind::Deriv: parser_.fail("use generator names, not d/d, in operators", n.pos);
      case Kind::Neg: return scale(eval(*n.lhs), Polynomial::constant(nv, -1));
      case Kind::Add: return add(eval(*n.lhs), eval(*n.rhs), 1);
      case Kind::Sub: return add(eval(*n.lhs), eval(*n.rhs), -1);
      case Kind::Mul: {
        auto a = eval(*n.lhs);
        auto b = eval(*n.rhs);
        if (is_scalar(a)) return scale(b, scalar_part(a));
        if (is_scalar(b)) {
          Polynomial c = scalar_part(b);
          if (!c.is_constant()) parser_.fail("coefficient must precede the generator word", n.pos);
          return scale(a, c);
        }
        parser_.fail("use '.' to compose generator words", n.pos);
      }
      case Kind::Div: {
        auto b = eval(*n.rhs);
        if (!is_scalar(b) || !scalar_part(b).is_constant() || scalar_part(b).is_zero()) {
          parser_.fail("division only by nonzero constants", n.pos);
        }
        return scale(eval(*n.lhs), Polynomial::constant(nv, Rational(1) / scalar_part(b).constant_term()));
      }
      case Kind::Compose: return compose(eval(*n.lhs), eval(*n.rhs), n.pos);
      case Kind::Pow: {
        auto base = eval(*n.lhs);
        OpValue acc = scalar(Polynomial::constant(nv, 1));
        for (unsigned k = 0; k < n.exponent; ++k) {
          acc = is_scalar(base) ? scale(acc, scalar_part(base)) : compose(acc, base, n.pos);
        }
        return acc;
      }
    }
    parser_.fail("internal parser error", n.pos);
  }

 private:
  OpValue scalar(Polynomial p) const {
    OpValue v;
    if (!p.is_zero()) v.emplace(Word{}, std::move(p));
    return v;
  }
  static bool is_scalar(const OpValue& v) { return v.empty() || (v.size() == 1 && v.begin()->first.empty()); }
  Polynomial scalar_part(const OpValue& v) const {
    auto it = v.find(Word{});
    return it == v.end() ? Polynomial(vars_.size()) : it->second;
  }
  static OpValue scale(OpValue v, const Polynomial& f) {
    OpValue out;
    for (auto& [w, c] : v) {
      Polynomial p = f * c;
      if (!p.is_zero()) out.emplace(w, std::move(p));
    }
    return out;
  }
  static OpValue add(OpValue a, const OpValue& b, int sign) {
    for (const auto& [w, c] : b) {
      auto [it, inserted] = a.try_emplace(w, c.nvars());
      if (sign > 0) {
        it->second += c;
      } else {
        it->second -= c;
      }
      if (it->second.is_zero()) a.erase(it);
    }
    return a;
  }
  OpValue compose(const OpValue& a, const OpValue& b, std::size_t pos) const {
    OpValue out;
    for (const auto& [wb, cb] : b) {
      if (!cb.is_constant()) parser_.fail("right operand of '.' must have constant coefficients", pos);
    }
    for (const auto& [wa, ca] : a) {
      for (const auto& [wb, cb] : b) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        auto [it, inserted] = out.try_emplace(w, ca.nvars());
        it->second += ca * cb;
        if (it->second.is_zero()) out.erase(it);
      }
    }
    return out;
  }

  const Parser& parser_;
  const std::vector<std::string>& gens_;
  const std::vector<std::string>& vars_;
};

// --- printing --------------------------------------------------------------

std::string monomial_string(const Exponent& e, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

/// Wraps p in parentheses unless it is a single term; returns "" for 1 and "-" for -1.
std::string coefficient_prefix(const Polynomial& p, const std::vector<std::string>& vars) {
  if (p == Polynomial::constant(p.nvars(), 1)) return "";
  if (p == Polynomial::constant(p.nvars(), -1)) return "-";
  if (p.term_count() == 1) return to_string(p, vars) + "*";
  return "(" + to_string(p, vars) + ")*";
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string s = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!terms[i].empty() && terms[i].front() == '-') {
      s += " - " + terms[i].substr(1);
    } else {
      s += " + " + terms[i];
    }
  }
  return s;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  Parser parser(text);
  auto ast = parser.parse();
  return PolyEval(parser, vars).eval(*ast);
}

PolyVectorField parse_vector_field(std::string_view text, const std::vector<std::string>& vars) {
  Parser parser(text);
  auto ast = parser.parse();
  auto v = FieldEval(parser, vars).eval(*ast);
  if (!v.field) {
    if (v.scalar.is_zero()) return PolyVectorField(vars.size());
    parser.fail("expected a vector field (terms of the form <poly>*d/d<var>)", ast->pos);
  }
  return *v.field;
}

std::vector<OperatorWord> parse_operator(std::string_view text, const std::vector<std::string>& generators,
                                         const std::vector<std::string>& vars) {
  for (const auto& g : generators) {
    if (index_of(vars, g)) throw std::invalid_argument("generator name '" + g + "' clashes with a variable");
  }
  Parser parser(text);
  auto ast = parser.parse();
  auto value = OperatorEval(parser, generators, vars).eval(*ast);
  std::vector<OperatorWord> out;
  for (auto& [w, c] : value) out.push_back({std::move(c), w});
  return out;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& vars) {
  if (vars.size() != p.nvars()) throw std::invalid_argument("to_string: variable names do not match ring");
  std::vector<std::string> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_string(e, vars);
    std::string t;
    if (mono.empty()) {
      t = c.get_str();
    } else if (c == 1) {
      t = mono;
    } else if (c == -1) {
      t = "-" + mono;
    } else {
      t = c.get_str() + "*" + mono;
    }
    terms.push_back(std::move(t));
  }
  return join_terms(terms);
}

std::string to_string(const PolyVectorField& x, const std::vector<std::string>& vars) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < x.nvars(); ++i) {
    if (x[i].is_zero()) continue;
    terms.push_back(coefficient_prefix(x[i], vars) + "d/d" + vars[i]);
  }
  return join_terms(terms);
}

std::string to_string(const std::vector<OperatorWord>& words, const std::vector<std::string>& generators,
                      const std::vector<std::string>& vars) {
  std::vector<std::string> terms;
  for (const auto& w : words) {
    if (w.coefficient.is_zero()) continue;
    if (w.letters.empty()) {
      std::string s = to_string(w.coefficient, vars);
      terms.push_back(w.coefficient.term_count() == 1 ? s : "(" + s + ")");
      continue;
    }
    std::string word;
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
      if (k) word += ".";
      word += generators.at(w.letters[k]);
    }
    terms.push_back(coefficient_prefix(w.coefficient, vars) + word);
  }
  return join_terms(terms);
}

std::vector<OperatorWord> canonicalize_words(const std::vector<OperatorWord>& words, std::size_t nvars) {
  OpValue acc;
  for (const auto& w : words) {
    auto [it, inserted] = acc.try_emplace(w.letters, nvars);
    it->second += w.coefficient;
    if (it->second.is_zero()) acc.erase(it);
  }
  std::vector<OperatorWord> out;
  for (auto& [w, c] : acc) out.push_back({std::move(c), w});
  return out;
}

std::vector<std::string> numbered_names(const std::string& stem, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace hnc
