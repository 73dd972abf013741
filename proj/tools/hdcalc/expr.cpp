#include "expr.hpp"

#include <cctype>

#include "hdiff/errors.hpp"
#include "hdiff/rmatrix.hpp"

namespace hdcalc {

using hdiff::SyntaxError;
using K = Node::Kind;

bool operator==(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.value != b.value || a.index != b.index || a.exponent != b.exponent ||
      a.shift != b.shift || a.name != b.name || a.kids.size() != b.kids.size())
    return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!same(a.kids[i], b.kids[i])) return false;
  return true;
}

bool same(const NodePtr& a, const NodePtr& b) {
  if (!a || !b) return a == b;
  return *a == *b;
}

NodePtr num(hdiff::Integer v) {
  auto n = std::make_shared<Node>();
  n->kind = K::Num;
  n->value = std::move(v);
  return n;
}

NodePtr var(K k, int index) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->index = index;
  return n;
}

NodePtr unary(K k, NodePtr a) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->kids = {std::move(a)};
  return n;
}

NodePtr binary(K k, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->kids = {std::move(a), std::move(b)};
  return n;
}

NodePtr power(NodePtr a, int e) {
  auto n = std::make_shared<Node>();
  n->kind = K::Pow;
  n->exponent = e;
  n->kids = {std::move(a)};
  return n;
}

NodePtr shifted(NodePtr a, std::vector<std::pair<int, int>> s) {
  auto n = std::make_shared<Node>();
  n->kind = K::Shift;
  n->shift = std::move(s);
  n->kids = {std::move(a)};
  return n;
}

NodePtr call(std::string name, int index, NodePtr arg) {
  auto n = std::make_shared<Node>();
  n->kind = K::Call;
  n->name = std::move(name);
  n->index = index;
  if (arg) n->kids = {std::move(arg)};
  return n;
}

namespace {

struct Token {
  enum Type { End, Int, Ident, Sym } type = End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= s_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.type = Token::Int;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) t.text += get();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        t.type = Token::Ident;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) t.text += get();
        // h_1, x_2, d_3
        if (t.text.size() == 1 && pos_ + 1 < s_.size() && s_[pos_] == '_' &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
          get();
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) t.text += get();
        }
      } else if (std::string("+-*/^()[],").find(c) != std::string::npos) {
        t.type = Token::Sym;
        t.text = std::string(1, get());
      } else {
        throw SyntaxError(std::string("unexpected character '") + c + "'", line_, col_);
      }
      out.push_back(t);
    }
  }

private:
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;

  char get() {
    const char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) get();
  }
};

class Parser {
public:
  explicit Parser(std::vector<Token> t) : t_(std::move(t)) {}

  NodePtr top() {
    NodePtr e = expr();
    if (peek().type != Token::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

private:
  std::vector<Token> t_;
  std::size_t p_ = 0;

  const Token& peek() const { return t_[p_]; }
  bool sym(const char* s) const { return peek().type == Token::Sym && peek().text == s; }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw SyntaxError(t.type == Token::End ? what + " (end of input)" : what, t.line, t.col);
  }
  void expect(const char* s) {
    if (!sym(s)) fail(std::string("expected '") + s + "'");
    ++p_;
  }
  int integer() {
    if (peek().type != Token::Int) fail("expected an integer");
    const std::string& s = t_[p_++].text;
    if (s.size() > 6) fail("integer too large");
    return std::stoi(s);
  }

  NodePtr expr() {
    NodePtr a = term();
    while (sym("+") || sym("-")) {
      const K k = peek().text == "+" ? K::Add : K::Sub;
      ++p_;
      a = binary(k, a, term());
    }
    return a;
  }

  NodePtr term() {
    NodePtr a = neg();
    while (sym("*") || sym("/")) {
      const K k = peek().text == "*" ? K::Mul : K::Div;
      ++p_;
      a = binary(k, a, neg());
    }
    return a;
  }

  NodePtr neg() {
    if (sym("-")) {
      ++p_;
      return unary(K::Neg, neg());
    }
    return pow();
  }

  NodePtr pow() {
    NodePtr a = postfix();
    if (!sym("^")) return a;
    ++p_;
    int sign = 1;
    if (sym("-")) {
      ++p_;
      sign = -1;
    }
    return power(a, sign * integer());
  }

  NodePtr postfix() {
    NodePtr a = atom();
    while (sym("[")) {
      ++p_;
      std::vector<std::pair<int, int>> s;
      int sign = 1;
      if (sym("-")) {
        ++p_;
        sign = -1;
      } else if (sym("+")) {
        ++p_;
      }
      while (true) {
        s.emplace_back(sign, eps());
        if (sym("+") || sym("-")) {
          sign = peek().text == "+" ? 1 : -1;
          ++p_;
          continue;
        }
        break;
      }
      expect("]");
      a = shifted(a, std::move(s));
    }
    return a;
  }

  int eps() {
    if (peek().type != Token::Ident || peek().text[0] != 'e') fail("expected e or e<j> in shift");
    const std::string s = t_[p_].text.substr(1);
    if (s.empty()) {
      ++p_;
      return 0;
    }
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("bad shift '" + t_[p_].text + "'");
    ++p_;
    const int j = std::stoi(s);
    if (j < 1) fail("shift index must be positive");
    return j;
  }

  NodePtr atom() {
    const Token& t = peek();
    if (t.type == Token::Int) {
      ++p_;
      return num(hdiff::Integer(t.text));
    }
    if (sym("(")) {
      ++p_;
      NodePtr e = expr();
      expect(")");
      return e;
    }
    if (t.type != Token::Ident) fail(t.type == Token::End ? "expected an operand" : "unexpected '" + t.text + "'");
    const std::string id = t.text;
    ++p_;
    if (sym("(")) return function(id);
    if (id.size() > 1 && (id[0] == 'h' || id[0] == 'x' || id[0] == 'd')) {
      const std::string digits = id.substr(1);
      bool ok = digits[0] != '0' && digits.size() < 4;
      for (char c : digits) ok = ok && std::isdigit(static_cast<unsigned char>(c));
      if (ok) {
        const K k = id[0] == 'h' ? K::H : id[0] == 'x' ? K::X : K::D;
        return var(k, std::stoi(digits));
      }
    }
    --p_;
    fail("unknown name '" + id + "'");
  }

  NodePtr function(const std::string& id) {
    expect("(");
    if (id != "H" && id != "e" && id != "chi" && id != "Delta") {
      --p_;
      --p_;
      fail("unknown function '" + id + "'");
    }
    const int k = integer();
    if ((id == "chi" || id == "Delta") && k < 1) {
      --p_;
      fail("index must be positive");
    }
    NodePtr arg;
    if (id == "Delta") {
      expect(",");
      arg = expr();
    }
    expect(")");
    return call(id, k, arg);
  }
};

int level(const Node& e) {
  switch (e.kind) {
    case K::Add:
    case K::Sub:
      return 1;
    case K::Mul:
    case K::Div:
      return 2;
    case K::Neg:
      return 3;
    case K::Pow:
      return 4;
    case K::Shift:
      return 5;
    default:
      return 6;
  }
}

std::string wrap(const NodePtr& e, int min) {
  std::string s = print(e);
  return level(*e) < min ? "(" + s + ")" : s;
}

void collect(const Node& e, int& m, bool& gens) {
  switch (e.kind) {
    case K::H:
      m = std::max(m, e.index);
      break;
    case K::X:
    case K::D:
      m = std::max(m, e.index);
      gens = true;
      break;
    case K::Shift:
      for (const auto& [s, j] : e.shift) m = std::max(m, j);
      break;
    case K::Call:
      if (e.name == "chi" || e.name == "Delta") m = std::max(m, e.index);
      break;
    default:
      break;
  }
  for (const auto& k : e.kids) collect(*k, m, gens);
}

using hdiff::DiffRing;
using hdiff::NormalElement;
using hdiff::RatFun;

RatFun scalar_of(const NormalElement& a, const char* what) {
  if (a.is_zero()) return RatFun();
  if (a.terms().size() != 1 || !a.terms().begin()->first.empty())
    throw hdiff::DomainError(std::string(what) + " needs an expression free of x and d");
  return a.terms().begin()->second;
}

void check_index(int i, int n) {
  if (i < 1 || i > n) throw hdiff::IndexError("index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
}

// Evaluation with either a ring (full elements) or a bare rank (scalars only).
struct Eval {
  const DiffRing* ring;
  int n;

  NormalElement mul(const NormalElement& a, const NormalElement& b) const {
    if (ring) return ring->multiply(a, b);
    return NormalElement(scalar_of(a, "product") * scalar_of(b, "product"));
  }

  NormalElement operator()(const Node& e) const {
    switch (e.kind) {
      case K::Num:
        return NormalElement(RatFun(hdiff::Rational(e.value)));
      case K::H:
        check_index(e.index, n);
        return NormalElement(RatFun::var(e.index - 1));
      case K::X:
      case K::D:
        check_index(e.index, n);
        if (!ring) throw hdiff::DomainError("generators are not allowed here");
        return e.kind == K::X ? ring->x(e.index - 1) : ring->d(e.index - 1);
      case K::Neg:
        return -(*this)(*e.kids[0]);
      case K::Add:
        return (*this)(*e.kids[0]) + (*this)(*e.kids[1]);
      case K::Sub:
        return (*this)(*e.kids[0]) - (*this)(*e.kids[1]);
      case K::Mul:
        return mul((*this)(*e.kids[0]), (*this)(*e.kids[1]));
      case K::Div: {
        const RatFun d = scalar_of((*this)(*e.kids[1]), "division");
        if (d.is_zero()) throw hdiff::DomainError("division by zero");
        return mul((*this)(*e.kids[0]), NormalElement(d.inverse()));
      }
      case K::Pow: {
        const NormalElement b = (*this)(*e.kids[0]);
        if (e.exponent < 0) {
          const RatFun f = scalar_of(b, "a negative power");
          if (f.is_zero()) throw hdiff::DomainError("division by zero");
          return NormalElement(f.inverse().pow(-e.exponent));
        }
        NormalElement r(RatFun(1));
        for (int k = 0; k < e.exponent; ++k) r = mul(r, b);
        return r;
      }
      case K::Shift: {
        hdiff::ShiftVector s(n);
        for (const auto& [sign, j] : e.shift) {
          if (j == 0) {
            s += hdiff::ShiftVector::all(n, sign);
          } else {
            check_index(j, n);
            s += hdiff::ShiftVector::unit(n, j - 1, sign);
          }
        }
        return NormalElement(scalar_of((*this)(*e.kids[0]), "a shift").shifted(s));
      }
      case K::Call:
        if (e.name == "H") return NormalElement(RatFun(hdiff::complete_symmetric(n, e.index)));
        if (e.name == "e") return NormalElement(RatFun(hdiff::elementary_symmetric(n, e.index)));
        check_index(e.index, n);
        if (e.name == "chi") return NormalElement(hdiff::chi(n, e.index - 1));
        return NormalElement(scalar_of((*this)(*e.kids[0]), "Delta").delta(e.index - 1));
    }
    return {};
  }
};

}  // namespace

NodePtr parse(const std::string& text) { return Parser(Lexer(text).run()).top(); }

std::string print(const NodePtr& e) {
  switch (e->kind) {
    case K::Num:
      return e->value.get_str();
    case K::H:
      return "h" + std::to_string(e->index);
    case K::X:
      return "x" + std::to_string(e->index);
    case K::D:
      return "d" + std::to_string(e->index);
    case K::Neg:
      return "-" + wrap(e->kids[0], 3);
    case K::Add:
      return wrap(e->kids[0], 1) + " + " + wrap(e->kids[1], 2);
    case K::Sub:
      return wrap(e->kids[0], 1) + " - " + wrap(e->kids[1], 2);
    case K::Mul:
      return wrap(e->kids[0], 2) + "*" + wrap(e->kids[1], 3);
    case K::Div:
      return wrap(e->kids[0], 2) + "/" + wrap(e->kids[1], 3);
    case K::Pow:
      return wrap(e->kids[0], 5) + "^" + std::to_string(e->exponent);
    case K::Shift: {
      std::string s = wrap(e->kids[0], 5) + "[";
      for (std::size_t k = 0; k < e->shift.size(); ++k) {
        const auto [sign, j] = e->shift[k];
        if (sign < 0) s += "-";
        else if (k > 0) s += "+";
        s += "e" + (j > 0 ? std::to_string(j) : std::string());
      }
      return s + "]";
    }
    case K::Call:
      if (e->name == "Delta") return "Delta(" + std::to_string(e->index) + ", " + print(e->kids[0]) + ")";
      return e->name + "(" + std::to_string(e->index) + ")";
  }
  return {};
}

int max_index(const NodePtr& e) {
  int m = 0;
  bool g = false;
  collect(*e, m, g);
  return m;
}

bool has_generators(const NodePtr& e) {
  int m = 0;
  bool g = false;
  collect(*e, m, g);
  return g;
}

hdiff::NormalElement evaluate(const NodePtr& e, const DiffRing& ring) { return Eval{&ring, ring.n()}(*e); }

RatFun evaluate_scalar(const NodePtr& e, int n) { return scalar_of(Eval{nullptr, n}(*e), "this input"); }

}  // namespace hdcalc
