#include "ncgeo/parser.hpp"

#include <cctype>
#include <string>

#include "ncgeo/errors.hpp"

namespace ncgeo {

namespace {

enum class Tok { Int, Decimal, IUnit, W, Gen, Plus, Minus, Star, Caret, LParen, RParen, Slash, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;
  std::string text;      // Int/Decimal digits
  char family = 0;       // 'U', 'g', 'S'
  int index = 0;         // generator index
  bool adjoint = false;  // S*  suffix
  bool inverse = false;  // '   suffix
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    cur_ = Token{};
    cur_.pos = i_;
    if (i_ >= src_.size()) {
      cur_.kind = Tok::End;
      return;
    }
    char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
      bool decimal = false;
      if (j < src_.size() && src_[j] == '.') {
        decimal = true;
        ++j;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
      }
      if (j < src_.size() && (src_[j] == 'e' || src_[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
        if (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) {
          decimal = true;
          while (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) ++k;
          j = k;
        }
      }
      cur_.kind = decimal ? Tok::Decimal : Tok::Int;
      cur_.text = std::string(src_.substr(i_, j - i_));
      i_ = j;
      return;
    }
    if (c == 'U' || c == 'g' || c == 'S') {
      std::size_t j = i_ + 1;
      if (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) {
        std::size_t k = j;
        while (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) ++k;
        cur_.kind = Tok::Gen;
        cur_.family = c;
        cur_.index = std::stoi(std::string(src_.substr(j, k - j)));
        if (c == 'S' && k < src_.size() && src_[k] == '*') {
          cur_.adjoint = true;
          ++k;
        } else if ((c == 'U' || c == 'g') && k < src_.size() && src_[k] == '\'') {
          cur_.inverse = true;
          ++k;
        }
        i_ = k;
        return;
      }
      fail(ErrorKind::ParseError,
           "parse error at position " + std::to_string(i_) + ": generator needs an index");
    }
    if (c == 'i') {
      cur_.kind = Tok::IUnit;
      ++i_;
      return;
    }
    if (c == 'w') {
      cur_.kind = Tok::W;
      ++i_;
      return;
    }
    switch (c) {
      case '+': cur_.kind = Tok::Plus; break;
      case '-': cur_.kind = Tok::Minus; break;
      case '*': cur_.kind = Tok::Star; break;
      case '^': cur_.kind = Tok::Caret; break;
      case '(': cur_.kind = Tok::LParen; break;
      case ')': cur_.kind = Tok::RParen; break;
      case '/': cur_.kind = Tok::Slash; break;
      default:
        fail(ErrorKind::ParseError, "parse error at position " + std::to_string(i_) +
                                        ": unexpected character '" + std::string(1, c) + "'");
    }
    ++i_;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  Token cur_;
};

class Parser {
 public:
  Parser(std::string_view src, PresentationPtr pres) : lex_(src), pres_(std::move(pres)) {}

  AlgebraElement parse() {
    AlgebraElement e = expr();
    if (lex_.peek().kind != Tok::End)
      fail(ErrorKind::ParseError,
           "parse error at position " + std::to_string(lex_.peek().pos) + ": trailing input");
    return e;
  }

 private:
  [[noreturn]] void err(const Token& t, const std::string& msg) {
    fail(ErrorKind::ParseError, "parse error at position " + std::to_string(t.pos) + ": " + msg);
  }

  bool starts_atom(Tok k) const {
    return k == Tok::Int || k == Tok::Decimal || k == Tok::IUnit || k == Tok::W || k == Tok::Gen ||
           k == Tok::LParen;
  }

  AlgebraElement expr() {
    bool neg = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      neg = true;
    } else if (lex_.peek().kind == Tok::Plus) {
      lex_.take();
    }
    AlgebraElement acc = term();
    if (neg) acc = -acc;
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      bool minus = lex_.take().kind == Tok::Minus;
      AlgebraElement t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  AlgebraElement term() {
    AlgebraElement acc = factor();
    for (;;) {
      if (lex_.peek().kind == Tok::Star) {
        lex_.take();
        acc = acc * factor();
      } else if (starts_atom(lex_.peek().kind)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  AlgebraElement factor() {
    AlgebraElement a = atom();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      long sign = 1;
      if (lex_.peek().kind == Tok::Minus) {
        lex_.take();
        sign = -1;
      }
      Token t = lex_.take();
      if (t.kind != Tok::Int) err(t, "expected integer exponent");
      a = a.pow(sign * std::stol(t.text));
    }
    return a;
  }

  Rat rational_literal() {
    long sign = 1;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      sign = -1;
    }
    Token t = lex_.take();
    if (t.kind != Tok::Int) err(t, "expected rational");
    Int num{t.text};
    Int den{1};
    if (lex_.peek().kind == Tok::Slash) {
      lex_.take();
      Token d = lex_.take();
      if (d.kind != Tok::Int) err(d, "expected denominator");
      den = Int{d.text};
      if (den == 0) err(d, "zero denominator");
    }
    return Rat(sign * num, den);
  }

  AlgebraElement atom() {
    const Token& p = lex_.peek();
    switch (p.kind) {
      case Tok::Int: {
        Token t = lex_.take();
        Int num{t.text};
        Int den{1};
        if (lex_.peek().kind == Tok::Slash) {
          lex_.take();
          Token d = lex_.take();
          if (d.kind != Tok::Int) err(d, "expected denominator");
          den = Int{d.text};
          if (den == 0) err(d, "zero denominator");
        }
        return AlgebraElement::from_rational(pres_, Rat(num, den));
      }
      case Tok::Decimal: {
        Token t = lex_.take();
        if (!pres_->float_mode()) err(t, "decimal literal requires float mode");
        return AlgebraElement::from_scalar(pres_,
                                           Scalar::from_complex({std::stod(t.text), 0.0}));
      }
      case Tok::IUnit: {
        lex_.take();
        Scalar i = pres_->float_mode() ? Scalar::from_complex({0.0, 1.0}) : Scalar::imaginary_unit();
        return AlgebraElement::from_scalar(pres_, i);
      }
      case Tok::W: {
        Token t = lex_.take();
        Token lp = lex_.take();
        if (lp.kind != Tok::LParen) err(t, "expected '(' after w");
        Rat r = rational_literal();
        Token rp = lex_.take();
        if (rp.kind != Tok::RParen) err(rp, "expected ')'");
        return AlgebraElement::from_scalar(pres_, pres_->phase(r));
      }
      case Tok::Gen: {
        Token t = lex_.take();
        char expect = pres_->backend() == Backend::NCTorus   ? 'U'
                      : pres_->backend() == Backend::FreeGroup ? 'g'
                                                               : 'S';
        if (t.family != expect)
          fail(ErrorKind::UnknownGenerator,
               std::string("generator '") + t.family + std::to_string(t.index) +
                   "' does not exist on the " + backend_name(pres_->backend()) + " backend");
        if (t.index < 1 || t.index > pres_->rank())
          fail(ErrorKind::UnknownGenerator,
               std::string("generator index out of range: ") + t.family + std::to_string(t.index));
        if (t.adjoint) return AlgebraElement::generator_star(pres_, t.index);
        if (t.inverse) return AlgebraElement::generator_pow(pres_, t.index, -1);
        return AlgebraElement::generator(pres_, t.index);
      }
      case Tok::LParen: {
        lex_.take();
        AlgebraElement e = expr();
        Token rp = lex_.take();
        if (rp.kind != Tok::RParen) err(rp, "expected ')'");
        return e;
      }
      default: err(p, "expected an expression");
    }
  }

  Lexer lex_;
  PresentationPtr pres_;
};

}  // namespace

AlgebraElement parse_expression(std::string_view src, const PresentationPtr& pres) {
  return Parser(src, pres).parse();
}

}  // namespace ncgeo
