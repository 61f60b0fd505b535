#include "qsuper/parse.hpp"

#include <cctype>
#include <unordered_map>

#include "qsuper/errors.hpp"

namespace qsuper {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<GenId>& gens) : text_(text) {
    for (GenId g : gens) gens_.emplace(generator_name(g), g);
  }

  SuperPolynomial run() {
    SuperPolynomial v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SuperPolynomial expr() {
    SuperPolynomial acc;
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    SuperPolynomial t = term();
    acc = neg ? -t : t;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  SuperPolynomial term() {
    SuperPolynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        SuperPolynomial d = unary();
        if (!d.is_scalar() || d.is_zero()) fail("division by a non-scalar or zero");
        acc = acc.right_scaled(d.constant().inverse());
      } else {
        break;
      }
    }
    return acc;
  }

  SuperPolynomial unary() {
    if (accept('-')) return -unary();
    return power();
  }

  SuperPolynomial power() {
    SuperPolynomial base = atom();
    if (!accept('^')) return base;
    bool neg = accept('-');
    skip_ws();
    long e = integer();
    if (neg) {
      if (!base.is_scalar() || base.is_zero()) fail("negative power of a non-scalar");
      return SuperPolynomial(base.constant().inverse().pow(static_cast<int>(e)));
    }
    return base.pow(static_cast<int>(e));
  }

  long integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  SuperPolynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SuperPolynomial v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpq_class v(std::string(text_.substr(start, pos_ - start)));
      return SuperPolynomial(GrassmannScalar(GaussRational(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      while (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '@') {
        ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (digits == pos_) fail("expected tensor factor index after '@'");
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (auto it = gens_.find(name); it != gens_.end()) return SuperPolynomial::generator(it->second);
      if (name == kImaginaryUnit) return SuperPolynomial(GrassmannScalar::imaginary_unit());
      if (auto info = find_param(name)) {
        if (info->parity == Parity::Even)
          return SuperPolynomial(GrassmannScalar(RationalFunction::param(info->index)));
        return SuperPolynomial(GrassmannScalar::odd_monomial(OddMask{1} << info->index));
      }
      throw UnknownSymbol("unknown symbol '" + name + "' in \"" + std::string(text_) + "\"");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, GenId> gens_;
};

}  // namespace

GrassmannScalar parse_scalar(std::string_view text) {
  SuperPolynomial v = Parser(text, {}).run();
  return v.constant();
}

SuperPolynomial parse_superpoly(std::string_view text, const std::vector<GenId>& generators) {
  return Parser(text, generators).run();
}

}  // namespace qsuper
