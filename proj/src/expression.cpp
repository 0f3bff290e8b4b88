#include "cliff/expression.hpp"

#include <cctype>
#include <string>

#include "cliff/algebra.hpp"
#include "cliff/error.hpp"
#include "cliff/text.hpp"

namespace cliff {
namespace {

constexpr std::string_view kTimes = "\xC3\x97";  // UTF-8 multiplication sign

class Evaluator {
 public:
  Evaluator(const Signature& sig, std::string_view s) : sig_(sig), s_(s) {}

  Multivector run() {
    Multivector v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at offset " + std::to_string(pos_) + " in \"" +
                                      std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  Multivector sum() {
    Multivector v = product();
    while (true) {
      if (accept("+"))
        v += product();
      else if (accept("-"))
        v -= product();
      else
        return v;
    }
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == 'i' ||
           c == '(' || c == '~';
  }

  Multivector product() {
    Multivector v = unary();
    while (true) {
      if (accept("*"))
        v = v * unary();
      else if (accept("^"))
        v = v ^ unary();
      else if (accept("|"))
        v = left_contraction(v, unary());
      else if (accept("%") || accept(kTimes))
        v = commutator_product(v, unary());
      else if (starts_primary())
        v = v * unary();
      else
        return v;
    }
  }

  Multivector unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    if (accept("~")) return reverse(unary());
    return postfix();
  }

  Multivector postfix() {
    Multivector v = primary();
    while (accept("[")) {
      Multivector w = sum();
      if (!accept("]")) fail("expected ']'");
      v = v * w * versor_inverse(v);
    }
    return v;
  }

  Multivector primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (accept("(")) {
      Multivector v = sum();
      if (!accept(")")) fail("expected ')'");
      return v;
    }
    if (accept("i")) return Multivector::scalar(sig_, Complex(0.0, 1.0));
    double x = 0.0;
    if (detail::lex_number(s_, pos_, x)) return Multivector::scalar(sig_, x);
    BladeMask mask = 0;
    int sign = 1;
    if (detail::lex_blade(sig_, s_, pos_, mask, sign))
      return Multivector::blade(sig_, mask, static_cast<double>(sign));
    fail("unexpected character");
  }

  const Signature& sig_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Multivector evaluate(const Signature& sig, std::string_view expr) { return Evaluator(sig, expr).run(); }

}  // namespace cliff
