#include "cliff/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include "cliff/error.hpp"

namespace cliff {
namespace {

[[noreturn]] void parse_error(std::string_view text, std::size_t pos, const std::string& msg) {
  throw Error(ErrorKind::Parse, "parse error at offset " + std::to_string(pos) + " in \"" +
                                    std::string(text) + "\": " + msg);
}

void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

std::vector<BladeMask> canonical_order(const Signature& sig) {
  std::vector<BladeMask> order(sig.blade_count());
  for (BladeMask m = 0; m < order.size(); ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(), [](BladeMask a, BladeMask b) {
    const int ga = grade_of(a), gb = grade_of(b);
    if (ga != gb) return ga < gb;
    // lexicographic on ascending bit lists
    const BladeMask diff = a ^ b;
    const BladeMask low = diff & (~diff + 1);
    return (a & low) != 0;
  });
  return order;
}

// Parses "(re±im i)" starting at '('.
bool lex_complex(std::string_view s, std::size_t& pos, Complex& out) {
  std::size_t p = pos;
  if (p >= s.size() || s[p] != '(') return false;
  ++p;
  skip_ws(s, p);
  double re = 0.0, im = 0.0;
  int re_sign = 1;
  if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
    re_sign = s[p] == '-' ? -1 : 1;
    ++p;
  }
  if (!detail::lex_number(s, p, re)) return false;
  skip_ws(s, p);
  if (p < s.size() && s[p] == 'i') {  // "(2i)"
    ++p;
    skip_ws(s, p);
    if (p >= s.size() || s[p] != ')') return false;
    out = {0.0, re_sign * re};
    pos = p + 1;
    return true;
  }
  if (p >= s.size() || (s[p] != '+' && s[p] != '-')) return false;
  const int im_sign = s[p] == '-' ? -1 : 1;
  ++p;
  skip_ws(s, p);
  if (!detail::lex_number(s, p, im)) return false;
  skip_ws(s, p);
  if (p >= s.size() || s[p] != 'i') return false;
  ++p;
  skip_ws(s, p);
  if (p >= s.size() || s[p] != ')') return false;
  out = {re_sign * re, im_sign * im};
  pos = p + 1;
  return true;
}

}  // namespace

namespace detail {

bool lex_number(std::string_view s, std::size_t& pos, double& out) {
  std::size_t p = pos;
  const std::size_t start = p;
  while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
  if (p < s.size() && s[p] == '.') {
    ++p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
  }
  if (p == start || (p == start + 1 && s[start] == '.')) return false;
  // exponent only with an explicit sign, so "3e12" stays a blade
  if (p + 2 < s.size() && (s[p] == 'e' || s[p] == 'E') && (s[p + 1] == '+' || s[p + 1] == '-') &&
      std::isdigit(static_cast<unsigned char>(s[p + 2]))) {
    p += 2;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
  }
  double value = 0.0;
  const auto res = std::from_chars(s.data() + start, s.data() + p, value);
  if (res.ec != std::errc() || res.ptr != s.data() + p) return false;
  out = value;
  pos = p;
  return true;
}

bool lex_blade(const Signature& sig, std::string_view s, std::size_t& pos, BladeMask& mask,
               int& sign) {
  std::size_t p = pos;
  if (p >= s.size() || s[p] != 'e') return false;
  ++p;
  std::vector<int> labels;
  if (p < s.size() && s[p] == '{') {
    ++p;
    while (true) {
      skip_ws(s, p);
      const std::size_t start = p;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
      if (p == start) parse_error(s, p, "expected basis index");
      labels.push_back(std::stoi(std::string(s.substr(start, p - start))));
      skip_ws(s, p);
      if (p < s.size() && s[p] == ',') {
        ++p;
        continue;
      }
      if (p < s.size() && s[p] == '}') {
        ++p;
        break;
      }
      parse_error(s, p, "unterminated blade index list");
    }
  } else {
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) labels.push_back(s[p++] - '0');
    if (labels.empty()) return false;
  }
  std::vector<int> bits;
  for (int label : labels) {
    const int bit = sig.bit_of(label);
    if (bit < 0)
      parse_error(s, pos, "basis index " + std::to_string(label) + " out of range for " +
                              sig.to_string());
    if (std::find(bits.begin(), bits.end(), bit) != bits.end())
      parse_error(s, pos, "duplicate index " + std::to_string(label) + " in blade");
    bits.push_back(bit);
  }
  int inversions = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    for (std::size_t j = i + 1; j < bits.size(); ++j)
      if (bits[i] > bits[j]) ++inversions;
  mask = 0;
  for (int bit : bits) mask |= BladeMask{1} << bit;
  sign = (inversions % 2) ? -1 : 1;
  pos = p;
  return true;
}

}  // namespace detail

Multivector parse(const Signature& sig, std::string_view text) {
  Multivector out(sig);
  std::size_t pos = 0;
  bool first = true;
  skip_ws(text, pos);
  if (pos == text.size()) parse_error(text, pos, "empty input");
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws(text, pos);
    } else if (!first) {
      parse_error(text, pos, "expected '+' or '-' between terms");
    }
    first = false;

    Complex coef = 1.0;
    bool have_coef = false;
    double x = 0.0;
    if (lex_complex(text, pos, coef)) {
      have_coef = true;
    } else if (detail::lex_number(text, pos, x)) {
      coef = x;
      have_coef = true;
    } else if (pos < text.size() && text[pos] == '(') {
      parse_error(text, pos, "malformed complex coefficient");
    }
    skip_ws(text, pos);
    if (have_coef && pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws(text, pos);
    }
    BladeMask mask = 0;
    int blade_sign = 1;
    const bool have_blade = detail::lex_blade(sig, text, pos, mask, blade_sign);
    if (!have_coef && !have_blade) parse_error(text, pos, "malformed token");
    out.add(mask, coef * static_cast<double>(sign * blade_sign));
    skip_ws(text, pos);
  }
  return out;
}

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string blade_label(const Signature& sig, BladeMask mask) {
  if (mask == 0) return "1";
  bool small = true;
  std::vector<int> labels;
  for (int b = 0; b < sig.dim(); ++b)
    if (mask & (BladeMask{1} << b)) {
      labels.push_back(sig.label_of(b));
      if (labels.back() > 9) small = false;
    }
  std::string out = "e";
  if (small) {
    for (int l : labels) out += static_cast<char>('0' + l);
    return out;
  }
  out += '{';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels[i]);
  }
  return out + '}';
}

std::string format(const Multivector& mv) {
  const Signature& sig = mv.signature();
  std::string out;
  for (BladeMask m : canonical_order(sig)) {
    const Complex c = mv[m];
    if (c == 0.0) continue;
    const std::string blade = m == 0 ? "" : blade_label(sig, m);
    if (c.imag() != 0.0) {
      std::string coef = c.real() == 0.0
                             ? "(" + format_real(c.imag()) + "i)"
                             : "(" + format_real(c.real()) + (std::signbit(c.imag()) ? "-" : "+") +
                                   format_real(std::abs(c.imag())) + "i)";
      out += out.empty() ? coef + blade : " + " + coef + blade;
      continue;
    }
    const double r = c.real();
    const bool neg = std::signbit(r);
    const double a = std::abs(r);
    std::string body = (a == 1.0 && m != 0) ? blade : format_real(a) + blade;
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

nlohmann::json to_json(const Multivector& mv) {
  const Signature& sig = mv.signature();
  nlohmann::json terms = nlohmann::json::array();
  for (BladeMask m : canonical_order(sig)) {
    const Complex c = mv[m];
    if (c == 0.0) continue;
    nlohmann::json blade = nlohmann::json::array();
    for (int b = 0; b < sig.dim(); ++b)
      if (m & (BladeMask{1} << b)) blade.push_back(sig.label_of(b));
    terms.push_back({{"blade", blade}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"sig", {sig.p(), sig.q(), sig.r()}}, {"terms", terms}};
}

Multivector from_json(const nlohmann::json& j) {
  try {
    const auto& s = j.at("sig");
    if (!s.is_array() || s.size() != 3) throw Error(ErrorKind::Parse, "\"sig\" must be [p,q,r]");
    const Signature sig(s[0].get<int>(), s[1].get<int>(), s[2].get<int>());
    Multivector out(sig);
    for (const auto& term : j.at("terms")) {
      std::vector<int> bits;
      for (const auto& l : term.at("blade")) {
        const int bit = sig.bit_of(l.get<int>());
        if (bit < 0) throw Error(ErrorKind::Parse, "basis index out of range in JSON term");
        if (std::find(bits.begin(), bits.end(), bit) != bits.end())
          throw Error(ErrorKind::Parse, "duplicate index in JSON blade");
        bits.push_back(bit);
      }
      int inversions = 0;
      BladeMask mask = 0;
      for (std::size_t a = 0; a < bits.size(); ++a) {
        mask |= BladeMask{1} << bits[a];
        for (std::size_t b = a + 1; b < bits.size(); ++b)
          if (bits[a] > bits[b]) ++inversions;
      }
      const double re = term.value("re", 0.0), im = term.value("im", 0.0);
      out.add(mask, Complex(re, im) * ((inversions % 2) ? -1.0 : 1.0));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed multivector JSON: ") + e.what());
  }
}

}  // namespace cliff
