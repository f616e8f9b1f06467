#include "daggerkit/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace dk {

namespace {

std::string ratString(const Rat& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << "/" << r.get_den();
  return os.str();
}

}  // namespace

std::string to_string(const Scalar& a) {
  if (a.isZero()) return "0";
  std::string out;
  if (sgn(a.re) != 0) out += ratString(a.re);
  if (sgn(a.im) != 0) {
    Rat mag = abs(a.im);
    if (sgn(a.im) < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (mag != 1) out += ratString(mag) + "*";
    out += "i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& a) { return os << to_string(a); }

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skipWs() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skipWs();
    return pos >= s.size();
  }
  char peek() {
    skipWs();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, 1, pos + 1); }
};

mpz_class parseInteger(Cursor& c) {
  c.skipWs();
  std::size_t start = c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  if (c.pos == start) c.fail("expected digits");
  return mpz_class(c.s.substr(start, c.pos - start));
}

Rat parseRational(Cursor& c) {
  mpz_class num = parseInteger(c);
  if (c.peek() == '/') {
    ++c.pos;
    mpz_class den = parseInteger(c);
    if (den == 0) c.fail("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  return Rat(num);
}

}  // namespace

Scalar parseScalar(const std::string& text) {
  Cursor c{text};
  Rat re(0), im(0);
  bool first = true;
  while (!c.eof()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = ch == '-' ? -1 : 1;
      ++c.pos;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    ch = c.peek();
    if (ch == 'i') {
      ++c.pos;
      im += sign;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      Rat mag = parseRational(c);
      ch = c.peek();
      if (ch == '*' || ch == 'i') {
        if (ch == '*') ++c.pos;
        if (c.peek() != 'i') c.fail("expected 'i'");
        ++c.pos;
        im += sign * mag;
      } else {
        re += sign * mag;
      }
    } else {
      c.fail("expected a term");
    }
    first = false;
  }
  if (first) c.fail("empty scalar");
  return Scalar(re, im);
}

}  // namespace dk
