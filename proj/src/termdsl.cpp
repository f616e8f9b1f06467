#include "daggerkit/termdsl.hpp"

#include <cctype>
#include <sstream>

namespace dk {

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0, line = 1, col = 1;

  void advance() {
    if (pos < text.size() && text[pos] == '\n') {
      ++line;
      col = 0;
    }
    ++pos;
    ++col;
  }
  void skipWs() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
  }
  char peek() {
    skipWs();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skipWs();
    std::size_t start = pos;
    while (pos < text.size() && std::islower(static_cast<unsigned char>(text[pos]))) advance();
    return text.substr(start, pos - start);
  }
  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(what, line, col); }
};

struct Parser {
  Lexer lex;
  Flavor flavor;

  BordObject object() {
    std::string word;
    while (lex.peek() == 'p' || lex.peek() == 'd') {
      word += lex.peek();
      lex.advance();
    }
    return parseObject(word);
  }

  BordMorphism atom() {
    if (lex.eat('(')) {
      BordMorphism inner = composition();
      lex.expect(')');
      return inner;
    }
    std::string name = lex.ident();
    if (name == "theta") return generator(GeneratorKind::THETA, flavor);
    if (name == "ev") return generator(GeneratorKind::EV, flavor);
    if (name == "coev") return generator(GeneratorKind::COEV, flavor);
    if (name == "id") {
      lex.expect('(');
      BordObject obj = object();
      lex.expect(')');
      return identityBord(obj, flavor);
    }
    if (name == "swap") {
      lex.expect('(');
      BordObject a = object();
      lex.expect(',');
      BordObject b = object();
      lex.expect(')');
      return braidNF(a, b, flavor);
    }
    lex.fail(name.empty() ? "expected a term" : "unknown atom '" + name + "'");
  }

  BordMorphism daggered() {
    BordMorphism m = atom();
    while (lex.eat('!')) m = daggerBord(m);
    return m;
  }

  BordMorphism tensorTerm() {
    BordMorphism m = daggered();
    while (lex.eat('@')) m = tensorBord(m, daggered());
    return m;
  }

  BordMorphism composition() {
    BordMorphism m = tensorTerm();
    while (lex.eat('.')) m = compose(m, tensorTerm());
    return m;
  }
};

std::string letter(Slot s) { return s == Slot::PT ? "p" : "d"; }

// id(prefix) @ core @ id(suffix), dropping empty identity pieces
std::string wrap(const BordObject& word, std::size_t lo, std::size_t hi,
                 const std::string& core) {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const std::string& piece) {
    if (!first) os << " @ ";
    os << piece;
    first = false;
  };
  if (lo > 0) put("id(" + objectWord(BordObject(word.begin(), word.begin() + lo)) + ")");
  put(core);
  if (hi < word.size())
    put("id(" + objectWord(BordObject(word.begin() + hi, word.end())) + ")");
  return "(" + os.str() + ")";
}

std::string factorTerm(const Factor& f) {
  switch (f.kind) {
    case Factor::Kind::SWAP_ADJ:
      return wrap(f.word, f.pos, f.pos + 2,
                  "swap(" + letter(f.word[f.pos]) + "," + letter(f.word[f.pos + 1]) + ")");
    case Factor::Kind::EV_AT:
      return wrap(f.word, f.pos, f.pos + 2,
                  f.flip ? "(ev . (id(d) @ theta))" : "ev");
    case Factor::Kind::COEV_AT:
      return wrap(f.word, f.pos, f.pos,
                  f.flip ? "((theta @ id(d)) . coev)" : "coev");
    case Factor::Kind::THETA_AT:
      return wrap(f.word, f.pos, f.pos + 1,
                  f.word[f.pos] == Slot::PT
                      ? "theta"
                      : "((ev @ id(d)) . (id(d) @ theta @ id(d)) . (id(d) @ coev))");
  }
  throw std::logic_error("unreachable");
}

}  // namespace

BordMorphism parseBordTerm(const std::string& text, Flavor flavor) {
  Parser p{Lexer{text}, flavor};
  BordMorphism m = p.composition();
  p.lex.skipWs();
  if (p.lex.pos != text.size()) p.lex.fail("trailing input");
  return m;
}

std::string printTerm(const BordMorphism& m) {
  auto factors = factorize(m);
  std::ostringstream os;
  if (factors.empty()) {
    os << "id(" << objectWord(m.src) << ")";
  } else {
    for (std::size_t k = factors.size(); k-- > 0;) {
      os << factorTerm(factors[k]);
      if (k > 0) os << " . ";
    }
  }
  for (std::uint64_t c = 0; c < m.nPeriodic; ++c) os << " @ (ev . swap(p,d) . coev)";
  for (std::uint64_t c = 0; c < m.nAntiperiodic; ++c) os << " @ (ev . (ev !))";
  return os.str();
}

}  // namespace dk
