#include <doctest.h>

#include "daggerkit/rng.hpp"
#include "daggerkit/scalar.hpp"

using namespace dk;

namespace {

Scalar randScalar(Rng& rng) {
  Rat re(rng.intIn(-6, 6), rng.intIn(1, 4));
  Rat im(rng.intIn(-6, 6), rng.intIn(1, 4));
  return Scalar(re, im);
}

}  // namespace

TEST_CASE("arith basics") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  CHECK(Scalar(Rat(1, 2), Rat(1)) * Scalar(Rat(1, 2), Rat(-1)) == Scalar(Rat(5, 4)));
  Scalar x(Rat(3, 7), Rat(-2, 5));
  CHECK(x + Scalar(0) == x);
  CHECK(x - x == Scalar(0));
  CHECK(x / x == Scalar(1));
  CHECK_THROWS_AS(x / Scalar(0), DivisionByZero);
}

TEST_CASE("conjugation") {
  CHECK(conj(Scalar(Rat(3, 2), Rat(1, 2))) == Scalar(Rat(3, 2), Rat(-1, 2)));
  CHECK(conj(Scalar::i()) == -Scalar::i());
  CHECK(conj(Scalar(7)) == Scalar(7));
}

TEST_CASE("field axioms on random scalars") {
  Rng rng(42);
  for (int n = 0; n < 300; ++n) {
    Scalar a = randScalar(rng), b = randScalar(rng), c = randScalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.isZero()) CHECK(a * a.inverse() == Scalar(1));
    CHECK(conj(conj(a)) == a);
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(conj(a + b) == conj(a) + conj(b));
    CHECK(a.normSq() == (a * conj(a)).re);
  }
}

TEST_CASE("canonical form") {
  Scalar a(Rat(2, 4), Rat(-3, 9));
  CHECK(a.re.get_num() == 1);
  CHECK(a.re.get_den() == 2);
  CHECK(a.im.get_num() == -1);
  CHECK(a.im.get_den() == 3);
  CHECK(Scalar(Rat(6, 4)) == Scalar(Rat(3, 2)));
}

TEST_CASE("printing") {
  CHECK(to_string(Scalar(0)) == "0");
  CHECK(to_string(Scalar(-1)) == "-1");
  CHECK(to_string(Scalar::i()) == "i");
  CHECK(to_string(-Scalar::i()) == "-i");
  CHECK(to_string(Scalar(Rat(3, 2), Rat(-1))) == "3/2-i");
  CHECK(to_string(Scalar(Rat(1, 2), Rat(1, 2))) == "1/2+1/2*i");
  CHECK(to_string(Scalar(Rat(0), Rat(-2, 3))) == "-2/3*i");
}

TEST_CASE("parsing") {
  CHECK(parseScalar("-1") == Scalar(-1));
  CHECK(parseScalar("i") == Scalar::i());
  CHECK(parseScalar("3/2-i") == Scalar(Rat(3, 2), Rat(-1)));
  CHECK(parseScalar("1/2 + 1/2*i") == Scalar(Rat(1, 2), Rat(1, 2)));
  CHECK(parseScalar("2i") == Scalar(Rat(0), Rat(2)));
  CHECK(parseScalar("-i+1") == Scalar(Rat(1), Rat(-1)));
  CHECK_THROWS_AS(parseScalar(""), SyntaxError);
  CHECK_THROWS_AS(parseScalar("1/0"), SyntaxError);
  CHECK_THROWS_AS(parseScalar("2x"), SyntaxError);
  CHECK_THROWS_AS(parseScalar("1 1"), SyntaxError);
}

TEST_CASE("parse print round trip") {
  Rng rng(7);
  for (int n = 0; n < 200; ++n) {
    Scalar a = randScalar(rng);
    CHECK(parseScalar(to_string(a)) == a);
  }
}
