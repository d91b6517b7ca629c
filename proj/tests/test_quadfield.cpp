#include <catch2/catch_amalgamated.hpp>

#include <prym/quadfield.hpp>

#include <random>

using namespace prym;

TEST_CASE("sign by exact case analysis") {
  Disc d5(5);
  CHECK(QF(rat(1), rat(0), d5).sign() == Sign::positive);
  CHECK(QF(rat(-1), rat(1), d5).sign() == Sign::positive);  // sqrt5 > 1
  // lambda' = (1 - sqrt5)/2 < 0
  CHECK(QF(rat(1, 2), rat(-1, 2), d5).sign() == Sign::negative);
  CHECK(QF(rat(0), rat(0), d5).sign() == Sign::zero);
  CHECK(QF(rat(-3), rat(1), d5).sign() == Sign::negative);  // 9 > 5
}

TEST_CASE("conjugation is an involutive ring map") {
  Disc d8(8);
  QF x(rat(1), rat(1), d8), y(rat(2), rat(-1), d8);
  CHECK(qf_conjugate(qf_conjugate(x)) == x);
  CHECK(qf_conjugate(x * y) == qf_conjugate(x) * qf_conjugate(y));
  CHECK(qf_conjugate(x + y) == qf_conjugate(x) + qf_conjugate(y));
  QF inv = QF::rational(rat(1), d8) / x;
  CHECK(qf_conjugate(inv) == QF::rational(rat(1), d8) / qf_conjugate(x));
  Disc d17(17);
  QF lam(rat(1, 2), rat(1, 2), d17);
  CHECK(qf_conjugate(lam) == QF(rat(1, 2), rat(-1, 2), d17));
  CHECK(QF(rat(0), rat(0), d17).conj() == QF(rat(0), rat(0), d17));
}

TEST_CASE("norms") {
  Disc d17(17);
  QF lam(rat(1, 2), rat(1, 2), d17);
  CHECK(qf_norm(lam) == rat(-4));
  CHECK(qf_norm(QF::rational(rat(7, 3), d17)) == rat(49, 9));
  // lambda^2 = e lambda + 2wh  =>  N(lambda) = -2wh (Vieta)
  long w = 1, h = 2, e = 1;
  QF l2 = quadratic_positive_root(e, 2 * w * h, d17);
  CHECK(qf_norm(l2) == rat(-2 * w * h));
  CHECK(l2 * l2 == rat(e) * l2 + QF::rational(rat(2 * w * h), d17));
}

TEST_CASE("N is multiplicative on random pairs") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> coef(-20, 20), den(1, 9);
  for (long D : {5L, 8L, 12L, 17L, 9L, 16L}) {
    Disc d(D);
    for (int i = 0; i < 1000; ++i) {
      QF x(rat(coef(rng), den(rng)), rat(coef(rng), den(rng)), d);
      QF y(rat(coef(rng), den(rng)), rat(coef(rng), den(rng)), d);
      CHECK(qf_norm(x * y) == qf_norm(x) * qf_norm(y));
    }
  }
}

TEST_CASE("square discriminants fold") {
  Disc d9(9);
  CHECK(d9.square);
  QF x(rat(1), rat(1), d9);  // 1 + sqrt9 = 4
  CHECK(x.is_rational());
  CHECK(x.a() == rat(4));
  CHECK(qf_conjugate(x) == x);
  Disc d16(16);
  QF y(rat(-1, 2), rat(3, 2), d16);  // -1/2 + 3/2*4 = 11/2
  CHECK(y.a() == rat(11, 2));
}

TEST_CASE("floor and mod are exact") {
  Disc d5(5);
  QF phi(rat(1, 2), rat(1, 2), d5);  // golden ratio ~1.618
  CHECK(phi.floor() == 1);
  CHECK((-phi).floor() == -2);
  QF five = QF::rational(rat(5), d5);
  QF m = (rat(7) * phi).mod(five);  // 11.326 mod 5 = 1.326...
  CHECK(m.sign() != Sign::negative);
  CHECK((m - five).sign() == Sign::negative);
  CHECK(((rat(7) * phi) - m) / five == QF::rational(rat(2), d5));
  // exact multiples
  CHECK((rat(3) * five).mod(five).is_zero());
}

TEST_CASE("text round trip") {
  Disc d17(17);
  QF x(rat(-3, 7), rat(5, 2), d17);
  CHECK(QF::parse(x.str(), d17) == x);
  CHECK(QF::parse("3", d17) == QF::rational(rat(3), d17));
  CHECK(QF::parse("-1/2 + 1/2*sqrt(17)", d17) == QF(rat(-1, 2), rat(1, 2), d17));
  CHECK(QF::parse("sqrt(17)", d17) == QF(rat(0), rat(1), d17));
  CHECK(QF::parse("-sqrt(17)", d17) == QF(rat(0), rat(-1), d17));
  CHECK(QF::parse("2*sqrt(17) - 1", d17) == QF(rat(-1), rat(2), d17));
  QF z(rat(0), rat(0), d17);
  CHECK(QF::parse(z.str(), d17) == z);
  CHECK_THROWS_AS(QF::parse("sqrt(5)", d17), QFError);
}

TEST_CASE("mixed discriminants are a hard error") {
  QF x = QF::rational(rat(1), Disc(5));
  QF y = QF::rational(rat(1), Disc(8));
  CHECK_THROWS_AS(x + y, QFError);
  CHECK_THROWS_AS(x * y, QFError);
}

TEST_CASE("positive root selection") {
  Disc d17(17);
  QF l = quadratic_positive_root(1, 4, d17);  // three-tori (1,2,0,1): lambda^2 = lambda + 4
  CHECK(l == QF(rat(1, 2), rat(1, 2), d17));
  Disc d9(9);
  QF l9 = quadratic_positive_root(1, 2, d9);  // (1,1,0,1): lambda^2 = lambda + 2 => 2
  CHECK(l9 == QF::rational(rat(2), d9));
  Disc d5(5);
  QF lh2 = quadratic_positive_root(-1, 1, d5);  // H(2) golden prototype
  CHECK(lh2 == QF(rat(-1, 2), rat(1, 2), d5));
  CHECK(lh2.is_positive());
  CHECK((lh2 - QF::rational(rat(1), d5)).is_negative());  // 0 < lambda < w = 1
}
