#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <segre233/gf.hpp>

#include <set>
#include <vector>

using namespace segre233;

namespace {

// Independent polynomial arithmetic over GF(p) with plain ints, used to
// re-derive the expected modulus without touching the Gf internals.
bool divides(const std::vector<int>& d, std::vector<int> f, int p) {
  // long division, returns true iff remainder is zero
  auto inv_mod = [p](int a) {
    for (int x = 1; x < p; ++x)
      if (a * x % p == 1) return x;
    return 0;
  };
  int il = inv_mod(d.back());
  while (f.size() >= d.size() && !(f.size() == 1 && f[0] == 0)) {
    int c = f.back() * il % p;
    size_t shift = f.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i)
      f[shift + i] = ((f[shift + i] - c * d[i]) % p + p) % p;
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    if (f.size() == 1 && f[0] == 0) return true;
    if (f.size() < d.size()) break;
  }
  return f.size() == 1 && f[0] == 0;
}

bool irreducible_mod_p(const std::vector<int>& f, int p) {
  int k = int(f.size()) - 1;
  // trial division by every monic polynomial of degree 1..k/2
  for (int d = 1; 2 * d <= k; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      std::vector<int> g(d + 1, 0);
      long c = code;
      for (int i = 0; i < d; ++i) { g[i] = int(c % p); c /= p; }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("field construction accepts prime powers up to 256 and rejects the rest") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 169, 243, 256}) {
    Gf f = Gf::from_order(q);
    CHECK(f.q() == q);
  }
  CHECK_THROWS_AS(Gf(4, 1), std::invalid_argument);   // p not prime
  CHECK_THROWS_AS(Gf(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(Gf(2, 9), std::invalid_argument);   // 512 > 256
  CHECK_THROWS_AS(Gf(3, 6), std::invalid_argument);
  CHECK_THROWS_AS(Gf(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Gf::from_order(6), std::invalid_argument);
  CHECK_THROWS_AS(Gf::from_order(1), std::invalid_argument);
  CHECK_THROWS_AS(Gf::from_order(257), std::invalid_argument);
}

TEST_CASE("GF(4) uses modulus x^2+x+1 and the expected multiplication table") {
  Gf f(2, 2);
  CHECK(f.modulus() == std::vector<int>{1, 1, 1});
  CHECK(f.modulus_string() == "x^2+x+1");
  // encodings: 0, 1, x = 2, x+1 = 3
  CHECK(f.mul(2, 2) == 3);  // x^2 = x+1
  CHECK(f.mul(2, 3) == 1);  // x(x+1) = x^2+x = 1
  CHECK(f.mul(3, 3) == 2);  // (x+1)^2 = x
  CHECK(f.add(2, 3) == 1);
  CHECK(f.inv(2) == 3);
  CHECK(f.inv(3) == 2);
}

TEST_CASE("the chosen modulus is the lexicographically smallest monic irreducible") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 8}}) {
    Gf f(p, k);
    auto m = f.modulus();
    REQUIRE(int(m.size()) == k + 1);
    CHECK(m.back() == 1);
    CHECK(irreducible_mod_p(m, p));
    // nothing lexicographically smaller (c_0 most significant) is irreducible
    long self = 0;
    for (int i = 0; i < k; ++i) self = self * p + m[i];
    for (long code = 0; code < self; ++code) {
      std::vector<int> g(k + 1, 0);
      long c = code;
      for (int i = 0; i < k; ++i) {
        long w = 1;
        for (int j = 0; j < k - 1 - i; ++j) w *= p;
        g[i] = int(c / w);
        c %= w;
      }
      g[k] = 1;
      CHECK_FALSE(irreducible_mod_p(g, p));
    }
  }
}

TEST_CASE("prime field arithmetic matches integer arithmetic") {
  Gf f3(3, 1), f5(5, 1);
  CHECK(f3.inv(2) == 2);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.neg(2) == 3);
  CHECK(f3.modulus().empty());
  CHECK(f3.modulus_string().empty());
  for (int p : {2, 3, 5, 7, 11, 251}) {
    Gf f(p, 1);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        CHECK(f.add(Fel(a), Fel(b)) == Fel((a + b) % p));
        CHECK(f.mul(Fel(a), Fel(b)) == Fel((a * b) % p));
      }
  }
}

TEST_CASE("field axioms hold exhaustively for small orders") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    CAPTURE(q);
    Gf f = Gf::from_order(q);
    auto els = f.elements();
    REQUIRE(int(els.size()) == q);
    CHECK(els[0] == 0);
    CHECK(els[1] == 1);

    for (Fel a : els) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.inv(f.inv(a)) == a);
      }
      for (Fel b : els) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      }
    }
    // associativity and distributivity over all triples
    for (Fel a : els)
      for (Fel b : els)
        for (Fel c : els) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
  }
}

TEST_CASE("inversion agrees with exhaustive search") {
  for (int q : {4, 8, 9, 16, 27, 64, 81, 256}) {
    Gf f = Gf::from_order(q);
    for (int a = 1; a < q; ++a) {
      Fel found = 0;
      for (int b = 1; b < q; ++b)
        if (f.mul(Fel(a), Fel(b)) == 1) { found = Fel(b); break; }
      CHECK(f.inv(Fel(a)) == found);
    }
  }
}

TEST_CASE("Frobenius is additive: (a+b)^p = a^p + b^p") {
  for (int q : {4, 8, 9, 16, 25, 27, 49}) {
    Gf f = Gf::from_order(q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        Fel lhs = f.pow(f.add(Fel(a), Fel(b)), f.p());
        Fel rhs = f.add(f.pow(Fel(a), f.p()), f.pow(Fel(b), f.p()));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("multiplicative generator has full order") {
  for (int q : {2, 3, 4, 5, 8, 9, 27, 49, 64}) {
    Gf f = Gf::from_order(q);
    Fel g = f.generator();
    std::set<Fel> powers;
    Fel x = 1;
    for (int i = 0; i < q - 1; ++i) {
      powers.insert(x);
      x = f.mul(x, g);
    }
    CHECK(x == 1);
    CHECK(int(powers.size()) == q - 1);
  }
}

TEST_CASE("x^q = x for every element (field has the right order)") {
  for (int q : {4, 8, 9, 16, 27, 32, 81, 128, 243, 256}) {
    Gf f = Gf::from_order(q);
    for (int a = 0; a < q; ++a) CHECK(f.pow(Fel(a), q) == Fel(a));
  }
}
