#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <segre233/oracle.hpp>
#include <segre233/pencil.hpp>

#include <algorithm>
#include <random>

using namespace segre233;

TEST_CASE("determinant form of pinned pencils") {
  Gf f2(2, 1);
  Mat n = mat_from(3, 3, {0, 1, 0, 0, 0, 1, 0, 0, 0});
  CHECK(det_form(f2, Mat::identity(3), n) == BinaryCubic{{1, 0, 0, 0}});  // s^3

  Mat e11e22 = mat_from(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0});
  Mat e13e32 = mat_from(3, 3, {0, 0, 1, 0, 0, 0, 0, 1, 0});
  CHECK(det_form(f2, e11e22, e13e32) == BinaryCubic{{0, 0, 0, 0}});

  Mat d110 = mat_from(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0});
  Mat d011 = mat_from(3, 3, {0, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(det_form(f2, d110, d011) == BinaryCubic{{0, 1, 1, 0}});  // s(s+t)t
}

TEST_CASE("determinant form agrees with pointwise determinants") {
  std::mt19937_64 rng(201);
  for (int q : {2, 3, 4, 5, 9}) {
    Gf f = Gf::from_order(q);
    for (int trial = 0; trial < 60; ++trial) {
      Mat m1 = random_matrix(f, 3, 3, rng), m2 = random_matrix(f, 3, 3, rng);
      BinaryCubic c = det_form(f, m1, m2);
      for (Fel s : f.elements())
        for (Fel t : f.elements()) {
          Mat m = add(f, scale(f, s, m1), scale(f, t, m2));
          CHECK(eval(f, c, s, t) == det(f, m));
        }
    }
  }
}

TEST_CASE("factor type over GF(2), all sixteen cubics") {
  Gf f2(2, 1);
  auto ft = [&](int c0, int c1, int c2, int c3) {
    return factor_type(f2, BinaryCubic{{Fel(c0), Fel(c1), Fel(c2), Fel(c3)}});
  };
  CHECK(ft(0, 0, 0, 0) == FactorType::zero);
  CHECK(ft(1, 0, 0, 0) == FactorType::triple_linear);           // s^3
  CHECK(ft(0, 0, 0, 1) == FactorType::triple_linear);           // t^3
  CHECK(ft(1, 1, 1, 1) == FactorType::triple_linear);           // (s+t)^3
  CHECK(ft(0, 1, 0, 0) == FactorType::double_linear);           // s^2 t
  CHECK(ft(0, 0, 1, 0) == FactorType::double_linear);           // s t^2
  CHECK(ft(1, 1, 0, 0) == FactorType::double_linear);           // s^2 (s+t)
  CHECK(ft(0, 0, 1, 1) == FactorType::double_linear);           // t^2 (s+t)
  CHECK(ft(1, 0, 1, 0) == FactorType::double_linear);           // s (s+t)^2
  CHECK(ft(0, 1, 0, 1) == FactorType::double_linear);           // t (s+t)^2
  CHECK(ft(0, 1, 1, 0) == FactorType::three_distinct_linear);   // s t (s+t)
  CHECK(ft(1, 0, 0, 1) == FactorType::linear_irreducible_quadratic);  // (s+t)(s^2+st+t^2)
  CHECK(ft(1, 1, 1, 0) == FactorType::linear_irreducible_quadratic);  // s (s^2+st+t^2)
  CHECK(ft(0, 1, 1, 1) == FactorType::linear_irreducible_quadratic);  // t (s^2+st+t^2)
  CHECK(ft(1, 1, 0, 1) == FactorType::irreducible_cubic);
  CHECK(ft(1, 0, 1, 1) == FactorType::irreducible_cubic);
}

TEST_CASE("root counts match a brute-force sweep of the projective line") {
  std::mt19937_64 rng(203);
  for (int q : {2, 3, 4, 5}) {
    Gf f = Gf::from_order(q);
    for (int trial = 0; trial < 300; ++trial) {
      BinaryCubic c;
      for (auto& x : c.c) x = Fel(rng() % q);
      int brute = 0;
      for (Fel l : f.elements())
        if (eval(f, c, 1, l) == 0) ++brute;
      if (eval(f, c, 0, 1) == 0) ++brute;
      CHECK(projective_root_count(f, c) == brute);

      FactorType t = factor_type(f, c);
      switch (t) {
        case FactorType::zero: CHECK(brute == q + 1); break;
        case FactorType::irreducible_cubic: CHECK(brute == 0); break;
        case FactorType::three_distinct_linear: CHECK(brute == 3); break;
        case FactorType::double_linear: CHECK(brute == 2); break;
        case FactorType::triple_linear:
        case FactorType::linear_irreducible_quadratic: CHECK(brute == 1); break;
      }
    }
  }
}

TEST_CASE("moebius elements are canonically scaled and form PGL(2,q)") {
  Gf f5(5, 1);
  CHECK(Mobius(f5, 2, 4, 0, 2) == Mobius(f5, 1, 2, 0, 1));
  CHECK(Mobius(f5, 0, 3, 4, 2) == Mobius(f5, 0, 1, 3, 4));
  Gf f2(2, 1);
  CHECK_THROWS_AS(Mobius(f2, 1, 1, 1, 1), std::invalid_argument);

  for (int q : {2, 3, 5}) {
    Gf f = Gf::from_order(q);
    auto all = pgl2_elements(f);
    CHECK(int(all.size()) == q * q * q - q);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(!(all[i] == all[j]));
  }

  // closure and inverses, exhaustively at q = 3
  Gf f3(3, 1);
  auto g = pgl2_elements(f3);
  Mobius id;
  for (const Mobius& x : g) {
    bool has_inverse = false;
    for (const Mobius& y : g) {
      Mobius xy = mobius_compose(f3, x, y);
      CHECK(std::find(g.begin(), g.end(), xy) != g.end());
      if (xy == id) has_inverse = true;
    }
    CHECK(has_inverse);
  }
}

TEST_CASE("substitution action: pinned images and right-action law") {
  Gf f2(2, 1);
  Poly f = poly_from({1, 1, 0, 1});  // t^3 + t + 1
  Mobius idm;
  CHECK(mobius_transform(f2, f, idm) == f);
  CHECK(mobius_transform(f2, f, Mobius(f2, 1, 1, 0, 1)) == poly_from({1, 0, 1, 1}));

  // swapping 0 and infinity reverses coefficients; on t^3 the result
  // degenerates to the constant 1 and is returned unnormalized
  Mobius rho(f2, 0, 1, 1, 0);
  CHECK(mobius_transform(f2, poly_from({0, 0, 0, 1}), rho) == poly_from({1}));

  // for both irreducible cubics over GF(2), the 0<->infinity swap matches
  // the characteristic polynomial of the inverse companion matrix
  for (const Poly& p : irreducible_monic_cubics(f2))
    CHECK(mobius_transform(f2, p, rho) == charpoly(f2, inverse(f2, companion(f2, p))));

  CHECK_THROWS_AS(mobius_transform(f2, poly_from({1, 1}), idm), std::invalid_argument);

  for (int q : {2, 3}) {
    Gf fq = Gf::from_order(q);
    auto group = pgl2_elements(fq);
    for (const Poly& p : irreducible_monic_cubics(fq))
      for (const Mobius& phi : group)
        for (const Mobius& psi : group) {
          Poly lhs = mobius_transform(fq, mobius_transform(fq, p, phi), psi);
          Poly rhs = mobius_transform(fq, p, mobius_compose(fq, phi, psi));
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("shift and scale of a cubic equals the conjugate companion charpoly") {
  std::mt19937_64 rng(211);
  for (int q : {2, 3, 5, 9}) {
    Gf f = Gf::from_order(q);
    for (int trial = 0; trial < 60; ++trial) {
      Poly p = poly_from({int(rng() % q), int(rng() % q), int(rng() % q), 1});
      Fel alpha = Fel(rng() % q);
      Fel beta = Fel(1 + rng() % (q - 1));
      Mat m = add(f, scale(f, alpha, Mat::identity(3)), scale(f, beta, companion(f, p)));
      CHECK(shift_scale_charpoly(f, p, alpha, beta) == charpoly(f, m));
    }
  }
  Gf f3(3, 1);
  CHECK_THROWS_AS(shift_scale_charpoly(f3, poly_from({1, 1, 0, 1}), 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(shift_scale_charpoly(f3, poly_from({1, 1}), 0, 1), std::invalid_argument);
}

TEST_CASE("irreducible cubic inventory") {
  Gf f2(2, 1);
  auto c2 = irreducible_monic_cubics(f2);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0] == poly_from({1, 1, 0, 1}));  // t^3 + t + 1
  CHECK(c2[1] == poly_from({1, 0, 1, 1}));  // t^3 + t^2 + 1

  for (int q : {2, 3, 5}) {
    Gf f = Gf::from_order(q);
    auto cubics = irreducible_monic_cubics(f);
    CHECK(int(cubics.size()) == (q * q * q - q) / 3);
    long prev = -1;
    for (const Poly& p : cubics) {
      CHECK(p.degree() == 3);
      CHECK(p.coeff(3) == 1);
      CHECK(poly_irreducible(f, p));
      long key = p.coeff(0) + long(q) * p.coeff(1) + long(q) * q * p.coeff(2);
      CHECK(key > prev);
      prev = key;
    }
  }
}

TEST_CASE("the substitution action is transitive with stabilizers of order three") {
  for (int q : {2, 3, 5}) {
    Gf f = Gf::from_order(q);
    auto cubics = irreducible_monic_cubics(f);
    auto orbit = pgl_orbit_of_cubic(f, cubics[0]);
    CHECK(orbit == cubics);  // one orbit, already sorted
    for (const Poly& p : cubics) CHECK(pgl_stabilizer_of_cubic(f, p).size() == 3);
  }
  Gf f2(2, 1);
  CHECK_THROWS_AS(pgl_orbit_of_cubic(f2, poly_from({0, 0, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(pgl_stabilizer_of_cubic(f2, poly_from({1, 1})), std::invalid_argument);
}

TEST_CASE("constant rank-3 pencils over one field are all equivalent") {
  for (int q : {2, 3}) {
    Gf f = Gf::from_order(q);
    auto cubics = irreducible_monic_cubics(f);
    for (const Poly& a : cubics)
      for (const Poly& b : cubics) CHECK(lines_equivalent_rank3(f, a, b));
  }
}
