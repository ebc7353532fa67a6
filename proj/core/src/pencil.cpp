#include <segre233/pencil.hpp>

#include <algorithm>
#include <stdexcept>

namespace segre233 {

namespace {

// expand the product of linear forms (a0 s + b0 t)(a1 s + b1 t)(a2 s + b2 t)
BinaryCubic linear_product(const Gf& f, const std::array<Fel, 3>& a,
                           const std::array<Fel, 3>& b) {
  // quadratic in s,t first
  std::array<Fel, 3> q{};  // coeff of s^{2-i} t^i
  q[0] = f.mul(a[0], a[1]);
  q[1] = f.add(f.mul(a[0], b[1]), f.mul(b[0], a[1]));
  q[2] = f.mul(b[0], b[1]);
  BinaryCubic c;
  for (int i = 0; i < 3; ++i) {
    c.c[i] = f.add(c.c[i], f.mul(q[i], a[2]));
    c.c[i + 1] = f.add(c.c[i + 1], f.mul(q[i], b[2]));
  }
  return c;
}

constexpr int kPerms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                              {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};

long encode_key(int q, const Poly& p) {
  return p.coeff(0) + long(q) * p.coeff(1) + long(q) * q * p.coeff(2);
}

void require_monic_irreducible_cubic(const Gf& f, const Poly& p, const char* who) {
  if (p.degree() != 3 || p.coeff(3) != 1 || !poly_irreducible(f, p))
    throw std::invalid_argument(std::string(who) + ": need a monic irreducible cubic");
}

}  // namespace

BinaryCubic det_form(const Gf& f, const Mat& m1, const Mat& m2) {
  BinaryCubic c;
  for (int p = 0; p < 6; ++p) {
    std::array<Fel, 3> a{}, b{};
    for (int i = 0; i < 3; ++i) {
      a[i] = m1.at(i, kPerms[p][i]);
      b[i] = m2.at(i, kPerms[p][i]);
    }
    BinaryCubic term = linear_product(f, a, b);
    bool odd = p >= 3;
    for (int i = 0; i < 4; ++i)
      c.c[i] = f.add(c.c[i], odd ? f.neg(term.c[i]) : term.c[i]);
  }
  return c;
}

Fel eval(const Gf& f, const BinaryCubic& c, Fel s, Fel t) {
  Fel r = 0;
  for (int i = 0; i < 4; ++i) {
    Fel term = c.c[i];
    for (int j = 0; j < 3 - i; ++j) term = f.mul(term, s);
    for (int j = 0; j < i; ++j) term = f.mul(term, t);
    r = f.add(r, term);
  }
  return r;
}

const char* to_string(FactorType t) {
  switch (t) {
    case FactorType::zero: return "zero";
    case FactorType::triple_linear: return "triple_linear";
    case FactorType::double_linear: return "double_linear";
    case FactorType::three_distinct_linear: return "three_distinct_linear";
    case FactorType::linear_irreducible_quadratic: return "linear_irreducible_quadratic";
    case FactorType::irreducible_cubic: return "irreducible_cubic";
  }
  return "?";
}

FactorType factor_type(const Gf& f, const BinaryCubic& c) {
  if (c.c[0] == 0 && c.c[1] == 0 && c.c[2] == 0 && c.c[3] == 0) return FactorType::zero;
  // restrict to the affine chart s = 1; the point at infinity (0:1) has
  // multiplicity 3 - deg of the restriction
  Poly g = poly_trim(Poly{{c.c[0], c.c[1], c.c[2], c.c[3]}});
  std::vector<int> mults;
  int inf = 3 - g.degree();
  if (inf > 0) mults.push_back(inf);
  for (Fel x : f.elements()) {
    if (poly_eval(f, g, x) != 0) continue;
    int m = 0;
    Poly h = g;
    while (!h.is_zero() && h.degree() >= 1 && poly_eval(f, h, x) == 0) {
      h = poly_deflate(f, h, x);
      ++m;
    }
    mults.push_back(m);
  }
  std::sort(mults.begin(), mults.end());
  if (mults.empty()) return FactorType::irreducible_cubic;
  if (mults == std::vector<int>{3}) return FactorType::triple_linear;
  if (mults == std::vector<int>{1, 2}) return FactorType::double_linear;
  if (mults == std::vector<int>{1, 1, 1}) return FactorType::three_distinct_linear;
  if (mults == std::vector<int>{1}) return FactorType::linear_irreducible_quadratic;
  throw std::logic_error("factor_type: impossible multiplicity pattern");
}

int projective_root_count(const Gf& f, const BinaryCubic& c) {
  int n = 0;
  for (Fel x : f.elements())
    if (eval(f, c, 1, x) == 0) ++n;
  if (eval(f, c, 0, 1) == 0) ++n;
  return n;
}

Mobius::Mobius(const Gf& f, Fel a_, Fel b_, Fel c_, Fel d_) : a(a_), b(b_), c(c_), d(d_) {
  if (f.sub(f.mul(a, d), f.mul(b, c)) == 0)
    throw std::invalid_argument("Mobius: determinant is zero");
  Fel lead = a ? a : b ? b : c ? c : d;
  Fel s = f.inv(lead);
  a = f.mul(s, a);
  b = f.mul(s, b);
  c = f.mul(s, c);
  d = f.mul(s, d);
}

Mobius mobius_compose(const Gf& f, const Mobius& x, const Mobius& y) {
  return Mobius(f, f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)),
                f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
                f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)),
                f.add(f.mul(x.c, y.b), f.mul(x.d, y.d)));
}

std::vector<Mobius> pgl2_elements(const Gf& f) {
  std::vector<Mobius> out;
  int q = f.q();
  out.reserve(std::size_t(q) * q * q - q);
  auto push = [&](Fel a, Fel b, Fel c, Fel d) {
    if (f.sub(f.mul(a, d), f.mul(b, c)) != 0) out.push_back(Mobius(f, a, b, c, d));
  };
  for (Fel b : f.elements())
    for (Fel c : f.elements())
      for (Fel d : f.elements()) push(1, b, c, d);
  for (Fel c : f.elements())
    for (Fel d : f.elements()) push(0, 1, c, d);
  // a = b = 0 forces det = 0, nothing more to add
  return out;
}

Poly mobius_transform(const Gf& f, const Poly& p, const Mobius& phi) {
  if (p.degree() != 3) throw std::invalid_argument("mobius_transform: need degree 3");
  Poly num = poly_from({phi.b, phi.a});  // a t + b
  Poly den = poly_from({phi.d, phi.c});  // c t + d
  Poly npow[4], dpow[4];
  npow[0] = dpow[0] = poly_from({1});
  for (int i = 1; i < 4; ++i) {
    npow[i] = poly_mul(f, npow[i - 1], num);
    dpow[i] = poly_mul(f, dpow[i - 1], den);
  }
  Poly r;
  for (int i = 0; i < 4; ++i) {
    Poly term = poly_scale(f, p.coeff(i), poly_mul(f, npow[i], dpow[3 - i]));
    r = poly_add(f, r, term);
  }
  if (r.degree() == 3) r = poly_monic(f, r);
  return r;
}

Poly shift_scale_charpoly(const Gf& f, const Poly& p, Fel alpha, Fel beta) {
  if (p.degree() != 3) throw std::invalid_argument("shift_scale_charpoly: need degree 3");
  if (beta == 0) throw std::invalid_argument("shift_scale_charpoly: beta must be nonzero");
  // beta^3 f((t - alpha)/beta) = sum_i f_i (t - alpha)^i beta^{3-i}
  Poly lin = poly_from({f.neg(alpha), 1});
  Poly pw = poly_from({1});
  Poly r;
  Fel bpow[4] = {1, beta, f.mul(beta, beta), f.mul(f.mul(beta, beta), beta)};
  for (int i = 0; i < 4; ++i) {
    r = poly_add(f, r, poly_scale(f, f.mul(p.coeff(i), bpow[3 - i]), pw));
    if (i < 3) pw = poly_mul(f, pw, lin);
  }
  return r;
}

std::vector<Poly> irreducible_monic_cubics(const Gf& f) {
  std::vector<Poly> out;
  int q = f.q();
  for (long e = 0; e < long(q) * q * q; ++e) {
    Poly p{{Fel(e % q), Fel((e / q) % q), Fel((e / q / q) % q), 1}};
    if (poly_irreducible(f, p)) out.push_back(p);
  }
  return out;
}

std::vector<Poly> pgl_orbit_of_cubic(const Gf& f, const Poly& p) {
  require_monic_irreducible_cubic(f, p, "pgl_orbit_of_cubic");
  std::vector<Poly> orbit;
  for (const Mobius& phi : pgl2_elements(f)) {
    Poly img = mobius_transform(f, p, phi);
    if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(img);
  }
  std::sort(orbit.begin(), orbit.end(), [&](const Poly& x, const Poly& y) {
    return encode_key(f.q(), x) < encode_key(f.q(), y);
  });
  return orbit;
}

std::vector<Mobius> pgl_stabilizer_of_cubic(const Gf& f, const Poly& p) {
  require_monic_irreducible_cubic(f, p, "pgl_stabilizer_of_cubic");
  std::vector<Mobius> stab;
  for (const Mobius& phi : pgl2_elements(f))
    if (mobius_transform(f, p, phi) == p) stab.push_back(phi);
  return stab;
}

bool lines_equivalent_rank3(const Gf& f, const Poly& a, const Poly& b) {
  require_monic_irreducible_cubic(f, b, "lines_equivalent_rank3");
  auto orbit = pgl_orbit_of_cubic(f, a);
  return std::find(orbit.begin(), orbit.end(), b) != orbit.end();
}

}  // namespace segre233
