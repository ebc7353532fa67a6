#pragma once

#include <segre233/linalg.hpp>

namespace segre233 {

// Homogeneous binary cubic form c0*s^3 + c1*s^2 t + c2*s t^2 + c3*t^3.
struct BinaryCubic {
  std::array<Fel, 4> c{};
  bool operator==(const BinaryCubic& o) const = default;
};

// det(s*M1 + t*M2) for 3x3 matrices, expanded symbolically over GF(q).
BinaryCubic det_form(const Gf& f, const Mat& m1, const Mat& m2);
Fel eval(const Gf& f, const BinaryCubic& c, Fel s, Fel t);

// Shape of the projective zero locus of a binary cubic over GF(q),
// classified by the multiset of multiplicities of its roots in PG(1,q):
//   zero                          identically vanishing form
//   triple_linear                 one root of multiplicity 3
//   double_linear                 roots of multiplicity 2 and 1
//   three_distinct_linear         three simple roots
//   linear_irreducible_quadratic  one simple root (quadratic cofactor has none)
//   irreducible_cubic             no roots at all
enum class FactorType {
  zero,
  triple_linear,
  double_linear,
  three_distinct_linear,
  linear_irreducible_quadratic,
  irreducible_cubic,
};
const char* to_string(FactorType t);

FactorType factor_type(const Gf& f, const BinaryCubic& c);
// Number of projective roots counted without multiplicity.
int projective_root_count(const Gf& f, const BinaryCubic& c);

// Element of PGL(2,q) as an invertible 2x2 matrix [[a,b],[c,d]] scaled so
// its first nonzero entry (in a,b,c,d order) is 1. The constructor throws
// std::invalid_argument when ad - bc = 0.
struct Mobius {
  Fel a = 1, b = 0, c = 0, d = 1;
  Mobius() = default;
  Mobius(const Gf& f, Fel a_, Fel b_, Fel c_, Fel d_);
  bool operator==(const Mobius& o) const = default;
};

Mobius mobius_compose(const Gf& f, const Mobius& x, const Mobius& y);  // matrix product xy
std::vector<Mobius> pgl2_elements(const Gf& f);  // all q^3 - q of them

/* Degree-preserving substitution action on cubics:
 *   f^phi(t) = sum_i f_i (a t + b)^i (c t + d)^{3-i},   phi = [[a,b],[c,d]].
 *
 * Scalar multiples of phi give the same transform up to scaling, so this
 * descends to PGL(2,q) after monic normalization. It is a right action:
 * (f^phi)^psi = f^(phi*psi) with the plain matrix product (verified
 * exhaustively over PGL(2,2) and PGL(2,3) in the tests). The input must
 * have degree exactly 3; the result is monic-normalized when its leading
 * coefficient is nonzero and returned raw otherwise. */
Poly mobius_transform(const Gf& f, const Poly& p, const Mobius& phi);

// beta^3 * f((t - alpha)/beta), expanded exactly. Equals the characteristic
// polynomial of alpha*I + beta*companion(f) for monic cubic f, in the
// det(tI - M) convention. Throws when beta = 0 or deg f != 3.
Poly shift_scale_charpoly(const Gf& f, const Poly& p, Fel alpha, Fel beta);

// All monic irreducible cubics over GF(q), ordered by the encoded
// coefficient value c0 + c1*q + c2*q^2. There are (q^3 - q)/3 of them.
std::vector<Poly> irreducible_monic_cubics(const Gf& f);

// Orbit of a monic irreducible cubic under the PGL(2,q) substitution
// action, sorted in the enumeration order above. Throws when the input is
// not a monic irreducible cubic.
std::vector<Poly> pgl_orbit_of_cubic(const Gf& f, const Poly& p);

// Stabilizer elements of a monic irreducible cubic under the action.
std::vector<Mobius> pgl_stabilizer_of_cubic(const Gf& f, const Poly& p);

// Whether two constant-rank-3 pencils with the given (irreducible, monic)
// characteristic cubics are equivalent, i.e. whether the cubics lie in the
// same PGL(2,q) orbit. Over a finite field the action is transitive, so
// this is always true for valid inputs; it is exposed for symmetry and
// testing.
bool lines_equivalent_rank3(const Gf& f, const Poly& a, const Poly& b);

}  // namespace segre233
