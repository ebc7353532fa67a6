#pragma once

#include <array>
#include <initializer_list>
#include <vector>

#include <segre233/gf.hpp>

namespace segre233 {

// Dense matrix over GF(q) with fixed capacity 9x9, value semantics, no heap.
// Everything this library touches is tiny (2x2 up to 3x9 bases flattened
// into 9 coordinates), so one POD type covers all of it.
struct Mat {
  int rows = 0, cols = 0;
  std::array<Fel, 81> e{};

  Fel& at(int r, int c) { return e[std::size_t(r) * cols + c]; }
  Fel at(int r, int c) const { return e[std::size_t(r) * cols + c]; }

  static Mat zero(int r, int c);
  static Mat identity(int n);

  bool operator==(const Mat& o) const;
};

// Row vector with the same capacity bound.
struct Vec {
  int n = 0;
  std::array<Fel, 9> v{};
  bool operator==(const Vec& o) const;
};

Mat mat_from(int rows, int cols, std::initializer_list<int> entries);
Vec vec_from(std::initializer_list<int> entries);
Vec row_of(const Mat& m, int r);

Mat add(const Gf& f, const Mat& a, const Mat& b);
Mat sub(const Gf& f, const Mat& a, const Mat& b);
Mat scale(const Gf& f, Fel c, const Mat& a);
Mat matmul(const Gf& f, const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Vec apply(const Gf& f, const Vec& v, const Mat& m);  // row vector times matrix

// Reduces m to reduced row echelon form in place; returns the rank.
int rref_in_place(const Gf& f, Mat& m);
int rank(const Gf& f, Mat m);
bool is_invertible(const Gf& f, const Mat& m);
Mat inverse(const Gf& f, const Mat& m);  // throws std::invalid_argument if singular

Fel det(const Gf& f, const Mat& m);  // n <= 3

/* Subspace of GF(q)^n in canonical form: the basis is the reduced row
 * echelon form of any spanning set, so two Subspace values describe the same
 * subspace exactly when their representations compare equal. */
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Gf& f, const Mat& spanning);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows; }
  const Mat& basis() const { return basis_; }

  bool contains(const Gf& f, const Vec& v) const;
  bool contains(const Gf& f, const Subspace& other) const;

  bool operator==(const Subspace& o) const;

 private:
  int ambient_ = 0;
  Mat basis_;  // dim rows, RREF
};

Subspace sum(const Gf& f, const Subspace& a, const Subspace& b);
Subspace row_space(const Gf& f, const Mat& m);
Subspace col_space(const Gf& f, const Mat& m);

// Polynomial over GF(q), coefficients low degree first, trailing zeros
// stripped. The zero polynomial has an empty coefficient vector and
// degree() == -1.
struct Poly {
  std::vector<Fel> c;

  int degree() const { return int(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Fel coeff(int i) const { return (i >= 0 && i < int(c.size())) ? c[i] : Fel(0); }
  bool operator==(const Poly& o) const { return c == o.c; }
};

Poly poly_from(std::initializer_list<int> coeffs_low_first);
Poly poly_trim(Poly p);
Poly poly_add(const Gf& f, const Poly& a, const Poly& b);
Poly poly_sub(const Gf& f, const Poly& a, const Poly& b);
Poly poly_mul(const Gf& f, const Poly& a, const Poly& b);
Poly poly_scale(const Gf& f, Fel c, const Poly& a);
Fel poly_eval(const Gf& f, const Poly& p, Fel x);
Poly poly_monic(const Gf& f, Poly p);  // throws on zero polynomial
// Divides by (t - root); the root must actually be a root.
Poly poly_deflate(const Gf& f, const Poly& p, Fel root);
bool poly_has_root(const Gf& f, const Poly& p);
// Degree 1, 2 or 3 only (a root test decides); throws otherwise.
bool poly_irreducible(const Gf& f, const Poly& p);
std::string poly_string(const Gf& f, const Poly& p);

// Characteristic polynomial det(tI - M) of a 3x3 matrix, always monic.
// All companion and pencil identities in this library are stated in this
// convention.
Poly charpoly(const Gf& f, const Mat& m);

// Companion matrix of a monic polynomial, the convention being
// charpoly(companion(f)) == f: subdiagonal ones, last column holds the
// negated coefficients.
Mat companion(const Gf& f, const Poly& p);

// Similarity test for 3x3 matrices whose characteristic polynomials are
// irreducible; in that case similarity is equivalent to equality of the
// characteristic polynomials. Throws std::invalid_argument when either
// charpoly is reducible.
bool similar_irreducible(const Gf& f, const Mat& a, const Mat& b);

}  // namespace segre233
