#include <segre233/linalg.hpp>

#include <stdexcept>
#include <string>

namespace segre233 {

Mat Mat::zero(int r, int c) {
  Mat m;
  m.rows = r;
  m.cols = c;
  return m;
}

Mat Mat::identity(int n) {
  Mat m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::operator==(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (int i = 0; i < rows * cols; ++i)
    if (e[i] != o.e[i]) return false;
  return true;
}

bool Vec::operator==(const Vec& o) const {
  if (n != o.n) return false;
  for (int i = 0; i < n; ++i)
    if (v[i] != o.v[i]) return false;
  return true;
}

Mat mat_from(int rows, int cols, std::initializer_list<int> entries) {
  if (int(entries.size()) != rows * cols) throw std::invalid_argument("mat_from: size mismatch");
  Mat m = Mat::zero(rows, cols);
  int i = 0;
  for (int v : entries) m.e[i++] = Fel(v);
  return m;
}

Vec vec_from(std::initializer_list<int> entries) {
  Vec v;
  v.n = int(entries.size());
  int i = 0;
  for (int x : entries) v.v[i++] = Fel(x);
  return v;
}

Vec row_of(const Mat& m, int r) {
  Vec v;
  v.n = m.cols;
  for (int c = 0; c < m.cols; ++c) v.v[c] = m.at(r, c);
  return v;
}

Mat add(const Gf& f, const Mat& a, const Mat& b) {
  Mat r = a;
  for (int i = 0; i < a.rows * a.cols; ++i) r.e[i] = f.add(a.e[i], b.e[i]);
  return r;
}

Mat sub(const Gf& f, const Mat& a, const Mat& b) {
  Mat r = a;
  for (int i = 0; i < a.rows * a.cols; ++i) r.e[i] = f.sub(a.e[i], b.e[i]);
  return r;
}

Mat scale(const Gf& f, Fel c, const Mat& a) {
  Mat r = a;
  for (int i = 0; i < a.rows * a.cols; ++i) r.e[i] = f.mul(c, a.e[i]);
  return r;
}

Mat matmul(const Gf& f, const Mat& a, const Mat& b) {
  Mat r = Mat::zero(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      Fel aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return r;
}

Mat transpose(const Mat& a) {
  Mat r = Mat::zero(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
  return r;
}

Vec apply(const Gf& f, const Vec& v, const Mat& m) {
  Vec r;
  r.n = m.cols;
  for (int j = 0; j < m.cols; ++j) {
    Fel s = 0;
    for (int i = 0; i < m.rows; ++i) s = f.add(s, f.mul(v.v[i], m.at(i, j)));
    r.v[j] = s;
  }
  return r;
}

int rref_in_place(const Gf& f, Mat& m) {
  int pr = 0;
  for (int pc = 0; pc < m.cols && pr < m.rows; ++pc) {
    int piv = -1;
    for (int r = pr; r < m.rows; ++r)
      if (m.at(r, pc) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != pr)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(pr, c));
    Fel il = f.inv(m.at(pr, pc));
    for (int c = pc; c < m.cols; ++c) m.at(pr, c) = f.mul(il, m.at(pr, c));
    for (int r = 0; r < m.rows; ++r) {
      if (r == pr) continue;
      Fel x = m.at(r, pc);
      if (x == 0) continue;
      for (int c = pc; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(x, m.at(pr, c)));
    }
    ++pr;
  }
  return pr;
}

int rank(const Gf& f, Mat m) {
  int pr = 0;
  for (int pc = 0; pc < m.cols && pr < m.rows; ++pc) {
    int piv = -1;
    for (int r = pr; r < m.rows; ++r)
      if (m.at(r, pc) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != pr)
      for (int c = pc; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(pr, c));
    Fel il = f.inv(m.at(pr, pc));
    for (int r = pr + 1; r < m.rows; ++r) {
      Fel x = m.at(r, pc);
      if (x == 0) continue;
      Fel mult = f.mul(x, il);
      for (int c = pc; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(mult, m.at(pr, c)));
    }
    ++pr;
  }
  return pr;
}

bool is_invertible(const Gf& f, const Mat& m) {
  return m.rows == m.cols && rank(f, m) == m.rows;
}

Mat inverse(const Gf& f, const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
  int n = m.rows;
  Mat aug = Mat::zero(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  rref_in_place(f, aug);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (aug.at(i, j) != (i == j ? 1 : 0))
        throw std::invalid_argument("inverse: singular matrix");
  Mat r = Mat::zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

Fel det(const Gf& f, const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: not square");
  switch (m.rows) {
    case 0: return 1;
    case 1: return m.at(0, 0);
    case 2:
      return f.sub(f.mul(m.at(0, 0), m.at(1, 1)), f.mul(m.at(0, 1), m.at(1, 0)));
    case 3: {
      Fel s = 0;
      s = f.add(s, f.mul(m.at(0, 0), f.sub(f.mul(m.at(1, 1), m.at(2, 2)), f.mul(m.at(1, 2), m.at(2, 1)))));
      s = f.sub(s, f.mul(m.at(0, 1), f.sub(f.mul(m.at(1, 0), m.at(2, 2)), f.mul(m.at(1, 2), m.at(2, 0)))));
      s = f.add(s, f.mul(m.at(0, 2), f.sub(f.mul(m.at(1, 0), m.at(2, 1)), f.mul(m.at(1, 1), m.at(2, 0)))));
      return s;
    }
    default: throw std::invalid_argument("det: only n <= 3");
  }
}

Subspace::Subspace(const Gf& f, const Mat& spanning) : ambient_(spanning.cols) {
  Mat m = spanning;
  int r = rref_in_place(f, m);
  basis_ = Mat::zero(r, spanning.cols);
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < spanning.cols; ++c) basis_.at(i, c) = m.at(i, c);
}

bool Subspace::contains(const Gf& f, const Vec& v) const {
  // reduce v against the echelon basis and test for a zero remainder
  Vec w = v;
  for (int i = 0; i < basis_.rows; ++i) {
    int lead = 0;
    while (lead < ambient_ && basis_.at(i, lead) == 0) ++lead;
    if (lead >= ambient_) continue;
    Fel x = w.v[lead];
    if (x == 0) continue;
    for (int c = lead; c < ambient_; ++c)
      w.v[c] = f.sub(w.v[c], f.mul(x, basis_.at(i, c)));
  }
  for (int c = 0; c < ambient_; ++c)
    if (w.v[c] != 0) return false;
  return true;
}

bool Subspace::contains(const Gf& f, const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (int i = 0; i < other.basis_.rows; ++i)
    if (!contains(f, row_of(other.basis_, i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace sum(const Gf& f, const Subspace& a, const Subspace& b) {
  Mat m = Mat::zero(a.dim() + b.dim(), a.ambient());
  for (int i = 0; i < a.dim(); ++i)
    for (int c = 0; c < a.ambient(); ++c) m.at(i, c) = a.basis().at(i, c);
  for (int i = 0; i < b.dim(); ++i)
    for (int c = 0; c < b.ambient(); ++c) m.at(a.dim() + i, c) = b.basis().at(i, c);
  return Subspace(f, m);
}

Subspace row_space(const Gf& f, const Mat& m) { return Subspace(f, m); }
Subspace col_space(const Gf& f, const Mat& m) { return Subspace(f, transpose(m)); }

Poly poly_from(std::initializer_list<int> coeffs_low_first) {
  Poly p;
  for (int c : coeffs_low_first) p.c.push_back(Fel(c));
  return poly_trim(std::move(p));
}

Poly poly_trim(Poly p) {
  while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
  return p;
}

Poly poly_add(const Gf& f, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.add(a.coeff(int(i)), b.coeff(int(i)));
  return poly_trim(std::move(r));
}

Poly poly_sub(const Gf& f, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.sub(a.coeff(int(i)), b.coeff(int(i)));
  return poly_trim(std::move(r));
}

Poly poly_mul(const Gf& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
  }
  return poly_trim(std::move(r));
}

Poly poly_scale(const Gf& f, Fel c, const Poly& a) {
  Poly r = a;
  for (auto& x : r.c) x = f.mul(c, x);
  return poly_trim(std::move(r));
}

Fel poly_eval(const Gf& f, const Poly& p, Fel x) {
  Fel r = 0;
  for (size_t i = p.c.size(); i-- > 0;) r = f.add(f.mul(r, x), p.c[i]);
  return r;
}

Poly poly_monic(const Gf& f, Poly p) {
  if (p.is_zero()) throw std::invalid_argument("poly_monic: zero polynomial");
  return poly_scale(f, f.inv(p.c.back()), std::move(p));
}

Poly poly_deflate(const Gf& f, const Poly& p, Fel root) {
  if (poly_eval(f, p, root) != 0) throw std::invalid_argument("poly_deflate: not a root");
  // synthetic division by (t - root)
  Poly q;
  q.c.assign(p.c.size() - 1, 0);
  Fel carry = 0;
  for (size_t i = p.c.size(); i-- > 1;) {
    carry = f.add(p.c[i], f.mul(root, carry));
    q.c[i - 1] = carry;
  }
  return poly_trim(std::move(q));
}

bool poly_has_root(const Gf& f, const Poly& p) {
  for (Fel x : f.elements())
    if (poly_eval(f, p, x) == 0) return true;
  return false;
}

bool poly_irreducible(const Gf& f, const Poly& p) {
  int d = p.degree();
  if (d < 1 || d > 3) throw std::invalid_argument("poly_irreducible: degree must be 1..3");
  if (d == 1) return true;
  return !poly_has_root(f, p);
}

std::string poly_string(const Gf& f, const Poly& p) {
  (void)f;
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    int c = p.coeff(i);
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c);
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

Poly charpoly(const Gf& f, const Mat& m) {
  if (m.rows != 3 || m.cols != 3) throw std::invalid_argument("charpoly: 3x3 only");
  Fel tr = f.add(f.add(m.at(0, 0), m.at(1, 1)), m.at(2, 2));
  auto minor2 = [&](int r1, int c1, int r2, int c2) {
    return f.sub(f.mul(m.at(r1, c1), m.at(r2, c2)), f.mul(m.at(r1, c2), m.at(r2, c1)));
  };
  Fel m2 = f.add(f.add(minor2(0, 0, 1, 1), minor2(0, 0, 2, 2)), minor2(1, 1, 2, 2));
  Fel d = det(f, m);
  Poly p;
  p.c = {f.neg(d), m2, f.neg(tr), 1};
  return p;  // monic by construction, no trim needed
}

Mat companion(const Gf& f, const Poly& p) {
  int n = p.degree();
  if (n < 1 || n > 9) throw std::invalid_argument("companion: degree out of range");
  if (p.c.back() != 1) throw std::invalid_argument("companion: polynomial must be monic");
  Mat c = Mat::zero(n, n);
  for (int i = 1; i < n; ++i) c.at(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c.at(i, n - 1) = f.neg(p.c[i]);
  return c;
}

bool similar_irreducible(const Gf& f, const Mat& a, const Mat& b) {
  Poly pa = charpoly(f, a), pb = charpoly(f, b);
  if (!poly_irreducible(f, pa) || !poly_irreducible(f, pb))
    throw std::invalid_argument("similar_irreducible: reducible characteristic polynomial");
  return pa == pb;
}

}  // namespace segre233
