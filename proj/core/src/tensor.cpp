#include <segre233/tensor.hpp>

#include <sstream>
#include <stdexcept>

namespace segre233 {

namespace {

Mat unflatten3x3(const Mat& basis, int row) {
  Mat m = Mat::zero(3, 3);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) m.at(j, k) = basis.at(row, 3 * j + k);
  return m;
}

}  // namespace

ContractionSpace contraction(const Gf& f, const Tensor233& t, int axis) {
  ContractionSpace cs;
  int count = 0, rows = 0, cols = 0;
  switch (axis) {
    case 1: count = 2; rows = 3; cols = 3; break;
    case 2: count = 3; rows = 2; cols = 3; break;
    case 3: count = 3; rows = 2; cols = 3; break;
    default: throw std::invalid_argument("contraction: axis must be 1, 2 or 3");
  }
  Mat flat = Mat::zero(count, rows * cols);
  for (int s = 0; s < count; ++s) {
    Mat m = Mat::zero(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        Fel v = 0;
        switch (axis) {
          case 1: v = t.a[idx233(s + 1, r + 1, c + 1)]; break;
          case 2: v = t.a[idx233(r + 1, s + 1, c + 1)]; break;
          case 3: v = t.a[idx233(r + 1, c + 1, s + 1)]; break;
        }
        m.at(r, c) = v;
        flat.at(s, r * cols + c) = v;
      }
    cs.spanning.push_back(m);
  }
  cs.span = Subspace(f, flat);
  return cs;
}

std::vector<Mat> pencil_points(const Gf& f, const Mat& b1, const Mat& b2) {
  std::vector<Mat> pts;
  pts.reserve(f.q() + 1);
  for (Fel lambda : f.elements()) pts.push_back(add(f, b1, scale(f, lambda, b2)));
  pts.push_back(b2);
  return pts;
}

RankDistribution rank_distribution(const Gf& f, const Tensor233& t) {
  RankDistribution rd;
  ContractionSpace a1 = contraction(f, t, 1);
  auto tally = [&](const Mat& m) {
    switch (rank(f, m)) {
      case 1: ++rd.r1; break;
      case 2: ++rd.r2; break;
      case 3: ++rd.r3; break;
      default: break;
    }
  };
  if (a1.span.dim() == 1) {
    tally(unflatten3x3(a1.span.basis(), 0));
  } else if (a1.span.dim() == 2) {
    Mat b1 = unflatten3x3(a1.span.basis(), 0);
    Mat b2 = unflatten3x3(a1.span.basis(), 1);
    for (const Mat& p : pencil_points(f, b1, b2)) tally(p);
  }
  return rd;
}

Tensor233 transpose23(const Tensor233& t) {
  Tensor233 r;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) r.a[idx233(i, j, k)] = t.a[idx233(i, k, j)];
  return r;
}

Tensor233 act(const Gf& f, const Tensor233& t, const GroupElementH& g) {
  Tensor233 s = g.transpose_flag ? transpose23(t) : t;
  // contract one axis at a time; with b_{lmn} = sum a_{ijk} g1[i][l] g2[j][m]
  // g3[k][n] this is three passes of a small matrix product
  Tensor233 u{};
  for (int l = 0; l < 2; ++l)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Fel v = 0;
        for (int i = 0; i < 2; ++i)
          v = f.add(v, f.mul(s.a[9 * i + 3 * j + k], g.g1.at(i, l)));
        u.a[9 * l + 3 * j + k] = v;
      }
  Tensor233 w{};
  for (int l = 0; l < 2; ++l)
    for (int m = 0; m < 3; ++m)
      for (int k = 0; k < 3; ++k) {
        Fel v = 0;
        for (int j = 0; j < 3; ++j)
          v = f.add(v, f.mul(u.a[9 * l + 3 * j + k], g.g2.at(j, m)));
        w.a[9 * l + 3 * m + k] = v;
      }
  Tensor233 r{};
  for (int l = 0; l < 2; ++l)
    for (int m = 0; m < 3; ++m)
      for (int n = 0; n < 3; ++n) {
        Fel v = 0;
        for (int k = 0; k < 3; ++k)
          v = f.add(v, f.mul(w.a[9 * l + 3 * m + k], g.g3.at(k, n)));
        r.a[9 * l + 3 * m + n] = v;
      }
  return r;
}

std::pair<Subspace, Subspace> q_of(const Gf& f, const Mat& m) {
  if (rank(f, m) != 2) throw std::invalid_argument("q_of: matrix must have rank 2");
  return {col_space(f, m), row_space(f, m)};
}

const char* to_string(QMembership m) {
  switch (m) {
    case QMembership::inside: return "inside";
    case QMembership::col_only: return "col_only";
    case QMembership::row_only: return "row_only";
    case QMembership::outside: return "outside";
  }
  return "?";
}

QMembership in_q(const Gf& f, const Mat& n, const Mat& m) {
  if (rank(f, n) != 1) throw std::invalid_argument("in_q: first matrix must have rank 1");
  auto [cs, rs] = q_of(f, m);
  bool col = cs.contains(f, col_space(f, n));
  bool row = rs.contains(f, row_space(f, n));
  if (col && row) return QMembership::inside;
  if (col) return QMembership::col_only;
  if (row) return QMembership::row_only;
  return QMembership::outside;
}

Tensor233 embed_223(const Tensor223& t) {
  Tensor233 r;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 3; ++k) r.a[idx233(i, j, k)] = t.a[idx223(i, j, k)];
  return r;
}

namespace {

template <std::size_t N>
std::uint64_t pack_digits(const Gf& f, const std::array<Fel, N>& a) {
  if (f.q() > 9) throw std::invalid_argument("pack: only supported for q <= 9");
  std::uint64_t code = 0;
  for (std::size_t i = N; i-- > 0;) code = code * f.q() + a[i];
  return code;
}

template <std::size_t N>
std::array<Fel, N> unpack_digits(const Gf& f, std::uint64_t code) {
  if (f.q() > 9) throw std::invalid_argument("unpack: only supported for q <= 9");
  std::array<Fel, N> a{};
  for (std::size_t i = 0; i < N; ++i) {
    a[i] = Fel(code % f.q());
    code /= f.q();
  }
  if (code != 0) throw std::invalid_argument("unpack: code out of range");
  return a;
}

template <std::size_t N>
std::string digits_to_line(const Gf& f, const std::array<Fel, N>& a) {
  std::ostringstream os;
  os << "q=" << f.q() << "; a=";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) os << ',';
    os << int(a[i]);
  }
  return os.str();
}

}  // namespace

std::uint64_t pack(const Gf& f, const Tensor233& t) { return pack_digits(f, t.a); }

Tensor233 unpack(const Gf& f, std::uint64_t code) {
  return Tensor233{unpack_digits<18>(f, code)};
}

std::uint64_t pack223(const Gf& f, const Tensor223& t) { return pack_digits(f, t.a); }

Tensor223 unpack223(const Gf& f, std::uint64_t code) {
  return Tensor223{unpack_digits<12>(f, code)};
}

std::string to_line(const Gf& f, const Tensor233& t) { return digits_to_line(f, t.a); }

std::string to_line223(const Gf& f, const Tensor223& t) { return digits_to_line(f, t.a); }

ParsedLine parse_line(const std::string& line) {
  auto fail = [](const std::string& why) {
    throw std::invalid_argument("bad tensor line: " + why);
  };
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  };
  auto expect = [&](const std::string& tok) {
    if (line.compare(pos, tok.size(), tok) != 0) fail("expected '" + tok + "'");
    pos += tok.size();
  };
  auto read_int = [&] {
    std::size_t start = pos;
    while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') ++pos;
    if (pos == start) fail("expected an integer");
    return std::stoi(line.substr(start, pos - start));
  };

  ParsedLine p;
  skip_ws();
  expect("q=");
  p.q = read_int();
  skip_ws();
  expect(";");
  skip_ws();
  expect("a=");
  for (;;) {
    skip_ws();
    p.entries.push_back(read_int());
    skip_ws();
    if (pos >= line.size()) break;
    expect(",");
  }

  Gf f = Gf::from_order(p.q);  // rejects q that is not a prime power <= 256
  (void)f;
  if (p.entries.size() != 18 && p.entries.size() != 12)
    fail("expected 18 or 12 coefficients, got " + std::to_string(p.entries.size()));
  for (int e : p.entries)
    if (e < 0 || e >= p.q) fail("coefficient " + std::to_string(e) + " out of range for q");
  return p;
}

}  // namespace segre233
