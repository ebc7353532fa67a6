#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <segre233/linalg.hpp>

namespace segre233 {

// Order-3 tensor of format 2x3x3 over GF(q). Coefficient a_{ijk} lives at
// index (i-1)*9 + (j-1)*3 + (k-1) for i in {1,2}, j,k in {1,2,3}; that is
// lexicographic (i,j,k) order. The field is passed alongside by the
// operations, keeping the tensor itself a plain 18-byte value.
struct Tensor233 {
  std::array<Fel, 18> a{};
  bool operator==(const Tensor233& o) const { return a == o.a; }
};

// Format 2x2x3, same layout with j restricted to {1,2}:
// index (i-1)*6 + (j-1)*3 + (k-1).
struct Tensor223 {
  std::array<Fel, 12> a{};
  bool operator==(const Tensor223& o) const { return a == o.a; }
};

constexpr int idx233(int i, int j, int k) { return (i - 1) * 9 + (j - 1) * 3 + (k - 1); }
constexpr int idx223(int i, int j, int k) { return (i - 1) * 6 + (j - 1) * 3 + (k - 1); }

// Number of points of PG(A_1) with matrix rank 1, 2, 3 respectively.
struct RankDistribution {
  int r1 = 0, r2 = 0, r3 = 0;
  bool operator==(const RankDistribution& o) const = default;
};

// A contraction space: the slice matrices along one axis plus their span.
//
// axis 1: two 3x3 matrices, rows indexed by j, columns by k, flattened
//         row-major into GF(q)^9 for the span.
// axis 2: three 2x3 matrices (rows i, columns k), ambient GF(q)^6.
// axis 3: three 2x3 matrices (rows i, columns j), ambient GF(q)^6.
struct ContractionSpace {
  std::vector<Mat> spanning;
  Subspace span;
};

ContractionSpace contraction(const Gf& f, const Tensor233& t, int axis);

// Canonical pencil through the echelon basis (b1, b2) of a 2-dimensional
// contraction space: b1 + lambda*b2 for each lambda in GF(q), then b2.
std::vector<Mat> pencil_points(const Gf& f, const Mat& b1, const Mat& b2);

RankDistribution rank_distribution(const Gf& f, const Tensor233& t);

// One element of the product group GL2 x GL3 x GL3, optionally preceded by
// the swap of the two cubic factors (axes 2 and 3).
struct GroupElementH {
  Mat g1, g2, g3;
  bool transpose_flag = false;
};

// Pointwise action on rank-one tensors extended linearly:
// b_{lmn} = sum_{ijk} a_{ijk} g1[i][l] g2[j][m] g3[k][n], with the axis swap
// applied first when transpose_flag is set. Acting twice composes on the
// right: act(act(t, u), v) == act(t, uv).
Tensor233 act(const Gf& f, const Tensor233& t, const GroupElementH& g);
Tensor233 transpose23(const Tensor233& t);

// Column space and row space of a rank-2 matrix, the pair that pins down
// the unique Segre quadric surface through the corresponding point.
// Throws std::invalid_argument unless rank(m) == 2.
std::pair<Subspace, Subspace> q_of(const Gf& f, const Mat& m);

// Position of a rank-1 point relative to the quadric of a rank-2 point:
// inside     both column and row space of n lie in those of m,
// col_only   only the column spaces nest,
// row_only   only the row spaces nest,
// outside    neither nests.
enum class QMembership { inside, col_only, row_only, outside };
const char* to_string(QMembership m);

// Throws std::invalid_argument unless rank(n) == 1 and rank(m) == 2.
QMembership in_q(const Gf& f, const Mat& n, const Mat& m);

// 2x2x3 tensors embed into 2x3x3 by extending the middle factor with a zero
// third row.
Tensor233 embed_223(const Tensor223& t);

// Base-q positional packing of the 18 coefficients, digit i = a[i], only
// supported for q <= 9 so the code fits 64 bits. Used as the orbit
// enumeration key.
std::uint64_t pack(const Gf& f, const Tensor233& t);
Tensor233 unpack(const Gf& f, std::uint64_t code);
std::uint64_t pack223(const Gf& f, const Tensor223& t);
Tensor223 unpack223(const Gf& f, std::uint64_t code);

// Text form "q=3; a=0,1,2,0,0,0,1,0,0,0,0,0,0,0,2,0,0,1" (18 entries for
// 2x3x3, 12 for 2x2x3). Lines starting with '#' are comments.
std::string to_line(const Gf& f, const Tensor233& t);
std::string to_line223(const Gf& f, const Tensor223& t);

struct ParsedLine {
  int q = 0;
  std::vector<int> entries;  // size 18 or 12
};
// Throws std::invalid_argument on malformed input.
ParsedLine parse_line(const std::string& line);

}  // namespace segre233
