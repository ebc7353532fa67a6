#include <segre233/classify.hpp>

#include <stdexcept>

namespace segre233 {

namespace {

Mat unflatten3x3(const Mat& basis, int row) {
  Mat m = Mat::zero(3, 3);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) m.at(j, k) = basis.at(row, 3 * j + k);
  return m;
}

Tensor233 from_entries(std::initializer_list<std::array<int, 3>> ones) {
  Tensor233 t;
  for (auto [i, j, k] : ones) t.a[idx233(i, j, k)] = 1;
  return t;
}

// first (u, v) in ascending u + q*v order such that l^2 - uv*l - v has no
// root; that is exactly the condition making the two-parameter pencils of
// the o10 and o15 families constant rank where required
std::pair<Fel, Fel> first_anisotropic_pair(const Gf& f) {
  int q = f.q();
  for (int e = 0; e < q * q; ++e) {
    Fel u = Fel(e % q), v = Fel(e / q);
    Poly quad{{f.neg(v), f.neg(f.mul(u, v)), 1}};
    if (!poly_has_root(f, quad)) return {u, v};
  }
  throw std::logic_error("no anisotropic parameter pair exists");
}

// first (alpha, beta, gamma) in ascending alpha + q*beta + q^2*gamma order
// whose cyclic-shift slice [[0,1,0],[0,0,1],[a,b,g]] has a rootless
// characteristic polynomial
std::array<Fel, 3> first_rootless_triple(const Gf& f) {
  int q = f.q();
  for (int e = 0; e < q * q * q; ++e) {
    Fel a = Fel(e % q), b = Fel((e / q) % q), g = Fel((e / q / q) % q);
    Mat m = Mat::zero(3, 3);
    m.at(0, 1) = 1;
    m.at(1, 2) = 1;
    m.at(2, 0) = a;
    m.at(2, 1) = b;
    m.at(2, 2) = g;
    if (!poly_has_root(f, charpoly(f, m))) return {a, b, g};
  }
  throw std::logic_error("no rootless characteristic polynomial exists");
}

}  // namespace

const std::array<OrbitLabel, kNumLabels>& all_labels() {
  static const std::array<OrbitLabel, kNumLabels> v = {
      OrbitLabel::o0,  OrbitLabel::o1,  OrbitLabel::o2,  OrbitLabel::o3,
      OrbitLabel::o4,  OrbitLabel::o4T, OrbitLabel::o5,  OrbitLabel::o6,
      OrbitLabel::o7,  OrbitLabel::o7T, OrbitLabel::o8,  OrbitLabel::o9,
      OrbitLabel::o10, OrbitLabel::o11, OrbitLabel::o11T, OrbitLabel::o12,
      OrbitLabel::o13, OrbitLabel::o14, OrbitLabel::o15, OrbitLabel::o16,
      OrbitLabel::o17,
  };
  return v;
}

const char* to_string(OrbitLabel l) {
  switch (l) {
    case OrbitLabel::o0: return "o0";
    case OrbitLabel::o1: return "o1";
    case OrbitLabel::o2: return "o2";
    case OrbitLabel::o3: return "o3";
    case OrbitLabel::o4: return "o4";
    case OrbitLabel::o4T: return "o4T";
    case OrbitLabel::o5: return "o5";
    case OrbitLabel::o6: return "o6";
    case OrbitLabel::o7: return "o7";
    case OrbitLabel::o7T: return "o7T";
    case OrbitLabel::o8: return "o8";
    case OrbitLabel::o9: return "o9";
    case OrbitLabel::o10: return "o10";
    case OrbitLabel::o11: return "o11";
    case OrbitLabel::o11T: return "o11T";
    case OrbitLabel::o12: return "o12";
    case OrbitLabel::o13: return "o13";
    case OrbitLabel::o14: return "o14";
    case OrbitLabel::o15: return "o15";
    case OrbitLabel::o16: return "o16";
    case OrbitLabel::o17: return "o17";
  }
  return "?";
}

std::optional<OrbitLabel> label_from_string(std::string_view s) {
  for (OrbitLabel l : all_labels())
    if (s == to_string(l)) return l;
  return std::nullopt;
}

OrbitLabel g_projection(OrbitLabel l) {
  switch (l) {
    case OrbitLabel::o4T: return OrbitLabel::o4;
    case OrbitLabel::o7T: return OrbitLabel::o7;
    case OrbitLabel::o11T: return OrbitLabel::o11;
    default: return l;
  }
}

OrbitLabel transpose_partner(OrbitLabel l) {
  switch (l) {
    case OrbitLabel::o4: return OrbitLabel::o4T;
    case OrbitLabel::o4T: return OrbitLabel::o4;
    case OrbitLabel::o7: return OrbitLabel::o7T;
    case OrbitLabel::o7T: return OrbitLabel::o7;
    case OrbitLabel::o11: return OrbitLabel::o11T;
    case OrbitLabel::o11T: return OrbitLabel::o11;
    default: return l;
  }
}

std::optional<int> nurmiev_label(OrbitLabel l) {
  switch (g_projection(l)) {
    case OrbitLabel::o0: return 25;
    case OrbitLabel::o1: return 24;
    case OrbitLabel::o2: return 23;
    case OrbitLabel::o3: return 22;
    case OrbitLabel::o4: return 23;
    case OrbitLabel::o5: return 20;
    case OrbitLabel::o6: return 21;
    case OrbitLabel::o7: return 19;
    case OrbitLabel::o8: return 15;
    case OrbitLabel::o9: return 16;
    case OrbitLabel::o11: return 18;
    case OrbitLabel::o12: return 17;
    case OrbitLabel::o13: return 12;
    case OrbitLabel::o14: return 9;
    case OrbitLabel::o16: return 13;
    default: return std::nullopt;  // o10, o15, o17
  }
}

RankDistribution expected_rank_distribution(OrbitLabel l, int q) {
  switch (l) {
    case OrbitLabel::o0: return {0, 0, 0};
    case OrbitLabel::o1: return {1, 0, 0};
    case OrbitLabel::o2: return {0, 1, 0};
    case OrbitLabel::o3: return {0, 0, 1};
    case OrbitLabel::o4:
    case OrbitLabel::o4T: return {q + 1, 0, 0};
    case OrbitLabel::o5: return {2, q - 1, 0};
    case OrbitLabel::o6:
    case OrbitLabel::o7:
    case OrbitLabel::o7T: return {1, q, 0};
    case OrbitLabel::o8: return {1, 1, q - 1};
    case OrbitLabel::o9: return {1, 0, q};
    case OrbitLabel::o10:
    case OrbitLabel::o11:
    case OrbitLabel::o11T:
    case OrbitLabel::o12: return {0, q + 1, 0};
    case OrbitLabel::o13: return {0, 2, q - 1};
    case OrbitLabel::o14: return {0, 3, q - 2};
    case OrbitLabel::o15:
    case OrbitLabel::o16: return {0, 1, q};
    case OrbitLabel::o17: return {0, 0, q + 1};
  }
  throw std::logic_error("expected_rank_distribution: bad label");
}

Classification classify(const Gf& f, const Tensor233& t, bool full) {
  Classification out;
  InvariantSignature& sig = out.sig;

  ContractionSpace a1 = contraction(f, t, 1);
  sig.dim_a1 = a1.span.dim();
  if (full) {
    sig.dim_a2 = contraction(f, t, 2).span.dim();
    sig.dim_a3 = contraction(f, t, 3).span.dim();
  }

  if (sig.dim_a1 == 0) {
    out.h = OrbitLabel::o0;
    out.g = OrbitLabel::o0;
    return out;
  }

  if (sig.dim_a1 == 1) {
    switch (rank(f, unflatten3x3(a1.span.basis(), 0))) {
      case 1: out.h = OrbitLabel::o1; sig.rd = {1, 0, 0}; break;
      case 2: out.h = OrbitLabel::o2; sig.rd = {0, 1, 0}; break;
      case 3: out.h = OrbitLabel::o3; sig.rd = {0, 0, 1}; break;
      default: throw std::logic_error("classify: zero generator of a 1-dim space");
    }
    out.g = g_projection(out.h);
    return out;
  }

  Mat b1 = unflatten3x3(a1.span.basis(), 0);
  Mat b2 = unflatten3x3(a1.span.basis(), 1);
  std::vector<Mat> points = pencil_points(f, b1, b2);
  Mat rank1, rank2_first;
  bool have_rank2 = false;
  for (const Mat& p : points) {
    switch (rank(f, p)) {
      case 1: ++sig.rd.r1; rank1 = p; break;
      case 2:
        ++sig.rd.r2;
        if (!have_rank2) { rank2_first = p; have_rank2 = true; }
        break;
      case 3: ++sig.rd.r3; break;
      default: throw std::logic_error("classify: zero point in a 2-dim pencil");
    }
  }

  if (full) sig.det_type = factor_type(f, det_form(f, b1, b2));

  int q = f.q();
  if (sig.rd.r1 == q + 1) {
    Subspace colsum = sum(f, col_space(f, b1), col_space(f, b2));
    if (colsum.dim() == 1) {
      out.h = OrbitLabel::o4;
    } else {
      Subspace rowsum = sum(f, row_space(f, b1), row_space(f, b2));
      if (rowsum.dim() != 1)
        throw std::logic_error("classify: rank-1 pencil without a shared line");
      out.h = OrbitLabel::o4T;
    }
  } else if (sig.rd.r1 == 2) {
    out.h = OrbitLabel::o5;
  } else if (sig.rd.r1 == 1 && sig.rd.r2 >= 1) {
    QMembership m = in_q(f, rank1, rank2_first);
    sig.q_case = m;
    switch (m) {
      case QMembership::inside: out.h = OrbitLabel::o6; break;
      case QMembership::col_only: out.h = OrbitLabel::o7; break;
      case QMembership::row_only: out.h = OrbitLabel::o7T; break;
      case QMembership::outside: out.h = OrbitLabel::o8; break;
    }
  } else if (sig.rd.r1 == 1) {
    out.h = OrbitLabel::o9;
  } else {
    if (!sig.det_type) sig.det_type = factor_type(f, det_form(f, b1, b2));
    switch (*sig.det_type) {
      case FactorType::zero: {
        if (sig.dim_a2 < 0) sig.dim_a2 = contraction(f, t, 2).span.dim();
        if (sig.dim_a3 < 0) sig.dim_a3 = contraction(f, t, 3).span.dim();
        if (sig.dim_a2 == 2 && sig.dim_a3 == 2) out.h = OrbitLabel::o10;
        else if (sig.dim_a2 == 2 && sig.dim_a3 == 3) out.h = OrbitLabel::o11;
        else if (sig.dim_a2 == 3 && sig.dim_a3 == 2) out.h = OrbitLabel::o11T;
        else if (sig.dim_a2 == 3 && sig.dim_a3 == 3) out.h = OrbitLabel::o12;
        else throw std::logic_error("classify: impossible contraction dimensions");
        break;
      }
      case FactorType::double_linear: out.h = OrbitLabel::o13; break;
      case FactorType::three_distinct_linear: out.h = OrbitLabel::o14; break;
      case FactorType::linear_irreducible_quadratic: out.h = OrbitLabel::o15; break;
      case FactorType::triple_linear: out.h = OrbitLabel::o16; break;
      case FactorType::irreducible_cubic: out.h = OrbitLabel::o17; break;
    }
  }
  out.g = g_projection(out.h);
  return out;
}

OrbitLabel classify_h(const Gf& f, const Tensor233& t) { return classify(f, t, false).h; }

OrbitLabel classify_g(const Gf& f, const Tensor233& t) {
  return g_projection(classify_h(f, t));
}

Tensor233 canonical_form(const Gf& f, OrbitLabel l) {
  switch (l) {
    case OrbitLabel::o0: return Tensor233{};
    case OrbitLabel::o1: return from_entries({{{1, 1, 1}}});
    case OrbitLabel::o2: return from_entries({{{1, 1, 1}}, {{1, 2, 2}}});
    case OrbitLabel::o3: return from_entries({{{1, 1, 1}}, {{1, 2, 2}}, {{1, 3, 3}}});
    case OrbitLabel::o4: return from_entries({{{1, 1, 1}}, {{2, 1, 2}}});
    case OrbitLabel::o4T: return from_entries({{{1, 1, 1}}, {{2, 2, 1}}});
    case OrbitLabel::o5: return from_entries({{{1, 1, 1}}, {{2, 2, 2}}});
    case OrbitLabel::o6: return from_entries({{{1, 1, 1}}, {{2, 1, 2}}, {{2, 2, 1}}});
    case OrbitLabel::o7: return from_entries({{{1, 1, 3}}, {{2, 1, 1}}, {{2, 2, 2}}});
    case OrbitLabel::o7T: return from_entries({{{1, 3, 1}}, {{2, 1, 1}}, {{2, 2, 2}}});
    case OrbitLabel::o8: return from_entries({{{1, 1, 1}}, {{2, 2, 2}}, {{2, 3, 3}}});
    case OrbitLabel::o9:
      return from_entries({{{1, 3, 1}}, {{2, 1, 1}}, {{2, 2, 2}}, {{2, 3, 3}}});
    case OrbitLabel::o10: {
      auto [u, v] = first_anisotropic_pair(f);
      Tensor233 t = from_entries({{{1, 1, 1}}, {{1, 2, 2}}, {{2, 1, 2}}});
      t.a[idx233(1, 1, 2)] = u;
      t.a[idx233(2, 2, 1)] = v;
      return t;
    }
    case OrbitLabel::o11:
      return from_entries({{{1, 1, 1}}, {{1, 2, 2}}, {{2, 1, 2}}, {{2, 2, 3}}});
    case OrbitLabel::o11T:
      return from_entries({{{1, 1, 1}}, {{1, 2, 2}}, {{2, 2, 1}}, {{2, 3, 2}}});
    case OrbitLabel::o12:
      return from_entries({{{1, 1, 1}}, {{1, 2, 2}}, {{2, 1, 3}}, {{2, 3, 2}}});
    case OrbitLabel::o13:
      return from_entries({{{1, 1, 1}}, {{1, 2, 2}}, {{2, 1, 2}}, {{2, 3, 3}}});
    case OrbitLabel::o14:
      return from_entries({{{1, 1, 1}}, {{1, 2, 2}}, {{2, 2, 2}}, {{2, 3, 3}}});
    case OrbitLabel::o15: {
      auto [u, v] = first_anisotropic_pair(f);
      Tensor233 t =
          from_entries({{{1, 1, 1}}, {{1, 2, 2}}, {{1, 3, 3}}, {{2, 1, 2}}});
      t.a[idx233(1, 1, 2)] = u;
      t.a[idx233(2, 2, 1)] = v;
      return t;
    }
    case OrbitLabel::o16:
      return from_entries({{{1, 1, 1}}, {{1, 2, 2}}, {{1, 3, 3}}, {{2, 1, 2}}, {{2, 2, 3}}});
    case OrbitLabel::o17: {
      auto [al, be, ga] = first_rootless_triple(f);
      Tensor233 t = from_entries(
          {{{1, 1, 1}}, {{1, 2, 2}}, {{1, 3, 3}}, {{2, 1, 2}}, {{2, 2, 3}}});
      t.a[idx233(2, 3, 1)] = al;
      t.a[idx233(2, 3, 2)] = be;
      t.a[idx233(2, 3, 3)] = ga;
      return t;
    }
  }
  throw std::logic_error("canonical_form: bad label");
}

std::pair<OrbitLabel, OrbitLabel> classify_223(const Gf& f, const Tensor223& t) {
  OrbitLabel fine = classify_h(f, embed_223(t));
  return {fine, g_projection_223(fine)};
}

const std::array<OrbitLabel, 10>& labels_223() {
  static const std::array<OrbitLabel, 10> v = {
      OrbitLabel::o0, OrbitLabel::o1, OrbitLabel::o2,  OrbitLabel::o4, OrbitLabel::o4T,
      OrbitLabel::o5, OrbitLabel::o6, OrbitLabel::o7,  OrbitLabel::o10, OrbitLabel::o11,
  };
  return v;
}

OrbitLabel g_projection_223(OrbitLabel l) {
  return l == OrbitLabel::o4 ? OrbitLabel::o2 : l;
}

}  // namespace segre233
