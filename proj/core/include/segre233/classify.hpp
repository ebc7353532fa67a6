#pragma once

#include <optional>
#include <string_view>

#include <segre233/pencil.hpp>
#include <segre233/tensor.hpp>

namespace segre233 {

// The 21 orbit classes of 2x3x3 tensors under GL2 x GL3 x GL3, stable
// across all finite fields. oNT is the image of oN under the swap of the
// two cubic factors; merging each such pair gives the 18 classes of the
// group extended by that swap.
enum class OrbitLabel : std::uint8_t {
  o0, o1, o2, o3, o4, o4T, o5, o6, o7, o7T, o8, o9,
  o10, o11, o11T, o12, o13, o14, o15, o16, o17,
};

constexpr int kNumLabels = 21;
constexpr int kNumGLabels = 18;

const std::array<OrbitLabel, kNumLabels>& all_labels();
const char* to_string(OrbitLabel l);
std::optional<OrbitLabel> label_from_string(std::string_view s);

// o4T -> o4, o7T -> o7, o11T -> o11, identity elsewhere.
OrbitLabel g_projection(OrbitLabel l);
// The image of a class under the factor swap (an involution).
OrbitLabel transpose_partner(OrbitLabel l);

// External catalogue number of the matching complex 3x3x3 orbit closure,
// defined on swap-merged classes; absent for the three classes that have no
// counterpart there (o10, o15, o17).
std::optional<int> nurmiev_label(OrbitLabel l);

// The [r1, r2, r3] table row for a class as a function of q.
RankDistribution expected_rank_distribution(OrbitLabel l, int q);

// Everything the decision tree looked at. dim_a2/dim_a3 are -1 when the
// classification did not need them and a full signature was not requested.
struct InvariantSignature {
  int dim_a1 = 0, dim_a2 = -1, dim_a3 = -1;
  RankDistribution rd;
  std::optional<FactorType> det_type;      // set when dim_a1 == 2
  std::optional<QMembership> q_case;       // set on the [1,b>=1,*] branch
};

struct Classification {
  OrbitLabel h;
  OrbitLabel g;
  InvariantSignature sig;
};

// Total on all 18-coefficient inputs. With full = false only the fields the
// decision tree needs are computed, which is what the exhaustive census
// uses.
Classification classify(const Gf& f, const Tensor233& t, bool full = true);
OrbitLabel classify_h(const Gf& f, const Tensor233& t);
OrbitLabel classify_g(const Gf& f, const Tensor233& t);

// Canonical representative of a class over GF(q). The three parametrized
// families (o10, o15, o17) search their parameter tuples in ascending
// encoding order and take the first admissible hit, so the output is a
// deterministic function of (label, q).
Tensor233 canonical_form(const Gf& f, OrbitLabel l);

// Classes realized by 2x2x3 tensors via the zero-row embedding, as a pair
// (fine label, label under the group extended by the swap of the two
// 2-dimensional factors). That swap fuses o2 with o4 (reported as o2) and
// nothing else; the factor-2/factor-3 swap is not available in this format,
// so o4T stays separate.
std::pair<OrbitLabel, OrbitLabel> classify_223(const Gf& f, const Tensor223& t);

// The ten fine labels classify_223 can produce.
const std::array<OrbitLabel, 10>& labels_223();
OrbitLabel g_projection_223(OrbitLabel l);

}  // namespace segre233
