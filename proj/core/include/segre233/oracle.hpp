#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include <segre233/classify.hpp>

namespace segre233 {

// ---- group generators ------------------------------------------------

// Transvection, primitive diagonal (omitted for q = 2) and full cycle;
// together they generate GL(n, q).
std::vector<Mat> gl_generators(const Gf& f, int n);
std::uint64_t gl_order(int q, int n);
// Closure of the generated matrix group by breadth-first search (q <= 9,
// n <= 3; test support).
std::uint64_t generated_matrix_group_order(const Gf& f, const std::vector<Mat>& gens);

// Generators of GL2 x GL3 x GL3 embedded factor by factor; with_swap
// appends the pure factor-swap element.
std::vector<GroupElementH> h_generators(const Gf& f, bool with_swap = false);

std::uint64_t h_order(int q);         // |GL(2,q)| * |GL(3,q)|^2
// Order of the kernel of the action on tensors: the scalar triples
// (c1, c2, c3) with c1*c2*c3 = 1, so (q-1)^2. Orbit sizes divide
// h_order(q) / h_kernel_order(q).
std::uint64_t h_kernel_order(int q);

// ---- randomness (test support) ----------------------------------------

Mat random_matrix(const Gf& f, int rows, int cols, std::mt19937_64& rng);
Mat random_invertible(const Gf& f, int n, std::mt19937_64& rng);
GroupElementH random_h_element(const Gf& f, std::mt19937_64& rng);
Tensor233 random_tensor(const Gf& f, std::mt19937_64& rng);

// ---- orbit enumeration -------------------------------------------------

// Memory budget for visited-set allocations, from TOK_MEMORY_CAP_MB when
// set, otherwise 2048 MB. Enumeration throws std::runtime_error instead of
// allocating past the budget.
std::size_t oracle_memory_cap_bytes();

struct OrbitRecord {
  std::uint64_t representative = 0;  // packed seed
  std::uint64_t size = 0;
  OrbitLabel seed_label = OrbitLabel::o0;
};

// Breadth-first closure of a seed under the given group elements, over the
// packed code space. Exhaustive-space guarantees hold for q in {2, 3}
// (dense visited bitmap); for 4 <= q <= 9 a hash set is used instead and
// only comfortably small orbits are feasible.
OrbitRecord orbit_bfs(const Gf& f, const Tensor233& seed,
                      const std::vector<GroupElementH>& gens,
                      std::size_t memory_cap_bytes = 0);

// As above but materializes the packed orbit members (ascending order).
// Throws std::runtime_error if the orbit exceeds max_elements.
std::vector<std::uint64_t> orbit_elements(const Gf& f, const Tensor233& seed,
                                          const std::vector<GroupElementH>& gens,
                                          std::size_t max_elements);

// ---- exhaustive census ---------------------------------------------------

struct CensusResult {
  std::array<std::uint64_t, kNumLabels> h_counts{};
  std::uint64_t total = 0;

  int h_labels_present() const;
  std::array<std::uint64_t, kNumLabels> g_counts() const;  // indexed by projected label
  int g_labels_present() const;
};

// Classifies every one of the q^18 tensors (q in {2, 3}; anything larger is
// rejected). threads > 1 shards the code range.
CensusResult full_census(const Gf& f, int threads = 1);

// Same for the 2x2x3 space (q^12 tensors, q <= 5), counting fine labels;
// g_counts_223 applies the o2/o4 fusion.
struct Census223Result {
  std::array<std::uint64_t, kNumLabels> h_counts{};
  std::uint64_t total = 0;
  int h_labels_present() const;
  std::array<std::uint64_t, kNumLabels> g_counts() const;
  int g_labels_present() const;
};
Census223Result full_census_223(const Gf& f, int threads = 1);

// ---- cross validation ----------------------------------------------------

using Classifier = std::function<OrbitLabel(const Gf&, const Tensor233&)>;

/* Independent check of the classifier against pure group theory at q = 2:
 * floods the whole 2^18 space by BFS from the 21 canonical representatives
 * and verifies, against an exhaustive census with the same classifier, that
 *   - the 21 orbits are pairwise disjoint and cover the space,
 *   - every visited tensor classifies to its seed's label,
 *   - BFS orbit sizes equal the census counts,
 *   - every orbit size divides h_order / h_kernel_order,
 *   - BFS with the swap generator added produces exactly the predicted
 *     unions of transpose pairs.
 * A non-default classifier can be injected to prove the harness actually
 * detects corruption. */
struct CrossCheckReport {
  bool ok = false;
  bool disjoint = true, covers = true, homogeneous = true;
  bool sizes_match = true, divisibility = true, g_orbits_match = true;
  std::array<std::uint64_t, kNumLabels> census_counts{};
  std::array<std::uint64_t, kNumLabels> bfs_sizes{};
  std::vector<std::string> problems;
};
CrossCheckReport census_matches_bfs(const Gf& f, const Classifier& classifier = {});

/* 2x2x3 analogue at q = 2: BFS partition of the 4096-element space under
 * GL2 x GL2 x GL3, and again with the factor-1/factor-2 swap added, checked
 * against classify_223 labels: 10 fine orbits, 9 after the swap, the only
 * fusion being o2 with o4. */
struct CrossCheck223Report {
  bool ok = false;
  int h_orbits = 0, g_orbits = 0;
  std::vector<std::string> problems;
};
CrossCheck223Report cross_check_223(const Gf& f);

/* Orbit equivalence transfers to the first contraction space: two tensors
 * lie in the same GL2 x GL3 x GL3 orbit exactly when their first
 * contraction spaces lie in the same GL3 x GL3 orbit (dimension, generator
 * rank, or subspace orbit, as applicable). Verified at q = 2 on sampled
 * pairs, half of them same-orbit by construction; both orbit partitions are
 * computed by independent BFS runs (tensor space vs 2-subspaces of the
 * 9-dimensional matrix space). */
struct LemmaCheckReport {
  bool ok = false;
  int pairs = 0;
  std::vector<std::string> problems;
};
LemmaCheckReport contraction_equivalence_check(const Gf& f, int pairs, std::uint64_t seed);

}  // namespace segre233
